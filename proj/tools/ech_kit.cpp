// ech-kit: command-line front end for the Legendrian ECH index calculus.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "echkit/asymptotic.hpp"
#include "echkit/complex.hpp"
#include "echkit/cz.hpp"
#include "echkit/index.hpp"
#include "echkit/partitions.hpp"
#include "echkit/verify.hpp"

using nlohmann::json;
using namespace echkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
}

json read_stdin_json() {
  std::stringstream ss;
  ss << std::cin.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON on stdin: ") + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

OrbitDescriptor orbit_from_request(const json& j) {
  OrbitDescriptor o;
  o.name = j.value("name", "orbit");
  std::string kind = j.at("orbit_kind").get<std::string>();
  if (kind == "elliptic") {
    o.kind = OrbitKind::elliptic;
    o.theta = rational_from_json(j.at("theta"));
  } else if (kind == "pos_hyperbolic") {
    o.kind = OrbitKind::pos_hyperbolic;
    o.r = j.at("r").get<long long>();
  } else if (kind == "neg_hyperbolic") {
    o.kind = OrbitKind::neg_hyperbolic;
    o.r = j.at("r").get<long long>();
  } else {
    throw ValidationError("unknown orbit_kind '" + kind + "'");
  }
  o.action = Rational(1);
  o.validate();
  return o;
}

int run_cz() {
  json req = read_stdin_json();
  std::string kind = req.at("kind").get<std::string>();
  HalfInt result;
  if (kind == "orbit_iterate") {
    HalfInt offset = req.contains("offset") ? half_int_from_json(req.at("offset")) : HalfInt();
    result = HalfInt::whole(cz_orbit_iterate(orbit_from_request(req), req.at("k").get<long long>(), offset));
  } else if (kind == "lagrangian_path") {
    LagrangianPath path;
    for (const auto& jp : req.at("samples"))
      path.samples.emplace_back(jp[0].get<double>(), jp[1].get<double>());
    result = cz_lagrangian_path(path);
  } else if (kind == "ech_chord") {
    result = cz_ech_chord(half_int_from_json(req.at("cz")), req.at("m").get<long long>());
  } else if (kind == "ech_orbit") {
    HalfInt offset = req.contains("offset") ? half_int_from_json(req.at("offset")) : HalfInt();
    result = HalfInt::whole(cz_ech_orbit(orbit_from_request(req), req.at("m").get<long long>(), offset));
  } else if (kind == "ech_set") {
    ReebDatum datum = ReebDatum::from_json(req.at("datum"));
    OrbitChordSet set = OrbitChordSet::from_json(req.at("set"));
    TrivializationOffset offs;
    if (req.contains("offsets")) offs = TrivializationOffset::from_json(req.at("offsets"));
    result = cz_ech_set(set, datum, offs);
  } else if (kind == "ind_set") {
    ReebDatum datum = ReebDatum::from_json(req.at("datum"));
    SetWithPartitions swp;
    for (const auto& je : req.at("set_with_partitions"))
      swp.emplace_back(je[0].get<std::string>(), je[1].get<std::vector<long long>>());
    TrivializationOffset offs;
    if (req.contains("offsets")) offs = TrivializationOffset::from_json(req.at("offsets"));
    result = cz_ind_set(swp, datum, offs);
  } else if (kind == "ech_change") {
    result = cz_ech_change(req.at("m").get<long long>(), half_int_from_json(req.at("offset")));
  } else {
    throw ValidationError("unknown cz request kind '" + kind + "'");
  }
  emit(half_int_to_json(result));
  return kExitPass;
}

int run_partition(const std::string& theta_str, long long m, const std::string& sign) {
  Rational theta = Rational::parse(theta_str);
  Partition p = (sign == "+") ? partition_positive(theta, m) : partition_negative(theta, m);
  emit(json(p.parts));
  return kExitPass;
}

int run_writhe(const std::string& braid_path) {
  Braid b = Braid::from_json(load_json(braid_path));
  json rep;
  rep["writhe"] = half_int_to_json(writhe(b));
  json winds = json::array();
  for (const auto& w : windings(b)) winds.push_back(half_int_to_json(w));
  rep["strand_windings"] = winds;
  emit(rep);
  return kExitPass;
}

int run_linking(const std::string& path1, const std::string& path2) {
  Braid b1 = Braid::from_json(load_json(path1));
  Braid b2 = Braid::from_json(load_json(path2));
  emit(json{{"linking", half_int_to_json(linking(b1, b2))}});
  return kExitPass;
}

int run_spectrum(const std::string& model, const std::string& window, int n, double bc0, double bc1) {
  long long l = 0;
  if (std::sscanf(model.c_str(), "l=%lld", &l) != 1)
    throw ValidationError("--model expects l=K, got '" + model + "'");
  double lo = 0, hi = 0;
  if (std::sscanf(window.c_str(), "%lf,%lf", &lo, &hi) != 2)
    throw ValidationError("--window expects a,b, got '" + window + "'");
  AsymptoticOperator op = discretize(model_matrix(l), bc0, bc1, n);
  json out = json::array();
  for (const auto& pair : spectrum_window(op, lo, hi)) {
    out.push_back(json{{"lambda", format_sig12(pair.lambda)},
                       {"winding", half_int_to_json(pair.winding)}});
  }
  emit(out);
  return kExitPass;
}

int run_index(const std::string& data_path, const std::string& offsets_path,
              const std::string& check) {
  json jd = load_json(data_path);
  ReebDatum datum = ReebDatum::from_json(jd.at("datum"));
  TrivializationOffset offs;
  if (!offsets_path.empty()) offs = TrivializationOffset::from_json(load_json(offsets_path));
  json rep;
  bool pass = false;
  if (check == "ineq") {
    SurfaceClassData s = SurfaceClassData::from_json(jd.at("data"));
    auto r = index_inequality_check(s, datum, offs);
    pass = r.pass;
    rep["check"] = "ineq";
    rep["I"] = half_int_to_json(r.I);
    rep["ind"] = half_int_to_json(r.ind);
    rep["slack"] = half_int_to_json(r.slack);
    rep["pass"] = r.pass;
    rep["equality"] = r.equality;
    if (r.partition_conditions) {
      json ends = json::array();
      for (const auto& e : r.partition_conditions->ends)
        ends.push_back(json{{"name", e.name},
                            {"sign", e.sign == EndSign::positive ? "+" : "-"},
                            {"observed", e.observed.parts},
                            {"expected", e.expected.parts},
                            {"pass", e.pass},
                            {"note", e.note}});
      rep["partition_conditions"] = json{{"pass", r.partition_conditions->pass}, {"ends", ends}};
    }
  } else if (check == "adjunction") {
    SurfaceClassData s = SurfaceClassData::from_json(jd.at("data"));
    HalfInt res = adjunction_residual(s, datum);
    pass = res.is_zero();
    rep["check"] = "adjunction";
    rep["residual"] = half_int_to_json(res);
    rep["pass"] = pass;
  } else if (check == "union") {
    SurfaceClassData c = SurfaceClassData::from_json(jd.at("c"));
    SurfaceClassData d = SurfaceClassData::from_json(jd.at("d"));
    auto r = union_index_check(c, d, datum, half_int_from_json(jd.at("geometric_intersection")),
                               half_int_from_json(jd.at("union_q_cross")),
                               half_int_from_json(jd.at("linking")));
    pass = r.pass;
    rep["check"] = "union";
    rep["I_union"] = half_int_to_json(r.I_union);
    rep["I_c"] = half_int_to_json(r.I_c);
    rep["I_d"] = half_int_to_json(r.I_d);
    rep["slack"] = half_int_to_json(r.slack);
    rep["pass"] = r.pass;
  } else if (check == "bound") {
    SurfaceClassData s = SurfaceClassData::from_json(jd.at("data"));
    auto r = topological_bound_check(s, datum, offs);
    pass = r.pass;
    rep["check"] = "bound";
    rep["lhs"] = half_int_to_json(r.lhs);
    rep["rhs"] = half_int_to_json(r.rhs);
    rep["slack"] = half_int_to_json(r.slack);
    rep["pass"] = r.pass;
  } else {
    throw ValidationError("unknown check '" + check + "'");
  }
  emit(rep);
  return pass ? kExitPass : kExitCheckFail;
}

int run_complex_build(const std::string& datum_path, const std::string& cap) {
  ReebDatum datum = ReebDatum::from_json(load_json(datum_path));
  ComplexSpec spec = build_complex(datum, Rational::parse(cap));
  emit(spec.to_json());
  return kExitPass;
}

int run_complex_verify(const std::string& spec_path, const std::string& counts_path, bool extended) {
  ComplexSpec spec = ComplexSpec::from_json(load_json(spec_path));
  DifferentialCounts counts = DifferentialCounts::from_json(load_json(counts_path));
  DifferentialVerdict v =
      extended ? verify_extended_differential(spec, counts) : verify_differential(spec, counts);
  json rep;
  rep["pass"] = v.pass;
  if (!v.pass) {
    rep["reason"] = v.reason;
    rep["witness"] = json{{"from", v.witness_from}, {"to", v.witness_to}};
    rep["middle_expansion"] = v.middle_expansion;
  }
  emit(rep);
  return v.pass ? kExitPass : kExitCheckFail;
}

int run_verify(const std::string& suite) {
  if (suite != "fast" && suite != "full")
    throw ValidationError("--suite must be fast or full, got '" + suite + "'");
  unsigned long long seed = 0;
  if (const char* env = std::getenv("ECH_KIT_SEED")) seed = std::strtoull(env, nullptr, 10);
  auto results = echkit::verify::run_all(suite == "fast", seed);
  bool all = true;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all = all && r.pass;
    std::printf("[%zu/%zu] %s  %-38s (%.2fs)  %s\n", i + 1, results.size(),
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
  }
  std::printf("%s: %zu criteria\n", all ? "PASS" : "FAIL", results.size());
  return all ? kExitPass : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian ECH index calculus"};
  app.require_subcommand(1);

  auto* cz_cmd = app.add_subcommand("cz", "Conley-Zehnder calculators (JSON request on stdin)");

  std::string theta = "1/2", sign = "+";
  long long m = 1;
  auto* part_cmd = app.add_subcommand("partition", "ECH partition of an elliptic rotation number");
  part_cmd->add_option("--theta", theta, "rotation number p/q in (0,1)")->required();
  part_cmd->add_option("--m", m, "total multiplicity")->required();
  part_cmd->add_option("--sign", sign, "+ or -")->default_val("+");

  std::string braid_path, braid2_path;
  auto* writhe_cmd = app.add_subcommand("writhe", "writhe of a braid");
  writhe_cmd->add_option("--braid", braid_path, "braid JSON file")->required();
  auto* link_cmd = app.add_subcommand("linking", "linking number of two braids");
  link_cmd->add_option("--braid", braid_path, "braid JSON file")->required();
  link_cmd->add_option("--braid2", braid2_path, "second braid JSON file")->required();

  std::string model = "l=0", window = "-6.3,6.3";
  int grid = 2000;
  double bc0 = 0.0, bc1 = 0.0;
  auto* spec_cmd = app.add_subcommand("spectrum", "spectrum of a model asymptotic operator");
  spec_cmd->add_option("--model", model, "model operator, l=K")->required();
  spec_cmd->add_option("--window", window, "eigenvalue window a,b")->required();
  spec_cmd->add_option("--n", grid, "grid size")->default_val(2000);
  spec_cmd->add_option("--bc0", bc0, "boundary line angle at t=0");
  spec_cmd->add_option("--bc1", bc1, "boundary line angle at t=1");

  std::string data_path, offsets_path, check = "ineq";
  auto* index_cmd = app.add_subcommand("index", "ECH index checkers");
  index_cmd->add_option("--data", data_path, "data JSON file")->required();
  index_cmd->add_option("--offsets", offsets_path, "trivialization offsets JSON file");
  index_cmd->add_option("--check", check, "ineq | adjunction | union | bound")->required();

  auto* complex_cmd = app.add_subcommand("complex", "chain-complex tools");
  complex_cmd->require_subcommand(1);
  std::string datum_path, cap = "1", spec_path, counts_path;
  bool extended = false;
  auto* build_cmd = complex_cmd->add_subcommand("build", "enumerate generators below an action cap");
  build_cmd->add_option("--datum", datum_path, "Reeb datum JSON file")->required();
  build_cmd->add_option("--cap", cap, "action cap p/q")->required();
  auto* cverify_cmd = complex_cmd->add_subcommand("verify", "check a differential");
  cverify_cmd->add_option("--spec", spec_path, "complex spec JSON file")->required();
  cverify_cmd->add_option("--counts", counts_path, "differential counts JSON file")->required();
  cverify_cmd->add_flag("--extended", extended, "verify over F2[t]");

  std::string suite = "fast";
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suites");
  verify_cmd->add_option("--suite", suite, "fast | full")->default_val("fast");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cz_cmd->parsed()) return run_cz();
    if (part_cmd->parsed()) return run_partition(theta, m, sign);
    if (writhe_cmd->parsed()) return run_writhe(braid_path);
    if (link_cmd->parsed()) return run_linking(braid_path, braid2_path);
    if (spec_cmd->parsed()) return run_spectrum(model, window, grid, bc0, bc1);
    if (index_cmd->parsed()) return run_index(data_path, offsets_path, check);
    if (complex_cmd->parsed()) {
      if (build_cmd->parsed()) return run_complex_build(datum_path, cap);
      if (cverify_cmd->parsed()) return run_complex_verify(spec_path, counts_path, extended);
    }
    if (verify_cmd->parsed()) return run_verify(suite);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
