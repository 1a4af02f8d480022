#include "torlog/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "torlog/instances.hpp"
#include "torlog/k1.hpp"
#include "torlog/linalg.hpp"
#include "torlog/nerve.hpp"
#include "torlog/torsion.hpp"

namespace torlog::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::pair<Command, std::string>>& command_table() {
  static const std::vector<std::pair<Command, std::string>> table = {
      {Command::check, "check"},
      {Command::betti, "betti"},
      {Command::laplacian, "laplacian"},
      {Command::torsion, "torsion"},
      {Command::reidemeister, "reidemeister"},
      {Command::euler, "euler"},
      {Command::k1_torsion, "k1-torsion"},
      {Command::fred_index, "fred-index"},
      {Command::fred_verify, "fred-verify"},
      {Command::verify, "verify"},
      {Command::glue_compose, "glue-compose"},
  };
  return table;
}

Scalar parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_scalar(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what(), exit_code::usage);
  }
}

std::vector<Scalar> parse_beta(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational_flag("--beta", item));
  if (out.empty()) throw UsageError("--beta: empty weight list", exit_code::usage);
  return out;
}

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) throw IoError("cannot read '" + path + "'");
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

class Reporter {
 public:
  explicit Reporter(bool approx) : approx_(approx) {}

  void put(Json& obj, const std::string& key, const LogValue& v) const {
    obj[key] = log_value_to_json(v);
    if (approx_) obj[key + "_approx"] = log_value_approx(v);
  }
  Json log_array(const std::vector<LogValue>& vs) const {
    Json arr = Json::array();
    for (const auto& v : vs) {
      if (approx_) {
        arr.push_back(Json{{"value", log_value_to_json(v)}, {"approx", log_value_approx(v)}});
      } else {
        arr.push_back(log_value_to_json(v));
      }
    }
    return arr;
  }

 private:
  bool approx_;
};

Json betti_json(const CochainComplex& c) {
  Json arr = Json::array();
  for (auto b : betti_numbers(c)) arr.push_back(b);
  return arr;
}

RunResult cmd_check(const Json& j) {
  // Read the raw data so that d∘d != 0 is reported rather than thrown.
  if (!j.is_object() || !j.contains("dims")) throw ParseError("complex needs \"dims\"");
  const auto dims = j.at("dims").get<std::vector<std::size_t>>();
  std::vector<Matrix> diffs;
  if (j.contains("differentials")) {
    for (const auto& d : j.at("differentials")) diffs.push_back(matrix_from_json(d));
  }
  const auto v = validate(dims, diffs);
  Json report{{"valid", !v.has_value()}};
  if (v) {
    report["violation"] = Json{{"degree", v->degree}, {"row", v->row}, {"col", v->col}, {"message", v->message}};
    return {exit_code::failed, report};
  }
  const CochainComplex c(dims, diffs);
  (void)grams_from_json(j, c);  // validates the forms too
  report["top_degree"] = c.top_degree();
  report["dims"] = dims;
  return {exit_code::ok, report};
}

RunResult cmd_laplacian(const Json& j) {
  const CochainComplex c = complex_from_json(j);
  const InnerProducts g = grams_from_json(j, c);
  Json arr = Json::array();
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    const Matrix l = laplacian(c, g, p);
    arr.push_back(Json{{"degree", p},
                       {"matrix", matrix_to_json(l)},
                       {"kernel_dim", kernel_dim(l)},
                       {"pdet", scalar_to_json(pseudo_det(l, g.gram(p)))}});
  }
  return {exit_code::ok, Json{{"laplacians", arr}}};
}

RunResult cmd_torsion(const RunConfig& cfg, const Json& j, const Reporter& rep) {
  const CochainComplex c = complex_from_json(j);
  if (cfg.beta.size() != c.top_degree() + 1) {
    throw ShapeError("--beta needs " + std::to_string(c.top_degree() + 1) + " weights, got " +
                     std::to_string(cfg.beta.size()));
  }
  if (cfg.trials) {
    const MetricReport m = metric_variation_experiment(c, cfg.beta, *cfg.trials, cfg.seed);
    Json report{{"betti", m.betti},
                {"chi", m.euler.chi},
                {"chi_p", m.euler.chi_p},
                {"counts_constant", m.counts_constant},
                {"characters", rep.log_array(m.characters)},
                {"constant", m.constant}};
    return {exit_code::ok, report};
  }
  const InnerProducts g = grams_from_json(j, c);
  const TorsionLogarithm t = torsion_logarithm(c, g, cfg.beta);
  Json records = Json::array();
  for (const auto& r : t.records) {
    records.push_back(Json{{"degree", r.degree},
                           {"weight", scalar_to_json(r.weight())},
                           {"pdet", scalar_to_json(pseudo_det(r.laplacian, r.gram))}});
  }
  Json report{{"records", records}};
  rep.put(report, "character", character(t));
  report["invariant_weights"] = beta_is_invariant(cfg.beta);
  return {exit_code::ok, report};
}

RunResult cmd_reidemeister(const Json& j, const Reporter& rep) {
  const CochainComplex c = complex_from_json(j);
  Json report = Json::object();
  rep.put(report, "character", reidemeister(c, grams_from_json(j, c)));
  return {exit_code::ok, report};
}

RunResult cmd_euler(const RunConfig& cfg, const Json& j) {
  const CochainComplex c = complex_from_json(j);
  const EulerCharacteristics e = weighted_euler(c);
  Json report{{"chi", e.chi}, {"chi_p", e.chi_p}};
  if (cfg.a || cfg.b) {
    report["residue_torsion"] = scalar_to_json(residue_torsion(c, cfg.a.value_or(0), cfg.b.value_or(0)));
  }
  return {exit_code::ok, report};
}

Json k1_json(const K1Torsion& t, const Reporter& rep) {
  Json report{{"value", scalar_to_json(t.value)}, {"sign", t.sign()}, {"normalized", scalar_to_json(t.normalized())}};
  rep.put(report, "log_abs", t.log_abs());
  return report;
}

RunResult cmd_k1(const Json& j, const Reporter& rep) {
  if (j.is_object() && j.contains("components")) {
    return {exit_code::ok, k1_json(torsion_of_equivalence(chain_map_from_json(j)), rep)};
  }
  const CochainComplex c = complex_from_json(j);
  const InnerProducts g = grams_from_json(j, c);
  return {exit_code::ok, k1_json(torsion_of_acyclic(c, find_contraction(c, g)), rep)};
}

Matrix operator_z(const Json& j) {
  if (!j.is_object() || !j.contains("z")) throw ParseError("operator needs \"z\"");
  return matrix_from_json(j.at("z"));
}

std::optional<Matrix> optional_matrix(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return matrix_from_json(j.at(key));
}

RunResult cmd_fred_index(const RunConfig& cfg, const Json& j, const Reporter& rep) {
  const Matrix z = operator_z(j);
  const Matrix q = optional_matrix(j, "q").value_or(parametrix(z));
  const BlockLog l = log_fred(z, q);
  const long direct = static_cast<long>(kernel_dim(z)) - static_cast<long>(kernel_dim(z.transpose()));
  Json report{{"source_dim", l.source_dim},
              {"target_dim", l.target_dim},
              {"index", scalar_to_json(l.trace)},
              {"kernel_dim", kernel_dim(z)},
              {"cokernel_dim", kernel_dim(z.transpose())},
              {"agrees_with_rank", l.trace == direct}};
  const TqftValue v = weak_tqft_export(FredholmInstance(), z, cfg.base);
  Json ex = Json::object();
  rep.put(ex, "log", v.log);
  ex["value"] = v.value ? Json(to_string(*v.value)) : Json(nullptr);
  report["export"] = ex;
  return {exit_code::ok, report};
}

RunResult cmd_fred_verify(const Json& j) {
  if (j.is_object() && j.contains("p1")) {
    const DiagramReport d = relative_index_diagram(diagram_from_json(j));
    Json report{{"mode", "diagram"},
                {"index", {d.index0, d.index1, d.index2}},
                {"direct_index", {d.direct_index0, d.direct_index1, d.direct_index2}},
                {"additive", d.additive},
                {"expression", witness_to_json(d.expression)}};
    const bool ok = d.additive && d.expression.ok() && d.index0 == d.direct_index0 &&
                    d.index1 == d.direct_index1 && d.index2 == d.direct_index2;
    report["passed"] = ok;
    return {ok ? exit_code::ok : exit_code::failed, report};
  }
  const Matrix z = operator_z(j);
  if (j.contains("z2")) {
    const Matrix z2 = matrix_from_json(j.at("z2"));
    const WitnessReport w = check_additivity(z, z2, optional_matrix(j, "q"), optional_matrix(j, "q2"),
                                             optional_matrix(j, "q_composite"));
    const long ia = index_character(z), ib = index_character(z2), ic = index_character(z2 * z);
    Json report{{"mode", "additivity"},
                {"index", {ia, ib, ic}},
                {"index_additive", ic == ia + ib},
                {"difference", witness_to_json(w)}};
    const bool ok = ic == ia + ib && w.ok();
    report["passed"] = ok;
    return {ok ? exit_code::ok : exit_code::failed, report};
  }
  const Matrix q = optional_matrix(j, "q").value_or(parametrix(z));
  const Matrix q2 = optional_matrix(j, "q2").value_or(parametrix(z));
  const WitnessReport w = check_parametrix_independence(z, q, q2);
  Json report{{"mode", "parametrix_independence"}, {"difference", witness_to_json(w)}, {"passed", w.ok()}};
  return {w.ok() ? exit_code::ok : exit_code::failed, report};
}

RunResult cmd_verify(const RunConfig& cfg) {
  Json report{{"suite", cfg.suite}, {"seed", cfg.seed}};
  bool ok = true;
  if (cfg.suite == "nerve") {
    const std::size_t n = cfg.trials.value_or(1000);
    Json checks = Json::array();
    for (const auto& r : {verify_eta_commutation(n, cfg.seed), verify_trace_compat(n, cfg.seed),
                          verify_mu_cocycle(n, cfg.seed)}) {
      ok = ok && r.ok();
      checks.push_back(to_json(r));
    }
    report["trials"] = n;
    report["checks"] = checks;
  } else if (cfg.suite == "fredholm" || cfg.suite == "corrupted") {
    const std::size_t n = cfg.trials.value_or(500);
    const LogAxiomReport r = cfg.suite == "fredholm" ? verify_log_axioms(FredholmInstance(), n, cfg.seed)
                                                     : verify_log_axioms(CorruptedInstance(), n, cfg.seed);
    ok = r.all_passed();
    report["trials"] = n;
    report["checks"] = to_json(r)["axioms"];
  } else {
    const std::size_t n = cfg.trials.value_or(200);
    const LogAxiomReport r = verify_log_axioms(HBordismInstance(), n, cfg.seed);
    const SuiteReport cross = cross_check_hbordism(std::min<std::size_t>(n, 50), cfg.seed);
    ok = r.all_passed() && cross.ok();
    Json checks = to_json(r)["axioms"];
    checks.push_back(to_json(cross));
    report["trials"] = n;
    report["checks"] = checks;
  }
  report["all_passed"] = ok;
  return {ok ? exit_code::ok : exit_code::failed, report};
}

HMorphism hmorphism_from_json(const HBordismInstance& inst, const Json& j, const std::string& name) {
  const ChainMap f = chain_map_from_json(j);
  return HMorphism{inst.make_object(f.source, grams_from_json(j.at("source"), f.source), name + ".source"),
                   inst.make_object(f.target, grams_from_json(j.at("target"), f.target), name + ".target"), f};
}

RunResult cmd_glue(const RunConfig& cfg, std::istream& in, const Reporter& rep) {
  const HBordismInstance inst;
  const HMorphism f = hmorphism_from_json(inst, read_json(cfg.inputs[0], in), "f");
  const HMorphism g = hmorphism_from_json(inst, read_json(cfg.inputs[1], in), "g");
  if (!(f.target.complex == g.source.complex) || !(f.target.grams.grams() == g.source.grams.grams())) {
    throw DomainError("cannot glue: target of the first map differs from source of the second");
  }
  const HMorphism gf = inst.compose(f, g);
  auto piece = [&](const HMorphism& m) {
    const TqftValue v = weak_tqft_export(inst, m);
    Json o = Json::object();
    rep.put(o, "character", v.log);
    o["value"] = v.value ? Json(to_string(*v.value)) : Json(nullptr);
    return std::pair{o, v.log};
  };
  const auto [jf, cf] = piece(f);
  const auto [jg, cg] = piece(g);
  const auto [jgf, cgf] = piece(gf);
  const bool additive = cgf == cf + cg;
  Json report{{"first", jf}, {"second", jg}, {"composite", jgf}, {"additive", additive}};
  return {additive ? exit_code::ok : exit_code::failed, report};
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [cmd, name] : command_table())
    if (cmd == c) return name;
  return "?";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact torsion, Fredholm index and log-functor checks on finite models", "torlog"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string beta, a, b, base;
  std::size_t trials = 0;
  app.add_option("-o,--output", cfg.output, "write the report here instead of stdout");
  app.add_flag("--approx", cfg.approx, "add 12-digit decimal renderings of log values");
  app.add_option("--seed", cfg.seed, "seed for randomized commands");

  std::vector<std::pair<CLI::App*, Command>> subs;
  auto sub = [&](Command c, const std::string& help, std::size_t n_inputs) {
    CLI::App* s = app.add_subcommand(command_name(c), help);
    if (n_inputs > 0) s->add_option("inputs", cfg.inputs, "JSON input file(s), - for stdin")->required()->expected(static_cast<int>(n_inputs));
    subs.emplace_back(s, c);
    return s;
  };
  sub(Command::check, "validate a complex", 1);
  sub(Command::betti, "Betti numbers", 1);
  sub(Command::laplacian, "combinatorial Laplacians", 1);
  CLI::App* torsion = sub(Command::torsion, "torsion logarithm with weights --beta", 1);
  torsion->add_option("--beta", beta, "comma-separated rationals, one per degree")->required();
  auto* torsion_trials = torsion->add_option("--trials", trials, "run the Gram variation experiment");
  sub(Command::reidemeister, "Reidemeister character of an acyclic complex", 1);
  CLI::App* euler = sub(Command::euler, "Euler characteristics and A chi_p + B chi", 1);
  euler->add_option("-A,--A", a, "rational A");
  euler->add_option("-B,--B", b, "rational B");
  sub(Command::k1_torsion, "K1 torsion of an acyclic complex or of a chain equivalence", 1);
  CLI::App* fred_index = sub(Command::fred_index, "Fredholm index of {\"z\": ...}", 1);
  fred_index->add_option("--base", base, "rational base for the exported value (default 2)");
  sub(Command::fred_verify, "certify Fredholm additivity, parametrix independence or a projection diagram", 1);
  CLI::App* verify = sub(Command::verify, "randomized verification suite", 0);
  verify->add_option("--suite", cfg.suite)->required()->check(CLI::IsMember({"nerve", "fredholm", "hbordism", "corrupted"}));
  auto* verify_trials = verify->add_option("--trials", trials);
  sub(Command::glue_compose, "compose two h-bordisms and compare characters", 2);

  std::vector<std::string> argv_store{"torlog"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), exit_code::ok, true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what(), exit_code::usage);
  }
  for (const auto& [s, c] : subs) {
    if (s->parsed()) cfg.command = c;
  }
  if (!beta.empty()) cfg.beta = parse_beta(beta);
  if (!a.empty()) cfg.a = parse_rational_flag("--A", a);
  if (!b.empty()) cfg.b = parse_rational_flag("--B", b);
  if (!base.empty()) {
    cfg.base = parse_rational_flag("--base", base);
    if (cfg.base <= 0 || cfg.base == 1) throw UsageError("--base must be positive and different from 1", exit_code::usage);
  }
  if (torsion_trials->count() + verify_trials->count() > 0) {
    if (trials == 0) throw UsageError("--trials must be positive", exit_code::usage);
    cfg.trials = trials;
  }
  if (cfg.command == Command::torsion && cfg.trials && *cfg.trials < 2) {
    throw UsageError("--trials needs at least 2 Gram choices", exit_code::usage);
  }
  return cfg;
}

RunResult run(const RunConfig& cfg, std::istream& in) {
  const Reporter rep(cfg.approx);
  try {
    switch (cfg.command) {
      case Command::verify:
        return cmd_verify(cfg);
      case Command::glue_compose:
        return cmd_glue(cfg, in, rep);
      default:
        break;
    }
    const Json j = read_json(cfg.inputs.at(0), in);
    switch (cfg.command) {
      case Command::check:
        return cmd_check(j);
      case Command::betti:
        return {exit_code::ok, Json{{"betti", betti_json(complex_from_json(j))}}};
      case Command::laplacian:
        return cmd_laplacian(j);
      case Command::torsion:
        return cmd_torsion(cfg, j, rep);
      case Command::reidemeister:
        return cmd_reidemeister(j, rep);
      case Command::euler:
        return cmd_euler(cfg, j);
      case Command::k1_torsion:
        return cmd_k1(j, rep);
      case Command::fred_index:
        return cmd_fred_index(cfg, j, rep);
      case Command::fred_verify:
        return cmd_fred_verify(j);
      default:
        break;
    }
    return {exit_code::usage, error_json("usage", "unhandled command")};
  } catch (const IoError& e) {
    return {exit_code::io, error_json("io", e.what())};
  } catch (const ParseError& e) {
    return {exit_code::usage, error_json("parse", e.what())};
  } catch (const Json::exception& e) {
    return {exit_code::usage, error_json("parse", e.what())};
  } catch (const ShapeError& e) {
    return {exit_code::domain, error_json("shape", e.what())};
  } catch (const DomainError& e) {
    return {exit_code::domain, error_json("domain", e.what())};
  }
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    (e.help() ? out : err) << e.what() << (e.help() ? "" : "\nRun with --help for usage.\n");
    return e.code();
  }
  const RunResult r = run(cfg, in);
  if (r.report.contains("error")) err << "torlog: " << r.report["error"]["message"].get<std::string>() << "\n";
  const std::string text = r.report.dump() + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!(f << text)) {
      err << "torlog: cannot write '" << cfg.output << "'\n";
      return exit_code::io;
    }
  }
  return r.code;
}

}  // namespace torlog::cli
