#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "torlog/cli.hpp"

using namespace torlog;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = TORLOG_EXAMPLES_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::main(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (data_dir / name).string(); }

}  // namespace

TEST_CASE("parse_args") {
  auto cfg = cli::parse_args({"betti", "c.json"});
  CHECK(cfg.command == cli::Command::betti);
  CHECK(cfg.inputs == std::vector<std::string>{"c.json"});

  cfg = cli::parse_args({"torsion", "c.json", "--beta", "0,1,2"});
  CHECK(cfg.command == cli::Command::torsion);
  CHECK(cfg.beta == std::vector<Scalar>{0, 1, 2});

  cfg = cli::parse_args({"torsion", "c.json", "--beta", "1/2,-3/4"});
  CHECK(cfg.beta == std::vector<Scalar>{make_scalar(1, 2), make_scalar(-3, 4)});

  cfg = cli::parse_args({"verify", "--suite", "nerve", "--trials", "10", "--seed", "7"});
  CHECK(cfg.command == cli::Command::verify);
  CHECK(cfg.suite == "nerve");
  CHECK(cfg.trials == 10u);
  CHECK(cfg.seed == 7u);

  cfg = cli::parse_args({"euler", "c.json", "--A", "2", "--B", "-1/3"});
  CHECK(cfg.a == 2);
  CHECK(cfg.b == make_scalar(-1, 3));

  cfg = cli::parse_args({"glue-compose", "f.json", "g.json", "--approx", "-o", "r.json"});
  CHECK(cfg.inputs.size() == 2);
  CHECK(cfg.approx);
  CHECK(cfg.output == "r.json");

  for (const auto& c : {cli::Command::check, cli::Command::k1_torsion, cli::Command::fred_verify}) {
    CHECK(cli::parse_args({cli::command_name(c), "x.json"}).command == c);
  }
}

TEST_CASE("usage errors exit 2") {
  auto code_of = [](const std::vector<std::string>& args) {
    try {
      cli::parse_args(args);
    } catch (const cli::UsageError& e) {
      return e.code();
    }
    return 0;
  };
  CHECK(code_of({"frobnicate", "c.json"}) == 2);
  CHECK(code_of({}) == 2);
  CHECK(code_of({"torsion", "c.json", "--beta", "1/0"}) == 2);
  CHECK(code_of({"torsion", "c.json", "--beta", "x"}) == 2);
  CHECK(code_of({"torsion", "c.json"}) == 2);
  CHECK(code_of({"euler", "c.json", "--A", "1.5"}) == 2);
  CHECK(code_of({"verify", "--suite", "bogus"}) == 2);
  CHECK(code_of({"verify", "--suite", "nerve", "--trials", "0"}) == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("reidemeister on the circle fixture") {
  const auto r = invoke({"reidemeister", data("circle.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"character\":[{\"w\":\"1\",\"base\":\"5/4\"}]}\n");
}

TEST_CASE("stdin input") {
  std::ifstream f(data("circle.json"));
  std::stringstream ss;
  ss << f.rdbuf();
  const auto r = invoke({"reidemeister", "-"}, ss.str());
  CHECK(r.code == 0);
  CHECK(r.out == "{\"character\":[{\"w\":\"1\",\"base\":\"5/4\"}]}\n");
}

TEST_CASE("domain and io errors") {
  const auto r = invoke({"reidemeister", data("interval_glued.json")});
  CHECK(r.code == 4);
  const auto j = Json::parse(r.out);
  CHECK(j["error"]["kind"] == "domain");
  CHECK(j["error"]["message"].get<std::string>().find("betti_0") != std::string::npos);

  const auto missing = invoke({"betti", data("does_not_exist.json")});
  CHECK(missing.code == 3);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  CHECK(invoke({"betti", "-"}, "{\"dims\": [1], \"differentials\": [}").code == 2);
  CHECK(invoke({"betti", "-"}, "{\"dims\": [1, 1], \"differentials\": [[[\"1/x\"]]]}").code == 2);
  CHECK(invoke({"betti", "-"}, "{\"dims\": [1, 1, 1], \"differentials\": [[[1]], [[1]]]}").code == 4);
  CHECK(invoke({"k1-torsion", data("interval_glued.json")}).code == 4);
}

TEST_CASE("complex commands") {
  CHECK(invoke({"betti", data("interval_glued.json")}).out == "{\"betti\":[1,1]}\n");

  const auto chk = invoke({"check", data("bad_dd.json")});
  CHECK(chk.code == 1);
  CHECK(Json::parse(chk.out)["valid"] == false);
  CHECK(invoke({"check", data("circle.json")}).code == 0);

  // d = [2] with forms 1 and 3: d* = 6, both Laplacians are 12.
  const auto lap = Json::parse(invoke({"laplacian", data("two_term.json")}).out);
  CHECK(lap["laplacians"][0]["matrix"] == Json::parse("[[\"12\"]]"));
  CHECK(lap["laplacians"][1]["pdet"] == "12");
  const auto rd = Json::parse(invoke({"reidemeister", data("two_term.json"), "--approx"}).out);
  CHECK(rd["character"] == Json::parse("[{\"w\":\"-1/2\",\"base\":\"12\"}]"));
  CHECK(rd["character_approx"] == "-1.24245332489");

  // betti (1, 1): chi = 0, chi_p = -1.
  const auto eu = Json::parse(invoke({"euler", data("interval_glued.json"), "--A", "1/2", "--B", "3"}).out);
  CHECK(eu["chi"] == 0);
  CHECK(eu["chi_p"] == -1);
  CHECK(eu["residue_torsion"] == "-1/2");

  const auto tor = Json::parse(invoke({"torsion", data("circle.json"), "--beta", "0,1"}).out);
  CHECK(tor["character"] == Json::parse("[{\"w\":\"1\",\"base\":\"5/4\"}]"));
  CHECK(invoke({"torsion", data("circle.json"), "--beta", "0,1,2"}).code == 4);

  const auto exp = invoke({"torsion", data("circle.json"), "--beta", "0,1", "--trials", "3", "--seed", "4"});
  const auto ej = Json::parse(exp.out);
  CHECK(ej["characters"].size() == 3);
  CHECK(ej["betti"] == Json::parse("[0,0]"));
  CHECK(ej["counts_constant"] == true);

  const auto k1 = Json::parse(invoke({"k1-torsion", data("circle.json")}).out);
  CHECK(k1["normalized"] == "4/5");
}

TEST_CASE("fredholm commands") {
  const auto idx = Json::parse(invoke({"fred-index", data("surjection.json")}).out);
  CHECK(idx["index"] == "1");
  CHECK(idx["kernel_dim"] == 1);
  CHECK(idx["export"]["value"] == "2");
  CHECK(Json::parse(invoke({"fred-index", data("surjection.json"), "--base", "3"}).out)["export"]["value"] == "3");

  const auto add = invoke({"fred-verify", data("composable.json")});
  CHECK(add.code == 0);
  const auto aj = Json::parse(add.out);
  CHECK(aj["index"] == Json::parse("[-1,1,0]"));
  CHECK(aj["passed"] == true);

  CHECK(invoke({"fred-verify", data("surjection.json")}).code == 0);
  const auto dg = invoke({"fred-verify", data("diagram.json")});
  CHECK(dg.code == 0);
  CHECK(Json::parse(dg.out)["additive"] == true);
}

TEST_CASE("glue-compose") {
  const auto r = invoke({"glue-compose", data("hbordism_f.json"), data("hbordism_g.json")});
  INFO(r.out, r.err);
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["additive"] == true);
  CHECK(invoke({"glue-compose", data("hbordism_g.json"), data("hbordism_g.json")}).code == 4);
}

TEST_CASE("verify suites") {
  CHECK(invoke({"verify", "--suite", "nerve", "--trials", "100"}).code == 0);
  CHECK(invoke({"verify", "--suite", "fredholm", "--trials", "50"}).code == 0);
  CHECK(invoke({"verify", "--suite", "hbordism", "--trials", "20"}).code == 0);
  const auto bad = invoke({"verify", "--suite", "corrupted", "--trials", "50"});
  CHECK(bad.code == 1);
  const auto j = Json::parse(bad.out);
  CHECK(j["all_passed"] == false);
  CHECK(j["checks"][0]["name"] == "additivity");
  CHECK_FALSE(j["checks"][0]["counterexample"].is_null());
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--suite", "hbordism", "--trials", "10", "--seed", "9"},
           {"verify", "--suite", "corrupted", "--trials", "20", "--seed", "3"},
           {"torsion", data("circle.json"), "--beta", "0,1", "--trials", "4", "--seed", "2", "--approx"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("output file") {
  const fs::path out = fs::temp_directory_path() / "torlog_cli_test_report.json";
  fs::remove(out);
  CHECK(invoke({"betti", data("circle.json"), "-o", out.string()}).code == 0);
  std::ifstream f(out);
  std::string line;
  std::getline(f, line);
  CHECK(line == "{\"betti\":[0,0]}");
  fs::remove(out);
  CHECK(invoke({"betti", data("circle.json"), "-o", "/nonexistent/dir/r.json"}).code == 3);
}
