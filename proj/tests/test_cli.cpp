#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "causal/cli.hpp"

namespace {

std::string fixture(const std::string& name) {
  return std::string(CAUSECHECK_FIXTURE_DIR) + "/" + name;
}

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, bool color = false) {
  std::ostringstream out, err;
  int code = causal::cli::run(args, out, err, color);
  return CliResult{code, out.str(), err.str()};
}

// Writes a temp file and removes it on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "causecheck_test_" + std::to_string(counter++) + ".tmp";
    std::ofstream f(path, std::ios::binary);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("validate accepts corpus models") {
  CliResult r = run_cli({"validate", fixture("rock_throwing.scm-model")});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("ok: model rock_throwing (7 variables, 5 equations)") != std::string::npos);
}

TEST_CASE("validate reports cycles with exit code 3") {
  TempFile bad("model broken {\n  endo X: {0, 1}\n  endo Y: {0, 1}\n  X = Y\n  Y = X\n}\n");
  CliResult r = run_cli({"validate", bad.path});
  CHECK(r.exit_code == causal::cli::kExitParse);
  CHECK(r.err.find("cyclic") != std::string::npos);
  CHECK(r.err.find(":4:") != std::string::npos);  // position of the first equation
}

TEST_CASE("missing files exit with code 3") {
  CliResult r = run_cli({"validate", "does_not_exist.scm-model"});
  CHECK(r.exit_code == causal::cli::kExitParse);
}

TEST_CASE("unknown flags are usage errors") {
  CliResult r = run_cli({"validate", fixture("prisoner.scm-model"), "--frobnicate"});
  CHECK(r.exit_code == causal::cli::kExitUsage);
}

TEST_CASE("solve prints the unique solution") {
  CliResult r = run_cli({"solve", fixture("rock_throwing.scm-model"), "--context",
                         "(U_ST=1, U_BT=1)"});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("SH = 1") != std::string::npos);
  CHECK(r.out.find("BH = 0") != std::string::npos);
  CHECK(r.out.find("BS = 1") != std::string::npos);
}

TEST_CASE("eval returns exit code 1 on false formulas") {
  CliResult t = run_cli({"eval", fixture("rock_throwing.scm-model"), "--context",
                         "(U_ST=1, U_BT=1)", "--formula", "[ST<-0, BH<-0](BS=0)"});
  CHECK(t.exit_code == causal::cli::kExitOk);
  CHECK(t.out == "true\n");

  CliResult f = run_cli({"eval", fixture("rock_throwing.scm-model"), "--context",
                         "(U_ST=1, U_BT=1)", "--formula", "[BT<-0](BS=0)"});
  CHECK(f.exit_code == causal::cli::kExitFalse);
  CHECK(f.out == "false\n");
}

TEST_CASE("cause prints the witness and exits 0") {
  CliResult r = run_cli({"cause", fixture("rock_throwing.scm-model"), "--context",
                         "(U_ST=1, U_BT=1)", "--query", "ST=1 of BS=1", "--definition",
                         "modified"});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("TRUE: ST=1 is a cause of BS=1 (modified)") != std::string::npos);
  CHECK(r.out.find("witness: W = {BH=0}; x' = {ST=0}") != std::string::npos);
}

TEST_CASE("cause exits 1 on a non-cause") {
  CliResult r = run_cli({"cause", fixture("rock_throwing.scm-model"), "--context",
                         "(U_ST=1, U_BT=1)", "--query", "BT=1 of BS=1", "--definition",
                         "modified"});
  CHECK(r.exit_code == causal::cli::kExitFalse);
  CHECK(r.out.find("FALSE") != std::string::npos);
  CHECK(r.out.find("AC2") != std::string::npos);
}

TEST_CASE("cause rejects unknown definitions with exit 2") {
  CliResult r = run_cli({"cause", fixture("rock_throwing.scm-model"), "--context",
                         "(U_ST=1, U_BT=1)", "--query", "ST=1 of BS=1", "--definition",
                         "sideways"});
  CHECK(r.exit_code == causal::cli::kExitUsage);
  CHECK(r.err.find("butfor") != std::string::npos);
}

TEST_CASE("cause emits pinned JSON") {
  CliResult r = run_cli({"cause", fixture("rock_throwing.scm-model"), "--context",
                         "(U_ST=1, U_BT=1)", "--query", "ST=1 of BS=1", "--definition",
                         "modified", "--format", "json"});
  CHECK(r.exit_code == causal::cli::kExitOk);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "causecheck.verdict/1");
  CHECK(j["is_cause"] == true);
  CHECK(j["variant"] == "modified");
  CHECK(j["witness"]["w"]["BH"] == "0");
  CHECK(j["query"] ==
        "cause? ST=1 of BS=1 in (U_ST=1, U_BT=1) using modified");
}

TEST_CASE("cause accepts query files") {
  TempFile q("cause? ST=1 of BS=1 in (U_ST=1, U_BT=1) using hitchcock\n");
  CliResult r = run_cli({"cause", fixture("rock_throwing.scm-model"), "--query-file", q.path});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("path: ST -> SH -> BS") != std::string::npos);
}

TEST_CASE("budget exhaustion exits with code 4") {
  TempFile q("partof? V1=A of O=A in (U_1=A, U_2=A, U_3=A, U_4=A, U_5=A, U_6=B, U_7=B) "
             "using modified\n");
  CliResult r = run_cli({"cause", fixture("plurality_vote.scm-model"), "--query-file", q.path,
                         "--budget-ms", "0"});
  CHECK(r.exit_code == causal::cli::kExitBudget);
  CHECK(r.out.find("BUDGET EXCEEDED") != std::string::npos);
}

TEST_CASE("causes enumerates the modified pair") {
  CliResult r = run_cli({"causes", fixture("forest_fire_disjunctive.scm-model"), "--context",
                         "(U_L=1, U_MD=1)", "--effect", "F=1", "--definition", "modified",
                         "--max-size", "2"});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("1 cause of F=1 (modified, max size 2)") != std::string::npos);
  CHECK(r.out.find("L=1 & MD=1") != std::string::npos);
}

TEST_CASE("compare lays the definitions side by side") {
  CliResult r = run_cli({"compare", fixture("prisoner.scm-model"), "--context",
                         "(U_A=1, U_B=0, U_C=1)", "--query", "A=1 of D=1"});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("original") != std::string::npos);
  CHECK(r.out.find("updated") != std::string::npos);
  CHECK(r.out.find("modified") != std::string::npos);

  CliResult j = run_cli({"compare", fixture("prisoner.scm-model"), "--context",
                         "(U_A=1, U_B=0, U_C=1)", "--query", "A=1 of D=1", "--format", "json"});
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["schema"] == "causecheck.compare/1");
  CHECK(parsed["results"].size() == 6);
}

TEST_CASE("paths lists the dependence routes") {
  CliResult r = run_cli({"paths", fixture("diamond_paths.scm-model"), "--from", "A", "--to",
                         "D"});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out == "A -> B -> D\nA -> C -> D\n");
}

TEST_CASE("corpus run exits 0 iff the matrix is green") {
  CliResult r = run_cli({"corpus", "run"});
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("golden checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("stdin is accepted when FILE is dash") {
  std::istringstream fake_stdin("model tiny {\n  endo X: {0, 1}\n  X = 1\n}\n");
  std::streambuf* saved = std::cin.rdbuf(fake_stdin.rdbuf());
  CliResult r = run_cli({"validate", "-"});
  std::cin.rdbuf(saved);
  CHECK(r.exit_code == causal::cli::kExitOk);
  CHECK(r.out.find("ok: model tiny") != std::string::npos);
}

TEST_CASE("color is applied only when enabled") {
  CliResult plain = run_cli({"cause", fixture("rock_throwing.scm-model"), "--context",
                             "(U_ST=1, U_BT=1)", "--query", "ST=1 of BS=1", "--definition",
                             "modified"},
                            false);
  CHECK(plain.out.find("\x1b[") == std::string::npos);
  CliResult colored = run_cli({"cause", fixture("rock_throwing.scm-model"), "--context",
                               "(U_ST=1, U_BT=1)", "--query", "ST=1 of BS=1", "--definition",
                               "modified"},
                              true);
  CHECK(colored.out.find("\x1b[32m") != std::string::npos);
}

TEST_CASE("fuzz subcommands run clean on small counts") {
  CliResult props = run_cli({"fuzz", "properties", "--seed", "9", "-n", "5"});
  CHECK(props.exit_code == causal::cli::kExitOk);
  CHECK(props.out.find("0 violations") != std::string::npos);

  CliResult red = run_cli({"fuzz", "reductions", "--seed", "9", "--formulas", "20"});
  CHECK(red.exit_code == causal::cli::kExitOk);
  CHECK(red.out.find("0 mismatches") != std::string::npos);
}
