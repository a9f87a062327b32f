#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

namespace {

struct Result {
  int exit_code;
  std::string out;
};

Result run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string("\"") + SPINOR_GATES_CLI + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& name) { return std::string("\"") + SPINOR_GATES_SAMPLES + "/" + name + "\""; }

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(SPINOR_GATES_TEST_TMP) + "/" + name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST(Cli, VerifyPasses) {
  const auto r = run_cli("verify");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("ok: 0 mismatch(es)"), std::string::npos) << r.out;
}

TEST(Cli, VerifyJson) {
  const auto r = run_cli("verify --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["failed"], 0);
}

TEST(Cli, VerifyToleranceFromEnvironment) {
  EXPECT_EQ(run_cli("verify", false).exit_code, 0);
  const std::string with_env = "SPINOR_GATES_TOL=1e-10 \"" + std::string(SPINOR_GATES_CLI) + "\" verify --json";
  FILE* pipe = popen(with_env.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(out)["tolerance"].get<double>(), 1e-10);
}

TEST(Cli, SimulateBellPair) {
  const auto r = run_cli("simulate " + sample("bell.circ"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("00         LL            0.70710678"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("11         LL            0.70710678"), std::string::npos) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, SimulateJsonAndCheck) {
  const auto r = run_cli("simulate " + sample("bell.circ") + " --rep parity --sector - --out json --check");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rep"], "parity");
  ASSERT_EQ(j["amplitudes"].size(), 2u);
  EXPECT_EQ(j["amplitudes"][1]["bitstring"], "11");
  EXPECT_EQ(j["amplitudes"][1]["sector"], "--");
}

TEST(Cli, SimulateInit) {
  const auto r = run_cli("simulate " + sample("bell.circ") + " --init 10 --out csv");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("00,LL,0.70710678"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("11,LL,-0.70710678"), std::string::npos) << r.out;
}

TEST(Cli, SimulateIsDeterministic) {
  const auto a = run_cli("simulate " + sample("ghz3.circ") + " --out json");
  const auto b = run_cli("simulate " + sample("ghz3.circ") + " --out json");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExtractUniformFourQubits) {
  const auto r = run_cli("extract " + sample("grover_p4.json"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["iterations"], 3);
  EXPECT_EQ(j["trace"].size(), 4u);
  EXPECT_EQ(run_cli("extract " + sample("grover_p4.json")).out, r.out);
}

TEST(Cli, ExtractTraceFileAndStateCheck) {
  const std::string trace = std::string(SPINOR_GATES_TEST_TMP) + "/trace.csv";
  const auto r = run_cli("extract " + sample("grover_p2.json") + " --check-states --trace \"" + trace + "\"");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["iterations"], 1);
  EXPECT_LT(j["state_route_max_difference"].get<double>(), 1e-12);
  std::ifstream in(trace);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "iteration,probability");
}

TEST(Cli, Eval) {
  const auto r = run_cli("eval \"(tau+@1 + tau-@1)*(tau+@1 + tau-@1)\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run_cli("eval \"[-i]@1 (+)@1\"").out, "[-i]@1*(+)@1\n");
  EXPECT_EQ(run_cli("eval \"g0@1 g0@1\"").out, "1\n");
}

TEST(Cli, EvalDigits) {
  // Hadamard squared in the six-term form leaves rounding residue at the last bit.
  const std::string h = "0.7071067811865476*([+]@1 - [-]@1 + tau-@1 + tau+@1)";
  EXPECT_EQ(run_cli("eval --digits 12 \"" + h + " * " + h + "\"").out, "1\n");
}

TEST(Cli, Tables) {
  const auto r = run_cli("tables");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("(+)@1 * (-)@1 = -[+]@1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(+i)@1 * (+i)@1 = 0"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("simulate").exit_code, 2);
  EXPECT_EQ(run_cli("simulate /nonexistent/file.circ").exit_code, 2);
  EXPECT_EQ(run_cli("simulate " + sample("bell.circ") + " --rep sideways").exit_code, 2);
  EXPECT_EQ(run_cli("simulate " + sample("bell.circ") + " --rep chiral --sector +").exit_code, 2);
  EXPECT_EQ(run_cli("simulate " + sample("bell.circ") + " --init 1").exit_code, 2);
  EXPECT_EQ(run_cli("eval \"[+]@0\"").exit_code, 2);
  EXPECT_EQ(run_cli("eval --qubits 1 \"[+]@2\"").exit_code, 2);
  EXPECT_EQ(run_cli("verify --tol -1").exit_code, 2);
  const auto bad_circuit = write_temp("bad.circ", "H 1\nSWAP 1 2\n");
  const auto r = run_cli("simulate \"" + bad_circuit + "\"", true);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("line 2, column 1"), std::string::npos) << r.out;
  const auto bad_job = write_temp("bad.json", R"({"p": 2, "alphas": "uniform"})");
  EXPECT_EQ(run_cli("extract \"" + bad_job + "\"").exit_code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli("--help").exit_code, 0); }

TEST(Cli, UnextractableJobExitsOne) {
  const auto job = write_temp("zero_target.json", R"({"p": 1, "alphas": [[1, 0], [0, 0]], "target": "1"})");
  EXPECT_EQ(run_cli("extract \"" + job + "\"").exit_code, 1);
}

TEST(Cli, Bench) {
  const auto r = run_cli("bench");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("element product"), std::string::npos);
}
