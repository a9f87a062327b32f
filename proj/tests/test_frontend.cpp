#include <cmath>
#include <numbers>
#include <random>

#include "spinor_gates/frontend/circuit_file.hpp"
#include "spinor_gates/frontend/expression.hpp"
#include "spinor_gates/frontend/job.hpp"
#include "spinor_gates/frontend/report_io.hpp"
#include "support.hpp"

using namespace spinor_gates;
using namespace sg_test;
using K = FactorKind;

namespace {

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    (void)parse_expression(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text << ": " << e.what();
    EXPECT_EQ(e.column(), column) << text << ": " << e.what();
  }
}

}  // namespace

// ------------------------------------------------------------- expressions

TEST(Expression, LeftZeroMonomial) {
  const auto e = parse_expression("[-i]@1 * (+)@1");
  EXPECT_TRUE(elements_equivalent(e, AlgebraElement(label_monomial(parse_label("0", "L")), 1.0), 0.0));
  EXPECT_EQ(e.to_string(), "[-i]@1*(+)@1");
}

TEST(Expression, TauSumSquared) {
  const auto t = parse_expression("tau+@1 + tau-@1");
  EXPECT_TRUE(elements_equivalent(t * t, AlgebraElement::identity(1)));
  EXPECT_EQ(parse_expression("(tau+@1 + tau-@1)*(tau+@1 + tau-@1)").canonical().to_string(), "1");
}

TEST(Expression, GammaSquared) {
  EXPECT_EQ(parse_expression("g0@1 * g0@1").canonical().to_string(), "1");
  EXPECT_EQ(parse_expression("g1@1 g1@1").canonical().to_string(), "-1");
}

TEST(Expression, BuiltinsMatchLibraryElements) {
  EXPECT_TRUE(elements_equivalent(parse_expression("tauL-@2", 3), tau_operator(TauKind::LMinus, 2, 3), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("tauR+@1"), tau_operator(TauKind::RPlus, 1, 1), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("S03@1"), cartan_generator(Pair::P03, 1, 1), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("S12@2"), cartan_generator(Pair::P12, 2, 2), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("Gamma@1"), handedness_operator(1, 1), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("g2@1"), gamma_as_element(2, 1, 1), 0.0));
}

TEST(Expression, ScalarsAndDagger) {
  const auto e = parse_expression("(0.5+0.25i) * (+)@1'");
  const auto expected = cplx{0.5, 0.25} * factor_element({Pair::P12, K::NilPlus}, 1, 1).dagger();
  EXPECT_TRUE(elements_equivalent(e, expected, 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("2i"), AlgebraElement::scalar(1, cplx{0, 2}), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("(+i)"), AlgebraElement::scalar(1, cplx{0, 1}), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("1e-3 I"), AlgebraElement::scalar(1, 1e-3), 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("(tau+@1)'"), tau_operator(TauKind::Minus, 1, 1), 0.0));
}

TEST(Expression, PrecedenceAndImplicitProduct) {
  const auto a = parse_expression("[+]@1 + 2 [-]@1 (+)@2");
  auto expected = projector12(true, 1, 2);
  expected += 2.0 * (projector12(false, 1, 2) * factor_element({Pair::P12, K::NilPlus}, 2, 2));
  EXPECT_TRUE(elements_equivalent(a, expected, 0.0));
  EXPECT_TRUE(elements_equivalent(parse_expression("-(+)@1 - -(+)@1"), AlgebraElement::zero(1), 0.0));
}

TEST(Expression, QubitCountOption) {
  EXPECT_EQ(parse_expression("[+]@1", 4).size(), 4);
  EXPECT_THROW(parse_expression("[+]@3", 2), ContractViolation);
  EXPECT_EQ(parse_expression("2").size(), 1);
}

TEST(Expression, Errors) {
  expect_parse_error("[+]@0", 1, 5);
  expect_parse_error("foo@1", 1, 1);
  expect_parse_error("(+)@1 +", 1, 8);
  expect_parse_error("(+)@1 $", 1, 7);
  expect_parse_error("[x]@1", 1, 1);
  expect_parse_error("g0", 1, 1);
  expect_parse_error("(+)@1 *\n  (", 2, 4);
  expect_parse_error("", 1, 1);
  expect_parse_error("[+]@", 1, 5);
}

TEST(Expression, RoundTripOfRandomElements) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 4;
    auto e = random_element(n, 1 + t % 7, rng);
    if (t % 3 == 0) e = e.canonical();
    const std::string printed = e.to_string();
    const auto back = parse_expression(printed, n);
    EXPECT_EQ(back.to_string(), printed);
    EXPECT_TRUE(elements_equivalent(back, e, 0.0)) << printed;
  }
}

TEST(Expression, RoundTripOfSpecialCoefficients) {
  AlgebraElement e(2);
  const auto m = pair_monomial(K::NilPlus, K::ProjMinus, 2, 2);
  for (const cplx c : {cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}, cplx{-0.1, -2.5}, cplx{1e-7, 3e5}}) {
    const AlgebraElement x(m, c);
    EXPECT_TRUE(elements_equivalent(parse_expression(x.to_string(), 2), x, 0.0)) << x.to_string();
    const auto s = AlgebraElement::scalar(2, c);
    EXPECT_TRUE(elements_equivalent(parse_expression(s.to_string(), 2), s, 0.0)) << s.to_string();
  }
}

// ------------------------------------------------------------ circuit files

TEST(CircuitFile, ParsesAllGates) {
  const auto c = parse_circuit("# demo\nH 1\nphase 2 pi/4  # trailing\n\nCNOT 1 3\nROT 2 0.5 -pi\n");
  EXPECT_EQ(c.n, 3);
  ASSERT_EQ(c.gates.size(), 4u);
  EXPECT_EQ(c.gates[0].kind, GateKind::Hadamard);
  EXPECT_EQ(c.gates[1].kind, GateKind::Phase);
  EXPECT_DOUBLE_EQ(c.gates[1].angle1, std::numbers::pi / 4);
  EXPECT_EQ(c.gates[2].kind, GateKind::CNot);
  EXPECT_EQ(c.gates[2].target, 3);
  EXPECT_EQ(c.gates[3].kind, GateKind::Composite);
  EXPECT_DOUBLE_EQ(c.gates[3].angle2, -std::numbers::pi);
}

TEST(CircuitFile, MinimumQubitCount) {
  EXPECT_EQ(parse_circuit("H 1\n", 3).n, 3);
  EXPECT_EQ(parse_circuit("").n, 1);
}

TEST(CircuitFile, Angles) {
  EXPECT_DOUBLE_EQ(*parse_angle("1.25"), 1.25);
  EXPECT_DOUBLE_EQ(*parse_angle("-pi/2"), -std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(*parse_angle("3*pi/8"), 3 * std::numbers::pi / 8);
  EXPECT_DOUBLE_EQ(*parse_angle("0.5*pi"), std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(*parse_angle("pi"), std::numbers::pi);
  EXPECT_FALSE(parse_angle("tau"));
  EXPECT_FALSE(parse_angle("pi/0"));
  EXPECT_FALSE(parse_angle("2pi"));
}

TEST(CircuitFile, ErrorsCarryPosition) {
  struct Case {
    const char* text;
    int line;
    int column;
  };
  for (const auto& c : {Case{"H 1\nX 2\n", 2, 1}, Case{"H 0\n", 1, 3}, Case{"H 1 2\n", 1, 1},
                        Case{"PHASE 1 abc\n", 1, 9}, Case{"CNOT 2 2\n", 1, 8}, Case{"\n\n  H q\n", 3, 5}}) {
    try {
      (void)parse_circuit(c.text);
      ADD_FAILURE() << "no error for " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_EQ(e.column(), c.column) << c.text;
    }
  }
}

// ---------------------------------------------------------------- job files

TEST(JobFile, UniformAndExplicit) {
  const auto job = parse_job(R"({"p": 2, "alphas": "uniform", "target": "10"})");
  EXPECT_EQ(job.p, 2);
  EXPECT_EQ(job.alphas.size(), 4u);
  EXPECT_EQ(job.target_index(), 2u);
  EXPECT_FALSE(job.iterations);

  const auto explicit_job =
      parse_job(R"({"p": 1, "alphas": [[0.6, 0], [0, 0.8]], "target": "1", "iterations": 4})");
  EXPECT_EQ(explicit_job.alphas[1], cplx(0, 0.8));
  EXPECT_EQ(explicit_job.iterations, 4);
}

TEST(JobFile, Errors) {
  EXPECT_THROW(parse_job("{"), ParseError);
  EXPECT_THROW(parse_job("[]"), ParseError);
  EXPECT_THROW(parse_job(R"({"alphas": "uniform", "target": "0"})"), ParseError);
  EXPECT_THROW(parse_job(R"({"p": 0, "alphas": "uniform", "target": ""})"), ParseError);
  EXPECT_THROW(parse_job(R"({"p": 2, "alphas": [[1, 0]], "target": "00"})"), ParseError);
  EXPECT_THROW(parse_job(R"({"p": 1, "alphas": [[1], [0, 1]], "target": "0"})"), ParseError);
  EXPECT_THROW(parse_job(R"({"p": 2, "alphas": "uniform", "target": "012"})"), ParseError);
  EXPECT_THROW(parse_job(R"({"p": 2, "alphas": "uniform", "target": "01", "iterations": -1})"), ParseError);
  EXPECT_THROW(parse_job(R"({"p": 2, "alphas": "flat", "target": "01"})"), ParseError);
  try {
    (void)parse_job("{\n  \"p\": 2,\n  oops\n}");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

// ------------------------------------------------------------ serialization

TEST(StateDump, CsvIsLabelSortedAndOmitsZeros) {
  StateVector s(2, Rep::Chiral);
  s.add(parse_label("11", "LL"), cplx{0.5, -0.25});
  s.add(parse_label("00", "RL"), 1.0);
  s.add(parse_label("01", "LL"), 1e-14);
  const std::string csv = state_to_csv(s, 8);
  EXPECT_EQ(csv, "bitstring,sector,real,imag\n00,RL,1,0\n11,LL,0.5,-0.25\n");
}

TEST(StateDump, JsonRecords) {
  const auto s = uniform_superposition(1, Sector::Left);
  const auto j = state_to_json(s);
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["rep"], "chiral");
  ASSERT_EQ(j["amplitudes"].size(), 2u);
  EXPECT_EQ(j["amplitudes"][0]["bitstring"], "0");
  EXPECT_EQ(j["amplitudes"][1]["sector"], "L");
  EXPECT_DOUBLE_EQ(j["amplitudes"][1]["re"].get<double>(), 1.0 / std::sqrt(2.0));
}

TEST(StateDump, TableUsesEightDigits) {
  const Circuit c{2, {GateSpec::h(1), GateSpec::cx(1, 2)}};
  const auto table = state_to_table(apply_circuit(c, ket("00", 'L')));
  EXPECT_NE(table.find("00         LL            0.70710678"), std::string::npos) << table;
  EXPECT_NE(table.find("11         LL            0.70710678"), std::string::npos) << table;
  EXPECT_EQ(table.find("01"), std::string::npos);
}

TEST(ReportJson, FieldsAndTrace) {
  const auto r = run(uniform_amplitudes(4), 5);
  const auto j = report_to_json(r, "0101");
  EXPECT_EQ(j["iterations"], 3);
  EXPECT_EQ(j["optimal_iterations"], 3);
  EXPECT_EQ(j["target"], "0101");
  EXPECT_EQ(j["trace"].size(), 4u);
  EXPECT_EQ(j["trace"][3]["probability"].get<double>(), r.success_probability);
  EXPECT_EQ(j.dump(), report_to_json(run(uniform_amplitudes(4), 5), "0101").dump());
  const auto csv = trace_to_csv(r);
  EXPECT_EQ(csv.substr(0, 30), "iteration,probability\n0,0.0625");
}

TEST(ReportJson, VerifyReport) {
  oracle::VerifyReport r;
  r.tolerance = 1e-12;
  r.checks.push_back({.name = "x", .passed = 3, .failed = 1, .max_deviation = 0.5, .mismatches = {"bad"}});
  const auto j = verify_to_json(r);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["failed"], 1);
  EXPECT_EQ(j["checks"][0]["passed"], 3);
  EXPECT_EQ(j["checks"][0]["max_abs_deviation"], 0.5);
}
