// spinor-gates: command line front end.
//
// Exit codes: 0 success, 1 verification failure or contract violation,
// 2 usage or input syntax error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "spinor_gates/frontend/circuit_file.hpp"
#include "spinor_gates/frontend/expression.hpp"
#include "spinor_gates/frontend/job.hpp"
#include "spinor_gates/frontend/report_io.hpp"
#include "spinor_gates/oracle/sweeps.hpp"
#include "spinor_gates/spinor_gates.hpp"

namespace sg = spinor_gates;

namespace {

/// Bad command line value or unreadable input file.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  try {
    return sg::read_text_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::optional<double> tol;
  bool json = false;
};

int cmd_verify(const VerifyOptions& o) {
  double tol = sg::kDefaultTolerance;
  if (const char* env = std::getenv("SPINOR_GATES_TOL"); env && *env) {
    char* end = nullptr;
    tol = std::strtod(env, &end);
    if (*end != '\0' || !(tol >= 0.0)) throw UsageError(std::string("invalid SPINOR_GATES_TOL '") + env + "'");
  }
  if (o.tol) tol = *o.tol;

  const auto report = sg::oracle::verify_all(tol);
  if (o.json) {
    std::cout << sg::verify_to_json(report).dump(2) << "\n";
  } else {
    std::printf("tolerance %s\n", sg::format_sig(tol, 3).c_str());
    for (const auto& c : report.checks) {
      std::printf("%-4s  %-38s  passed %6d  failed %4d  max deviation %s\n", c.failed == 0 ? "PASS" : "FAIL",
                  c.name.c_str(), c.passed, c.failed, sg::format_sig(c.max_deviation, 3).c_str());
    }
    std::printf("%s: %d mismatch(es)\n", report.ok() ? "ok" : "FAILED", report.total_failed());
  }
  for (const auto& c : report.checks) {
    for (const auto& m : c.mismatches) std::cerr << c.name << ": " << m << "\n";
  }
  return report.ok() ? 0 : 1;
}

// -------------------------------------------------------------- simulate

struct SimulateOptions {
  std::string circuit;
  std::string init;
  std::string rep = "chiral";
  std::string sector;
  int qubits = 0;
  std::string out = "table";
  bool check = false;
};

int cmd_simulate(const SimulateOptions& o) {
  const std::string text = read_input(o.circuit);
  const int min_qubits = std::max(o.qubits, static_cast<int>(o.init.size()));
  const sg::Circuit circuit = sg::parse_circuit(text, min_qubits);
  const int n = circuit.n;

  const std::string bits = o.init.empty() ? std::string(static_cast<std::size_t>(n), '0') : o.init;
  if (static_cast<int>(bits.size()) != n) {
    throw UsageError("--init has " + std::to_string(bits.size()) + " bits but the circuit uses " + std::to_string(n) +
                     " qubits");
  }

  const bool chiral = o.rep == "chiral";
  char sector = chiral ? 'L' : '+';
  if (!o.sector.empty()) {
    sector = o.sector[0];
    const auto s = sg::sector_from_char(sector);
    if (o.sector.size() != 1 || !s || (sg::rep_of(*s) == sg::Rep::Chiral) != chiral)
      throw UsageError("--sector must be L or R for chiral, + or - for parity");
  }
  const auto label = sg::parse_label(bits, std::string(static_cast<std::size_t>(n), sector));
  const sg::StateVector result = sg::apply_circuit(circuit, sg::basis_state(label));

  if (o.out == "json") {
    std::cout << sg::state_to_json(result).dump(2) << "\n";
  } else if (o.out == "csv") {
    std::cout << sg::state_to_csv(result);
  } else {
    std::cout << sg::state_to_table(result);
  }

  if (o.check) {
    if (n > sg::oracle::kMaxReferenceQubits) throw UsageError("--check supports at most 12 qubits");
    double leak = 0.0;
    const auto got = sg::oracle::to_dense(result, *sg::sector_from_char(sector), leak);
    const auto want = sg::oracle::simulate(circuit, sg::oracle::computational_state(n, sg::bitstring_index(bits)));
    const double dev = std::max(leak, sg::oracle::max_abs_diff(got, want));
    std::cerr << "reference simulator deviation " << sg::format_sig(dev, 3) << "\n";
    if (dev > sg::kDefaultTolerance) return 1;
  }
  return 0;
}

// --------------------------------------------------------------- extract

struct ExtractOptions {
  std::string job;
  std::string trace;
  std::optional<int> iterations;
  bool check_states = false;
};

int cmd_extract(const ExtractOptions& o) {
  const auto job = sg::parse_job(read_input(o.job));
  const auto iterations = o.iterations ? o.iterations : job.iterations;
  const auto report = sg::run(job.alphas, job.target_index(), iterations);
  auto doc = sg::report_to_json(report, job.target);
  if (o.check_states) {
    if (job.p > 8) throw UsageError("--check-states supports p <= 8");
    const auto states = sg::run_on_states(job.alphas, job.target_index(), sg::Sector::Left, iterations);
    doc["state_route_max_difference"] = sg::max_abs_diff(states.final_state, report.final_state);
  }
  std::cout << doc.dump(2) << "\n";
  if (!o.trace.empty()) write_file(o.trace, sg::trace_to_csv(report));
  return 0;
}

// ------------------------------------------------------------------ eval

struct EvalOptions {
  std::string expression;
  std::optional<int> qubits;
  bool raw = false;
  std::optional<int> digits;
};

double round_sig(double x, int digits) { return std::strtod(sg::format_sig(x, digits).c_str(), nullptr); }

int cmd_eval(const EvalOptions& o) {
  const auto ast = sg::parse_expression_ast(o.expression);
  if (o.qubits && *o.qubits < ast.max_qubit()) {
    throw UsageError("expression uses qubit " + std::to_string(ast.max_qubit()) + " but --qubits is " +
                     std::to_string(*o.qubits));
  }
  sg::AlgebraElement e = sg::evaluate(ast, o.qubits.value_or(std::max(1, ast.max_qubit())));
  if (o.digits) {
    sg::AlgebraElement rounded(e.size());
    const sg::AlgebraElement full = e.expanded();
    for (const auto& [m, c] : full.terms()) {
      rounded.add_term(m, {round_sig(c.real(), *o.digits), round_sig(c.imag(), *o.digits)});
    }
    e = rounded;
  }
  std::cout << (o.raw ? e : e.canonical()).to_string() << "\n";
  return 0;
}

// ---------------------------------------------------------------- tables

int cmd_tables() {
  for (const sg::Pair pair : {sg::Pair::P03, sg::Pair::P12}) {
    std::cout << (pair == sg::Pair::P03 ? "# products, 03 pair\n" : "# products, 12 pair\n");
    for (const auto f : sg::kAllKinds) {
      for (const auto g : sg::kAllKinds) {
        const auto a = sg::factor_element({pair, f}, 1, 1);
        const auto b = sg::factor_element({pair, g}, 1, 1);
        std::cout << a.to_string() << " * " << b.to_string() << " = " << (a * b).to_string() << "\n";
      }
    }
  }
  std::cout << "# daggers\n";
  for (const sg::Pair pair : {sg::Pair::P03, sg::Pair::P12}) {
    for (const auto f : sg::kAllKinds) {
      const auto a = sg::factor_element({pair, f}, 1, 1);
      std::cout << "(" << a.to_string() << ")' = " << a.dagger().to_string() << "\n";
    }
  }
  std::cout << "# Cartan generators\n";
  std::cout << "S03 = " << sg::cartan_generator(sg::Pair::P03, 1, 1).to_string() << "\n";
  std::cout << "S12 = " << sg::cartan_generator(sg::Pair::P12, 1, 1).to_string() << "\n";
  return 0;
}

// ----------------------------------------------------------------- bench

template <class F>
double time_ms(F&& f, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

sg::AlgebraElement random_element(int n, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::normal_distribution<double> gauss;
  sg::AlgebraElement e(n);
  for (int t = 0; t < terms; ++t) {
    sg::Monomial m(n);
    for (int l = 0; l < n; ++l) {
      m.set_slot(l, {sg::kAllKinds[static_cast<std::size_t>(kind(rng))], sg::kAllKinds[static_cast<std::size_t>(kind(rng))]});
    }
    e.add_term(m, {gauss(rng), gauss(rng)});
  }
  return e;
}

int cmd_bench() {
  std::mt19937_64 rng(7);
  std::printf("%-44s %12s\n", "benchmark", "ms/run");
  for (const int n : {2, 4, 8}) {
    const auto a = random_element(n, 64, rng);
    const auto b = random_element(n, 64, rng);
    volatile std::size_t sink = 0;
    const double ms = time_ms([&] { sink = (a * b).term_count(); }, 50);
    char name[64];
    std::snprintf(name, sizeof(name), "element product n=%d, 64x64 terms", n);
    std::printf("%-44s %12.4f\n", name, ms);
  }
  for (const int n : {4, 8, 10}) {
    char name[64];
    std::snprintf(name, sizeof(name), "uniform superposition n=%d", n);
    const double ms = time_ms([&] { (void)sg::uniform_superposition(n); }, 3);
    std::printf("%-44s %12.4f\n", name, ms);
  }
  for (const int p : {4, 8, 12, 16}) {
    char name[64];
    std::snprintf(name, sizeof(name), "extraction sweep p=%d (all targets, <=16)", p);
    const auto alphas = sg::uniform_amplitudes(p);
    const std::size_t targets = std::min<std::size_t>(alphas.size(), 16);
    const double ms = time_ms([&] {
      for (std::size_t k = 0; k < targets; ++k) (void)sg::run(alphas, k);
    }, 1);
    std::printf("%-44s %12.4f\n", name, ms);
  }
  for (const int p : {2, 4, 6}) {
    char name[64];
    std::snprintf(name, sizeof(name), "extraction on algebra states p=%d", p);
    const auto alphas = sg::uniform_amplitudes(p);
    const double ms = time_ms([&] { (void)sg::run_on_states(alphas, 0, sg::Sector::Left); }, 1);
    std::printf("%-44s %12.4f\n", name, ms);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic nilpotent/projector algebra for quantum gates and state extraction"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the algebra, gates and extraction against matrix oracles");
  verify_cmd->add_option("--tol", verify.tol, "Comparison tolerance (overrides SPINOR_GATES_TOL)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--json", verify.json, "Print the report as JSON");

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a circuit file on a basis state");
  simulate_cmd->add_option("circuit", simulate.circuit, "Circuit file")->required();
  simulate_cmd->add_option("--init", simulate.init, "Initial bitstring, qubit 1 first (default all zeros)")
      ->check([](const std::string& s) {
        return s.find_first_not_of("01") == std::string::npos && !s.empty() ? "" : "must be a bitstring";
      });
  simulate_cmd->add_option("--rep", simulate.rep, "State representation")
      ->check(CLI::IsMember({"chiral", "parity"}));
  simulate_cmd->add_option("--sector", simulate.sector, "L or R (chiral), + or - (parity)");
  simulate_cmd->add_option("--qubits", simulate.qubits, "Minimum qubit count")->check(CLI::Range(1, sg::kMaxQubits));
  simulate_cmd->add_option("--out", simulate.out, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  simulate_cmd->add_flag("--check", simulate.check, "Compare with the reference state-vector simulator");

  ExtractOptions extract;
  auto* extract_cmd = app.add_subcommand("extract", "Run state extraction from a job file");
  extract_cmd->add_option("job", extract.job, "Job file (JSON)")->required();
  extract_cmd->add_option("--trace", extract.trace, "Write the per-iteration success probability as CSV");
  extract_cmd->add_option("--iterations", extract.iterations, "Override the iteration count")
      ->check(CLI::NonNegativeNumber);
  extract_cmd->add_flag("--check-states", extract.check_states,
                        "Repeat the run on algebra states and report the difference (p <= 8)");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression and print its canonical form");
  eval_cmd->add_option("expression", eval.expression, "Expression")->required();
  eval_cmd->add_option("--qubits", eval.qubits, "Qubit count (default: largest index used)")
      ->check(CLI::Range(1, sg::kMaxQubits));
  eval_cmd->add_flag("--raw", eval.raw, "Print stored terms without canonicalizing");
  eval_cmd->add_option("--digits", eval.digits, "Round coefficients to this many significant digits")
      ->check(CLI::Range(1, 17));

  auto* tables_cmd = app.add_subcommand("tables", "Print the factor product, dagger and generator tables");
  auto* bench_cmd = app.add_subcommand("bench", "Time element products and extraction sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify);
    if (*simulate_cmd) return cmd_simulate(simulate);
    if (*extract_cmd) return cmd_extract(extract);
    if (*eval_cmd) return cmd_eval(eval);
    if (*tables_cmd) return cmd_tables();
    if (*bench_cmd) return cmd_bench();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sg::ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const sg::Unextractable& e) {
    std::cerr << "unextractable: " << e.what() << "\n";
    return 1;
  } catch (const sg::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
