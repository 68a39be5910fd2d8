// bruhatkit -- command-line front end for the exact Bruhat toolkit.
//
// Verbs: compare, chain, decompose, closure-test, relpos, grade,
// oracle-check.  Inputs are file paths or inline JSON (an argument starting
// with '[' or '{' is parsed in place).  All output is JSON on stdout;
// --pretty indents it.  Exit codes: 0 ok, 1 oracle mismatch, 2 parse error,
// 3 domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bruhatkit/decompose.hpp"
#include "bruhatkit/descent.hpp"
#include "bruhatkit/flag.hpp"
#include "bruhatkit/json_io.hpp"
#include "bruhatkit/oracle.hpp"
#include "bruhatkit/schubert.hpp"

namespace {

using bruhatkit::Json;

bool log_enabled() {
  const char* v = std::getenv("BRUHATKIT_LOG");
  return v != nullptr && *v != '\0';
}

void log_note(const std::string& message) {
  if (log_enabled()) std::cerr << "[bruhatkit] " << message << "\n";
}

Json load_json(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
    return Json::parse(arg);
  }
  std::ifstream in(arg);
  if (!in) throw bruhatkit::ParseError("cannot open input file '" + arg + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Json::parse(buffer.str());
}

void emit(const Json& out, bool pretty) {
  if (pretty) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bruhatkit;

  CLI::App app{"exact toolkit for the infinite Bruhat order, column-finite "
               "matrix algebra, Bruhat factorization and flag gradations"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string sigma_arg, tau_arg, matrix_arg, f_arg, e_arg, suite;
  int max_steps = 100;
  int bound = 0;
  int oracle_n = 3;
  int oracle_p = 2;

  auto* compare = app.add_subcommand("compare", "Bruhat comparison sigma <= tau");
  compare->add_option("--sigma", sigma_arg, "permutation (JSON or file)")->required();
  compare->add_option("--tau", tau_arg, "permutation (JSON or file)")->required();
  compare->add_option("--bound", bound, "verification bound for non-identity tails");

  auto* chain = app.add_subcommand("chain", "descent chain from tau toward sigma");
  chain->add_option("--sigma", sigma_arg, "target permutation")->required();
  chain->add_option("--tau", tau_arg, "start permutation")->required();
  chain->add_option("--max-steps", max_steps, "step budget");
  chain->add_option("--bound", bound, "verification bound for non-identity tails");

  auto* decompose = app.add_subcommand("decompose", "Bruhat factorization g = b sigma c");
  decompose->add_option("--matrix", matrix_arg, "matrix (JSON or file)")->required();

  auto* closure = app.add_subcommand("closure-test", "Schubert-closure membership via Y_sigma");
  closure->add_option("--sigma", sigma_arg, "cell label")->required();
  closure->add_option("--matrix", matrix_arg, "matrix (JSON or file)")->required();

  auto* relpos = app.add_subcommand("relpos", "relative position of two flags");
  relpos->add_option("--f", f_arg, "flag F (JSON or file)")->required();
  relpos->add_option("--e", e_arg, "flag E (JSON or file)")->required();

  auto* grade = app.add_subcommand("grade", "gradation of the intersection of two flags");
  grade->add_option("--f", f_arg, "flag F (JSON or file)")->required();
  grade->add_option("--e", e_arg, "flag E (JSON or file)")->required();

  auto* oracle_check = app.add_subcommand("oracle-check", "cross-validate against brute force");
  oracle_check->add_option("--suite", suite, "bruhat | decomp | closure | flags")->required();
  oracle_check->add_option("--n", oracle_n, "window / symmetric group size");
  oracle_check->add_option("--p", oracle_p, "field characteristic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (compare->parsed()) {
      const Permutation s = permutation_from_json(load_json(sigma_arg));
      const Permutation t = permutation_from_json(load_json(tau_arg));
      Json out;
      if (s.is_finitely_supported() && t.is_finitely_supported()) {
        out = Json{{"leq", bruhat_leq(s, t)}};
      } else {
        if (bound < 1) {
          throw Error("UndecidableWithoutBound",
                      "non-identity tails need --bound B for a verified-up-to answer");
        }
        const BoundedComparison cmp = bruhat_leq_bounded(s, t, bound);
        out = Json{{"leq", cmp.leq}, {"exact", cmp.exact}, {"verified_up_to", cmp.bound}};
      }
      emit(out, pretty);
    } else if (chain->parsed()) {
      const Permutation s = permutation_from_json(load_json(sigma_arg));
      const Permutation t = permutation_from_json(load_json(tau_arg));
      const DescentChain result = chain_toward(s, t, max_steps, bound);
      log_note("chain of " + std::to_string(result.steps.size()) + " steps, terminated=" +
               (result.terminated ? "true" : "false"));
      Json steps = Json::array();
      for (const auto& step : result.steps) {
        steps.push_back(
            Json{{"p", step.p}, {"q", step.q}, {"result", permutation_to_json(step.result)}});
      }
      emit(steps, pretty);
    } else if (decompose->parsed()) {
      const ColMatrix g = colmatrix_from_json(load_json(matrix_arg));
      const BruhatFactorization fact = bruhat_decompose(g);
      const ColMatrix check =
          multiply(fact.b, multiply(permutation_matrix(g.ring(), fact.sigma), fact.c));
      emit(Json{{"b", colmatrix_to_json(fact.b)},
                {"sigma", permutation_to_json(fact.sigma)},
                {"c", colmatrix_to_json(fact.c)},
                {"verified", check == g}},
           pretty);
    } else if (closure->parsed()) {
      const Permutation s = permutation_from_json(load_json(sigma_arg));
      const ColMatrix g = colmatrix_from_json(load_json(matrix_arg));
      const auto coset = closure_cover_check(s, g);
      emit(Json{{"in_closure", coset.has_value()},
                {"coset", permutation_to_json(coset_label(g))}},
           pretty);
    } else if (relpos->parsed()) {
      const Flag f = flag_from_json(load_json(f_arg));
      const Flag e = flag_from_json(load_json(e_arg));
      emit(Json{{"w", permutation_to_json(relative_position(f, e))}}, pretty);
    } else if (grade->parsed()) {
      const Flag f = flag_from_json(load_json(f_arg));
      const Flag e = flag_from_json(load_json(e_arg));
      const GradationTable table = intersection_gradation(f, e);
      emit(Json{{"w", permutation_to_json(relative_position(f, e))},
                {"cells", gradation_to_json(table)}},
           pretty);
    } else if (oracle_check->parsed()) {
      oracle::OracleReport report;
      if (suite == "bruhat") {
        report = oracle::run_bruhat_suite(oracle_n);
      } else if (suite == "decomp") {
        report = oracle::run_decomp_suite(oracle_n, oracle_p);
      } else if (suite == "closure") {
        report = oracle::run_closure_suite(oracle_n, oracle_p);
      } else if (suite == "flags") {
        report = oracle::run_flags_suite(oracle_n, oracle_p);
      } else {
        throw ParseError("unknown suite '" + suite + "'");
      }
      emit(Json{{"suite", report.suite},
                {"cases", report.cases},
                {"mismatches", report.mismatches}},
           pretty);
      if (!report.ok()) {
        std::cerr << "first counterexample: " << report.first_counterexample << "\n";
        return 1;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
