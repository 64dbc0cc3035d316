// Command-line front end: closures, invariants, cover ideals, the power
// oracle, and the verification sweep.  All mathematics lives in the library;
// this file only parses options and formats results.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "idealis/io.hpp"

namespace {

using namespace idealis;

struct InputOptions {
  std::vector<std::size_t> blocks;
  std::string gens_spec;
  std::string graph_spec;
  bool adjacent_only = false;
  bool use_cover = false;
};

void add_input_options(CLI::App* cmd, InputOptions& input,
                       bool allow_cover = true) {
  cmd->add_option("--blocks", input.blocks,
                  "Block sizes m1,m2,... of the variable set")
      ->delimiter(',');
  cmd->add_option("--gens", input.gens_spec,
                  "Generators: JSON array of monomials, one per line, or @file");
  cmd->add_option("--graph", input.graph_spec,
                  "Graph JSON {\"blocks\":...,\"edges\":...,\"loops\":...} or @file");
  cmd->add_flag("--adjacent-only", input.adjacent_only,
                "\"complete\" edges join consecutive blocks only");
  if (allow_cover)
    cmd->add_flag("--cover", input.use_cover,
                  "Use the cover ideal of the graph instead of the edge ideal");
}

std::string instance_id(const InputOptions& input, const VariableSet& vars) {
  std::string id = "blocks=(";
  for (std::size_t i = 0; i < vars.block_count(); ++i) {
    if (i) id += ';';
    id += std::to_string(vars.block_size(i));
  }
  id += ')';
  if (!input.graph_spec.empty()) id += input.use_cover ? "+cover" : "+graph";
  return id;
}

MonomialIdeal resolve_ideal(const InputOptions& input) {
  if (!input.graph_spec.empty()) {
    if (!input.gens_spec.empty() || !input.blocks.empty())
      throw std::invalid_argument("give either --graph or --blocks/--gens");
    PartitionedGraph graph = graph_from_json(resolve_at_file(input.graph_spec),
                                             input.adjacent_only);
    return input.use_cover ? cover_ideal(graph) : edge_ideal(graph);
  }
  if (input.blocks.empty() || input.gens_spec.empty())
    throw std::invalid_argument("need --blocks and --gens, or --graph");
  if (input.use_cover)
    throw std::invalid_argument("--cover requires --graph");
  VariableSetPtr vars = make_variables(input.blocks);
  return ideal_from_text(vars, resolve_at_file(input.gens_spec));
}

void print_generators(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    std::cout << "zero ideal (no generators)\n";
    return;
  }
  for (const Monomial& g : ideal.generators()) std::cout << g.str() << '\n';
}

int run_closure(const InputOptions& input, std::optional<unsigned long> cap,
                bool as_json) {
  MonomialIdeal ideal = resolve_ideal(input);
  if (ideal.is_zero()) {
    std::cout << "zero ideal (its closure is the zero ideal)\n";
    return 0;
  }
  ClosureResult result =
      cap ? integral_closure(ideal, Natural(*cap)) : integral_closure(ideal);
  if (as_json) {
    std::cout << closure_to_json(result).dump(2) << '\n';
    return 0;
  }
  print_generators(result.closure);
  std::cout << "integrally closed: " << (result.was_closed ? "true" : "false")
            << '\n';
  for (const Monomial& g : result.added_generators)
    std::cout << "added: " << g.str() << '\n';
  return 0;
}

int run_invariants(const InputOptions& input, const std::string& hint_name,
                   bool as_json, bool as_csv) {
  MonomialIdeal ideal = resolve_ideal(input);
  IdealClassHint hint = IdealClassHint::Generic;
  if (hint_name == "strong-quasi-closure")
    hint = IdealClassHint::StrongQuasiClosure;
  else if (hint_name == "cover-ideal")
    hint = IdealClassHint::CoverIdeal;
  else if (hint_name == "principal")
    hint = IdealClassHint::Principal;
  InvariantReport report = invariant_report(ideal, hint);
  if (as_json)
    std::cout << report_to_json(report).dump(2) << '\n';
  else if (as_csv)
    std::cout << invariants_csv_row(instance_id(input, ideal.vars()), report)
              << '\n';
  else
    std::cout << report_to_text(report);
  return 0;
}

int run_cover_ideal(const InputOptions& input, bool as_json) {
  if (input.graph_spec.empty())
    throw std::invalid_argument("cover-ideal needs --graph");
  PartitionedGraph graph = graph_from_json(resolve_at_file(input.graph_spec),
                                           input.adjacent_only);
  MonomialIdeal cover = cover_ideal(graph);
  if (as_json) {
    Json doc;
    Json gens = Json::array();
    for (const Monomial& g : cover.generators()) gens.push_back(g.str());
    doc["generators"] = std::move(gens);
    doc["generator_count"] = cover.generator_count();
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  print_generators(cover);
  return 0;
}

int run_oracle(const InputOptions& input, const std::string& monomial_text,
               unsigned long k_max, bool as_json) {
  MonomialIdeal ideal = resolve_ideal(input);
  Monomial f = parse_monomial(ideal.vars_ptr(), monomial_text);
  std::optional<unsigned long> k = power_membership_oracle(f, ideal, k_max);
  if (as_json) {
    Json doc;
    doc["monomial"] = f.str();
    doc["k_max"] = k_max;
    if (k)
      doc["k"] = *k;
    else
      doc["k"] = nullptr;
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  if (k)
    std::cout << "certified: (" << f.str() << ")^" << *k << " lies in I^"
              << *k << '\n';
  else
    std::cout << "no certificate up to k = " << k_max << " (inconclusive)\n";
  return 0;
}

int run_verify(SweepConfig config, bool as_json) {
  if (config.checks.empty()) config.checks = known_checks();
  VerificationReport report = run_verification(config);
  if (as_json)
    std::cout << verification_to_json(report).dump(2) << '\n';
  else
    std::cout << verification_to_text(report);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact arithmetic for integral closures of monomial ideals and "
      "edge/cover ideals of partitioned graphs"};
  app.require_subcommand(1);

  InputOptions closure_input;
  std::optional<unsigned long> degree_cap;
  bool closure_json = false;
  CLI::App* closure_cmd =
      app.add_subcommand("closure", "Integral closure of a monomial ideal");
  add_input_options(closure_cmd, closure_input);
  closure_cmd->add_option("--degree-cap", degree_cap,
                          "Candidate degree bound (default: maxdeg + M)");
  closure_cmd->add_flag("--json", closure_json, "Emit JSON");

  InputOptions invariants_input;
  std::string hint = "generic";
  bool invariants_json = false;
  bool invariants_csv = false;
  CLI::App* invariants_cmd =
      app.add_subcommand("invariants", "Homological invariant report");
  add_input_options(invariants_cmd, invariants_input);
  invariants_cmd
      ->add_option("--hint", hint, "Ideal class hint (default: generic)")
      ->check(CLI::IsMember(
          {"strong-quasi-closure", "cover-ideal", "principal", "generic"}));
  invariants_cmd->add_flag("--json", invariants_json, "Emit JSON");
  invariants_cmd->add_flag("--csv", invariants_csv, "Emit one CSV row");

  InputOptions cover_input;
  bool cover_json = false;
  CLI::App* cover_cmd =
      app.add_subcommand("cover-ideal", "Cover ideal of a graph");
  add_input_options(cover_cmd, cover_input, /*allow_cover=*/false);
  cover_cmd->add_flag("--json", cover_json, "Emit JSON");

  InputOptions oracle_input;
  std::string oracle_monomial;
  unsigned long oracle_k_max = 6;
  bool oracle_json = false;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Power membership: least k with f^k in I^k");
  add_input_options(oracle_cmd, oracle_input);
  oracle_cmd->add_option("--monomial", oracle_monomial, "The monomial f")
      ->required();
  oracle_cmd->add_option("--k-max", oracle_k_max, "Largest power to try");
  oracle_cmd->add_flag("--json", oracle_json, "Emit JSON");

  SweepConfig sweep;
  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the theorem checks over a family sweep");
  verify_cmd->add_option("--n", sweep.n_range, "Block counts (default 2,3)")
      ->delimiter(',');
  verify_cmd
      ->add_option("--m", sweep.m_range, "Block sizes to combine (default 1,2,3)")
      ->delimiter(',');
  verify_cmd
      ->add_option("--checks", sweep.checks,
                   "Checks to run (default: all known checks)")
      ->delimiter(',');
  verify_cmd->add_option("--k-max", sweep.k_max_oracle,
                         "Oracle power bound (default 6)");
  verify_cmd->add_option("--max-M", sweep.max_variables,
                         "Skip instances with more variables (default 9)");
  verify_cmd->add_flag("--adjacent-only", sweep.adjacent_only,
                       "Edges join consecutive blocks only");
  verify_cmd->add_option("--threads", sweep.threads,
                         "Worker threads (default: IDEALIS_THREADS or hardware)");
  verify_cmd->add_flag("--json", verify_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (closure_cmd->parsed())
      return run_closure(closure_input, degree_cap, closure_json);
    if (invariants_cmd->parsed())
      return run_invariants(invariants_input, hint, invariants_json,
                            invariants_csv);
    if (cover_cmd->parsed()) return run_cover_ideal(cover_input, cover_json);
    if (oracle_cmd->parsed())
      return run_oracle(oracle_input, oracle_monomial, oracle_k_max,
                        oracle_json);
    if (verify_cmd->parsed()) return run_verify(sweep, verify_json);
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  } catch (const std::out_of_range& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  } catch (const std::logic_error& error) {
    // Internal cross-checks (cover-ideal routes, closed-form Betti numbers)
    // signal disagreement with a plain logic_error.
    std::cerr << "verification failure: " << error.what() << '\n';
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 2;
}
