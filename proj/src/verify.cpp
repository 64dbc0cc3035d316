#include "idealis/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "idealis/closure.hpp"
#include "idealis/graphs.hpp"
#include "idealis/homology.hpp"

namespace idealis {

namespace {

std::string blocks_id(const std::vector<std::size_t>& blocks) {
  std::string id = "blocks=(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) id += ',';
    id += std::to_string(blocks[i]);
  }
  id += ')';
  return id;
}

std::vector<std::vector<std::size_t>> sweep_blocks(const SweepConfig& config) {
  if (config.n_range.empty() || config.m_range.empty())
    throw std::invalid_argument("sweep ranges must be nonempty");
  std::vector<std::vector<std::size_t>> instances;
  for (std::size_t n : config.n_range) {
    if (n < 2) throw std::invalid_argument("sweep needs n >= 2 blocks");
    // Odometer over m_range^n.
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      std::vector<std::size_t> blocks(n);
      std::size_t total = 0;
      for (std::size_t i = 0; i < n; ++i) {
        blocks[i] = config.m_range[digits[i]];
        total += blocks[i];
      }
      if (total <= config.max_variables) instances.push_back(blocks);
      std::size_t pos = n;
      while (pos > 0 && ++digits[pos - 1] == config.m_range.size())
        digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return instances;
}

std::string bool_word(bool value) { return value ? "true" : "false"; }

std::string betti_string(const std::vector<Natural>& betti) {
  std::string out = "(";
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) out += ';';
    out += betti[i].get_str();
  }
  out += ')';
  return out;
}

CheckResult check_structure(const std::vector<std::size_t>& blocks,
                            bool adjacent_only) {
  PartitionedGraph graph = strong_quasi_n_partite(blocks, adjacent_only);
  const std::size_t M = graph.vertex_count();
  MonomialIdeal closure = integral_closure(edge_ideal(graph)).closure;
  MonomialIdeal sum = structure_sum(graph.vars_ptr());
  std::size_t expected_count = M * (M + 1) / 2;
  bool equal = closure == sum;
  bool count_ok = closure.generator_count() == expected_count;
  CheckResult result;
  result.instance = blocks_id(blocks);
  result.check = "structure";
  result.expected = "closure equals the degree-2 block-sum ideal with " +
                    std::to_string(expected_count) + " generators";
  result.computed = "equal=" + bool_word(equal) +
                    "; generators=" + std::to_string(closure.generator_count());
  result.pass = equal && count_ok;
  return result;
}

CheckResult check_betti(const std::vector<std::size_t>& blocks,
                        bool adjacent_only) {
  PartitionedGraph graph = strong_quasi_n_partite(blocks, adjacent_only);
  const std::size_t M = graph.vertex_count();
  MonomialIdeal closure = integral_closure(edge_ideal(graph)).closure;
  CheckResult result;
  result.instance = blocks_id(blocks);
  result.check = "betti";
  result.expected =
      "Betti numbers C(M+1,M-i-1)*(i+1) for i<M; final Betti number " +
      std::to_string(M);
  auto cert = find_linear_quotients(closure);
  if (!cert || !validate_linear_quotients(closure, *cert)) {
    result.computed = "no linear-quotients certificate";
    result.pass = false;
    return result;
  }
  std::vector<Natural> betti = betti_from_certificate(*cert);
  bool ok = betti.size() == M;
  for (std::size_t i = 0; ok && i < M; ++i)
    ok = betti[i] == closed_form_betti(M, i);
  ok = ok && betti.back() == Natural(static_cast<unsigned long>(M));
  result.computed = "b=" + betti_string(betti);
  result.pass = ok;
  return result;
}

CheckResult check_invariants(const std::vector<std::size_t>& blocks,
                             bool adjacent_only) {
  PartitionedGraph graph = strong_quasi_n_partite(blocks, adjacent_only);
  const std::size_t M = graph.vertex_count();
  MonomialIdeal closure = integral_closure(edge_ideal(graph)).closure;
  InvariantReport report =
      invariant_report(closure, IdealClassHint::StrongQuasiClosure);
  CheckResult result;
  result.instance = blocks_id(blocks);
  result.check = "invariants";
  result.expected = "height=bight=" + std::to_string(M) +
                    " dim=0 depth=0 projdim=" + std::to_string(M) +
                    " reg=1 type=" + std::to_string(M);
  std::ostringstream computed;
  computed << "height=" << (report.height ? std::to_string(*report.height) : "?")
           << " bight="
           << (report.big_height ? std::to_string(*report.big_height) : "?")
           << " dim=" << (report.dim ? std::to_string(*report.dim) : "?")
           << " depth=" << (report.depth ? std::to_string(*report.depth) : "?")
           << " projdim="
           << (report.projdim ? std::to_string(*report.projdim) : "?")
           << " reg=" << (report.reg ? std::to_string(*report.reg) : "?")
           << " type=" << (report.cm_type ? report.cm_type->get_str() : "?");
  result.computed = computed.str();
  result.pass = report.height == M && report.big_height == M &&
                report.dim == std::size_t(0) && report.depth == std::size_t(0) &&
                report.projdim == M && report.reg == std::size_t(1) &&
                report.cm_type &&
                *report.cm_type == Natural(static_cast<unsigned long>(M));
  return result;
}

CheckResult check_cover(const std::vector<std::size_t>& blocks,
                        bool adjacent_only) {
  PartitionedGraph graph = strong_quasi_n_partite(blocks, adjacent_only);
  const std::size_t M = graph.vertex_count();
  MonomialIdeal cover = cover_ideal(graph);
  CheckResult result;
  result.instance = blocks_id(blocks);
  result.check = "cover";
  result.expected = "principal of degree " + std::to_string(M) +
                    "; integrally closed; bight 1; dim=depth=" +
                    std::to_string(M - 1) + "; projdim 1; reg " +
                    std::to_string(M - 1);
  bool principal = cover.generator_count() == 1;
  bool degree_ok =
      principal &&
      cover.generators().front().degree() == Natural(static_cast<unsigned long>(M));
  bool closed = is_integrally_closed(cover);
  bool bight_ok = bight(cover) == 1;
  InvariantReport report = invariant_report(cover, IdealClassHint::CoverIdeal);
  bool invariants_ok = report.dim == M - 1 && report.depth == M - 1 &&
                       report.projdim == std::size_t(1) &&
                       report.reg == M - 1;
  result.computed = "generators=" + std::to_string(cover.generator_count()) +
                    " closed=" + bool_word(closed) +
                    " bight=" + std::to_string(bight(cover)) + " dim=" +
                    (report.dim ? std::to_string(*report.dim) : "?") +
                    " projdim=" +
                    (report.projdim ? std::to_string(*report.projdim) : "?") +
                    " reg=" + (report.reg ? std::to_string(*report.reg) : "?");
  result.pass = principal && degree_ok && closed && bight_ok && invariants_ok;
  return result;
}

CheckResult check_star(const std::vector<std::size_t>& blocks,
                       bool adjacent_only) {
  PartitionedGraph graph = complete_n_partite(blocks, adjacent_only);
  MonomialIdeal ideal = edge_ideal(graph);
  ClosureResult closure = integral_closure(ideal);
  MonomialIdeal star = star_ideal(ideal);
  bool contained = true;
  for (const Monomial& g : ideal.generators())
    if (!star.contains(g)) contained = false;
  CheckResult result;
  result.instance = blocks_id(blocks);
  result.check = "star";
  result.expected =
      "loopless edge ideal integrally closed and inside the blockwise hull ideal";
  result.computed = "closed=" + bool_word(closure.was_closed) +
                    "; contained=" + bool_word(contained);
  result.pass = closure.was_closed && contained;
  return result;
}

CheckResult check_tilde(const std::vector<std::size_t>& blocks,
                        bool adjacent_only) {
  PartitionedGraph graph = strong_quasi_n_partite(blocks, adjacent_only);
  MonomialIdeal ideal = edge_ideal(graph);
  MonomialIdeal closure = integral_closure(ideal).closure;
  MonomialIdeal tilde = tilde_ideal(ideal);
  bool contained = true;
  for (const Monomial& g : closure.generators())
    if (!tilde.contains(g)) contained = false;
  CheckResult result;
  result.instance = blocks_id(blocks);
  result.check = "tilde";
  result.expected = "closure inside the blockwise ceiling ideal";
  result.computed = "contained=" + bool_word(contained);
  result.pass = contained;
  return result;
}

CheckResult check_closedness_boundary(const std::vector<std::size_t>& blocks,
                                      bool adjacent_only) {
  PartitionedGraph graph = strong_quasi_n_partite(blocks, adjacent_only);
  std::size_t max_block = *std::max_element(blocks.begin(), blocks.end());
  bool closed = is_integrally_closed(edge_ideal(graph));
  CheckResult result;
  result.instance = blocks_id(blocks);
  result.check = "closedness-boundary";
  result.expected = "integrally closed iff every block has one vertex (max=" +
                    std::to_string(max_block) + ")";
  result.computed = "closed=" + bool_word(closed);
  result.pass = closed == (max_block == 1);
  return result;
}

struct PowersInstance {
  std::string id;
  PartitionedGraph graph;
};

std::vector<PowersInstance> powers_instances() {
  std::vector<PowersInstance> out;
  {
    VariableSetPtr vars = make_variables({1, 1});
    out.push_back({"blocks=(1,1),edges={(x1_1,x2_1)},loops={x1_1}",
                   quasi_n_partite(vars, {{0, 1}}, {0})});
  }
  out.push_back({"blocks=(1,1),complete,loops=all", strong_quasi_n_partite({1, 1})});
  {
    VariableSetPtr vars = make_variables({2, 1});
    out.push_back({"blocks=(2,1),complete,loops={x1_1}",
                   quasi_n_partite(vars, {{0, 2}, {1, 2}}, {0})});
  }
  {
    VariableSetPtr vars = make_variables({2, 2});
    out.push_back({"blocks=(2,2),complete,loops={x1_1}",
                   quasi_n_partite(vars, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {0})});
  }
  {
    VariableSetPtr vars = make_variables({1, 1, 1});
    out.push_back({"blocks=(1,1,1),complete,loops={x1_1,x2_1}",
                   quasi_n_partite(vars, {{0, 1}, {0, 2}, {1, 2}}, {0, 1})});
  }
  {
    VariableSetPtr vars = make_variables({2, 1});
    out.push_back({"blocks=(2,1),edges={(x1_1,x2_1)},loops={x1_2}",
                   quasi_n_partite(vars, {{0, 2}}, {1})});
  }
  return out;
}

CheckResult check_powers(const PowersInstance& instance, unsigned long k,
                         unsigned long k_max_oracle) {
  MonomialIdeal cover = cover_ideal(instance.graph);
  MonomialIdeal power = ideal_power(cover, k);
  MonomialIdeal direct = integral_closure(power).closure;
  MonomialIdeal via_points = closure_of_cover_power(cover, k);
  bool equal = direct == via_points;
  bool oracle_ok = true;
  for (const Monomial& g : via_points.generators())
    if (!power_membership_oracle(g, power, k_max_oracle)) oracle_ok = false;
  CheckResult result;
  result.instance = instance.id + ",k=" + std::to_string(k);
  result.check = "powers";
  result.expected =
      "point-route closure of the cover power equals the direct closure; "
      "all generators oracle-certified with k <= " +
      std::to_string(k_max_oracle);
  result.computed =
      "equal=" + bool_word(equal) + "; oracle=" + bool_word(oracle_ok);
  result.pass = equal && oracle_ok;
  return result;
}

unsigned resolve_threads(const SweepConfig& config, std::size_t task_count) {
  unsigned threads = config.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("IDEALIS_THREADS")) {
      long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) threads = static_cast<unsigned>(parsed);
    }
  }
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (task_count > 0 && threads > task_count)
    threads = static_cast<unsigned>(task_count);
  return threads;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks{
      "structure", "betti",  "invariants", "cover",
      "powers",    "star",   "tilde",      "closedness-boundary"};
  return checks;
}

VerificationReport run_verification(const SweepConfig& config) {
  if (config.checks.empty())
    throw std::invalid_argument("no checks selected");
  for (const std::string& check : config.checks)
    if (std::find(known_checks().begin(), known_checks().end(), check) ==
        known_checks().end())
      throw std::invalid_argument("unknown check \"" + check + "\"");
  auto selected = [&config](const char* name) {
    return std::find(config.checks.begin(), config.checks.end(), name) !=
           config.checks.end();
  };

  std::vector<std::vector<std::size_t>> instances = sweep_blocks(config);
  std::vector<std::function<CheckResult()>> tasks;
  bool adj = config.adjacent_only;
  for (const char* name : {"structure", "betti", "invariants", "cover", "star",
                           "tilde", "closedness-boundary"}) {
    if (!selected(name)) continue;
    for (const std::vector<std::size_t>& blocks : instances) {
      std::string check = name;
      tasks.push_back([check, blocks, adj]() {
        if (check == "structure") return check_structure(blocks, adj);
        if (check == "betti") return check_betti(blocks, adj);
        if (check == "invariants") return check_invariants(blocks, adj);
        if (check == "cover") return check_cover(blocks, adj);
        if (check == "star") return check_star(blocks, adj);
        if (check == "tilde") return check_tilde(blocks, adj);
        return check_closedness_boundary(blocks, adj);
      });
    }
  }
  if (selected("powers")) {
    for (const PowersInstance& instance : powers_instances()) {
      for (unsigned long k = 1; k <= 3; ++k) {
        unsigned long k_max = config.k_max_oracle;
        PowersInstance copy = instance;
        tasks.push_back(
            [copy, k, k_max]() { return check_powers(copy, k, k_max); });
      }
    }
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&tasks, &results, &next]() {
    while (true) {
      std::size_t index = next.fetch_add(1);
      if (index >= tasks.size()) break;
      try {
        results[index] = tasks[index]();
      } catch (const std::exception& error) {
        results[index].instance = "task " + std::to_string(index);
        results[index].check = "error";
        results[index].expected = "no exception";
        results[index].computed = error.what();
        results[index].pass = false;
      }
    }
  };
  unsigned threads = resolve_threads(config, tasks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  VerificationReport report;
  report.results = std::move(results);
  for (const CheckResult& r : report.results)
    (r.pass ? report.passed : report.failed) += 1;
  return report;
}

}  // namespace idealis
