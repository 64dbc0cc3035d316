#include "idealis/graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace idealis {

PartitionedGraph::PartitionedGraph(
    VariableSetPtr vars, std::vector<std::pair<std::size_t, std::size_t>> edges,
    std::vector<std::size_t> loops)
    : vars_(std::move(vars)), edges_(std::move(edges)), loops_(std::move(loops)) {
  if (!vars_) throw std::invalid_argument("graph needs a variable set");
  for (auto& [u, v] : edges_) {
    if (u >= vars_->variable_count() || v >= vars_->variable_count())
      throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (vars_->block_position(u).first == vars_->block_position(v).first)
      throw std::invalid_argument("edge inside one block: {" +
                                  vars_->variable_name(u) + ", " +
                                  vars_->variable_name(v) + "}");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (std::size_t v : loops_)
    if (v >= vars_->variable_count())
      throw std::out_of_range("loop vertex out of range");
  std::sort(loops_.begin(), loops_.end());
  loops_.erase(std::unique(loops_.begin(), loops_.end()), loops_.end());
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> inter_block_edges(
    const VariableSet& vars, bool adjacent_only) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < vars.variable_count(); ++u) {
    for (std::size_t v = u + 1; v < vars.variable_count(); ++v) {
      std::size_t bu = vars.block_position(u).first;
      std::size_t bv = vars.block_position(v).first;
      if (bu == bv) continue;
      if (adjacent_only && bv != bu + 1) continue;
      edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

PartitionedGraph complete_n_partite(std::vector<std::size_t> block_sizes,
                                    bool adjacent_only) {
  if (block_sizes.size() < 2)
    throw std::invalid_argument("an n-partite graph needs at least two blocks");
  VariableSetPtr vars = make_variables(std::move(block_sizes));
  auto edges = inter_block_edges(*vars, adjacent_only);
  return PartitionedGraph(std::move(vars), std::move(edges), {});
}

PartitionedGraph strong_quasi_n_partite(std::vector<std::size_t> block_sizes,
                                        bool adjacent_only) {
  if (block_sizes.size() < 2)
    throw std::invalid_argument("an n-partite graph needs at least two blocks");
  VariableSetPtr vars = make_variables(std::move(block_sizes));
  auto edges = inter_block_edges(*vars, adjacent_only);
  std::vector<std::size_t> loops(vars->variable_count());
  for (std::size_t v = 0; v < loops.size(); ++v) loops[v] = v;
  return PartitionedGraph(std::move(vars), std::move(edges), std::move(loops));
}

PartitionedGraph quasi_n_partite(
    VariableSetPtr vars, std::vector<std::pair<std::size_t, std::size_t>> edges,
    std::vector<std::size_t> loops) {
  return PartitionedGraph(std::move(vars), std::move(edges), std::move(loops));
}

MonomialIdeal edge_ideal(const PartitionedGraph& graph) {
  const VariableSetPtr& vars = graph.vars_ptr();
  std::vector<Monomial> gens;
  gens.reserve(graph.edges().size() + graph.loops().size());
  for (const auto& [u, v] : graph.edges()) {
    Exponents e(vars->variable_count(), Natural(0));
    e[u] = 1;
    e[v] = 1;
    gens.emplace_back(vars, std::move(e));
  }
  for (std::size_t v : graph.loops()) {
    Exponents e(vars->variable_count(), Natural(0));
    e[v] = 2;
    gens.emplace_back(vars, std::move(e));
  }
  return MonomialIdeal::make(vars, std::move(gens));
}

namespace {

// Every minimal transversal survives the branching (it can always supply the
// vertex it uses for the first uncovered edge), so branching + a minimality
// filter is complete.
void branch_transversals(const std::vector<std::vector<std::size_t>>& edges,
                         std::vector<char>& chosen,
                         std::vector<VertexCover>& out) {
  for (const std::vector<std::size_t>& edge : edges) {
    bool covered = false;
    for (std::size_t v : edge)
      if (chosen[v]) {
        covered = true;
        break;
      }
    if (covered) continue;
    for (std::size_t v : edge) {
      chosen[v] = 1;
      branch_transversals(edges, chosen, out);
      chosen[v] = 0;
    }
    return;
  }
  VertexCover cover;
  for (std::size_t v = 0; v < chosen.size(); ++v)
    if (chosen[v]) cover.push_back(v);
  out.push_back(std::move(cover));
}

bool is_minimal_cover(const std::vector<std::vector<std::size_t>>& edges,
                      const VertexCover& cover) {
  // Each chosen vertex needs an edge that no other chosen vertex covers.
  for (std::size_t v : cover) {
    bool has_private_edge = false;
    for (const std::vector<std::size_t>& edge : edges) {
      bool v_in_edge = false;
      bool other_in_edge = false;
      for (std::size_t w : edge) {
        if (w == v)
          v_in_edge = true;
        else if (std::binary_search(cover.begin(), cover.end(), w))
          other_in_edge = true;
      }
      if (v_in_edge && !other_in_edge) {
        has_private_edge = true;
        break;
      }
    }
    if (!has_private_edge) return false;
  }
  return true;
}

std::vector<VertexCover> minimal_transversals(
    std::size_t vertex_count,
    const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<char> chosen(vertex_count, 0);
  std::vector<VertexCover> raw;
  branch_transversals(edges, chosen, raw);
  std::vector<VertexCover> covers;
  for (VertexCover& c : raw)
    if (is_minimal_cover(edges, c)) covers.push_back(std::move(c));
  std::sort(covers.begin(), covers.end(),
            [](const VertexCover& a, const VertexCover& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  return covers;
}

}  // namespace

std::vector<VertexCover> minimal_vertex_covers(const PartitionedGraph& graph) {
  std::vector<std::vector<std::size_t>> edges;
  edges.reserve(graph.edges().size() + graph.loops().size());
  for (const auto& [u, v] : graph.edges())
    edges.push_back({u, v});
  for (std::size_t v : graph.loops()) edges.push_back({v});
  return minimal_transversals(graph.vertex_count(), edges);
}

std::vector<VertexCover> minimal_covers_of_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument(
        "vertex covers require a nonzero, non-unit ideal");
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  return minimal_transversals(ideal.vars().variable_count(), supports);
}

MonomialIdeal cover_ideal(const PartitionedGraph& graph) {
  if (graph.edges().empty() && graph.loops().empty())
    throw std::domain_error("cover_ideal requires at least one edge or loop");
  const VariableSetPtr& vars = graph.vars_ptr();

  // Route one: a generator per minimal cover.
  std::vector<Monomial> products;
  for (const VertexCover& cover : minimal_vertex_covers(graph)) {
    Exponents e(vars->variable_count(), Natural(0));
    for (std::size_t v : cover) e[v] = 1;
    products.emplace_back(vars, std::move(e));
  }
  MonomialIdeal by_covers = MonomialIdeal::make(vars, std::move(products));

  // Route two: intersect the edge primes (x_u, x_v) and the loop
  // constraints (x_v).
  MonomialIdeal by_primes = MonomialIdeal::unit(vars);
  for (const auto& [u, v] : graph.edges()) {
    std::vector<Monomial> prime;
    Exponents eu(vars->variable_count(), Natural(0));
    eu[u] = 1;
    prime.emplace_back(vars, std::move(eu));
    Exponents ev(vars->variable_count(), Natural(0));
    ev[v] = 1;
    prime.emplace_back(vars, std::move(ev));
    by_primes = ideal_intersection(by_primes,
                                   MonomialIdeal::make(vars, std::move(prime)));
  }
  for (std::size_t v : graph.loops()) {
    Exponents e(vars->variable_count(), Natural(0));
    e[v] = 1;
    std::vector<Monomial> principal;
    principal.emplace_back(vars, std::move(e));
    by_primes = ideal_intersection(
        by_primes, MonomialIdeal::make(vars, std::move(principal)));
  }

  if (!(by_covers == by_primes))
    throw std::logic_error(
        "cover ideal routes disagree: transversals vs prime intersection");
  return by_covers;
}

std::size_t height(const MonomialIdeal& ideal) {
  std::vector<VertexCover> covers = minimal_covers_of_ideal(ideal);
  std::size_t best = covers.front().size();
  for (const VertexCover& c : covers)
    if (c.size() < best) best = c.size();
  return best;
}

std::size_t bight(const MonomialIdeal& ideal) {
  std::vector<VertexCover> covers = minimal_covers_of_ideal(ideal);
  std::size_t best = covers.front().size();
  for (const VertexCover& c : covers)
    if (c.size() > best) best = c.size();
  return best;
}

}  // namespace idealis
