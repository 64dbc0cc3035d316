#pragma once

#include <utility>
#include <vector>

#include "idealis/ideal.hpp"

namespace idealis {

/// An n-partite graph with loops over a VariableSet: vertices are the
/// variables, edges join vertices of distinct blocks, loops mark single
/// vertices.  Edges and loops are stored sorted on flat indices.
class PartitionedGraph {
public:
  PartitionedGraph(VariableSetPtr vars,
                   std::vector<std::pair<std::size_t, std::size_t>> edges,
                   std::vector<std::size_t> loops);

  const VariableSet& vars() const { return *vars_; }
  const VariableSetPtr& vars_ptr() const { return vars_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  const std::vector<std::size_t>& loops() const { return loops_; }

  std::size_t vertex_count() const { return vars_->variable_count(); }

private:
  VariableSetPtr vars_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::size_t> loops_;
};

/// All inter-block pairs, no loops.  With adjacent_only, edges only join
/// consecutive blocks.  Requires n >= 2.
PartitionedGraph complete_n_partite(std::vector<std::size_t> block_sizes,
                                    bool adjacent_only = false);

/// complete_n_partite plus a loop on every vertex.
PartitionedGraph strong_quasi_n_partite(std::vector<std::size_t> block_sizes,
                                        bool adjacent_only = false);

/// Explicit edge and loop sets; rejects intra-block edges.
PartitionedGraph quasi_n_partite(
    VariableSetPtr vars,
    std::vector<std::pair<std::size_t, std::size_t>> edges,
    std::vector<std::size_t> loops);

/// x_u x_v per edge, x_v^2 per loop, minimalized.
MonomialIdeal edge_ideal(const PartitionedGraph& graph);

using VertexCover = std::vector<std::size_t>;  // sorted flat indices

/// All minimal transversals of edges and loops, sorted canonically
/// (by size, then lexicographically).
std::vector<VertexCover> minimal_vertex_covers(const PartitionedGraph& graph);

/// Minimal transversals of the generator supports of a nonzero, non-unit
/// ideal; these are the minimal primes.
std::vector<VertexCover> minimal_covers_of_ideal(const MonomialIdeal& ideal);

/// Generated by the products of variables over the minimal vertex covers.
/// Cross-checked internally against the intersection of edge primes and
/// loop constraints.
MonomialIdeal cover_ideal(const PartitionedGraph& graph);

/// Minimum / maximum cardinality of a minimal cover of the generator
/// supports.  Require a nonzero, non-unit ideal.
std::size_t height(const MonomialIdeal& ideal);
std::size_t bight(const MonomialIdeal& ideal);

}  // namespace idealis
