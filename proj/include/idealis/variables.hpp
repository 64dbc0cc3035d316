#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace idealis {

/// Variables x_{i,h} grouped into blocks of sizes m_1,...,m_n.
///
/// Block and position indices are 0-based throughout the code; the text
/// format prints them 1-based ("x1_1" is block 0, position 0).  The flat
/// index enumerates variables block by block, positions in order.
class VariableSet {
public:
  explicit VariableSet(std::vector<std::size_t> block_sizes);

  std::size_t block_count() const { return block_sizes_.size(); }
  std::size_t block_size(std::size_t block) const;
  std::size_t variable_count() const { return total_; }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }

  std::size_t flat_index(std::size_t block, std::size_t pos) const;
  std::pair<std::size_t, std::size_t> block_position(std::size_t flat) const;

  /// Display name, e.g. "x2_1" for block 1, position 0.
  std::string variable_name(std::size_t flat) const;

  bool operator==(const VariableSet& other) const {
    return block_sizes_ == other.block_sizes_;
  }

private:
  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> block_offsets_;
  std::size_t total_ = 0;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

VariableSetPtr make_variables(std::vector<std::size_t> block_sizes);

/// Throws std::invalid_argument naming `operation` if the two sets differ.
void require_same_variables(const VariableSet& a, const VariableSet& b,
                            const char* operation);

}  // namespace idealis
