#include "idealis/variables.hpp"

#include <stdexcept>

namespace idealis {

VariableSet::VariableSet(std::vector<std::size_t> block_sizes)
    : block_sizes_(std::move(block_sizes)) {
  if (block_sizes_.empty())
    throw std::invalid_argument("variable set needs at least one block");
  block_offsets_.reserve(block_sizes_.size());
  for (std::size_t m : block_sizes_) {
    if (m == 0) throw std::invalid_argument("block sizes must be positive");
    block_offsets_.push_back(total_);
    total_ += m;
  }
}

std::size_t VariableSet::block_size(std::size_t block) const {
  if (block >= block_sizes_.size())
    throw std::out_of_range("block index out of range");
  return block_sizes_[block];
}

std::size_t VariableSet::flat_index(std::size_t block, std::size_t pos) const {
  if (block >= block_sizes_.size() || pos >= block_sizes_[block])
    throw std::out_of_range("variable index out of range");
  return block_offsets_[block] + pos;
}

std::pair<std::size_t, std::size_t> VariableSet::block_position(
    std::size_t flat) const {
  if (flat >= total_) throw std::out_of_range("flat index out of range");
  std::size_t block = block_sizes_.size() - 1;
  while (block_offsets_[block] > flat) --block;
  return {block, flat - block_offsets_[block]};
}

std::string VariableSet::variable_name(std::size_t flat) const {
  auto [block, pos] = block_position(flat);
  return "x" + std::to_string(block + 1) + "_" + std::to_string(pos + 1);
}

VariableSetPtr make_variables(std::vector<std::size_t> block_sizes) {
  return std::make_shared<const VariableSet>(std::move(block_sizes));
}

void require_same_variables(const VariableSet& a, const VariableSet& b,
                            const char* operation) {
  if (!(a == b))
    throw std::invalid_argument(std::string(operation) +
                                ": operands live over different variable sets");
}

}  // namespace idealis
