#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace morsespec {

using CellId = std::int32_t;

/// A GF(2) chain stored as its support: strictly increasing cell ids.
using Chain = std::vector<CellId>;

/// A GF(2) column over positions of some ordered basis, strictly increasing.
/// The pivot of a nonzero column is its last entry.
using Column = std::vector<std::int32_t>;

/// acc += other over GF(2) (symmetric difference of sorted supports).
void add_into(std::vector<std::int32_t>& acc, std::span<const std::int32_t> other);

/// Sorts the ids and cancels repeated entries in pairs.
std::vector<std::int32_t> make_chain(std::vector<std::int32_t> ids);

inline bool contains(std::span<const std::int32_t> chain, std::int32_t id) {
  return std::binary_search(chain.begin(), chain.end(), id);
}

}  // namespace morsespec
