#include "morsespec/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "morsespec/error.hpp"

namespace morsespec {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Column& col, std::size_t words) {
  Bits b(words, 0);
  for (auto p : col) b[p / 64] ^= std::uint64_t{1} << (p % 64);
  return b;
}

std::int32_t top_bit(const Bits& b) {
  for (std::size_t w = b.size(); w-- > 0;)
    if (b[w]) return static_cast<std::int32_t>(w * 64 + 63 - std::countl_zero(b[w]));
  return -1;
}

}  // namespace

std::size_t boundary_generators(const MorseComplex& mc, int grade) {
  return grade + 1 < mc.grades() ? mc.boundary[grade + 1].size() : 0;
}

CosetMinimum coset_minimum(const MorseComplex& mc, const HomologyClass& x,
                           std::size_t max_generators) {
  if (x.cells.empty()) throw Error(ErrorKind::ZeroClass, "coset of the zero class");
  const std::size_t m = boundary_generators(mc, x.grade);
  if (m > max_generators)
    throw Error(ErrorKind::Domain, std::to_string(m) + " boundary generators, limit is " +
                                       std::to_string(max_generators));
  const std::size_t words = (mc.count(x.grade) + 63) / 64;
  std::vector<Bits> gens;
  for (std::size_t j = 0; j < m; ++j) gens.push_back(to_bits(mc.boundary[x.grade + 1][j], words));

  Bits cur = to_bits(to_positions(mc, x.grade, x.cells), words);
  CosetMinimum best;
  best.position = top_bit(cur);
  best.enumerated = 1;
  // Gray code: step i flips generator ctz(i).
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    const Bits& g = gens[std::countr_zero(i)];
    for (std::size_t w = 0; w < words; ++w) cur[w] ^= g[w];
    const auto top = top_bit(cur);
    ++best.enumerated;
    if (top < 0) throw Error(ErrorKind::ZeroClass, "class is a boundary");
    if (top < best.position) best.position = top;
  }
  if (best.position < 0) throw Error(ErrorKind::ZeroClass, "class is a boundary");
  best.value = mc.cells[x.grade][best.position].value;
  return best;
}

}  // namespace morsespec
