#pragma once

#include <cstddef>

#include "morsespec/homology.hpp"
#include "morsespec/morse.hpp"

namespace morsespec {

struct CosetMinimum {
  double value = 0.0;
  std::int32_t position = -1;  // top generator of the best coset element
  std::size_t enumerated = 0;
};

/// Brute force over every element of x + image(boundary): all 2^m sums of the
/// m boundary columns entering x's grade. Shares nothing with Echelon.
/// Throws Error(Domain) when m exceeds max_generators.
CosetMinimum coset_minimum(const MorseComplex& mc, const HomologyClass& x,
                           std::size_t max_generators = 20);

/// Number of boundary columns landing in a grade.
std::size_t boundary_generators(const MorseComplex& mc, int grade);

}  // namespace morsespec
