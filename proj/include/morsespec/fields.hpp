#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morsespec/complex.hpp"

namespace morsespec {

/// Single smooth bump. On a torus grid it is periodic and centred off the
/// lattice so that vertex values are pairwise distinct; on other complexes
/// it is a function of the vertex index.
std::vector<double> bump_values(const CellComplex& complex);

/// Two bumps of different heights.
std::vector<double> twobump_values(const CellComplex& complex);

/// Uniform values in [0, 1) from a 64-bit Mersenne twister.
std::vector<double> random_values(const CellComplex& complex, std::uint64_t seed);

/// Torus grid only: values of v moved by (di, dj) lattice steps.
std::vector<double> translate_values(const CellComplex& complex, const std::vector<double>& values,
                                     int di, int dj);

/// Named expression field: bump, twobump, random:SEED or constant:C, each
/// optionally followed by +C or -C to add a constant.
std::vector<double> named_values(const CellComplex& complex, const std::string& expr);

}  // namespace morsespec
