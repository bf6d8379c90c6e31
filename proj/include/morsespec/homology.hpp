#pragma once

#include <cstdint>
#include <vector>

#include "morsespec/chain.hpp"
#include "morsespec/morse.hpp"

namespace morsespec {

/// A GF(2) cycle of one grade, either over the critical cells of a Morse
/// complex or over all cells of the complex (basis == Full).
struct HomologyClass {
  int grade = 0;
  Chain cells;
  Basis basis = Basis::Morse;
  bool canonical = false;  // representative already has minimal top cell
};

/// Column-echelon form of the boundaries landing in one grade: the reduced
/// columns have pairwise distinct pivots.
class Echelon {
 public:
  Echelon(const MorseComplex& mc, int grade);

  /// Adds echelon columns while the pivot of v is an echelon pivot. Afterwards
  /// the top entry of v is minimal over the coset v + image.
  void reduce(Column& v) const;

  std::size_t rank() const { return columns_.size(); }
  bool is_pivot(std::int32_t row) const { return pivot_[row] >= 0; }

 private:
  std::vector<std::int32_t> pivot_;
  std::vector<Column> columns_;
};

std::vector<int> betti_numbers(const MorseComplex& mc);

/// True iff the boundary squares to zero in every grade.
bool verify_d_squared(const MorseComplex& mc);

/// One representative per essential generator of each grade, in order of the
/// generator's position. Each representative's top cell is its birth cell.
std::vector<std::vector<HomologyClass>> homology_basis(const MorseComplex& mc);

/// Boundary of a chain of grade-k generators, as positions in grade k-1.
Column boundary_of(const MorseComplex& mc, int grade, const Column& chain);

bool is_cycle(const MorseComplex& mc, const HomologyClass& x);

/// Basis of homology for the complex itself, independent of any field
/// (cells ordered by dimension then id).
std::vector<std::vector<HomologyClass>> reference_homology(const CellComplex& complex);

/// Coordinates of cycles with respect to a chosen homology basis of one grade.
class HomologyCoordinates {
 public:
  HomologyCoordinates(const MorseComplex& mc, int grade, const std::vector<HomologyClass>& basis);

  /// Throws Error(NonCycle) if x is not a cycle of this grade.
  std::vector<std::uint8_t> coordinates(const HomologyClass& x) const;

  std::size_t dimension() const { return dimension_; }

 private:
  const MorseComplex* mc_;
  int grade_;
  std::size_t dimension_;
  std::vector<std::int32_t> pivot_;
  std::vector<Column> columns_;
  std::vector<std::vector<std::uint8_t>> masks_;
};

}  // namespace morsespec
