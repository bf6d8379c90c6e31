#pragma once

#include <span>
#include <vector>

#include "morsespec/chain.hpp"
#include "morsespec/complex.hpp"
#include "morsespec/gradient.hpp"

namespace morsespec {

enum class Basis { Morse, Full };

struct CriticalCell {
  CellId id = 0;
  double value = 0.0;
  OrderKey key;
};

/// Graded GF(2) complex generated by critical cells. Within each grade the
/// cells are listed in ascending total order, so a column's pivot (its last
/// entry) is also its order-maximal cell.
struct MorseComplex {
  Basis basis = Basis::Morse;
  std::vector<std::vector<CriticalCell>> cells;
  /// boundary[k][i]: positions in grade k-1 hit by the boundary of cells[k][i].
  std::vector<std::vector<Column>> boundary;
  /// Cell id -> position within its grade, or -1 when the cell is not a generator.
  std::vector<std::int32_t> position;

  int grades() const { return static_cast<int>(cells.size()); }
  std::size_t count(int k) const { return k >= 0 && k < grades() ? cells[k].size() : 0; }
  std::size_t total_count() const;
};

/// The pair of filtration-preserving chain maps between the full complex and
/// the Morse complex of an acyclic matching.
///
/// project follows V-paths from each tail cell down to the critical cells it
/// reaches (mod 2); expand completes a critical chain by head cells until its
/// boundary contains no tail cell. project(expand(x)) == x, and both commute
/// with the boundaries. The complex must outlive this object.
class ChainEquivalence {
 public:
  /// Throws Error(CycleDetected) if the matching has a closed V-path.
  ChainEquivalence(const CellComplex& complex, DiscreteGradient gradient);

  Chain project(std::span<const CellId> chain) const;
  /// Throws Error(NonCriticalSupport) if the chain touches a matched cell.
  Chain expand(std::span<const CellId> morse_chain) const;

  const DiscreteGradient& gradient() const { return gradient_; }
  const CellComplex& complex() const { return *complex_; }

 private:
  const CellComplex* complex_;
  DiscreteGradient gradient_;
  std::vector<int> flow_rank_;  // upstream tails first, -1 for non-tails
  std::vector<Chain> reach_;    // critical cells reached from a tail
};

MorseComplex build_morse_complex(const CellComplex& complex, const ScalarField& field,
                                 const DiscreteGradient& gradient);
MorseComplex build_morse_complex(const CellComplex& complex, const ScalarField& field,
                                 const ChainEquivalence& equivalence);

/// The full cell complex, ordered by the field, viewed as the Morse complex of
/// the empty matching.
MorseComplex full_complex(const CellComplex& complex, const ScalarField& field);

Chain flow_expand(const CellComplex& complex, const DiscreteGradient& gradient,
                  std::span<const CellId> morse_chain);
Chain flow_project(const CellComplex& complex, const DiscreteGradient& gradient,
                   std::span<const CellId> chain);

/// Everything derived from one field on one complex.
struct MorseModel {
  ScalarField field;
  ChainEquivalence equivalence;
  MorseComplex complex;
};

MorseModel analyze(const CellComplex& complex, const ScalarField& field);

/// Positions of a chain of generators of one grade. Throws NonCriticalSupport.
Column to_positions(const MorseComplex& mc, int grade, std::span<const CellId> chain);
Chain to_cells(const MorseComplex& mc, int grade, std::span<const std::int32_t> column);

}  // namespace morsespec
