#pragma once

#include <span>
#include <utility>
#include <vector>

#include "morsespec/chain.hpp"
#include "morsespec/complex.hpp"

namespace morsespec {

/// Acyclic partial matching of cells with codimension-one cofaces. The
/// discrete stand-in for a negative gradient flow.
class DiscreteGradient {
 public:
  DiscreteGradient() = default;
  explicit DiscreteGradient(std::size_t cell_count) : partner_(cell_count, kNone) {}

  /// The empty matching: every cell is critical.
  static DiscreteGradient trivial(const CellComplex& complex) {
    return DiscreteGradient(complex.size());
  }

  static constexpr CellId kNone = -1;

  std::size_t size() const { return partner_.size(); }
  bool is_critical(CellId c) const { return partner_[c] == kNone; }
  CellId partner(CellId c) const { return partner_[c]; }
  /// c is matched with one of its cofaces (c is the tail of an arrow).
  bool is_tail(const CellComplex& complex, CellId c) const {
    return partner_[c] != kNone && complex.dim(partner_[c]) == complex.dim(c) + 1;
  }
  /// c is matched with one of its faces (c is the head of an arrow).
  bool is_head(const CellComplex& complex, CellId c) const {
    return partner_[c] != kNone && complex.dim(partner_[c]) + 1 == complex.dim(c);
  }

  /// Matches face with coface. Both must currently be unmatched.
  void pair(CellId face, CellId coface);

  std::vector<CellId> critical_cells() const;
  /// (face, coface) pairs in ascending face id.
  std::vector<std::pair<CellId, CellId>> pairs(const CellComplex& complex) const;

 private:
  std::vector<CellId> partner_;
};

/// Lower-star matching: each vertex's lower star is processed independently by
/// greedy simple-pair cancellation in the lexicographic order of the cells'
/// descending vertex ranks, ties resolved by the field's total order.
DiscreteGradient build_gradient(const CellComplex& complex, const ScalarField& field);

/// Vertex whose key is largest among the vertices of c.
CellId max_vertex(const CellComplex& complex, const ScalarField& field, CellId c);

/// Structural validity: every pair is a (face, coface) incidence lying in a
/// single lower star. Acyclicity is checked separately by is_acyclic.
bool is_valid_gradient(const CellComplex& complex, const ScalarField& field,
                       const DiscreteGradient& gradient);

/// No closed V-path exists.
bool is_acyclic(const CellComplex& complex, const DiscreteGradient& gradient);

}  // namespace morsespec
