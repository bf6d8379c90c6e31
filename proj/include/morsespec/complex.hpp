#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "morsespec/chain.hpp"

namespace morsespec {

/// Flat 2-torus made of nx * ny unit squares.
struct TorusGrid {
  int nx = 0;
  int ny = 0;
};

/// Closure of a list of maximal simplices.
struct Simplicial {};

using Descriptor = std::variant<TorusGrid, Simplicial>;

struct Cell {
  CellId id = 0;
  int dim = 0;
  std::vector<CellId> faces;  // codimension-1 faces, GF(2) incidence
};

/// Regular cell complex with GF(2) incidences. Cells are stored with dense ids
/// and immutable after construction.
class CellComplex {
 public:
  CellComplex() = default;

  /// Validates that ids are dense, that faces are duplicate-free and one
  /// dimension lower. Throws Error(Domain) otherwise.
  CellComplex(std::vector<Cell> cells, Descriptor descriptor);

  std::size_t size() const { return cells_.size(); }
  int top_dim() const { return top_dim_; }
  int dim(CellId c) const { return cells_[c].dim; }
  std::span<const CellId> faces(CellId c) const { return cells_[c].faces; }
  std::span<const CellId> cofaces(CellId c) const { return cofaces_[c]; }
  /// 0-cells of c, ascending id. A 0-cell is its own vertex.
  std::span<const CellId> vertices(CellId c) const { return vertices_[c]; }

  std::span<const CellId> cells_of_dim(int k) const;
  std::size_t count(int k) const { return cells_of_dim(k).size(); }
  std::size_t vertex_count() const { return count(0); }

  long euler_characteristic() const;

  /// Cell-level boundary-of-boundary check: every (d-2)-cell sits below an
  /// even number of (d-1)-faces of each d-cell.
  bool has_even_incidence() const;

  /// GF(2) boundary of a chain.
  Chain boundary(std::span<const CellId> chain) const;

  const Descriptor& descriptor() const { return descriptor_; }
  bool is_torus() const { return std::holds_alternative<TorusGrid>(descriptor_); }

  /// Structural hash used to detect fields built on a different complex.
  std::uint64_t signature() const { return signature_; }

 private:
  std::vector<Cell> cells_;
  std::vector<std::vector<CellId>> cofaces_;
  std::vector<std::vector<CellId>> vertices_;
  std::vector<std::vector<CellId>> by_dim_;
  Descriptor descriptor_;
  int top_dim_ = -1;
  std::uint64_t signature_ = 0;
};

/// Vertex (i, j) of a torus grid has id j * nx + i. Horizontal edges follow
/// the vertices, then vertical edges, then squares, each in the same raster
/// order.
CellComplex build_torus_grid(int nx, int ny);

/// Builds the face closure of a list of maximal simplices. Vertex labels may
/// be arbitrary integers; the i-th smallest label becomes 0-cell i.
CellComplex build_from_simplicial(const std::vector<std::vector<long long>>& simplices);

enum class TieBreak { Ascending, Descending };

/// Lexicographic key of the simulated-injectivity order (value, dim, tie).
struct OrderKey {
  double value = 0.0;
  int dim = 0;
  std::int64_t tie = 0;

  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

/// Vertex values extended to all cells by max (lower-star convention), plus
/// the strict total order used everywhere downstream.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(const CellComplex& complex, std::vector<double> vertex_values,
              TieBreak tie_break = TieBreak::Ascending);

  std::span<const double> vertex_values() const { return vertex_values_; }
  double value(CellId c) const { return cell_values_[c]; }
  std::span<const double> cell_values() const { return cell_values_; }
  OrderKey key(CellId c) const;
  bool precedes(CellId a, CellId b) const { return key(a) < key(b); }
  TieBreak tie_break() const { return tie_break_; }
  std::uint64_t complex_signature() const { return signature_; }
  std::size_t cell_count() const { return cell_values_.size(); }

  double min_value() const;
  double max_value() const;

 private:
  std::vector<double> vertex_values_;
  std::vector<double> cell_values_;
  std::vector<int> dims_;
  TieBreak tie_break_ = TieBreak::Ascending;
  std::uint64_t signature_ = 0;
};

ScalarField make_field(const CellComplex& complex, std::vector<double> values,
                       TieBreak tie_break = TieBreak::Ascending);

/// max over vertices of |f - g|.
double c0_distance(const ScalarField& f, const ScalarField& g);

/// Throws ComplexMismatch unless the field was built on this complex.
void require_same_complex(const CellComplex& complex, const ScalarField& field);

}  // namespace morsespec
