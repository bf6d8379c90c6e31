#include "morsespec/homology.hpp"

#include <algorithm>

#include "morsespec/error.hpp"

namespace morsespec {

Echelon::Echelon(const MorseComplex& mc, int grade) : pivot_(mc.count(grade), -1) {
  if (grade + 1 >= mc.grades()) return;
  for (const Column& source : mc.boundary[grade + 1]) {
    Column col = source;
    reduce(col);
    if (col.empty()) continue;
    pivot_[col.back()] = static_cast<std::int32_t>(columns_.size());
    columns_.push_back(std::move(col));
  }
}

void Echelon::reduce(Column& v) const {
  while (!v.empty() && pivot_[v.back()] >= 0) add_into(v, columns_[pivot_[v.back()]]);
}

std::vector<int> betti_numbers(const MorseComplex& mc) {
  std::vector<std::size_t> ranks(mc.grades() + 1, 0);  // ranks[k] = rank of boundary into grade k-1
  for (int k = 0; k + 1 < mc.grades(); ++k) ranks[k + 1] = Echelon(mc, k).rank();
  std::vector<int> betti(mc.grades());
  for (int k = 0; k < mc.grades(); ++k)
    betti[k] = static_cast<int>(mc.count(k) - ranks[k] - ranks[k + 1]);
  return betti;
}

Column boundary_of(const MorseComplex& mc, int grade, const Column& chain) {
  Column out;
  if (grade <= 0) return out;
  for (auto p : chain) add_into(out, mc.boundary[grade][p]);
  return out;
}

bool verify_d_squared(const MorseComplex& mc) {
  for (int k = 2; k < mc.grades(); ++k)
    for (const Column& col : mc.boundary[k])
      if (!boundary_of(mc, k - 1, col).empty()) return false;
  return true;
}

bool is_cycle(const MorseComplex& mc, const HomologyClass& x) {
  return boundary_of(mc, x.grade, to_positions(mc, x.grade, x.cells)).empty();
}

std::vector<std::vector<HomologyClass>> homology_basis(const MorseComplex& mc) {
  std::vector<std::vector<HomologyClass>> basis(mc.grades());
  for (int k = 0; k < mc.grades(); ++k) {
    const Echelon killed(mc, k);
    // Kernel of the grade-k boundary by column reduction with tracking.
    const std::size_t n = mc.count(k);
    std::vector<std::int32_t> pivot(k > 0 ? mc.count(k - 1) : 0, -1);
    std::vector<Column> reduced(n), track(n);
    for (std::size_t j = 0; j < n; ++j) {
      Column r = mc.boundary[k][j];
      Column t{static_cast<std::int32_t>(j)};
      while (!r.empty() && pivot[r.back()] >= 0) {
        const auto i = pivot[r.back()];
        add_into(r, reduced[i]);
        add_into(t, track[i]);
      }
      if (!r.empty()) pivot[r.back()] = static_cast<std::int32_t>(j);
      else if (!killed.is_pivot(static_cast<std::int32_t>(j)))
        basis[k].push_back({k, to_cells(mc, k, t), mc.basis, true});
      reduced[j] = std::move(r);
      track[j] = std::move(t);
    }
  }
  return basis;
}

std::vector<std::vector<HomologyClass>> reference_homology(const CellComplex& complex) {
  const ScalarField flat(complex, std::vector<double>(complex.vertex_count(), 0.0));
  return homology_basis(full_complex(complex, flat));
}

HomologyCoordinates::HomologyCoordinates(const MorseComplex& mc, int grade,
                                         const std::vector<HomologyClass>& basis)
    : mc_(&mc), grade_(grade), dimension_(basis.size()), pivot_(mc.count(grade), -1) {
  const auto insert = [&](Column col, std::vector<std::uint8_t> mask) {
    while (!col.empty() && pivot_[col.back()] >= 0) {
      const auto i = pivot_[col.back()];
      add_into(col, columns_[i]);
      for (std::size_t b = 0; b < mask.size(); ++b) mask[b] ^= masks_[i][b];
    }
    if (col.empty()) return false;
    pivot_[col.back()] = static_cast<std::int32_t>(columns_.size());
    columns_.push_back(std::move(col));
    masks_.push_back(std::move(mask));
    return true;
  };
  if (grade + 1 < mc.grades())
    for (const Column& col : mc.boundary[grade + 1])
      insert(col, std::vector<std::uint8_t>(dimension_, 0));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (basis[b].grade != grade) throw Error(ErrorKind::Domain, "basis class of wrong grade");
    std::vector<std::uint8_t> mask(dimension_, 0);
    mask[b] = 1;
    if (!insert(to_positions(mc, grade, basis[b].cells), std::move(mask)))
      throw Error(ErrorKind::Domain, "homology basis is linearly dependent");
  }
}

std::vector<std::uint8_t> HomologyCoordinates::coordinates(const HomologyClass& x) const {
  if (x.grade != grade_) throw Error(ErrorKind::Domain, "class of wrong grade");
  Column v = to_positions(*mc_, grade_, x.cells);
  if (!boundary_of(*mc_, grade_, v).empty()) throw Error(ErrorKind::NonCycle, "chain is not a cycle");
  std::vector<std::uint8_t> out(dimension_, 0);
  while (!v.empty()) {
    const auto i = pivot_[v.back()];
    if (i < 0) throw Error(ErrorKind::NonCycle, "cycle outside the span of the basis");
    add_into(v, columns_[i]);
    for (std::size_t b = 0; b < dimension_; ++b) out[b] ^= masks_[i][b];
  }
  return out;
}

}  // namespace morsespec
