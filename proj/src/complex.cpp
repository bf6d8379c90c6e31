#include "morsespec/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "morsespec/error.hpp"

namespace morsespec {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

}  // namespace

CellComplex::CellComplex(std::vector<Cell> cells, Descriptor descriptor)
    : cells_(std::move(cells)), descriptor_(descriptor) {
  const auto n = static_cast<CellId>(cells_.size());
  for (CellId c = 0; c < n; ++c) {
    Cell& cell = cells_[c];
    if (cell.id != c) throw Error(ErrorKind::Domain, "cell ids must be dense and ordered");
    if (cell.dim < 0) throw Error(ErrorKind::Domain, "negative cell dimension");
    std::sort(cell.faces.begin(), cell.faces.end());
    if (std::adjacent_find(cell.faces.begin(), cell.faces.end()) != cell.faces.end())
      throw Error(ErrorKind::Domain, "duplicate face in cell " + std::to_string(c));
    if (cell.dim == 0 && !cell.faces.empty())
      throw Error(ErrorKind::Domain, "0-cell with faces: " + std::to_string(c));
    if (cell.dim > 0 && cell.faces.empty())
      throw Error(ErrorKind::Domain, "cell without faces: " + std::to_string(c));
    for (CellId f : cell.faces) {
      if (f < 0 || f >= n || cells_[f].dim != cell.dim - 1)
        throw Error(ErrorKind::Domain,
                    "face " + std::to_string(f) + " of cell " + std::to_string(c) +
                        " is not of codimension one");
    }
    top_dim_ = std::max(top_dim_, cell.dim);
  }

  cofaces_.assign(n, {});
  for (const Cell& cell : cells_)
    for (CellId f : cell.faces) cofaces_[f].push_back(cell.id);

  by_dim_.assign(top_dim_ + 1, {});
  for (const Cell& cell : cells_) by_dim_[cell.dim].push_back(cell.id);

  vertices_.assign(n, {});
  for (int k = 0; k <= top_dim_; ++k) {
    for (CellId c : by_dim_[k]) {
      if (k == 0) {
        vertices_[c] = {c};
        continue;
      }
      std::vector<CellId> vs;
      for (CellId f : cells_[c].faces) vs.insert(vs.end(), vertices_[f].begin(), vertices_[f].end());
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      vertices_[c] = std::move(vs);
    }
  }

  signature_ = kFnvOffset;
  mix(signature_, cells_.size());
  for (const Cell& cell : cells_) {
    mix(signature_, static_cast<std::uint64_t>(cell.dim));
    for (CellId f : cell.faces) mix(signature_, static_cast<std::uint64_t>(f));
  }
}

std::span<const CellId> CellComplex::cells_of_dim(int k) const {
  if (k < 0 || k > top_dim_) return {};
  return by_dim_[k];
}

long CellComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= top_dim_; ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
  return chi;
}

bool CellComplex::has_even_incidence() const {
  for (const Cell& cell : cells_) {
    if (cell.dim < 2) continue;
    if (!boundary(cell.faces).empty()) return false;
  }
  return true;
}

Chain CellComplex::boundary(std::span<const CellId> chain) const {
  std::vector<CellId> all;
  for (CellId c : chain) all.insert(all.end(), cells_[c].faces.begin(), cells_[c].faces.end());
  return make_chain(std::move(all));
}

CellComplex build_torus_grid(int nx, int ny) {
  if (nx < 2 || ny < 2)
    throw Error(ErrorKind::DimensionTooSmall, "torus grid needs nx, ny >= 2");
  const int n = nx * ny;
  auto vid = [&](int i, int j) { return ((j + ny) % ny) * nx + (i + nx) % nx; };
  std::vector<Cell> cells;
  cells.reserve(4 * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cells.push_back({v, 0, {}});
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      cells.push_back({n + vid(i, j), 1, {vid(i, j), vid(i + 1, j)}});
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      cells.push_back({2 * n + vid(i, j), 1, {vid(i, j), vid(i, j + 1)}});
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      cells.push_back({3 * n + vid(i, j), 2,
                       {n + vid(i, j), n + vid(i, j + 1), 2 * n + vid(i, j), 2 * n + vid(i + 1, j)}});
  return CellComplex(std::move(cells), TorusGrid{nx, ny});
}

CellComplex build_from_simplicial(const std::vector<std::vector<long long>>& simplices) {
  if (simplices.empty()) throw Error(ErrorKind::EmptyInput, "no simplices given");

  std::vector<long long> labels;
  for (const auto& s : simplices) {
    if (s.empty()) throw Error(ErrorKind::MalformedSimplex, "empty simplex");
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::MalformedSimplex, "simplex with repeated vertex");
    if (sorted.size() > 16) throw Error(ErrorKind::MalformedSimplex, "simplex too large");
    labels.insert(labels.end(), sorted.begin(), sorted.end());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto vertex_of = [&](long long label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };

  // Face closure keyed by (dim, sorted vertex tuple) so that ids come out
  // grouped by dimension and lexicographic within a dimension.
  std::map<std::pair<int, std::vector<int>>, CellId> index;
  for (const auto& s : simplices) {
    std::vector<int> vs;
    for (long long l : s) vs.push_back(vertex_of(l));
    std::sort(vs.begin(), vs.end());
    const unsigned m = static_cast<unsigned>(vs.size());
    for (unsigned mask = 1; mask < (1U << m); ++mask) {
      std::vector<int> sub;
      for (unsigned b = 0; b < m; ++b)
        if (mask & (1U << b)) sub.push_back(vs[b]);
      const int d = static_cast<int>(sub.size()) - 1;
      index.emplace(std::make_pair(d, std::move(sub)), 0);
    }
  }
  CellId next = 0;
  for (auto& [key, id] : index) id = next++;

  std::vector<Cell> cells;
  cells.reserve(index.size());
  for (const auto& [key, id] : index) {
    const auto& [d, vs] = key;
    Cell cell{id, d, {}};
    if (d > 0) {
      for (std::size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<int> face;
        for (std::size_t t = 0; t < vs.size(); ++t)
          if (t != drop) face.push_back(vs[t]);
        cell.faces.push_back(index.at({d - 1, face}));
      }
    }
    cells.push_back(std::move(cell));
  }
  return CellComplex(std::move(cells), Simplicial{});
}

ScalarField::ScalarField(const CellComplex& complex, std::vector<double> vertex_values,
                         TieBreak tie_break)
    : vertex_values_(std::move(vertex_values)),
      tie_break_(tie_break),
      signature_(complex.signature()) {
  if (vertex_values_.size() != complex.vertex_count())
    throw Error(ErrorKind::ArityMismatch,
                "expected " + std::to_string(complex.vertex_count()) + " vertex values, got " +
                    std::to_string(vertex_values_.size()));
  for (std::size_t v = 0; v < vertex_values_.size(); ++v)
    if (!std::isfinite(vertex_values_[v]))
      throw Error(ErrorKind::NonFinite, "non-finite value at vertex " + std::to_string(v));

  const auto n = complex.size();
  cell_values_.resize(n);
  dims_.resize(n);
  for (CellId c = 0; c < static_cast<CellId>(n); ++c) {
    dims_[c] = complex.dim(c);
    double m = -HUGE_VAL;
    for (CellId v : complex.vertices(c)) m = std::max(m, vertex_values_[v]);
    cell_values_[c] = m;
  }
}

OrderKey ScalarField::key(CellId c) const {
  const std::int64_t tie = tie_break_ == TieBreak::Ascending ? c : -static_cast<std::int64_t>(c);
  return {cell_values_[c], dims_[c], tie};
}

double ScalarField::min_value() const {
  return *std::min_element(vertex_values_.begin(), vertex_values_.end());
}

double ScalarField::max_value() const {
  return *std::max_element(vertex_values_.begin(), vertex_values_.end());
}

ScalarField make_field(const CellComplex& complex, std::vector<double> values, TieBreak tie_break) {
  return ScalarField(complex, std::move(values), tie_break);
}

double c0_distance(const ScalarField& f, const ScalarField& g) {
  if (f.complex_signature() != g.complex_signature() ||
      f.vertex_values().size() != g.vertex_values().size())
    throw Error(ErrorKind::ComplexMismatch, "fields live on different complexes");
  double d = 0.0;
  for (std::size_t v = 0; v < f.vertex_values().size(); ++v)
    d = std::max(d, std::abs(f.vertex_values()[v] - g.vertex_values()[v]));
  return d;
}

void require_same_complex(const CellComplex& complex, const ScalarField& field) {
  if (field.complex_signature() != complex.signature() || field.cell_count() != complex.size())
    throw Error(ErrorKind::ComplexMismatch, "field was built on a different complex");
}

}  // namespace morsespec
