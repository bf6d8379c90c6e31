#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "morsespec/complex.hpp"
#include "morsespec/morse.hpp"

namespace support {

using namespace morsespec;

inline CellComplex tetrahedron_boundary() {
  return build_from_simplicial({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline CellComplex cycle_graph(int n) {
  std::vector<std::vector<long long>> s;
  for (int i = 0; i < n; ++i) s.push_back({i, (i + 1) % n});
  return build_from_simplicial(s);
}

/// Six-vertex triangulation of the real projective plane.
inline CellComplex projective_plane() {
  return build_from_simplicial({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/// Random pure-ish simplicial complex: a handful of random simplices of
/// dimension up to 3 on n vertices.
inline CellComplex random_simplicial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(4, 9);
  const int n = nv(rng);
  std::uniform_int_distribution<int> ns(2, 10), dim(1, 3), vert(0, n - 1);
  std::vector<std::vector<long long>> simplices;
  const int count = ns(rng);
  for (int s = 0; s < count; ++s) {
    const int d = dim(rng);
    std::vector<long long> simplex;
    while (static_cast<int>(simplex.size()) < d + 1) {
      const long long v = vert(rng);
      if (std::find(simplex.begin(), simplex.end(), v) == simplex.end()) simplex.push_back(v);
    }
    simplices.push_back(simplex);
  }
  return build_from_simplicial(simplices);
}

inline CellComplex random_torus(std::mt19937_64& rng, int lo = 2, int hi = 6) {
  std::uniform_int_distribution<int> side(lo, hi);
  const int nx = side(rng);
  return build_torus_grid(nx, side(rng));
}

inline CellComplex random_complex(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return random_simplicial(rng);
    case 1: return tetrahedron_boundary();
    case 2: return projective_plane();
    default: return random_torus(rng);
  }
}

/// Values drawn from a small integer range so that ties are common.
inline std::vector<double> tied_values(const CellComplex& c, std::mt19937_64& rng, int levels = 4) {
  std::uniform_int_distribution<int> u(0, levels - 1);
  std::vector<double> v(c.vertex_count());
  for (double& x : v) x = u(rng);
  return v;
}

inline std::vector<double> uniform_values(const CellComplex& c, std::mt19937_64& rng,
                                          double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(c.vertex_count());
  for (double& x : v) x = u(rng);
  return v;
}

inline std::vector<double> any_values(const CellComplex& c, std::mt19937_64& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? tied_values(c, rng) : uniform_values(c, rng);
}

/// Rank over GF(2) of a dense 0/1 matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !m[p][c]) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

/// Betti numbers of the cell complex from dense incidence matrices.
inline std::vector<int> dense_betti(const CellComplex& c) {
  const int top = c.top_dim();
  std::vector<std::size_t> rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto rows = c.cells_of_dim(k - 1);
    const auto cols = c.cells_of_dim(k);
    std::vector<std::vector<std::uint8_t>> m(rows.size(), std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (CellId f : c.faces(cols[j])) {
        const auto i = std::lower_bound(rows.begin(), rows.end(), f) - rows.begin();
        m[i][j] ^= 1;
      }
    rank[k] = dense_rank(std::move(m));
  }
  std::vector<int> betti(top + 1);
  for (int k = 0; k <= top; ++k)
    betti[k] = static_cast<int>(c.count(k) - rank[k] - rank[k + 1]);
  return betti;
}

inline double vertex_min(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }
inline double vertex_max(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace support
