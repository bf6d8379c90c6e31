#include "morsespec/gradient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "morsespec/error.hpp"

namespace morsespec {

void DiscreteGradient::pair(CellId face, CellId coface) {
  if (partner_[face] != kNone || partner_[coface] != kNone)
    throw Error(ErrorKind::Domain, "cell matched twice");
  partner_[face] = coface;
  partner_[coface] = face;
}

std::vector<CellId> DiscreteGradient::critical_cells() const {
  std::vector<CellId> out;
  for (CellId c = 0; c < static_cast<CellId>(partner_.size()); ++c)
    if (partner_[c] == kNone) out.push_back(c);
  return out;
}

std::vector<std::pair<CellId, CellId>> DiscreteGradient::pairs(const CellComplex& complex) const {
  std::vector<std::pair<CellId, CellId>> out;
  for (CellId c = 0; c < static_cast<CellId>(partner_.size()); ++c)
    if (is_tail(complex, c)) out.emplace_back(c, partner_[c]);
  return out;
}

CellId max_vertex(const CellComplex& complex, const ScalarField& field, CellId c) {
  const auto vs = complex.vertices(c);
  return *std::max_element(vs.begin(), vs.end(),
                           [&](CellId a, CellId b) { return field.key(a) < field.key(b); });
}

namespace {

enum class Status : std::uint8_t { Open, Paired, Critical };

class LowerStarMatcher {
 public:
  LowerStarMatcher(const CellComplex& complex, const ScalarField& field)
      : complex_(complex),
        field_(field),
        gradient_(complex.size()),
        status_(complex.size(), Status::Open),
        local_(complex.size(), -1),
        vertex_rank_(complex.vertex_count()) {
    std::vector<CellId> order(complex.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](CellId a, CellId b) { return field.key(a) < field.key(b); });
    for (std::size_t r = 0; r < order.size(); ++r) vertex_rank_[order[r]] = static_cast<int>(r);
  }

  DiscreteGradient run() {
    std::vector<std::vector<CellId>> stars(complex_.vertex_count());
    for (CellId c = 0; c < static_cast<CellId>(complex_.size()); ++c) {
      const auto vs = complex_.vertices(c);
      CellId top = vs.front();
      for (CellId v : vs)
        if (vertex_rank_[v] > vertex_rank_[top]) top = v;
      stars[top].push_back(c);
    }
    for (CellId v = 0; v < static_cast<CellId>(stars.size()); ++v) process(v, stars[v]);
    return std::move(gradient_);
  }

 private:
  // Position of each star cell in the star's processing order.
  void rank_star(std::vector<CellId>& star) {
    std::vector<std::vector<int>> ranks(star.size());
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (CellId v : complex_.vertices(star[i])) ranks[i].push_back(vertex_rank_[v]);
      std::sort(ranks[i].rbegin(), ranks[i].rend());
    }
    std::vector<std::size_t> idx(star.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
      return field_.key(star[a]) < field_.key(star[b]);
    });
    std::vector<CellId> sorted;
    sorted.reserve(star.size());
    for (std::size_t i : idx) sorted.push_back(star[i]);
    star.swap(sorted);
    for (std::size_t i = 0; i < star.size(); ++i) local_[star[i]] = static_cast<int>(i);
  }

  bool in_star(CellId c) const { return local_[c] >= 0; }

  int open_faces(CellId c) const {
    int n = 0;
    for (CellId f : complex_.faces(c))
      if (in_star(f) && status_[f] == Status::Open) ++n;
    return n;
  }

  CellId only_open_face(CellId c) const {
    for (CellId f : complex_.faces(c))
      if (in_star(f) && status_[f] == Status::Open) return f;
    return DiscreteGradient::kNone;
  }

  void match(CellId face, CellId coface) {
    gradient_.pair(face, coface);
    status_[face] = Status::Paired;
    status_[coface] = Status::Paired;
  }

  void queue_ready_cofaces(CellId c, std::set<int>& one) const {
    for (CellId b : complex_.cofaces(c))
      if (in_star(b) && status_[b] == Status::Open && open_faces(b) == 1) one.insert(local_[b]);
  }

  void process(CellId v, std::vector<CellId>& star) {
    if (star.size() == 1) {
      status_[v] = Status::Critical;
      return;
    }
    rank_star(star);
    // star[0] is v itself; the first edge in star order is the steepest descent.
    std::set<int> zero, one;
    CellId first_edge = DiscreteGradient::kNone;
    for (CellId c : star) {
      if (complex_.dim(c) != 1) continue;
      if (first_edge == DiscreteGradient::kNone) first_edge = c;
      else zero.insert(local_[c]);
    }
    match(v, first_edge);
    queue_ready_cofaces(first_edge, one);

    while (!zero.empty() || !one.empty()) {
      while (!one.empty()) {
        const CellId alpha = star[*one.begin()];
        one.erase(one.begin());
        if (status_[alpha] != Status::Open) continue;
        if (open_faces(alpha) == 0) {
          zero.insert(local_[alpha]);
          continue;
        }
        const CellId face = only_open_face(alpha);
        match(face, alpha);
        zero.erase(local_[face]);
        queue_ready_cofaces(alpha, one);
        queue_ready_cofaces(face, one);
      }
      while (!zero.empty()) {
        const CellId gamma = star[*zero.begin()];
        zero.erase(zero.begin());
        if (status_[gamma] != Status::Open) continue;
        status_[gamma] = Status::Critical;
        queue_ready_cofaces(gamma, one);
        break;
      }
    }
    for (CellId c : star) local_[c] = -1;
  }

  const CellComplex& complex_;
  const ScalarField& field_;
  DiscreteGradient gradient_;
  std::vector<Status> status_;
  std::vector<int> local_;
  std::vector<int> vertex_rank_;
};

}  // namespace

DiscreteGradient build_gradient(const CellComplex& complex, const ScalarField& field) {
  require_same_complex(complex, field);
  return LowerStarMatcher(complex, field).run();
}

bool is_valid_gradient(const CellComplex& complex, const ScalarField& field,
                       const DiscreteGradient& gradient) {
  if (gradient.size() != complex.size()) return false;
  for (CellId c = 0; c < static_cast<CellId>(complex.size()); ++c) {
    const CellId p = gradient.partner(c);
    if (p == DiscreteGradient::kNone) continue;
    if (gradient.partner(p) != c) return false;
    if (!gradient.is_tail(complex, c)) continue;
    if (!contains(complex.faces(p), c)) return false;
    if (field.value(c) != field.value(p)) return false;
    if (max_vertex(complex, field, c) != max_vertex(complex, field, p)) return false;
  }
  return true;
}

bool is_acyclic(const CellComplex& complex, const DiscreteGradient& gradient) {
  // Kahn's algorithm on the V-path digraph x -> z (z a face of partner(x), z != x, z a tail).
  const auto n = static_cast<CellId>(complex.size());
  std::vector<int> indegree(n, 0);
  for (CellId x = 0; x < n; ++x) {
    if (!gradient.is_tail(complex, x)) continue;
    for (CellId z : complex.faces(gradient.partner(x)))
      if (z != x && gradient.is_tail(complex, z)) ++indegree[z];
  }
  std::vector<CellId> ready;
  std::size_t tails = 0;
  for (CellId x = 0; x < n; ++x) {
    if (!gradient.is_tail(complex, x)) continue;
    ++tails;
    if (indegree[x] == 0) ready.push_back(x);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const CellId x = ready.back();
    ready.pop_back();
    ++seen;
    for (CellId z : complex.faces(gradient.partner(x)))
      if (z != x && gradient.is_tail(complex, z) && --indegree[z] == 0) ready.push_back(z);
  }
  return seen == tails;
}

}  // namespace morsespec
