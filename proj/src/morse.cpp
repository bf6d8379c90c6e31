#include "morsespec/morse.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "morsespec/error.hpp"

namespace morsespec {

std::size_t MorseComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& g : cells) n += g.size();
  return n;
}

ChainEquivalence::ChainEquivalence(const CellComplex& complex, DiscreteGradient gradient)
    : complex_(&complex), gradient_(std::move(gradient)) {
  if (gradient_.size() != complex.size())
    throw Error(ErrorKind::ComplexMismatch, "gradient does not match complex");
  const auto n = static_cast<CellId>(complex.size());
  const auto successors = [&](CellId x, auto&& visit) {
    for (CellId z : complex.faces(gradient_.partner(x)))
      if (z != x && gradient_.is_tail(complex, z)) visit(z);
  };

  std::vector<int> indegree(n, 0);
  std::vector<CellId> ready;
  std::size_t tails = 0;
  for (CellId x = 0; x < n; ++x)
    if (gradient_.is_tail(complex, x)) successors(x, [&](CellId z) { ++indegree[z]; });
  for (CellId x = 0; x < n; ++x) {
    if (!gradient_.is_tail(complex, x)) continue;
    ++tails;
    if (indegree[x] == 0) ready.push_back(x);
  }
  std::vector<CellId> order;
  order.reserve(tails);
  while (!ready.empty()) {
    const CellId x = ready.back();
    ready.pop_back();
    order.push_back(x);
    successors(x, [&](CellId z) {
      if (--indegree[z] == 0) ready.push_back(z);
    });
  }
  if (order.size() != tails) throw Error(ErrorKind::CycleDetected, "closed V-path in matching");

  flow_rank_.assign(n, -1);
  for (std::size_t r = 0; r < order.size(); ++r) flow_rank_[order[r]] = static_cast<int>(r);

  reach_.assign(n, {});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const CellId x = *it;
    Chain acc;
    for (CellId z : complex.faces(gradient_.partner(x))) {
      if (z == x) continue;
      if (gradient_.is_critical(z)) {
        const CellId single[] = {z};
        add_into(acc, single);
      } else if (gradient_.is_tail(complex, z)) {
        add_into(acc, reach_[z]);
      }
    }
    reach_[x] = std::move(acc);
  }
}

Chain ChainEquivalence::project(std::span<const CellId> chain) const {
  std::vector<CellId> critical;
  Chain acc;
  for (CellId c : chain) {
    if (gradient_.is_critical(c)) critical.push_back(c);
    else if (gradient_.is_tail(*complex_, c)) add_into(acc, reach_[c]);
  }
  add_into(acc, make_chain(std::move(critical)));
  return acc;
}

Chain ChainEquivalence::expand(std::span<const CellId> morse_chain) const {
  for (CellId c : morse_chain)
    if (!gradient_.is_critical(c))
      throw Error(ErrorKind::NonCriticalSupport,
                  "cell " + std::to_string(c) + " is not critical");
  std::vector<CellId> out(morse_chain.begin(), morse_chain.end());
  std::set<std::pair<int, CellId>> pending;
  const auto toggle = [&](CellId z) {
    const auto key = std::make_pair(flow_rank_[z], z);
    if (!pending.erase(key)) pending.insert(key);
  };
  for (CellId z : complex_->boundary(morse_chain))
    if (flow_rank_[z] >= 0) toggle(z);
  while (!pending.empty()) {
    const CellId x = pending.begin()->second;
    pending.erase(pending.begin());
    const CellId head = gradient_.partner(x);
    out.push_back(head);
    for (CellId z : complex_->faces(head))
      if (z != x && flow_rank_[z] >= 0) toggle(z);
  }
  return make_chain(std::move(out));
}

namespace {

MorseComplex assemble(const CellComplex& complex, const ScalarField& field,
                      const std::vector<CellId>& generators, Basis basis,
                      const auto& boundary_of) {
  MorseComplex mc;
  mc.basis = basis;
  mc.cells.assign(std::max(complex.top_dim() + 1, 0), {});
  mc.boundary.assign(mc.cells.size(), {});
  mc.position.assign(complex.size(), -1);
  for (CellId c : generators) mc.cells[complex.dim(c)].push_back({c, field.value(c), field.key(c)});
  for (auto& grade : mc.cells) {
    std::sort(grade.begin(), grade.end(),
              [](const CriticalCell& a, const CriticalCell& b) { return a.key < b.key; });
    for (std::size_t i = 0; i < grade.size(); ++i) mc.position[grade[i].id] = static_cast<std::int32_t>(i);
  }
  for (int k = 0; k < mc.grades(); ++k) {
    mc.boundary[k].resize(mc.cells[k].size());
    if (k == 0) continue;
    for (std::size_t i = 0; i < mc.cells[k].size(); ++i) {
      const Chain image = boundary_of(mc.cells[k][i].id);
      Column col;
      col.reserve(image.size());
      for (CellId b : image) col.push_back(mc.position[b]);
      std::sort(col.begin(), col.end());
      mc.boundary[k][i] = std::move(col);
    }
  }
  return mc;
}

}  // namespace

MorseComplex build_morse_complex(const CellComplex& complex, const ScalarField& field,
                                 const ChainEquivalence& equivalence) {
  require_same_complex(complex, field);
  return assemble(complex, field, equivalence.gradient().critical_cells(), Basis::Morse,
                  [&](CellId a) { return equivalence.project(complex.faces(a)); });
}

MorseComplex build_morse_complex(const CellComplex& complex, const ScalarField& field,
                                 const DiscreteGradient& gradient) {
  return build_morse_complex(complex, field, ChainEquivalence(complex, gradient));
}

MorseComplex full_complex(const CellComplex& complex, const ScalarField& field) {
  require_same_complex(complex, field);
  std::vector<CellId> all(complex.size());
  for (CellId c = 0; c < static_cast<CellId>(all.size()); ++c) all[c] = c;
  return assemble(complex, field, all, Basis::Full, [&](CellId a) {
    return Chain(complex.faces(a).begin(), complex.faces(a).end());
  });
}

Chain flow_expand(const CellComplex& complex, const DiscreteGradient& gradient,
                  std::span<const CellId> morse_chain) {
  return ChainEquivalence(complex, gradient).expand(morse_chain);
}

Chain flow_project(const CellComplex& complex, const DiscreteGradient& gradient,
                   std::span<const CellId> chain) {
  return ChainEquivalence(complex, gradient).project(chain);
}

MorseModel analyze(const CellComplex& complex, const ScalarField& field) {
  ChainEquivalence equivalence(complex, build_gradient(complex, field));
  MorseComplex mc = build_morse_complex(complex, field, equivalence);
  return MorseModel{field, std::move(equivalence), std::move(mc)};
}

Column to_positions(const MorseComplex& mc, int grade, std::span<const CellId> chain) {
  Column col;
  col.reserve(chain.size());
  for (CellId c : chain) {
    if (c < 0 || c >= static_cast<CellId>(mc.position.size()) || mc.position[c] < 0 ||
        grade < 0 || grade >= mc.grades() ||
        mc.cells[grade][mc.position[c]].id != c)
      throw Error(ErrorKind::NonCriticalSupport,
                  "cell " + std::to_string(c) + " is not a grade-" + std::to_string(grade) +
                      " generator");
    col.push_back(mc.position[c]);
  }
  std::sort(col.begin(), col.end());
  return col;
}

Chain to_cells(const MorseComplex& mc, int grade, std::span<const std::int32_t> column) {
  Chain out;
  out.reserve(column.size());
  for (auto p : column) out.push_back(mc.cells[grade][p].id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace morsespec
