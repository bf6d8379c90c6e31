#include "morsespec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morsespec/error.hpp"

namespace morsespec {

double chain_action(const ScalarField& field, std::span<const CellId> chain) {
  if (chain.empty()) throw Error(ErrorKind::ZeroChain, "action of the zero chain is undefined");
  double m = -std::numeric_limits<double>::infinity();
  for (CellId c : chain) m = std::max(m, field.value(c));
  return m;
}

std::vector<double> spectrum(const MorseComplex& mc) {
  std::vector<double> values;
  for (const auto& grade : mc.cells)
    for (const CriticalCell& c : grade) values.push_back(c.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

SpectralReport spectral_value(const MorseComplex& mc, const HomologyClass& x) {
  if (x.cells.empty()) throw Error(ErrorKind::ZeroClass, "spectral value of the zero class");
  Column v = to_positions(mc, x.grade, x.cells);
  if (!boundary_of(mc, x.grade, v).empty())
    throw Error(ErrorKind::NonCycle, "representative is not a cycle");
  Echelon(mc, x.grade).reduce(v);
  if (v.empty()) throw Error(ErrorKind::ZeroClass, "representative is a boundary");

  const CriticalCell& top = mc.cells[x.grade][v.back()];
  SpectralReport report;
  report.sigma = top.value;
  report.critical_cell = top.id;
  report.grade = x.grade;
  report.witness = {x.grade, to_cells(mc, x.grade, v), mc.basis, true};
  const auto spec = spectrum(mc);
  report.spectrum_member = std::binary_search(spec.begin(), spec.end(), report.sigma);
  return report;
}

SpectralReport rho(const MorseModel& model, const HomologyClass& y) {
  const CellComplex& complex = model.equivalence.complex();
  if (y.basis != Basis::Full)
    throw Error(ErrorKind::Domain, "rho expects a class of the full complex");
  if (y.cells.empty()) throw Error(ErrorKind::ZeroClass, "rho of the zero class");
  for (CellId c : y.cells)
    if (c < 0 || c >= static_cast<CellId>(complex.size()) || complex.dim(c) != y.grade)
      throw Error(ErrorKind::ComplexMismatch, "class does not live on this complex");
  if (!complex.boundary(y.cells).empty()) throw Error(ErrorKind::NonCycle, "class is not a cycle");
  HomologyClass x{y.grade, model.equivalence.project(y.cells), Basis::Morse, false};
  return spectral_value(model.complex, x);
}

SpectralReport rho(const CellComplex& complex, const ScalarField& field, const HomologyClass& y) {
  return rho(analyze(complex, field), y);
}

LipschitzResult lipschitz_check(const CellComplex& complex, const ScalarField& f1,
                                const ScalarField& f2, const HomologyClass& y) {
  LipschitzResult r;
  r.lhs = std::abs(rho(complex, f1, y).sigma - rho(complex, f2, y).sigma);
  r.rhs = c0_distance(f1, f2);
  r.pass = r.lhs <= r.rhs;
  return r;
}

bool spectrum_membership(const CellComplex& complex, const ScalarField& field,
                         const HomologyClass& y) {
  const MorseModel model = analyze(complex, field);
  const double sigma = rho(model, y).sigma;
  const auto spec = spectrum(model.complex);
  return std::binary_search(spec.begin(), spec.end(), sigma);
}

SweepResult invariance_sweep(const CellComplex& complex, std::span<const ScalarField> family,
                             const HomologyClass& y) {
  if (family.empty()) throw Error(ErrorKind::EmptyInput, "empty family");
  SweepResult out;
  std::vector<double> common;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const MorseModel model = analyze(complex, family[i]);
    auto spec = spectrum(model.complex);
    if (i == 0) common = spec;
    else if (spec != common)
      throw Error(ErrorKind::SpectrumMismatch,
                  "member " + std::to_string(i) + " has a different spectrum");
    out.values.push_back(rho(model, y).sigma);
    if (i > 0) out.max_step = std::max(out.max_step, c0_distance(family[i - 1], family[i]));
  }
  out.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < common.size(); ++i)
    out.min_gap = std::min(out.min_gap, common[i] - common[i - 1]);
  out.gap_condition = out.max_step < out.min_gap;
  out.constant = std::all_of(out.values.begin(), out.values.end(),
                             [&](double v) { return v == out.values.front(); });
  return out;
}

}  // namespace morsespec
