#include "morsespec/continuation.hpp"

#include <algorithm>

#include "morsespec/error.hpp"
#include "morsespec/spectral.hpp"

namespace morsespec {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::Domain, "matrix shapes do not compose");
  Gf2Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k))
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) ^= b(k, j);
  return out;
}

namespace {

void require_compatible(const MorseModel& minus, const MorseModel& plus) {
  if (&minus.equivalence.complex() != &plus.equivalence.complex() &&
      minus.field.complex_signature() != plus.field.complex_signature())
    throw Error(ErrorKind::ComplexMismatch, "fields live on different complexes");
}

}  // namespace

HomologyClass continuation_map(const MorseModel& minus, const MorseModel& plus,
                               const HomologyClass& x) {
  require_compatible(minus, plus);
  if (x.cells.empty()) throw Error(ErrorKind::ZeroClass, "continuation of the zero class");
  Column v = to_positions(minus.complex, x.grade, x.cells);
  if (!boundary_of(minus.complex, x.grade, v).empty())
    throw Error(ErrorKind::NonCycle, "representative is not a cycle");
  Echelon(minus.complex, x.grade).reduce(v);
  if (v.empty()) throw Error(ErrorKind::ZeroClass, "representative is a boundary");

  const Chain full = minus.equivalence.expand(x.cells);
  return {x.grade, plus.equivalence.project(full), Basis::Morse, false};
}

HomologyClass continuation_map(const CellComplex& complex, const ScalarField& f_minus,
                               const ScalarField& f_plus, const HomologyClass& x) {
  require_same_complex(complex, f_minus);
  require_same_complex(complex, f_plus);
  return continuation_map(analyze(complex, f_minus), analyze(complex, f_plus), x);
}

Gf2Matrix continuation_matrix(const MorseModel& minus, const MorseModel& plus, int grade) {
  const auto source = homology_basis(minus.complex);
  const auto target = homology_basis(plus.complex);
  const auto& src = source.at(grade);
  const auto& dst = target.at(grade);
  const HomologyCoordinates coords(plus.complex, grade, dst);
  Gf2Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto c = coords.coordinates(continuation_map(minus, plus, src[j]));
    for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

bool functoriality_check(const CellComplex& complex, const ScalarField& f_a,
                         const ScalarField& f_b, const ScalarField& f_c) {
  require_same_complex(complex, f_a);
  require_same_complex(complex, f_b);
  require_same_complex(complex, f_c);
  const MorseModel a = analyze(complex, f_a);
  const MorseModel b = analyze(complex, f_b);
  const MorseModel c = analyze(complex, f_c);
  for (int k = 0; k <= complex.top_dim(); ++k) {
    const Gf2Matrix ab = continuation_matrix(a, b, k);
    const Gf2Matrix bc = continuation_matrix(b, c, k);
    const Gf2Matrix ac = continuation_matrix(a, c, k);
    const Gf2Matrix ba = continuation_matrix(b, a, k);
    const Gf2Matrix aa = continuation_matrix(a, a, k);
    if (!(ac == bc * ab)) return false;
    if (!(ba * ab == Gf2Matrix::identity(ab.cols()))) return false;
    if (!(aa == Gf2Matrix::identity(aa.cols()))) return false;
  }
  return true;
}

ContinuationReport sandwich_check(const MorseModel& minus, const MorseModel& plus,
                                  const HomologyClass& x) {
  const auto fm = minus.field.vertex_values();
  const auto fp = plus.field.vertex_values();
  ContinuationReport r;
  r.grade = x.grade;
  r.source_sigma = spectral_value(minus.complex, x).sigma;
  r.target_sigma = spectral_value(plus.complex, continuation_map(minus, plus, x)).sigma;
  r.lower = fp[0] - fm[0];
  r.upper = r.lower;
  for (std::size_t v = 1; v < fm.size(); ++v) {
    r.lower = std::min(r.lower, fp[v] - fm[v]);
    r.upper = std::max(r.upper, fp[v] - fm[v]);
  }
  const double diff = r.target_sigma - r.source_sigma;
  r.pass = r.lower <= diff && diff <= r.upper;
  return r;
}

ContinuationReport sandwich_check(const CellComplex& complex, const ScalarField& f_minus,
                                  const ScalarField& f_plus, const HomologyClass& x) {
  require_same_complex(complex, f_minus);
  require_same_complex(complex, f_plus);
  return sandwich_check(analyze(complex, f_minus), analyze(complex, f_plus), x);
}

}  // namespace morsespec
