#pragma once

#include <cstdint>
#include <vector>

#include "morsespec/homology.hpp"
#include "morsespec/morse.hpp"

namespace morsespec {

/// Dense matrix over GF(2), row-major.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

struct ContinuationReport {
  int grade = 0;
  double source_sigma = 0.0;
  double target_sigma = 0.0;
  double lower = 0.0;  // min over vertices of (f_plus - f_minus)
  double upper = 0.0;  // max over vertices of (f_plus - f_minus)
  bool pass = false;
};

/// Continuation from the Morse homology of one field to that of another,
/// routed through the full complex: expand along the source flow, then
/// project along the target flow.
HomologyClass continuation_map(const MorseModel& minus, const MorseModel& plus,
                               const HomologyClass& x);
HomologyClass continuation_map(const CellComplex& complex, const ScalarField& f_minus,
                               const ScalarField& f_plus, const HomologyClass& x);

/// Matrix of the continuation in grade k with respect to homology_basis of
/// each side: column j holds the coordinates of the image of source class j.
Gf2Matrix continuation_matrix(const MorseModel& minus, const MorseModel& plus, int grade);

/// Checks composition (a -> b -> c equals a -> c) and invertibility
/// (b -> a undoes a -> b) in every grade.
bool functoriality_check(const CellComplex& complex, const ScalarField& f_a,
                         const ScalarField& f_b, const ScalarField& f_c);

ContinuationReport sandwich_check(const MorseModel& minus, const MorseModel& plus,
                                  const HomologyClass& x);
ContinuationReport sandwich_check(const CellComplex& complex, const ScalarField& f_minus,
                                  const ScalarField& f_plus, const HomologyClass& x);

}  // namespace morsespec
