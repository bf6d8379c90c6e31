#pragma once

#include <span>
#include <vector>

#include "morsespec/complex.hpp"
#include "morsespec/homology.hpp"
#include "morsespec/morse.hpp"

namespace morsespec {

struct SpectralReport {
  double sigma = 0.0;
  CellId critical_cell = -1;  // the witness's top cell; sigma is its value
  int grade = 0;
  HomologyClass witness;      // minimax representative of the input class
  bool spectrum_member = false;
};

/// max of the field over the support of a nonzero chain. Throws ZeroChain.
double chain_action(const ScalarField& field, std::span<const CellId> chain);

/// Minimax value of a nonzero class: the smallest achievable maximum over
/// all representatives. Computed by cancelling the representative's top cell
/// against echelon boundary pivots until it is no longer a pivot.
///
/// Throws NonCycle for a non-cycle and ZeroClass for a boundary.
SpectralReport spectral_value(const MorseComplex& mc, const HomologyClass& x);

/// Sorted distinct values of the critical cells.
std::vector<double> spectrum(const MorseComplex& mc);

/// Spectral invariant of a full-complex class y for the given field.
SpectralReport rho(const MorseModel& model, const HomologyClass& y);
SpectralReport rho(const CellComplex& complex, const ScalarField& field, const HomologyClass& y);

struct LipschitzResult {
  double lhs = 0.0;  // |rho_y(f1) - rho_y(f2)|
  double rhs = 0.0;  // c0 distance
  bool pass = false;
};

LipschitzResult lipschitz_check(const CellComplex& complex, const ScalarField& f1,
                                const ScalarField& f2, const HomologyClass& y);

bool spectrum_membership(const CellComplex& complex, const ScalarField& field,
                         const HomologyClass& y);

struct SweepResult {
  std::vector<double> values;
  bool constant = false;
  /// Consecutive members are closer in C0 than the smallest gap of the
  /// common spectrum.
  bool gap_condition = false;
  double min_gap = 0.0;
  double max_step = 0.0;
};

/// Evaluates rho_y along a finite family whose spectra must coincide.
/// Throws SpectrumMismatch otherwise.
SweepResult invariance_sweep(const CellComplex& complex, std::span<const ScalarField> family,
                             const HomologyClass& y);

}  // namespace morsespec
