#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/design.hpp"
#include "rbd/polynomial.hpp"
#include "rbd/rational.hpp"

namespace rbd {

// I - (rk)^{-1} Lambda, exact.
class ScaledInformationMatrix {
public:
  ScaledInformationMatrix(int v, std::vector<Rational> entries);

  int v() const noexcept { return v_; }
  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * v_ + j];
  }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

private:
  int v_;
  std::vector<Rational> entries_;
};

ScaledInformationMatrix information_matrix(const ConcurrenceMatrix& lambda, int r, int k);

// Monic det(xI - M) with exact rational coefficients, ascending powers.
RationalPolynomial characteristic_polynomial(const ScaledInformationMatrix& m);

struct EfficiencyFactor {
  std::optional<Rational> exact;  // set when the eigenvalue is rational
  double value = 0.0;
  int multiplicity = 0;
};

struct EfficiencySpectrum {
  // Nonzero eigenvalues, descending; multiplicities sum to v - 1 when connected.
  std::vector<EfficiencyFactor> factors;
  std::optional<Rational> a_value;  // harmonic mean of the factors; unset when disconnected
  bool connected = false;
  int zero_multiplicity = 0;  // eigenvalue 0 including the forced constant-vector one
  RationalPolynomial characteristic;

  bool all_exact() const;
};

// Exact spectrum via the characteristic polynomial: A comes straight from its two
// lowest nonzero coefficients; rational eigenvalues are extracted exactly, anything
// left is reported as a floating approximation.
EfficiencySpectrum efficiency_spectrum_exact(const ScaledInformationMatrix& m);

// Equireplicate, equal-block-size designs (resolvable designs and their duals).
ScaledInformationMatrix information_matrix(const BlockDesign& design);
ScaledInformationMatrix information_matrix(const ResolvableDesign& design);
EfficiencySpectrum efficiency_spectrum(const BlockDesign& design);
EfficiencySpectrum efficiency_spectrum(const ResolvableDesign& design);

// Exact A. Throws DisconnectedError.
Rational a_value(const BlockDesign& design);
Rational a_value(const ResolvableDesign& design);

// A from a floating symmetric eigendecomposition; shares no code with the exact path.
// Throws DisconnectedError when the second-smallest eigenvalue is numerically zero.
double a_value_float_oracle(const BlockDesign& design);
double a_value_float_oracle(const ResolvableDesign& design);

// 2 sigma^2 / (r A). Throws std::invalid_argument unless A > 0, r > 0, sigma2 > 0.
double average_variance(const Rational& a, int r, double sigma2);

// A of a square lattice for n^2 varieties with r replicates (2 <= r <= n+1):
// factors (r-1)/r with multiplicity r(n-1) and 1 with multiplicity (n-1)(n+1-r).
Rational square_lattice_bound(int n, int r);

struct RobustnessReport {
  // A after deleting replicate i; nullopt when that deletion disconnects the design.
  std::vector<std::optional<Rational>> per_replicate;
  std::optional<Rational> worst;
  std::optional<Rational> average;
  int disconnected_deletions = 0;
};

// Single-replicate-loss robustness. Disconnected deletions make worst/average unset
// unless exclude_disconnected is true, in which case they are skipped.
RobustnessReport robustness(const ResolvableDesign& design, bool exclude_disconnected = false);

}  // namespace rbd
