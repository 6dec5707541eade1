#include "rbd/efficiency.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rbd/detail/parallel.hpp"
#include "rbd/errors.hpp"

namespace rbd {

namespace {

// Common denominator D and the integer matrix N = D * M.
std::pair<Integer, IntegerMatrix> clear_denominators(const ScaledInformationMatrix& m) {
  Integer d = 1;
  for (const auto& q : m.entries()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  IntegerMatrix n(m.v());
  for (int i = 0; i < m.v(); ++i)
    for (int j = 0; j < m.v(); ++j) {
      const Rational scaled = m(i, j) * Rational(d);
      n(i, j) = scaled.get_num();
    }
  return {d, std::move(n)};
}

std::vector<double> float_eigenvalues(const ScaledInformationMatrix& m) {
  const int v = m.v();
  Eigen::MatrixXd dense(v, v);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) dense(i, j) = m(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

struct Shape {
  int r;
  int k;
};

Shape equireplicate_shape(const BlockDesign& design) {
  const auto k = design.equal_block_size();
  const auto r = design.equal_replication();
  if (!k || !r) throw ShapeError("design must be equireplicate with equal block sizes");
  return {*r, *k};
}

}  // namespace

ScaledInformationMatrix::ScaledInformationMatrix(int v, std::vector<Rational> entries)
    : v_(v), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(v) * static_cast<std::size_t>(v))
    throw ShapeError("information matrix needs v*v entries");
}

ScaledInformationMatrix information_matrix(const ConcurrenceMatrix& lambda, int r, int k) {
  if (r <= 0 || k <= 0) throw ShapeError("r and k must be positive");
  const int v = lambda.v();
  const Rational scale(1, static_cast<unsigned long>(r) * static_cast<unsigned long>(k));
  std::vector<Rational> entries(static_cast<std::size_t>(v) * static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      Rational e = -scale * lambda(i, j);
      if (i == j) e += 1;
      entries[static_cast<std::size_t>(i) * v + j] = std::move(e);
    }
  return ScaledInformationMatrix(v, std::move(entries));
}

RationalPolynomial characteristic_polynomial(const ScaledInformationMatrix& m) {
  const auto [d, n] = clear_denominators(m);
  const auto p = characteristic_polynomial(n);
  // det(xI - M) = D^{-v} det(D x I - N): coefficient i is p_i * D^{i - v}.
  RationalPolynomial out(p.size());
  Rational scale(1);
  for (std::size_t i = p.size(); i-- > 0;) {
    out[i] = Rational(p[i]) * scale;
    out[i].canonicalize();
    scale /= Rational(d);
  }
  return out;
}

bool EfficiencySpectrum::all_exact() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const EfficiencyFactor& f) { return f.exact.has_value(); });
}

EfficiencySpectrum efficiency_spectrum_exact(const ScaledInformationMatrix& m) {
  const int v = m.v();
  const auto [d, n] = clear_denominators(m);
  IntegerPolynomial p = characteristic_polynomial(n);

  EfficiencySpectrum out;
  out.characteristic.resize(p.size());
  {
    Rational scale(1);
    for (std::size_t i = p.size(); i-- > 0;) {
      out.characteristic[i] = Rational(p[i]) * scale;
      out.characteristic[i].canonicalize();
      scale /= Rational(d);
    }
  }

  int zeros = 0;
  while (zeros < static_cast<int>(p.size()) - 1 && p[static_cast<std::size_t>(zeros)] == 0) ++zeros;
  if (zeros == 0)
    throw std::invalid_argument("matrix has no zero eigenvalue; not an information matrix");
  out.zero_multiplicity = zeros;
  out.connected = zeros == 1;

  // q(x) = p(x) / x^zeros: the nonzero eigenvalues of N = D * M.
  IntegerPolynomial q(p.begin() + zeros, p.end());
  if (out.connected) {
    // Sum of reciprocals of the roots of q is -q1/q0; A = (v-1) / (D * sum).
    const Integer num = -Integer(v - 1) * q[0];
    const Integer den = d * q[1];
    Rational a(num, den);
    a.canonicalize();
    out.a_value = std::move(a);
  }

  // Rational roots of a monic integer polynomial are integers; eigenvalues are bounded
  // by the largest absolute row sum.
  Integer bound = 0;
  for (int i = 0; i < v; ++i) {
    Integer row = 0;
    for (int j = 0; j < v; ++j) row += abs(n(i, j));
    if (row > bound) bound = row;
  }
  std::vector<std::pair<Integer, int>> integer_roots;
  for (Integer cand = -bound; cand <= bound; ++cand) {
    if (cand == 0 || q.size() <= 1) continue;
    int mult = 0;
    while (q.size() > 1 && evaluate(q, cand) == 0) {
      q = divide_by_root(q, cand);
      ++mult;
    }
    if (mult > 0) integer_roots.emplace_back(cand, mult);
  }

  for (const auto& [root, mult] : integer_roots) {
    Rational value(root, d);
    value.canonicalize();
    out.factors.push_back({value, value.get_d(), mult});
  }

  // Whatever is left of q has irrational roots; take them from a floating
  // eigendecomposition after removing the exact ones.
  if (q.size() > 1) {
    std::vector<double> approx = float_eigenvalues(m);
    std::sort(approx.begin(), approx.end());
    auto remove_nearest = [&approx](double x) {
      auto best = std::min_element(approx.begin(), approx.end(), [x](double a, double b) {
        return std::abs(a - x) < std::abs(b - x);
      });
      approx.erase(best);
    };
    for (int z = 0; z < zeros; ++z) remove_nearest(0.0);
    for (const auto& f : out.factors)
      for (int i = 0; i < f.multiplicity; ++i) remove_nearest(f.value);
    std::sort(approx.begin(), approx.end());
    for (std::size_t i = 0; i < approx.size();) {
      std::size_t j = i + 1;
      while (j < approx.size() && std::abs(approx[j] - approx[i]) < 1e-9) ++j;
      double mean = 0;
      for (std::size_t t = i; t < j; ++t) mean += approx[t];
      mean /= static_cast<double>(j - i);
      out.factors.push_back({std::nullopt, mean, static_cast<int>(j - i)});
      i = j;
    }
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const EfficiencyFactor& a, const EfficiencyFactor& b) {
              if (a.exact && b.exact) return *a.exact > *b.exact;
              return a.value > b.value;
            });
  return out;
}

ScaledInformationMatrix information_matrix(const BlockDesign& design) {
  const auto shape = equireplicate_shape(design);
  return information_matrix(concurrence_matrix(design), shape.r, shape.k);
}

ScaledInformationMatrix information_matrix(const ResolvableDesign& design) {
  require_valid(design);
  return information_matrix(concurrence_matrix(design.as_block_design()), design.r(), design.k());
}

EfficiencySpectrum efficiency_spectrum(const BlockDesign& design) {
  return efficiency_spectrum_exact(information_matrix(design));
}

EfficiencySpectrum efficiency_spectrum(const ResolvableDesign& design) {
  return efficiency_spectrum_exact(information_matrix(design));
}

namespace {

Rational require_a(const EfficiencySpectrum& s, const std::string& label) {
  if (!s.connected || !s.a_value)
    throw DisconnectedError("design" + (label.empty() ? std::string{} : " '" + label + "'") +
                            " is disconnected (" + std::to_string(s.zero_multiplicity) +
                            " zero eigenvalues)");
  return *s.a_value;
}

}  // namespace

Rational a_value(const BlockDesign& design) {
  return require_a(efficiency_spectrum(design), design.label());
}

Rational a_value(const ResolvableDesign& design) {
  return require_a(efficiency_spectrum(design), design.label());
}

double a_value_float_oracle(const BlockDesign& design) {
  const auto shape = equireplicate_shape(design);
  const int v = design.v();
  Eigen::MatrixXd lambda = Eigen::MatrixXd::Zero(v, v);
  for (const auto& block : design.blocks())
    for (int x : block)
      for (int y : block) lambda(x, y) += 1.0;
  const Eigen::MatrixXd m =
      Eigen::MatrixXd::Identity(v, v) - lambda / (static_cast<double>(shape.r) * shape.k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  if (v < 2 || ev(1) < 1e-9) throw DisconnectedError("design is disconnected");
  double reciprocal_sum = 0.0;
  for (int i = 1; i < v; ++i) reciprocal_sum += 1.0 / ev(i);
  return (v - 1) / reciprocal_sum;
}

double a_value_float_oracle(const ResolvableDesign& design) {
  require_valid(design);
  return a_value_float_oracle(design.as_block_design());
}

double average_variance(const Rational& a, int r, double sigma2) {
  if (sgn(a) <= 0) throw std::invalid_argument("A must be positive");
  if (r <= 0) throw std::invalid_argument("r must be positive");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma^2 must be positive");
  return 2.0 * sigma2 / (r * a.get_d());
}

Rational square_lattice_bound(int n, int r) {
  if (n < 2 || r < 2 || r > n + 1)
    throw ShapeError("square lattice bound needs n >= 2 and 2 <= r <= n+1");
  const Rational lower(r - 1, r);
  const int lower_mult = r * (n - 1);
  const int unit_mult = (n - 1) * (n + 1 - r);
  Rational reciprocal_sum = Rational(lower_mult) / lower + Rational(unit_mult);
  Rational a = Rational(lower_mult + unit_mult) / reciprocal_sum;
  a.canonicalize();
  return a;
}

RobustnessReport robustness(const ResolvableDesign& design, bool exclude_disconnected) {
  require_valid(design);
  RobustnessReport out;
  out.per_replicate.resize(static_cast<std::size_t>(design.r()));
  detail::parallel_for(out.per_replicate.size(), [&](std::size_t i) {
    const auto reduced = design.without_replicate(static_cast<int>(i));
    if (reduced.r() == 0) return;
    const auto spectrum = efficiency_spectrum(reduced);
    if (spectrum.connected) out.per_replicate[i] = spectrum.a_value;
  });

  Rational sum = 0;
  int counted = 0;
  for (const auto& a : out.per_replicate) {
    if (!a) {
      ++out.disconnected_deletions;
      continue;
    }
    if (!out.worst || *a < *out.worst) out.worst = *a;
    sum += *a;
    ++counted;
  }
  if (out.disconnected_deletions > 0 && !exclude_disconnected) {
    out.worst.reset();
    return out;
  }
  if (counted > 0) {
    Rational mean = sum / counted;
    mean.canonicalize();
    out.average = std::move(mean);
  }
  return out;
}

}  // namespace rbd
