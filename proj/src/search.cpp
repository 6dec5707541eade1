#include "rbd/search.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rbd/detail/parallel.hpp"
#include "rbd/efficiency.hpp"

namespace rbd {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kZeroEigenvalue = 1e-9;
constexpr double kImprovement = 1e-10;

// Inverse of M + J/v, or nullopt when M has a second zero eigenvalue.
std::optional<Eigen::MatrixXd> shifted_inverse(const std::vector<int>& lambda, int v, int r, int k) {
  const double s = 1.0 / (static_cast<double>(r) * k);
  Eigen::MatrixXd c(v, v);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      c(i, j) = (i == j ? 1.0 : 0.0) - s * lambda[static_cast<std::size_t>(i) * v + j] + 1.0 / v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(c);
  const auto& values = solver.eigenvalues();
  if (values.minCoeff() < kZeroEigenvalue) return std::nullopt;
  const auto& vectors = solver.eigenvectors();
  return vectors * values.cwiseInverse().asDiagonal() * vectors.transpose();
}

std::vector<int> concurrence_of(const std::vector<Replicate>& reps, int v) {
  std::vector<int> lambda(static_cast<std::size_t>(v) * v, 0);
  for (const auto& rep : reps)
    for (const auto& block : rep)
      for (int x : block)
        for (int y : block) ++lambda[static_cast<std::size_t>(x) * v + y];
  return lambda;
}

}  // namespace

void SearchConfig::validate() const {
  if (v < 1 || k < 1 || v % k != 0) throw std::invalid_argument("v must be a positive multiple of k");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (static_cast<long>(r) * (v / k) * (k - 1) < v - 1)
    throw std::invalid_argument("no connected design exists with these v, k, r");
  if (!(cooling_rate > 0.0 && cooling_rate < 1.0))
    throw std::invalid_argument("cooling rate must lie in (0, 1)");
  if (!(initial_temperature > 0.0) || !(final_temperature > 0.0) ||
      final_temperature > initial_temperature)
    throw std::invalid_argument("temperatures must satisfy 0 < final <= initial");
  if (moves_per_temperature < 1) throw std::invalid_argument("moves per temperature must be positive");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (time_budget_seconds < 0.0) throw std::invalid_argument("time budget must be non-negative");
  if (refresh_interval < 1) throw std::invalid_argument("refresh interval must be positive");
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

int Rng::below(int n) {
  const auto bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_(); while (x >= limit);
  return static_cast<int>(x % bound);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

ResolvableDesign random_resolvable(int v, int k, int r, Rng& rng) {
  if (k < 1 || v % k != 0) throw std::invalid_argument("v must be a multiple of k");
  std::vector<Replicate> reps;
  std::vector<int> perm(static_cast<std::size_t>(v));
  for (int i = 0; i < r; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int j = v - 1; j > 0; --j) std::swap(perm[static_cast<std::size_t>(j)],
                                              perm[static_cast<std::size_t>(rng.below(j + 1))]);
    Replicate rep;
    for (int b = 0; b < v / k; ++b)
      rep.emplace_back(perm.begin() + b * k, perm.begin() + (b + 1) * k);
    reps.push_back(std::move(rep));
  }
  return ResolvableDesign(v, k, std::move(reps));
}

double objective(const ResolvableDesign& design) {
  require_valid(design);
  const auto inverse = shifted_inverse(concurrence_of(design.replicates(), design.v()),
                                       design.v(), design.r(), design.k());
  if (!inverse) return kInfinity;
  return inverse->trace() - 1.0;
}

SearchState::SearchState(const ResolvableDesign& design)
    : v_(design.v()), k_(design.k()), r_(design.r()), per_rep_(design.blocks_per_replicate()),
      reps_(design.replicates()) {
  require_valid(design);
  lambda_ = concurrence_of(reps_, v_);
  refresh();
}

const ResolvableDesign& SearchState::design() const {
  if (!cached_) cached_ = ResolvableDesign(v_, k_, reps_);
  return *cached_;
}

void SearchState::refresh() {
  since_refresh_ = 0;
  auto inverse = shifted_inverse(lambda_, v_, r_, k_);
  connected_ = inverse.has_value();
  if (connected_) {
    inverse_ = std::move(*inverse);
    objective_ = inverse_.trace() - 1.0;
  } else {
    inverse_.resize(0, 0);
    objective_ = kInfinity;
  }
}

Move SearchState::propose(Rng& rng) const {
  Move m;
  m.replicate = rng.below(r_);
  m.block_a = rng.below(per_rep_);
  m.block_b = rng.below(per_rep_ - 1);
  if (m.block_b >= m.block_a) ++m.block_b;
  m.position_a = rng.below(k_);
  m.position_b = rng.below(k_);
  return m;
}

// Swapping x in block A with y in block B changes the information matrix by U S U^T with
// U = [u, d], u = 1_{A-x} - 1_{B-y}, d = e_y - e_x and S = -(1/rk) [[0,1],[1,0]].
SearchState::Update SearchState::rank_two(const Move& m) const {
  const auto& a = reps_[static_cast<std::size_t>(m.replicate)][static_cast<std::size_t>(m.block_a)];
  const auto& b = reps_[static_cast<std::size_t>(m.replicate)][static_cast<std::size_t>(m.block_b)];
  const int x = a[static_cast<std::size_t>(m.position_a)];
  const int y = b[static_cast<std::size_t>(m.position_b)];

  Update up;
  up.w0 = Eigen::VectorXd::Zero(v_);
  for (int z : a)
    if (z != x) up.w0 += inverse_.col(z);
  for (int z : b)
    if (z != y) up.w0 -= inverse_.col(z);
  up.w1 = inverse_.col(y) - inverse_.col(x);

  auto u_dot = [&](const Eigen::VectorXd& w) {
    double sum = 0.0;
    for (int z : a)
      if (z != x) sum += w[z];
    for (int z : b)
      if (z != y) sum -= w[z];
    return sum;
  };
  const double rk = static_cast<double>(r_) * k_;
  Eigen::Matrix2d kmat;
  kmat(0, 0) = u_dot(up.w0);
  kmat(1, 1) = up.w1[y] - up.w1[x];
  kmat(0, 1) = kmat(1, 0) = 0.5 * (u_dot(up.w1) + up.w0[y] - up.w0[x]) - rk;

  const double det = kmat.determinant();
  const double scale = kmat.cwiseAbs().maxCoeff();
  if (!(std::abs(det) > 1e-12 * scale * scale)) {
    up.delta = kInfinity;
    return up;
  }
  up.k_inverse = kmat.inverse();
  Eigen::Matrix2d gram;
  gram(0, 0) = up.w0.squaredNorm();
  gram(1, 1) = up.w1.squaredNorm();
  gram(0, 1) = gram(1, 0) = up.w0.dot(up.w1);
  up.delta = -(up.k_inverse * gram).trace();
  if (!std::isfinite(up.delta) || objective_ + up.delta > 1e9 || objective_ + up.delta <= 0.0)
    up.delta = kInfinity;
  return up;
}

double SearchState::full_delta(const Move& m) const {
  auto reps = reps_;
  auto& rep = reps[static_cast<std::size_t>(m.replicate)];
  std::swap(rep[static_cast<std::size_t>(m.block_a)][static_cast<std::size_t>(m.position_a)],
            rep[static_cast<std::size_t>(m.block_b)][static_cast<std::size_t>(m.position_b)]);
  const auto inverse = shifted_inverse(concurrence_of(reps, v_), v_, r_, k_);
  if (!inverse) return kInfinity;
  return (inverse->trace() - 1.0) - objective_;
}

double SearchState::delta(Move& move) const {
  move.delta = connected_ ? rank_two(move).delta : full_delta(move);
  return move.delta;
}

void SearchState::apply(const Move& m, int refresh_interval) {
  auto& rep = reps_[static_cast<std::size_t>(m.replicate)];
  auto& a = rep[static_cast<std::size_t>(m.block_a)];
  auto& b = rep[static_cast<std::size_t>(m.block_b)];
  const int x = a[static_cast<std::size_t>(m.position_a)];
  const int y = b[static_cast<std::size_t>(m.position_b)];

  bool incremental = connected_;
  if (incremental) {
    const auto up = rank_two(m);
    if (std::isfinite(up.delta)) {
      Eigen::MatrixXd w(v_, 2);
      w.col(0) = up.w0;
      w.col(1) = up.w1;
      inverse_.noalias() -= w * up.k_inverse * w.transpose();
      objective_ += up.delta;
    } else {
      incremental = false;
    }
  }

  auto bump = [&](int p, int q, int by) {
    lambda_[static_cast<std::size_t>(p) * v_ + q] += by;
    lambda_[static_cast<std::size_t>(q) * v_ + p] += by;
  };
  for (int z : a)
    if (z != x) {
      bump(y, z, 1);
      bump(x, z, -1);
    }
  for (int z : b)
    if (z != y) {
      bump(x, z, 1);
      bump(y, z, -1);
    }
  std::swap(a[static_cast<std::size_t>(m.position_a)], b[static_cast<std::size_t>(m.position_b)]);
  cached_.reset();
  ++accepted_;

  if (!incremental || ++since_refresh_ >= refresh_interval) refresh();
}

Move neighbor_move(const SearchState& state, Rng& rng) {
  Move m = state.propose(rng);
  state.delta(m);
  return m;
}

RestartOutcome anneal_once(const SearchConfig& config, int restart, ResolvableDesign& best,
                           std::optional<std::chrono::steady_clock::time_point> deadline) {
  config.validate();
  auto expired = [&] { return deadline && std::chrono::steady_clock::now() >= *deadline; };

  Rng rng(config.seed, static_cast<std::uint64_t>(restart));
  RestartOutcome out;
  out.restart = restart;

  std::optional<SearchState> state;
  for (int attempt = 0; attempt < 1000 && !(state && state->connected()); ++attempt)
    state.emplace(random_resolvable(config.v, config.k, config.r, rng));
  if (!state->connected()) throw std::runtime_error("could not draw a connected starting design");

  auto best_reps = state->replicates();
  double best_objective = state->objective();
  const bool movable = state->blocks_per_replicate() >= 2;

  int step = 0;
  for (double t = config.initial_temperature; movable && t >= config.final_temperature;
       t *= config.cooling_rate, ++step) {
    if (expired()) {
      out.budget_exhausted = true;
      break;
    }
    int accepted = 0;
    for (int i = 0; i < config.moves_per_temperature; ++i) {
      const Move m = neighbor_move(*state, rng);
      if (!std::isfinite(m.delta)) continue;
      if (m.delta <= 0.0 || rng.unit() < std::exp(-m.delta / t)) {
        state->apply(m, config.refresh_interval);
        ++accepted;
        if (state->objective() < best_objective - kImprovement) {
          best_objective = state->objective();
          best_reps = state->replicates();
        }
      }
    }
    out.trace.push_back({step, t, state->objective(), best_objective,
                         static_cast<double>(accepted) / config.moves_per_temperature});
  }

  SearchState polish(ResolvableDesign(config.v, config.k, best_reps));
  for (bool improved = movable; improved && !out.budget_exhausted;) {
    improved = false;
    if (expired()) {
      out.budget_exhausted = true;
      break;
    }
    const int per_rep = polish.blocks_per_replicate();
    for (int rep = 0; rep < config.r; ++rep)
      for (int a = 0; a < per_rep; ++a)
        for (int b = a + 1; b < per_rep; ++b)
          for (int pa = 0; pa < config.k; ++pa)
            for (int pb = 0; pb < config.k; ++pb) {
              Move m{rep, a, b, pa, pb, 0.0};
              if (polish.delta(m) < -kImprovement) {
                polish.apply(m, config.refresh_interval);
                improved = true;
              }
            }
  }
  polish.refresh();
  out.objective = polish.objective();
  out.trace.push_back({step, 0.0, out.objective, out.objective, 0.0});
  best = polish.design();
  out.a = a_value(best);
  return out;
}

SearchResult anneal(const SearchConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (config.time_budget_seconds > 0.0)
    deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(config.time_budget_seconds));

  const auto n = static_cast<std::size_t>(config.restarts);
  std::vector<RestartOutcome> outcomes(n);
  std::vector<ResolvableDesign> designs(n);
  detail::parallel_for(n, [&](std::size_t i) {
    outcomes[i] = anneal_once(config, static_cast<int>(i), designs[i], deadline);
  });

  std::size_t winner = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (outcomes[i].a > outcomes[winner].a) winner = i;

  SearchResult result;
  result.design = designs[winner].with_label("search v=" + std::to_string(config.v) +
                                             " k=" + std::to_string(config.k) +
                                             " r=" + std::to_string(config.r) +
                                             " seed=" + std::to_string(config.seed));
  result.a = outcomes[winner].a;
  result.objective = outcomes[winner].objective;
  result.a_float = (config.v - 1) / result.objective;
  result.best_restart = static_cast<int>(winner);
  for (const auto& o : outcomes) result.budget_exhausted = result.budget_exhausted || o.budget_exhausted;
  result.restarts = std::move(outcomes);
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace rbd
