#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "rbd/design.hpp"
#include "rbd/rational.hpp"

namespace rbd {

struct SearchConfig {
  int v = 36;
  int k = 6;
  int r = 4;
  double initial_temperature = 0.2;
  double final_temperature = 1e-4;
  double cooling_rate = 0.95;
  int moves_per_temperature = 200;
  int restarts = 8;
  std::uint64_t seed = 42;
  double time_budget_seconds = 0.0;  // 0 disables the budget
  int refresh_interval = 256;        // accepted moves between full inverse recomputations

  // Throws std::invalid_argument.
  void validate() const;
};

// mt19937_64 with its own bounded-integer and unit-interval helpers, so streams are
// identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, n).
  int below(int n);
  // Uniform on [0, 1).
  double unit();

private:
  std::mt19937_64 engine_;
};

ResolvableDesign random_resolvable(int v, int k, int r, Rng& rng);

// Trace of the Moore-Penrose inverse of the scaled information matrix; +infinity when
// the design is disconnected. 35 / objective is A when v = 36.
double objective(const ResolvableDesign& design);

struct Move {
  int replicate = 0;
  int block_a = 0;
  int block_b = 0;
  int position_a = 0;
  int position_b = 0;
  double delta = 0.0;  // change in objective; +infinity when the swap disconnects
};

// Annealing state: current design, its concurrence counts, and the inverse of
// M + J/v, from which the objective is trace - 1.
class SearchState {
public:
  explicit SearchState(const ResolvableDesign& design);

  const ResolvableDesign& design() const;
  const std::vector<Replicate>& replicates() const noexcept { return reps_; }
  int blocks_per_replicate() const noexcept { return per_rep_; }
  double objective() const noexcept { return objective_; }
  bool connected() const noexcept { return connected_; }
  int accepted() const noexcept { return accepted_; }

  // Swap of two varieties between two distinct blocks of one uniformly chosen replicate.
  Move propose(Rng& rng) const;
  // Objective change of the given swap, by a rank-two update.
  double delta(Move& move) const;
  void apply(const Move& move, int refresh_interval = 256);
  // Recomputes the inverse from the concurrence counts.
  void refresh();

private:
  struct Update {
    Eigen::VectorXd w0, w1;
    Eigen::Matrix2d k_inverse;
    double delta;
  };
  Update rank_two(const Move& move) const;
  double full_delta(const Move& move) const;

  int v_, k_, r_, per_rep_;
  std::vector<Replicate> reps_;
  std::vector<int> lambda_;
  Eigen::MatrixXd inverse_;
  double objective_ = 0.0;
  bool connected_ = false;
  int accepted_ = 0;
  int since_refresh_ = 0;
  mutable std::optional<ResolvableDesign> cached_;
};

// Proposes a random swap from `state` and fills in its delta.
Move neighbor_move(const SearchState& state, Rng& rng);

struct TracePoint {
  int step = 0;
  double temperature = 0.0;
  double current = 0.0;
  double best = 0.0;
  double acceptance = 0.0;
};

struct RestartOutcome {
  int restart = 0;
  double objective = 0.0;
  Rational a;
  bool budget_exhausted = false;
  std::vector<TracePoint> trace;
};

struct SearchResult {
  ResolvableDesign design;
  Rational a;
  double a_float = 0.0;
  double objective = 0.0;
  int best_restart = 0;
  bool budget_exhausted = false;
  double seconds = 0.0;
  std::vector<RestartOutcome> restarts;

  const std::vector<TracePoint>& trace() const { return restarts.at(best_restart).trace; }
};

// One restart: Metropolis annealing with geometric cooling followed by a greedy sweep
// over all swaps until none improves. `best` receives the restart's final design. A deadline in the past stops at once.
RestartOutcome anneal_once(const SearchConfig& config, int restart, ResolvableDesign& best,
                           std::optional<std::chrono::steady_clock::time_point> deadline = {});

SearchResult anneal(const SearchConfig& config);

}  // namespace rbd
