#pragma once

// The (1+1) EA with shift mutation, the re-optimization EA (REA) extended
// with a switch-off flag, and smoothREA, written as step functions over
// explicit state so that tests can drive individual iterations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynlo/bitstring.hpp"
#include "dynlo/config.hpp"
#include "dynlo/mutation.hpp"
#include "dynlo/problem.hpp"

namespace dynlo {

class RandomStream;

struct EaState {
  BitString x_star;
  Fitness f_star = 0;
};

struct Slot {
  std::optional<BitString> x;
  Fitness f = kUndefinedFitness;

  bool defined() const noexcept { return x.has_value(); }
};

struct ReaState {
  BitString x_star;
  Fitness f_star = 0;
  /// Slot i <= gamma holds a point at Hamming distance i from x_old; slot
  /// gamma+1 holds one at distance > gamma.
  std::vector<Slot> slots;
  BitString x_old;
  /// Best fitness under the function before the last change.
  Fitness f_best = 0;
  bool reoptimizing = false;
  std::int64_t t_since_change = 0;
  std::int64_t t_global = 0;
  std::size_t gamma = 1;
};

struct SmoothParams {
  double s = 0.8;
  SmoothTime clock = SmoothTime::kSinceChange;
  std::optional<double> pinned_p_star;
};

/// Random initial point; its fitness is taken without charging the budget.
EaState init_ea(DynamicLOProblem& problem, RandomStream& rng);
ReaState init_rea(DynamicLOProblem& problem, std::size_t gamma,
                  RandomStream& rng);

/// Weak elitist replacement: accept y iff f(y) >= f(x*).
/// Returns true when y replaced x*.
bool ea_accept(EaState& state, const BitString& y, Fitness fy);

/// Selection part of one REA iteration for an already evaluated offspring:
/// x* update, slot update (when re-optimizing), switch-off check.
void rea_accept(ReaState& state, const BitString& y, Fitness fy);

/// Index of the slot that an offspring at distance `distance` from x_old
/// competes for.
inline std::size_t slot_index(std::size_t distance, std::size_t gamma) noexcept {
  return distance < gamma + 1 ? distance : gamma + 1;
}

/// One (1+1) EA iteration: one budget-counted evaluation.
void ea_step(EaState& state, DynamicLOProblem& problem,
             const MutationParams& params, RandomStream& rng);

/// Parent for a re-optimizing iteration: x* with probability p_star,
/// otherwise a uniform pick among defined slots whose string differs from
/// x*. An empty pool, or p_star >= 1, yields x* without consuming
/// randomness.
const BitString& rea_parent_select(const ReaState& state, double p_star,
                                   RandomStream& rng);

/// Extended REA iteration (p_star = 1/2 while re-optimizing).
void rea_step(ReaState& state, DynamicLOProblem& problem,
              const MutationParams& params, RandomStream& rng);

/// min{1, t / (s n^2)}.
double smooth_p_star(std::int64_t t, double s, std::size_t n) noexcept;

/// smoothREA iteration.
void smooth_rea_step(ReaState& state, const SmoothParams& smooth,
                     DynamicLOProblem& problem, const MutationParams& params,
                     RandomStream& rng);

/// Period boundary handling for the REA family: remember x_old and the
/// pre-change best, perturb, reset memory, refresh x* for free.
void on_perturbation(ReaState& state, DynamicLOProblem& problem,
                     RandomStream& rng);
void on_perturbation(ReaState& state, DynamicLOProblem& problem,
                     std::span<const std::size_t> flip_positions);

/// Period boundary for the (1+1) EA: perturb and refresh f(x*).
void on_perturbation(EaState& state, DynamicLOProblem& problem,
                     RandomStream& rng);

/// True iff every defined slot respects its distance to x_old and the
/// undefined ones carry the -inf sentinel.
bool slots_consistent(const ReaState& state);

struct RunTrace {
  /// f(x*) after each budget-counted evaluation; length == budget.
  std::vector<std::int32_t> best_fitness_per_eval;
  /// f(x*) at the end of each complete period; length == floor(budget/tau).
  std::vector<std::int32_t> period_end_best;
  std::uint64_t seed = 0;
  std::string config_id;
};

/// Full run: random target, random start, periodic perturbations, exactly
/// `config.budget` evaluations.
RunTrace run_algorithm(AlgorithmKind kind, const ExperimentConfig& config,
                       RandomStream& rng);

/// Evaluations the REA needs to regain the pre-change fitness after a
/// single k-bit inversion applied to a run sitting at the optimum.
/// Returns -1 if `cap` evaluations do not suffice.
std::int64_t reoptimization_time(std::size_t n, std::size_t k,
                                 std::size_t gamma, double p,
                                 std::int64_t cap, RandomStream& rng);

}  // namespace dynlo
