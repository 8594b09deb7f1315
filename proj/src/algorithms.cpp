#include "dynlo/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "dynlo/error.hpp"
#include "dynlo/random.hpp"

namespace dynlo {

EaState init_ea(DynamicLOProblem& problem, RandomStream& rng) {
  EaState state;
  state.x_star = random_bitstring(problem.n(), rng);
  state.f_star = problem.reevaluate(state.x_star);
  return state;
}

ReaState init_rea(DynamicLOProblem& problem, std::size_t gamma,
                  RandomStream& rng) {
  ReaState state;
  state.gamma = gamma;
  state.x_star = random_bitstring(problem.n(), rng);
  state.f_star = problem.reevaluate(state.x_star);
  state.x_old = state.x_star;
  state.f_best = state.f_star;
  state.slots.resize(gamma + 2);
  return state;
}

bool ea_accept(EaState& state, const BitString& y, Fitness fy) {
  if (fy < state.f_star) return false;
  state.x_star = y;
  state.f_star = fy;
  return true;
}

void rea_accept(ReaState& state, const BitString& y, Fitness fy) {
  if (fy >= state.f_star) {
    state.x_star = y;
    state.f_star = fy;
  }
  if (!state.reoptimizing) return;

  Slot& slot = state.slots[slot_index(hamming(y, state.x_old), state.gamma)];
  if (fy >= slot.f) {
    slot.x = y;
    slot.f = fy;
  }
  if (state.f_star >= state.f_best) state.reoptimizing = false;
  assert(slots_consistent(state));
}

void ea_step(EaState& state, DynamicLOProblem& problem,
             const MutationParams& params, RandomStream& rng) {
  BitString y = shift_mutation(state.x_star, params, rng);
  const Fitness fy = problem.evaluate(y);
  ea_accept(state, y, fy);
}

const BitString& rea_parent_select(const ReaState& state, double p_star,
                                   RandomStream& rng) {
  if (p_star >= 1.0) return state.x_star;

  // At most gamma+2 candidates; stack-sized in practice.
  std::vector<const BitString*> pool;
  pool.reserve(state.slots.size());
  for (const Slot& slot : state.slots) {
    if (slot.defined() && *slot.x != state.x_star) pool.push_back(&*slot.x);
  }
  if (pool.empty()) return state.x_star;

  if (rng.uniform01() < p_star) return state.x_star;
  return *pool[rng.uniform_index(0, pool.size() - 1)];
}

namespace {

void reoptimization_iteration(ReaState& state, double p_star,
                              DynamicLOProblem& problem,
                              const MutationParams& params, RandomStream& rng) {
  const BitString& parent = state.reoptimizing
                                ? rea_parent_select(state, p_star, rng)
                                : state.x_star;
  BitString y = shift_mutation(parent, params, rng);
  const Fitness fy = problem.evaluate(y);
  rea_accept(state, y, fy);
  ++state.t_since_change;
  ++state.t_global;
}

}  // namespace

void rea_step(ReaState& state, DynamicLOProblem& problem,
              const MutationParams& params, RandomStream& rng) {
  reoptimization_iteration(state, 0.5, problem, params, rng);
}

double smooth_p_star(std::int64_t t, double s, std::size_t n) noexcept {
  const double nn = static_cast<double>(n);
  return std::min(1.0, static_cast<double>(t) / (s * nn * nn));
}

void smooth_rea_step(ReaState& state, const SmoothParams& smooth,
                     DynamicLOProblem& problem, const MutationParams& params,
                     RandomStream& rng) {
  double p_star = 1.0;
  if (state.reoptimizing) {
    if (smooth.pinned_p_star) {
      p_star = *smooth.pinned_p_star;
    } else {
      const std::int64_t t = smooth.clock == SmoothTime::kSinceChange
                                 ? state.t_since_change
                                 : state.t_global;
      p_star = smooth_p_star(t, smooth.s, problem.n());
    }
  }
  reoptimization_iteration(state, p_star, problem, params, rng);
}

void on_perturbation(ReaState& state, DynamicLOProblem& problem,
                     std::span<const std::size_t> flip_positions) {
  state.x_old = state.x_star;
  state.f_best = state.f_star;  // still the pre-change value
  problem.perturb_at(flip_positions);
  state.reoptimizing = true;
  state.t_since_change = 0;
  state.slots.assign(state.gamma + 2, Slot{});
  state.f_star = problem.reevaluate(state.x_star);
  state.slots[0] = Slot{state.x_old, state.f_star};
}

void on_perturbation(ReaState& state, DynamicLOProblem& problem,
                     RandomStream& rng) {
  const auto positions = random_k_subset(problem.n(), problem.k(), rng);
  on_perturbation(state, problem, positions);
}

void on_perturbation(EaState& state, DynamicLOProblem& problem,
                     RandomStream& rng) {
  problem.perturb(rng);
  state.f_star = problem.reevaluate(state.x_star);
}

bool slots_consistent(const ReaState& state) {
  if (state.slots.size() != state.gamma + 2) return false;
  for (std::size_t i = 0; i < state.slots.size(); ++i) {
    const Slot& slot = state.slots[i];
    if (!slot.defined()) {
      if (slot.f != kUndefinedFitness) return false;
      continue;
    }
    const std::size_t d = hamming(*slot.x, state.x_old);
    if (i <= state.gamma ? d != i : d < state.gamma + 1) return false;
  }
  return true;
}

namespace {

template <class State, class Step>
RunTrace run_loop(State& state, DynamicLOProblem& problem,
                  const ExperimentConfig& config, RandomStream& rng,
                  Step&& step) {
  RunTrace trace;
  trace.seed = rng.seed();
  trace.best_fitness_per_eval.reserve(static_cast<std::size_t>(config.budget));
  trace.period_end_best.reserve(
      static_cast<std::size_t>(config.budget / config.tau));

  for (std::int64_t t = 0; t < config.budget; ++t) {
    if (t % config.tau == 0 && t != 0) {
      trace.period_end_best.push_back(state.f_star);
      on_perturbation(state, problem, rng);
    }
    step(state);
    trace.best_fitness_per_eval.push_back(state.f_star);
  }
  // The final period counts only if it is complete.
  if (config.budget % config.tau == 0) {
    trace.period_end_best.push_back(state.f_star);
  }
  return trace;
}

}  // namespace

RunTrace run_algorithm(AlgorithmKind kind, const ExperimentConfig& config,
                       RandomStream& rng) {
  validate(config);
  auto problem =
      DynamicLOProblem::with_random_target(config.n, config.k, config.tau, rng);
  const MutationParams mutation{config.n, config.p};

  switch (kind) {
    case AlgorithmKind::kEa: {
      EaState state = init_ea(problem, rng);
      return run_loop(state, problem, config, rng, [&](EaState& s) {
        ea_step(s, problem, mutation, rng);
      });
    }
    case AlgorithmKind::kRea: {
      ReaState state = init_rea(problem, config.gamma, rng);
      return run_loop(state, problem, config, rng, [&](ReaState& s) {
        rea_step(s, problem, mutation, rng);
      });
    }
    case AlgorithmKind::kSmoothRea: {
      const SmoothParams smooth{config.s, config.smooth_t,
                                config.pinned_p_star};
      ReaState state = init_rea(problem, config.gamma, rng);
      return run_loop(state, problem, config, rng, [&](ReaState& s) {
        smooth_rea_step(s, smooth, problem, mutation, rng);
      });
    }
  }
  throw ConfigError("algorithm", "unknown algorithm kind");
}

std::int64_t reoptimization_time(std::size_t n, std::size_t k,
                                 std::size_t gamma, double p,
                                 std::int64_t cap, RandomStream& rng) {
  auto problem = DynamicLOProblem::with_random_target(
      n, k, std::numeric_limits<std::int64_t>::max(), rng);
  const MutationParams mutation{n, p};
  validate(mutation);

  ReaState state;
  state.gamma = gamma;
  state.x_star = problem.target();
  state.f_star = static_cast<Fitness>(n);
  state.x_old = state.x_star;
  state.f_best = state.f_star;
  state.slots.resize(gamma + 2);

  on_perturbation(state, problem, rng);
  while (state.reoptimizing) {
    if (problem.evaluations() >= cap) return -1;
    rea_step(state, problem, mutation, rng);
  }
  return problem.evaluations();
}

}  // namespace dynlo
