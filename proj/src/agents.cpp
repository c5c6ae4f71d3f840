#include "bidhex/agents.hpp"

#include <stdexcept>

#include "bidhex/rng.hpp"

namespace bidhex {

AdvisorAgent::AdvisorAgent(Options options) : options_(options) {
  TrialConfig{options_.trials, 0, options_.workers}.validate();
}

std::uint64_t AdvisorAgent::decision_seed(const GameState& state, PlayerId self) {
  if (!options_.seed) {
    return (static_cast<std::uint64_t>(entropy_()) << 32) ^ entropy_();
  }
  return derive_seed(*options_.seed, state.history.size() * 2 + slot(self));
}

BidAdvice AdvisorAgent::advise_for(const GameState& state, PlayerId self) {
  const std::uint64_t seed = decision_seed(state, self);
  const CriticalityStats stats =
      options_.exact ? enumerate_stats(state.position)
                     : run_trials(state.position, {options_.trials, seed, options_.workers});
  AdviseOptions advise_options;
  advise_options.random_tie_break = options_.random_tie_break;
  advise_options.tie_seed = seed;
  last_ = advise(state.position, stats, state.config.total_chips(), state.chips_of(self),
                 advise_options);
  last_position_ = state.position;
  return *last_;
}

std::int64_t AdvisorAgent::choose_bid(const GameState& state, PlayerId self) {
  return advise_for(state, self).bid;
}

Cell AdvisorAgent::choose_move(const GameState& state, PlayerId self) {
  if (last_ && last_position_ && *last_position_ == state.position) return last_->hex;
  return advise_for(state, self).hex;
}

std::int64_t RandomAgent::choose_bid(const GameState& state, PlayerId self) {
  std::uniform_int_distribution<std::int64_t> dist(0, state.chips_of(self));
  return dist(rng_);
}

Cell RandomAgent::choose_move(const GameState& state, PlayerId) {
  const auto open = state.position.empty_cells();
  std::uniform_int_distribution<std::size_t> dist(0, open.size() - 1);
  return open[dist(rng_)];
}

SelfPlayResult play_game(const GameConfig& config, Agent& alice, Agent& bob,
                         const std::function<void(const GameState&)>& observer) {
  SelfPlayResult result{new_game(config), 0};
  GameState& state = result.final_state;
  const auto agent = [&](PlayerId p) -> Agent& { return p == PlayerId::Alice ? alice : bob; };
  const int max_rounds = config.size * config.size;
  while (!state.finished()) {
    if (result.rounds >= max_rounds) {
      throw std::logic_error("self-play exceeded one round per cell");
    }
    // Both bids are chosen from the same state so neither sees the other.
    const GameState round_start = state;
    const std::int64_t alice_bid = alice.choose_bid(round_start, PlayerId::Alice);
    const std::int64_t bob_bid = bob.choose_bid(round_start, PlayerId::Bob);
    state = submit_bid(state, PlayerId::Alice, alice_bid);
    if (observer) observer(state);
    state = submit_bid(state, PlayerId::Bob, bob_bid);
    if (observer) observer(state);
    const PlayerId mover = std::get<AwaitingMove>(state.phase).mover;
    state = apply_move(state, agent(mover).choose_move(state, mover));
    if (observer) observer(state);
    ++result.rounds;
  }
  return result;
}

}  // namespace bidhex
