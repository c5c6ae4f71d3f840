#pragma once

#include <cstdint>

namespace bidhex {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: the sequence for trial `index` depends only on
// (seed, index), never on which worker runs it or in what order.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t index) noexcept;

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent 64-bit seed from a parent seed and a label.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) noexcept;

}  // namespace bidhex
