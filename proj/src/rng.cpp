#include "bidhex/rng.hpp"

namespace bidhex {

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t index) noexcept
    : state_(mix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) ^
                   (index * 0xd1b54a32d192ed03ULL + 0x243f6a8885a308d3ULL))) {}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) noexcept {
  return mix64(mix64(seed + 0x3c6ef372fe94f82bULL) ^ mix64(label));
}

}  // namespace bidhex
