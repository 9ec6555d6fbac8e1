#pragma once

#include <cstdint>
#include <random>

namespace netgof {

using Engine = std::mt19937_64;

/// Seed for every stochastic routine. Same seed and inputs give identical output.
struct RngSeed {
  std::uint64_t value = 0;

  constexpr RngSeed() = default;
  constexpr explicit RngSeed(std::uint64_t v) : value(v) {}
  friend constexpr bool operator==(RngSeed, RngSeed) = default;
};

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Child seed for stream `index` under `parent`. Used to give every subgraph
/// draw, replicate and experiment cell its own independent stream, so results
/// do not depend on the order or thread in which jobs run.
constexpr RngSeed derive_seed(RngSeed parent, std::uint64_t index) {
  return RngSeed{detail::splitmix64(detail::splitmix64(parent.value) ^
                                    detail::splitmix64(index + 0x632be59bd9b4e019ULL))};
}

constexpr RngSeed derive_seed(RngSeed parent, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(parent, a), b);
}

inline Engine make_engine(RngSeed seed) { return Engine{seed.value}; }

}  // namespace netgof
