#pragma once

#include <array>
#include <cstdint>

namespace tricolor {

// One splitmix64 step. Advances `state` and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic child-seed derivation. Every RNG stream in the code base is
// reached by chaining mix_seed from a single master seed:
//
//   job    = mix(mix(mix(master, row_index), L), sample_index)
//   disorder stream  = mix(job, kStreamDisorder)
//   replica k stream = mix(mix(job, kStreamReplica), k)
//   exchange stream  = mix(job, kStreamExchange)
//
// The derivation is pure integer arithmetic and identical on all platforms.
inline std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t tag) {
  std::uint64_t s = parent ^ (tag + 0x9e3779b97f4a7c15ull + (parent << 6) + (parent >> 2));
  return splitmix64(s);
}

inline constexpr std::uint64_t kStreamDisorder = 0xd150u;
inline constexpr std::uint64_t kStreamReplica = 0x5e9au;
inline constexpr std::uint64_t kStreamExchange = 0xe4c8u;
inline constexpr std::uint64_t kStreamInit = 0x1a17u;

// xoshiro256++ (Blackman/Vigna, public domain). Chosen over the std engines
// because its output and our [0,1) mapping are pinned down bit-for-bit here,
// which the reproducibility contract requires; std distributions are not
// portable across standard libraries.
class Rng {
 public:
  using State = std::array<std::uint64_t, 4>;

  Rng() : Rng(1) {}
  explicit Rng(std::uint64_t seed) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  // ±1 with equal probability (top bit).
  int next_sign() { return (next_u64() >> 63) ? -1 : +1; }

  const State& state() const { return state_; }
  void set_state(const State& s) { state_ = s; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  State state_;
};

}  // namespace tricolor
