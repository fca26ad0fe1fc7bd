#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rrto {

// splitmix64: stable across platforms, unlike std::uniform_int_distribution.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t hash_mix(uint64_t x) {
  uint64_t s = x;
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ^ 0xD1B54A32D192ED03ULL) {}

  uint64_t next() { return splitmix64(state_); }

  // Uniform in [0, bound). bound == 0 returns 0.
  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

  // Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  std::vector<uint8_t> bytes(size_t n) {
    std::vector<uint8_t> out(n);
    for (size_t i = 0; i < n; ++i) {
      if (i % 8 == 0) word_ = next();
      out[i] = static_cast<uint8_t>(word_ >> ((i % 8) * 8));
    }
    return out;
  }

 private:
  uint64_t state_;
  uint64_t word_ = 0;
};

inline uint64_t fnv1a64(std::span<const uint8_t> data,
                        uint64_t seed = 0xCBF29CE484222325ULL) {
  uint64_t h = seed;
  for (uint8_t b : data) {
    h ^= b;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s) {
  return fnv1a64(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

std::string to_hex(std::span<const uint8_t> data);
std::vector<uint8_t> from_hex(const std::string& hex);

}  // namespace rrto
