#pragma once

#include <cstdint>
#include <random>

namespace mgof {

// splitmix64 finalizer; decorrelates nearby keys before they seed a stream.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based key derivation: a stream is addressed by (seed, a, b).
// Replication streams use (seed, replication, substream) so results never
// depend on which worker executes a replication.
inline std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b = 0) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : gen_(key) {}

  // Uniform on the open interval (0,1).
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the inverse-CDF transform; keeps draws a pure
  // function of the stream position.
  double normal();

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mgof
