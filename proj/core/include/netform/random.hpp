#ifndef NETFORM_RANDOM_HPP
#define NETFORM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>

namespace netform {

// Deterministic random source. Equal seeds give bit-identical draw
// sequences, and the stream for replica k is a pure function of (seed, k),
// so ensemble members can run in any order or thread and still reproduce.
// Seed of replica `stream` under a master seed; a pure function of the two.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream) {
  return seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
}

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(scramble(seed)) {}

  static RandomSource child(std::uint64_t seed, std::uint64_t stream) {
    return RandomSource(child_seed(seed, stream));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Index drawn from an unnormalized nonnegative weight row; the caller
  // guarantees a positive total. Ties of floating-point dust resolve to the
  // last positive entry.
  int sample_index(std::span<const double> weights) {
    double total = 0.0;
    for (double v : weights) total += v;
    double u = next_double() * total;
    double cum = 0.0;
    int last_positive = -1;
    for (int j = 0; j < static_cast<int>(weights.size()); ++j) {
      if (weights[j] <= 0.0) continue;
      cum += weights[j];
      last_positive = j;
      if (u < cum) return j;
    }
    return last_positive;
  }

 private:
  // splitmix64 finalizer decorrelates consecutive seeds before they hit the
  // mt19937_64 init.
  static std::uint64_t scramble(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
};

}  // namespace netform

#endif  // NETFORM_RANDOM_HPP
