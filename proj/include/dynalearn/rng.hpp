#ifndef DYNALEARN_RNG_HPP
#define DYNALEARN_RNG_HPP

#include <cstdint>
#include <random>

namespace dynalearn {

/// mt19937_64 with portable draw helpers. std::mt19937_64 output is fully
/// specified by the standard; the distributions below avoid the
/// implementation-defined std:: distribution adaptors so that identical seeds
/// give identical streams everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-c, c).
  double next_symmetric(double c) { return c * (2.0 * next_unit() - 1.0); }

  /// Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t next_index(std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace dynalearn

#endif
