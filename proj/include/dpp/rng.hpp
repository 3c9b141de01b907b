#ifndef DPP_RNG_HPP
#define DPP_RNG_HPP

#include <array>
#include <cstdint>

namespace dpp {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the substream for replicate `index` under a master `seed`:
/// splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0x9E3779B97F4A7C15)).
/// Replicates never share a substream with each other regardless of how a
/// batch is partitioned across workers.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// xoshiro256** 1.0 (Blackman, Vigna), state filled from a 64-bit seed by
/// successive SplitMix64 outputs. All derived variates below are computed
/// with explicit formulas so streams are identical across platforms and
/// standard libraries.
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  /// Generator for replicate `index` of a batch seeded with `seed`.
  static Rng for_replicate(std::uint64_t seed, std::uint64_t index) noexcept {
    return Rng(substream_seed(seed, index));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform integer in [0, bound), bound > 0 (Lemire multiply-shift with
  /// rejection).
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Standard normal by the Marsaglia polar method.
  double normal() noexcept;

private:
  std::array<std::uint64_t, 4> s_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

} // namespace dpp

#endif // DPP_RNG_HPP
