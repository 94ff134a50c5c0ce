#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace glt {

/// Seeded random stream. A stream is identified by (seed, stream_id); equal
/// identifiers replay identical draw sequences, and distinct stream ids are
/// decorrelated through a splitmix64-keyed seed sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Independent child stream; the parent is not advanced.
  Rng split(std::uint64_t child) const;

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }
  /// Gamma(shape, 1) by Marsaglia-Tsang with the shape < 1 boost.
  double gamma(double shape);
  double exponential() { return -std::log(uniform()); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 finalizer; used to derive stream keys.
std::uint64_t mix64(std::uint64_t x);

}  // namespace glt
