#pragma once

#include <cstdint>

namespace gkde::rng {

//! splitmix64 output function; also used to derive stream seeds.
std::uint64_t mix(std::uint64_t z);

//! Seed for an independent stream identified by (base seed, key1, key2).
//! Used to give every (sample size, replication) pair its own generator so
//! results do not depend on execution order.
std::uint64_t derive_stream(std::uint64_t base, std::uint64_t key1, std::uint64_t key2);

//! Small explicit 64-bit generator (splitmix64) with uniform and normal
//! variates. Deterministic: the same seed always produces the same sequence
//! on every platform.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : state_(seed)
  {
  }

  std::uint64_t next_u64()
  {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix_output(state_);
  }

  //! Uniform double strictly inside (0, 1): 53-bit mantissa, offset by 1/2 ulp.
  double uniform01()
  {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  //! Standard normal via the Marsaglia polar method; pairs are cached.
  double normal();

private:
  static std::uint64_t mix_output(std::uint64_t z);

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace gkde::rng
