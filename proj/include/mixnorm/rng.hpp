#ifndef MIXNORM_RNG_HPP
#define MIXNORM_RNG_HPP

#include <cstdint>

namespace mixnorm {

/// splitmix64 finalizer; used to derive independent per-restart and
/// per-trial seeds from a single user seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace mixnorm

#endif  // MIXNORM_RNG_HPP
