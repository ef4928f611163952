#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mstsketch {

// Deterministic random stream. All sampling in the library goes through this
// wrapper so that outputs depend only on the seed, never on the standard
// library's distribution implementations.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * bound) >> 64);
  }

private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace detail

// Derives a per-trial seed from the master seed, an experiment tag and the
// (grid point, replication) pair. Distinct inputs map to distinct streams;
// the derivation is independent of worker scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t grid_point,
                                 std::uint64_t replication) {
  std::uint64_t h = detail::splitmix64(master ^ detail::fnv1a(tag));
  h = detail::splitmix64(h ^ grid_point);
  h = detail::splitmix64(h ^ replication);
  return h;
}

} // namespace mstsketch
