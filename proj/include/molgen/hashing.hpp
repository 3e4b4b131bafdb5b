#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace molgen {

// splitmix64 finalizer. Fixed constants, so hashes are stable across runs
// and platforms; fingerprints and canonical invariants depend on that.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return mix64(seed ^ mix64(v));
}

inline std::uint64_t hash_span(std::span<const std::uint64_t> values,
                               std::uint64_t seed = 0x243f6a8885a308d3ULL) {
  std::uint64_t h = seed;
  for (std::uint64_t v : values)
    h = hash_combine(h, v);
  return h;
}

// FNV-1a, used for config digests in run manifests.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace molgen
