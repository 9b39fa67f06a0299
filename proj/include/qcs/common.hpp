#ifndef QCS_COMMON_HPP
#define QCS_COMMON_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcs {

/// Thrown when a numerical routine fails to meet its accuracy contract.
class computation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Order-sensitive combiner for deriving sub-seeds. Stable across platforms
/// and runs; never use std::hash here.
inline std::uint64_t stable_hash(std::uint64_t seed) {
  return detail::splitmix64(seed);
}

template <typename... Rest>
std::uint64_t stable_hash(std::uint64_t seed, std::uint64_t head, Rest... rest) {
  return stable_hash(detail::splitmix64(seed ^ detail::splitmix64(head)), rest...);
}

/// FNV-1a, used to fold experiment identifiers into seed derivations.
inline std::uint64_t stable_hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(detail::splitmix64(seed ^ 0x51a9b1c0de5eedull));
}

/// Exact for the small orders used here (r <= ~30); computed in integers.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t out = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) out = mulmod_u64(out, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return out;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the base set {2, 7, 61} is exact below 2^32.
inline bool is_prime_u32(std::uint64_t n) {
  if (n >= (1ull << 32)) throw std::invalid_argument("is_prime_u32: value out of range");
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace qcs

#endif  // QCS_COMMON_HPP
