#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

/* Low-level helpers shared by every module.
 *
 * Input vectors (x_1, ..., x_n) over F_2 are packed into unsigned integers
 * with x_1 as the most significant of the n used bits:
 *
 *     t = x_1 * 2^(n-1) + x_2 * 2^(n-2) + ... + x_n * 2^0
 *
 * so numeric order on t coincides with lexicographic order on tuples, and a
 * left 1-cyclic shift of the tuple is a left rotation of the n-bit word.
 */

namespace wpb {

constexpr bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

constexpr std::uint32_t n_bit_mask(unsigned n) {
  return n >= 32 ? 0xffffffffu : ((std::uint32_t{1} << n) - 1);
}

/// Rotate the low n bits of x left by s positions (s is reduced mod n).
constexpr std::uint32_t rotl_n(std::uint32_t x, unsigned s, unsigned n) {
  s %= n;
  if (s == 0) return x & n_bit_mask(n);
  return ((x << s) | (x >> (n - s))) & n_bit_mask(n);
}

constexpr unsigned weight(std::uint32_t x) {
  return static_cast<unsigned>(std::popcount(x));
}

/// XOR of the bits of (a AND x): the GF(2) inner product of two packed vectors.
constexpr int parity_and(std::uint32_t a, std::uint32_t x) {
  return std::popcount(a & x) & 1;
}

/// Exact binomial coefficient; n up to 62 stays within uint64 here.
std::uint64_t binomial(unsigned n, unsigned k);

/// Largest s with s*s <= v.
std::uint64_t isqrt_u64(std::uint64_t v);

/// Next integer above v with the same popcount (Gosper's hack; v != 0).
constexpr std::uint32_t next_same_weight(std::uint32_t v) {
  std::uint32_t t = v | (v - 1);
  return (t + 1) |
         (((~t & (t + 1)) - 1) >> (static_cast<unsigned>(std::countr_zero(v)) + 1));
}

/// splitmix64 finalizer: a stateless 64-bit scrambler.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic 64-bit generator (splitmix64). One next() per drawn bit keeps
/// every consumer of the stream reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  constexpr std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    return mix64(state);
  }
  constexpr int next_bit() { return static_cast<int>(next() & 1); }
};

}  // namespace wpb
