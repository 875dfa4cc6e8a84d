#include "wpb/bits.hpp"

#include <cmath>

namespace wpb {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r holds C(n-k+i, i) after each step
  }
  return r;
}

std::uint64_t isqrt_u64(std::uint64_t v) {
  if (v == 0) return 0;
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

}  // namespace wpb
