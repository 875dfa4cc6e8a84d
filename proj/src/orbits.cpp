#include "wpb/orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpb {

namespace {

void check_n(unsigned n, unsigned max_n) {
  if (n < 2 || n > max_n) throw std::invalid_argument("orbit: n out of range");
}

unsigned rotation_period(std::uint32_t x, unsigned n) {
  unsigned l = 1;
  std::uint32_t y = rotl_n(x, 1, n);
  while (y != x) {
    y = rotl_n(y, 1, n);
    ++l;
  }
  return l;
}

unsigned euler_phi(unsigned d) {
  unsigned result = d;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      result -= result / p;
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

}  // namespace

Orbit orbit_of(std::uint32_t x, unsigned n) {
  check_n(n, 32);
  std::uint32_t best = x & n_bit_mask(n);
  std::uint32_t y = rotl_n(x, 1, n);
  unsigned l = 1;
  while (y != (x & n_bit_mask(n))) {
    best = std::min(best, y);
    y = rotl_n(y, 1, n);
    ++l;
  }
  return Orbit{best, l};
}

std::vector<Orbit> representatives_by_weight(unsigned n, unsigned k) {
  check_n(n, 32);
  if (k > n) throw std::invalid_argument("representatives_by_weight: k > n");
  std::vector<Orbit> out;
  if (k == 0) {
    out.push_back(Orbit{0, 1});
    return out;
  }
  std::uint32_t v = n_bit_mask(k);
  const std::uint32_t last = n_bit_mask(k) << (n - k);
  while (true) {
    Orbit o = orbit_of(v, n);
    if (o.representative == v) out.push_back(o);
    if (v == last) break;
    v = next_same_weight(v);
  }
  return out;
}

std::uint64_t orbit_count(unsigned n) {
  check_n(n, 32);
  std::uint64_t sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) sum += std::uint64_t{euler_phi(d)} << (n / d);
  }
  return sum / n;
}

std::vector<std::uint32_t> half_orbit(const Orbit& o, unsigned n) {
  check_n(n, 32);
  if (o.length % 2 != 0)
    throw std::invalid_argument("half_orbit: orbit length is odd");
  std::vector<std::uint32_t> out;
  out.reserve(o.length / 2);
  for (unsigned s = 0; s < o.length; s += 2)
    out.push_back(rotl_n(o.representative, s, n));
  return out;
}

unsigned shift_to(std::uint32_t rep, std::uint32_t x, unsigned n) {
  check_n(n, 32);
  std::uint32_t y = rep & n_bit_mask(n);
  for (unsigned s = 0; s < n; ++s) {
    if (y == (x & n_bit_mask(n))) return s;
    y = rotl_n(y, 1, n);
  }
  throw std::invalid_argument("shift_to: x is not in the orbit of rep");
}

OrbitIndex::OrbitIndex(unsigned n) : n_(n) {
  check_n(n, 16);
  std::size_t size = std::size_t{1} << n;
  rep_.assign(size, 0);
  shift_.assign(size, 0);
  len_.assign(size, 0);
  by_weight_.assign(n + 1, {});
  std::vector<bool> seen(size, false);

  for (std::uint32_t t = 0; t < size; ++t) {
    if (seen[t]) continue;
    // t is the smallest unseen element, hence the orbit representative.
    unsigned l = rotation_period(t, n);
    len_[t] = static_cast<std::uint8_t>(l);
    by_weight_[weight(t)].push_back(Orbit{t, l});
    ++total_;
    std::uint32_t y = t;
    for (unsigned s = 0; s < l; ++s) {
      seen[y] = true;
      rep_[y] = t;
      shift_[y] = static_cast<std::uint8_t>(s);
      y = rotl_n(y, 1, n);
    }
  }

  nontrivial_.reserve(total_ - 2);
  const std::uint32_t all = n_bit_mask(n);
  for (std::uint32_t t = 0; t < size; ++t) {
    if (rep_[t] == t && t != 0 && t != all) nontrivial_.push_back(t);
  }
}

std::size_t OrbitIndex::assignment_position(std::uint32_t rep) const {
  auto it = std::lower_bound(nontrivial_.begin(), nontrivial_.end(), rep);
  if (it == nontrivial_.end() || *it != rep)
    throw std::invalid_argument("assignment_position: not a nontrivial representative");
  return static_cast<std::size_t>(it - nontrivial_.begin());
}

}  // namespace wpb
