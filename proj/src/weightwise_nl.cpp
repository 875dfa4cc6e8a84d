#include "wpb/weightwise_nl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "wpb/family.hpp"

namespace wpb {

std::int64_t krawtchouk(unsigned k, unsigned i, unsigned n) {
  if (i > n || k > n) throw std::invalid_argument("krawtchouk: i, k must be <= n");
  std::int64_t sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    std::int64_t term = static_cast<std::int64_t>(binomial(i, j)) *
                        static_cast<std::int64_t>(binomial(n - i, k - j));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

KrawtchoukTable::KrawtchoukTable(unsigned n) : n_(n) {
  if (n < 1 || n > 32) throw std::invalid_argument("KrawtchoukTable: n out of range");
  v_.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    v_[0][i] = 1;
    v_[1][i] = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(i);
  }
  for (unsigned k = 1; k + 1 <= n; ++k) {
    for (unsigned i = 0; i <= n; ++i) {
      std::int64_t num = (static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(i)) * v_[k][i] -
                         static_cast<std::int64_t>(n - k + 1) * v_[k - 1][i];
      assert(num % static_cast<std::int64_t>(k + 1) == 0);
      v_[k + 1][i] = num / static_cast<std::int64_t>(k + 1);
    }
  }
}

std::uint64_t upper_bound(unsigned n, unsigned k) {
  const std::uint64_t c = binomial(n, k);
  if (c == 0) throw std::invalid_argument("upper_bound: k > n");
  // floor((2C - ceil(sqrt(4C))) / 4) == floor(C/2 - sqrt(C)/2), exactly.
  std::uint64_t s = isqrt_u64(4 * c);
  if (s * s != 4 * c) ++s;
  return (2 * c - s) / 4;
}

namespace {

/// max_a |corr(a)| over an explicit mask list, optionally split over threads.
std::int64_t max_abs_correlation(const BooleanFunction& f,
                                 std::span<const std::uint32_t> members,
                                 std::span<const std::uint32_t> masks,
                                 unsigned threads) {
  const std::size_t m = members.size();
  std::vector<std::uint32_t> xs(members.begin(), members.end());
  std::vector<std::uint8_t> fx(m);
  for (std::size_t i = 0; i < m; ++i) fx[i] = f.get(xs[i]);

  auto sweep = [&](std::size_t lo, std::size_t hi) {
    std::int64_t best = 0;
    for (std::size_t a = lo; a < hi; ++a) {
      const std::uint32_t mask = masks[a];
      std::size_t ones = 0;
      for (std::size_t i = 0; i < m; ++i)
        ones += static_cast<std::size_t>(fx[i] ^ parity_and(mask, xs[i]));
      std::int64_t corr =
          static_cast<std::int64_t>(m) - 2 * static_cast<std::int64_t>(ones);
      best = std::max(best, corr < 0 ? -corr : corr);
    }
    return best;
  };

  if (threads <= 1 || masks.size() < 2 * threads) return sweep(0, masks.size());

  std::vector<std::int64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (masks.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = std::min<std::size_t>(t * chunk, masks.size());
    std::size_t hi = std::min<std::size_t>(lo + chunk, masks.size());
    pool.emplace_back([&, t, lo, hi] { partial[t] = sweep(lo, hi); });
  }
  for (auto& th : pool) th.join();
  return *std::max_element(partial.begin(), partial.end());
}

std::vector<std::uint32_t> all_masks(unsigned n) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::size_t a = 0; a < masks.size(); ++a)
    masks[a] = static_cast<std::uint32_t>(a);
  return masks;
}

std::vector<std::uint32_t> band_masks(unsigned n) {
  std::vector<std::uint32_t> masks;
  for (unsigned w = 1; w <= n / 2; ++w) {
    auto slice = weight_slice(n, w);
    masks.insert(masks.end(), slice.members.begin(), slice.members.end());
  }
  return masks;
}

std::vector<std::uint32_t> representative_masks(const OrbitIndex& idx) {
  std::vector<std::uint32_t> masks;
  for (unsigned w = 1; w <= idx.n() / 2; ++w)
    for (const auto& o : idx.orbits(w)) masks.push_back(o.representative);
  return masks;
}

}  // namespace

std::int64_t nl_restricted(const BooleanFunction& f,
                           std::span<const std::uint32_t> members, unsigned threads) {
  if (members.empty()) return 0;
  for (auto x : members)
    if (x >= f.domain_size())
      throw std::out_of_range("nl_restricted: member outside the domain");
  auto masks = all_masks(f.n());
  std::int64_t best = max_abs_correlation(f, members, masks, threads);
  return (static_cast<std::int64_t>(members.size()) - best) / 2;
}

std::int64_t nl_k_reduced(const BooleanFunction& f, unsigned k, const OrbitIndex& idx,
                          CorrelationForm form, unsigned threads) {
  const unsigned n = f.n();
  if (idx.n() != n) throw std::invalid_argument("nl_k_reduced: index n mismatch");
  if (k < 1 || k > n - 1) throw std::invalid_argument("nl_k_reduced: k out of range");
  if (!is_family_member(f))
    throw std::invalid_argument("nl_k_reduced: mask reduction needs a family member");

  auto masks = representative_masks(idx);
  const auto slice = weight_slice(n, k);
  const auto count = static_cast<std::int64_t>(slice.members.size());

  if (form == CorrelationForm::direct) {
    std::int64_t best = max_abs_correlation(f, slice.members, masks, threads);
    return (count - best) / 2;
  }

  // Krawtchouk split: corr(a) = K_k(w(a), n) - 2 sum_{x: f(x)=1} (-1)^(a.x),
  // with the f=1 points of every weight-k orbit collected as a half-orbit.
  std::vector<std::uint32_t> ones;
  for (const auto& o : idx.orbits(k)) {
    std::uint32_t lam = f.get(o.representative) ? o.representative
                                                : rotate(o.representative, 1, n);
    for (auto x : half_orbit(Orbit{lam, o.length}, n)) ones.push_back(x);
  }
  std::vector<std::int64_t> kraw(n + 1);
  for (unsigned w = 0; w <= n; ++w) kraw[w] = krawtchouk(k, w, n);

  std::int64_t best = 0;
  for (auto a : masks) {
    std::int64_t s = 0;
    for (auto x : ones) s += parity_and(a, x) ? -1 : 1;
    std::int64_t corr = kraw[weight(a)] - 2 * s;
    best = std::max(best, corr < 0 ? -corr : corr);
  }
  return (count - best) / 2;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WPB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256)
      return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

NlProfile profile_slices(const BooleanFunction& f, std::span<const unsigned> ks,
                         bool reduced, unsigned threads) {
  const unsigned n = f.n();
  threads = resolve_threads(threads);
  for (auto k : ks)
    if (k < 1 || k > n - 1)
      throw std::invalid_argument("profile: slice index outside 1..n-1");

  enum class Path { full, band, reps } path = Path::full;
  std::optional<OrbitIndex> idx;
  if (reduced && is_pow2(n) && n <= 16) {
    if (is_family_member(f)) {
      idx.emplace(n);
      path = Path::reps;
    } else if (is_wpb(f)) {
      path = Path::band;
    }
  }

  std::vector<std::uint32_t> masks;
  switch (path) {
    case Path::reps: masks = representative_masks(*idx); break;
    case Path::band: masks = band_masks(n); break;
    case Path::full: masks = all_masks(n); break;
  }

  NlProfile out{n, {}};
  out.rows.reserve(ks.size());
  for (unsigned k : ks) {
    const auto slice = weight_slice(n, k);
    std::int64_t best = max_abs_correlation(f, slice.members, masks, threads);
    std::int64_t nl = (static_cast<std::int64_t>(slice.members.size()) - best) / 2;
    out.rows.push_back(ProfileRow{k, nl, upper_bound(n, k), std::nullopt});
  }
  return out;
}

NlProfile profile(const BooleanFunction& f, bool reduced, unsigned threads) {
  std::vector<unsigned> ks;
  ks.reserve(f.n() - 1);
  for (unsigned k = 1; k <= f.n() - 1; ++k) ks.push_back(k);
  return profile_slices(f, ks, reduced, threads);
}

std::vector<std::int64_t> slice_nl_values(unsigned n, unsigned k) {
  if (!is_pow2(n) || n > 16)
    throw std::invalid_argument("slice_nl_values: n must be a power of 2, <= 16");
  if (k < 1 || k > n - 1) throw std::invalid_argument("slice_nl_values: k out of range");
  OrbitIndex idx(n);
  const auto& orbits = idx.orbits(k);
  if (orbits.size() > 12)
    throw std::invalid_argument("slice_nl_values: 2^|orbits| assignments infeasible");

  FamilyAssignment a{n, std::vector<std::uint8_t>(idx.nontrivial_reps().size(), 0)};
  std::vector<std::size_t> pos;
  pos.reserve(orbits.size());
  for (const auto& o : orbits) pos.push_back(idx.assignment_position(o.representative));

  std::vector<std::int64_t> values;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << orbits.size()); ++m) {
    for (std::size_t j = 0; j < pos.size(); ++j)
      a.bits[pos[j]] = static_cast<std::uint8_t>((m >> j) & 1);
    BooleanFunction f = build_from_assignment(idx, a);
    values.push_back(nl_k_reduced(f, k, idx));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

namespace {

std::int64_t base_value(const std::map<unsigned, std::int64_t>& base, unsigned half_n,
                        unsigned j) {
  auto it = base.find(j);
  if (it != base.end()) return it->second;
  it = base.find(half_n - j);  // NL_j = NL_{n/2 - j} mirror on the subfunction
  if (it != base.end()) return it->second;
  throw std::invalid_argument("recursive_lower_bounds: base value missing for slice " +
                              std::to_string(j));
}

}  // namespace

std::map<unsigned, std::int64_t> recursive_lower_bounds(
    unsigned n, const std::map<unsigned, std::int64_t>& base) {
  if (!is_pow2(n) || n < 16 || n > 32)
    throw std::invalid_argument("recursive_lower_bounds: n must be 16 or 32");
  std::map<unsigned, std::int64_t> out;
  out[2] = 5;
  for (unsigned i = 2; i <= n / 4; ++i) {
    const auto c = static_cast<std::int64_t>(binomial(n / 4 - 1, i - 2));
    const std::int64_t bi = base_value(base, n / 2, i);
    const std::int64_t bi1 = base_value(base, n / 2, i + 1);
    out[2 * i - 1] = std::max<std::int64_t>(0, static_cast<std::int64_t>(n) * c * bi);
    out[2 * i] = std::max<std::int64_t>(
        0, static_cast<std::int64_t>(n / 2) * c * (2 * bi - 2 * c - 1) +
               static_cast<std::int64_t>(n) * c * bi1);
  }
  for (unsigned k = n / 2 + 1; k <= n - 2; ++k) out[k] = out[n - k];
  return out;
}

std::map<unsigned, std::int64_t> power2_lower_bounds(unsigned n) {
  if (!is_pow2(n) || n < 8 || n > 32)
    throw std::invalid_argument("power2_lower_bounds: n must be a power of 2, >= 8");
  unsigned l = 0;
  while ((1u << l) < n) ++l;
  std::map<unsigned, std::int64_t> out;
  for (unsigned i = 2; i + 1 <= l; ++i) out[1u << i] = (i + 1 < l) ? 5 : 19;
  return out;
}

bool rotation_set_invariance_check(const BooleanFunction& f,
                                   std::span<const std::uint32_t> members, unsigned j) {
  const unsigned n = f.n();
  std::vector<std::uint32_t> rotated;
  rotated.reserve(members.size());
  for (auto x : members) {
    std::uint32_t y = rotate(x, j, n);
    if (f.get(y) != f.get(x))
      throw std::invalid_argument(
          "rotation_set_invariance_check: f is not rot^j-invariant on E");
    rotated.push_back(y);
  }
  return nl_restricted(f, members) == nl_restricted(f, rotated);
}

}  // namespace wpb
