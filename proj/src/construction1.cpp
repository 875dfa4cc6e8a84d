#include "wpb/construction1.hpp"

#include <algorithm>
#include <stdexcept>

#include "wpb/family.hpp"
#include "wpb/weightwise_nl.hpp"

namespace wpb {

namespace {

// The base pair constraint points: (0,1,1,1,0,0,0,0) and (1,1,0,1,0,0,0,0)
// packed MSB-first. They sit in different weight-3 orbits (representatives
// 7 and 13) at even shifts, so the constraint is exactly "the two orbit bits
// differ".
constexpr std::uint32_t kPairA = 0b01110000;  // 112
constexpr std::uint32_t kPairB = 0b11010000;  // 208

void check_construction_n(unsigned n) {
  if (!is_pow2(n) || n < 8)
    throw std::invalid_argument("construction: n must be a power of 2, >= 8");
}

}  // namespace

SliceSets slice_sets(unsigned n, unsigned k) {
  check_construction_n(n);
  if (n > 32) throw std::invalid_argument("slice_sets: n above 32");
  if (k < 3 || k > n - 1) throw std::invalid_argument("slice_sets: need 3 <= k <= n-1");

  SliceSets out{n, k, {}};
  const unsigned q = n / 4;          // quarter width
  const unsigned y1_bits = q - 1;
  const unsigned half = n / 2;
  const unsigned y1_weight = (k + 1) / 2 - 2;  // ceil(k/2) - 2
  if (y1_weight > y1_bits) return out;         // vacuous slice

  const auto y1s = weight_slice(y1_bits, y1_weight).members;

  if (k % 2 == 1) {
    const unsigned i = (k + 1) / 2;
    const auto y2s = weight_slice(half, i).members;
    for (auto y1 : y1s) {
      SliceGroup g{y1, {}, {}, {}};
      g.r.reserve(y2s.size());
      const std::uint32_t prefix = (1u << (n - 1)) | (y1 << (3 * n / 4));
      for (auto y2 : y2s) g.r.push_back(prefix | y2);
      out.groups.push_back(std::move(g));
    }
    return out;
  }

  const unsigned i = k / 2;
  const auto t_y2s = weight_slice(half, i + 1).members;
  const auto s_y2s = weight_slice(half, i).members;
  // Two families of tails are dropped so that the union of the S sets still
  // lists each rotation orbit exactly once:
  //  - marker tails (y, 0^(q-1), 1, 1), y weight i-2: rotating the mid marker
  //    bit to the front lands on a kept point of group y;
  //  - swap tails (1, y, 0^(q-1), 1), y weight i-2, y != y1: rotating by n/2
  //    swaps the halves and lands on the point of group y. The y == y1 tail
  //    maps onto itself (one orbit of length n/2), so it stays.
  std::vector<std::uint32_t> marker_tails, swap_tails;
  marker_tails.reserve(y1s.size());
  swap_tails.reserve(y1s.size());
  for (auto y : y1s) {
    marker_tails.push_back((y << (q + 1)) | 3u);
    swap_tails.push_back((1u << (half - 1)) | (y << q) | 1u);
  }
  std::sort(marker_tails.begin(), marker_tails.end());
  std::sort(swap_tails.begin(), swap_tails.end());

  for (auto y1 : y1s) {
    SliceGroup g{y1, {}, {}, {}};
    const std::uint32_t prefix = (1u << (n - 1)) | (y1 << (3 * n / 4));
    g.t.reserve(t_y2s.size());
    for (auto y2 : t_y2s) g.t.push_back(prefix | y2);
    const std::uint32_t s_prefix = prefix | (1u << half);
    const std::uint32_t self_tail = (1u << (half - 1)) | (y1 << q) | 1u;
    g.s.reserve(s_y2s.size());
    for (auto y2 : s_y2s) {
      if (std::binary_search(marker_tails.begin(), marker_tails.end(), y2))
        continue;
      if (y2 != self_tail &&
          std::binary_search(swap_tails.begin(), swap_tails.end(), y2))
        continue;
      g.s.push_back(s_prefix | y2);
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

bool check_distinct_orbits(const SliceSets& sets) {
  std::vector<std::uint32_t> reps;
  for (const auto& g : sets.groups) {
    for (auto x : g.r) reps.push_back(orbit_of(x, sets.n).representative);
    for (auto x : g.t) reps.push_back(orbit_of(x, sets.n).representative);
    for (auto x : g.s) reps.push_back(orbit_of(x, sets.n).representative);
  }
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

bool base8_pair_constraint(const BooleanFunction& f) {
  if (f.n() != 8) throw std::invalid_argument("base8_pair_constraint: n must be 8");
  return f.get(kPairA) != f.get(kPairB);
}

std::uint64_t subfunction_seed(std::uint64_t seed, unsigned k, SubRole role) {
  return mix64(seed ^ mix64((std::uint64_t{k} << 8) | static_cast<std::uint64_t>(role)));
}

BooleanFunction best_base8() {
  OrbitIndex idx(8);
  const auto& reps = idx.nontrivial_reps();
  FamilyAssignment best{8, std::vector<std::uint8_t>(reps.size(), 0)};

  const std::size_t pos_a = idx.assignment_position(orbit_of(kPairA, 8).representative);
  const std::size_t pos_b = idx.assignment_position(orbit_of(kPairB, 8).representative);

  for (unsigned k = 2; k <= 6; ++k) {
    const auto& orbits = idx.orbits(k);
    std::vector<std::size_t> pos;
    for (const auto& o : orbits) pos.push_back(idx.assignment_position(o.representative));

    FamilyAssignment trial{8, std::vector<std::uint8_t>(reps.size(), 0)};
    std::int64_t best_nl = -1;
    std::uint32_t best_m = 0;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << orbits.size()); ++m) {
      for (std::size_t j = 0; j < pos.size(); ++j)
        trial.bits[pos[j]] = static_cast<std::uint8_t>((m >> j) & 1);
      if (k == 3 && trial.bits[pos_a] == trial.bits[pos_b]) continue;
      std::int64_t nl = nl_k_reduced(build_from_assignment(idx, trial), k, idx);
      if (nl > best_nl) {
        best_nl = nl;
        best_m = m;
      }
    }
    for (std::size_t j = 0; j < pos.size(); ++j)
      best.bits[pos[j]] = static_cast<std::uint8_t>((best_m >> j) & 1);
  }
  return build_from_assignment(idx, best);
}

namespace {

class Installer {
 public:
  explicit Installer(const OrbitIndex& idx)
      : idx_(idx), state_(idx.nontrivial_reps().size(), -1) {}

  void install(std::uint32_t x, bool value) {
    std::uint32_t rep = idx_.representative(x);
    int bit = static_cast<int>(value) ^ static_cast<int>(idx_.shift(x) & 1);
    std::size_t pos = idx_.assignment_position(rep);
    if (state_[pos] == -1) {
      state_[pos] = static_cast<std::int8_t>(bit);
    } else if (state_[pos] != bit) {
      // The slice sets guarantee one listed point per orbit; reaching this
      // means the disjointness property was violated.
      throw std::logic_error("construction: conflicting values on one orbit");
    }
  }

  FamilyAssignment finish(std::uint64_t seed) {
    SplitMix64 rng{seed};
    FamilyAssignment a{idx_.n(), {}};
    a.bits.reserve(state_.size());
    for (auto st : state_)
      a.bits.push_back(st == -1 ? static_cast<std::uint8_t>(rng.next_bit())
                                : static_cast<std::uint8_t>(st));
    return a;
  }

 private:
  const OrbitIndex& idx_;
  std::vector<std::int8_t> state_;
};

BooleanFunction build_base8(const ConstructionParams& p) {
  if (p.base8 == Base8Mode::best_profile) return best_base8();
  OrbitIndex idx(8);
  SplitMix64 rng{p.seed};
  FamilyAssignment a{8, {}};
  a.bits.resize(idx.nontrivial_reps().size());
  for (auto& b : a.bits) b = static_cast<std::uint8_t>(rng.next_bit());
  const std::size_t pos_a = idx.assignment_position(orbit_of(kPairA, 8).representative);
  const std::size_t pos_b = idx.assignment_position(orbit_of(kPairB, 8).representative);
  if (a.bits[pos_a] == a.bits[pos_b]) a.bits[pos_b] ^= 1;  // repair the draw
  return build_from_assignment(idx, a);
}

}  // namespace

BooleanFunction build(const ConstructionParams& params) {
  check_construction_n(params.n);
  if (params.n > 16)
    throw std::invalid_argument(
        "construction: builds above n = 16 need more than this table layout");
  if (params.n == 8) return build_base8(params);

  const unsigned n = params.n;
  OrbitIndex idx(n);
  Installer inst(idx);

  auto subfunction = [&](unsigned k, SubRole role) {
    ConstructionParams sub = params;
    sub.n = n / 2;
    sub.seed = params.share_subfunctions
                   ? subfunction_seed(params.seed, 0, SubRole::shared)
                   : subfunction_seed(params.seed, k, role);
    return build(sub);
  };

  for (unsigned k = 3; k <= n - 1; ++k) {
    SliceSets sets = slice_sets(n, k);
    if (sets.groups.empty()) continue;
    if (k % 2 == 1) {
      BooleanFunction g = subfunction(k, SubRole::r_set);
      for (const auto& grp : sets.groups)
        for (auto x : grp.r) inst.install(x, g.get(x & n_bit_mask(n / 2)));
    } else {
      BooleanFunction g1 = subfunction(k, SubRole::t_set);
      BooleanFunction g2 = subfunction(k, SubRole::s_set);
      for (const auto& grp : sets.groups) {
        for (auto x : grp.t) inst.install(x, g1.get(x & n_bit_mask(n / 2)));
        for (auto x : grp.s) inst.install(x, g2.get(x & n_bit_mask(n / 2)));
      }
    }
  }

  return build_from_assignment(idx, inst.finish(params.seed));
}

}  // namespace wpb
