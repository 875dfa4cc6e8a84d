#pragma once

#include <cstdint>
#include <vector>

#include "wpb/boolean_function.hpp"
#include "wpb/orbits.hpp"

namespace wpb {

/// How the 8-variable base of the recursion is picked: a seeded family draw
/// repaired to satisfy the base pair constraint, or the deterministic
/// profile-optimal base.
enum class Base8Mode { constrained_random, best_profile };

enum class SubRole : unsigned { r_set = 0, t_set = 1, s_set = 2, shared = 3 };

struct ConstructionParams {
  unsigned n = 8;                  // power of two, 8 or 16
  std::uint64_t seed = 0;
  Base8Mode base8 = Base8Mode::constrained_random;
  bool share_subfunctions = false;  // one n/2 subfunction for every slice/role
};

/*! \brief The fixed slice point sets of the recursive construction.
 *
 *  For odd k = 2i-1 every group holds
 *      R = { (1, y1, 0^(n/4), y2) : w(y2) = i },
 *  for even k = 2i
 *      T = { (1, y1, 0^(n/4), y2)    : w(y2) = i+1 },
 *      S = { (1, y1, 0^(n/4-1), 1, y2) : w(y2) = i,
 *            y2 != (y, 0^(n/4-1), 1, 1) for y with w(y) = i-2,
 *            y2 != (1, y, 0^(n/4-1), 1) for y with w(y) = i-2, y != y1 },
 *  one group per y1 in F_2^(n/4-1) with w(y1) = ceil(k/2) - 2.
 */
struct SliceGroup {
  std::uint32_t y1 = 0;
  std::vector<std::uint32_t> r;  // odd k only
  std::vector<std::uint32_t> t;  // even k only
  std::vector<std::uint32_t> s;  // even k only
};

struct SliceSets {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<SliceGroup> groups;  // empty when no y1 qualifies
};

/// Builds the point sets for one slice; n = 2^l with l >= 3, n <= 32,
/// 3 <= k <= n-1. Vacuous slices come back with no groups.
SliceSets slice_sets(unsigned n, unsigned k);

/// True when every listed point of the slice lies in its own rotation orbit
/// (the property that makes the value installation conflict-free).
bool check_distinct_orbits(const SliceSets& sets);

/// The two weight-3 inputs whose values every valid 8-variable base must
/// separate; the test reads f at both points.
bool base8_pair_constraint(const BooleanFunction& f);

/// Deterministic profile-optimal 8-variable base: per-slice exhaustive search
/// over the weight-k orbit bits (slices do not interact), weight-3 restricted
/// to assignments honoring the pair constraint, ties broken toward the
/// smallest assignment integer. Its profile is (0, 9, 22, 27, 22, 9, 0).
BooleanFunction best_base8();

/// Seed for the n/2-variable subfunction serving slice k in the given role.
std::uint64_t subfunction_seed(std::uint64_t seed, unsigned k, SubRole role);

/*! \brief Recursive construction.
 *
 *  n = 8: a family member satisfying the base pair constraint (mode picks
 *  random-repaired or profile-optimal). n = 16: values on the R/T/S sets come
 *  from n/2-variable subfunctions built from derived seeds (or one shared
 *  one), are propagated to orbit representatives through the alternation
 *  rule, and every untouched representative draws a random bit from the
 *  seeded stream in ascending order. The result is always a family member.
 */
BooleanFunction build(const ConstructionParams& params);

}  // namespace wpb
