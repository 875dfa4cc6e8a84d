#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wpb/boolean_function.hpp"
#include "wpb/orbits.hpp"

namespace wpb {

/// Krawtchouk polynomial K_k(i, n) by direct signed-binomial summation:
/// sum_j (-1)^j C(i,j) C(n-i,k-j). Exact in 64-bit for n <= 32.
std::int64_t krawtchouk(unsigned k, unsigned i, unsigned n);

/// Same values built through the three-term recurrence
/// (k+1) K_{k+1} = (n-2i) K_k - (n-k+1) K_{k-1}; cross-checks the summation.
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(unsigned n);
  std::int64_t value(unsigned k, unsigned i) const { return v_[k][i]; }
  unsigned n() const { return n_; }

 private:
  unsigned n_;
  std::vector<std::vector<std::int64_t>> v_;
};

/// floor(C(n,k)/2 - sqrt(C(n,k))/2), the covering-radius style cap on any
/// restricted nonlinearity; evaluated with an integer square root of
/// 4*C(n,k) so boundary cases never touch floating point.
std::uint64_t upper_bound(unsigned n, unsigned k);

/*! \brief Exact nonlinearity of f restricted to an explicit point set.
 *
 *  Sweeps all 2^n linear masks: NL = (|E| - max_a |sum_{x in E}
 *  (-1)^(f(x) + a.x)|) / 2 (the affine complement never does better, and
 *  |E| and the correlation share parity, so the division is exact).
 *  threads > 1 splits the mask range; the result does not depend on it.
 */
std::int64_t nl_restricted(const BooleanFunction& f,
                           std::span<const std::uint32_t> members,
                           unsigned threads = 1);

/// Which correlation evaluation the reduced path uses: the direct slice sum,
/// or the Krawtchouk split K_k(w(a), n) - 2 sum over the f=1 half-orbits.
/// Both are exact and must agree.
enum class CorrelationForm { direct, krawtchouk_split };

/*! \brief Slice nonlinearity via the orbit-representative mask reduction.
 *
 *  Valid for family members only (throws std::invalid_argument otherwise):
 *  rotating a mask flips the correlation sign and complementing it preserves
 *  magnitude, so masks can be limited to orbit representatives of weight
 *  1..n/2.
 */
std::int64_t nl_k_reduced(const BooleanFunction& f, unsigned k, const OrbitIndex& idx,
                          CorrelationForm form = CorrelationForm::direct,
                          unsigned threads = 1);

struct ProfileRow {
  unsigned k = 0;
  std::int64_t nl = 0;
  std::uint64_t upper = 0;
  std::optional<std::int64_t> lower;
};

struct NlProfile {
  unsigned n = 0;
  std::vector<ProfileRow> rows;  // k = 1 .. n-1
};

/*! \brief Full weightwise nonlinearity profile (k = 1..n-1) with upper
 *  bounds attached.
 *
 *  reduced = false always runs the plain 2^n mask sweep per slice. With
 *  reduced = true the strongest sound shortcut is picked: representative
 *  masks for family members, the weight <= n/2 mask band for functions that
 *  are WPB but outside the family, and the full sweep otherwise.
 *  threads = 0 resolves to WPB_THREADS or the hardware count.
 */
NlProfile profile(const BooleanFunction& f, bool reduced, unsigned threads = 0);

/// Same as profile() but restricted to an explicit slice list.
NlProfile profile_slices(const BooleanFunction& f, std::span<const unsigned> ks,
                         bool reduced, unsigned threads = 0);

/// Worker-count resolution used by profile(): explicit value, else the
/// WPB_THREADS environment variable, else the hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Every NL_k value reachable by varying the weight-k orbit bits (all other
/// slices cannot influence NL_k). Sorted ascending. Throws when 2^|orbits|
/// would be infeasible (more than 12 free bits).
std::vector<std::int64_t> slice_nl_values(unsigned n, unsigned k);

/*! \brief Recursive lower bounds for the halved-input construction.
 *
 *  base maps slice index j to the guaranteed NL_j of the n/2-variable
 *  subfunctions (missing j fall back to the mirror n/2 - j). Returns bounds
 *  for k = 2..n-2, with k > n/2 mirrored from n - k:
 *    k = 2:    5
 *    k = 2i-1: n C(n/4-1, i-2) base(i)
 *    k = 2i:   n/2 C(n/4-1, i-2) (2 base(i) - 2 C(n/4-1, i-2) - 1)
 *              + n C(n/4-1, i-2) base(i+1)
 */
std::map<unsigned, std::int64_t> recursive_lower_bounds(
    unsigned n, const std::map<unsigned, std::int64_t>& base);

/// Family-wide floors on power-of-two slices: NL_{2^i} >= 5 for
/// 2 <= i < log2(n) - 1 and >= 19 for i = log2(n) - 1. Requires n = 2^l >= 8.
std::map<unsigned, std::int64_t> power2_lower_bounds(unsigned n);

/// Checks that NL over E equals NL over the rotated set rot^j(E); the
/// precondition f(x) = f(rot^j(x)) on E is verified and throws when broken.
bool rotation_set_invariance_check(const BooleanFunction& f,
                                   std::span<const std::uint32_t> members, unsigned j);

}  // namespace wpb
