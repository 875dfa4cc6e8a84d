#pragma once

#include <cstdint>
#include <vector>

#include "wpb/bits.hpp"

namespace wpb {

/*! \brief One cyclic-rotation orbit of F_2^n, identified by its numerically
 *  smallest element.
 *
 *  The orbit length is the rotation period of the representative; it always
 *  divides n, and for n a power of two every orbit except {0} and {1...1}
 *  has even length.
 */
struct Orbit {
  std::uint32_t representative = 0;
  unsigned length = 0;

  bool operator==(const Orbit&) const = default;
};

/// Cyclic left rotation of the n-bit vector x by s (the group action).
inline std::uint32_t rotate(std::uint32_t x, unsigned s, unsigned n) {
  return rotl_n(x, s, n);
}

/// Orbit of x: smallest rotation and rotation period.
Orbit orbit_of(std::uint32_t x, unsigned n);

/// All weight-k orbit representatives, ascending, with their lengths.
std::vector<Orbit> representatives_by_weight(unsigned n, unsigned k);

/// Total number of orbits of F_2^n: (1/n) * sum_{d | n} phi(d) 2^(n/d).
std::uint64_t orbit_count(unsigned n);

/// The even-shift half of an orbit: {r, rot^2(r), ..., rot^(l-2)(r)}.
/// Throws std::invalid_argument when the orbit length is odd.
std::vector<std::uint32_t> half_orbit(const Orbit& o, unsigned n);

/// Smallest s >= 0 with rotate(rep, s, n) == x; throws if x is not in the
/// orbit of rep.
unsigned shift_to(std::uint32_t rep, std::uint32_t x, unsigned n);

/*! \brief Precomputed orbit lookup over all of F_2^n (n <= 16).
 *
 *  Stores, for every point, its representative and the shift that reaches it
 *  from the representative, plus per-weight orbit lists and the ascending
 *  list of nontrivial representatives (everything except 0 and 1...1) that
 *  keys family assignments.
 */
class OrbitIndex {
 public:
  explicit OrbitIndex(unsigned n);  // throws for n < 2 or n > 16

  unsigned n() const { return n_; }

  std::uint32_t representative(std::uint32_t x) const { return rep_[x]; }
  unsigned shift(std::uint32_t x) const { return shift_[x]; }
  unsigned length(std::uint32_t x) const { return len_[rep_[x]]; }

  const std::vector<Orbit>& orbits(unsigned k) const { return by_weight_[k]; }
  const std::vector<std::uint32_t>& nontrivial_reps() const { return nontrivial_; }
  std::size_t total_orbits() const { return total_; }

  /// Position of a nontrivial representative in the assignment bit order.
  std::size_t assignment_position(std::uint32_t rep) const;

 private:
  unsigned n_;
  std::size_t total_ = 0;
  std::vector<std::uint32_t> rep_;
  std::vector<std::uint8_t> shift_;
  std::vector<std::uint8_t> len_;  // indexed by representative, 0 elsewhere
  std::vector<std::vector<Orbit>> by_weight_;
  std::vector<std::uint32_t> nontrivial_;
};

}  // namespace wpb
