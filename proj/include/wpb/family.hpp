#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wpb/boolean_function.hpp"
#include "wpb/orbits.hpp"

namespace wpb {

/*! \brief One bit per nontrivial rotation orbit, in ascending-representative
 *  order: the free parameters of the rotation-alternating function family.
 *
 *  The function determined by an assignment takes value bits[j] at the j-th
 *  representative and alternates along the orbit, f(rot^s(rep)) =
 *  bits[j] XOR (s mod 2); together with f(0) = 0 and f(1...1) = 1 this pins
 *  the whole truth table. There are 2^(#orbits - 2) such functions and all
 *  of them are weightwise perfectly balanced of degree n-1.
 */
struct FamilyAssignment {
  unsigned n = 0;
  std::vector<std::uint8_t> bits;  // one 0/1 per nontrivial representative

  bool operator==(const FamilyAssignment&) const = default;
};

/// Expand an assignment into its truth table. Throws on size mismatch.
BooleanFunction build_from_assignment(const OrbitIndex& idx, const FamilyAssignment& a);

/// Seeded member draw: assignment bits come from the low bit of successive
/// splitmix64 outputs, one per representative in ascending order.
std::pair<FamilyAssignment, BooleanFunction> sample(const OrbitIndex& idx,
                                                    std::uint64_t seed);
std::pair<FamilyAssignment, BooleanFunction> sample(unsigned n, std::uint64_t seed);

/// Truth-table membership test: f(0) = 0, f(1...1) = 1 and
/// f(rot(x)) = f(x) XOR 1 everywhere else.
bool is_family_member(const BooleanFunction& f);

/// Read the assignment back off a member's representatives.
/// Throws std::invalid_argument when f is not a member.
FamilyAssignment assignment_of(const BooleanFunction& f, const OrbitIndex& idx);

/*! \brief ANF-side structural test.
 *
 *  A member's algebraic normal form has, on every nontrivial monomial orbit,
 *  coefficients on exactly the even-shift half or exactly the odd-shift half
 *  of the orbit, plus zero constant and zero full-degree terms. Returns
 *  false for any function (including WPB ones) that breaks the pattern.
 */
bool anf_structure_check(const BooleanFunction& f);

/// Assignment <-> fixed-width lowercase hex (bit j of the value is the j-th
/// representative's bit; most significant digit first).
std::string to_hex(const FamilyAssignment& a);
FamilyAssignment assignment_from_hex(unsigned n, const std::string& hex,
                                     const OrbitIndex& idx);

}  // namespace wpb
