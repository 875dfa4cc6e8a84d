#pragma once

#include <cstdint>
#include <vector>

#include "wpb/boolean_function.hpp"

namespace wpb {

/// One cyclotomic coset of 2 modulo 2^n - 1: {j, 2j, 4j, ...} with the
/// smallest member as leader.
struct CyclotomicCoset {
  std::uint32_t leader = 0;
  unsigned size = 0;

  bool operator==(const CyclotomicCoset&) const = default;
};

/// All cosets of 2 mod 2^n - 1, leaders ascending, {0} included.
std::vector<CyclotomicCoset> cyclotomic_cosets(unsigned n);

/*! \brief GF(2^n) with a deterministic, reproducible construction.
 *
 *  Elements are polynomial-basis bit vectors reduced modulo the
 *  lexicographically smallest irreducible polynomial of degree n; the
 *  generator is the smallest element of full multiplicative order, and the
 *  normal element alpha is the smallest element whose conjugates
 *  {alpha^(2^p)} are linearly independent.
 *
 *  Coordinate convention: bit p of an encoded input vector t multiplies the
 *  basis element alpha^(2^p). Under the MSB-first packing of (x_1,...,x_n)
 *  this makes field squaring exactly a left rotation of t.
 */
class FieldContext {
 public:
  /// Deterministic construction for 2 <= n <= 16.
  static FieldContext build(unsigned n);

  unsigned n() const { return n_; }
  std::uint32_t modulus() const { return poly_; }       // includes the x^n bit
  std::uint32_t generator() const { return gen_; }
  std::uint32_t normal_element() const { return alpha_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sqr(std::uint32_t a) const { return mul(a, a); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Normal-basis coordinates -> field element: t maps to the sum of
  /// alpha^(2^p) over the set bits p of t.
  std::uint32_t from_coords(std::uint32_t t) const;

  /// Inverse of from_coords.
  std::uint32_t to_coords(std::uint32_t elem) const;

  /// beta = g^((2^n-1)/3), the order-3 element with beta + beta^2 = 1.
  /// Only defined for even n (throws otherwise).
  std::uint32_t f4_beta() const;

 private:
  FieldContext() = default;

  unsigned n_ = 0;
  std::uint32_t poly_ = 0;
  std::uint32_t gen_ = 0;
  std::uint32_t alpha_ = 0;
  std::uint32_t beta_ = 0;  // 0 when n is odd
  std::vector<std::uint32_t> basis_pow_;   // alpha^(2^p)
  std::vector<std::uint32_t> inv_rows_;    // rows of the inverse coordinate map
};

/// Relative trace from GF(2^k) down to GF(2^r): x + x^(2^r) + ... ;
/// requires r | k and k | n, and x inside GF(2^k).
std::uint32_t trace(const FieldContext& ctx, unsigned r, unsigned k, std::uint32_t x);

/// The order-3 element used inside the subfield GF(2^coset_size); requires an
/// even coset size (F_4 embeds only in even-degree subfields).
std::uint32_t f4_primitive(const FieldContext& ctx, unsigned coset_size);

/*! \brief Choice of exponent i_j in {1, 2} per nonzero cyclotomic coset,
 *  ordered by ascending leader. Bit value 0 picks beta, 1 picks beta^2.
 */
struct TraceSpec {
  unsigned n = 0;
  std::vector<std::uint8_t> choices;
};

/// Truth table of x -> XOR_j Tr(beta^(i_j) x^j) over the nonzero coset
/// leaders j. The inputs run through the normal-basis coordinate map, so the
/// result is an n-variable Boolean function in the packed convention.
BooleanFunction eval_trace_form(const FieldContext& ctx, const TraceSpec& spec);

}  // namespace wpb
