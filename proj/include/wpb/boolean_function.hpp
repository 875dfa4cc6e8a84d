#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wpb/bits.hpp"

namespace wpb {

/*! \brief Truth table of an n-variable Boolean function, bit-packed into
 *  64-bit words.
 *
 *  Bit t of the table is f(x) for the input vector encoded as the integer t
 *  (x_1 = most significant bit, see bits.hpp). Supported range: 2 <= n <= 32;
 *  everything above n = 16 is representation-only territory (a table for
 *  n = 32 is 512 MiB).
 */
class BooleanFunction {
 public:
  explicit BooleanFunction(unsigned n);

  unsigned n() const { return n_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << n_; }

  bool get(std::uint32_t t) const {
    return (words_[t >> 6] >> (t & 63)) & 1;
  }
  void set(std::uint32_t t, bool v) {
    std::uint64_t m = std::uint64_t{1} << (t & 63);
    if (v)
      words_[t >> 6] |= m;
    else
      words_[t >> 6] &= ~m;
  }
  void flip(std::uint32_t t) { words_[t >> 6] ^= std::uint64_t{1} << (t & 63); }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool operator==(const BooleanFunction&) const = default;

 private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

/// f(t) with a range check; throws std::out_of_range for t >= 2^n.
bool evaluate(const BooleanFunction& f, std::uint64_t t);

/// All vectors of Hamming weight k in F_2^n, ascending (Gosper iteration).
struct WeightSlice {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<std::uint32_t> members;
};

WeightSlice weight_slice(unsigned n, unsigned k);  // throws if k > n or n > 32

/// Number of ones of f on the weight-k slice.
std::uint64_t restricted_weight(const BooleanFunction& f, unsigned k);

/*! \brief Weightwise perfect balancedness.
 *
 *  True iff f(0) = 0, f(1...1) = 1 and f takes value 1 on exactly half of
 *  every slice of weight 1..n-1. Requires n to be a power of two (throws
 *  std::invalid_argument otherwise; the half counts C(n,k)/2 only exist
 *  there).
 */
bool is_wpb(const BooleanFunction& f);

/// Algebraic normal form, bit-packed like a truth table: bit u is the
/// coefficient of the monomial with support u.
struct AnfPolynomial {
  unsigned n = 0;
  std::vector<std::uint64_t> coeffs;

  bool get(std::uint32_t u) const { return (coeffs[u >> 6] >> (u & 63)) & 1; }
  void set(std::uint32_t u, bool v) {
    std::uint64_t m = std::uint64_t{1} << (u & 63);
    if (v)
      coeffs[u >> 6] |= m;
    else
      coeffs[u >> 6] &= ~m;
  }
};

/// Moebius transform (truth table -> ANF coefficients).
AnfPolynomial anf(const BooleanFunction& f);

/// Inverse Moebius transform (the transform is an involution).
BooleanFunction truth_table(const AnfPolynomial& p);

/// Algebraic degree; -1 for the zero function.
int degree(const BooleanFunction& f);

/// GF(2) inner product a.x of two packed vectors.
inline int inner_product(std::uint32_t a, std::uint32_t x) {
  return parity_and(a, x);
}

/// g(x) = f(x + (1,...,1)): the input-complemented function.
BooleanFunction complement_input(const BooleanFunction& f);

/* WPBF v1 text format.
 *
 *   line 1:  WPBF v1 n=<n>
 *   line 2:  2^n table bits as lowercase hex, 2^n/4 digits, where bit t = 0
 *            is the most significant bit of the first digit.
 *
 * Both lines are newline-terminated. Readers throw std::runtime_error on any
 * deviation (bad magic, bad n, wrong digit count, non-hex characters).
 */
void write_wpbf(std::ostream& os, const BooleanFunction& f);
BooleanFunction read_wpbf(std::istream& is);

void write_wpbf_file(const std::string& path, const BooleanFunction& f);
BooleanFunction read_wpbf_file(const std::string& path);

}  // namespace wpb
