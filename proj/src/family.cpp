#include "wpb/family.hpp"

#include <stdexcept>

namespace wpb {

BooleanFunction build_from_assignment(const OrbitIndex& idx, const FamilyAssignment& a) {
  if (a.n != idx.n())
    throw std::invalid_argument("build_from_assignment: n mismatch");
  const auto& reps = idx.nontrivial_reps();
  if (a.bits.size() != reps.size())
    throw std::invalid_argument("build_from_assignment: one bit per nontrivial orbit required");

  const unsigned n = idx.n();
  BooleanFunction f(n);
  f.set(n_bit_mask(n), true);  // f(0) = 0 is the default state
  for (std::size_t j = 0; j < reps.size(); ++j) {
    std::uint32_t x = reps[j];
    unsigned l = idx.length(x);
    unsigned b = a.bits[j] & 1;
    for (unsigned s = 0; s < l; ++s) {
      f.set(x, (b ^ (s & 1)) != 0);
      x = rotate(x, 1, n);
    }
  }
  return f;
}

std::pair<FamilyAssignment, BooleanFunction> sample(const OrbitIndex& idx,
                                                    std::uint64_t seed) {
  FamilyAssignment a{idx.n(), {}};
  a.bits.resize(idx.nontrivial_reps().size());
  SplitMix64 rng{seed};
  for (auto& b : a.bits) b = static_cast<std::uint8_t>(rng.next_bit());
  BooleanFunction f = build_from_assignment(idx, a);
  return {std::move(a), std::move(f)};
}

std::pair<FamilyAssignment, BooleanFunction> sample(unsigned n, std::uint64_t seed) {
  OrbitIndex idx(n);
  return sample(idx, seed);
}

bool is_family_member(const BooleanFunction& f) {
  const unsigned n = f.n();
  const std::uint32_t all = n_bit_mask(n);
  if (f.get(0) || !f.get(all)) return false;
  for (std::uint64_t t = 1; t < all; ++t) {
    auto x = static_cast<std::uint32_t>(t);
    if (f.get(rotate(x, 1, n)) == f.get(x)) return false;
  }
  return true;
}

FamilyAssignment assignment_of(const BooleanFunction& f, const OrbitIndex& idx) {
  if (f.n() != idx.n()) throw std::invalid_argument("assignment_of: n mismatch");
  if (!is_family_member(f))
    throw std::invalid_argument("assignment_of: not a family member");
  FamilyAssignment a{f.n(), {}};
  const auto& reps = idx.nontrivial_reps();
  a.bits.reserve(reps.size());
  for (auto r : reps) a.bits.push_back(static_cast<std::uint8_t>(f.get(r)));
  return a;
}

bool anf_structure_check(const BooleanFunction& f) {
  const unsigned n = f.n();
  if (!is_pow2(n)) return false;
  AnfPolynomial p = anf(f);
  if (p.get(0)) return false;                // constant term
  if (p.get(n_bit_mask(n))) return false;    // full monomial x_1...x_n

  OrbitIndex idx(n);
  for (auto r : idx.nontrivial_reps()) {
    unsigned l = idx.length(r);
    if (l % 2 != 0) return false;
    // Coefficients around the orbit must be 1 exactly on one parity class.
    bool want = p.get(r);
    std::uint32_t x = r;
    for (unsigned s = 0; s < l; ++s) {
      bool expect = (s % 2 == 0) ? want : !want;
      if (p.get(x) != expect) return false;
      x = rotate(x, 1, n);
    }
  }
  return true;
}

std::string to_hex(const FamilyAssignment& a) {
  std::size_t digits = (a.bits.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t j = 0; j < a.bits.size(); ++j) {
    if (!a.bits[j]) continue;
    std::size_t digit = digits - 1 - j / 4;  // least significant digit last
    unsigned nibble = static_cast<unsigned>(out[digit] <= '9' ? out[digit] - '0'
                                                              : out[digit] - 'a' + 10);
    nibble |= 1u << (j % 4);
    out[digit] = "0123456789abcdef"[nibble];
  }
  return out;
}

FamilyAssignment assignment_from_hex(unsigned n, const std::string& hex,
                                     const OrbitIndex& idx) {
  if (idx.n() != n) throw std::invalid_argument("assignment_from_hex: n mismatch");
  std::size_t nbits = idx.nontrivial_reps().size();
  std::size_t digits = (nbits + 3) / 4;
  if (hex.empty() || hex.size() > digits)
    throw std::invalid_argument("assignment_from_hex: wrong digit count");

  FamilyAssignment a{n, std::vector<std::uint8_t>(nbits, 0)};
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[hex.size() - 1 - i];  // i-th digit from the least significant end
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a') + 10;
    else
      throw std::invalid_argument("assignment_from_hex: non-hex character");
    for (unsigned b = 0; b < 4; ++b) {
      std::size_t j = 4 * i + b;
      if ((v >> b) & 1) {
        if (j >= nbits)
          throw std::invalid_argument("assignment_from_hex: bit beyond orbit count");
        a.bits[j] = 1;
      }
    }
  }
  return a;
}

}  // namespace wpb
