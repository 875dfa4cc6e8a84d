#include "wpb/gf2n.hpp"

#include <bit>
#include <stdexcept>

namespace wpb {

namespace {

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  int dm = poly_degree(m);
  while (a != 0) {
    int da = poly_degree(a);
    if (da < dm) break;
    a ^= m << (da - dm);
  }
  return a;
}

// Irreducible over GF(2) iff no divisor of degree in [1, n/2].
bool is_irreducible(std::uint32_t c, unsigned n) {
  for (std::uint64_t q = 2; poly_degree(q) <= static_cast<int>(n / 2); ++q) {
    if (poly_mod(c, q) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

std::vector<CyclotomicCoset> cyclotomic_cosets(unsigned n) {
  if (n < 2 || n > 16) throw std::invalid_argument("cyclotomic_cosets: n out of range");
  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  std::vector<bool> seen(m, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint64_t j = 0; j < m; ++j) {
    if (seen[j]) continue;
    unsigned size = 0;
    std::uint64_t t = j;
    do {
      seen[t] = true;
      ++size;
      t = (t * 2) % m;
    } while (t != j);
    out.push_back(CyclotomicCoset{static_cast<std::uint32_t>(j), size});
  }
  return out;
}

std::uint32_t FieldContext::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t acc = 0;
  std::uint64_t aa = a;
  while (b != 0) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  // Reduce the carryless product (degree <= 2n-2) modulo the field polynomial.
  for (int i = poly_degree(acc); i >= static_cast<int>(n_); i = poly_degree(acc))
    acc ^= std::uint64_t{poly_} << (i - n_);
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t FieldContext::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FieldContext::from_coords(std::uint32_t t) const {
  std::uint32_t e = 0;
  for (unsigned p = 0; p < n_; ++p) {
    if ((t >> p) & 1) e ^= basis_pow_[p];
  }
  return e;
}

std::uint32_t FieldContext::to_coords(std::uint32_t elem) const {
  std::uint32_t t = 0;
  for (unsigned p = 0; p < n_; ++p)
    t |= static_cast<std::uint32_t>(parity_and(inv_rows_[p], elem)) << p;
  return t;
}

std::uint32_t FieldContext::f4_beta() const {
  if (n_ % 2 != 0)
    throw std::invalid_argument("f4_beta: F_4 does not embed in GF(2^n) for odd n");
  return beta_;
}

FieldContext FieldContext::build(unsigned n) {
  if (n < 2 || n > 16) throw std::invalid_argument("FieldContext: n must be in [2, 16]");
  FieldContext ctx;
  ctx.n_ = n;

  // Smallest irreducible polynomial of degree n, coefficients read as an
  // integer. Even candidates have constant term 0 and are never irreducible.
  for (std::uint32_t c = (1u << n) + 1;; c += 2) {
    if (is_irreducible(c, n)) {
      ctx.poly_ = c;
      break;
    }
  }

  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  auto factors = prime_factors(m);
  for (std::uint32_t g = 2;; ++g) {
    bool full_order = true;
    for (auto p : factors) {
      if (ctx.pow(g, m / p) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      ctx.gen_ = g;
      break;
    }
  }

  // Smallest alpha whose conjugates alpha^(2^p) form a basis; keep the
  // inverse of the coordinate matrix for to_coords while we are at it.
  for (std::uint32_t a = 1;; ++a) {
    std::vector<std::uint32_t> cols(n);
    cols[0] = a;
    for (unsigned p = 1; p < n; ++p) cols[p] = ctx.mul(cols[p - 1], cols[p - 1]);

    std::vector<std::uint32_t> rows(n, 0), aug(n, 0);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned p = 0; p < n; ++p) rows[i] |= ((cols[p] >> i) & 1u) << p;
      aug[i] = 1u << i;
    }
    bool singular = false;
    for (unsigned p = 0; p < n && !singular; ++p) {
      unsigned piv = p;
      while (piv < n && !((rows[piv] >> p) & 1)) ++piv;
      if (piv == n) {
        singular = true;
        break;
      }
      std::swap(rows[piv], rows[p]);
      std::swap(aug[piv], aug[p]);
      for (unsigned r = 0; r < n; ++r) {
        if (r != p && ((rows[r] >> p) & 1)) {
          rows[r] ^= rows[p];
          aug[r] ^= aug[p];
        }
      }
    }
    if (!singular) {
      ctx.alpha_ = a;
      ctx.basis_pow_ = std::move(cols);
      ctx.inv_rows_ = std::move(aug);
      break;
    }
  }

  if (n % 2 == 0) ctx.beta_ = ctx.pow(ctx.gen_, m / 3);
  return ctx;
}

std::uint32_t trace(const FieldContext& ctx, unsigned r, unsigned k, std::uint32_t x) {
  if (r == 0 || k == 0 || k % r != 0 || ctx.n() % k != 0)
    throw std::invalid_argument("trace: need r | k and k | n");
  // x must live in the subfield fixed by Frobenius^k.
  std::uint32_t frob = x;
  for (unsigned i = 0; i < k; ++i) frob = ctx.sqr(frob);
  if (frob != x) throw std::invalid_argument("trace: x is not in GF(2^k)");

  std::uint32_t sum = 0;
  std::uint32_t term = x;
  for (unsigned i = 0; i < k / r; ++i) {
    sum ^= term;
    for (unsigned s = 0; s < r; ++s) term = ctx.sqr(term);
  }
  return sum;
}

std::uint32_t f4_primitive(const FieldContext& ctx, unsigned coset_size) {
  if (coset_size % 2 != 0)
    throw std::invalid_argument("f4_primitive: coset size must be even");
  if (coset_size == 0 || ctx.n() % coset_size != 0)
    throw std::invalid_argument("f4_primitive: coset size must divide n");
  return ctx.f4_beta();
}

BooleanFunction eval_trace_form(const FieldContext& ctx, const TraceSpec& spec) {
  const unsigned n = ctx.n();
  if (spec.n != n) throw std::invalid_argument("eval_trace_form: n mismatch");
  auto cosets = cyclotomic_cosets(n);
  std::vector<CyclotomicCoset> nonzero(cosets.begin() + 1, cosets.end());
  if (spec.choices.size() != nonzero.size())
    throw std::invalid_argument("eval_trace_form: one choice per nonzero coset required");

  const std::uint32_t beta = ctx.f4_beta();
  const std::uint32_t beta2 = ctx.sqr(beta);

  BooleanFunction f(n);
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t t = 0; t < size; ++t) {
    std::uint32_t x = ctx.from_coords(static_cast<std::uint32_t>(t));
    unsigned bit = 0;
    for (std::size_t c = 0; c < nonzero.size(); ++c) {
      std::uint32_t coeff = spec.choices[c] ? beta2 : beta;
      std::uint32_t y = ctx.mul(coeff, ctx.pow(x, nonzero[c].leader));
      // Tr from GF(2^size) to GF(2); the sum lands in {0, 1}.
      std::uint32_t tr = 0;
      std::uint32_t term = y;
      for (unsigned s = 0; s < nonzero[c].size; ++s) {
        tr ^= term;
        term = ctx.sqr(term);
      }
      bit ^= tr & 1;
    }
    f.set(static_cast<std::uint32_t>(t), bit != 0);
  }
  return f;
}

}  // namespace wpb
