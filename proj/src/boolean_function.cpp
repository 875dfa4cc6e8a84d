#include "wpb/boolean_function.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace wpb {

BooleanFunction::BooleanFunction(unsigned n) : n_(n) {
  if (n < 2 || n > 32)
    throw std::invalid_argument("BooleanFunction: n must be in [2, 32]");
  std::uint64_t bits = std::uint64_t{1} << n;
  words_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
}

bool evaluate(const BooleanFunction& f, std::uint64_t t) {
  if (t >= f.domain_size())
    throw std::out_of_range("evaluate: input outside [0, 2^n)");
  return f.get(static_cast<std::uint32_t>(t));
}

WeightSlice weight_slice(unsigned n, unsigned k) {
  if (n < 1 || n > 32) throw std::invalid_argument("weight_slice: n out of range");
  if (k > n) throw std::invalid_argument("weight_slice: k > n");
  WeightSlice s{n, k, {}};
  s.members.reserve(static_cast<std::size_t>(binomial(n, k)));
  if (k == 0) {
    s.members.push_back(0);
    return s;
  }
  std::uint64_t limit = std::uint64_t{1} << n;
  std::uint32_t v = n_bit_mask(k);  // smallest weight-k value
  while (v < limit) {
    s.members.push_back(v);
    if (v == (n_bit_mask(k) << (n - k))) break;  // largest one; Gosper would overflow past it
    v = next_same_weight(v);
  }
  return s;
}

std::uint64_t restricted_weight(const BooleanFunction& f, unsigned k) {
  auto slice = weight_slice(f.n(), k);
  std::uint64_t w = 0;
  for (auto x : slice.members) w += f.get(x);
  return w;
}

bool is_wpb(const BooleanFunction& f) {
  unsigned n = f.n();
  if (!is_pow2(n))
    throw std::invalid_argument("is_wpb: n must be a power of 2");
  std::uint32_t all = n_bit_mask(n);
  if (f.get(0) || !f.get(all)) return false;
  for (unsigned k = 1; k < n; ++k) {
    if (2 * restricted_weight(f, k) != binomial(n, k)) return false;
  }
  return true;
}

namespace {

// In-place Moebius/zeta transform over F_2 on a packed table of 2^n bits.
// Word-internal dimensions use masked shifts; larger ones XOR whole words.
void moebius_inplace(std::vector<std::uint64_t>& w, unsigned n) {
  static constexpr std::uint64_t lo_mask[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
      0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};
  for (unsigned d = 0; d < n && d < 6; ++d) {
    for (auto& word : w) word ^= (word & lo_mask[d]) << (1u << d);
  }
  for (unsigned d = 6; d < n; ++d) {
    std::size_t stride = std::size_t{1} << (d - 6);
    for (std::size_t block = 0; block < w.size(); block += 2 * stride) {
      for (std::size_t j = 0; j < stride; ++j) w[block + stride + j] ^= w[block + j];
    }
  }
}

}  // namespace

AnfPolynomial anf(const BooleanFunction& f) {
  AnfPolynomial p{f.n(), f.words()};
  moebius_inplace(p.coeffs, f.n());
  return p;
}

BooleanFunction truth_table(const AnfPolynomial& p) {
  BooleanFunction f(p.n);
  f.words() = p.coeffs;
  moebius_inplace(f.words(), p.n);
  return f;
}

int degree(const BooleanFunction& f) {
  AnfPolynomial p = anf(f);
  int deg = -1;
  std::uint64_t size = f.domain_size();
  for (std::uint64_t u = 0; u < size; ++u) {
    if (p.get(static_cast<std::uint32_t>(u)))
      deg = std::max(deg, static_cast<int>(weight(static_cast<std::uint32_t>(u))));
  }
  return deg;
}

BooleanFunction complement_input(const BooleanFunction& f) {
  BooleanFunction g(f.n());
  std::uint32_t all = n_bit_mask(f.n());
  std::uint64_t size = f.domain_size();
  for (std::uint64_t t = 0; t < size; ++t) {
    auto u = static_cast<std::uint32_t>(t);
    g.set(u, f.get(u ^ all));
  }
  return g;
}

void write_wpbf(std::ostream& os, const BooleanFunction& f) {
  os << "WPBF v1 n=" << f.n() << '\n';
  std::uint64_t digits = f.domain_size() / 4;
  for (std::uint64_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b)
      nibble |= static_cast<unsigned>(f.get(static_cast<std::uint32_t>(4 * d + b)))
                << (3 - b);
    os << "0123456789abcdef"[nibble];
  }
  os << '\n';
}

BooleanFunction read_wpbf(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("WPBF: missing header");
  const std::string magic = "WPBF v1 n=";
  if (header.rfind(magic, 0) != 0)
    throw std::runtime_error("WPBF: bad magic, expected 'WPBF v1 n=<n>'");
  unsigned long n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(header.substr(magic.size()), &pos);
    if (pos != header.size() - magic.size())
      throw std::runtime_error("trailing junk");
  } catch (const std::exception&) {
    throw std::runtime_error("WPBF: malformed n in header");
  }
  if (n < 2 || n > 32) throw std::runtime_error("WPBF: n out of range [2, 32]");

  std::string hex;
  if (!std::getline(is, hex)) throw std::runtime_error("WPBF: missing table line");
  std::uint64_t digits = (std::uint64_t{1} << n) / 4;
  if (hex.size() != digits)
    throw std::runtime_error("WPBF: table has wrong length for n");

  BooleanFunction f(static_cast<unsigned>(n));
  for (std::uint64_t d = 0; d < digits; ++d) {
    char c = hex[d];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a') + 10;
    else
      throw std::runtime_error("WPBF: non-hex character in table");
    for (unsigned b = 0; b < 4; ++b)
      f.set(static_cast<std::uint32_t>(4 * d + b), (v >> (3 - b)) & 1);
  }
  return f;
}

void write_wpbf_file(const std::string& path, const BooleanFunction& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_wpbf(os, f);
  if (!os) throw std::runtime_error("write failed: " + path);
}

BooleanFunction read_wpbf_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_wpbf(is);
}

}  // namespace wpb
