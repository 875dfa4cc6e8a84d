// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit on any
// failure. Every expected value is pinned exactly; timing budgets are wall
// clock on a single core.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wpb/bits.hpp"
#include "wpb/boolean_function.hpp"
#include "wpb/construction1.hpp"
#include "wpb/family.hpp"
#include "wpb/gf2n.hpp"
#include "wpb/orbits.hpp"
#include "wpb/weightwise_nl.hpp"

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] C%d %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), elapsed, budget_seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string show_values(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

// Reachable slice value sets and caps for the 8-variable family.
bool criterion1(std::string& detail) {
  const std::vector<std::int64_t> want2 = {6, 9};
  const std::vector<std::int64_t> want3 = {0, 8, 14, 16, 18, 20, 21, 22};
  const std::vector<std::int64_t> want4 = {19, 22, 23, 24, 25, 26, 27};
  auto got2 = wpb::slice_nl_values(8, 2);
  auto got3 = wpb::slice_nl_values(8, 3);
  auto got4 = wpb::slice_nl_values(8, 4);
  bool ok = got2 == want2 && got3 == want3 && got4 == want4;
  ok = ok && wpb::upper_bound(8, 2) == 11 && wpb::upper_bound(8, 3) == 24 &&
       wpb::upper_bound(8, 4) == 30;
  if (!ok)
    detail = "k2=" + show_values(got2) + " k3=" + show_values(got3) +
             " k4=" + show_values(got4);
  return ok;
}

// The pair constraint keeps the third slice away from zero.
bool criterion2(std::string& detail) {
  wpb::OrbitIndex idx(8);
  auto oa = wpb::orbit_of(112, 8);
  auto ob = wpb::orbit_of(208, 8);
  if (oa.representative == ob.representative) {
    detail = "pair points share an orbit";
    return false;
  }
  if (wpb::shift_to(oa.representative, 112, 8) % 2 != 0 ||
      wpb::shift_to(ob.representative, 208, 8) % 2 != 0) {
    detail = "pair points sit at odd shifts";
    return false;
  }

  const auto& orbits = idx.orbits(3);
  std::vector<std::size_t> pos;
  std::size_t pos_a = 0, pos_b = 0;
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    pos.push_back(idx.assignment_position(orbits[j].representative));
    if (orbits[j].representative == oa.representative) pos_a = j;
    if (orbits[j].representative == ob.representative) pos_b = j;
  }

  wpb::FamilyAssignment a{8, std::vector<std::uint8_t>(idx.nontrivial_reps().size(), 0)};
  std::int64_t min_nl = 1 << 20, max_nl = -1;
  unsigned admissible = 0;
  for (std::uint32_t m = 0; m < (1u << orbits.size()); ++m) {
    if (((m >> pos_a) & 1) == ((m >> pos_b) & 1)) continue;
    ++admissible;
    for (std::size_t j = 0; j < pos.size(); ++j)
      a.bits[pos[j]] = static_cast<std::uint8_t>((m >> j) & 1);
    std::int64_t nl = wpb::nl_k_reduced(wpb::build_from_assignment(idx, a), 3, idx);
    min_nl = std::min(min_nl, nl);
    max_nl = std::max(max_nl, nl);
    if (nl < 8) {
      detail = "assignment " + std::to_string(m) + " gives NL_3 = " + std::to_string(nl);
      return false;
    }
  }
  if (admissible != 64 || min_nl != 8 || max_nl != 22) {
    detail = "admissible=" + std::to_string(admissible) +
             " min=" + std::to_string(min_nl) + " max=" + std::to_string(max_nl);
    return false;
  }
  return true;
}

// The profile-optimal 8-variable base.
bool criterion3(std::string& detail) {
  auto f = wpb::best_base8();
  wpb::OrbitIndex idx(8);
  const std::vector<std::int64_t> want = {0, 9, 22, 27, 22, 9, 0};
  std::vector<std::int64_t> got;
  for (unsigned k = 1; k <= 7; ++k) got.push_back(wpb::nl_k_reduced(f, k, idx));
  if (got != want) {
    detail = "profile " + show_values(got);
    return false;
  }
  return wpb::is_family_member(f) && wpb::base8_pair_constraint(f);
}

// Recursive 16-variable instance sits between the guaranteed floor and cap.
bool criterion4(std::string& detail) {
  wpb::ConstructionParams p{16, 424242, wpb::Base8Mode::best_profile, false};
  auto f = wpb::build(p);
  if (!wpb::is_wpb(f) || !wpb::is_family_member(f)) {
    detail = "constructed function lost its shape";
    return false;
  }
  const std::map<unsigned, std::int64_t> base = {{2, 9}, {3, 22}, {4, 27}};
  auto lower = wpb::recursive_lower_bounds(16, base);
  const std::vector<unsigned> ks = {2, 3, 4, 5, 6, 7, 8};
  auto prof = wpb::profile_slices(f, ks, true, 1);
  for (const auto& row : prof.rows) {
    std::int64_t lo = lower.at(row.k);
    if (row.nl < lo || row.nl > static_cast<std::int64_t>(row.upper)) {
      detail = "k=" + std::to_string(row.k) + " nl=" + std::to_string(row.nl) +
               " outside [" + std::to_string(lo) + ", " + std::to_string(row.upper) + "]";
      return false;
    }
  }
  if (prof.rows.front().nl < 5) {
    detail = "NL_2 below the family floor";
    return false;
  }
  return true;
}

// Assignment sampling: exhaustive small case plus seeded draws.
bool criterion5(std::string& detail) {
  wpb::OrbitIndex idx4(4);
  std::set<std::vector<std::uint64_t>> tables;
  for (std::uint32_t m = 0; m < 16; ++m) {
    wpb::FamilyAssignment a{4, {}};
    for (unsigned j = 0; j < 4; ++j)
      a.bits.push_back(static_cast<std::uint8_t>((m >> j) & 1));
    auto f = wpb::build_from_assignment(idx4, a);
    if (!wpb::is_wpb(f) || wpb::degree(f) != 3 || !wpb::is_family_member(f)) {
      detail = "n=4 assignment " + std::to_string(m) + " is defective";
      return false;
    }
    tables.insert(f.words());
  }
  if (tables.size() != 16) {
    detail = "n=4 members collide";
    return false;
  }

  for (unsigned n : {8u, 16u}) {
    wpb::OrbitIndex idx(n);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto [a, f] = wpb::sample(idx, seed);
      if (!wpb::is_wpb(f) || wpb::degree(f) != static_cast<int>(n) - 1 ||
          !wpb::is_family_member(f) || wpb::nl_k_reduced(f, 1, idx) != 0) {
        detail = "n=" + std::to_string(n) + " seed " + std::to_string(seed) +
                 " is defective";
        return false;
      }
    }
  }
  return true;
}

// Field-side and combinatorial-side descriptions agree.
bool criterion6(std::string& detail) {
  auto ctx4 = wpb::FieldContext::build(4);
  std::set<std::vector<std::uint64_t>> trace_tables;
  for (std::uint32_t m = 0; m < 16; ++m) {
    wpb::TraceSpec spec{4, {}};
    for (unsigned j = 0; j < 4; ++j)
      spec.choices.push_back(static_cast<std::uint8_t>((m >> j) & 1));
    auto f = wpb::eval_trace_form(ctx4, spec);
    if (!wpb::is_family_member(f) || !wpb::anf_structure_check(f)) {
      detail = "n=4 spec " + std::to_string(m) + " fails the membership checks";
      return false;
    }
    trace_tables.insert(f.words());
  }
  // The sixteen n=4 trace forms are exactly the sixteen assignment builds.
  wpb::OrbitIndex idx4(4);
  std::set<std::vector<std::uint64_t>> family_tables;
  for (std::uint32_t m = 0; m < 16; ++m) {
    wpb::FamilyAssignment a{4, {}};
    for (unsigned j = 0; j < 4; ++j)
      a.bits.push_back(static_cast<std::uint8_t>((m >> j) & 1));
    family_tables.insert(wpb::build_from_assignment(idx4, a).words());
  }
  if (trace_tables != family_tables) {
    detail = "n=4 trace forms and assignment builds are different sets";
    return false;
  }

  auto ctx8 = wpb::FieldContext::build(8);
  const std::size_t nonzero = wpb::cyclotomic_cosets(8).size() - 1;
  wpb::SplitMix64 rng{20240816};
  for (int trial = 0; trial < 50; ++trial) {
    wpb::TraceSpec spec{8, {}};
    for (std::size_t j = 0; j < nonzero; ++j)
      spec.choices.push_back(static_cast<std::uint8_t>(rng.next_bit()));
    auto f = wpb::eval_trace_form(ctx8, spec);
    if (!wpb::is_family_member(f) || !wpb::anf_structure_check(f)) {
      detail = "n=8 trial " + std::to_string(trial) + " fails the membership checks";
      return false;
    }
  }
  return true;
}

// Mask reduction and Krawtchouk split equal the plain sweep.
bool criterion7(std::string& detail) {
  // Slice character sums against the polynomial, exhaustively at n=8.
  for (unsigned k = 0; k <= 8; ++k) {
    auto slice = wpb::weight_slice(8, k);
    for (std::uint32_t a = 0; a < 256; ++a) {
      std::int64_t sum = 0;
      for (auto x : slice.members) sum += wpb::inner_product(a, x) ? -1 : 1;
      if (sum != wpb::krawtchouk(k, wpb::weight(a), 8)) {
        detail = "character sum mismatch at k=" + std::to_string(k);
        return false;
      }
    }
  }

  wpb::OrbitIndex idx8(8);
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto [a, f] = wpb::sample(idx8, seed);
    for (unsigned k = 1; k <= 7; ++k) {
      std::int64_t plain = wpb::nl_restricted(f, wpb::weight_slice(8, k).members);
      if (wpb::nl_k_reduced(f, k, idx8, wpb::CorrelationForm::direct) != plain ||
          wpb::nl_k_reduced(f, k, idx8, wpb::CorrelationForm::krawtchouk_split) != plain) {
        detail = "n=8 seed " + std::to_string(seed) + " k=" + std::to_string(k);
        return false;
      }
    }
  }

  wpb::OrbitIndex idx16(16);
  for (std::uint64_t seed = 7; seed < 10; ++seed) {
    auto [a, f] = wpb::sample(idx16, seed);
    for (unsigned k : {2u, 3u, 4u}) {
      std::int64_t plain = wpb::nl_restricted(f, wpb::weight_slice(16, k).members);
      if (wpb::nl_k_reduced(f, k, idx16, wpb::CorrelationForm::direct) != plain ||
          wpb::nl_k_reduced(f, k, idx16, wpb::CorrelationForm::krawtchouk_split) !=
              plain) {
        detail = "n=16 seed " + std::to_string(seed) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

// Orbit accounting and the disjointness the installer relies on.
bool criterion8(std::string& detail) {
  for (unsigned n : {2u, 4u, 8u, 16u}) {
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= n; ++k)
      total += wpb::representatives_by_weight(n, k).size();
    if (wpb::orbit_count(n) != total) {
      detail = "orbit count mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  if (wpb::orbit_count(16) != 4116) {
    detail = "n=16 orbit count is not 4116";
    return false;
  }
  for (unsigned k = 3; k <= 15; ++k) {
    if (!wpb::check_distinct_orbits(wpb::slice_sets(16, k))) {
      detail = "n=16 k=" + std::to_string(k) + " has colliding orbits";
      return false;
    }
  }
  for (unsigned k : {3u, 4u, 5u, 6u}) {
    if (!wpb::check_distinct_orbits(wpb::slice_sets(32, k))) {
      detail = "n=32 k=" + std::to_string(k) + " has colliding orbits";
      return false;
    }
  }
  return true;
}

// Complementing input and output mirrors the profile.
bool criterion9(std::string& detail) {
  wpb::OrbitIndex idx(8);
  for (std::uint64_t seed = 300; seed < 310; ++seed) {
    auto [a, f] = wpb::sample(idx, seed);
    auto g = wpb::complement_input(f);
    for (std::uint64_t t = 0; t < g.domain_size(); ++t)
      g.flip(static_cast<std::uint32_t>(t));
    if (!wpb::is_family_member(g)) {
      detail = "complemented function left the family";
      return false;
    }
    for (unsigned k = 1; k <= 7; ++k) {
      if (wpb::nl_k_reduced(f, k, idx) != wpb::nl_k_reduced(g, 8 - k, idx)) {
        detail = "seed " + std::to_string(seed) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "8-variable slice value sets and caps", 60, criterion1);
  run_criterion(2, "pair constraint forces NL_3 >= 8", 10, criterion2);
  run_criterion(3, "profile-optimal base is (0,9,22,27,22,9,0)", 60, criterion3);
  run_criterion(4, "16-variable build lands between floor and cap", 600, criterion4);
  run_criterion(5, "assignment sampling yields sound members", 120, criterion5);
  run_criterion(6, "trace forms and assignment builds coincide", 120, criterion6);
  run_criterion(7, "mask reduction equals the plain sweep", 600, criterion7);
  run_criterion(8, "orbit counts and slice-set disjointness", 120, criterion8);
  run_criterion(9, "complement symmetry mirrors the profile", 60, criterion9);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
