#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wpb/construction1.hpp"
#include "wpb/family.hpp"
#include "wpb/gf2n.hpp"
#include "wpb/orbits.hpp"
#include "wpb/weightwise_nl.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::vector<unsigned> parse_ks(const std::string& spec, unsigned n) {
  std::vector<unsigned> ks;
  auto push = [&](const std::string& token) {
    std::size_t dots = token.find("..");
    std::size_t pos = 0;
    if (dots != std::string::npos) {
      unsigned lo = static_cast<unsigned>(std::stoul(token.substr(0, dots), &pos));
      if (pos != dots) throw std::invalid_argument("--ks: bad range start");
      unsigned hi =
          static_cast<unsigned>(std::stoul(token.substr(dots + 2), &pos));
      if (pos != token.size() - dots - 2) throw std::invalid_argument("--ks: bad range end");
      if (lo > hi) throw std::invalid_argument("--ks: empty range");
      for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
    } else {
      unsigned k = static_cast<unsigned>(std::stoul(token, &pos));
      if (pos != token.size()) throw std::invalid_argument("--ks: bad value");
      ks.push_back(k);
    }
  };
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string::npos) {
      push(spec.substr(start));
      break;
    }
    push(spec.substr(start, comma - start));
    start = comma + 1;
  }
  for (auto k : ks)
    if (k < 1 || k > n - 1)
      throw std::invalid_argument("--ks: slice index outside 1..n-1");
  return ks;
}

std::map<unsigned, std::int64_t> parse_base_csv(const std::string& csv) {
  std::map<unsigned, std::int64_t> base;
  unsigned k = 2;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string token =
        comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
    std::size_t pos = 0;
    base[k++] = std::stoll(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("--base: bad integer");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return base;
}

std::string binary_string(std::uint32_t x, unsigned n) {
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i)
    if ((x >> (n - 1 - i)) & 1) s[i] = '1';
  return s;
}

struct ConstructOpts {
  unsigned n = 8;
  std::uint64_t seed = 0;
  std::string method = "family";
  std::string base = "random";
  std::string spec_hex;
  bool share = false;
  std::string out;
  bool as_json = false;
};

int run_construct(const ConstructOpts& o) {
  if (o.method != "family" && o.method != "construction1")
    throw std::invalid_argument("--method must be family or construction1");
  if (o.base != "random" && o.base != "best")
    throw std::invalid_argument("--base must be random or best");

  wpb::BooleanFunction f(2);
  if (o.method == "family") {
    if (o.n != 4 && o.n != 8 && o.n != 16)
      throw std::invalid_argument("construct family: n must be 4, 8 or 16");
    wpb::OrbitIndex idx(o.n);
    if (!o.spec_hex.empty()) {
      f = wpb::build_from_assignment(idx,
                                     wpb::assignment_from_hex(o.n, o.spec_hex, idx));
    } else {
      f = wpb::sample(idx, o.seed).second;
    }
  } else {
    if (o.n != 8 && o.n != 16)
      throw std::invalid_argument("construct construction1: n must be 8 or 16");
    if (!o.spec_hex.empty())
      throw std::invalid_argument("--spec only applies to --method family");
    wpb::ConstructionParams params;
    params.n = o.n;
    params.seed = o.seed;
    params.base8 = o.base == "best" ? wpb::Base8Mode::best_profile
                                    : wpb::Base8Mode::constrained_random;
    params.share_subfunctions = o.share;
    f = wpb::build(params);
  }

  wpb::OrbitIndex idx(o.n);
  std::string assignment = wpb::to_hex(wpb::assignment_of(f, idx));
  bool balanced = wpb::is_wpb(f);
  wpb::write_wpbf_file(o.out, f);

  if (o.as_json) {
    json j{{"schema", kSchemaVersion},
           {"config",
            {{"command", "construct"},
             {"n", o.n},
             {"seed", o.seed},
             {"method", o.method},
             {"base", o.base},
             {"share_subfunctions", o.share},
             {"spec", o.spec_hex}}},
           {"assignment", assignment},
           {"wpb", balanced},
           {"file", o.out}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "# construct n=" << o.n << " method=" << o.method << " seed=" << o.seed
              << " base=" << o.base << " share=" << (o.share ? "yes" : "no") << '\n';
    std::cout << "assignment: " << assignment << " (" << idx.nontrivial_reps().size()
              << " bits)\n";
    std::cout << "wpb: " << (balanced ? "yes" : "no") << '\n';
    std::cout << "wrote: " << o.out << '\n';
  }
  return balanced ? 0 : 2;
}

struct VerifyOpts {
  std::string in;
  bool show_field = false;
  bool as_json = false;
};

int run_verify(const VerifyOpts& o) {
  wpb::BooleanFunction f = wpb::read_wpbf_file(o.in);
  const unsigned n = f.n();
  bool pow2 = wpb::is_pow2(n);
  bool balanced = pow2 && wpb::is_wpb(f);
  bool member = wpb::is_family_member(f);
  bool anf_ok = pow2 && n <= 16 && wpb::anf_structure_check(f);
  int deg = wpb::degree(f);

  std::optional<wpb::FieldContext> field;
  if (o.show_field && n <= 16) field = wpb::FieldContext::build(n);

  if (o.as_json) {
    json j{{"schema", kSchemaVersion}, {"n", n},           {"wpb", balanced},
           {"family_member", member},  {"degree", deg},    {"anf_structure", anf_ok},
           {"file", o.in}};
    if (field) {
      j["field"] = {{"polynomial", field->modulus()},
                    {"generator", field->generator()},
                    {"normal_element", field->normal_element()}};
      if (n % 2 == 0) j["field"]["beta"] = field->f4_beta();
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n: " << n << '\n';
    std::cout << "wpb: " << (balanced ? "yes" : "no") << '\n';
    std::cout << "family-member: " << (member ? "yes" : "no") << '\n';
    std::cout << "degree: " << deg << '\n';
    std::cout << "anf-structure: " << (anf_ok ? "yes" : "no") << '\n';
    if (field) {
      std::cout << "field: polynomial=0x" << std::hex << field->modulus()
                << " generator=0x" << field->generator() << " normal-element=0x"
                << field->normal_element();
      if (n % 2 == 0) std::cout << " beta=0x" << field->f4_beta();
      std::cout << std::dec << '\n';
    } else if (o.show_field) {
      std::cout << "field: (not available for n > 16)\n";
    }
  }
  return 0;
}

struct ProfileOpts {
  std::string in;
  std::string ks;
  bool naive = false;
  bool reduced = false;
  bool require_wpb = false;
  unsigned threads = 0;
  std::string lower_base;
  bool as_json = false;
};

int run_profile(const ProfileOpts& o) {
  wpb::BooleanFunction f = wpb::read_wpbf_file(o.in);
  const unsigned n = f.n();
  if (o.naive && o.reduced)
    throw std::invalid_argument("--naive and --reduced are mutually exclusive");
  if (o.require_wpb && !(wpb::is_pow2(n) && wpb::is_wpb(f))) {
    std::cerr << "error: input is not weightwise perfectly balanced\n";
    return 2;
  }

  std::vector<unsigned> ks;
  if (!o.ks.empty()) {
    ks = parse_ks(o.ks, n);
  } else {
    for (unsigned k = 1; k <= n - 1; ++k) ks.push_back(k);
  }

  std::map<unsigned, std::int64_t> lower;
  if (!o.lower_base.empty())
    lower = wpb::recursive_lower_bounds(n, parse_base_csv(o.lower_base));

  wpb::NlProfile prof = wpb::profile_slices(f, ks, !o.naive, o.threads);
  for (auto& row : prof.rows) {
    auto it = lower.find(row.k);
    if (it != lower.end()) row.lower = it->second;
  }

  if (o.as_json) {
    json rows = json::array();
    for (const auto& row : prof.rows) {
      json r{{"k", row.k}, {"nl", row.nl}, {"upper", row.upper}};
      if (row.lower) r["lower"] = *row.lower;
      rows.push_back(r);
    }
    json j{{"schema", kSchemaVersion},
           {"config",
            {{"command", "profile"},
             {"in", o.in},
             {"path", o.naive ? "naive" : "reduced"},
             {"threads", wpb::resolve_threads(o.threads)}}},
           {"n", n},
           {"rows", rows}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "# profile in=" << o.in << " path=" << (o.naive ? "naive" : "reduced")
              << " threads=" << wpb::resolve_threads(o.threads) << '\n';
    std::cout << "  k        nl     upper     lower\n";
    for (const auto& row : prof.rows) {
      std::printf("%3u %9lld %9llu ", row.k, static_cast<long long>(row.nl),
                  static_cast<unsigned long long>(row.upper));
      if (row.lower)
        std::printf("%9lld\n", static_cast<long long>(*row.lower));
      else
        std::printf("%9s\n", "-");
    }
  }
  return 0;
}

struct OrbitsOpts {
  unsigned n = 8;
  int weight = -1;
  bool as_json = false;
};

int run_orbits(const OrbitsOpts& o) {
  if (o.n < 2 || o.n > 32) throw std::invalid_argument("orbits: n must be in 2..32");
  if (o.weight < 0 && o.n > 16)
    throw std::invalid_argument("orbits: full listing needs n <= 16; pass --weight");

  std::vector<std::pair<unsigned, wpb::Orbit>> rows;
  if (o.weight >= 0) {
    if (static_cast<unsigned>(o.weight) > o.n)
      throw std::invalid_argument("orbits: weight above n");
    for (const auto& orb :
         wpb::representatives_by_weight(o.n, static_cast<unsigned>(o.weight)))
      rows.emplace_back(static_cast<unsigned>(o.weight), orb);
  } else {
    for (unsigned k = 0; k <= o.n; ++k)
      for (const auto& orb : wpb::representatives_by_weight(o.n, k))
        rows.emplace_back(k, orb);
  }

  if (o.as_json) {
    json arr = json::array();
    for (const auto& [k, orb] : rows)
      arr.push_back({{"weight", k},
                     {"representative", orb.representative},
                     {"length", orb.length}});
    json j{{"schema", kSchemaVersion},
           {"n", o.n},
           {"total_orbits", wpb::orbit_count(o.n)},
           {"orbits", arr}};
    std::cout << j.dump(2) << '\n';
  } else {
    const int rep_w = static_cast<int>(std::max(14u, o.n));
    std::cout << "n=" << o.n << " total-orbits=" << wpb::orbit_count(o.n) << '\n';
    std::printf("%6s  %-*s  %6s\n", "weight", rep_w, "representative", "length");
    for (const auto& [k, orb] : rows) {
      std::printf("%6u  %-*s  %6u\n", k, rep_w,
                  binary_string(orb.representative, o.n).c_str(), orb.length);
    }
    std::cout << "listed: " << rows.size() << '\n';
  }
  return 0;
}

int run_table1(bool as_json) {
  struct Row {
    unsigned k;
    std::vector<std::int64_t> values;
    std::uint64_t upper;
  };
  std::vector<Row> rows;
  for (unsigned k : {2u, 3u, 4u})
    rows.push_back(Row{k, wpb::slice_nl_values(8, k), wpb::upper_bound(8, k)});

  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"k", r.k}, {"values", r.values}, {"upper", r.upper}});
    json j{{"schema", kSchemaVersion}, {"n", 8}, {"rows", arr}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      std::cout << "k=" << r.k << ": values {";
      for (std::size_t i = 0; i < r.values.size(); ++i)
        std::cout << (i ? ", " : "") << r.values[i];
      std::cout << "}  upper " << r.upper << '\n';
    }
  }
  return 0;
}

int run_table2(const std::string& base_csv, bool as_json) {
  auto base = parse_base_csv(base_csv.empty() ? "9,22,27" : base_csv);
  auto lower = wpb::recursive_lower_bounds(16, base);

  if (as_json) {
    json arr = json::array();
    for (unsigned k = 2; k <= 8; ++k)
      arr.push_back({{"k", k}, {"lower", lower.at(k)}, {"upper", wpb::upper_bound(16, k)}});
    json j{{"schema", kSchemaVersion}, {"n", 16}, {"rows", arr}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "  k     lower     upper\n";
    for (unsigned k = 2; k <= 8; ++k)
      std::printf("%3u %9lld %9llu\n", k, static_cast<long long>(lower.at(k)),
                  static_cast<unsigned long long>(wpb::upper_bound(16, k)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weightwise perfectly balanced Boolean functions: construction and analysis"};
  app.require_subcommand(1);

  ConstructOpts construct_opts;
  auto* construct = app.add_subcommand("construct", "build a function and write a WPBF file");
  construct->add_option("--n", construct_opts.n, "number of variables")->required();
  construct->add_option("--seed", construct_opts.seed, "PRNG seed");
  construct->add_option("--method", construct_opts.method, "family | construction1");
  construct->add_option("--base", construct_opts.base,
                        "construction1 base mode: random | best");
  construct->add_option("--spec", construct_opts.spec_hex,
                        "explicit family assignment in hex (family only)");
  construct->add_flag("--share-sub", construct_opts.share,
                      "use one shared subfunction for every slice");
  construct->add_option("-o,--out", construct_opts.out, "output WPBF path")->required();
  construct->add_flag("--json", construct_opts.as_json, "JSON output");

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "analyze a WPBF file");
  verify->add_option("--in", verify_opts.in, "input WPBF path")->required();
  verify->add_flag("--show-field", verify_opts.show_field,
                   "print the deterministic field parameters for this n");
  verify->add_flag("--json", verify_opts.as_json, "JSON output");

  ProfileOpts profile_opts;
  auto* profile = app.add_subcommand("profile", "weightwise nonlinearity profile");
  profile->add_option("--in", profile_opts.in, "input WPBF path")->required();
  profile->add_option("--ks", profile_opts.ks, "slices, e.g. 2..8 or 2,4,6");
  profile->add_flag("--naive", profile_opts.naive, "full 2^n mask sweep per slice");
  profile->add_flag("--reduced", profile_opts.reduced,
                    "orbit-representative mask sweep (default)");
  profile->add_flag("--require-wpb", profile_opts.require_wpb,
                    "fail unless the input is weightwise perfectly balanced");
  profile->add_option("--threads", profile_opts.threads,
                      "worker count (0 = WPB_THREADS or hardware)");
  profile->add_option("--lower-base", profile_opts.lower_base,
                      "attach recursive lower bounds; CSV of half-size base values "
                      "starting at slice 2");
  profile->add_flag("--json", profile_opts.as_json, "JSON output");

  OrbitsOpts orbits_opts;
  auto* orbits = app.add_subcommand("orbits", "rotation orbit tables");
  orbits->add_option("--n", orbits_opts.n, "vector length")->required();
  orbits->add_option("--weight", orbits_opts.weight, "restrict to one weight");
  orbits->add_flag("--json", orbits_opts.as_json, "JSON output");

  bool table1_json = false;
  auto* table1 = app.add_subcommand("table1", "achievable slice values at n=8");
  table1->add_flag("--json", table1_json, "JSON output");

  std::string table2_base;
  bool table2_json = false;
  auto* table2 = app.add_subcommand("table2", "n=16 lower/upper bound table");
  table2->add_option("--base", table2_base, "base profile CSV (default 9,22,27)");
  table2->add_flag("--json", table2_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return run_construct(construct_opts);
    if (*verify) return run_verify(verify_opts);
    if (*profile) return run_profile(profile_opts);
    if (*orbits) return run_orbits(orbits_opts);
    if (*table1) return run_table1(table1_json);
    if (*table2) return run_table2(table2_base, table2_json);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
