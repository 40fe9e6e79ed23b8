// Copyright 2026 The rcayley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run_cli() is separate from main() so the tests
// can drive it with in-memory streams.
//
// Exit codes:
//   0  success
//   2  parse or validation error
//   3  guard exceeded
//   4  formula/oracle mismatch above 1e-6
//   5  classification routes disagree
//   6  invariant violation or non-convergence
//   1  anything else

#ifndef RCAYLEY_TOOLS_CLI_APP_HPP
#define RCAYLEY_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "rcayley/rcayley.hpp"

namespace rcayley::cli {

using nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kGuard = 3,
  kMismatch = 4,
  kRoutes = 5,
  kInvariant = 6,
};

inline constexpr int kSchema = 1;
inline constexpr double kMismatchTolerance = 1e-6;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

inline std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("RC_SEED");
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  const auto v = std::strtoull(s, &end, 0);
  if (end == nullptr || *end != '\0') throw ValidationError("RC_SEED is not an integer");
  return v;
}

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

/// Accepts integers written as 10000000 or 1e7.
inline std::uint64_t parse_count(const std::string& s, const char* what) {
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !(d >= 0) || d != std::floor(d) || d > 1e18) {
    throw ValidationError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  }
  return static_cast<std::uint64_t>(d);
}

inline ordered_json header(const char* command) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

inline ordered_json verdict_json(const RamanujanVerdict& v) {
  return {{"mu", v.mu},
          {"bound", v.bound},
          {"margin", v.margin},
          {"status", std::string(to_string(v.status))},
          {"ramanujan", v.ramanujan},
          {"escalated", v.escalated}};
}

inline ordered_json spec_json(const GroupTable& g, const NormalSubsetSpec& s) {
  ordered_json x = ordered_json::array();
  ordered_json y = ordered_json::array();
  for (int r : s.x_reps) x.push_back(g.element_label(r));
  for (int r : s.y_reps) y.push_back(g.element_label(r));
  return {{"X", x}, {"Y", y}};
}

inline void print_pretty(std::ostream& out, const ordered_json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      out << indent << it.key() << ":\n";
      print_pretty(out, *it, indent + "  ");
    } else if (it->is_array() && !it->empty() && it->front().is_object()) {
      out << indent << it.key() << ": " << it->size() << " entries\n";
      for (const auto& e : *it) out << indent << "  - " << e.dump() << "\n";
    } else {
      out << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
          << "\n";
    }
  }
}

inline void emit(std::ostream& out, const ordered_json& j, const std::string& format) {
  if (format == "pretty") {
    print_pretty(out, j);
  } else {
    out << j.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
  std::string group;
  std::string subset;
  bool oracle = false;
  std::string format = "json";
};

inline int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const auto g = parse_group_spec(a.group);
  const auto s = parse_subset_spec(g, a.subset);
  Spectrum sp;
  if (const auto spec = s.normal_spec()) {
    sp = frobenius_spectrum(*g, *spec);
  } else if (g->is_dihedral()) {
    sp = dihedral_spectrum(s);
  } else {
    sp = oracle_spectrum(s);
  }
  check_spectrum_invariants(sp, g->order());
  const auto v = verdict(sp);

  std::optional<double> delta;
  if (a.oracle) delta = max_abs_difference(sp, oracle_spectrum(s));

  if (a.format == "csv") {
    out << "value,multiplicity\n";
    for (const auto& e : sp.entries) out << fmt(e.value) << "," << e.multiplicity << "\n";
  } else {
    auto j = header("spectrum");
    j["group"] = g->family().label();
    j["subset"] = s.to_string();
    j["order"] = g->order();
    j["valency"] = sp.valency;
    j["covalency"] = s.covalency();
    if (g->is_dihedral()) {
      j["l1"] = s.l1();
      j["l2"] = s.l2();
    }
    if (const auto spec = s.normal_spec()) j["normal"] = spec_json(*g, *spec);
    j["source"] = std::string(to_string(sp.source));
    ordered_json ev = ordered_json::array();
    for (const auto& e : sp.entries) ev.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    j["eigenvalues"] = ev;
    j["verdict"] = verdict_json(v);
    if (delta) j["oracle"] = {{"max_abs_delta", *delta}, {"tolerance", kMismatchTolerance}};
    emit(out, j, a.format);
  }
  if (delta && *delta > kMismatchTolerance) {
    throw MismatchError("formula and oracle spectra differ by " + fmt(*delta), *delta);
  }
  return kOk;
}

struct BoundsArgs {
  std::string group;
  bool exhaustive = false;
  std::string format = "json";
};

inline int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const auto g = parse_group_spec(a.group);
  const auto rep = a.exhaustive ? verify_l_hat(*g) : compute_l_hat(*g);
  auto j = header("bounds");
  j["group"] = g->family().label();
  j["order"] = g->order();
  j["kernel_size"] = g->kernel_size();
  j["complement_size"] = g->complement_size();
  j["ratio"] = g->ratio();
  j["method"] = std::string(to_string(rep.method));
  j["l0"] = rep.l0;
  j["l_hat"] = rep.l_hat;
  if (g->is_dihedral() && g->kernel_size() >= 11) {
    j["formula"] = dihedral_l_hat_formula(g->kernel_size());
  } else if (g->kernel_size() >= 4 * g->complement_size() + 1) {
    j["formula"] = fpq_l_hat_formula(g->kernel_size(), g->complement_size());
  }
  j["i0"] = rep.i0;
  j["a_i0"] = rep.a_i0;
  if (rep.l1_next) j["l1_next"] = *rep.l1_next;
  if (rep.witness) {
    const auto s = make_normal_subset(g, *rep.witness, false);
    j["witness"] = {{"subset", s.to_string()},
                    {"normal", spec_json(*g, *rep.witness)},
                    {"covalency", *rep.witness_covalency},
                    {"verdict", verdict_json(*rep.witness_verdict)}};
  }
  if (rep.example_at_l_hat) {
    const auto s = make_normal_subset(g, *rep.example_at_l_hat, false);
    j["example_at_l_hat"] = {{"subset", s.to_string()},
                             {"normal", spec_json(*g, *rep.example_at_l_hat)}};
  }
  if (rep.method == BoundsMethod::exhaustive) j["subsets_checked"] = rep.subsets_checked;
  emit(out, j, a.format);
  return kOk;
}

inline ordered_json classification_json(const PrimeClassification& c) {
  ordered_json j;
  j["p"] = c.p;
  j["floor_2sqrt2p"] = c.floor2sqrt2p;
  j["parity"] = c.parity_odd ? "odd" : "even";
  j["l_hat"] = c.l_hat;
  j["r"] = c.r;
  j["k"] = c.k;
  j["c"] = c.c;
  if (c.in_family) j["family"] = {{"r", c.r}, {"c", c.c}, {"k_min", find_family(c.r, c.c)->k_min}};
  j["split"] = {c.split.l1, c.split.l2};
  j["mu1"] = c.mu1;
  j["rb"] = c.rb;
  j["escalated"] = c.escalated;
  j["verdict"] = std::string(to_string(c.verdict));
  j["epsilon"] = c.epsilon;
  j["tilde_l"] = c.tilde_l;
  return j;
}

inline int cmd_classify(std::int64_t p, const std::string& format, std::ostream& out) {
  auto j = header("classify");
  const auto body = classification_json(classify_prime(p));
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(out, j, format);
  return kOk;
}

struct ScanArgs {
  std::int64_t from = 29;
  std::int64_t to = 1000;
  bool all = false;
  unsigned jobs = 1;
  std::string format = "json";
};

inline constexpr std::int64_t kScanSpan = 100'000'000;

/// Classifies every prime in [from, to]; the result is ordered by p for any
/// number of jobs.
inline std::vector<PrimeClassification> scan_primes(std::int64_t from, std::int64_t to,
                                                    unsigned jobs) {
  from = std::max<std::int64_t>(from, kClassifierMinPrime);
  if (to < from) return {};
  if (to - from > kScanSpan) throw GuardError("scan range wider than 1e8");
  std::vector<std::int64_t> primes;
  for (std::uint64_t q : sieve_primes(static_cast<std::uint64_t>(to))) {
    if (static_cast<std::int64_t>(q) >= from) primes.push_back(static_cast<std::int64_t>(q));
  }
  std::vector<PrimeClassification> out(primes.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, 64));
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::size_t> error_at(jobs, SIZE_MAX);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < primes.size(); i += jobs) {
      try {
        out[i] = classify_prime(primes[i]);
      } catch (...) {
        errors[t] = std::current_exception();
        error_at[t] = i;
        return;
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  // Report the failure at the smallest p, whatever thread hit it.
  std::size_t first = SIZE_MAX;
  std::exception_ptr err;
  for (unsigned t = 0; t < jobs; ++t) {
    if (errors[t] && error_at[t] < first) {
      first = error_at[t];
      err = errors[t];
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

inline int cmd_scan(const ScanArgs& a, std::ostream& out) {
  if (a.from > a.to) throw ValidationError("scan: --from exceeds --to");
  const auto rows = scan_primes(a.from, a.to, a.jobs);
  std::size_t exceptional = 0;
  for (const auto& c : rows) exceptional += c.verdict == PrimeVerdict::exceptional;
  if (a.format == "csv") {
    out << "p,parity,r,k,c,verdict,mu1,rb\n";
    for (const auto& c : rows) {
      if (!a.all && c.verdict != PrimeVerdict::exceptional) continue;
      out << c.p << "," << (c.parity_odd ? "odd" : "even") << "," << c.r << "," << c.k << ","
          << c.c << "," << to_string(c.verdict) << "," << fmt(c.mu1) << "," << fmt(c.rb) << "\n";
    }
    return kOk;
  }
  auto j = header("scan");
  j["from"] = a.from;
  j["to"] = a.to;
  j["primes"] = rows.size();
  j["exceptional"] = exceptional;
  ordered_json list = ordered_json::array();
  for (const auto& c : rows) {
    if (!a.all && c.verdict != PrimeVerdict::exceptional) continue;
    list.push_back(classification_json(c));
  }
  j["rows"] = list;
  emit(out, j, a.format);
  return kOk;
}

inline int cmd_hl(int r, int c, std::uint64_t cutoff, const std::string& format,
                  std::ostream& out) {
  const auto fam = family_or_throw(r, c);
  const auto est = hl_constant(fam, cutoff);
  auto j = header("hl");
  j["family"] = {{"r", r}, {"c", c}};
  j["reduced_c"] = est.reduced_c;
  j["discriminant"] = fam.discriminant();
  j["cutoff"] = est.cutoff;
  j["half_constant"] = est.partial;
  j["reference"] = est.target;
  j["abs_error"] = std::abs(est.partial - est.target);
  emit(out, j, format);
  return kOk;
}

inline int cmd_families(std::int64_t kmax, bool csv, std::ostream& out) {
  if (csv) {
    out << "r,c,k,f,prime\n";
    for (const auto& fam : quadratic_families()) {
      if (kmax < fam.k_min) continue;
      for (const auto& e : enumerate_family(fam.r, fam.c, kmax)) {
        out << fam.r << "," << fam.c << "," << e.k << "," << e.value << ","
            << (e.prime ? 1 : 0) << "\n";
      }
    }
    return kOk;
  }
  auto j = header("families");
  j["kmax"] = kmax;
  ordered_json fams = ordered_json::array();
  for (const auto& fam : quadratic_families()) {
    ordered_json f = {{"r", fam.r}, {"c", fam.c}, {"k_min", fam.k_min}};
    ordered_json primes = ordered_json::array();
    ordered_json composites = ordered_json::array();
    if (kmax >= fam.k_min) {
      for (const auto& e : enumerate_family(fam.r, fam.c, kmax)) {
        (e.prime ? primes : composites).push_back(e.value);
      }
    }
    f["primes"] = primes;
    f["composites"] = composites;
    fams.push_back(f);
  }
  j["families"] = fams;
  out << j.dump(2) << "\n";
  return kOk;
}

inline int cmd_avoid(std::int64_t a, const std::string& format, std::ostream& out) {
  const auto r = residue_avoidance(a);
  auto j = header("avoid");
  j["modulus"] = r.modulus;
  j["hit"] = r.hit;
  j["avoided"] = r.avoided;
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
  emit(out, j, format);
  return kOk;
}

inline int cmd_tilde(int p, const std::string& format, std::ostream& out) {
  const auto rep = tilde_l_exhaustive(p);
  auto j = header("tilde");
  j["p"] = p;
  j["tilde_l"] = rep.tilde_l;
  if (p >= 11) j["l_hat"] = dihedral_l_hat_formula(p);
  j["subsets_checked"] = rep.subsets_checked;
  ordered_json by = ordered_json::array();
  for (const auto& s : rep.by_covalency) {
    by.push_back({{"l", s.l}, {"subsets", s.subsets}, {"all_ramanujan", s.all_ramanujan},
                  {"max_mu", s.max_mu}, {"bound", 2 * std::sqrt(2.0 * p - s.l - 1)}});
  }
  j["by_covalency"] = by;
  if (rep.witness) {
    j["witness"] = {{"subset", rep.witness->to_string()},
                    {"covalency", rep.witness->covalency()},
                    {"verdict", verdict_json(*rep.witness_verdict)}};
  }
  emit(out, j, format);
  return kOk;
}

inline ordered_json extremality_json(const ExtremalityReport& r) {
  return {{"p", r.p},
          {"l", r.l},
          {"split", {r.split.l1, r.split.l2}},
          {"mu_extremal", r.mu_extremal},
          {"max_mu", r.max_mu},
          {"max_mu_subset", r.max_mu_subset},
          {"subsets", r.subsets},
          {"violations", r.violations},
          {"exhaustive", r.exhaustive}};
}

inline int cmd_extremal(int p, std::uint64_t samples, std::uint64_t seed,
                        const std::string& format, std::ostream& out) {
  auto j = header("extremal");
  const auto r = p <= kTildeMaxPrime
                     ? exhaustive_extremality(p)
                     : sample_extremality(p, dihedral_l_hat_formula(p) + 1, samples, seed);
  if (!r.exhaustive) j["seed"] = seed;
  const auto body = extremality_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(out, j, format);
  return kOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
};

inline ordered_json verify_oracle_normal(double& worst) {
  ordered_json rows = ordered_json::array();
  for (auto g : {build_dihedral(11), build_dihedral(13), build_fpq(7, 3), build_fpq(13, 3)}) {
    const auto table = character_table(*g);
    double delta = 0;
    std::uint64_t n = 0;
    for_each_normal_subset(*g, [&](const NormalSubsetSpec& spec) {
      const auto s = make_normal_subset(g, spec, false);
      delta = std::max(delta, max_abs_difference(normal_spectrum(*g, table, spec),
                                                 oracle_spectrum(s)));
      ++n;
    });
    worst = std::max(worst, delta);
    rows.push_back({{"group", g->family().label()}, {"subsets", n}, {"max_abs_delta", delta}});
  }
  return rows;
}

/// Random symmetric generating subset of D_2p; each rotation pair and each
/// reflection is kept with probability 1/2.
inline CayleySubset random_dihedral_subset(const GroupPtr& g, std::mt19937_64& rng) {
  const int p = g->kernel_size();
  std::bernoulli_distribution coin(0.5);
  while (true) {
    ElementMask m(2 * p);
    for (int a = 1; a <= (p - 1) / 2; ++a) {
      if (coin(rng)) {
        m.set(a);
        m.set(p - a);
      }
    }
    for (int a = 0; a < p; ++a) m.set(p + a, coin(rng));
    if (generates(*g, m)) return make_subset(g, std::move(m));
  }
}

inline ordered_json verify_oracle_dihedral(std::uint64_t samples, std::uint64_t seed,
                                           double& worst) {
  const int primes[] = {11, 13, 17, 19, 23, 29, 31};
  std::vector<GroupPtr> groups;
  for (int p : primes) groups.push_back(build_dihedral(p));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  double delta = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto& g = groups[pick(rng)];
    const auto s = random_dihedral_subset(g, rng);
    delta = std::max(delta, max_abs_difference(dihedral_spectrum(s), oracle_spectrum(s)));
  }
  worst = std::max(worst, delta);
  return {{"samples", samples}, {"seed", seed}, {"max_abs_delta", delta}};
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  auto j = header("verify");
  bool ok = true;
  ordered_json checks = ordered_json::array();
  auto record = [&](const char* name, bool pass, ordered_json detail) {
    ok = ok && pass;
    checks.push_back({{"check", name}, {"pass", pass}, {"detail", std::move(detail)}});
  };

  double worst = 0;
  auto normal_rows = verify_oracle_normal(worst);
  record("oracle_normal", worst <= 1e-8, normal_rows);
  double worst_d = 0;
  auto dihedral_rows = verify_oracle_dihedral(a.samples, a.seed, worst_d);
  record("oracle_dihedral", worst_d <= 1e-8, dihedral_rows);

  ordered_json sweep = ordered_json::array();
  bool sweep_ok = true;
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    const auto g = build_dihedral(p);
    const auto slow = verify_l_hat(*g);
    const auto fast = compute_l_hat(*g);
    const auto expect = p >= 11 ? dihedral_l_hat_formula(p) : p;
    const bool pass = slow.l_hat == expect && fast.l_hat == expect;
    sweep_ok = sweep_ok && pass;
    sweep.push_back({{"group", g->family().label()}, {"exhaustive", slow.l_hat},
                     {"fast", fast.l_hat}, {"expected", expect}});
  }
  for (auto [p, q] : {std::pair<int, int>{31, 5}, {43, 3}}) {
    const auto g = build_fpq(p, q);
    const auto slow = verify_l_hat(*g);
    const auto fast = compute_l_hat(*g);
    const bool pass = slow.l_hat == fast.l_hat && fast.l_hat == fpq_l_hat_formula(p, q);
    sweep_ok = sweep_ok && pass;
    sweep.push_back({{"group", g->family().label()}, {"exhaustive", slow.l_hat},
                     {"fast", fast.l_hat}, {"expected", fpq_l_hat_formula(p, q)}});
  }
  record("l_hat_sweeps", sweep_ok, sweep);

  ordered_json tilde = ordered_json::array();
  bool tilde_ok = true;
  const std::pair<int, int> tilde_expect[] = {{3, 4}, {5, 8}, {7, 6}, {11, 8}, {13, 8}};
  for (auto [p, t] : tilde_expect) {
    const auto rep = tilde_l_exhaustive(p);
    tilde_ok = tilde_ok && rep.tilde_l == t;
    tilde.push_back({{"p", p}, {"tilde_l", rep.tilde_l}, {"expected", t}});
  }
  record("tilde_small_p", tilde_ok, tilde);

  ordered_json ext = ordered_json::array();
  for (int p : {11, 13}) ext.push_back(extremality_json(exhaustive_extremality(p)));
  record("extremality_exhaustive", true, ext);

  j["checks"] = checks;
  j["pass"] = ok;
  emit(out, j, a.format);
  if (!ok) throw InvariantViolation("verify: at least one check failed");
  return kOk;
}

// ---------------------------------------------------------------------------

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan Cayley graphs of D_2p and F_pq: spectra, bounds, exceptional primes",
               "rcayley"};
  app.require_subcommand(1);
  auto formats = CLI::IsMember({"json", "csv", "pretty"});

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum and Ramanujan verdict of X(S)");
  spectrum->add_option("--group", sa.group, "d2p:<p> or fpq:<p>,<q>")->required();
  spectrum->add_option("--subset", sa.subset,
                       "complete | mask:<hex> | interval:l1=..,l2=.. | normal:X=..;Y=..")
      ->required();
  spectrum->add_flag("--oracle", sa.oracle, "Also run the dense Jacobi oracle and compare");
  spectrum->add_option("--format", sa.format, "json | csv (value,multiplicity) | pretty")
      ->check(formats);

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "l0 and l_hat for normal Cayley subsets");
  bounds->add_option("--group", ba.group, "d2p:<p> or fpq:<p>,<q>")->required();
  bounds->add_flag("--exhaustive", ba.exhaustive, "Sweep every normal subset");
  bounds->add_option("--format", ba.format, "json | pretty")->check(formats);

  std::int64_t classify_p = 0;
  std::string classify_format = "json";
  auto* classify = app.add_subcommand("classify", "Exceptional or ordinary prime (p >= 29)");
  classify->add_option("--p", classify_p, "prime")->required();
  classify->add_option("--format", classify_format, "json | pretty")->check(formats);

  ScanArgs sc;
  auto* scan = app.add_subcommand(
      "scan",
      "Classify primes in [from, to]. CSV columns: p,parity,r,k,c,verdict,mu1,rb. "
      "Only exceptional primes are listed unless --all");
  scan->add_option("--from", sc.from, "lower end")->required();
  scan->add_option("--to", sc.to, "upper end")->required();
  scan->add_flag("--all", sc.all, "List ordinary primes too");
  scan->add_option("--jobs", sc.jobs, "worker threads; output order is unaffected");
  scan->add_option("--format", sc.format, "json | csv | pretty")->check(formats);

  int hl_r = 0;
  int hl_c = 0;
  std::string hl_cutoff = "1e7";
  std::string hl_format = "json";
  auto* hl = app.add_subcommand("hl", "Truncated Hardy-Littlewood constant C(f)/2");
  hl->add_option("--r", hl_r)->required();
  hl->add_option("--c", hl_c)->required();
  hl->add_option("--cutoff", hl_cutoff, "prime cutoff (default 1e7)");
  hl->add_option("--format", hl_format, "json | pretty")->check(formats);

  std::int64_t kmax = 0;
  bool families_csv = false;
  auto* families = app.add_subcommand(
      "families", "f(k) for the six families, k_min <= k <= kmax. CSV columns: r,c,k,f,prime");
  families->add_option("--kmax", kmax)->required();
  families->add_flag("--csv", families_csv);

  std::int64_t avoid_a = 0;
  std::string avoid_format = "json";
  auto* avoid = app.add_subcommand("avoid", "Residues mod a avoided by every family");
  avoid->add_option("--a", avoid_a)->required();
  avoid->add_option("--format", avoid_format, "json | pretty")->check(formats);

  int tilde_p = 0;
  std::string tilde_format = "json";
  auto* tilde = app.add_subcommand("tilde", "l_tilde over all Cayley subsets, p <= 13");
  tilde->add_option("--p", tilde_p)->required();
  tilde->add_option("--format", tilde_format, "json | pretty")->check(formats);

  int ext_p = 0;
  std::string ext_samples = "10000";
  std::uint64_t ext_seed = kDefaultSeed;
  std::string ext_format = "json";
  auto* extremal = app.add_subcommand(
      "extremal", "Check mu(S) <= mu(extremal) at covalency l_hat + 1 (sampled for p > 13)");
  extremal->add_option("--p", ext_p)->required();
  extremal->add_option("--samples", ext_samples);
  extremal->add_option("--seed", ext_seed, "RC_SEED overrides");
  extremal->add_option("--format", ext_format, "json | pretty")->check(formats);

  VerifyArgs va;
  std::string verify_samples = "1000";
  auto* verify = app.add_subcommand("verify", "Oracle equivalence and exhaustive sweeps");
  verify->add_option("--samples", verify_samples, "random dihedral subsets for the oracle");
  verify->add_option("--seed", va.seed, "RC_SEED overrides");
  verify->add_option("--format", va.format, "json | pretty")->check(formats);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(sa, out);
    if (bounds->parsed()) return cmd_bounds(ba, out);
    if (classify->parsed()) return cmd_classify(classify_p, classify_format, out);
    if (scan->parsed()) return cmd_scan(sc, out);
    if (hl->parsed()) return cmd_hl(hl_r, hl_c, parse_count(hl_cutoff, "--cutoff"), hl_format, out);
    if (families->parsed()) return cmd_families(kmax, families_csv, out);
    if (avoid->parsed()) return cmd_avoid(avoid_a, avoid_format, out);
    if (tilde->parsed()) return cmd_tilde(tilde_p, tilde_format, out);
    if (extremal->parsed()) {
      return cmd_extremal(ext_p, parse_count(ext_samples, "--samples"), seed_from_env(ext_seed),
                          ext_format, out);
    }
    if (verify->parsed()) {
      va.samples = parse_count(verify_samples, "--samples");
      va.seed = seed_from_env(va.seed);
      return cmd_verify(va, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const MismatchError& e) {
    err << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const RouteDisagreement& e) {
    err << "route disagreement: " << e.what() << "\n";
    return kRoutes;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}

}  // namespace rcayley::cli

#endif  // RCAYLEY_TOOLS_CLI_APP_HPP
