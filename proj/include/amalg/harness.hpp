#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "finite_action.hpp"
#include "format.hpp"
#include "fourier.hpp"
#include "parse.hpp"
#include "sampling.hpp"
#include "tail.hpp"
#include "witness.hpp"

namespace amalg {

using ordered_json = nlohmann::ordered_json;

/// Run configuration. Unset optional fields fall back to per-suite defaults.
struct Config
{
  PrimeSeq primes;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::size_t size_guard = kDefaultSizeGuard;
  std::optional<unsigned> radius;
  std::optional<unsigned> level;
  std::optional<std::size_t> samples;

  void validate() const
  {
    if (!(tolerance > 0))
      throw Error(Errc::invalid_config, "tolerance must be positive");
    if (size_guard == 0)
      throw Error(Errc::invalid_config, "size guard must be positive");
    if (samples && *samples == 0)
      throw Error(Errc::invalid_config, "samples must be positive");
  }

  ordered_json to_json() const
  {
    ordered_json j;
    j["primes"] = std::vector<std::uint64_t>(primes.values().begin(), primes.values().end());
    j["seed"] = seed;
    j["tolerance"] = tolerance;
    j["size_guard"] = size_guard;
    j["radius"] = radius ? ordered_json(*radius) : ordered_json();
    j["level"] = level ? ordered_json(*level) : ordered_json();
    j["samples"] = samples ? ordered_json(*samples) : ordered_json();
    return j;
  }
};

enum class Outcome { pass, fail, skipped };

inline const char* to_string(Outcome o)
{
  switch (o) {
  case Outcome::pass: return "pass";
  case Outcome::fail: return "fail";
  case Outcome::skipped: return "skipped";
  }
  return "?";
}

struct CheckRecord
{
  std::string name;
  ordered_json parameters = ordered_json::object();
  Outcome outcome = Outcome::pass;
  ordered_json result = ordered_json::object();
  std::string reason;
  double seconds = 0;

  ordered_json to_json() const
  {
    ordered_json j;
    j["name"] = name;
    j["parameters"] = parameters;
    j["outcome"] = to_string(outcome);
    j["result"] = result;
    if (!reason.empty())
      j["reason"] = reason;
    j["seconds"] = seconds;
    return j;
  }
};

struct Report
{
  std::string suite;
  Config config;
  std::vector<CheckRecord> checks;
  double seconds = 0;

  std::size_t count(Outcome o) const
  {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.outcome == o; }));
  }

  bool passed() const { return count(Outcome::fail) == 0; }

  ordered_json to_json() const
  {
    ordered_json j;
    j["suite"] = suite;
    j["config"] = config.to_json();
    j["summary"] = {{"pass", count(Outcome::pass)},
                    {"fail", count(Outcome::fail)},
                    {"skipped", count(Outcome::skipped)},
                    {"outcome", passed() ? "pass" : "fail"}};
    j["checks"] = ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back(c.to_json());
    j["seconds"] = seconds;
    return j;
  }
};

inline const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"group", "icc", "orbits", "fourier", "xi", "disjoint", "bound"};
  return names;
}

namespace detail {

inline std::string str(const Rational& r) { return r.str(); }

/// Thrown inside a check body to report it as skipped.
struct Skip
{
  std::string reason;
};

inline double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Runs `body` on a fresh record. Size-guard errors and unconfigured indices
/// mark the check skipped; any other library error fails it.
template <class Body>
CheckRecord run_check(std::string name, ordered_json parameters, Body body)
{
  CheckRecord rec;
  rec.name = std::move(name);
  rec.parameters = std::move(parameters);
  auto start = std::chrono::steady_clock::now();
  try {
    bool ok = body(rec);
    rec.outcome = ok ? Outcome::pass : Outcome::fail;
  } catch (const Error& e) {
    bool skip = e.code() == Errc::size_guard || e.code() == Errc::index_out_of_range;
    rec.outcome = skip ? Outcome::skipped : Outcome::fail;
    rec.reason = std::string(amalg::to_string(e.code())) + ": " + e.what();
  } catch (const Skip& s) {
    rec.outcome = Outcome::skipped;
    rec.reason = s.reason;
  }
  rec.seconds = seconds_since(start);
  return rec;
}

/// Independent stream per check, so suites do not depend on each other.
inline WordSampler sampler(const Tower& tower, const Config& cfg, std::uint64_t stream)
{
  return WordSampler(tower, cfg.seed * 0x9E3779B97F4A7C15ull + stream);
}

inline std::vector<unsigned> levels_or(const Config& cfg, std::vector<unsigned> fallback)
{
  return cfg.level ? std::vector<unsigned>{*cfg.level} : fallback;
}

inline std::size_t max_index(const Config& cfg, std::size_t cap)
{
  return std::min(cfg.primes.size() - 1, cap);
}

// ---- group ----

inline std::vector<CheckRecord> suite_group(const Config& cfg)
{
  Tower tower(cfg.primes);
  std::vector<CheckRecord> out;
  unsigned top = cfg.level.value_or(3);
  std::size_t idx = max_index(cfg, 2);

  std::size_t n = cfg.samples.value_or(10000);
  out.push_back(run_check("group_axioms",
                          {{"samples", n}, {"max_syllables", 8}, {"max_level", top}, {"max_index", idx}},
                          [&](CheckRecord& rec) {
    auto gen = sampler(tower, cfg, 1);
    std::size_t failures = 0;
    ordered_json witness;
    for (std::size_t i = 0; i < n; ++i) {
      auto a = gen.word(8, top, idx);
      auto b = gen.word(8, top, idx);
      auto c = gen.word(8, top, idx);
      auto e = tower.identity();
      bool ok = tower.mul(tower.mul(a, b), c) == tower.mul(a, tower.mul(b, c)) &&
                tower.mul(a, tower.inv(a)).is_identity() && tower.mul(tower.inv(a), a).is_identity() &&
                tower.mul(a, e) == a && tower.mul(e, a) == a;
      if (!ok && failures++ == 0)
        witness = {format(a), format(b), format(c)};
    }
    rec.result = {{"failures", failures}, {"counterexample", witness}};
    return failures == 0;
  }));

  std::size_t m = cfg.samples ? std::max<std::size_t>(*cfg.samples / 10, 1) : 1000;
  out.push_back(run_check("amalgam_soundness", {{"samples", m}, {"levels", {1, 2, 3}}, {"max_stable_letters", 3}},
                          [&](CheckRecord& rec) {
    auto gen = sampler(tower, cfg, 2);
    std::size_t failures = 0;
    ordered_json witness;
    for (std::size_t i = 0; i < m; ++i) {
      unsigned level = static_cast<unsigned>(i % 3) + 1;
      auto w = tower.reduce(gen.reduced_alternating(level, 3, idx));
      if (tower.eq(w, tower.identity()) && failures++ == 0)
        witness = format(w);
    }
    rec.result = {{"identity_hits", failures}, {"counterexample", witness}};
    return failures == 0;
  }));
  return out;
}

// ---- icc ----

struct GrowthCase
{
  const char* cls;
  const char* text;
};

inline const std::vector<GrowthCase>& growth_cases()
{
  static const std::vector<GrowthCase> cases{
      {"G0-K", "L[1,1,0;0,1,0;0,0,1]"},
      {"G0-K", "L[0,-1,0;1,0,0;0,0,1]"},
      {"G0-K", "h(0;1,0,0) * L[1,0,0;1,1,0;0,0,1]"},
      {"K-e", "h(0;1,0,0)"},
      {"K-e", "h(1;0,1,2)"},
      {"K-e", "h(0;1,1,1) * h(1;1,0,0)"},
      {"G1-G0", "t(1)"},
      {"G1-G0", "t(1)^2 * h(0;1,0,0)"},
      {"G1-G0", "L[1,1,0;0,1,0;0,0,1] * t(1)^-1"},
      {"G2-G1", "t(2)"},
      {"G2-G1", "t(2) * t(1)"},
      {"G2-G1", "h(0;0,0,1) * t(2)^-1 * L[1,0,0;0,1,0;0,1,1]"},
  };
  return cases;
}

inline bool in_class(const Tower& tower, const Word& g, std::string_view cls)
{
  bool in_k = tower.member(g, Subgroup::k());
  if (cls == "K-e")
    return in_k && !g.is_identity();
  if (cls == "G0-K")
    return tower.member(g, Subgroup::g_level(0)) && !in_k;
  if (cls == "G1-G0")
    return tower.member(g, Subgroup::g_level(1)) && !tower.member(g, Subgroup::g_level(0));
  return tower.member(g, Subgroup::g_level(2)) && !tower.member(g, Subgroup::g_level(1));
}

inline std::vector<CheckRecord> suite_icc(const Config& cfg)
{
  Tower tower(cfg.primes);
  unsigned radius = cfg.radius.value_or(3);
  std::vector<CheckRecord> out;
  for (const auto& c : growth_cases()) {
    out.push_back(run_check("conjugate_growth", {{"element", c.text}, {"class", c.cls}, {"radius", radius}},
                            [&](CheckRecord& rec) {
      auto g = parse_element(tower, c.text);
      bool cls_ok = in_class(tower, g, c.cls);
      std::vector<std::size_t> counts;
      for (unsigned r = 1; r <= radius; ++r)
        counts.push_back(tower.conjugate_growth(g, r));
      bool monotone = std::is_sorted(counts.begin(), counts.end());
      rec.result = {{"counts", counts}, {"class_ok", cls_ok}, {"nondecreasing", monotone}, {"required", 5}};
      return cls_ok && monotone && counts.back() >= 5;
    }));
  }
  return out;
}

// ---- orbits ----

inline std::vector<CheckRecord> suite_orbits(const Config& cfg)
{
  std::vector<CheckRecord> out;
  for (std::size_t k = 1; k <= std::min<std::size_t>(cfg.primes.size(), 3); ++k) {
    std::vector<std::size_t> idx(k);
    std::vector<std::uint64_t> ps(k);
    for (std::size_t i = 0; i < k; ++i) {
      idx[i] = i;
      ps[i] = cfg.primes.at(i);
    }
    ordered_json params = {{"indices", idx}, {"primes", ps}, {"generators", "E_ij(+-1), i != j"}};
    std::size_t expected = std::size_t{1} << k;

    out.push_back(run_check("diagonal_orbits", params, [&](CheckRecord& rec) {
      auto o = diagonal_orbits(cfg.primes, idx, cfg.size_guard);
      // Expected sizes: one block per zero pattern, prod over nonzero factors of (p^3 - 1).
      std::vector<std::size_t> want;
      for (std::size_t mask = 0; mask < expected; ++mask) {
        std::size_t s = 1;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (std::size_t{1} << i))
            s *= ps[i] * ps[i] * ps[i] - 1;
        want.push_back(s);
      }
      auto got = o.sizes();
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      bool zero_pattern = o.matches_zero_pattern_classification();
      rec.result = {{"blocks", o.blocks.size()}, {"block_sizes", o.sizes()}, {"points", o.domain.size()},
                    {"zero_pattern_classification", zero_pattern}};
      return o.blocks.size() == expected && zero_pattern && got == want;
    }));

    out.push_back(run_check("fixed_point_dimension", params, [&](CheckRecord& rec) {
      auto dim = fixed_point_dimension(cfg.primes, idx, cfg.size_guard);
      rec.result = {{"dimension", dim}, {"expected", expected}};
      return dim == expected;
    }));
  }
  return out;
}

// ---- fourier ----

inline std::vector<CheckRecord> suite_fourier(const Config& cfg)
{
  Tower tower(cfg.primes);
  std::vector<CheckRecord> out;
  auto count = std::min<std::size_t>(cfg.primes.size(), 4);
  for (std::size_t n = 0; n < count; ++n) {
    auto p = cfg.primes.at(n);
    out.push_back(run_check("intertwiner", {{"index", n}, {"prime", p}, {"generators", 12}, {"tolerance", cfg.tolerance}},
                            [&](CheckRecord& rec) {
      double worst = 0;
      for (const auto& g : elementary_generators())
        worst = std::max(worst, check_intertwiner(tower, g, n));
      rec.result = {{"max_deviation", worst}};
      return worst <= cfg.tolerance;
    }));
  }
  for (std::size_t n = 0; n < count; ++n) {
    auto p = cfg.primes.at(n);
    out.push_back(run_check("round_trip_plancherel", {{"index", n}, {"prime", p}, {"functions", 3}, {"tolerance", cfg.tolerance}},
                            [&](CheckRecord& rec) {
      auto gen = sampler(tower, cfg, 10 + n);
      double worst = 0;
      for (int i = 0; i < 3; ++i) {
        FiniteFunction f(ProductDomain(cfg.primes, {n}, cfg.size_guard));
        for (auto& v : f.values)
          v = {2 * gen.unit() - 1, 2 * gen.unit() - 1};
        auto a = fourier(tower, f);
        auto back = inverse_fourier(tower, a, n);
        for (std::size_t x = 0; x < f.values.size(); ++x)
          worst = std::max(worst, std::abs(back.values[x] - f.values[x]));
        worst = std::max(worst, std::abs(a.trace() - f.trace()));
        worst = std::max(worst, std::abs(a.norm_squared() - f.norm_squared()));
      }
      rec.result = {{"max_deviation", worst}};
      return worst <= cfg.tolerance;
    }));
  }
  for (std::size_t n = 0; n < count; ++n) {
    auto p = cfg.primes.at(n);
    out.push_back(run_check("projection_identities", {{"index", n}, {"prime", p}}, [&](CheckRecord& rec) {
      auto e = projection_en(tower, n);
      bool idempotent = convolve(tower, e, e) == e;
      bool self_adjoint = adjoint(tower, e) == e;
      Rational want = inverse_cube(p);
      rec.result = {{"trace", str(e.trace())}, {"expected_trace", str(want)}, {"support", e.support_size()},
                    {"idempotent", idempotent}, {"self_adjoint", self_adjoint}};
      return idempotent && self_adjoint && e.trace() == want;
    }));
  }
  return out;
}

// ---- xi ----

inline std::vector<CheckRecord> suite_xi(const Config& cfg)
{
  Tower tower(cfg.primes);
  unsigned radius = cfg.radius.value_or(4);
  std::vector<CheckRecord> out;
  for (unsigned level : levels_or(cfg, {0, 1, 2})) {
    std::optional<std::vector<Word>> ball;
    for (std::size_t n = level + 1; n <= level + 2; ++n) {
      ordered_json params = {{"level", level}, {"n", n}};
      out.push_back(run_check("xi_trace", params, [&](CheckRecord& rec) {
        auto x = xi(tower, n);
        auto got = x.inner_delta_squared(tower.identity());
        Rational want = inverse_cube(tower.primes().at(n));
        rec.result = {{"inner_e_squared", str(got)}, {"expected", str(want)}, {"norm_squared", str(x.norm_squared())}};
        return got == want && x.norm_squared() == 1;
      }));
      params["radius"] = radius;
      out.push_back(run_check("xi_invariance", params, [&](CheckRecord& rec) {
        auto body = xi(tower, n).body;
        if (!ball)
          ball = tower.ball(tower.alphabet(level), radius);
        AdjointFixedTest<Rational> fixes(tower, body);
        std::size_t violations = 0;
        ordered_json witness;
        for (const auto& g : *ball)
          if (!fixes(g) && violations++ == 0)
            witness = format(g);
        rec.result = {{"ball_size", ball->size()}, {"violations", violations}, {"first_violation", witness}};
        return violations == 0;
      }));
    }
  }
  return out;
}

// ---- disjoint ----

inline std::vector<CheckRecord> suite_disjoint(const Config& cfg)
{
  Tower tower(cfg.primes);
  std::size_t samples = cfg.samples.value_or(1000);
  std::vector<CheckRecord> out;
  for (unsigned level : levels_or(cfg, {1, 2, 3})) {
    std::size_t hi = max_index(cfg, level + 2);
    out.push_back(run_check("conjugate_leaves_k", {{"level", level}, {"stable_letter", level + 1}, {"samples", samples}},
                            [&](CheckRecord& rec) {
      if (level == 0)
        throw Skip{"K minus K_0 is empty"};
      if (level >= cfg.primes.size())
        throw Error(Errc::index_out_of_range, "K_N needs index N configured");
      auto gen = sampler(tower, cfg, 100 + level);
      auto t = tower.stable(level + 1);
      std::size_t wrong = 0;
      ordered_json witness;
      for (std::size_t i = 0; i < samples; ++i) {
        // k outside K_N: force a nonzero component below N.
        auto low = KVector(gen.nonzero_hn(gen.uniform(0, level - 1)));
        auto k = KVector::add(cfg.primes, gen.kvec(0, hi), low);
        if (k.supported_from(level))
          k = low;
        auto w = tower.k(k);
        if (tower.member(tower.conj(w, t), Subgroup::k()) && wrong++ == 0)
          witness = format(w);
      }
      rec.result = {{"in_k", wrong}, {"counterexample", witness}};
      return wrong == 0;
    }));
    out.push_back(run_check("conjugate_stays_in_k", {{"level", level}, {"stable_letter", level + 1}, {"samples", samples}},
                            [&](CheckRecord& rec) {
      if (level >= cfg.primes.size())
        throw Error(Errc::index_out_of_range, "K_N needs index N configured");
      auto gen = sampler(tower, cfg, 200 + level);
      auto t = tower.stable(level + 1);
      std::size_t wrong = 0;
      ordered_json witness;
      for (std::size_t i = 0; i < samples; ++i) {
        auto w = tower.k(gen.kvec(level, max_index(cfg, level + 3)));
        if (!tower.member(tower.conj(w, t), Subgroup::k()) && wrong++ == 0)
          witness = format(w);
      }
      rec.result = {{"outside_k", wrong}, {"counterexample", witness}};
      return wrong == 0;
    }));
  }

  std::size_t ys = cfg.samples ? std::max<std::size_t>(*cfg.samples / 2, 1) : 500;
  for (unsigned level : levels_or(cfg, {1, 2})) {
    out.push_back(run_check("orthogonality_inequality", {{"level", level}, {"samples", ys}, {"max_terms", 6}},
                            [&](CheckRecord& rec) {
      auto gen = sampler(tower, cfg, 300 + level);
      std::size_t failures = 0, not_disjoint = 0, nontrivial = 0;
      ordered_json witness;
      for (std::size_t i = 0; i < ys; ++i) {
        L2Vector<Rational> y;
        auto terms = gen.uniform(1, 6);
        for (std::size_t j = 0; j < terms; ++j) {
          long num = static_cast<long>(gen.uniform(1, 9)) - 5;
          long den = static_cast<long>(gen.uniform(1, 3));
          y.add_term(tower.k(gen.kvec(0, max_index(cfg, level + 2))), Rational(num, den));
        }
        auto r = orthogonality_inequality_check(tower, y, level);
        if (r.rhs_squared > 0)
          ++nontrivial;
        if (!r.summands_disjoint)
          ++not_disjoint;
        if (!r.pass && failures++ == 0)
          witness = {{"lhs_squared", str(r.lhs_squared)}, {"rhs_squared", str(r.rhs_squared)}};
      }
      rec.result = {{"failures", failures}, {"summands_overlap", not_disjoint}, {"nontrivial", nontrivial},
                    {"counterexample", witness}};
      return failures == 0 && not_disjoint == 0;
    }));
  }
  return out;
}

// ---- bound ----

inline std::vector<CheckRecord> suite_bound(const Config& cfg)
{
  std::vector<CheckRecord> out;
  const auto& ps = cfg.primes;
  out.push_back(run_check("tail_trace", {{"first", {0, 1, 2}}, {"span", 5}}, [&](CheckRecord& rec) {
    rec.result = ordered_json::array();
    bool ok = true;
    for (std::size_t first = 0; first < std::min<std::size_t>(ps.size(), 3); ++first)
      for (std::size_t last = first; last < std::min(ps.size(), first + 5); ++last) {
        auto t = tail_trace(ps, first, last);
        // Independent: numerator prod (p^3 - 1) over denominator prod p^3.
        Int num = 1, den = 1;
        for (std::size_t n = first; n <= last; ++n) {
          Int cube = Int(ps.at(n)) * ps.at(n) * ps.at(n);
          num *= cube - 1;
          den *= cube;
        }
        bool match = t.partial_product == Rational(num, den);
        ok = ok && match && t.remainder_bound > 0;
        rec.result.push_back({{"first", first}, {"last", last}, {"partial_product", str(t.partial_product)},
                              {"remainder_bound", str(t.remainder_bound)},
                              {"epsilon", static_cast<double>(t.epsilon())}, {"match", match}});
      }
    return ok;
  }));

  out.push_back(run_check("deviation_extreme_points", {{"first", 0}, {"last", 2}, {"patterns", 256}},
                          [&](CheckRecord& rec) {
    if (ps.size() < 3)
      throw Error(Errc::index_out_of_range, "three configured primes required");
    std::size_t failures = 0;
    double worst = 0, bound = 0;
    for (unsigned signs = 0; signs < 256; ++signs) {
      std::vector<Rational> a(8);
      for (unsigned i = 0; i < 8; ++i)
        a[i] = (signs >> i) & 1 ? 1 : -1;
      auto r = deviation_bound_check(ps, 0, 2, a);
      worst = std::max(worst, r.lhs);
      bound = r.bound;
      failures += !r.pass;
    }
    rec.result = {{"failures", failures}, {"max_lhs", worst}, {"bound", bound}};
    return failures == 0;
  }));

  std::size_t samples = cfg.samples.value_or(1000);
  out.push_back(run_check("deviation_random", {{"first", 0}, {"last", 2}, {"samples", samples}},
                          [&](CheckRecord& rec) {
    if (ps.size() < 3)
      throw Error(Errc::index_out_of_range, "three configured primes required");
    Tower tower(ps);
    auto gen = sampler(tower, cfg, 400);
    std::size_t failures = 0;
    double worst = 0, bound = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      std::vector<Complex> a(8);
      for (auto& v : a)
        v = std::polar(gen.unit(), 2 * std::numbers::pi * gen.unit());
      auto r = deviation_bound_check(ps, 0, 2, a);
      worst = std::max(worst, r.lhs);
      bound = r.bound;
      failures += !r.pass;
    }
    rec.result = {{"failures", failures}, {"max_lhs", worst}, {"bound", bound}};
    return failures == 0;
  }));
  return out;
}

} // namespace detail

/// Runs one named suite. Throws Errc::invalid_config for unknown names.
inline Report run_suite(const std::string& name, const Config& cfg)
{
  cfg.validate();
  Report report{name, cfg, {}, 0};
  auto start = std::chrono::steady_clock::now();
  if (name == "group")
    report.checks = detail::suite_group(cfg);
  else if (name == "icc")
    report.checks = detail::suite_icc(cfg);
  else if (name == "orbits")
    report.checks = detail::suite_orbits(cfg);
  else if (name == "fourier")
    report.checks = detail::suite_fourier(cfg);
  else if (name == "xi")
    report.checks = detail::suite_xi(cfg);
  else if (name == "disjoint")
    report.checks = detail::suite_disjoint(cfg);
  else if (name == "bound")
    report.checks = detail::suite_bound(cfg);
  else
    throw Error(Errc::invalid_config, "unknown suite '" + name + "'");
  report.seconds = detail::seconds_since(start);
  return report;
}

/// Every suite in order; `all` is the concatenation.
inline std::vector<Report> run_all(const Config& cfg)
{
  std::vector<Report> out;
  for (const auto& name : suite_names())
    out.push_back(run_suite(name, cfg));
  return out;
}

/// Drops timing fields so reports from repeated runs compare equal.
inline ordered_json without_timing(ordered_json j)
{
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items())
      v = without_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j)
      v = without_timing(v);
  }
  return j;
}

} // namespace amalg
