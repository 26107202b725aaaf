#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torspec/spectra.hpp"

namespace torspec {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Skipped: return "Skipped";
  }
  return "?";
}

struct CaseResult {
  std::string label;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
};

struct VerificationReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Skipped;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;  // scope and coverage statements
  double elapsed_seconds = 0;

  void add(std::string label, std::string expected, std::string actual, bool ok) {
    cases.push_back({std::move(label), std::move(expected), std::move(actual), ok ? CheckStatus::Pass : CheckStatus::Fail});
  }
  void skip(std::string label, std::string reason) {
    cases.push_back({std::move(label), "", std::move(reason), CheckStatus::Skipped});
  }
  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.status == s; }));
  }
  void finish() {
    if (count(CheckStatus::Fail)) status = CheckStatus::Fail;
    else if (count(CheckStatus::Pass)) status = CheckStatus::Pass;
    else status = CheckStatus::Skipped;
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string format_weight_set(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end(), WeightLexLess{});
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + format_coords(ws[i]);
  return s + "}";
}

inline std::string describe(const Spectrum& sp) {
  const SpectrumClass c = classify(sp);
  return format_spectrum(sp) + " " + to_string(c.kind);
}

inline std::map<std::string, Int> rendered(const Spectrum& sp) {
  std::map<std::string, Int> out;
  for (const auto& [v, m] : sp.entries) out[format_value(sp, v)] += m;
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// level tables

/// Lambda_1, Lambda_2 and the radical part of Lambda_3 as tabulated for the
/// classical types (weights as 1-based fundamental-weight sums).
struct LevelTableRow {
  std::vector<Weight> level1;
  std::vector<Weight> level2;
  std::optional<std::vector<Weight>> radical_level3;
};

inline std::optional<LevelTableRow> expected_level_table(const RootDatum& d) {
  const std::size_t n = d.rank;
  auto w = [&](std::initializer_list<std::size_t> idx) {
    Weight x = d.zero();
    for (std::size_t i : idx) x[i - 1] += 1;
    return x;
  };
  LevelTableRow row;
  switch (d.family) {
    case Family::A:
      row.level1.push_back(d.zero());
      for (std::size_t i = 1; i <= n; ++i) row.level1.push_back(w({i}));
      row.level2 = {w({1, 1}), w({n, n}), w({1, n})};
      for (std::size_t i = 2; i + 1 <= n; ++i) {
        row.level2.push_back(w({1, i}));
        row.level2.push_back(w({i, n}));
      }
      break;
    case Family::B:
      if (n < 3) return std::nullopt;
      row.level1 = {d.zero(), w({n})};
      row.level2 = {w({1}), w({1, n})};
      row.radical_level3 = std::vector<Weight>{w({2})};
      break;
    case Family::C:
      row.level1 = {d.zero(), w({1})};
      if (n == 2) row.level2 = {w({2}), w({1, 2})};
      else row.level2 = {w({2}), w({3})};
      if (n <= 3) row.radical_level3 = std::vector<Weight>{w({1, 1})};
      else row.radical_level3 = std::vector<Weight>{w({1, 1}), w({4})};
      break;
    case Family::D:
      row.level1 = {d.zero(), w({1}), w({n - 1}), w({n})};
      if (n == 4) row.level2 = {w({2}), w({1, 3}), w({1, 4}), w({3, 4})};
      else row.level2 = {w({2}), w({3}), w({1, n - 1}), w({1, n})};
      break;
    default: return std::nullopt;
  }
  std::sort(row.level2.begin(), row.level2.end(), WeightLexLess{});
  row.level2.erase(std::unique(row.level2.begin(), row.level2.end()), row.level2.end());
  return row;
}

inline constexpr int kLevelTableHeightBound = 6;

inline VerificationReport verify_level_table(Family family, std::size_t rank) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.check_id = "level-table";
  if (!is_classical(family)) throw InvalidInput("level tables exist for families A-D only");
  const RootDatum& d = root_datum(family, rank);
  r.notes.push_back(d.name() + ": dominant weights with coordinate sum <= " + std::to_string(kLevelTableHeightBound));
  const auto row = expected_level_table(d);
  if (!row) {
    r.skip(d.name(), "no tabulated row for " + d.name());
    r.finish();
    r.elapsed_seconds = clock.seconds();
    return r;
  }
  if (family == Family::A && rank == 1)
    r.notes.push_back("A1: 3w1 has only w1 below it, so by definition it is level 2; the tabulated row lists 2w1 alone");
  std::map<int, std::vector<Weight>> by_level;
  for (const auto& la : level_sets(d, 3, kLevelTableHeightBound)) by_level[la.level].push_back(la.weight);
  auto cmp = [&](const std::string& label, const std::vector<Weight>& expected, const std::vector<Weight>& actual) {
    const std::string e = detail::format_weight_set(expected), a = detail::format_weight_set(actual);
    r.add(d.name() + " " + label, e, a, e == a);
  };
  cmp("level 1", row->level1, by_level[1]);
  cmp("level 2", row->level2, by_level[2]);
  if (row->radical_level3) {
    std::vector<Weight> radical;
    for (const Weight& x : by_level[3])
      if (is_radical(x)) radical.push_back(x);
    cmp("radical level 3", *row->radical_level3, radical);
  }
  r.finish();
  r.elapsed_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// witness elements

struct WitnessCase {
  std::string label;
  const RootDatum* datum;
  std::string epsilon;
  Weight highest;
  std::vector<std::pair<std::string, Int>> expected;
  SpectrumKind kind;
  std::optional<bool> regular;  // expected regularity, when stated
};

inline std::vector<WitnessCase> witness_cases() {
  const RootDatum& a2 = root_datum(Family::A, 2);
  const RootDatum& a3 = root_datum(Family::A, 3);
  const RootDatum& b3 = root_datum(Family::B, 3);
  const RootDatum& c2 = root_datum(Family::C, 2);
  const RootDatum& c3 = root_datum(Family::C, 3);
  const RootDatum& d4 = root_datum(Family::D, 4);
  using K = SpectrumKind;
  return {
      {"A3 diag(a,a,a^-1,a^-1) on V(w2)", &a3, "a,a,1/a,1/a", a3.omega(1), {{"a^2", 1}, {"1", 4}, {"a^-2", 1}}, K::AlmostSimple, false},
      {"A3 diag(a,a,-a^-1,-a^-1) on V(w2)", &a3, "a,a,-1/a,-1/a", a3.omega(1), {{"a^2", 1}, {"-1", 4}, {"a^-2", 1}}, K::AlmostSimple, false},
      {"A3 diag(a,a,a^-1,a^-1) on V(w1)", &a3, "a,a,1/a,1/a", a3.omega(0), {{"a", 2}, {"a^-1", 2}}, K::NotAlmostSimple, false},
      {"C2 eps=(a,a) on V(w2)", &c2, "a,a", c2.omega(1), {{"a^2", 1}, {"1", 3}, {"a^-2", 1}}, K::AlmostSimple, false},
      {"C2 eps=(1,-1) on V(w2)", &c2, "1,-1", c2.omega(1), {{"-1", 4}, {"1", 1}}, K::AlmostSimple, false},
      {"C2 eps=(1,a) on V(w1)", &c2, "1,a", c2.omega(0), {{"1", 2}, {"a", 1}, {"a^-1", 1}}, K::AlmostSimple, false},
      {"C2 eps=(-1,a) on V(w1)", &c2, "-1,a", c2.omega(0), {{"-1", 2}, {"a", 1}, {"a^-1", 1}}, K::AlmostSimple, false},
      {"C2 eps=(a,a) on V(w1)", &c2, "a,a", c2.omega(0), {{"a", 2}, {"a^-1", 2}}, K::NotAlmostSimple, false},
      {"A2 diag(a,a,a^-2) on V(w1+w2)", &a2, "a,a,1/a^2", a2.weight({1, 1}), {{"1", 4}, {"a^3", 2}, {"a^-3", 2}}, K::NotAlmostSimple, false},
      {"A2 diag(a,a,a^-2) on V(w1)", &a2, "a,a,1/a^2", a2.omega(0), {{"a", 2}, {"a^-2", 1}}, K::AlmostSimple, false},
      {"D4 eps=(a,a,a,a) on V(w4)", &d4, "a,a,a,a", d4.omega(3), {{"a^2", 1}, {"1", 6}, {"a^-2", 1}}, K::AlmostSimple, false},
      {"D4 eps=(a,a,a,a) on V(w1)", &d4, "a,a,a,a", d4.omega(0), {{"a", 4}, {"a^-1", 4}}, K::NotAlmostSimple, false},
      {"C3 eps=(a,b,c) on V(w1)", &c3, "a,b,c", c3.omega(0),
       {{"a", 1}, {"b", 1}, {"c", 1}, {"a^-1", 1}, {"b^-1", 1}, {"c^-1", 1}}, K::Simple, true},
      {"B3 eps=(-1,a,b) on V(w1)", &b3, "-1,a,b", b3.omega(0),
       {{"-1", 2}, {"1", 1}, {"a", 1}, {"a^-1", 1}, {"b", 1}, {"b^-1", 1}}, K::AlmostSimple, true},
      {"D4 eps=(1,-1,a,b) on V(w1)", &d4, "1,-1,a,b", d4.omega(0),
       {{"1", 2}, {"-1", 2}, {"a", 1}, {"a^-1", 1}, {"b", 1}, {"b^-1", 1}}, K::NotAlmostSimple, true},
  };
}

inline VerificationReport verify_witnesses() {
  detail::Stopwatch clock;
  VerificationReport r;
  r.check_id = "witnesses";
  r.notes.push_back("symbolic elements over Q/Z (+) Z^k; characteristic-0 multiplicities");
  for (const WitnessCase& w : witness_cases()) {
    const TorusElement s = parse_epsilon_shorthand(*w.datum, w.epsilon);
    const Spectrum sp = spectrum(s, w.highest);
    const SpectrumClass c = classify(sp);
    std::map<std::string, Int> expected;
    for (const auto& [v, m] : w.expected) expected[v] += m;
    const bool central = is_central(s);
    const bool regular = is_regular(s);
    std::string exp_text = "{";
    for (std::size_t i = 0; i < w.expected.size(); ++i)
      exp_text += (i ? ", " : "") + w.expected[i].first + ":" + std::to_string(w.expected[i].second);
    exp_text += std::string("} ") + to_string(w.kind) + ", non-central";
    std::string act_text = detail::describe(sp) + (central ? ", central" : ", non-central");
    if (w.regular) {
      exp_text += *w.regular ? ", regular" : ", non-regular";
      act_text += regular ? ", regular" : ", non-regular";
    }
    const bool ok = detail::rendered(sp) == expected && c.kind == w.kind && !central &&
                    (!w.regular || *w.regular == regular);
    r.add(w.label, exp_text, act_text, ok);
  }
  // fundamental-weight values of the second A3 element
  {
    const RootDatum& a3 = root_datum(Family::A, 3);
    const TorusElement s = parse_epsilon_shorthand(a3, "a,a,-1/a,-1/a");
    std::string act;
    for (std::size_t i = 0; i < 3; ++i) act += (i ? ", " : "") + format_value(s, s.assignments[i]);
    r.add("A3 diag(a,a,-a^-1,-a^-1) on w1, w2, w3", "a, a^2, -a", act, act == "a, a^2, -a");
  }
  r.finish();
  r.elapsed_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// almost-simple sweep over root-kernel strata

/// Dimensions of the modules on which a non-regular non-central element may
/// have almost simple spectrum (characteristic 0).
inline std::set<Int> permitted_dimensions(const RootDatum& d) {
  const Int n = static_cast<Int>(d.rank);
  switch (d.family) {
    case Family::A: return n == 3 ? std::set<Int>{4, 6} : std::set<Int>{n + 1};
    case Family::B: return n == 2 ? std::set<Int>{4, 5} : std::set<Int>{2 * n + 1};
    case Family::C: return n == 2 ? std::set<Int>{4, 5} : std::set<Int>{2 * n};
    case Family::D: return {2 * n};
    default: return {};
  }
}

/// Largest eigenvalue multiplicity allowed for an almost simple spectrum of
/// a non-regular element on a module of the given dimension.
inline Int multiplicity_cap(const RootDatum& d, Int dim) {
  const Int n = static_cast<Int>(d.rank);
  Int m = n;
  switch (d.family) {
    case Family::A:
      if (n == 3 && dim == 6) m = 4;
      break;
    case Family::B:
      if (n == 2 && dim == 5) m = 4;
      else if (n > 2 && dim == 2 * n + 1) m = 2 * n;
      break;
    case Family::C:
      if (dim == 2 * n) m = 2 * n - 2;
      else if (n == 2 && dim == 5) m = 4;
      break;
    case Family::D:
      if (dim == 2 * n) m = 2 * n - 2;
      break;
    default: break;
  }
  return std::max(m, n);
}

struct SweepOutcome {
  Weight highest;
  Int dim = 0;
  std::string element;
  std::string spectrum_text;
  SpectrumClass cls;
  bool multiplicity_free = false;
};

struct Sweep {
  const RootDatum* datum = nullptr;
  Int dim_bound = 0;
  int depth = 1;
  std::uint64_t seed = 0;
  std::vector<Weight> modules;
  std::vector<std::pair<Weight, std::string>> skipped_modules;
  StrataCatalog catalog;
  std::size_t elements = 0;
  std::size_t outcomes = 0;
  std::vector<SweepOutcome> hits;  // almost simple outcomes

  std::size_t hits_on(const Weight& w) const {
    return static_cast<std::size_t>(std::count_if(hits.begin(), hits.end(), [&](const SweepOutcome& o) { return o.highest == w; }));
  }
};

/// Classifies the spectrum of the generic element of every canonical
/// root-kernel stratum (with every torsion decoration) on every nontrivial
/// module of dimension at most dim_bound.
inline Sweep run_sweep(const RootDatum& d, Int dim_bound, int depth, std::uint64_t seed, const Limits& limits = {}) {
  if (depth < 1 || depth > 2) throw InvalidInput("stratum depth must be 1 or 2");
  Sweep sw;
  sw.datum = &d;
  sw.dim_bound = dim_bound;
  sw.depth = depth;
  sw.seed = seed;
  for (const Weight& w : dominant_weights_up_to_dimension(d, dim_bound))
    if (!w.is_zero()) sw.modules.push_back(w);
  std::vector<std::shared_ptr<const WeightMultiset>> mods;
  std::vector<Weight> kept;
  for (const Weight& w : sw.modules) {
    try {
      mods.push_back(cached_multiplicities(w, limits));
      kept.push_back(w);
    } catch (const ResourceLimit& e) {
      sw.skipped_modules.emplace_back(w, e.what());
    }
  }
  sw.modules = kept;
  sw.catalog = canonical_root_strata(d, depth);
  for (const StratumSpec& base : sw.catalog.strata)
    for (const auto& deco : torsion_decorations(base)) {
      StratumSpec spec = base;
      spec.torsion_choices = deco;
      const TorusElement s = generic_stratum_element(spec, seed);
      if (is_central(s) || is_regular(s)) continue;
      ++sw.elements;
      for (std::size_t m = 0; m < mods.size(); ++m) {
        const Spectrum sp = spectrum(s, *mods[m]);
        const SpectrumClass c = classify(sp);
        ++sw.outcomes;
        if (!is_almost_simple(c)) continue;
        sw.hits.push_back({sw.modules[m], mods[m]->dim, s.label, format_spectrum(sp), c,
                           mods[m]->nonzero_weights_multiplicity_free()});
      }
    }
  return sw;
}

inline std::string sweep_scope(const Sweep& sw) {
  std::ostringstream os;
  os << "characteristic-0 evidence, not a proof over all of T: generic elements of root-kernel strata of depth <= "
     << sw.depth << " with torsion decorations of order <= 4";
  return os.str();
}

inline std::string sweep_coverage(const Sweep& sw) {
  std::ostringstream os;
  os << sw.datum->name() << ": " << sw.modules.size() << " modules of dimension <= " << sw.dim_bound << ", "
     << sw.catalog.strata.size() << " stratum classes (" << sw.catalog.finite_classes
     << " finite classes not sampled), " << sw.elements << " elements, " << sw.outcomes << " spectra, "
     << sw.hits.size() << " almost simple";
  return os.str();
}

inline VerificationReport report_almost_simple_sweep(const Sweep& sw) {
  VerificationReport r;
  r.check_id = "c99";
  r.notes.push_back(sweep_scope(sw));
  r.notes.push_back(sweep_coverage(sw));
  const RootDatum& d = *sw.datum;
  const auto permitted = permitted_dimensions(d);
  for (const auto& [w, why] : sw.skipped_modules) r.skip("V" + format_coords(w), why);
  for (const Weight& w : sw.modules) {
    const Int dim = weyl_dimension_int(w);
    const bool allowed = permitted.count(dim) > 0;
    const std::size_t hits = sw.hits_on(w);
    const std::string label = d.name() + " V" + format_coords(w) + " dim " + std::to_string(dim);
    std::string actual = hits ? std::to_string(hits) + " almost simple outcome(s)" : "no almost simple outcome";
    if (hits)
      for (const auto& o : sw.hits)
        if (o.highest == w) {
          actual += ", e.g. " + o.element + " -> " + o.spectrum_text;
          break;
        }
    if (allowed && sw.elements == 0) {
      r.skip(label, "no non-regular non-central element with a free part at this depth");
      continue;
    }
    r.add(label, allowed ? "almost simple for some stratum" : "never almost simple", actual, allowed == (hits > 0));
  }
  if (d.family == Family::B && d.rank >= 3)
    r.skip(d.name() + " natural module in characteristic 2", "characteristic-p statement (p != 2 for B_n) not evaluated");
  if (d.family == Family::C)
    r.skip(d.name() + " V(w" + std::to_string(d.rank) + ") in characteristic 2",
           "characteristic-p exclusion for C_n, p = 2 not evaluated");
  if (d.family == Family::C && d.rank == 2)
    r.skip("C2 dim 5 in characteristic 2", "requires p != 2; not evaluated");
  std::size_t bad = 0;
  for (const auto& o : sw.hits)
    if (!o.multiplicity_free) ++bad;
  r.add(d.name() + " almost simple outcomes on modules with nonzero weights of multiplicity 1",
        "0 violations", std::to_string(bad) + " violations", bad == 0);
  r.finish();
  return r;
}

inline VerificationReport verify_almost_simple_sweep(const RootDatum& d, Int dim_bound, int depth, std::uint64_t seed) {
  detail::Stopwatch clock;
  VerificationReport r = report_almost_simple_sweep(run_sweep(d, dim_bound, depth, seed));
  r.elapsed_seconds = clock.seconds();
  return r;
}

inline VerificationReport report_multiplicity_bounds(const Sweep& sw) {
  VerificationReport r;
  r.check_id = "bounds";
  r.notes.push_back(sweep_scope(sw));
  r.notes.push_back(sweep_coverage(sw));
  const RootDatum& d = *sw.datum;
  for (const auto& o : sw.hits) {
    const Int cap = multiplicity_cap(d, o.dim);
    r.add(d.name() + " V" + format_coords(o.highest) + " " + o.element, "max multiplicity <= " + std::to_string(cap),
          "max multiplicity " + std::to_string(o.cls.max_multiplicity), o.cls.max_multiplicity <= cap);
  }
  Int best = 0;
  for (const auto& o : sw.hits) best = std::max(best, o.cls.max_multiplicity);
  r.notes.push_back("largest multiplicity among sweep outcomes: " + std::to_string(best));
  // explicit extremal elements
  struct Extremal {
    std::string eps;
    Weight highest;
  };
  std::vector<Extremal> extremal;
  const Int n = static_cast<Int>(d.rank);
  auto repeat = [&](const std::string& v, Int k) {
    std::string s;
    for (Int i = 0; i < k; ++i) s += v + ",";
    return s;
  };
  switch (d.family) {
    case Family::A:
      if (n == 3) extremal.push_back({"a,a,1/a,1/a", d.omega(1)});
      break;
    case Family::B:
      if (n >= 3) {
        extremal.push_back({repeat("-1", n - 1) + "b", d.omega(0)});
        extremal.push_back({repeat("1", n - 1) + "b", d.omega(0)});
      }
      break;
    case Family::C:
      extremal.push_back({repeat("1", n - 1) + "a", d.omega(0)});
      if (n == 2) extremal.push_back({"a,a", d.omega(1)});
      break;
    case Family::D: extremal.push_back({repeat("1", n - 1) + "a", d.omega(0)}); break;
    default: break;
  }
  for (const auto& x : extremal) {
    const TorusElement s = parse_epsilon_shorthand(d, x.eps);
    const Spectrum sp = spectrum(s, x.highest);
    const SpectrumClass c = classify(sp);
    const Int cap = multiplicity_cap(d, sp.total);
    const bool ok = !is_regular(s) && !is_central(s) && is_almost_simple(c) && c.max_multiplicity <= cap;
    r.add(d.name() + " eps=(" + x.eps + ") on V" + format_coords(x.highest),
          "non-regular, almost simple, max multiplicity <= " + std::to_string(cap),
          std::string(is_regular(s) ? "regular" : "non-regular") + ", " + detail::describe(sp) + ", max multiplicity " +
              std::to_string(c.max_multiplicity),
          ok);
  }
  r.finish();
  return r;
}

inline VerificationReport verify_multiplicity_bounds(const RootDatum& d, Int dim_bound, std::uint64_t seed, int depth = 1) {
  if (!is_classical(d.family) || d.rank > 6)
    throw InvalidInput("multiplicity bounds are checked for classical types of rank <= 6");
  detail::Stopwatch clock;
  VerificationReport r = report_multiplicity_bounds(run_sweep(d, dim_bound, depth, seed));
  r.elapsed_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// natural modules of classical groups

/// Random epsilon-values mixing fresh generators, repeats, inverses, signs
/// and +-1. For A_n the last value makes the product 1.
inline std::vector<ValueGroupElement> sample_epsilon_values(const RootDatum& d, std::mt19937_64& rng) {
  const std::size_t n = d.rank;
  const std::size_t free_rank = n + 1;
  std::vector<ValueGroupElement> eps;
  std::size_t fresh = 0;
  std::uniform_int_distribution<int> pick(0, 6);
  for (std::size_t k = 0; k < n; ++k) {
    ValueGroupElement v = ValueGroupElement::identity(free_rank);
    int choice = pick(rng);
    if (k == 0 && choice >= 3 && choice <= 5) choice = 0;
    const ValueGroupElement prev = k ? eps[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)] : v;
    switch (choice) {
      case 0: v.free[fresh++] = 1; break;
      case 1: break;
      case 2: v.torsion = Rational(1, 2); break;
      case 3: v = prev; break;
      case 4: v = -prev; break;
      case 5: v = prev + ValueGroupElement{Rational(1, 2), IntVector(free_rank, 0)}; break;
      default:
        v.free[fresh++] = 1;
        v.torsion = Rational(1, 2);
        break;
    }
    eps.push_back(v);
  }
  if (d.family == Family::A) {
    ValueGroupElement total = ValueGroupElement::identity(free_rank);
    for (const auto& v : eps) total += v;
    eps.push_back(-total);
  }
  return eps;
}

inline std::string format_epsilon(const std::vector<ValueGroupElement>& eps) {
  std::string s = "(";
  for (std::size_t i = 0; i < eps.size(); ++i) s += (i ? "," : "") + format_value(eps[i]);
  return s + ")";
}

inline VerificationReport verify_natural_module_regularity(Family family, std::size_t rank, std::size_t samples,
                                                           std::uint64_t seed) {
  if (!is_classical(family)) throw InvalidInput("natural-module checks exist for families A-D only");
  detail::Stopwatch clock;
  const RootDatum& d = root_datum(family, rank);
  VerificationReport r;
  r.check_id = "natural";
  std::mt19937_64 rng(seed);
  std::size_t central = 0, regular_count = 0, exception_count = 0, nas_count = 0;
  struct Item {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string first;
  };
  Item simple_item{"regular implies simple spectrum on V(w1)"};
  Item b_item{"regular iff mult(-1) <= 2 and other multiplicities 1"};
  Item d_item{"regular iff mult(1), mult(-1) <= 2 and other multiplicities 1"};
  Item d2_item{"not almost simple on V(w1) implies not almost simple on V(w2)"};
  Item as_item{"regular implies almost simple on V(w1), except D with 1 and -1 of multiplicity 2"};
  auto record = [](Item& it, bool ok, const std::string& what) {
    ++it.checked;
    if (!ok && it.violations++ == 0) it.first = what;
  };
  const Weight w1 = d.omega(0);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto eps = sample_epsilon_values(d, rng);
    const TorusElement s = element_from_epsilon(d, eps);
    if (is_central(s)) {
      ++central;
      continue;
    }
    const bool regular = is_regular(s);
    regular_count += regular;
    const Spectrum sp = spectrum(s, w1);
    const SpectrumClass c = classify(sp);
    const std::string what = "eps=" + format_epsilon(eps) + " -> " + detail::describe(sp);
    ValueGroupElement one = ValueGroupElement::identity(s.free_rank());
    ValueGroupElement minus = one;
    minus.torsion = Rational(1, 2);
    const Int m1 = sp.multiplicity(one), mm1 = sp.multiplicity(minus);
    bool others_one = true;
    for (const auto& [v, m] : sp.entries)
      if (!(v == one) && !(v == minus) && m != 1) others_one = false;
    nas_count += !is_almost_simple(c);
    if (family == Family::A || family == Family::C) {
      if (regular) record(simple_item, c.kind == SpectrumKind::Simple, what);
    }
    if (family == Family::B) record(b_item, regular == (mm1 <= 2 && m1 == 1 && others_one), what);
    if (family == Family::D) {
      record(d_item, regular == (m1 <= 2 && mm1 <= 2 && others_one), what);
      if (!is_almost_simple(c)) {
        const SpectrumClass c2 = classify(spectrum(s, d.omega(1)));
        record(d2_item, !is_almost_simple(c2), what + "; V(w2) " + to_string(c2.kind));
      }
    }
    if (regular) {
      const bool exception = family == Family::D && m1 == 2 && mm1 == 2;
      exception_count += exception;
      record(as_item, exception ? !is_almost_simple(c) : is_almost_simple(c), what);
    }
  }
  auto emit = [&](const Item& it) {
    r.add(d.name() + " " + it.name, "0 violations",
          std::to_string(it.violations) + " violations in " + std::to_string(it.checked) + " cases" +
              (it.violations ? "; first: " + it.first : ""),
          it.violations == 0);
  };
  if (family == Family::A || family == Family::C) emit(simple_item);
  if (family == Family::B) emit(b_item);
  if (family == Family::D) {
    emit(d_item);
    emit(d2_item);
  }
  emit(as_item);
  std::ostringstream cov;
  cov << d.name() << ": " << samples << " samples, " << central << " central skipped, " << regular_count
      << " regular, " << exception_count << " in the D exception, " << nas_count << " not almost simple on V(w1)";
  r.notes.push_back(cov.str());
  r.finish();
  r.elapsed_seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// batteries without a CLI check of their own

/// Weyl-dimension and weight-set agreement of the Freudenthal engine.
inline VerificationReport verify_multiplicity_engine(const RootDatum& d, Int dim_bound, std::vector<Weight> extra = {}) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.check_id = "multiplicity-engine";
  std::vector<Weight> ws = dominant_weights_up_to_dimension(d, dim_bound);
  for (const Weight& w : extra)
    if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
  std::size_t ok_count = 0;
  for (const Weight& w : ws) {
    const WeightMultiset ms = freudenthal_multiplicities(w);
    const BigInt dim = weyl_dimension(w);
    const auto premet = premet_weight_set(w);
    std::unordered_set<Weight, WeightHash> support;
    for (const auto& [mu, m] : ms.entries) support.insert(mu);
    const std::unordered_set<Weight, WeightHash> expected(premet.begin(), premet.end());
    const bool ok = BigInt(ms.dim) == dim && support == expected && ms.multiplicity(w) == 1 &&
                    expected.size() == premet.size();
    if (ok) {
      ++ok_count;
      continue;
    }
    r.add(d.name() + " V" + format_coords(w), "sum " + dim.str() + ", support = weight set (" + std::to_string(premet.size()) + ")",
          "sum " + std::to_string(ms.dim) + ", support " + std::to_string(support.size()), false);
  }
  r.add(d.name() + " modules of dimension <= " + std::to_string(dim_bound) + (extra.empty() ? "" : " and extra weights"),
        std::to_string(ws.size()) + " consistent", std::to_string(ok_count) + " consistent", ok_count == ws.size());
  r.finish();
  r.elapsed_seconds = clock.seconds();
  return r;
}

/// Random spectra over a small value pool, so that products collide often.
inline Spectrum random_small_spectrum(std::mt19937_64& rng, bool inversion_symmetric) {
  constexpr std::size_t kFree = 2;
  auto value = [&] {
    ValueGroupElement v = ValueGroupElement::identity(kFree);
    for (auto& x : v.free) x = std::uniform_int_distribution<Int>(-1, 1)(rng);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) v.torsion = Rational(1, 2);
    return v;
  };
  for (;;) {
    std::vector<std::pair<ValueGroupElement, Int>> vals;
    const int count = std::uniform_int_distribution<int>(2, 4)(rng);
    for (int i = 0; i < count; ++i) {
      const ValueGroupElement v = value();
      const Int m = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 2 : 1;
      vals.emplace_back(v, m);
      if (inversion_symmetric && !(v == -v)) vals.emplace_back(-v, m);
    }
    Spectrum sp = make_spectrum(std::move(vals));
    if (inversion_symmetric && !is_inversion_symmetric(sp)) continue;
    if (sp.entries.size() >= 2) return sp;
  }
}

/// Tensor-product spectrum claims: an almost simple Kronecker product of
/// non-scalar factors has simple factors, and with inversion-symmetric
/// factors its multiplicities are at most 2.
inline VerificationReport verify_kronecker_claims(std::size_t samples, std::uint64_t seed) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.check_id = "kronecker";
  std::mt19937_64 rng(seed);
  std::size_t as1 = 0, bad1 = 0, as2 = 0, bad2 = 0;
  std::string first1, first2;
  for (std::size_t i = 0; i < samples; ++i) {
    {
      const Spectrum a = random_small_spectrum(rng, false), b = random_small_spectrum(rng, false);
      const SpectrumClass c = classify(tensor_spectrum(a, b));
      if (is_almost_simple(c)) {
        ++as1;
        if (classify(a).kind != SpectrumKind::Simple || classify(b).kind != SpectrumKind::Simple)
          if (bad1++ == 0) first1 = format_spectrum(a) + " x " + format_spectrum(b);
      }
    }
    {
      const Spectrum a = random_small_spectrum(rng, true), b = random_small_spectrum(rng, true);
      const SpectrumClass c = classify(tensor_spectrum(a, b));
      if (is_almost_simple(c)) {
        ++as2;
        if (c.max_multiplicity > 2)
          if (bad2++ == 0) first2 = format_spectrum(a) + " x " + format_spectrum(b);
      }
    }
  }
  r.add("almost simple product has simple factors", "0 violations",
        std::to_string(bad1) + " violations in " + std::to_string(as1) + " almost simple products of " +
            std::to_string(samples) + (bad1 ? "; first: " + first1 : ""),
        bad1 == 0 && as1 > 0);
  r.add("inversion-symmetric factors give multiplicities <= 2", "0 violations",
        std::to_string(bad2) + " violations in " + std::to_string(as2) + " almost simple products of " +
            std::to_string(samples) + (bad2 ? "; first: " + first2 : ""),
        bad2 == 0 && as2 > 0);
  r.finish();
  r.elapsed_seconds = clock.seconds();
  return r;
}

/// A random element: either the generic element of a random root-kernel
/// stratum, or a random specialization with one or two generators and small
/// exponents (which is frequently non-regular).
inline TorusElement random_torus_element(const RootDatum& d, std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    StratumSpec spec{&d, {}, {}};
    const int k = std::uniform_int_distribution<int>(0, static_cast<int>(std::min<std::size_t>(2, d.rank - 1)))(rng);
    for (int i = 0; i < k; ++i)
      spec.kernel_weights.push_back(
          d.positive_roots[std::uniform_int_distribution<std::size_t>(0, d.positive_roots.size() - 1)(rng)]);
    try {
      return generic_stratum_element(spec, rng());
    } catch (const InvalidInput&) {
      // a full-rank kernel; fall through to a specialization
    }
  }
  const std::size_t gens = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  std::vector<ValueGroupElement> a;
  for (std::size_t i = 0; i < d.rank; ++i) {
    ValueGroupElement v = ValueGroupElement::identity(gens);
    for (auto& x : v.free) x = std::uniform_int_distribution<Int>(-2, 2)(rng);
    const int t = std::uniform_int_distribution<int>(0, 5)(rng);
    if (t == 1) v.torsion = Rational(1, 2);
    if (t == 2) v.torsion = Rational(1, 4);
    a.push_back(v);
  }
  return torus_element(d, a, "random");
}

/// Almost simple spectra of non-central elements occur only on modules whose
/// nonzero weights have multiplicity 1, and each such module has a regular
/// element with almost simple spectrum.
inline VerificationReport verify_multiplicity_one_property(const RootDatum& d, Int dim_bound, int depth,
                                                           std::size_t samples, std::uint64_t seed) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.check_id = "multiplicity-one";
  const Sweep sw = run_sweep(d, dim_bound, depth, seed);
  r.notes.push_back(sweep_coverage(sw));
  std::size_t bad = 0, as_count = sw.hits.size();
  std::string first;
  for (const auto& o : sw.hits)
    if (!o.multiplicity_free && bad++ == 0) first = "V" + format_coords(o.highest) + " " + o.element;
  std::mt19937_64 rng(seed);
  std::size_t nonregular = 0, considered = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const TorusElement s = random_torus_element(d, rng);
    if (is_central(s)) continue;
    ++considered;
    nonregular += !is_regular(s);
    for (const Weight& w : sw.modules) {
      const auto ms = cached_multiplicities(w);
      const SpectrumClass c = classify(spectrum(s, *ms));
      if (!is_almost_simple(c)) continue;
      ++as_count;
      if (!ms->nonzero_weights_multiplicity_free() && bad++ == 0) first = "V" + format_coords(w) + " " + s.label;
    }
  }
  r.add(d.name() + " almost simple only on modules with nonzero weights of multiplicity 1", "0 violations",
        std::to_string(bad) + " violations among " + std::to_string(as_count) + " almost simple spectra" +
            (bad ? "; first: " + first : ""),
        bad == 0);
  const TorusElement generic = generic_stratum_element(StratumSpec{&d, {}, {}}, seed);
  std::size_t mf = 0, missing = 0;
  std::string first_missing;
  for (const Weight& w : sw.modules) {
    const auto ms = cached_multiplicities(w);
    if (!ms->nonzero_weights_multiplicity_free()) continue;
    ++mf;
    if (!is_almost_simple(classify(spectrum(generic, *ms))) && missing++ == 0) first_missing = format_coords(w);
  }
  r.add(d.name() + " generic regular element almost simple on every such module",
        std::to_string(mf) + " modules", std::to_string(mf - missing) + " modules" +
            (missing ? "; first failure V" + first_missing : ""),
        missing == 0);
  r.notes.push_back(std::to_string(considered) + " sampled non-central elements, " + std::to_string(nonregular) +
                    " non-regular");
  r.finish();
  r.elapsed_seconds = clock.seconds();
  return r;
}

}  // namespace torspec
