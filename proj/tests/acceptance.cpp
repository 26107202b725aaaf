#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "torspec/torspec.hpp"

using namespace torspec;

namespace {

struct Group {
  Family family;
  std::size_t rank;
  Int bound;
};

const std::vector<Group> kSweepGroups{{Family::A, 2, 20}, {Family::A, 3, 40}, {Family::C, 2, 35},
                                      {Family::B, 3, 40}, {Family::G, 2, 30}, {Family::D, 4, 50}};
constexpr std::uint64_t kSeed = 1;

struct Tally {
  bool ok = true;
  std::vector<std::string> failures;

  void take(const VerificationReport& r, const std::string& scope) {
    if (r.status != CheckStatus::Fail) return;
    ok = false;
    for (const auto& c : r.cases)
      if (c.status == CheckStatus::Fail) failures.push_back(scope + ": " + c.label + " (expected " + c.expected + ", got " + c.actual + ")");
  }
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    failures.push_back(what);
  }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs <= budget_seconds, "runtime " + std::to_string(secs) + " s over budget " + std::to_string(budget_seconds) + " s");
  if (!t.ok) ++failed_criteria;
  std::printf("criterion %d: %s  %s  (%.3f s, budget %.0f s)\n", id, t.ok ? "PASS" : "FAIL", title.c_str(), secs, budget_seconds);
  for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
}

void info(const std::string& line) {
  std::printf("  info: %s\n", line.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "level tables A1-A5 B3-B5 C2-C5 D4-D6", 5, [](Tally& t) {
    for (std::size_t n = 1; n <= 5; ++n) t.take(verify_level_table(Family::A, n), "A" + std::to_string(n));
    for (std::size_t n = 3; n <= 5; ++n) t.take(verify_level_table(Family::B, n), "B" + std::to_string(n));
    for (std::size_t n = 2; n <= 5; ++n) t.take(verify_level_table(Family::C, n), "C" + std::to_string(n));
    for (std::size_t n = 4; n <= 6; ++n) t.take(verify_level_table(Family::D, n), "D" + std::to_string(n));
  });

  criterion(2, "witness spectra", 1, [](Tally& t) {
    const VerificationReport r = verify_witnesses();
    t.take(r, "witnesses");
    t.require(r.count(CheckStatus::Pass) >= 15, "fewer than 15 witness cases passed");
  });

  criterion(3, "almost-simple sweep at depth 1 matches the permitted list", 120, [](Tally& t) {
    for (const Group& g : kSweepGroups) {
      const RootDatum& d = root_datum(g.family, g.rank);
      t.take(verify_almost_simple_sweep(d, g.bound, 1, kSeed), d.name());
    }
  });
  for (const Group& g : kSweepGroups) {
    const RootDatum& d = root_datum(g.family, g.rank);
    const VerificationReport r = verify_almost_simple_sweep(d, g.bound, 2, kSeed);
    std::ostringstream s;
    s << "depth 2 sweep " << d.name() << " bound " << g.bound << ": " << to_string(r.status) << " ("
      << r.count(CheckStatus::Pass) << " cases passed, " << r.count(CheckStatus::Fail) << " failed)";
    info(s.str());
  }

  criterion(4, "simple or almost-simple spectra only on multiplicity-free modules", 120, [](Tally& t) {
    for (const Group& g : kSweepGroups) {
      const RootDatum& d = root_datum(g.family, g.rank);
      t.take(verify_multiplicity_one_property(d, g.bound, 1, 200, kSeed), d.name());
    }
  });

  criterion(5, "multiplicities sum to the Weyl dimension with Premet support", 180, [](Tally& t) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
      for (std::size_t n = 1; n <= 5; ++n) {
        if ((f == Family::B && n < 2) || (f == Family::C && n < 2) || (f == Family::D && n < 4)) continue;
        const RootDatum& d = root_datum(f, n);
        t.take(verify_multiplicity_engine(d, 2000), d.name());
      }
    for (const auto& [f, n] : std::vector<std::pair<Family, std::size_t>>{{Family::G, 2}, {Family::F, 4}}) {
      const RootDatum& d = root_datum(f, n);
      std::vector<Weight> fundamentals;
      for (std::size_t i = 0; i < n; ++i) fundamentals.push_back(d.omega(i));
      t.take(verify_multiplicity_engine(d, 1, fundamentals), d.name());
    }
  });

  criterion(6, "tensor product claims on 1000 random spectrum pairs", 5, [](Tally& t) {
    t.take(verify_kronecker_claims(1000, kSeed), "pairs");
  });

  criterion(7, "natural module biconditionals, 500 samples per group", 30, [](Tally& t) {
    std::size_t exception_hits = 0;
    auto run = [&](Family f, std::size_t n) {
      const VerificationReport r = verify_natural_module_regularity(f, n, 500, kSeed);
      t.take(r, root_datum(f, n).name());
      for (const auto& note : r.notes) {
        const auto at = note.find(" in the D exception");
        if (at == std::string::npos) continue;
        const auto from = note.rfind(", ", at) + 2;
        exception_hits += std::stoul(note.substr(from, at - from));
      }
    };
    for (std::size_t n = 3; n <= 5; ++n) run(Family::B, n);
    for (std::size_t n = 2; n <= 5; ++n) run(Family::C, n);
    for (std::size_t n = 4; n <= 6; ++n) run(Family::D, n);
    t.require(exception_hits > 0, "the D exception case was never sampled");
  });

  criterion(8, "multiplicity caps on the sweep, A3 cap 4 attained", 120, [](Tally& t) {
    Int largest_a3 = 0;
    for (const Group& g : kSweepGroups) {
      const RootDatum& d = root_datum(g.family, g.rank);
      if (d.family == Family::G) continue;
      const Sweep sw = run_sweep(d, g.bound, 1, kSeed);
      const VerificationReport r = report_multiplicity_bounds(sw);
      t.take(r, d.name());
      if (d.family == Family::A && d.rank == 3) {
        for (const auto& h : sw.hits)
          if (h.dim == 6) largest_a3 = std::max(largest_a3, h.cls.max_multiplicity);
        bool attained = false;
        for (const auto& c : r.cases)
          if (c.label.find("a,a,1/a,1/a") != std::string::npos && c.status == CheckStatus::Pass &&
              c.actual.find("max multiplicity 4") != std::string::npos)
            attained = true;
        t.require(attained, "A3 omega2 witness did not attain multiplicity 4");
      }
    }
    info("largest multiplicity on A3 omega2 among depth-1 sweep hits: " + std::to_string(largest_a3));
  });

  std::printf("%d criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
