#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torspec/mult.hpp"
#include "torspec/torus.hpp"

namespace torspec {

/// Eigenvalues of a torus element on a module, with multiplicities, in the
/// canonical value order.
struct Spectrum {
  std::vector<std::pair<ValueGroupElement, Int>> entries;
  std::string source_label;
  std::optional<Weight> highest;
  Int total = 0;
  // presentation of free generators, inherited from the element
  std::vector<std::string> generator_names;
  Int free_denominator = 1;

  Int multiplicity(const ValueGroupElement& v) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), v,
                               [](const auto& e, const ValueGroupElement& x) { return e.first < x; });
    return it != entries.end() && it->first == v ? it->second : 0;
  }
};

enum class SpectrumKind { Simple, AlmostSimple, NotAlmostSimple };

inline const char* to_string(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::Simple: return "Simple";
    case SpectrumKind::AlmostSimple: return "AlmostSimple";
    case SpectrumKind::NotAlmostSimple: return "NotAlmostSimple";
  }
  return "?";
}

struct SpectrumClass {
  SpectrumKind kind = SpectrumKind::Simple;
  std::optional<ValueGroupElement> heavy_value;
  Int max_multiplicity = 0;
};

/// Simple spectra count as almost simple.
inline bool is_almost_simple(const SpectrumClass& c) { return c.kind != SpectrumKind::NotAlmostSimple; }

/// Builds a spectrum from arbitrary (value, multiplicity) pairs, merging
/// equal values and dropping zero multiplicities.
inline Spectrum make_spectrum(std::vector<std::pair<ValueGroupElement, Int>> values, std::string label = {}) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Spectrum sp;
  sp.source_label = std::move(label);
  for (auto& [v, m] : values) {
    if (m < 0) throw InvalidInput("negative multiplicity in spectrum");
    if (m == 0) continue;
    if (!sp.entries.empty() && sp.entries.back().first == v) sp.entries.back().second = checked_add(sp.entries.back().second, m);
    else sp.entries.emplace_back(std::move(v), m);
    sp.total = checked_add(sp.total, m);
  }
  return sp;
}

/// Groups the weights of a module by their value at s.
inline Spectrum spectrum(const TorusElement& s, const WeightMultiset& module) {
  s.datum->require(module.highest);
  std::unordered_map<ValueGroupElement, Int, ValueHash> fibers;
  for (const auto& [w, m] : module.entries) fibers[evaluate(s, w)] += m;
  Spectrum sp = make_spectrum({fibers.begin(), fibers.end()}, s.label);
  sp.highest = module.highest;
  sp.generator_names = s.generator_names;
  sp.free_denominator = s.free_denominator;
  return sp;
}

inline Spectrum spectrum(const TorusElement& s, const Weight& lambda, const Limits& limits = {}) {
  s.datum->require(lambda);
  return spectrum(s, *cached_multiplicities(lambda, limits));
}

inline SpectrumClass classify(const Spectrum& sp) {
  SpectrumClass c;
  std::size_t heavy = 0;
  for (const auto& [v, m] : sp.entries) {
    if (m > c.max_multiplicity) c.max_multiplicity = m;
    if (m > 1) {
      ++heavy;
      c.heavy_value = v;
    }
  }
  if (heavy == 0) c.kind = SpectrumKind::Simple;
  else if (heavy == 1) c.kind = SpectrumKind::AlmostSimple;
  else {
    c.kind = SpectrumKind::NotAlmostSimple;
    c.heavy_value.reset();
  }
  return c;
}

/// Spectrum of the Kronecker product: multiplicities convolve.
inline Spectrum tensor_spectrum(const Spectrum& a, const Spectrum& b) {
  std::vector<std::pair<ValueGroupElement, Int>> values;
  values.reserve(a.entries.size() * b.entries.size());
  for (const auto& [va, ma] : a.entries)
    for (const auto& [vb, mb] : b.entries) values.emplace_back(va + vb, checked_mul(ma, mb));
  Spectrum sp = make_spectrum(std::move(values), "(" + a.source_label + ") x (" + b.source_label + ")");
  sp.generator_names = a.generator_names.size() >= b.generator_names.size() ? a.generator_names : b.generator_names;
  sp.free_denominator = a.free_denominator;
  return sp;
}

/// Whether the spectrum is stable under v -> v^-1.
inline bool is_inversion_symmetric(const Spectrum& sp) {
  return std::all_of(sp.entries.begin(), sp.entries.end(),
                     [&](const auto& e) { return sp.multiplicity(-e.first) == e.second; });
}

inline std::string format_value(const Spectrum& sp, const ValueGroupElement& v) {
  return format_value(v, sp.generator_names, sp.free_denominator);
}

/// "{a^2:1, 1:4, a^-2:1}" in canonical value order.
inline std::string format_spectrum(const Spectrum& sp) {
  std::string s = "{";
  for (std::size_t i = 0; i < sp.entries.size(); ++i) {
    if (i) s += ", ";
    s += format_value(sp, sp.entries[i].first) + ":" + std::to_string(sp.entries[i].second);
  }
  return s + "}";
}

}  // namespace torspec
