#pragma once

// Truncated submodule closure and the simplicity probe.
//
// The submodule generated by a seed is infinite-dimensional; closure()
// computes the part reachable inside a finite window: operators with
// |index| <= max_mode and grade <= max_grade, vectors of slot degree
// <= max_degree (outputs above the cap are discarded). Every row of the
// result carries a certificate, so membership claims are exact proofs.
// A proper span is only evidence of non-simplicity.

#include <blocksuper/algebra.hpp>
#include <blocksuper/linalg.hpp>
#include <blocksuper/modules.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace blocksuper {

struct DegreeWindow {
  long max_mode = 2;
  long max_grade = 1;
  int max_degree = 4;
};

/// All basis keys of a sector with |index| <= max_mode and grade <= max_grade,
/// in canonical order.
inline std::vector<BasisKey> window_keys(Sector sector, long max_mode, long max_grade) {
  std::vector<BasisKey> keys;
  for (long i = 0; i <= max_grade; ++i)
    for (long t = -2 * max_mode; t <= 2 * max_mode; t += 2) keys.push_back(BasisKey{Parity::Even, t, i});
  for (long j = 0; j <= max_grade; ++j)
    for (long t = -2 * max_mode; t <= 2 * max_mode; ++t) {
      BasisKey k{Parity::Odd, t, j};
      if (k.valid_in(sector)) keys.push_back(k);
    }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Coordinates: even slot by ascending degree, then odd slot by ascending degree.
template <class Tag>
CoordVector to_coords(const SuperVector<Tag>& v, int max_degree) {
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  CoordVector out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = v.even.coeff(k);
    out[n + k] = v.odd.coeff(k);
  }
  return out;
}

template <class Tag>
SuperVector<Tag> from_coords(const CoordVector& c) {
  const std::size_t n = c.size() / 2;
  return {Poly(CoordVector(c.begin(), c.begin() + static_cast<long>(n))),
          Poly(CoordVector(c.begin() + static_cast<long>(n), c.end()))};
}

namespace detail {
template <class V>
struct VectorTag;
template <class Tag>
struct VectorTag<SuperVector<Tag>> {
  using type = Tag;
};
}  // namespace detail

template <class Module>
struct ClosureResult {
  using vector_type = typename Module::vector_type;

  SubspaceBasis basis;
  std::vector<vector_type> seeds;
  DegreeWindow window;
  bool contains_even_constant = false;
  bool saturated = false;
  std::size_t passes = 0;

  vector_type row_vector(std::size_t k) const {
    return from_coords<typename detail::VectorTag<vector_type>::type>(basis.rows().at(k).coords);
  }
};

/// Applies a generator's word to its seed.
template <class Module>
typename Module::vector_type replay(const Module& mod, const std::vector<typename Module::vector_type>& seeds,
                                    const Generator& g) {
  auto v = seeds.at(g.seed);
  for (const auto& k : g.word) v = mod.act(k, v);
  return v;
}

/// Replays a row certificate: sum of coefficient * word(seed).
template <class Module>
typename Module::vector_type replay_row(const Module& mod, const ClosureResult<Module>& res, std::size_t row) {
  typename Module::vector_type out;
  for (const auto& [c, g] : res.basis.certificate(row)) out += c * replay(mod, res.seeds, g);
  return out;
}

template <class Module>
ClosureResult<Module> closure(const Module& mod, std::vector<typename Module::vector_type> seeds,
                              const DegreeWindow& window, std::size_t max_passes = 256) {
  using Vec = typename Module::vector_type;
  if (window.max_degree < 0 || window.max_mode < 0 || window.max_grade < 0)
    throw usage_error("window bounds must be non-negative");
  bool any = false;
  for (const auto& s : seeds) {
    if (!s.is_zero()) any = true;
    if (s.degree() > window.max_degree) throw usage_error("seed degree exceeds the window's max_degree");
  }
  if (!any) throw usage_error("closure needs at least one nonzero seed");

  const std::size_t n = static_cast<std::size_t>(window.max_degree) + 1;
  ClosureResult<Module> res{SubspaceBasis(2 * n), std::move(seeds), window};
  std::vector<Vec> gen_vectors;
  for (std::size_t s = 0; s < res.seeds.size(); ++s)
    if (res.basis.insert(to_coords(res.seeds[s], window.max_degree), Generator{s, {}}))
      gen_vectors.push_back(res.seeds[s]);

  const auto ops = window_keys(mod.sector(), window.max_mode, window.max_grade);
  std::size_t frontier_begin = 0;
  while (res.passes < max_passes) {
    const std::size_t frontier_end = gen_vectors.size();
    ++res.passes;
    for (std::size_t g = frontier_begin; g < frontier_end; ++g) {
      for (const auto& op : ops) {
        Vec w = mod.act(op, gen_vectors[g]);
        if (w.is_zero() || w.degree() > window.max_degree) continue;
        Generator gen = res.basis.generators()[g];
        gen.word.push_back(op);
        if (res.basis.insert(to_coords(w, window.max_degree), std::move(gen))) gen_vectors.push_back(std::move(w));
      }
    }
    frontier_begin = frontier_end;
    if (gen_vectors.size() == frontier_end) {
      res.saturated = true;
      break;
    }
  }
  Vec one = Vec::even_part(Poly(1));
  res.contains_even_constant = res.basis.contains(to_coords(one, window.max_degree));
  return res;
}

enum class Verdict { ReachedFull, ProperCandidate };

inline const char* to_string(Verdict v) { return v == Verdict::ReachedFull ? "ReachedFull" : "ProperCandidate"; }

template <class Module>
struct ProbeResult {
  Verdict verdict = Verdict::ReachedFull;
  std::optional<std::size_t> failing_seed;
  /// Closure of the failing seed, or of the last seed when all reached full.
  ClosureResult<Module> witness;
  std::vector<typename Module::vector_type> seeds;
};

/// True iff the span holds every monomial of degree <= max_degree - 1 in both slots.
template <class Module>
bool reached_full(const ClosureResult<Module>& res) {
  using Vec = typename Module::vector_type;
  for (int d = 0; d < res.window.max_degree; ++d) {
    if (!res.basis.contains(to_coords(Vec::even_part(Poly::monomial(d)), res.window.max_degree))) return false;
    if (!res.basis.contains(to_coords(Vec::odd_part(Poly::monomial(d)), res.window.max_degree))) return false;
  }
  return true;
}

template <class Module>
std::vector<typename Module::vector_type> default_probe_seeds() {
  using Vec = typename Module::vector_type;
  return {Vec::even_part(Poly(1)), Vec::odd_part(Poly(1)), Vec::even_part(Poly::variable()),
          Vec::odd_part(Poly::variable())};
}

/// Runs closure() from each seed separately. A simple module is generated by
/// every nonzero vector, so ReachedFull requires every seed to reach the full
/// truncated space; the first seed that does not yields ProperCandidate.
template <class Module>
ProbeResult<Module> simplicity_probe(const Module& mod, const DegreeWindow& window,
                                     std::vector<typename Module::vector_type> seeds) {
  ProbeResult<Module> out;
  out.seeds = seeds;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    auto res = closure(mod, {seeds[s]}, window);
    const bool full = reached_full(res);
    out.witness = std::move(res);
    if (!full) {
      out.verdict = Verdict::ProperCandidate;
      out.failing_seed = s;
      return out;
    }
  }
  return out;
}

template <class Module>
ProbeResult<Module> simplicity_probe(const Module& mod, const DegreeWindow& window = {}) {
  return simplicity_probe(mod, window, default_probe_seeds<Module>());
}

/// Simplicity predicted for the parameter point: a != 0, or q = -1 and b != 0.
inline bool predicted_simple(const ModuleParams& p) { return !p.a().is_zero() || (p.b_active() && !p.b().is_zero()); }

}  // namespace blocksuper
