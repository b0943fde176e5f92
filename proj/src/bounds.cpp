#include "specchrom/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "specchrom/errors.hpp"
#include "specchrom/rng.hpp"

namespace specchrom {

namespace {

Bound ratio_bound(double numerator, double denominator, double zero_tol) {
  if (denominator <= zero_tol) return Bound{1.0, true};
  return Bound{1.0 + numerator / denominator, false};
}

}  // namespace

Bound hoffman(const Spectrum& s) {
  if (s.size() == 0) return Bound{1.0, true};
  return ratio_bound(s.largest(), -s.smallest(), s.zero_tol);
}

GeneralizedHoffman generalized_hoffman(const Spectrum& s) {
  GeneralizedHoffman out;
  out.degenerate = true;
  const auto& mu = s.values;
  const std::size_t n = mu.size();
  double top = 0.0, bottom = 0.0;
  double best = 0.0;
  for (std::size_t m = 1; m < n; ++m) {
    top += mu[m - 1];
    bottom -= mu[n - m];
    if (bottom <= s.zero_tol) continue;
    const double r = top / bottom;
    if (out.degenerate || r > best + 1e-12 * std::max(1.0, std::abs(best))) {
      best = r;
      out.best_m = static_cast<int>(m);
      out.degenerate = false;
    }
  }
  out.value = out.degenerate ? 1.0 : 1.0 + best;
  return out;
}

WeakerConjecture weaker_and_conjecture(const SpectralSums& sums, double zero_tol) {
  if (sums.s_minus <= zero_tol) return WeakerConjecture{0.0, 1.0, true};
  const double w = sums.s_plus / sums.s_minus;
  return WeakerConjecture{w, 1.0 + w, false};
}

AuxiliaryBounds auxiliary_bounds(const Spectrum& s, int n, std::size_t m) {
  AuxiliaryBounds out;
  if (n < 1) throw InputError("auxiliary bounds need n >= 1");
  const double two_m = 2.0 * static_cast<double>(m);
  const double nn = static_cast<double>(n);
  const double mu1 = s.size() > 0 ? s.values[0] : 0.0;
  out.wilf_upper = 1.0 + mu1;
  if (m == 0) {
    out.cvetkovic = out.myers_liu = out.edwards_elphick = out.bollobas_nikiforov = Bound{1.0, true};
    return out;
  }
  out.myers_liu = ratio_bound(two_m, nn * nn - two_m, s.zero_tol);
  out.cvetkovic = ratio_bound(mu1, nn - mu1, s.zero_tol);
  out.edwards_elphick = ratio_bound(mu1 * mu1, two_m - mu1 * mu1, s.zero_tol);
  // stated for non-complete graphs only
  const bool complete = m == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (s.size() >= 2 && !complete) {
    const double top2 = mu1 * mu1 + s.values[1] * s.values[1];
    out.bollobas_nikiforov = ratio_bound(top2, two_m - top2, s.zero_tol);
  } else {
    out.bollobas_nikiforov = Bound{1.0, true};
  }
  return out;
}

double alpha_bound(const Graph& g, int alpha) {
  if (alpha < 0 || alpha > g.n()) throw InputError("independence number out of range");
  return static_cast<double>(g.n() - alpha + 1);
}

BarnesResult barnes_heuristic(const Matrix& a, const Spectrum& s, const Tolerances& tol) {
  BarnesResult out;
  const std::size_t n = a.rows();
  const Bound start = hoffman(s);
  if (start.degenerate) {
    out.bound = start;
    return out;
  }
  out.diagonal.assign(n, -s.smallest());
  double best = start.value - 1.0;

  auto feasible = [&](const std::vector<double>& d) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += d[i];
    const Spectrum sp = eig_symmetric(shifted, tol);
    return sp.smallest() >= -s.zero_tol;
  };
  auto objective = [&](const std::vector<double>& d) {
    Matrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) scaled(i, j) = a(i, j) / std::sqrt(d[i] * d[j]);
    return eig_symmetric(scaled, tol).largest();
  };

  static constexpr std::array<double, 4> factors{0.8, 0.9, 1.1, 1.25};
  for (int sweep = 0; sweep < 50; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i)
      for (double f : factors) {
        std::vector<double> trial = out.diagonal;
        trial[i] *= f;
        const double value = objective(trial);
        if (value > best + 1e-12 && feasible(trial)) {
          best = value;
          out.diagonal = std::move(trial);
          improved = true;
        }
      }
    out.sweeps = sweep + 1;
    if (!improved) break;
  }
  out.bound = Bound{1.0 + best, false};
  return out;
}

WeightedBounds weighted_bounds(const WeightMatrix& w, const Graph& g, const Tolerances& tol) {
  const Matrix wa = schur_product(w, adjacency_matrix(g));
  WeightedBounds out;
  if (wa.max_abs() == 0.0) {
    out.degenerate = true;
    out.gen_hoffman.degenerate = true;
    out.weaker.degenerate = true;
    return out;
  }
  const Spectrum s = eig_symmetric(wa, tol);
  out.gen_hoffman = generalized_hoffman(s);
  out.weaker = weaker_and_conjecture(spectral_sums(s), s.zero_tol);
  return out;
}

WeightSearch optimize_w(const Graph& g, int budget, std::uint64_t seed, const Tolerances& tol) {
  if (budget < 1) throw InputError("weight search budget must be >= 1");
  const auto n = static_cast<std::size_t>(g.n());
  const auto& edges = g.edges();

  auto to_matrix = [&](const std::vector<double>& weights) {
    Matrix m(n, n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto u = static_cast<std::size_t>(edges[e].u - 1);
      const auto v = static_cast<std::size_t>(edges[e].v - 1);
      m(u, v) = weights[e];
      m(v, u) = weights[e];
    }
    return WeightMatrix(std::move(m));
  };

  WeightSearch out;
  const WeightMatrix baseline = WeightMatrix::all_ones(n);
  const WeightedBounds base = weighted_bounds(baseline, g, tol);
  out.best_gen_hoffman = base.gen_hoffman.value;
  out.best_weaker = base.weaker.weaker;
  out.gen_hoffman_witness = baseline;
  out.weaker_witness = baseline;
  out.evaluations = 1;
  if (edges.empty()) return out;

  auto score = [](const WeightedBounds& b) { return b.gen_hoffman.value + b.weaker.weaker; };

  Rng rng(seed);
  std::vector<double> current(edges.size(), 1.0);
  double current_score = score(base);
  int stale = 0;
  while (out.evaluations < budget) {
    std::vector<double> trial = current;
    if (stale >= 25) {
      for (double& x : trial) x = rng.uniform(0.5, 1.5);
      current_score = -1.0;  // accept the restart point unconditionally
      stale = 0;
    } else {
      trial[rng.below(edges.size())] += 0.5 * rng.normal();
    }
    const WeightMatrix w = to_matrix(trial);
    const WeightedBounds b = weighted_bounds(w, g, tol);
    ++out.evaluations;
    if (b.degenerate) {
      ++stale;
      continue;
    }
    if (!b.gen_hoffman.degenerate && b.gen_hoffman.value > out.best_gen_hoffman) {
      out.best_gen_hoffman = b.gen_hoffman.value;
      out.gen_hoffman_witness = w;
    }
    if (!b.weaker.degenerate && b.weaker.weaker > out.best_weaker) {
      out.best_weaker = b.weaker.weaker;
      out.weaker_witness = w;
    }
    if (score(b) > current_score) {
      current = std::move(trial);
      current_score = score(b);
      stale = 0;
    } else {
      ++stale;
    }
  }
  return out;
}

BoundReport spectral_report(const Graph& g, const ReportOptions& options, const Tolerances& tol) {
  BoundReport r;
  r.name = g.name();
  r.n = g.n();
  r.m = g.m();
  const Matrix a = adjacency_matrix(g);
  const Spectrum s = eig_symmetric(a, tol);
  r.eigenvalues = s.values;
  r.inertia = inertia_of(s);
  r.sums = spectral_sums(s, r.inertia);
  r.hoffman = hoffman(s);
  r.gen_hoffman = generalized_hoffman(s);
  r.weaker = weaker_and_conjecture(r.sums, s.zero_tol);
  r.aux = auxiliary_bounds(s, g.n(), g.m());
  if (options.barnes) r.barnes = barnes_heuristic(a, s, tol).bound;
  if (options.weights) r.weighted = weighted_bounds(*options.weights, g, tol);
  return r;
}

}  // namespace specchrom
