#include "conic/mode_spectral.hpp"

#include <algorithm>
#include <cmath>

#include "conic/tridiag.hpp"

namespace conic {

namespace {

// Warp/weight in the radial coordinate used for assembly. The cusp chart is
// assembled in x = log r, where both the flux coefficient and the measure are
// e^x and the mode potential is j^2 e^{-2x}.
struct Coefficients {
  std::function<double(double)> f;          // flux and measure
  std::function<double(double)> potential;  // k^2-term, before the shift
};

Coefficients coefficients(const ModeEigenproblem& p) {
  const double k2 = static_cast<double>(p.mode) * p.mode;
  if (p.geometry.chart() == Chart::Cusp) {
    return {[](double x) { return std::exp(x); },
            [k2](double x) { return k2 * std::exp(-2.0 * x); }};
  }
  const ModelMetric g = p.geometry;
  return {[g](double r) { return evaluate_model(g, r).f; },
          [g, k2](double r) {
            const double f = evaluate_model(g, r).f;
            return k2 / (f * f);
          }};
}

RadialGrid build_grid(const ModeEigenproblem& p, int n) {
  RadialGrid grid;
  grid.faces.resize(n + 1);
  grid.nodes.resize(n);
  switch (p.geometry.chart()) {
    case Chart::Cusp: {
      // log-uniform faces in x = log r
      const double x0 = std::log(p.cusp_r_min), x1 = std::log(p.r_max);
      for (int j = 0; j <= n; ++j) grid.faces[j] = x0 + (x1 - x0) * j / n;
      break;
    }
    case Chart::Suspension: {
      // clustering at both poles
      const double T = p.geometry.domain_max();
      for (int j = 0; j <= n; ++j)
        grid.faces[j] = T * 0.5 * (1.0 - std::cos(M_PI * j / n));
      break;
    }
    default: {
      // quadratic clustering at the pole face
      const double R = p.r_max;
      for (int j = 0; j <= n; ++j) {
        const double xi = static_cast<double>(j) / n;
        grid.faces[j] = R * xi * xi;
      }
      break;
    }
  }
  for (int i = 0; i < n; ++i) grid.nodes[i] = 0.5 * (grid.faces[i] + grid.faces[i + 1]);
  return grid;
}

ModeOperator assemble_on(const ModeEigenproblem& p, int n) {
  if (n < 64) throw GridTooCoarse("mode grid requires n >= 64");
  if (p.outer == OuterBC::None)
    throw NoDiscreteSpectrum("no outer confinement: continuous spectrum");
  if (p.outer == OuterBC::SecondPole && p.geometry.chart() != Chart::Suspension)
    throw InvalidSpec("SecondPole requires the suspension chart");
  if (p.geometry.chart() != Chart::Cusp && p.geometry.chart() != Chart::Suspension) {
    if (!(p.r_max > 0.0) || !(p.r_max < p.geometry.domain_max()))
      throw OutOfChart("outer radius outside the chart");
  }

  const Coefficients co = coefficients(p);
  ModeOperator op;
  op.grid = build_grid(p, n);
  op.diag.assign(n, 0.0);
  op.off.assign(n - 1, 0.0);
  op.weight.assign(n, 0.0);

  const auto& F = op.grid.faces;
  const auto& N = op.grid.nodes;
  for (int i = 0; i < n; ++i) {
    op.weight[i] = co.f(N[i]) * (F[i + 1] - F[i]);
    op.diag[i] = op.weight[i] * (co.potential(N[i]) - p.shift);
  }
  for (int j = 1; j < n; ++j) {
    const double flux = co.f(F[j]) / (N[j] - N[j - 1]);
    op.diag[j - 1] += flux;
    op.diag[j] += flux;
    op.off[j - 1] = -flux;
  }
  // pole face: for suspension/cone charts f(0) = 0, so the inner flux drops out
  // (Friedrichs). The cusp chart truncates at r_min where the weight is tiny;
  // pin it to keep the alternative realizations comparable.
  const bool inner_is_pole =
      p.geometry.chart() != Chart::Cusp && F.front() == 0.0 && !p.pin_inner;
  if (!inner_is_pole) {
    // the warp degenerates at an exact pole face; the pin_inner realization
    // borrows the first node's coefficient for the ghost flux
    const double fin =
        (p.geometry.chart() == Chart::Cusp) ? co.f(F.front()) : co.f(N[0]);
    op.diag[0] += fin / (N[0] - F.front());
  }
  // outer boundary
  if (p.outer == OuterBC::Dirichlet || p.geometry.chart() == Chart::Cusp) {
    const double fluxn = co.f(F.back()) / (F.back() - N[n - 1]);
    op.diag[n - 1] += fluxn;
  }
  // SecondPole: f vanishes at the far face, nothing to add.
  return op;
}

}  // namespace

void ModeOperator::standardize(std::vector<double>& d, std::vector<double>& e) const {
  const std::size_t n = diag.size();
  d.resize(n);
  e.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] / weight[i];
  for (std::size_t i = 0; i + 1 < n; ++i)
    e[i] = off[i] / std::sqrt(weight[i] * weight[i + 1]);
}

ModeOperator assemble_mode(const ModeEigenproblem& problem) {
  return assemble_on(problem, problem.n);
}

SpectrumResult solve_spectrum(const ModeEigenproblem& problem, int count) {
  const ModeOperator coarse = assemble_on(problem, problem.n);
  const ModeOperator fine = assemble_on(problem, 2 * problem.n);
  std::vector<double> dc, ec, df, ef;
  coarse.standardize(dc, ec);
  fine.standardize(df, ef);
  const auto lc = lowest_eigenvalues(dc, ec, count);
  const auto lf = lowest_eigenvalues(df, ef, count);
  SpectrumResult out;
  out.grid_n = 2 * problem.n;
  for (int i = 0; i < count; ++i) {
    SpectrumEntry e{};
    e.mode = problem.mode;
    e.index = i;
    e.value = lf[i];
    e.extrapolated = (4.0 * lf[i] - lc[i]) / 3.0;
    e.error_bar = std::abs(lf[i] - lc[i]) / 3.0;
    out.entries.push_back(e);
  }
  return out;
}

std::pair<RadialGrid, std::vector<double>> solve_eigenvector(const ModeEigenproblem& problem,
                                                             int index) {
  const ModeOperator fine = assemble_on(problem, 2 * problem.n);
  std::vector<double> d, e;
  fine.standardize(d, e);
  const auto vals = lowest_eigenvalues(d, e, index + 1);
  std::vector<double> y = eigenvector(d, e, vals[index]);
  // transform back: u = W^{-1/2} y
  for (std::size_t i = 0; i < y.size(); ++i) y[i] /= std::sqrt(fine.weight[i]);
  double nrm = 0.0;
  for (double v : y) nrm = std::max(nrm, std::abs(v));
  for (double& v : y) v /= nrm;
  return {fine.grid, std::move(y)};
}

EigenvalueBoundReport verify_eigenvalue_bound(double beta, double K, int max_mode, int n) {
  EigenvalueBoundReport rep{};
  rep.two_K = 2.0 * K;
  double worst_violation = 0.0;
  rep.min_margin_modes_ge1 = std::numeric_limits<double>::infinity();
  rep.equality_only_mode0 = true;

  for (int k = 0; k <= max_mode; ++k) {
    ModeEigenproblem p;
    p.geometry = ModelMetric::suspension(beta, K);
    p.mode = k;
    p.n = n;
    p.outer = OuterBC::SecondPole;
    const int count = (k == 0) ? 2 : 1;
    const SpectrumResult s = solve_spectrum(p, count);
    const SpectrumEntry& e = s.entries.back();  // skips the zero mode-0 eigenvalue
    ModeBoundEntry mb{k, e.extrapolated, e.error_bar, e.extrapolated - rep.two_K};
    rep.per_mode.push_back(mb);
    const double tol = 10.0 * e.error_bar;
    if (mb.margin < -tol) worst_violation = std::min(worst_violation, mb.margin);
    if (k == 0) {
      rep.equality_at_mode0 = std::abs(mb.margin) <= tol;
    } else {
      rep.min_margin_modes_ge1 = std::min(rep.min_margin_modes_ge1, mb.margin);
      if (mb.margin <= tol) rep.equality_only_mode0 = false;
    }
  }
  rep.bound_holds = worst_violation == 0.0;

  // rigidity profile: the mode-0 eigenfunction at 2K is cos(sqrt(K) t)
  ModeEigenproblem p0;
  p0.geometry = ModelMetric::suspension(beta, K);
  p0.mode = 0;
  p0.n = n;
  p0.outer = OuterBC::SecondPole;
  auto [grid, u] = solve_eigenvector(p0, 1);
  double num = 0.0, den = 0.0;
  const double q = std::sqrt(K);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double c = std::cos(q * grid.nodes[i]);
    num += u[i] * c;
    den += c * c;
  }
  const double alpha = num / den;
  double dev = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    dev = std::max(dev, std::abs(u[i] - alpha * std::cos(q * grid.nodes[i])));
  rep.cos_profile_dev = dev / std::abs(alpha);
  return rep;
}

ExpansionFit friedrichs_expansion_fit(const ModeEigenproblem& problem,
                                      const std::function<double(double)>& rhs) {
  if (problem.geometry.chart() == Chart::Cusp)
    throw InvalidSpec("expansion fit targets cone/suspension poles");
  const ModeOperator op = assemble_on(problem, problem.n);
  const std::size_t n = op.diag.size();
  std::vector<double> sub(n - 1), sup(n - 1), d = op.diag, b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) sub[i] = sup[i] = op.off[i];
  for (std::size_t i = 0; i < n; ++i) b[i] = op.weight[i] * rhs(op.grid.nodes[i]);
  sub.resize(n, 0.0);
  sup.resize(n, 0.0);
  const std::vector<double> u = solve_tridiag(sub, d, sup, b);

  const double a0 = (problem.mode == 0) ? u[0] : 0.0;
  const double rlo = 1e-4 * problem.r_max, rhi = 1e-3 * problem.r_max;
  if (op.grid.nodes[0] > rlo)
    throw GridTooCoarse("grid does not resolve the fit decade; increase n");

  double umax = 0.0;
  for (double v : u) umax = std::max(umax, std::abs(v));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = op.grid.nodes[i];
    if (r < rlo || r > rhi) continue;
    const double dv = std::abs(u[i] - a0);
    if (dv < 1e-13 * std::max(1.0, umax)) continue;
    const double x = std::log(r), y = std::log(dv);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 8) throw DegenerateFit("u - a0 underflows on the fit decade");

  ExpansionFit fit{};
  fit.points = m;
  fit.a0 = a0;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);

  const double a = 1.0 + problem.geometry.beta();
  const double kb = std::abs(problem.mode) / a;
  if (problem.mode == 0) {
    fit.predicted = 2.0;
  } else {
    // rhs support decides whether the forced r^2 family competes with the
    // Friedrichs indicial branch r^{|k|/(1+beta)}
    bool rhs_near_pole = false;
    for (std::size_t i = 0; i < n && op.grid.nodes[i] < 0.05 * problem.r_max; ++i)
      if (std::abs(rhs(op.grid.nodes[i])) > 1e-14) rhs_near_pole = true;
    fit.predicted = rhs_near_pole ? std::min(kb, 2.0) : kb;
  }
  return fit;
}

std::pair<double, double> cusp_zero_mode_roots() {
  // symbol of -r^2 d_r^2 - 2 r d_r + 2 on r^zeta: -zeta(zeta-1) - 2 zeta + 2
  const double A = -1.0, B = -1.0, C = 2.0;
  const double disc = std::sqrt(B * B - 4.0 * A * C);
  double z1 = (-B + disc) / (2.0 * A);
  double z2 = (-B - disc) / (2.0 * A);
  if (z1 < z2) std::swap(z1, z2);
  return {z1, z2};  // {1, -2}
}

CuspDecayReport cusp_mode_decay_check(int j, double c, double a, double r0, int n) {
  if (j < 1) throw InvalidSpec("cusp mode requires |j| >= 1");
  if (!(c > 0.0 && c < 1.0)) throw InvalidSpec("decay constant c must lie in (0,1)");
  if (!(a >= 0.0)) throw InvalidSpec("rhs bound a must be nonnegative");

  ModeEigenproblem p;
  p.geometry = ModelMetric::cusp();
  p.mode = j;
  p.n = n;
  p.r_max = r0;
  p.outer = OuterBC::Dirichlet;
  p.shift = -2.0;  // operator + 2
  p.cusp_r_min = std::max(0.02, c / 40.0);

  const ModeOperator op = assemble_on(p, n);
  const std::size_t m = op.diag.size();
  std::vector<double> sub(m - 1), sup(m - 1), d = op.diag, b(m);
  for (std::size_t i = 0; i + 1 < m; ++i) sub[i] = sup[i] = op.off[i];
  for (std::size_t i = 0; i < m; ++i) {
    const double r = std::exp(op.grid.nodes[i]);
    b[i] = op.weight[i] * a * std::exp(-c / r);
  }
  sub.resize(m, 0.0);
  sup.resize(m, 0.0);
  const std::vector<double> u = solve_tridiag(sub, d, sup, b);

  CuspDecayReport rep{};
  rep.j = j;
  rep.c = c;
  rep.r0 = r0;
  rep.max_weighted = 0.0;
  rep.max_weighted_core = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = std::exp(op.grid.nodes[i]);
    const double w = std::abs(u[i]) * std::exp(c / r);
    rep.max_weighted = std::max(rep.max_weighted, w);
    if (r <= 0.2 * r0) rep.max_weighted_core = std::max(rep.max_weighted_core, w);
  }
  rep.bound_A = rep.max_weighted * j * j;
  rep.barrier_A = a * r0 * r0;
  return rep;
}

}  // namespace conic
