// Acceptance gate: ten numbered criteria, each printing one [PASS]/[FAIL]
// line with the measured quantity against its stated tolerance. Run with a
// criterion number as the only argument, or with no arguments for all ten.
// Exit status is nonzero if any selected criterion fails.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "halfwave/analysis.hpp"
#include "halfwave/dynamics.hpp"
#include "halfwave/initial_data.hpp"
#include "halfwave/lattice.hpp"
#include "halfwave/trigpoly.hpp"
#include "halfwave/util.hpp"

using namespace halfwave;
using lattice::Field;
using lattice::Geometry;
using lattice::Spins;
using spectral::CoeffSeq;
using spectral::Product;
using spectral::TrigPoly;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Spins random_spins(int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Field f(N);
  for (auto& v : f.v) {
    for (int c = 0; c < 3; ++c) v[c] = uniform_pm1(rng);
    v *= 1.0 / norm(v);
  }
  return Spins::adopt(std::move(f));
}

TrigPoly random_real_poly(long deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TrigPoly p(deg);
  for (int c = 0; c < 3; ++c) p.at(0)[c] = uniform_pm1(rng);
  for (long k = 1; k <= deg; ++k)
    for (int c = 0; c < 3; ++c) {
      cplx v(uniform_pm1(rng), uniform_pm1(rng));
      p.at(k)[c] = v / double(k);  // mild decay keeps products O(1)
      p.at(-k)[c] = std::conj(p.at(k)[c]);
    }
  return p;
}

// ---- 1: exact spectrum --------------------------------------------------

bool crit1(std::string& detail) {
  double worst = 0;
  for (int N = 3; N <= 101; N += 2) {
    Geometry g(N);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    for (int k = 0; k < N; ++k) {
      double diag = 0;
      for (int l = 0; l < N; ++l) {
        if (l == k) continue;
        double w = (2.0 / N) / g.chord2(k, l);
        A(k, l) = -w;
        diag += w;
      }
      A(k, k) = diag;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) {
      detail = "eigensolver failed at N=" + std::to_string(N);
      return false;
    }
    std::vector<double> expect = lattice::spectrum_bins(N);
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < N; ++i) worst = std::max(worst, std::abs(es.eigenvalues()[i] - expect[i]));
  }

  // rational spot checks: mu is the exactly rounded ratio k(N-k)/N
  bool rational = lattice::mu(1, 3) == 2.0 / 3.0 && lattice::mu(2, 5) == 6.0 / 5.0 &&
                  lattice::mu(3, 9) == 2.0 && lattice::mu(50, 101) == 50.0 * 51.0 / 101.0 &&
                  lattice::mu(-7, 31) == 7.0 * 24.0 / 31.0;
  detail = "max eigenvalue gap " + fmt(worst) + " (tol 1e-10), rational spot checks " +
           (rational ? "exact" : "BROKEN");
  return worst <= 1e-10 && rational;
}

// ---- 2: conservation ----------------------------------------------------

bool crit2(std::string& detail) {
  dynamics::FlowParams p;
  p.dt = 1e-3;
  p.T = 1.0;
  p.record_every = 100;
  p.project = true;
  dynamics::Trajectory traj = dynamics::integrate(data::make_initial(data::TiltedSmooth{}, 31), p);

  const auto& d0 = traj.diag.front();
  double edrift = 0, sdrift = 0, sphere = 0;
  for (const auto& d : traj.diag) {
    edrift = std::max(edrift, std::abs(d.energy - d0.energy) / std::abs(d0.energy));
    sdrift = std::max(sdrift, norm(d.total_spin - d0.total_spin));
    sphere = std::max(sphere, d.sphere_dev);
  }
  detail = "energy drift " + fmt(edrift) + " (tol 1e-8), spin drift " + fmt(sdrift) +
           " (tol 1e-9), sphere dev " + fmt(sphere) + " (tol 1e-10)";
  return edrift <= 1e-8 && sdrift <= 1e-9 && sphere <= 1e-10;
}

// ---- 3: Lyapunov decay under viscosity ------------------------------------

bool crit3(std::string& detail) {
  double worst_l2 = 0, worst_hh = 0;
  for (double eps : {1e-1, 1e-2}) {
    dynamics::FlowParams p;
    p.eps = eps;
    p.dt = 5e-3;
    p.T = 0.5;
    p.record_every = 5;
    dynamics::Trajectory traj =
        dynamics::integrate(data::make_initial(data::TiltedSmooth{}, 31), p);
    for (size_t i = 1; i < traj.diag.size(); ++i) {
      worst_l2 = std::max(worst_l2,
                          (traj.diag[i].l2 - traj.diag[i - 1].l2) / traj.diag[i - 1].l2);
      worst_hh = std::max(worst_hh,
                          (traj.diag[i].hhalf - traj.diag[i - 1].hhalf) / traj.diag[i - 1].hhalf);
    }
  }
  detail = "max step increase: l2 " + fmt(worst_l2) + ", Hhalf " + fmt(worst_hh) +
           " (tol 1e-9 each)";
  return worst_l2 <= 1e-9 && worst_hh <= 1e-9;
}

// ---- 4: aliasing product formula ------------------------------------------

bool crit4(std::string& detail) {
  double worst = 0;
  for (int N : {5, 31, 129}) {
    long n = (N - 1) / 2;
    for (int rep = 0; rep < 100; ++rep) {
      TrigPoly f = random_real_poly(n, 0x40000 + 1000 * N + 2 * rep);
      TrigPoly g = random_real_poly(n, 0x40000 + 1000 * N + 2 * rep + 1);
      TrigPoly a = spectral::tilde_product(f, g, Product::Cross, N);
      TrigPoly b = spectral::tilde_product_folded(f, g, Product::Cross, N);
      worst = std::max(worst, spectral::max_coeff_gap(CoeffSeq::from(a), CoeffSeq::from(b)));
    }
  }
  detail = "two-path gap over 300 pairs " + fmt(worst) + " (tol 1e-12)";
  return worst <= 1e-12;
}

// ---- 5: error-term machinery ----------------------------------------------

bool crit5(std::string& detail) {
  double worst_two = 0, worst_red = 0, worst_conj = 0;
  for (int N : {5, 9, 17, 33, 65, 129})
    for (int rep = 0; rep < 5; ++rep) {
      TrigPoly S = spectral::interpolate(random_spins(N, 0x50000 + 100 * N + rep).f);
      analysis::ErrorTerm et = analysis::error_term(S, N);
      analysis::TailCoeffs tc = analysis::tail_coefficients(S, N);
      worst_two = std::max(worst_two, et.two_path_gap);
      worst_red = std::max(worst_red, tc.reduced_gap);
      worst_conj = std::max(worst_conj, tc.conj_gap);
    }

  analysis::SweepOptions opt;  // T = 0.5, 8 records, eps 0.1, projected
  analysis::ErrorSweep sweep =
      analysis::error_norm_sweep(data::TiltedSmooth{}, {33, 65, 129, 257}, opt, 2);
  bool strict = true;
  std::string seq;
  for (size_t i = 0; i < sweep.rows.size(); ++i) {
    if (i) {
      strict = strict && sweep.rows[i].sup_norm < sweep.rows[i - 1].sup_norm;
      seq += " > ";
    }
    seq += fmt(sweep.rows[i].sup_norm);
  }
  detail = "two-path " + fmt(worst_two) + ", reduced-form " + fmt(worst_red) + ", conjugate " +
           fmt(worst_conj) + " (tol 1e-12 each); sweep " + seq +
           (strict ? " strictly decreasing" : " NOT decreasing");
  return worst_two <= 1e-12 && worst_red <= 1e-12 && worst_conj <= 1e-12 && strict;
}

// ---- 6: convergence rate ----------------------------------------------------

bool crit6(std::string& detail) {
  analysis::ConvOptions opt;  // T = 1, 8 records, eps 0, projected
  analysis::ConvTable t =
      analysis::convergence_study(data::TiltedSmooth{}, {33, 65, 129, 257}, {true, 1025}, opt, 4);
  std::string rows;
  for (const auto& r : t.rows) rows += " " + std::to_string(r.N) + ":" + fmt(r.sup_err);
  detail = "slope " + fmt(t.slope) + " (band [0.8, 1.4]), T_used " + fmt(t.T_used) + ", errors" +
           rows;
  return t.slope >= 0.8 && t.slope <= 1.4 && t.T_used > 0;
}

// ---- 7: weak-form residual ---------------------------------------------------

bool crit7(std::string& detail) {
  auto weak_sup = [](const data::InitialData& d, int N, std::vector<double>& per_fn) {
    double delta = 0.0125;
    double cap = dynamics::stability_cap(N, 0.0);
    int m = std::max(1, int(std::ceil(delta / cap)));
    dynamics::FlowParams p;
    p.dt = delta / m;
    p.T = 0.2;
    p.record_every = m;
    p.project = true;
    auto traj = dynamics::integrate(data::make_initial(d, N), p);
    analysis::WeakReport rep =
        analysis::weak_residual(traj, analysis::default_test_functions(10));
    per_fn = rep.sup_gap;
    double overall = 0;
    for (double g : rep.sup_gap) overall = std::max(overall, g);
    return overall;
  };

  std::vector<double> gaps33, gaps129, gaps_gc;
  double sup33 = weak_sup(data::TiltedSmooth{}, 33, gaps33);
  double sup129 = weak_sup(data::TiltedSmooth{}, 129, gaps129);
  double sup_gc = weak_sup(data::GreatCircle{1}, 33, gaps_gc);

  // every gap halves, except those already at the noise floor
  bool per_fn_ok = true;
  for (size_t i = 0; i < gaps33.size(); ++i)
    per_fn_ok = per_fn_ok && (gaps33[i] <= 1e-10 || gaps129[i] <= gaps33[i] / 2);

  detail = "smooth sup gap " + fmt(sup33) + " -> " + fmt(sup129) + " (factor " +
           fmt(sup33 / sup129) + ", need >= 2), stationary sup " + fmt(sup_gc) + " (tol 1e-9)";
  return sup33 >= 2 * sup129 && per_fn_ok && sup_gc <= 1e-9;
}

// ---- 8: interpolation error orders -------------------------------------------

bool crit8(std::string& detail) {
  const long K = 100000;
  CoeffSeq f;
  for (long k = -K; k <= K; ++k) {
    Vec3c v{};
    v.x = std::pow(1.0 + double(k) * double(k), -0.8);  // <k>^{-1.6}
    f.add(k, v);
  }
  spectral::InterpErrorReport rep =
      spectral::interp_error_report(f, 0.1, 0.0, {33, 65, 129, 257, 513});
  double lo = rep.rows.front().interp_norm, hi = lo;
  for (const auto& r : rep.rows) {
    lo = std::min(lo, r.interp_norm);
    hi = std::max(hi, r.interp_norm);
  }
  detail = "fitted order " + fmt(rep.fitted_order) + " (tol >= 0.9), interp norms in [" + fmt(lo) +
           ", " + fmt(hi) + "] " + (rep.interp_bounded ? "bounded" : "UNBOUNDED");
  return rep.fitted_order >= 0.9 && rep.interp_bounded;
}

// ---- 9: piecewise-constant comparison ------------------------------------------

bool crit9(std::string& detail) {
  // quadrature oracle, 24-point Gauss-Legendre per arc
  auto gl = [](int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
      double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = t;
        for (int j = 2; j <= m; ++j) {
          double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        double dp = m * (t * p1 - p0) / (t * t - 1);
        double step = p1 / dp;
        t -= step;
        if (std::abs(step) < 1e-15) break;
      }
      double p0 = 1, p1 = t;
      for (int j = 2; j <= m; ++j) {
        double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = m * (t * p1 - p0) / (t * t - 1);
      x[i] = t;
      w[i] = 2.0 / ((1 - t * t) * dp * dp);
    }
  };
  std::vector<double> gx, gw;
  gl(24, gx, gw);

  double worst = 0;
  for (int N : {5, 31})
    for (int rep = 0; rep < 10; ++rep) {
      Field f = random_spins(N, 0x90000 + 100 * N + rep).f;
      Geometry g(N);
      TrigPoly p = spectral::interpolate(f);
      double acc = 0;
      for (int j = 0; j < N; ++j) {
        double lo = g.theta(j) - g.h / 2;
        for (size_t q = 0; q < gx.size(); ++q) {
          double th = lo + (gx[q] + 1) * g.h / 2;
          acc += gw[q] * (g.h / 2) * norm2(spectral::eval_real(p, th) - f.v[j]);
        }
      }
      double quad = std::sqrt(acc / kTwoPi);
      worst = std::max(worst, std::abs(spectral::piecewise_distance(f) - quad));
    }

  // fixed smooth family: the distance vanishes as the lattice refines
  std::vector<double> dists;
  for (int N : {9, 17, 33, 65})
    dists.push_back(spectral::piecewise_distance(data::make_initial(data::TiltedSmooth{}, N).f));
  bool decays = true;
  for (size_t i = 1; i < dists.size(); ++i) decays = decays && dists[i] < dists[i - 1];
  decays = decays && dists.back() < dists.front() / 3;

  detail = "closed form vs quadrature over 20 configs " + fmt(worst) +
           " (tol 1e-8); smooth distances " + fmt(dists.front()) + " -> " + fmt(dists.back()) +
           (decays ? " decaying" : " NOT decaying");
  return worst <= 1e-8 && decays;
}

// ---- 10: viscous identity -----------------------------------------------------

bool crit10(std::string& detail) {
  double worst_res = 0, worst_top = 0;
  for (double eps : {0.0, 1e-1, 1e-2})
    for (int rep = 0; rep < 5; ++rep) {
      Spins S = random_spins(31, 0xA0000 + rep);
      dynamics::ViscousIdentity v = dynamics::viscous_identity_check(S.f, eps);
      worst_res = std::max(worst_res, std::abs(v.residual) / v.scale);
      worst_top = std::max(worst_top, std::abs(v.top_term) / v.scale);
    }
  detail = "relative residual " + fmt(worst_res) + " (tol 1e-9), k=2 term " + fmt(worst_top) +
           " (tol 1e-12)";
  return worst_res <= 1e-9 && worst_top <= 1e-12;
}

struct Criterion {
  int id;
  const char* label;
  bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "exact spectrum vs dense eigensolver", crit1},
    {2, "conservation along the projected flow", crit2},
    {3, "Lyapunov decay under viscosity", crit3},
    {4, "aliasing product formula two-path equality", crit4},
    {5, "error-term two-path, cancellation, norm sweep decay", crit5},
    {6, "convergence rate against the fine-lattice reference", crit6},
    {7, "weak-form residual shrinks with N", crit7},
    {8, "interpolation error order of the power-law profile", crit8},
    {9, "piecewise-constant distance: closed form vs quadrature", crit9},
    {10, "viscous dissipation identity", crit10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1-10]\n", argv[0]);
      return 2;
    }
  }

  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.label, detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
