#include "halfwave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "halfwave/util.hpp"

namespace halfwave::analysis {

using dynamics::FlowParams;
using dynamics::Trajectory;
using lattice::Geometry;
using lattice::mu;
using spectral::alias_fold;
using spectral::convolve;
using spectral::interpolate;
using spectral::Product;
using spectral::sobolev_norm;
using spectral::Sobolev;

ErrorTerm error_term(const TrigPoly& S, int N) {
  Geometry g(N);
  if (S.n > g.n) throw std::invalid_argument("error_term: degree exceeds (N-1)/2");

  // Route one: interpolate-the-product minus the product, coefficientwise.
  TrigPoly W = convolve(S, spectral::dn_apply(S, N), Product::Cross);
  CoeffSeq direct = seq_sub(CoeffSeq::from(alias_fold(W, N)), CoeffSeq::from(W));

  // Route two: tail projections of D_N S x S moved across the fold.
  TrigPoly V = convolve(spectral::dn_apply(S, N), S, Product::Cross);
  CoeffSeq folded;
  for (long k = g.n + 1; k <= V.n; ++k) {
    folded.add(k - N, cplx(-1.0) * V.at(k));
    folded.add(k, V.at(k));
    folded.add(-k + N, cplx(-1.0) * V.at(-k));
    folded.add(-k, V.at(-k));
  }

  ErrorTerm out;
  out.two_path_gap = max_coeff_gap(direct, folded);
  out.e = std::move(direct);
  return out;
}

TailCoeffs tail_coefficients(const TrigPoly& S, int N) {
  Geometry g(N);
  if (S.n > g.n) throw std::invalid_argument("tail_coefficients: degree exceeds (N-1)/2");
  const long n = g.n;

  TailCoeffs tc;
  tc.N = N;
  tc.n = n;
  tc.plus.resize(n);
  tc.minus.resize(n);

  double gap = 0.0, cgap = 0.0;
  for (long k = 1; k <= n; ++k) {
    Vec3c full_p{}, full_m{}, red_p{}, red_m{};
    for (long j = k; j <= n; ++j) {
      full_p += cplx(mu(j, N)) * cross(S.coeff(j), S.coeff(n + k - j));
      full_m += cplx(mu(j, N)) * cross(S.coeff(-j), S.coeff(-(n + k - j)));
    }
    for (long j = (n + k + 1) / 2; j <= n; ++j) {
      cplx w(mu(j, N) - mu(n + k - j, N));
      red_p += w * cross(S.coeff(j), S.coeff(n + k - j));
      red_m += w * cross(S.coeff(-j), S.coeff(-(n + k - j)));
    }
    tc.plus[k - 1] = full_p;
    tc.minus[k - 1] = full_m;
    gap = std::max({gap, cnorm(full_p - red_p), cnorm(full_m - red_m)});
    Vec3c conj_p{std::conj(full_p.x), std::conj(full_p.y), std::conj(full_p.z)};
    cgap = std::max(cgap, cnorm(full_m - conj_p));
  }
  tc.reduced_gap = gap;
  tc.conj_gap = cgap;
  return tc;
}

double tail_envelope(const TrigPoly& S, int N, long k) {
  Geometry g(N);
  const long n = g.n;
  if (k < 1 || k > n) throw std::invalid_argument("tail_envelope: k outside [1, n]");
  double tail = 0.0;
  for (long j = (n + k + 1) / 2; j <= n; ++j)
    tail += std::max<double>(0, 2 * j - (n + k)) * norm2(S.coeff(n + k - j));
  return 2.0 * sobolev_norm(S, 0.5, Sobolev::Homogeneous) * std::sqrt(tail);
}

double error_weighted_norm(const TailCoeffs& tc, double eps) {
  const double p = 1.0 + 2.0 * eps;
  double acc = 0.0;
  for (long k = 1; k <= tc.n; ++k) {
    double w = std::pow(1.0 + double(tc.n + k) * double(tc.n + k), -0.5 * p) +
               std::pow(1.0 + double(tc.n + 1 - k) * double(tc.n + 1 - k), -0.5 * p);
    acc += w * (norm2(tc.plus[k - 1]) + norm2(tc.minus[k - 1]));
  }
  return std::sqrt(acc);
}

namespace {

struct StepChoice {
  double dt = 0;
  int per_record = 1;
};

// Largest step at or below the stability cap that lands records exactly on
// the uniform grid delta, so runs at different N share record times.
StepChoice choose_step(int N, double eps, double delta, bool halved) {
  double cap = dynamics::stability_cap(N, eps) * (halved ? 0.5 : 1.0);
  long m = std::max<long>(1, static_cast<long>(std::ceil(delta / cap - 1e-12)));
  return {delta / m, static_cast<int>(m)};
}

Trajectory run_flow(const data::InitialData& d, int N, double T, int n_records,
                    double eps, bool project, bool halved) {
  double delta = T / n_records;
  StepChoice sc = choose_step(N, eps, delta, halved);
  FlowParams p;
  p.dt = sc.dt;
  p.T = T;
  p.record_every = sc.per_record;
  p.eps = eps;
  p.project = project;
  return dynamics::integrate(data::make_initial(d, N), p);
}

}  // namespace

ErrorSweep error_norm_sweep(const data::InitialData& d, const std::vector<int>& Ns,
                            const SweepOptions& opt, int threads) {
  if (Ns.empty()) throw std::invalid_argument("error_norm_sweep: empty lattice list");
  if (!(opt.eps_exponent > 0))
    throw std::invalid_argument("error_norm_sweep: eps_exponent must be positive");
  ErrorSweep sweep;
  sweep.eps = opt.eps_exponent;

  auto job = [&](int N) {
    Trajectory traj = run_flow(d, N, opt.T, opt.n_records, 0.0, opt.project, false);
    SweepRow row;
    row.N = N;
    for (size_t i = 0; i < traj.states.size(); ++i) {
      TrigPoly p = interpolate(traj.states[i]);
      double v = error_weighted_norm(tail_coefficients(p, N), opt.eps_exponent);
      if (i == 0) row.initial_norm = v;
      if (v > row.sup_norm) {
        row.sup_norm = v;
        row.t_at_sup = traj.times[i];
      }
    }
    return row;
  };

  if (threads > 1) {
    std::vector<std::future<SweepRow>> futs;
    for (int N : Ns) futs.push_back(std::async(std::launch::async, job, N));
    for (auto& f : futs) sweep.rows.push_back(f.get());
  } else {
    for (int N : Ns) sweep.rows.push_back(job(N));
  }

  double first = sweep.rows.front().sup_norm, peak = 0.0;
  for (const auto& r : sweep.rows) peak = std::max(peak, r.sup_norm);
  sweep.bounded = peak <= 1.2 * first + 1e-14;
  sweep.decaying = sweep.rows.back().sup_norm < first;
  return sweep;
}

Residual residual_rn(const TrigPoly& S, int N) {
  Geometry g(N);
  if (S.n > g.n) throw std::invalid_argument("residual_rn: degree exceeds (N-1)/2");

  TrigPoly W1 = convolve(S, spectral::abs_power(S, 1.0), Product::Cross);
  TrigPoly W2 = convolve(S, spectral::abs_power(S, 2.0), Product::Cross);

  CoeffSeq r = seq_sub(CoeffSeq::from(alias_fold(W1, N)), CoeffSeq::from(W1));
  TrigPoly w2f = alias_fold(W2, N);
  for (long k = -g.n; k <= g.n; ++k) r.add(k, cplx(-1.0 / N) * w2f.at(k));

  Residual out;
  out.hhalf_norm = sobolev_norm(r, 0.5, Sobolev::Inhomogeneous);

  // I_N(S x D_N S) must equal (S x DS) + R_N.
  CoeffSeq lhs = CoeffSeq::from(alias_fold(convolve(S, spectral::dn_apply(S, N), Product::Cross), N));
  CoeffSeq rhs = CoeffSeq::from(W1);
  for (const auto& [k, v] : r.m) rhs.add(k, v);
  out.consistency_gap = max_coeff_gap(lhs, rhs);
  out.r = std::move(r);
  return out;
}

std::vector<TrigPoly> default_test_functions(int count) {
  std::vector<TrigPoly> fns;
  for (int m = 0; static_cast<int>(fns.size()) < count; ++m) {
    for (int type = 0; type < (m == 0 ? 1 : 2); ++type) {
      for (int comp = 0; comp < 3 && static_cast<int>(fns.size()) < count; ++comp) {
        TrigPoly p(std::max(m, 1));
        if (m == 0) {
          p.at(0)[comp] = 1.0;
        } else if (type == 0) {  // cos(m theta)
          p.at(m)[comp] = 0.5;
          p.at(-m)[comp] = 0.5;
        } else {  // sin(m theta)
          p.at(m)[comp] = cplx(0.0, -0.5);
          p.at(-m)[comp] = cplx(0.0, 0.5);
        }
        fns.push_back(std::move(p));
      }
    }
  }
  return fns;
}

std::vector<std::string> test_function_names(int count) {
  std::vector<std::string> names;
  const char* comps = "xyz";
  for (int m = 0; static_cast<int>(names.size()) < count; ++m)
    for (int type = 0; type < (m == 0 ? 1 : 2); ++type)
      for (int comp = 0; comp < 3 && static_cast<int>(names.size()) < count; ++comp) {
        if (m == 0)
          names.push_back(std::string(1, comps[comp]) + "_const");
        else
          names.push_back(std::string(1, comps[comp]) +
                          (type == 0 ? "_cos_" : "_sin_") + std::to_string(m));
      }
  return names;
}

WeakReport weak_residual(const Trajectory& traj, const std::vector<TrigPoly>& fns) {
  const size_t M = traj.states.size();
  if (M < 3) throw std::invalid_argument("weak_residual: need at least three snapshots");
  for (size_t i = 1; i < M; ++i) {
    double gap0 = traj.times[1] - traj.times[0];
    if (std::abs((traj.times[i] - traj.times[i - 1]) - gap0) > 1e-9 * std::max(1.0, gap0))
      throw std::invalid_argument("weak_residual: record grid must be uniform");
  }
  const double delta = traj.times[1] - traj.times[0];

  std::vector<TrigPoly> interp(M);
  for (size_t i = 0; i < M; ++i) interp[i] = interpolate(traj.states[i]);
  const long n = interp[0].n;

  WeakReport rep;
  rep.fn_names = test_function_names(static_cast<int>(fns.size()));
  rep.gap.assign(fns.size(), {});
  rep.sup_gap.assign(fns.size(), 0.0);

  for (size_t i = 1; i + 1 < M; ++i) {
    rep.times.push_back(traj.times[i]);
    TrigPoly dpdt(n);
    for (long k = -n; k <= n; ++k)
      dpdt.at(k) = cplx(0.5 / delta) * (interp[i + 1].at(k) - interp[i - 1].at(k));

    for (size_t f = 0; f < fns.size(); ++f) {
      const TrigPoly& phi = fns[f];
      // <phi, dS/dt>
      cplx a{};
      for (long k = -phi.n; k <= phi.n; ++k) {
        const Vec3c& pk = phi.at(k);
        Vec3c dk = dpdt.coeff(k);
        a += std::conj(pk.x) * dk.x + std::conj(pk.y) * dk.y + std::conj(pk.z) * dk.z;
      }
      // <D^{1/2} S, D^{1/2} (phi x S)> = sum |k| conj(Shat_k) . Uhat_k
      TrigPoly U = convolve(phi, interp[i], Product::Cross);
      cplx b{};
      for (long k = -n; k <= n; ++k) {
        if (k == 0) continue;
        const Vec3c& sk = interp[i].at(k);
        Vec3c uk = U.coeff(k);
        b += std::abs(double(k)) *
             (std::conj(sk.x) * uk.x + std::conj(sk.y) * uk.y + std::conj(sk.z) * uk.z);
      }
      double gap = std::abs(a - b);
      rep.gap[f].push_back(gap);
      rep.sup_gap[f] = std::max(rep.sup_gap[f], gap);
    }
  }
  return rep;
}

ConvTable convergence_study(const data::InitialData& d, const std::vector<int>& Ns,
                            const Reference& ref, const ConvOptions& opt, int threads) {
  if (Ns.empty()) throw std::invalid_argument("convergence_study: empty lattice list");
  int maxN = *std::max_element(Ns.begin(), Ns.end());
  if (ref.high_n && ref.N_ref <= 2 * maxN)
    throw std::invalid_argument("convergence_study: reference lattice must exceed twice the largest N");

  ConvTable table;
  const double delta = opt.T / opt.n_records;

  auto horizon_of = [&](const Trajectory& t) {
    double h0 = t.diag.front().h52, hz = 0.0;
    for (size_t i = 0; i < t.diag.size(); ++i)
      if (t.diag[i].h52 <= 2.0 * h0) hz = t.times[i];
    return hz;
  };

  auto sup_error = [&](const std::vector<TrigPoly>& ref_interp,
                       const Trajectory& run, double t_max) {
    TrigPoly first = interpolate(run.states[0]);
    const long n = first.n;
    double sup = 0.0;
    for (size_t i = 0; i < run.states.size(); ++i) {
      if (run.times[i] > t_max + 1e-12) break;
      TrigPoly p = interpolate(run.states[i]);
      TrigPoly diff(n);
      for (long k = -n; k <= n; ++k) diff.at(k) = ref_interp[i].coeff(k) - p.at(k);
      sup = std::max(sup, sobolev_norm(diff, 0.5, Sobolev::Inhomogeneous));
    }
    return sup;
  };

  if (ref.high_n) {
    Trajectory rtraj = run_flow(d, ref.N_ref, opt.T, opt.n_records, opt.eps, opt.project, true);
    table.N_ref = ref.N_ref;
    table.dt_ref = rtraj.params.dt;
    table.horizon = horizon_of(rtraj);
    table.T_used = std::min(opt.T, table.horizon);

    std::vector<TrigPoly> ref_interp(rtraj.states.size());
    for (size_t i = 0; i < rtraj.states.size(); ++i) ref_interp[i] = interpolate(rtraj.states[i]);

    auto job = [&](int N) {
      Trajectory run = run_flow(d, N, opt.T, opt.n_records, opt.eps, opt.project, false);
      return ConvRow{N, sup_error(ref_interp, run, table.T_used), run.params.dt};
    };
    if (threads > 1) {
      std::vector<std::future<ConvRow>> futs;
      for (int N : Ns) futs.push_back(std::async(std::launch::async, job, N));
      for (auto& f : futs) table.rows.push_back(f.get());
    } else {
      for (int N : Ns) table.rows.push_back(job(N));
    }
  } else {
    // Step-halving reference at the same lattice size.
    table.N_ref = 0;
    double window = opt.T;
    std::vector<Trajectory> halved;
    for (int N : Ns) {
      halved.push_back(run_flow(d, N, opt.T, opt.n_records, opt.eps, opt.project, true));
      window = std::min(window, horizon_of(halved.back()));
    }
    table.horizon = window;
    table.T_used = window;
    for (size_t i = 0; i < Ns.size(); ++i) {
      Trajectory run = run_flow(d, Ns[i], opt.T, opt.n_records, opt.eps, opt.project, false);
      std::vector<TrigPoly> ref_interp(halved[i].states.size());
      for (size_t j = 0; j < halved[i].states.size(); ++j)
        ref_interp[j] = interpolate(halved[i].states[j]);
      table.rows.push_back({Ns[i], sup_error(ref_interp, run, window), run.params.dt});
    }
  }

  std::vector<double> lx, ly;
  for (const auto& r : table.rows)
    if (r.sup_err > 0) {
      lx.push_back(std::log(double(r.N)));
      ly.push_back(std::log(r.sup_err));
    }
  table.slope = lx.size() >= 2 ? -spectral::fit_slope(lx, ly) : 0.0;
  return table;
}

}  // namespace halfwave::analysis
