#include "halfwave/dynamics.hpp"

#include <cmath>
#include <string>

#include "halfwave/util.hpp"

namespace halfwave::dynamics {

using lattice::Multiplier;

double stability_cap(int N, double eps) {
  return 1.0 / (4.0 * lattice::mu_max(N) * std::max(1.0, eps * N));
}

Field rhs_spin(const Field& S, double eps) {
  Field a = lattice::nabla(S);
  Field out(S.geom);
  for (int j = 0; j < S.N(); ++j) out.v[j] = cross(S.v[j], a.v[j]);
  if (eps != 0.0) {
    Field d = lattice::apply(S, Multiplier::laplacian());
    for (int j = 0; j < S.N(); ++j) out.v[j] += eps * d.v[j];
  }
  return out;
}

namespace {

void axpy(Field& y, double a, const Field& x) {
  for (size_t j = 0; j < y.v.size(); ++j) y.v[j] += a * x.v[j];
}

bool all_finite(const Field& f) {
  for (const Vec3& s : f.v)
    for (int i = 0; i < 3; ++i)
      if (!std::isfinite(s[i])) return false;
  return true;
}

Diagnostics measure(const Field& S, double t) {
  Diagnostics d;
  d.t = t;
  d.energy = lattice::hamiltonian(S);
  d.l2 = lattice::norm(S, lattice::Norm::L2);
  d.hhalf = lattice::norm(S, lattice::Norm::Hhalf);
  d.h52 = lattice::norm(S, lattice::Norm::H52);
  d.sphere_dev = Spins::sphere_deviation(S);
  d.total_spin = lattice::total_spin(S);
  return d;
}

}  // namespace

Trajectory integrate(const Spins& S0, const FlowParams& p) {
  const int N = S0.f.N();
  if (p.dt <= 0.0 || p.T < 0.0 || p.record_every < 1)
    throw std::invalid_argument("integrate: bad flow parameters");
  if (p.project && p.eps != 0.0)
    throw std::invalid_argument("integrate: projection requires eps = 0");
  double cap = stability_cap(N, p.eps);
  if (p.dt > cap * (1.0 + 1e-12) && !p.allow_dt_override)
    throw std::invalid_argument("integrate: dt " + std::to_string(p.dt) +
                                " above stability cap " + std::to_string(cap));
  long steps = std::lround(p.T / p.dt);
  if (std::abs(steps * p.dt - p.T) > 1e-9 * std::max(1.0, p.T))
    throw std::invalid_argument("integrate: T must be an integer multiple of dt");

  Trajectory traj;
  traj.N = N;
  traj.params = p;

  Field S = S0.f;
  auto record = [&](long step) {
    double t = step * p.dt;
    traj.times.push_back(t);
    traj.states.push_back(S);
    traj.diag.push_back(measure(S, t));
  };
  record(0);

  Field k1(S.geom), k2(S.geom), k3(S.geom), k4(S.geom), tmp(S.geom);
  for (long step = 1; step <= steps; ++step) {
    k1 = rhs_spin(S, p.eps);
    tmp = S;
    axpy(tmp, 0.5 * p.dt, k1);
    k2 = rhs_spin(tmp, p.eps);
    tmp = S;
    axpy(tmp, 0.5 * p.dt, k2);
    k3 = rhs_spin(tmp, p.eps);
    tmp = S;
    axpy(tmp, p.dt, k3);
    k4 = rhs_spin(tmp, p.eps);
    axpy(S, p.dt / 6.0, k1);
    axpy(S, p.dt / 3.0, k2);
    axpy(S, p.dt / 3.0, k3);
    axpy(S, p.dt / 6.0, k4);
    if (p.project)
      for (Vec3& s : S.v) s *= 1.0 / norm(s);
    if (!all_finite(S))
      throw std::runtime_error("integrate: non-finite state at step " + std::to_string(step));
    if (step % p.record_every == 0 || step == steps) record(step);
  }
  return traj;
}

ViscousIdentity viscous_identity_check(const Field& S, double eps) {
  using lattice::apply;
  using lattice::inner;

  auto dplus = [](const Field& f) { return apply(f, Multiplier::diff_plus()); };
  auto shift = [](const Field& f, long j) { return apply(f, Multiplier::translate(j)); };

  Field A = lattice::nabla(S);
  Field Sdot = rhs_spin(S, eps);
  Field Adot = lattice::nabla(Sdot);

  Field d2S = dplus(dplus(S));
  Field d2A = dplus(dplus(A));
  Field d2Sdot = dplus(dplus(Sdot));
  Field d2Adot = dplus(dplus(Adot));
  Field d3S = dplus(d2S);
  Field d3A = dplus(d2A);

  ViscousIdentity r;
  r.lhs = 0.5 * (inner(d2Adot, d2S) + inner(d2A, d2Sdot)) + eps * inner(d3A, d3S);

  Field cross_term(S.geom);
  for (int j = 0; j < S.N(); ++j) cross_term.v[j] = cross(S.v[j], A.v[j]);
  Field d2cross = dplus(dplus(cross_term));
  r.rhs = inner(d2A, d2cross);

  // S x A = -(A x S); expanding D+^2(A x S) with A as the leading factor,
  //   D+^2(A x S) = A x D+^2 S + 2 (D+ A) x (D+ T S) + (D+^2 A) x (T^2 S),
  // the top term pairs D+^2 A with its own cross product and drops out.
  Field dA = dplus(A);
  Field dTS = dplus(shift(S, 1));
  Field t2S = shift(S, 2);
  auto paired = [&](const Field& u, const Field& w) {
    Field c(S.geom);
    for (int j = 0; j < S.N(); ++j) c.v[j] = cross(u.v[j], w.v[j]);
    return inner(d2A, c);
  };
  double term0 = paired(A, d2S);
  double term1 = paired(dA, dTS);
  r.top_term = -paired(d2A, t2S);
  r.rhs_leibniz = -(term0 + 2.0 * term1);

  r.residual = r.lhs - r.rhs;
  r.leibniz_gap = r.rhs - r.rhs_leibniz;
  r.scale = std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
  return r;
}

}  // namespace halfwave::dynamics
