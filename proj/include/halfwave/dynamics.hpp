#pragma once

// Fixed-step RK4 for the lattice spin flow
//     dS/dt = S x |nabla|_N S + eps Delta_N S,
// with optional per-step renormalization onto the sphere (eps = 0 only),
// conserved-quantity diagnostics along the way, and the instantaneous
// dissipation identity check used for the viscous flow.

#include <vector>

#include "halfwave/lattice.hpp"

namespace halfwave::dynamics {

using lattice::Field;
using lattice::Spins;

// dt ceiling 1 / (4 mu_max max(1, eps N)); mu_max = mu_n is about N/4.
double stability_cap(int N, double eps);

Field rhs_spin(const Field& S, double eps);

struct FlowParams {
  double dt = 1e-3;
  double T = 1.0;
  int record_every = 1;
  double eps = 0.0;
  bool project = false;            // renormalize nodes after each full step
  bool allow_dt_override = false;  // accept dt above the stability cap
};

struct Diagnostics {
  double t = 0;
  double energy = 0;      // pair interaction sum
  double l2 = 0;
  double hhalf = 0;
  double h52 = 0;
  double sphere_dev = 0;  // max | |S_k| - 1 |
  Vec3 total_spin;
};

struct Trajectory {
  int N = 0;
  FlowParams params;
  std::vector<double> times;   // recorded times
  std::vector<Field> states;   // one per recorded time
  std::vector<Diagnostics> diag;
};

// Throws: projection combined with eps > 0; dt above the cap without the
// override flag; T not an integer number of steps; non-finite state values.
Trajectory integrate(const Spins& S0, const FlowParams& p);

struct ViscousIdentity {
  double lhs = 0;          // 1/2 d/dt <D+^2|nabla|S, D+^2 S> + eps <D+^3|nabla|S, D+^3 S>
  double rhs = 0;          // <D+^2(|nabla|S), D+^2(S x |nabla|S)>
  double rhs_leibniz = 0;  // the k = 0,1 terms of the discrete Leibniz expansion
  double top_term = 0;     // k = 2 term, vanishes since a.(a x b) = 0
  double residual = 0;     // lhs - rhs
  double leibniz_gap = 0;  // rhs - rhs_leibniz
  double scale = 1;        // max(|lhs|, |rhs|, 1e-300)
};
ViscousIdentity viscous_identity_check(const Field& S, double eps);

}  // namespace halfwave::dynamics
