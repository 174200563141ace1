#pragma once

// Trigonometric interpolation attached to the odd lattice: polynomials in
// Pol_n, two-sided coefficient sequences, the aliasing operator I_N and its
// tail projections, pointwise products, Sobolev norms, the conjugated
// operator D_N, the half-derivative commutator, and the distance to the
// piecewise constant extension.

#include <map>
#include <vector>

#include "halfwave/lattice.hpp"

namespace halfwave::spectral {

using lattice::Field;

// Coefficients c_k for k = -n..n, stored at index k + n.
struct TrigPoly {
  long n = 0;
  std::vector<Vec3c> c;

  TrigPoly() : c(1) {}
  explicit TrigPoly(long deg) : n(deg), c(2 * deg + 1) {}

  Vec3c& at(long k) { return c[k + n]; }
  const Vec3c& at(long k) const { return c[k + n]; }
  bool in_range(long k) const { return -n <= k && k <= n; }
  Vec3c coeff(long k) const { return in_range(k) ? c[k + n] : Vec3c{}; }

  double max_abs() const;
  bool is_real(double tol = 1e-11) const;  // c_{-k} == conj(c_k)
};

// Sparse two-sided coefficient sequence (finitely supported).
struct CoeffSeq {
  std::map<long, Vec3c> m;

  void add(long k, const Vec3c& v);
  Vec3c coeff(long k) const;
  static CoeffSeq from(const TrigPoly& p);
  TrigPoly to_poly(long deg) const;  // rejects support outside [-deg, deg]
};

CoeffSeq seq_sub(const CoeffSeq& a, const CoeffSeq& b);
double max_coeff_gap(const CoeffSeq& a, const CoeffSeq& b);

TrigPoly interpolate(const Field& f);  // degree (N-1)/2, matches f at the nodes
std::vector<Vec3c> sample_complex(const TrigPoly& p, int N);  // needs N >= 2 deg + 1
Field sample_real(const TrigPoly& p, int N);
Vec3c eval(const TrigPoly& p, double theta);
Vec3 eval_real(const TrigPoly& p, double theta);

// Aliasing operator I_N in coefficient space: c_k = sum_j u_{k + j N}.
TrigPoly alias_fold(const CoeffSeq& u, int N);
TrigPoly alias_fold(const TrigPoly& w, int N);

enum class Region { Low, TailPlus, TailMinus };  // P_n, P_{n,+}^perp, P_{n,-}^perp
CoeffSeq project(const CoeffSeq& u, long n, Region r);

enum class Product { Cross, Dot, Componentwise };
// Exact coefficient convolution; result degree is deg f + deg g.
// Dot products land in component 0 of the result.
TrigPoly convolve(const TrigPoly& f, const TrigPoly& g, Product kind);
// Interpolation of the pointwise product: sample at the N nodes, multiply,
// interpolate back. Requires deg f, deg g <= (N-1)/2.
TrigPoly tilde_product(const TrigPoly& f, const TrigPoly& g, Product kind, int N);
// Same object through the fold P_n + zbar^N P_+ + z^N P_- of the exact product.
TrigPoly tilde_product_folded(const TrigPoly& f, const TrigPoly& g, Product kind, int N);

enum class Sobolev { Homogeneous, Inhomogeneous };
double sobolev_norm(const TrigPoly& p, double s, Sobolev kind);
double sobolev_norm(const CoeffSeq& u, double s, Sobolev kind);

// D_N: multiplier mu_{|k|} on Pol_n, extended by |k|/2 beyond degree n.
double dn_symbol(long k, int N);
TrigPoly dn_apply(const TrigPoly& p, int N);  // rejects deg p > (N-1)/2
CoeffSeq dn_apply(const CoeffSeq& u, int N);
// Homogeneous multiplier |k|^s (the continuum |nabla|^s), s >= 0.
TrigPoly abs_power(const TrigPoly& p, double s);
CoeffSeq abs_power(const CoeffSeq& u, double s);

// |nabla|^{1/2}(S x U) - (|nabla|^{1/2} S) x U - S x (|nabla|^{1/2} U).
CoeffSeq kpv_commutator(const TrigPoly& S, const TrigPoly& U);

// L^2(circle) distance between the interpolant and the piecewise constant
// extension of the samples, in closed form.
double piecewise_distance(const Field& S);
// Fourier coefficient of the piecewise constant extension, any k.
Vec3c sigma_coeff(const TrigPoly& interp, int N, long k);

struct InterpErrorRow {
  int N = 0;
  double interp_norm = 0;  // || I_N f ||_{H^{1/2+eps}}
  double err = 0;          // || f - I_N f ||_{H^s}
};
struct InterpErrorReport {
  double eps = 0.1, s = 0.0;
  double f_norm = 0.0;  // || f ||_{H^{1/2+eps}}
  std::vector<InterpErrorRow> rows;
  double fitted_order = 0.0;
  bool interp_bounded = false;
  bool order_ok = false;  // fitted_order >= (1 + eps - s) - 0.2
};
InterpErrorReport interp_error_report(const CoeffSeq& f, double eps, double s,
                                      const std::vector<int>& Ns);

// Least squares slope of y against x (used for decay-order fits).
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace halfwave::spectral
