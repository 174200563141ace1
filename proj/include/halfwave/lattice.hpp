#pragma once

// Spin lattice on the N-th roots of unity, N odd. Provides the nonlocal
// difference operator |nabla|_N with its closed-form spectrum, the finite
// difference operators D_+, D_-, Delta_N and translations as Fourier
// multipliers, the pair interaction energy, and the lattice Sobolev norms.

#include <stdexcept>
#include <vector>

#include "halfwave/vec3.hpp"

namespace halfwave::lattice {

struct Geometry {
  int N = 3;   // node count, odd, >= 3
  int n = 1;   // (N - 1) / 2
  double h;    // angular spacing 2 pi / N

  explicit Geometry(int nodes);
  double theta(int k) const;
  cplx node(int k) const;              // z_k = exp(i theta_k)
  double chord2(int k, int l) const;   // |z_k - z_l|^2 = 4 sin^2(pi (k-l)/N)
};

struct Field {
  Geometry geom;
  std::vector<Vec3> v;

  explicit Field(const Geometry& g) : geom(g), v(g.N) {}
  explicit Field(int nodes) : geom(nodes), v(geom.N) {}
  int N() const { return geom.N; }
};

// Unit-length spin data; adoption checks the sphere constraint.
struct Spins {
  Field f;

  static Spins adopt(Field field, double tol = 1e-12);
  static double sphere_deviation(const Field& field);  // max | |S_k| - 1 |
};

// Eigenvalues mu_k = |k| (1 - |k|/N) of |nabla|_N.
double mu(long k, int N);                     // requires |k| <= (N-1)/2
double mu_bin(int m, int N);                  // DFT bin form m (N - m) / N, m in [0, N)
double mu_max(int N);                         // attained at |k| = n
std::vector<double> spectrum_bins(int N);     // listed by bin m = 0..N-1
std::vector<double> spectrum_folded(int N);   // listed by k = -n..n (entry k + n)
cplx fourier_mode(int N, long k, int j);      // eigenvector entry z_j^k / sqrt(N)

long fold_bin(long m, int N);                 // representative of m mod N in [-n, n]

struct Multiplier {
  enum class Kind { NablaPower, BesselPower, Laplacian, DiffPlus, DiffMinus, Translate };

  Kind kind = Kind::NablaPower;
  double s = 1.0;   // exponent for the power kinds
  long shift = 1;   // node offset for Translate

  static Multiplier nabla_power(double s);
  static Multiplier bessel_power(double s);
  static Multiplier laplacian();
  static Multiplier diff_plus();
  static Multiplier diff_minus();
  static Multiplier translate(long j);

  cplx symbol(long k, int N) const;  // k in [-n, n]
};

Field apply(const Field& f, const Multiplier& m);
Field nabla(const Field& f);          // |nabla|_N, i.e. nabla_power(1)

// (1/N)-weighted inner product and derived quantities.
double inner(const Field& a, const Field& b);
double hamiltonian(const Field& S);           // (1/N) sum_{k != l} |S_k - S_l|^2 / |z_k - z_l|^2
double hamiltonian_spectral(const Field& S);  // N <S, |nabla|_N S>
Vec3 total_spin(const Field& f);              // sum_k S_k

enum class Norm { L2, Hhalf, H52 };
double norm(const Field& f, Norm kind);

}  // namespace halfwave::lattice
