#include "halfwave/lattice.hpp"

#include <cmath>

#include "halfwave/dft.hpp"
#include "halfwave/util.hpp"

namespace halfwave::lattice {

Geometry::Geometry(int nodes) : N(nodes), n((nodes - 1) / 2), h(kTwoPi / nodes) {
  if (nodes < 3 || nodes % 2 == 0)
    throw std::invalid_argument("lattice size must be odd and >= 3");
}

double Geometry::theta(int k) const { return h * k; }

cplx Geometry::node(int k) const { return std::polar(1.0, theta(k)); }

double Geometry::chord2(int k, int l) const {
  double s = std::sin(kPi * (k - l) / N);
  return 4.0 * s * s;
}

Spins Spins::adopt(Field field, double tol) {
  double dev = sphere_deviation(field);
  if (!(dev <= tol))
    throw std::invalid_argument("spin data off the unit sphere (deviation " +
                                std::to_string(dev) + ")");
  return Spins{std::move(field)};
}

double Spins::sphere_deviation(const Field& field) {
  double dev = 0.0;
  for (const Vec3& s : field.v) dev = std::max(dev, std::abs(norm(s) - 1.0));
  return dev;
}

double mu(long k, int N) {
  long a = std::labs(k);
  if (2 * a + 1 > N) throw std::invalid_argument("mu: mode outside [-n, n]");
  return static_cast<double>(a * (N - a)) / static_cast<double>(N);
}

double mu_bin(int m, int N) {
  return static_cast<double>(static_cast<long>(m) * (N - m)) / static_cast<double>(N);
}

double mu_max(int N) { return mu((N - 1) / 2, N); }

std::vector<double> spectrum_bins(int N) {
  Geometry g(N);  // validates N
  std::vector<double> out(N);
  for (int m = 0; m < N; ++m) out[m] = mu_bin(m, N);
  return out;
}

std::vector<double> spectrum_folded(int N) {
  Geometry g(N);
  std::vector<double> out(N);
  for (long k = -g.n; k <= g.n; ++k) out[k + g.n] = mu(k, N);
  return out;
}

cplx fourier_mode(int N, long k, int j) {
  return std::polar(1.0 / std::sqrt(static_cast<double>(N)), kTwoPi * k * j / N);
}

long fold_bin(long m, int N) {
  long r = m % N;
  if (r < 0) r += N;
  return r <= (N - 1) / 2 ? r : r - N;
}

Multiplier Multiplier::nabla_power(double s) { return {Kind::NablaPower, s, 0}; }
Multiplier Multiplier::bessel_power(double s) { return {Kind::BesselPower, s, 0}; }
Multiplier Multiplier::laplacian() { return {Kind::Laplacian, 1.0, 0}; }
Multiplier Multiplier::diff_plus() { return {Kind::DiffPlus, 1.0, 0}; }
Multiplier Multiplier::diff_minus() { return {Kind::DiffMinus, 1.0, 0}; }
Multiplier Multiplier::translate(long j) { return {Kind::Translate, 0.0, j}; }

cplx Multiplier::symbol(long k, int N) const {
  const double h = kTwoPi / N;
  switch (kind) {
    case Kind::NablaPower:
      if (s < 0.0) throw std::invalid_argument("negative power of |nabla|_N is singular");
      return std::pow(mu(k, N), s);
    case Kind::BesselPower: {
      double m = mu(k, N);
      return std::pow(1.0 + m * m, 0.5 * s);
    }
    case Kind::Laplacian: {
      double sc = sinc(0.5 * h * k);
      return -static_cast<double>(k) * static_cast<double>(k) * sc * sc;
    }
    case Kind::DiffPlus:
      return cplx(0.0, k) * std::polar(1.0, 0.5 * h * k) * sinc(0.5 * h * k);
    case Kind::DiffMinus:
      return cplx(0.0, -static_cast<double>(k)) * std::polar(1.0, -0.5 * h * k) *
             sinc(0.5 * h * k);
    case Kind::Translate:
      return std::polar(1.0, h * k * shift);
  }
  throw std::logic_error("unknown multiplier kind");
}

Field apply(const Field& f, const Multiplier& m) {
  const int N = f.N();
  Field out(f.geom);
  cvec buf(N), hat(N), back(N);
  std::vector<cplx> symbols(N);
  for (int b = 0; b < N; ++b) symbols[b] = m.symbol(fold_bin(b, N), N);
  for (int comp = 0; comp < 3; ++comp) {
    for (int j = 0; j < N; ++j) buf[j] = f.v[j][comp];
    dft_forward(buf, hat);
    for (int b = 0; b < N; ++b) hat[b] *= symbols[b];
    dft_backward(hat, back);
    for (int j = 0; j < N; ++j) out.v[j][comp] = back[j].real() / N;
  }
  return out;
}

Field nabla(const Field& f) { return apply(f, Multiplier::nabla_power(1.0)); }

double inner(const Field& a, const Field& b) {
  if (a.N() != b.N()) throw std::invalid_argument("inner: size mismatch");
  double acc = 0.0;
  for (int j = 0; j < a.N(); ++j) acc += dot(a.v[j], b.v[j]);
  return acc / a.N();
}

double hamiltonian(const Field& S) {
  const int N = S.N();
  double acc = 0.0;
  for (int k = 0; k < N; ++k)
    for (int l = k + 1; l < N; ++l)
      acc += norm2(S.v[k] - S.v[l]) / S.geom.chord2(k, l);
  return 2.0 * acc / N;
}

double hamiltonian_spectral(const Field& S) { return S.N() * inner(S, nabla(S)); }

Vec3 total_spin(const Field& f) {
  Vec3 acc;
  for (const Vec3& s : f.v) acc += s;
  return acc;
}

double norm(const Field& f, Norm kind) {
  const int N = f.N();
  if (kind == Norm::L2) return std::sqrt(inner(f, f));

  // Spectral weights on the interpolant coefficients.
  cvec buf(N), hat(N);
  double acc = 0.0;
  std::vector<double> w(N);
  const double h = kTwoPi / N;
  for (int b = 0; b < N; ++b) {
    long k = fold_bin(b, N);
    double m = mu(k, N);
    if (kind == Norm::Hhalf) {
      w[b] = 1.0 + m;
    } else {  // H52: 1 + |M_{D+}(k)|^4 mu_k, |M_{D+}(k)| = |k| |sinc(k h / 2)|
      double amp = std::abs(static_cast<double>(k)) * std::abs(sinc(0.5 * h * k));
      w[b] = 1.0 + amp * amp * amp * amp * m;
    }
  }
  for (int comp = 0; comp < 3; ++comp) {
    for (int j = 0; j < N; ++j) buf[j] = f.v[j][comp];
    dft_forward(buf, hat);
    for (int b = 0; b < N; ++b) acc += w[b] * std::norm(hat[b] / static_cast<double>(N));
  }
  return std::sqrt(acc);
}

}  // namespace halfwave::lattice
