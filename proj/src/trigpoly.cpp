#include "halfwave/trigpoly.hpp"

#include <algorithm>
#include <cmath>

#include "halfwave/dft.hpp"
#include "halfwave/util.hpp"

namespace halfwave::spectral {

using lattice::fold_bin;
using lattice::Geometry;

double TrigPoly::max_abs() const {
  double m = 0.0;
  for (const Vec3c& v : c)
    for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

bool TrigPoly::is_real(double tol) const {
  double scale = std::max(1.0, max_abs());
  for (long k = 0; k <= n; ++k) {
    const Vec3c& a = at(k);
    const Vec3c& b = at(-k);
    for (int i = 0; i < 3; ++i)
      if (std::abs(b[i] - std::conj(a[i])) > tol * scale) return false;
  }
  return true;
}

void CoeffSeq::add(long k, const Vec3c& v) {
  auto [it, inserted] = m.try_emplace(k, v);
  if (!inserted) it->second += v;
}

Vec3c CoeffSeq::coeff(long k) const {
  auto it = m.find(k);
  return it == m.end() ? Vec3c{} : it->second;
}

CoeffSeq CoeffSeq::from(const TrigPoly& p) {
  CoeffSeq s;
  for (long k = -p.n; k <= p.n; ++k) s.m.emplace(k, p.at(k));
  return s;
}

TrigPoly CoeffSeq::to_poly(long deg) const {
  TrigPoly p(deg);
  for (const auto& [k, v] : m) {
    if (!p.in_range(k)) throw std::invalid_argument("coefficient outside [-n, n]");
    p.at(k) += v;
  }
  return p;
}

CoeffSeq seq_sub(const CoeffSeq& a, const CoeffSeq& b) {
  CoeffSeq out = a;
  for (const auto& [k, v] : b.m) out.add(k, cplx(-1.0) * v);
  return out;
}

double max_coeff_gap(const CoeffSeq& a, const CoeffSeq& b) {
  double gap = 0.0;
  for (const auto& [k, v] : a.m) gap = std::max(gap, cnorm(v - b.coeff(k)));
  for (const auto& [k, v] : b.m) gap = std::max(gap, cnorm(a.coeff(k) - v));
  return gap;
}

TrigPoly interpolate(const Field& f) {
  const int N = f.N();
  TrigPoly p(f.geom.n);
  cvec buf(N), hat(N);
  for (int comp = 0; comp < 3; ++comp) {
    for (int j = 0; j < N; ++j) buf[j] = f.v[j][comp];
    dft_forward(buf, hat);
    for (int b = 0; b < N; ++b) p.at(fold_bin(b, N))[comp] = hat[b] / static_cast<double>(N);
  }
  return p;
}

std::vector<Vec3c> sample_complex(const TrigPoly& p, int N) {
  Geometry g(N);
  if (2 * p.n + 1 > N)
    throw std::invalid_argument("sample: lattice too coarse for this degree");
  std::vector<Vec3c> out(N);
  cvec hat(N), buf(N);
  for (int comp = 0; comp < 3; ++comp) {
    std::fill(hat.begin(), hat.end(), cplx{});
    for (long k = -p.n; k <= p.n; ++k) hat[(k % N + N) % N] = p.at(k)[comp];
    dft_backward(hat, buf);
    for (int j = 0; j < N; ++j) out[j][comp] = buf[j];
  }
  return out;
}

Field sample_real(const TrigPoly& p, int N) {
  auto vals = sample_complex(p, N);
  Field f((Geometry(N)));
  for (int j = 0; j < N; ++j) f.v[j] = real_part(vals[j]);
  return f;
}

Vec3c eval(const TrigPoly& p, double theta) {
  Vec3c acc;
  for (long k = -p.n; k <= p.n; ++k) acc += std::polar(1.0, k * theta) * p.at(k);
  return acc;
}

Vec3 eval_real(const TrigPoly& p, double theta) { return real_part(eval(p, theta)); }

TrigPoly alias_fold(const CoeffSeq& u, int N) {
  Geometry g(N);
  TrigPoly p(g.n);
  for (const auto& [k, v] : u.m) p.at(fold_bin(k, N)) += v;
  return p;
}

TrigPoly alias_fold(const TrigPoly& w, int N) {
  Geometry g(N);
  TrigPoly p(g.n);
  for (long k = -w.n; k <= w.n; ++k) p.at(fold_bin(k, N)) += w.at(k);
  return p;
}

CoeffSeq project(const CoeffSeq& u, long n, Region r) {
  CoeffSeq out;
  for (const auto& [k, v] : u.m) {
    bool keep = r == Region::Low ? (-n <= k && k <= n)
              : r == Region::TailPlus ? (k > n)
                                      : (k < -n);
    if (keep) out.m.emplace(k, v);
  }
  return out;
}

namespace {
Vec3c product_term(const Vec3c& a, const Vec3c& b, Product kind) {
  switch (kind) {
    case Product::Cross: return cross(a, b);
    case Product::Dot: return Vec3c{cdot(a, b), 0.0, 0.0};
    case Product::Componentwise: return Vec3c{a.x * b.x, a.y * b.y, a.z * b.z};
  }
  throw std::logic_error("unknown product kind");
}
}  // namespace

TrigPoly convolve(const TrigPoly& f, const TrigPoly& g, Product kind) {
  TrigPoly out(f.n + g.n);
  for (long m = -out.n; m <= out.n; ++m) {
    Vec3c acc;
    long lo = std::max(-f.n, m - g.n), hi = std::min(f.n, m + g.n);
    for (long j = lo; j <= hi; ++j) acc += product_term(f.at(j), g.at(m - j), kind);
    out.at(m) = acc;
  }
  return out;
}

TrigPoly tilde_product(const TrigPoly& f, const TrigPoly& g, Product kind, int N) {
  Geometry geo(N);
  if (f.n > geo.n || g.n > geo.n)
    throw std::invalid_argument("tilde_product: degree exceeds (N-1)/2");
  auto fv = sample_complex(f, N);
  auto gv = sample_complex(g, N);
  TrigPoly p(geo.n);
  cvec buf(N), hat(N);
  for (int comp = 0; comp < 3; ++comp) {
    for (int j = 0; j < N; ++j) buf[j] = product_term(fv[j], gv[j], kind)[comp];
    dft_forward(buf, hat);
    for (int b = 0; b < N; ++b) p.at(fold_bin(b, N))[comp] = hat[b] / static_cast<double>(N);
  }
  return p;
}

TrigPoly tilde_product_folded(const TrigPoly& f, const TrigPoly& g, Product kind, int N) {
  Geometry geo(N);
  if (f.n > geo.n || g.n > geo.n)
    throw std::invalid_argument("tilde_product: degree exceeds (N-1)/2");
  return alias_fold(convolve(f, g, kind), N);
}

namespace {
double sobolev_weight(long k, double s, Sobolev kind) {
  if (kind == Sobolev::Inhomogeneous) return std::pow(1.0 + double(k) * double(k), s);
  if (s < 0.0) throw std::invalid_argument("negative order needs the inhomogeneous norm");
  if (k == 0) return s == 0.0 ? 1.0 : 0.0;
  return std::pow(std::abs(double(k)), 2.0 * s);
}
}  // namespace

double sobolev_norm(const TrigPoly& p, double s, Sobolev kind) {
  double acc = 0.0;
  for (long k = -p.n; k <= p.n; ++k) acc += sobolev_weight(k, s, kind) * norm2(p.at(k));
  return std::sqrt(acc);
}

double sobolev_norm(const CoeffSeq& u, double s, Sobolev kind) {
  double acc = 0.0;
  for (const auto& [k, v] : u.m) acc += sobolev_weight(k, s, kind) * norm2(v);
  return std::sqrt(acc);
}

double dn_symbol(long k, int N) {
  long a = std::labs(k);
  if (2 * a + 1 <= N) return lattice::mu(k, N);
  return 0.5 * static_cast<double>(a);
}

TrigPoly dn_apply(const TrigPoly& p, int N) {
  Geometry g(N);
  if (p.n > g.n) throw std::invalid_argument("dn_apply: degree exceeds (N-1)/2");
  TrigPoly out(p.n);
  for (long k = -p.n; k <= p.n; ++k) out.at(k) = cplx(dn_symbol(k, N)) * p.at(k);
  return out;
}

CoeffSeq dn_apply(const CoeffSeq& u, int N) {
  Geometry g(N);
  CoeffSeq out;
  for (const auto& [k, v] : u.m) out.m.emplace(k, cplx(dn_symbol(k, N)) * v);
  return out;
}

TrigPoly abs_power(const TrigPoly& p, double s) {
  if (s < 0.0) throw std::invalid_argument("abs_power: negative order is singular at k = 0");
  TrigPoly out(p.n);
  for (long k = -p.n; k <= p.n; ++k) {
    double w = k == 0 ? (s == 0.0 ? 1.0 : 0.0) : std::pow(std::abs(double(k)), s);
    out.at(k) = cplx(w) * p.at(k);
  }
  return out;
}

CoeffSeq abs_power(const CoeffSeq& u, double s) {
  if (s < 0.0) throw std::invalid_argument("abs_power: negative order is singular at k = 0");
  CoeffSeq out;
  for (const auto& [k, v] : u.m) {
    double w = k == 0 ? (s == 0.0 ? 1.0 : 0.0) : std::pow(std::abs(double(k)), s);
    out.m.emplace(k, cplx(w) * v);
  }
  return out;
}

CoeffSeq kpv_commutator(const TrigPoly& S, const TrigPoly& U) {
  CoeffSeq out;
  auto root = [](long k) { return std::sqrt(std::abs(double(k))); };
  for (long j = -S.n; j <= S.n; ++j)
    for (long k = -U.n; k <= U.n; ++k) {
      double w = root(j + k) - root(j) - root(k);
      if (w == 0.0) continue;
      out.add(j + k, cplx(w) * cross(S.at(j), U.at(k)));
    }
  return out;
}

double piecewise_distance(const Field& S) {
  const int N = S.N();
  TrigPoly p = interpolate(S);
  double acc = 0.0;
  for (long k = -p.n; k <= p.n; ++k)
    acc += norm2(p.at(k)) * (1.0 - sinc(kPi * k / N));
  return std::sqrt(2.0 * acc);
}

Vec3c sigma_coeff(const TrigPoly& interp, int N, long k) {
  return cplx(sinc(kPi * k / N)) * interp.coeff(fold_bin(k, N));
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_slope: need at least two points");
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
  mx /= x.size();
  my /= y.size();
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

InterpErrorReport interp_error_report(const CoeffSeq& f, double eps, double s,
                                      const std::vector<int>& Ns) {
  if (!(eps > 0.0)) throw std::invalid_argument("interp_error_report: eps must be positive");
  if (s >= 0.5 + eps)
    throw std::invalid_argument("interp_error_report: need s < 1/2 + eps");
  if (Ns.size() < 2) throw std::invalid_argument("interp_error_report: need >= 2 lattice sizes");

  InterpErrorReport rep;
  rep.eps = eps;
  rep.s = s;
  rep.f_norm = sobolev_norm(f, 0.5 + eps, Sobolev::Inhomogeneous);

  std::vector<double> lx, ly;
  for (int N : Ns) {
    TrigPoly folded = alias_fold(f, N);
    CoeffSeq err = seq_sub(f, CoeffSeq::from(folded));
    InterpErrorRow row;
    row.N = N;
    row.interp_norm = sobolev_norm(folded, 0.5 + eps, Sobolev::Inhomogeneous);
    row.err = sobolev_norm(err, s, Sobolev::Inhomogeneous);
    rep.rows.push_back(row);
    if (row.err > 0.0) {
      lx.push_back(std::log(double(N)));
      ly.push_back(std::log(row.err));
    }
  }

  rep.fitted_order = lx.size() >= 2 ? -fit_slope(lx, ly) : 0.0;
  double lo = rep.rows[0].interp_norm, hi = lo;
  for (const auto& r : rep.rows) { lo = std::min(lo, r.interp_norm); hi = std::max(hi, r.interp_norm); }
  rep.interp_bounded = hi <= 1.5 * lo;
  rep.order_ok = rep.fitted_order >= (1.0 + eps - s) - 0.2;
  return rep;
}

}  // namespace halfwave::spectral
