#include "halfwave/initial_data.hpp"

#include <cmath>
#include <random>

#include "halfwave/util.hpp"

namespace halfwave::data {

using lattice::Field;
using lattice::Geometry;
using lattice::Spins;

namespace {

double trig_poly(double theta, double c0, const std::vector<double>& cos_c,
                 const std::vector<double>& sin_c) {
  double v = c0;
  for (size_t m = 0; m < cos_c.size(); ++m) v += cos_c[m] * std::cos((m + 1) * theta);
  for (size_t m = 0; m < sin_c.size(); ++m) v += sin_c[m] * std::sin((m + 1) * theta);
  return v;
}

Field build(const GreatCircle& d, int N) {
  Field f((Geometry(N)));
  for (int j = 0; j < N; ++j) {
    double t = f.geom.theta(j);
    f.v[j] = {std::cos(d.m * t), std::sin(d.m * t), 0.0};
  }
  return f;
}

Field build(const TiltedSmooth& d, int N) {
  Field f((Geometry(N)));
  for (int j = 0; j < N; ++j) {
    double t = f.geom.theta(j);
    double a = trig_poly(t, d.alpha0, d.alpha_cos, d.alpha_sin);
    double b = trig_poly(t, d.beta0, d.beta_cos, d.beta_sin);
    f.v[j] = {std::sin(a) * std::cos(b), std::sin(a) * std::sin(b), std::cos(a)};
  }
  return f;
}

Field build(const RandomBand& d, int N) {
  if (d.kmax < 1 || 2 * d.kmax + 1 > N)
    throw std::invalid_argument("random_band: kmax must satisfy 1 <= kmax <= (N-1)/2");
  std::mt19937_64 rng(d.seed);
  // One coefficient pair per component and mode, drawn in a fixed order.
  std::vector<std::vector<double>> cs(3), ss(3);
  for (int comp = 0; comp < 3; ++comp)
    for (int m = 1; m <= d.kmax; ++m) {
      cs[comp].push_back(d.amplitude * uniform_pm1(rng) / m);
      ss[comp].push_back(d.amplitude * uniform_pm1(rng) / m);
    }
  Field f((Geometry(N)));
  for (int j = 0; j < N; ++j) {
    double t = f.geom.theta(j);
    Vec3 s{0.0, 0.0, 1.0};
    for (int comp = 0; comp < 3; ++comp)
      s[comp] += trig_poly(t, 0.0, cs[comp], ss[comp]);
    double r = norm(s);
    if (r < 0.1)
      throw std::runtime_error("random_band: sample too close to the origin to project");
    f.v[j] = (1.0 / r) * s;
  }
  return f;
}

}  // namespace

Spins make_initial(const InitialData& d, int N) {
  Field f = std::visit([N](const auto& fam) { return build(fam, N); }, d);
  // Kill floating-point dust so adoption at tight tolerance always succeeds.
  for (Vec3& s : f.v) s *= 1.0 / norm(s);
  return Spins::adopt(std::move(f), 1e-12);
}

std::string family_name(const InitialData& d) {
  if (std::holds_alternative<GreatCircle>(d)) return "great_circle";
  if (std::holds_alternative<TiltedSmooth>(d)) return "tilted";
  return "random_band";
}

}  // namespace halfwave::data
