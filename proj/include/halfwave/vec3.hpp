#pragma once

#include <cmath>
#include <complex>

namespace halfwave {

using cplx = std::complex<double>;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

// Complexified 3-vector (Fourier coefficients of R^3-valued fields).
// The cross product is the bilinear extension, no conjugation anywhere.
struct Vec3c {
  cplx x{}, y{}, z{};

  cplx& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  cplx operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3c& operator+=(const Vec3c& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3c& operator-=(const Vec3c& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3c& operator*=(cplx s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3c operator+(Vec3c a, const Vec3c& b) { return a += b; }
inline Vec3c operator-(Vec3c a, const Vec3c& b) { return a -= b; }
inline Vec3c operator*(cplx s, Vec3c a) { return a *= s; }

inline Vec3c cross(const Vec3c& a, const Vec3c& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
// Bilinear dot (no conjugation); pairs with the convolution algebra.
inline cplx cdot(const Vec3c& a, const Vec3c& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(const Vec3c& a) { return std::norm(a.x) + std::norm(a.y) + std::norm(a.z); }
inline double cnorm(const Vec3c& a) { return std::sqrt(norm2(a)); }

inline Vec3c to_complex(const Vec3& a) { return {cplx(a.x), cplx(a.y), cplx(a.z)}; }
inline Vec3 real_part(const Vec3c& a) { return {a.x.real(), a.y.real(), a.z.real()}; }

}  // namespace halfwave
