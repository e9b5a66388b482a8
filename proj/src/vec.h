// Small fixed-size vector types. Templated on the scalar so the same
// geometry code runs in double and in multiprecision arithmetic.
#pragma once

#include <array>
#include <cmath>

namespace rupert {

template <class S>
struct P2 {
  S x{}, y{};
};

template <class S>
struct P3 {
  S x{}, y{}, z{};
};

using Vec2 = P2<double>;
using Vec3 = P3<double>;

template <class S>
P2<S> operator+(const P2<S>& a, const P2<S>& b) {
  return {a.x + b.x, a.y + b.y};
}
template <class S>
P2<S> operator-(const P2<S>& a, const P2<S>& b) {
  return {a.x - b.x, a.y - b.y};
}
template <class S>
P2<S> operator*(const S& c, const P2<S>& a) {
  return {c * a.x, c * a.y};
}
template <class S>
S dot(const P2<S>& a, const P2<S>& b) {
  return a.x * b.x + a.y * b.y;
}
// z-component of the 3D cross product of the embedded vectors.
template <class S>
S cross(const P2<S>& a, const P2<S>& b) {
  return a.x * b.y - a.y * b.x;
}
template <class S>
S norm(const P2<S>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

template <class S>
P3<S> operator+(const P3<S>& a, const P3<S>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
template <class S>
P3<S> operator-(const P3<S>& a, const P3<S>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
template <class S>
P3<S> operator*(const S& c, const P3<S>& a) {
  return {c * a.x, c * a.y, c * a.z};
}
template <class S>
S dot(const P3<S>& a, const P3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
template <class S>
P3<S> cross(const P3<S>& a, const P3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
template <class S>
S norm(const P3<S>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

// The 7-parameter space (u, v, theta_p, phi_p, alpha, theta_q, phi_q).
using Vec7 = std::array<double, 7>;

inline Vec7 operator+(const Vec7& a, const Vec7& b) {
  Vec7 r;
  for (int i = 0; i < 7; ++i) r[i] = a[i] + b[i];
  return r;
}
inline Vec7 operator-(const Vec7& a, const Vec7& b) {
  Vec7 r;
  for (int i = 0; i < 7; ++i) r[i] = a[i] - b[i];
  return r;
}
inline Vec7 operator*(double c, const Vec7& a) {
  Vec7 r;
  for (int i = 0; i < 7; ++i) r[i] = c * a[i];
  return r;
}
inline double dot(const Vec7& a, const Vec7& b) {
  double s = 0;
  for (int i = 0; i < 7; ++i) s += a[i] * b[i];
  return s;
}
inline double norm(const Vec7& a) { return std::sqrt(dot(a, a)); }

}  // namespace rupert
