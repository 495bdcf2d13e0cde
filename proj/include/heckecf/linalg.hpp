// Copyright 2026 The heckecf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HECKECF_LINALG_HPP_
#define HECKECF_LINALG_HPP_

namespace heckecf {

template <typename T>
struct Vec2 {
  T x;
  T y;
};

template <typename T>
Vec2<T> operator+(const Vec2<T>& a, const Vec2<T>& b) {
  return {a.x + b.x, a.y + b.y};
}

template <typename T>
Vec2<T> operator-(const Vec2<T>& a, const Vec2<T>& b) {
  return {a.x - b.x, a.y - b.y};
}

template <typename T>
Vec2<T> operator-(const Vec2<T>& a) {
  return {-a.x, -a.y};
}

template <typename T>
Vec2<T> operator*(const T& s, const Vec2<T>& a) {
  return {s * a.x, s * a.y};
}

template <typename T>
bool operator==(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x == b.x && a.y == b.y;
}

// u ∧ v = u_x v_y - u_y v_x (the determinant of the column pair [u v]).
template <typename T>
T wedge(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x * v.y - u.y * v.x;
}

template <typename T>
T dot(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x * v.x + u.y * v.y;
}

// Row-major 2x2 matrix acting on column vectors.
template <typename T>
struct Mat2 {
  T a11, a12, a21, a22;

  Vec2<T> col0() const { return {a11, a21}; }
  Vec2<T> col1() const { return {a12, a22}; }
};

template <typename T>
Mat2<T> from_columns(const Vec2<T>& u, const Vec2<T>& v) {
  return {u.x, v.x, u.y, v.y};
}

template <typename T>
Vec2<T> operator*(const Mat2<T>& m, const Vec2<T>& v) {
  return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
}

template <typename T>
Mat2<T> operator*(const Mat2<T>& a, const Mat2<T>& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

template <typename T>
Mat2<T> operator-(const Mat2<T>& m) {
  return {-m.a11, -m.a12, -m.a21, -m.a22};
}

template <typename T>
bool operator==(const Mat2<T>& a, const Mat2<T>& b) {
  return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
}

template <typename T>
T det(const Mat2<T>& m) {
  return m.a11 * m.a22 - m.a12 * m.a21;
}

template <typename T>
Mat2<T> transpose(const Mat2<T>& m) {
  return {m.a11, m.a21, m.a12, m.a22};
}

// Inverse of a determinant-one matrix (no division, stays exact over any
// ring containing the entries).
template <typename T>
Mat2<T> inverse_unimodular(const Mat2<T>& m) {
  return {m.a22, -m.a12, -m.a21, m.a11};
}

}  // namespace heckecf

#endif  // HECKECF_LINALG_HPP_
