#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace dkp {

// Small fixed-size dense matrices; plain value types, no allocation.
template <std::size_t N>
using Mat = std::array<std::array<double, N>, N>;

using Mat4 = Mat<4>;
using Mat5 = Mat<5>;

template <std::size_t N>
constexpr Mat<N> zero_mat() {
  Mat<N> z{};
  return z;
}

template <std::size_t N>
constexpr Mat<N> identity_mat() {
  Mat<N> id{};
  for (std::size_t i = 0; i < N; ++i) id[i][i] = 1.0;
  return id;
}

template <std::size_t N>
Mat<N> mat_mul(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < N; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

template <std::size_t N>
Mat<N> mat_add(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

template <std::size_t N>
Mat<N> mat_sub(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}

template <std::size_t N>
Mat<N> mat_scale(double s, const Mat<N>& a) {
  Mat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c[i][j] = s * a[i][j];
  return c;
}

template <std::size_t N>
Mat<N> mat_transpose(const Mat<N>& a) {
  Mat<N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) c[i][j] = a[j][i];
  return c;
}

template <std::size_t N>
Mat<N> commutator(const Mat<N>& a, const Mat<N>& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

template <std::size_t N>
double max_abs(const Mat<N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::fabs(a[i][j]));
  return m;
}

template <std::size_t N>
double max_abs_diff(const Mat<N>& a, const Mat<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      m = std::max(m, std::fabs(a[i][j] - b[i][j]));
  return m;
}

}  // namespace dkp
