/**********
 *   Copyright 2026 psphere authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace psphere {

using complexd = std::complex<double>;

/// Determinant tolerance for accepting a matrix as unimodular.
inline constexpr double unimodular_tolerance = 1e-9;

/// Relative tolerance for Hermiticity checks at construction time.
inline constexpr double hermitian_tolerance = 1e-12;

namespace detail {

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

inline void require_finite(complexd v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

inline double max_abs(complexd a, complexd b, complexd c, complexd d) {
  return std::max(std::max(std::abs(a), std::abs(b)),
                  std::max(std::abs(c), std::abs(d)));
}

}  // namespace detail

/// Unimodular complex 2x2 matrix: the transformation acting on space-time
/// and momentum matrices by conjugation, and on Jones vectors directly.
/// Construction does not force det = 1; `validated` does, and every
/// operation that needs unimodularity asserts it.
struct GroupElement {
  complexd a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

  [[nodiscard]] complexd det() const { return a11 * a22 - a12 * a21; }

  [[nodiscard]] bool is_unimodular(double tol = unimodular_tolerance) const {
    return std::abs(det() - complexd{1.0}) <= tol;
  }

  /// True when all entries are real to within `tol` relative to the largest
  /// entry: the subgroup acting on (t, z, x) alone.
  [[nodiscard]] bool is_real(double tol = hermitian_tolerance) const {
    const double scale = std::max(1.0, detail::max_abs(a11, a12, a21, a22));
    return std::abs(a11.imag()) <= tol * scale &&
           std::abs(a12.imag()) <= tol * scale &&
           std::abs(a21.imag()) <= tol * scale &&
           std::abs(a22.imag()) <= tol * scale;
  }

  /// Validating constructor: rejects non-finite entries and det away from 1.
  static GroupElement validated(complexd a11, complexd a12, complexd a21,
                                complexd a22) {
    detail::require_finite(a11, "GroupElement a11");
    detail::require_finite(a12, "GroupElement a12");
    detail::require_finite(a21, "GroupElement a21");
    detail::require_finite(a22, "GroupElement a22");
    GroupElement g{a11, a12, a21, a22};
    if (!g.is_unimodular()) {
      throw std::invalid_argument("GroupElement: determinant is not 1");
    }
    return g;
  }
};

inline GroupElement operator-(const GroupElement& g) {
  return {-g.a11, -g.a12, -g.a21, -g.a22};
}

/// Largest entrywise distance between two group elements.
inline double max_entry_distance(const GroupElement& a, const GroupElement& b) {
  return detail::max_abs(a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21,
                         a.a22 - b.a22);
}

namespace detail {

inline void require_unimodular(const GroupElement& g, const char* what) {
  if (!g.is_unimodular()) {
    throw std::invalid_argument(std::string(what) +
                                ": group element is not unimodular");
  }
}

}  // namespace detail

/// Rotation around the y axis: [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
inline GroupElement rotation_y(double theta) {
  detail::require_finite(theta, "rotation_y: theta");
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return {c, -s, s, c};
}

/// Boost along the z axis: diag(e^{eta/2}, e^{-eta/2}).
inline GroupElement boost_z(double eta) {
  detail::require_finite(eta, "boost_z: eta");
  const double e = std::exp(0.5 * eta);
  return {e, 0.0, 0.0, 1.0 / e};
}

/// Boost along the x axis: symmetric cosh/sinh matrix in lambda/2.
inline GroupElement boost_x(double lambda) {
  detail::require_finite(lambda, "boost_x: lambda");
  const double c = std::cosh(0.5 * lambda);
  const double s = std::sinh(0.5 * lambda);
  return {c, s, s, c};
}

/// Rotation around the z axis: diag(e^{i phi/2}, e^{-i phi/2}).
inline GroupElement rotation_z(double phi) {
  detail::require_finite(phi, "rotation_z: phi");
  const complexd u = std::polar(1.0, 0.5 * phi);
  return {u, 0.0, 0.0, std::conj(u)};
}

/// Upper-triangular gauge element [[1, -gamma], [0, 1]]: the little-group
/// generator of a massless particle moving along +z.
inline GroupElement gauge_triangular(double gauge_gamma) {
  detail::require_finite(gauge_gamma, "gauge_triangular: gamma");
  return {1.0, -gauge_gamma, 0.0, 1.0};
}

/// Matrix product g1 * g2. Both factors must be unimodular.
inline GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  detail::require_unimodular(g1, "compose: g1");
  detail::require_unimodular(g2, "compose: g2");
  return {g1.a11 * g2.a11 + g1.a12 * g2.a21,
          g1.a11 * g2.a12 + g1.a12 * g2.a22,
          g1.a21 * g2.a11 + g1.a22 * g2.a21,
          g1.a21 * g2.a12 + g1.a22 * g2.a22};
}

/// Inverse of a unimodular element (its adjugate).
inline GroupElement inverse(const GroupElement& g) {
  detail::require_unimodular(g, "inverse");
  return {g.a22, -g.a12, -g.a21, g.a11};
}

/// Real quadruple in (t, z, x, y) order. The same order is used for
/// space-time points, four-momenta and photon four-potentials, and by
/// every 4x4 matrix in the library.
struct FourVector {
  double t{0.0}, z{0.0}, x{0.0}, y{0.0};
};

/// Hermitian 2x2 matrix embedding a four-vector: a space-time point or a
/// four-momentum. Hermiticity is validated at construction (relative to the
/// largest entry); violations are errors, never silently symmetrized.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  HermitianMatrix(complexd m11, complexd m12, complexd m21, complexd m22)
      : m11_(m11), m12_(m12), m21_(m21), m22_(m22) {
    detail::require_finite(m11, "HermitianMatrix m11");
    detail::require_finite(m12, "HermitianMatrix m12");
    detail::require_finite(m21, "HermitianMatrix m21");
    detail::require_finite(m22, "HermitianMatrix m22");
    const double scale = detail::max_abs(m11, m12, m21, m22);
    const double tol = hermitian_tolerance * scale;
    if (std::abs(m11.imag()) > tol || std::abs(m22.imag()) > tol) {
      throw std::invalid_argument(
          "HermitianMatrix: diagonal entries must be real");
    }
    if (std::abs(m21 - std::conj(m12)) > tol) {
      throw std::invalid_argument(
          "HermitianMatrix: m21 must equal conj(m12)");
    }
  }

  [[nodiscard]] complexd m11() const { return m11_; }
  [[nodiscard]] complexd m12() const { return m12_; }
  [[nodiscard]] complexd m21() const { return m21_; }
  [[nodiscard]] complexd m22() const { return m22_; }

  [[nodiscard]] double trace_real() const { return m11_.real() + m22_.real(); }

  /// det is real for Hermitian input; the real part drops only rounding.
  [[nodiscard]] double det_real() const {
    return (m11_ * m22_ - m12_ * m21_).real();
  }

  [[nodiscard]] double max_abs_entry() const {
    return detail::max_abs(m11_, m12_, m21_, m22_);
  }

  [[nodiscard]] bool is_zero() const {
    return m11_ == complexd{} && m12_ == complexd{} && m21_ == complexd{} &&
           m22_ == complexd{};
  }

 private:
  complexd m11_{0.0}, m12_{0.0}, m21_{0.0}, m22_{0.0};
};

/// Embeds (t, z, x, y) as [[t+z, x-iy], [x+iy, t-z]];
/// det = t^2 - z^2 - x^2 - y^2, the Minkowski interval.
inline HermitianMatrix four_vector_to_matrix(const FourVector& v) {
  detail::require_finite(v.t, "four_vector_to_matrix: t");
  detail::require_finite(v.z, "four_vector_to_matrix: z");
  detail::require_finite(v.x, "four_vector_to_matrix: x");
  detail::require_finite(v.y, "four_vector_to_matrix: y");
  return {complexd{v.t + v.z, 0.0}, complexd{v.x, -v.y}, complexd{v.x, v.y},
          complexd{v.t - v.z, 0.0}};
}

/// Inverse of four_vector_to_matrix. Non-Hermitian input is rejected by the
/// HermitianMatrix constructor before it can reach this function.
inline FourVector matrix_to_four_vector(const HermitianMatrix& m) {
  const double d11 = m.m11().real();
  const double d22 = m.m22().real();
  return {0.5 * (d11 + d22), 0.5 * (d11 - d22), m.m12().real(),
          -m.m12().imag()};
}

/// Conjugation action X' = G X G^dagger: the Lorentz transformation in the
/// two-by-two language. Preserves det (the mass/interval) and Hermiticity.
inline HermitianMatrix conjugate(const GroupElement& g,
                                 const HermitianMatrix& m) {
  detail::require_unimodular(g, "conjugate");
  // B = G * M
  const complexd b11 = g.a11 * m.m11() + g.a12 * m.m21();
  const complexd b12 = g.a11 * m.m12() + g.a12 * m.m22();
  const complexd b21 = g.a21 * m.m11() + g.a22 * m.m21();
  const complexd b22 = g.a21 * m.m12() + g.a22 * m.m22();
  // R = B * G^dagger
  return {b11 * std::conj(g.a11) + b12 * std::conj(g.a12),
          b11 * std::conj(g.a21) + b12 * std::conj(g.a22),
          b21 * std::conj(g.a11) + b22 * std::conj(g.a12),
          b21 * std::conj(g.a21) + b22 * std::conj(g.a22)};
}

/// det(P) = m^2 for a four-momentum matrix. May be negative (imaginary mass).
inline double invariant_mass_squared(const HermitianMatrix& p) {
  return p.det_real();
}

/// Real 4x4 Lorentz matrix acting on FourVector in (t, z, x, y) order.
struct LorentzMatrix4 {
  std::array<std::array<double, 4>, 4> m{};

  [[nodiscard]] double max_abs_entry() const {
    double s = 0.0;
    for (const auto& row : m) {
      for (double v : row) s = std::max(s, std::abs(v));
    }
    return s;
  }
};

inline FourVector apply(const LorentzMatrix4& l, const FourVector& v) {
  const std::array<double, 4> in{v.t, v.z, v.x, v.y};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r) {
    double acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += l.m[r][c] * in[c];
    out[r] = acc;
  }
  return {out[0], out[1], out[2], out[3]};
}

inline double determinant(const LorentzMatrix4& l) {
  const auto& a = l.m;
  double det = 0.0;
  for (int c = 0; c < 4; ++c) {
    // 3x3 minor of row 0, column c
    std::array<std::array<double, 3>, 3> s{};
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == c) continue;
        s[r - 1][cc++] = a[r][k];
      }
    }
    const double minor = s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) -
                         s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
                         s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
    det += ((c % 2 == 0) ? 1.0 : -1.0) * a[0][c] * minor;
  }
  return det;
}

/// Checks L^T g L = g with g = diag(+1, -1, -1, -1). The comparison scale
/// grows with the square of the largest entry so that large boosts are not
/// rejected for plain double rounding.
inline bool is_lorentz(const LorentzMatrix4& l,
                       double tol = unimodular_tolerance) {
  static constexpr std::array<double, 4> g{1.0, -1.0, -1.0, -1.0};
  const double s = l.max_abs_entry();
  const double bound = tol * std::max(1.0, s * s);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += l.m[k][i] * g[k] * l.m[k][j];
      const double want = (i == j) ? g[i] : 0.0;
      if (std::abs(acc - want) > bound) return false;
    }
  }
  return true;
}

inline bool is_proper_lorentz(const LorentzMatrix4& l,
                              double tol = unimodular_tolerance) {
  const double s = std::max(1.0, l.max_abs_entry());
  return is_lorentz(l, tol) &&
         std::abs(determinant(l) - 1.0) <= tol * s * s * s * s;
}

/// Translates a two-by-two element into the conventional 4x4 Lorentz matrix:
/// the unique L with matrix_to_four_vector(G X(v) G^dagger) = L v, obtained
/// by conjugating the four basis vectors and reading off columns.
inline LorentzMatrix4 lift_to_four_by_four(const GroupElement& g) {
  detail::require_unimodular(g, "lift_to_four_by_four");
  static constexpr std::array<FourVector, 4> basis{
      FourVector{1.0, 0.0, 0.0, 0.0}, FourVector{0.0, 1.0, 0.0, 0.0},
      FourVector{0.0, 0.0, 1.0, 0.0}, FourVector{0.0, 0.0, 0.0, 1.0}};
  LorentzMatrix4 l;
  for (int c = 0; c < 4; ++c) {
    const FourVector col =
        matrix_to_four_vector(conjugate(g, four_vector_to_matrix(basis[c])));
    l.m[0][c] = col.t;
    l.m[1][c] = col.z;
    l.m[2][c] = col.x;
    l.m[3][c] = col.y;
  }
  return l;
}

/// Parameters of the five one-parameter families: rotation about y (theta),
/// boost along z (eta), boost along x (lambda), rotation about z (phi) and
/// the triangular gauge parameter.
struct GroupParameters {
  double theta{0.0};
  double eta{0.0};
  double lambda{0.0};
  double phi{0.0};
  double gauge_gamma{0.0};
};

/// R(theta) B(eta) S(lambda) Z(phi) T(gamma): repeated applications of the
/// generator families reach the most general unimodular element.
inline GroupElement general_element(const GroupParameters& p) {
  return compose(
      compose(compose(rotation_y(p.theta), boost_z(p.eta)),
              compose(boost_x(p.lambda), rotation_z(p.phi))),
      gauge_triangular(p.gauge_gamma));
}

}  // namespace psphere
