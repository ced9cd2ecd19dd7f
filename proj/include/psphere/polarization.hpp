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

#include <numbers>
#include <span>

#include "psphere/lorentz.hpp"

namespace psphere {

/// Two-component complex vector of transverse field amplitudes. Plane-wave
/// propagation factors are absorbed into the complex phases: everything
/// downstream depends only on relative amplitude and phase.
struct JonesVector {
  complexd psi1{0.0}, psi2{0.0};
};

/// Builds a Jones vector from non-negative amplitudes and phases.
inline JonesVector jones(double a1, double a2, double ph1, double ph2) {
  detail::require_finite(a1, "jones: a1");
  detail::require_finite(a2, "jones: a2");
  detail::require_finite(ph1, "jones: ph1");
  detail::require_finite(ph2, "jones: ph2");
  if (a1 < 0.0 || a2 < 0.0) {
    throw std::invalid_argument("jones: amplitudes must be non-negative");
  }
  return {std::polar(a1, ph1), std::polar(a2, ph2)};
}

/// Optical element action: plain matrix-vector product. Phase shifters,
/// attenuators and polarization rotations are all group elements.
inline JonesVector apply_to_jones(const GroupElement& g, const JonesVector& j) {
  detail::require_finite(j.psi1, "apply_to_jones: psi1");
  detail::require_finite(j.psi2, "apply_to_jones: psi2");
  return {g.a11 * j.psi1 + g.a12 * j.psi2, g.a21 * j.psi1 + g.a22 * j.psi2};
}

/// Decoherence angle xi in [0, pi/2] plus the relative phase of the
/// off-diagonal coherence. xi = 0 is fully coherent, xi = pi/2 totally
/// incoherent. This phase is an independent quantity from any phase-shift
/// element applied to the beam.
struct DecoherenceParams {
  double xi{0.0};
  double phi{0.0};
};

namespace detail {

inline void require_valid(const DecoherenceParams& d, const char* what) {
  require_finite(d.xi, what);
  require_finite(d.phi, what);
  if (d.xi < 0.0 || d.xi > 0.5 * std::numbers::pi) {
    throw std::invalid_argument(std::string(what) +
                                ": xi must lie in [0, pi/2]");
  }
}

}  // namespace detail

/// Hermitian positive-semidefinite 2x2 matrix of time-averaged field
/// correlations S_ij. Hermiticity and semidefiniteness are validated at
/// construction, relative to the matrix scale.
class CoherencyMatrix {
 public:
  CoherencyMatrix() = default;

  CoherencyMatrix(complexd s11, complexd s12, complexd s21, complexd s22)
      : s11_(s11), s12_(s12), s21_(s21), s22_(s22) {
    detail::require_finite(s11, "CoherencyMatrix s11");
    detail::require_finite(s12, "CoherencyMatrix s12");
    detail::require_finite(s21, "CoherencyMatrix s21");
    detail::require_finite(s22, "CoherencyMatrix s22");
    const double scale = detail::max_abs(s11, s12, s21, s22);
    const double tol = hermitian_tolerance * scale;
    if (std::abs(s11.imag()) > tol || std::abs(s22.imag()) > tol) {
      throw std::invalid_argument(
          "CoherencyMatrix: diagonal intensities must be real");
    }
    if (s11.real() < -tol || s22.real() < -tol) {
      throw std::invalid_argument(
          "CoherencyMatrix: diagonal intensities must be non-negative");
    }
    if (std::abs(s21 - std::conj(s12)) > tol) {
      throw std::invalid_argument("CoherencyMatrix: s21 must equal conj(s12)");
    }
    const double trace = s11.real() + s22.real();
    if (det_real() < -hermitian_tolerance * trace * trace) {
      throw std::invalid_argument(
          "CoherencyMatrix: matrix must be positive semidefinite");
    }
  }

  [[nodiscard]] complexd s11() const { return s11_; }
  [[nodiscard]] complexd s12() const { return s12_; }
  [[nodiscard]] complexd s21() const { return s21_; }
  [[nodiscard]] complexd s22() const { return s22_; }

  [[nodiscard]] double trace_real() const { return s11_.real() + s22_.real(); }

  [[nodiscard]] double det_real() const {
    return (s11_ * s22_ - s12_ * s21_).real();
  }

  [[nodiscard]] double max_abs_entry() const {
    return detail::max_abs(s11_, s12_, s21_, s22_);
  }

 private:
  complexd s11_{0.0}, s12_{0.0}, s21_{0.0}, s22_{0.0};
};

/// Unit-diagonal coherency matrix [[1, cos(xi) e^{-i phi}],
/// [cos(xi) e^{i phi}, 1]]; det = sin^2(xi).
inline CoherencyMatrix coherency_from_params(const DecoherenceParams& d) {
  detail::require_valid(d, "coherency_from_params");
  const complexd off = std::polar(std::cos(d.xi), -d.phi);
  return {1.0, off, std::conj(off), 1.0};
}

/// Discrete-time correlation estimator S_ij = mean(conj(psi_i) psi_j) over
/// paired samples of the two transverse components. With `normalize` the
/// result is scaled so that max(S11, S22) = 1.
inline CoherencyMatrix coherency_from_signals(std::span<const complexd> x,
                                              std::span<const complexd> y,
                                              bool normalize = false) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("coherency_from_signals: empty sample set");
  }
  if (x.size() != y.size()) {
    throw std::invalid_argument(
        "coherency_from_signals: sample sequences must have equal length");
  }
  double s11 = 0.0, s22 = 0.0;
  complexd s12{0.0};
  for (std::size_t n = 0; n < x.size(); ++n) {
    s11 += std::norm(x[n]);
    s22 += std::norm(y[n]);
    s12 += std::conj(x[n]) * y[n];
  }
  const double inv = 1.0 / static_cast<double>(x.size());
  s11 *= inv;
  s22 *= inv;
  s12 *= inv;
  if (normalize) {
    const double peak = std::max(s11, s22);
    if (peak <= 0.0) {
      throw std::domain_error("coherency_from_signals: zero-power signals");
    }
    s11 /= peak;
    s22 /= peak;
    s12 /= peak;
  }
  return {s11, s12, std::conj(s12), s22};
}

/// C' = G C G^dagger. The determinant, and with it the decoherence angle,
/// is invariant under any unimodular transform.
inline CoherencyMatrix transform_coherency(const GroupElement& g,
                                           const CoherencyMatrix& c) {
  detail::require_unimodular(g, "transform_coherency");
  const complexd b11 = g.a11 * c.s11() + g.a12 * c.s21();
  const complexd b12 = g.a11 * c.s12() + g.a12 * c.s22();
  const complexd b21 = g.a21 * c.s11() + g.a22 * c.s21();
  const complexd b22 = g.a21 * c.s12() + g.a22 * c.s22();
  return {b11 * std::conj(g.a11) + b12 * std::conj(g.a12),
          b11 * std::conj(g.a21) + b12 * std::conj(g.a22),
          b21 * std::conj(g.a11) + b22 * std::conj(g.a12),
          b21 * std::conj(g.a21) + b22 * std::conj(g.a22)};
}

/// Recovers xi from det(C) = sin^2(xi) after normalizing the diagonal:
/// xi = arcsin(min(1, sqrt(det(C / sqrt(S11 S22))))). Matrices constructed
/// from DecoherenceParams round-trip. A determinant that is negative beyond
/// tolerance is not a physical coherency matrix and is rejected.
inline double decoherence_angle(const CoherencyMatrix& c) {
  const double product = c.s11().real() * c.s22().real();
  if (product <= 0.0) {
    // PSD with a vanishing diagonal product forces det = 0: fully polarized.
    return 0.0;
  }
  const double normalized_det = c.det_real() / product;
  if (normalized_det < -1e-9) {
    throw std::domain_error(
        "decoherence_angle: determinant negative beyond tolerance");
  }
  const double s = std::sqrt(std::max(0.0, normalized_det));
  return std::asin(std::min(1.0, s));
}

/// Eigenvalues (descending) and the special-unitary element U with
/// U C U^dagger diagonal. For unit-diagonal matrices the eigenvalues are
/// 1 + cos(xi) and 1 - cos(xi).
struct DiagonalizationResult {
  double eigen_max{0.0};
  double eigen_min{0.0};
  GroupElement rotation;
};

inline DiagonalizationResult diagonalize_coherency(const CoherencyMatrix& c) {
  const double a = c.s11().real();
  const double d = c.s22().real();
  const complexd b = c.s12();
  const double scale = std::max(1.0, c.max_abs_entry());
  if (std::abs(b) <= 1e-14 * scale) {
    if (a >= d) return {a, d, GroupElement{}};
    return {d, a, rotation_y(std::numbers::pi)};  // swap the diagonal
  }
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::hypot(half, std::abs(b));
  const double lam_max = mean + r;
  const double lam_min = mean - r;
  // eigenvector for lam_max is (b, lam_max - a); its orthogonal complement
  // completes a special-unitary row pair.
  const double d1 = lam_max - a;
  const double n = std::hypot(std::abs(b), d1);
  const GroupElement u{std::conj(b) / n, d1 / n, -d1 / n, b / n};
  return {lam_max, lam_min, u};
}

/// Four real Stokes parameters: coordinates on/inside the Poincare sphere.
struct StokesVector {
  double s0{0.0}, s1{0.0}, s2{0.0}, s3{0.0};
};

/// (s0, s1, s2, s3) = (S11+S22, S11-S22, S12+S21, i(S12-S21)); all real by
/// Hermiticity.
inline StokesVector stokes(const CoherencyMatrix& c) {
  return {c.s11().real() + c.s22().real(), c.s11().real() - c.s22().real(),
          (c.s12() + c.s21()).real(),
          (complexd{0.0, 1.0} * (c.s12() - c.s21())).real()};
}

/// sqrt(s1^2 + s2^2 + s3^2) / s0: radius inside the Poincare sphere. Equals
/// cos(xi) for unit-diagonal coherency matrices.
inline double degree_of_polarization(const StokesVector& s) {
  if (s.s0 <= 0.0) {
    throw std::domain_error(
        "degree_of_polarization: total intensity must be positive");
  }
  return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) / s.s0;
}

/// Four-momentum read off a diagonalized coherency matrix at energy p0:
/// the decoherence angle becomes a continuously variable mass.
struct EquivalentMomentum {
  HermitianMatrix momentum_matrix;
  double mass{0.0};
  double momentum{0.0};
  double energy{0.0};
};

/// P = p0 diag(1 + cos xi, 1 - cos xi); mass = p0 sin(xi), momentum =
/// p0 cos(xi), energy = p0. The triple satisfies mass^2 + momentum^2 =
/// energy^2: the fixed-energy triangle, with xi = pi/2 the rest frame and
/// xi = 0 the massless endpoint on the light cone.
inline EquivalentMomentum coherency_to_four_momentum(
    const DecoherenceParams& d, double p0) {
  detail::require_valid(d, "coherency_to_four_momentum");
  detail::require_finite(p0, "coherency_to_four_momentum: p0");
  if (p0 <= 0.0) {
    throw std::invalid_argument(
        "coherency_to_four_momentum: p0 must be positive");
  }
  const double cx = std::cos(d.xi);
  const HermitianMatrix p{p0 * (1.0 + cx), 0.0, 0.0, p0 * (1.0 - cx)};
  return {p, p0 * std::sin(d.xi), p0 * cx, p0};
}

}  // namespace psphere
