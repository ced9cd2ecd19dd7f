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

#include <optional>
#include <string_view>

#include "psphere/lorentz.hpp"

namespace psphere {

/// Wigner classification of a four-momentum by the sign of det(P) = m^2.
/// Null is the zero matrix, kept apart from Massless because its stabilizer
/// degenerates to the whole group.
enum class MomentumClass { Massive, Massless, ImaginaryMass, Null };

inline std::string_view to_string(MomentumClass c) {
  switch (c) {
    case MomentumClass::Massive: return "Massive";
    case MomentumClass::Massless: return "Massless";
    case MomentumClass::ImaginaryMass: return "ImaginaryMass";
    case MomentumClass::Null: return "Null";
  }
  return "Unknown";
}

/// Default relative tolerance for classification. det scales quadratically
/// with energy, so the cutoff is tol * (trace/2)^2, never an absolute one.
inline constexpr double classification_tolerance = 1e-9;

/// Classifies P by sign of its determinant relative to the energy scale
/// trace(P)/2. Negative-energy input (trace < 0) is rejected.
inline MomentumClass classify_momentum(const HermitianMatrix& p,
                                       double tol = classification_tolerance) {
  if (p.is_zero()) return MomentumClass::Null;
  const double trace = p.trace_real();
  if (trace < 0.0) {
    throw std::domain_error("classify_momentum: negative-energy momentum");
  }
  const double scale = 0.5 * trace;
  const double threshold = tol * scale * scale;
  const double det = p.det_real();
  if (det > threshold) return MomentumClass::Massive;
  if (det < -threshold) return MomentumClass::ImaginaryMass;
  return MomentumClass::Massless;
}

/// Standard (frame-fixed) momentum for a class: scale * I for a massive
/// particle at rest, scale * diag(1, -1) for an imaginary-mass particle with
/// zero energy, scale * [[1, 0], [0, 0]] for a massless particle along +z.
inline HermitianMatrix standard_momentum(MomentumClass c, double scale) {
  detail::require_finite(scale, "standard_momentum: scale");
  if (scale <= 0.0) {
    throw std::invalid_argument("standard_momentum: scale must be positive");
  }
  switch (c) {
    case MomentumClass::Massive:
      return {scale, 0.0, 0.0, scale};
    case MomentumClass::ImaginaryMass:
      return {scale, 0.0, 0.0, -scale};
    case MomentumClass::Massless:
      return {scale, 0.0, 0.0, 0.0};
    case MomentumClass::Null:
      break;
  }
  throw std::invalid_argument("standard_momentum: Null has no standard form");
}

/// A group element paired with the four-momentum it leaves invariant:
/// conjugate(element, momentum) = momentum.
struct WignerElement {
  GroupElement element;
  HermitianMatrix momentum;
};

/// Relative residual of the stabilizer identity W P W^dagger = P.
inline double stabilization_residual(const GroupElement& w,
                                     const HermitianMatrix& p) {
  const HermitianMatrix q = conjugate(w, p);
  const double diff = detail::max_abs(q.m11() - p.m11(), q.m12() - p.m12(),
                                      q.m21() - p.m21(), q.m22() - p.m22());
  return diff / std::max(1.0, p.max_abs_entry());
}

/// Standard Wigner matrix per class: R(param) for Massive, S(param) for
/// ImaginaryMass, the triangular T(param) for Massless, paired with the
/// matching standard momentum.
inline WignerElement standard_wigner(MomentumClass c, double param,
                                     double scale = 1.0) {
  switch (c) {
    case MomentumClass::Massive:
      return {rotation_y(param), standard_momentum(c, scale)};
    case MomentumClass::ImaginaryMass:
      return {boost_x(param), standard_momentum(c, scale)};
    case MomentumClass::Massless:
      return {gauge_triangular(param), standard_momentum(c, scale)};
    case MomentumClass::Null:
      break;
  }
  throw std::invalid_argument("standard_wigner: Null has no Wigner matrix");
}

/// Rapidity of the boost taking a massive particle from rest to momentum
/// magnitude p at energy p0: e^eta = sqrt((p0 + p) / (p0 - p)).
inline double boost_parameter_for(double p0, double p) {
  detail::require_finite(p0, "boost_parameter_for: p0");
  detail::require_finite(p, "boost_parameter_for: p");
  if (p < 0.0) {
    throw std::domain_error("boost_parameter_for: p must be non-negative");
  }
  if (p >= p0) {
    throw std::domain_error(
        "boost_parameter_for: requires p0 > p (no finite rapidity from rest)");
  }
  return 0.5 * std::log((p0 + p) / (p0 - p));
}

namespace detail {

// Frame-changing element A with conjugate(A, standard) = P, built as
// Z(-alpha) R(theta) B(eta): boost along z, tilt towards the momentum
// direction in the z-x plane, then restore the y component.
struct FrameDecomposition {
  GroupElement a;
  double standard_scale;
};

inline FrameDecomposition frame_for(const HermitianMatrix& p,
                                    MomentumClass cls) {
  const FourVector v = matrix_to_four_vector(p);
  const double rho = std::hypot(v.x, v.y);
  const double pmag = std::hypot(v.z, rho);
  const double det = p.det_real();

  double eta = 0.0;
  double scale = 1.0;
  switch (cls) {
    case MomentumClass::Massive:
      scale = std::sqrt(det);
      eta = pmag > 0.0 ? boost_parameter_for(v.t, pmag) : 0.0;
      break;
    case MomentumClass::Massless:
      // canonical standard form [[1, 0], [0, 0]] carries energy 1/2
      scale = 1.0;
      eta = std::log(2.0 * v.t / scale);
      break;
    case MomentumClass::ImaginaryMass:
      scale = std::sqrt(-det);
      eta = std::asinh(v.t / scale);
      break;
    case MomentumClass::Null:
      throw std::domain_error("little_group_element: Null momentum rejected");
  }

  GroupElement a = boost_z(eta);
  const double theta = std::atan2(rho, v.z);
  if (theta != 0.0) a = compose(rotation_y(theta), a);
  if (rho > 0.0) {
    // Z(phi) rotates (x, y) by -phi; undo the azimuth alpha with Z(-alpha).
    const double alpha = std::atan2(v.y, v.x);
    a = compose(rotation_z(-alpha), a);
  }
  return {a, scale};
}

}  // namespace detail

/// Little-group element for an arbitrary classifiable momentum: the standard
/// Wigner matrix conjugated into the frame of P. The result stabilizes P.
inline WignerElement little_group_element(const HermitianMatrix& p,
                                          double param) {
  const MomentumClass cls = classify_momentum(p);
  if (cls == MomentumClass::Null) {
    throw std::domain_error("little_group_element: Null momentum rejected");
  }
  const auto [a, scale] = detail::frame_for(p, cls);
  const GroupElement w_std = standard_wigner(cls, param, scale).element;
  return {compose(compose(a, w_std), inverse(a)), p};
}

/// Boosted rotation B(eta) R(theta) B(-eta) with theta eliminated through
/// theta = 2 arcsin(gamma e^{-eta}), so the family is parametrized by the
/// gauge parameter it converges to. The (1,2) entry is -gamma exactly; the
/// (2,1) entry gamma e^{-2 eta} is the part that dies in the limit.
inline GroupElement contracted_wigner(double gauge_gamma, double eta) {
  detail::require_finite(gauge_gamma, "contracted_wigner: gamma");
  detail::require_finite(eta, "contracted_wigner: eta");
  const double s = gauge_gamma * std::exp(-eta);  // sin(theta/2)
  if (std::abs(s) > 1.0) {
    throw std::domain_error(
        "contracted_wigner: |gamma| e^{-eta} must not exceed 1");
  }
  const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
  return {c, -gauge_gamma, s * std::exp(-eta), c};
}

/// Max-norm distance between the boosted rotation and its triangular limit.
inline double contraction_residual(double gauge_gamma, double eta) {
  return max_entry_distance(contracted_wigner(gauge_gamma, eta),
                            gauge_triangular(gauge_gamma));
}

/// Photon four-potential (A0, Az, Ax, Ay) with its frequency.
struct FourPotential {
  FourVector vector;
  double omega{1.0};
};

struct GaugeTransformResult {
  FourPotential potential;
  /// Present when the input satisfied A0 = Az: then A' - A = coefficient * p
  /// with p = (omega, omega, 0, 0), a pure gauge shift.
  std::optional<double> coefficient;
};

/// Applies the lifted triangular element to a photon four-potential. The
/// photon momentum is taken as p = (omega, omega, 0, 0) along z.
inline GaugeTransformResult apply_gauge_to_potential(double gauge_gamma,
                                                     const FourPotential& a) {
  detail::require_finite(gauge_gamma, "apply_gauge_to_potential: gamma");
  detail::require_finite(a.omega, "apply_gauge_to_potential: omega");
  if (a.omega <= 0.0) {
    throw std::invalid_argument(
        "apply_gauge_to_potential: omega must be positive");
  }
  detail::require_finite(a.vector.t, "apply_gauge_to_potential: A0");
  detail::require_finite(a.vector.z, "apply_gauge_to_potential: Az");
  detail::require_finite(a.vector.x, "apply_gauge_to_potential: Ax");
  detail::require_finite(a.vector.y, "apply_gauge_to_potential: Ay");

  const LorentzMatrix4 lift = lift_to_four_by_four(gauge_triangular(gauge_gamma));
  const FourVector transformed = apply(lift, a.vector);

  std::optional<double> coefficient;
  const double scale =
      std::max({1.0, std::abs(a.vector.t), std::abs(a.vector.z)});
  if (std::abs(a.vector.t - a.vector.z) <= hermitian_tolerance * scale) {
    coefficient = (transformed.t - a.vector.t) / a.omega;
  }
  return {FourPotential{transformed, a.omega}, coefficient};
}

}  // namespace psphere
