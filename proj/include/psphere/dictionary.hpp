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
#include <span>
#include <string_view>

#include "psphere/lorentz.hpp"

namespace psphere {

/// The four one-parameter families shared by polarization optics and
/// particle symmetry.
enum class MatrixFamily { RotationZ, RotationY, BoostZ, BoostX };

inline std::string_view to_string(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::RotationZ: return "rotation_z";
    case MatrixFamily::RotationY: return "rotation_y";
    case MatrixFamily::BoostZ: return "boost_z";
    case MatrixFamily::BoostX: return "boost_x";
  }
  return "unknown";
}

/// One row of the optics <-> relativity correspondence. The determinant row
/// carries no matrix family; its names are the invariants themselves, and
/// the invariant fields record the asymmetry: the determinant is frozen in
/// particle physics but tunable in optics.
struct DictionaryEntry {
  std::string_view optics_name;
  std::string_view relativity_name;
  std::optional<MatrixFamily> family;
  std::string_view invariant_optics;
  std::string_view invariant_relativity;
};

/// The four matrix rows plus the determinant row.
inline std::span<const DictionaryEntry> entries() {
  static constexpr std::array<DictionaryEntry, 5> table{{
      {"Phase shift by phi", "Rotation around z", MatrixFamily::RotationZ,
       "preserves det C = (sin xi)^2", "preserves det P = (mass)^2"},
      {"Rotation around z", "Rotation around y", MatrixFamily::RotationY,
       "preserves det C = (sin xi)^2", "preserves det P = (mass)^2"},
      {"Squeeze along x and y", "Boost along z", MatrixFamily::BoostZ,
       "preserves det C = (sin xi)^2", "preserves det P = (mass)^2"},
      {"Squeeze along 45 degrees", "Boost along x", MatrixFamily::BoostX,
       "preserves det C = (sin xi)^2", "preserves det P = (mass)^2"},
      {"(sin xi)^2", "(mass)^2", std::nullopt,
       "a variable that can be changed",
       "cannot be changed (Lorentz invariant)"},
  }};
  return table;
}

/// Dispatches a matrix row to its generator at the given parameter.
inline GroupElement matrix_for(const DictionaryEntry& entry, double param) {
  if (!entry.family) {
    throw std::invalid_argument(
        "matrix_for: the determinant row has no transformation matrix");
  }
  switch (*entry.family) {
    case MatrixFamily::RotationZ: return rotation_z(param);
    case MatrixFamily::RotationY: return rotation_y(param);
    case MatrixFamily::BoostZ: return boost_z(param);
    case MatrixFamily::BoostX: return boost_x(param);
  }
  throw std::invalid_argument("matrix_for: unknown matrix family");
}

}  // namespace psphere
