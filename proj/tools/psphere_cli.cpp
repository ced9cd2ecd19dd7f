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

// psphere_cli: command-line front end for the psphere library.
//
// Every subcommand emits one OutputRecord -- {"command", "inputs",
// "results"} -- serialized with a fixed key order and floats at 17
// significant digits, so identical argv yields byte-identical output.
// `trajectory --csv` emits CSV instead. Exit codes: 0 success, 1 domain
// errors, 2 argument errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psphere/psphere.hpp"

namespace {

using nlohmann::ordered_json;
using psphere::complexd;

// ---------------------------------------------------------------------------
// Deterministic serialization

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Pretty-printer with two-space indentation and a pinned float format.
// nlohmann's own dump() prints shortest-round-trip floats, which is valid
// JSON but not the fixed 17-significant-digit contract, so floats are the
// one node type rendered manually.
void dump_json(const ordered_json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) + 2, ' ');
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        out += ordered_json(key).dump();  // handles string escaping
        out += ": ";
        dump_json(value, out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_json(value, out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();  // strings, integers, booleans, null
      return;
  }
}

std::string serialize_record(const ordered_json& record) {
  std::string out;
  dump_json(record, out, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON builders for library types

ordered_json complex_json(complexd v) {
  return ordered_json::array({v.real(), v.imag()});
}

ordered_json matrix_json(const psphere::GroupElement& g) {
  return ordered_json::array(
      {ordered_json::array({complex_json(g.a11), complex_json(g.a12)}),
       ordered_json::array({complex_json(g.a21), complex_json(g.a22)})});
}

ordered_json matrix_json(const psphere::HermitianMatrix& m) {
  return ordered_json::array(
      {ordered_json::array({complex_json(m.m11()), complex_json(m.m12())}),
       ordered_json::array({complex_json(m.m21()), complex_json(m.m22())})});
}

ordered_json matrix_json(const psphere::CoherencyMatrix& c) {
  return ordered_json::array(
      {ordered_json::array({complex_json(c.s11()), complex_json(c.s12())}),
       ordered_json::array({complex_json(c.s21()), complex_json(c.s22())})});
}

ordered_json matrix_json(const psphere::LorentzMatrix4& l) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : l.m) {
    rows.push_back(ordered_json::array({row[0], row[1], row[2], row[3]}));
  }
  return rows;
}

// Printed matrices must satisfy their module's invariants.
const psphere::GroupElement& checked(const psphere::GroupElement& g) {
  if (!g.is_unimodular()) {
    throw std::logic_error("internal error: matrix is not unimodular");
  }
  return g;
}

const psphere::LorentzMatrix4& checked(const psphere::LorentzMatrix4& l) {
  if (!psphere::is_proper_lorentz(l)) {
    throw std::logic_error("internal error: 4x4 matrix is not Lorentz");
  }
  return l;
}

// ---------------------------------------------------------------------------
// Output plumbing

struct Emitter {
  std::string out_path;  // empty: standard output

  void emit(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      throw std::invalid_argument("cannot open output file: " + out_path);
    }
    f << text;
  }
};

double to_radians(double value, bool degrees) {
  return degrees ? value * std::numbers::pi / 180.0 : value;
}

// ---------------------------------------------------------------------------
// Subcommands

void run_classify(const Emitter& io, double p0, double pz, double px,
                  double py, double tol) {
  using namespace psphere;
  const HermitianMatrix p = four_vector_to_matrix({p0, pz, px, py});
  const MomentumClass cls = classify_momentum(p, tol);
  const double det = invariant_mass_squared(p);

  ordered_json rec;
  rec["command"] = "classify";
  rec["inputs"] = {{"p0", p0}, {"pz", pz}, {"px", px}, {"py", py},
                   {"tol", tol}};
  ordered_json results;
  results["class"] = std::string(to_string(cls));
  results["det"] = det;
  results["momentum"] = matrix_json(p);
  switch (cls) {
    case MomentumClass::Massive: {
      results["standard"] = matrix_json(standard_momentum(cls, std::sqrt(det)));
      results["eta"] = boost_parameter_for(p0, std::hypot(pz, px, py));
      break;
    }
    case MomentumClass::ImaginaryMass:
      results["standard"] =
          matrix_json(standard_momentum(cls, std::sqrt(-det)));
      break;
    case MomentumClass::Massless:
      // standard form along +z at the particle's own energy: [[2 p0, 0],[0,0]]
      results["standard"] = matrix_json(standard_momentum(cls, 2.0 * p0));
      break;
    case MomentumClass::Null:
      results["standard"] = nullptr;
      break;
  }
  rec["results"] = std::move(results);
  io.emit(serialize_record(rec));
}

void run_wigner(const Emitter& io, const std::string& cls_name, double param,
                bool degrees) {
  using namespace psphere;
  MomentumClass cls;
  double value = param;
  if (cls_name == "massive") {
    cls = MomentumClass::Massive;
    value = to_radians(param, degrees);  // the massive parameter is an angle
  } else if (cls_name == "massless") {
    cls = MomentumClass::Massless;
  } else {
    cls = MomentumClass::ImaginaryMass;
  }
  const WignerElement w = standard_wigner(cls, value);

  ordered_json rec;
  rec["command"] = "wigner";
  rec["inputs"] = {{"class", cls_name}, {"param", value}};
  ordered_json results;
  results["wigner"] = matrix_json(checked(w.element));
  results["momentum"] = matrix_json(w.momentum);
  results["residual"] = stabilization_residual(w.element, w.momentum);
  results["lift"] = matrix_json(checked(lift_to_four_by_four(w.element)));
  rec["results"] = std::move(results);
  io.emit(serialize_record(rec));
}

void run_contract(const Emitter& io, double gamma, double eta) {
  using namespace psphere;
  const GroupElement contracted = contracted_wigner(gamma, eta);
  const GroupElement target = gauge_triangular(gamma);

  ordered_json rec;
  rec["command"] = "contract";
  rec["inputs"] = {{"gamma", gamma}, {"eta", eta}};
  ordered_json results;
  results["contracted"] = matrix_json(checked(contracted));
  results["target"] = matrix_json(checked(target));
  results["residual"] = contraction_residual(gamma, eta);
  rec["results"] = std::move(results);
  io.emit(serialize_record(rec));
}

void run_trajectory(const Emitter& io, double gamma, double eta_max, int steps,
                    double p0, bool csv) {
  using namespace psphere;
  // |gamma| e^{-eta} <= 1 requires eta >= ln|gamma|; start the sweep there.
  const double eta_min =
      std::max(0.0, gamma != 0.0 ? std::log(std::abs(gamma)) : 0.0);
  if (!(eta_max > eta_min)) {
    throw std::invalid_argument(
        "trajectory: --eta-max must exceed the sweep start max(0, ln|gamma|)");
  }

  std::vector<std::array<double, 4>> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double eta =
        eta_min + (eta_max - eta_min) * static_cast<double>(i) /
                      static_cast<double>(steps - 1);
    // fixed-energy path: cos(xi) = tanh(eta)
    const double xi = std::acos(std::tanh(eta));
    const EquivalentMomentum eq = coherency_to_four_momentum({xi, 0.0}, p0);
    rows.push_back({eta, contraction_residual(gamma, eta), eq.mass,
                    eq.momentum});
  }

  if (csv) {
    std::string text = "eta,residual,mass,momentum\n";
    for (const auto& r : rows) {
      text += format_double(r[0]) + "," + format_double(r[1]) + "," +
              format_double(r[2]) + "," + format_double(r[3]) + "\n";
    }
    io.emit(text);
    return;
  }

  ordered_json rec;
  rec["command"] = "trajectory";
  rec["inputs"] = {{"gamma", gamma}, {"eta_max", eta_max}, {"steps", steps},
                   {"p0", p0}};
  ordered_json results;
  results["eta_min"] = eta_min;
  results["columns"] =
      ordered_json::array({"eta", "residual", "mass", "momentum"});
  ordered_json jrows = ordered_json::array();
  for (const auto& r : rows) {
    jrows.push_back(ordered_json::array({r[0], r[1], r[2], r[3]}));
  }
  results["rows"] = std::move(jrows);
  rec["results"] = std::move(results);
  io.emit(serialize_record(rec));
}

void run_coherency(const Emitter& io, double xi, double phi,
                   std::optional<double> p0, bool degrees) {
  using namespace psphere;
  const DecoherenceParams params{to_radians(xi, degrees),
                                 to_radians(phi, degrees)};
  const CoherencyMatrix c = coherency_from_params(params);
  const StokesVector s = stokes(c);
  const DiagonalizationResult diag = diagonalize_coherency(c);

  ordered_json rec;
  rec["command"] = "coherency";
  rec["inputs"] = {{"xi", params.xi}, {"phi", params.phi}};
  if (p0) rec["inputs"]["p0"] = *p0;
  ordered_json results;
  results["matrix"] = matrix_json(c);
  results["det"] = c.det_real();
  results["stokes"] = ordered_json::array({s.s0, s.s1, s.s2, s.s3});
  results["degree_of_polarization"] = degree_of_polarization(s);
  results["eigenvalues"] =
      ordered_json::array({diag.eigen_max, diag.eigen_min});
  if (p0) {
    const EquivalentMomentum eq = coherency_to_four_momentum(params, *p0);
    results["momentum_matrix"] = matrix_json(eq.momentum_matrix);
    results["mass"] = eq.mass;
    results["momentum"] = eq.momentum;
    results["energy"] = eq.energy;
  }
  rec["results"] = std::move(results);
  io.emit(serialize_record(rec));
}

void run_lift(const Emitter& io, const std::string& matrix_arg) {
  using namespace psphere;
  std::vector<double> parts;
  std::stringstream ss(matrix_arg);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    // allow trailing whitespace only
    while (used < token.size() &&
           std::isspace(static_cast<unsigned char>(token[used]))) {
      ++used;
    }
    if (used != token.size() || token.empty()) {
      throw std::invalid_argument(
          "lift: --matrix expects 8 comma-separated reals "
          "(a11r,a11i,a12r,a12i,a21r,a21i,a22r,a22i)");
    }
    parts.push_back(v);
  }
  if (parts.size() != 8) {
    throw std::invalid_argument(
        "lift: --matrix expects exactly 8 comma-separated reals");
  }
  const GroupElement g = GroupElement::validated(
      {parts[0], parts[1]}, {parts[2], parts[3]}, {parts[4], parts[5]},
      {parts[6], parts[7]});

  ordered_json rec;
  rec["command"] = "lift";
  rec["inputs"] = {{"matrix", matrix_json(g)}};
  ordered_json results;
  results["lift"] = matrix_json(checked(lift_to_four_by_four(g)));
  rec["results"] = std::move(results);
  io.emit(serialize_record(rec));
}

void run_dictionary(const Emitter& io, bool as_json) {
  using namespace psphere;
  if (as_json) {
    ordered_json rec;
    rec["command"] = "dictionary";
    rec["inputs"] = ordered_json::object();
    ordered_json rows = ordered_json::array();
    for (const DictionaryEntry& e : entries()) {
      ordered_json row;
      row["optics"] = std::string(e.optics_name);
      row["relativity"] = std::string(e.relativity_name);
      if (e.family) {
        row["family"] = std::string(to_string(*e.family));
      } else {
        row["family"] = nullptr;
      }
      row["invariant_optics"] = std::string(e.invariant_optics);
      row["invariant_relativity"] = std::string(e.invariant_relativity);
      rows.push_back(std::move(row));
    }
    rec["results"] = {{"entries", std::move(rows)}};
    io.emit(serialize_record(rec));
    return;
  }

  // text table: two columns, the shared-invariant rows first, then the
  // determinant row whose cells carry their own invariant text
  std::vector<std::pair<std::string, std::string>> cells;
  cells.emplace_back("Polarization optics", "Particle symmetry");
  for (const psphere::DictionaryEntry& e : psphere::entries()) {
    std::string left(e.optics_name);
    std::string right(e.relativity_name);
    if (!e.family) {
      left += ": " + std::string(e.invariant_optics);
      right += ": " + std::string(e.invariant_relativity);
    }
    cells.emplace_back(std::move(left), std::move(right));
  }
  std::size_t width = 0;
  for (const auto& [left, right] : cells) width = std::max(width, left.size());
  std::string text;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string line = cells[i].first;
    line.append(width + 2 - cells[i].first.size(), ' ');
    line += cells[i].second;
    text += line + "\n";
    if (i == 0) text += std::string(width + 2 + cells[i].second.size(), '-') + "\n";
  }
  io.emit(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-by-two representations of the Lorentz group and the "
               "coherency-matrix optics they mirror"};
  app.require_subcommand(1);
  app.fallthrough();

  Emitter io;
  app.add_option("--out", io.out_path,
                 "write the output to PATH instead of standard output");

  // classify
  auto* classify = app.add_subcommand(
      "classify", "classify a four-momentum and report its standard form");
  double c_p0 = 0.0, c_pz = 0.0, c_px = 0.0, c_py = 0.0;
  double c_tol = psphere::classification_tolerance;
  classify->add_option("--p0", c_p0, "energy component")->required();
  classify->add_option("--pz", c_pz, "momentum along z")->required();
  classify->add_option("--px", c_px, "momentum along x");
  classify->add_option("--py", c_py, "momentum along y");
  classify->add_option("--tol", c_tol, "classification tolerance");
  classify->callback(
      [&] { run_classify(io, c_p0, c_pz, c_px, c_py, c_tol); });

  // wigner
  auto* wigner = app.add_subcommand(
      "wigner", "standard Wigner matrix of a mass class, with its 4x4 lift");
  std::string w_class;
  double w_param = 0.0;
  bool w_degrees = false;
  wigner->add_option("--class", w_class, "mass class")
      ->required()
      ->check(CLI::IsMember({"massive", "massless", "imaginary"}));
  wigner->add_option("--param", w_param, "group parameter")->required();
  wigner->add_flag("--degrees", w_degrees,
                   "interpret angular parameters in degrees");
  wigner->callback([&] { run_wigner(io, w_class, w_param, w_degrees); });

  // contract
  auto* contract = app.add_subcommand(
      "contract", "boosted rotation against its triangular gauge limit");
  double k_gamma = 0.0, k_eta = 0.0;
  contract->add_option("--gamma", k_gamma, "gauge parameter")->required();
  contract->add_option("--eta", k_eta, "boost rapidity")->required();
  contract->callback([&] { run_contract(io, k_gamma, k_eta); });

  // trajectory
  auto* trajectory = app.add_subcommand(
      "trajectory",
      "sweep the contraction along the fixed-energy mass/momentum path");
  double t_gamma = 0.0, t_eta_max = 0.0, t_p0 = 1.0;
  int t_steps = 0;
  bool t_csv = false;
  trajectory->add_option("--gamma", t_gamma, "gauge parameter")->required();
  trajectory->add_option("--eta-max", t_eta_max, "final rapidity")->required();
  trajectory->add_option("--steps", t_steps, "number of rows")
      ->required()
      ->check(CLI::Range(2, 1000000));
  trajectory->add_option("--p0", t_p0, "fixed energy of the path")
      ->check(CLI::PositiveNumber);
  trajectory->add_flag("--csv", t_csv, "emit CSV instead of JSON");
  trajectory->callback(
      [&] { run_trajectory(io, t_gamma, t_eta_max, t_steps, t_p0, t_csv); });

  // coherency
  auto* coherency = app.add_subcommand(
      "coherency",
      "coherency matrix, Stokes vector and the equivalent four-momentum");
  double h_xi = 0.0, h_phi = 0.0;
  std::optional<double> h_p0;
  bool h_degrees = false;
  coherency->add_option("--xi", h_xi, "decoherence angle")->required();
  coherency->add_option("--phi", h_phi, "off-diagonal phase");
  coherency->add_option("--p0", h_p0,
                        "energy assigned to the equivalent four-momentum");
  coherency->add_flag("--degrees", h_degrees,
                      "interpret angular parameters in degrees");
  coherency->callback([&] { run_coherency(io, h_xi, h_phi, h_p0, h_degrees); });

  // lift
  auto* lift = app.add_subcommand(
      "lift", "lift a two-by-two element to its 4x4 Lorentz matrix");
  std::string l_matrix;
  lift->add_option("--matrix", l_matrix,
                   "entries a11r,a11i,a12r,a12i,a21r,a21i,a22r,a22i")
      ->required();
  lift->callback([&] { run_lift(io, l_matrix); });

  // dictionary
  auto* dictionary = app.add_subcommand(
      "dictionary", "the polarization-optics / particle-symmetry dictionary");
  bool d_json = false;
  dictionary->add_flag("--json", d_json, "emit JSON instead of a text table");
  dictionary->callback([&] { run_dictionary(io, d_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
