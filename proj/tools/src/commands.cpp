// Copyright 2026 The qdiff Authors
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

#include "qdiff_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdiff/blob_transport.hpp"
#include "qdiff/error.hpp"
#include "qdiff/io.hpp"
#include "qdiff/mesh.hpp"
#include "qdiff/parallel.hpp"
#include "qdiff/quantization.hpp"
#include "qdiff/reference_flows.hpp"
#include "qdiff/render.hpp"
#include "qdiff/spin_basis.hpp"
#include "qdiff_cli/manifest.hpp"

namespace qdiff::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string model_name(Model m) { return m == Model::kEuler ? "euler" : "epdiff"; }
std::string integrator_name(Integrator i) { return i == Integrator::kRk4 ? "rk4" : "isomp"; }
std::string mode_name(BlobMode m) { return m == BlobMode::kDensity ? "density" : "center"; }

std::string opt_path(const std::optional<fs::path>& p) { return p ? p->generic_string() : ""; }

// Shortest decimal that round-trips, so CSV and manifest values are exact.
std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

void require_n(int n, int lo, int hi) {
  require(n >= lo && n <= hi, "N must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                                  std::to_string(n));
}

void require_width(int w) { require(w >= 16 && w <= 8192, "width must be in [16, 8192]"); }

void require_finite_nonneg(double v, const std::string& name) {
  require(std::isfinite(v) && v >= 0.0, name + " must be finite and >= 0");
}

void require_positive(double v, const std::string& name) {
  require(std::isfinite(v) && v > 0.0, name + " must be finite and > 0");
}

fs::path prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::vector<std::string>& columns) : out_(path) {
    if (!out_) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    row(columns);
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

void write_raster(const fs::path& path, const RenderedField& r, Manifest& manifest) {
  write_ppm(path, r.image);
  fs::path sidecar = path;
  sidecar += ".range";
  write_range_sidecar(sidecar, r.min, r.max);
  manifest.add_output(path);
  manifest.add_output(sidecar);
}

// Runs `body` with a manifest, turning library errors into a failed manifest
// before rethrowing.
template <typename Body>
int with_manifest(const fs::path& dir, const std::string& command, const json& config, Body&& body) {
  prepare_dir(dir);
  Manifest manifest(dir, command, config.dump());
  try {
    const int code = body(manifest);
    if (code == kOk) {
      manifest.finish_ok();
    } else {
      manifest.finish_failed("check_failed", "one or more checks failed");
    }
    return code;
  } catch (const Error& e) {
    manifest.finish_failed(std::string(to_string(e.code())), e.what());
    throw;
  } catch (const std::exception& e) {
    manifest.finish_failed("internal", e.what());
    throw;
  }
}

Vec3 parse_point(const std::string& text) {
  std::stringstream in(text);
  std::string part;
  std::vector<double> xs;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("point must be \"x,y,z\", got \"" + text + "\"");
    }
  }
  require(xs.size() == 3, "point must have three components, got \"" + text + "\"");
  return {xs[0], xs[1], xs[2]};
}

UnitVector3 unit_point(const Vec3& p) {
  require(p.allFinite() && std::abs(p.norm() - 1.0) <= 1e-6, "point must lie on the unit sphere (|p| = 1 within 1e-6)");
  return UnitVector3::normalized(p);
}

}  // namespace

HarmonicCoefficients default_vorticity() {
  HarmonicCoefficients c(4);
  auto set_real_pair = [&](int l, int m, Complex a) {
    c(l, m) = a;
    c(l, -m) = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(a);
  };
  c(2, 0) = 0.6;
  set_real_pair(2, 1, {0.5, 0.3});
  set_real_pair(3, 2, {0.4, 0.0});
  set_real_pair(4, 3, {0.0, 0.2});
  c(4, 0) = -0.25;
  return c;
}

LaplacianEigenbasis load_or_build_eigenbasis(int n, const std::optional<fs::path>& cache) {
  if (cache && fs::exists(*cache)) return io::read_eigenbasis(*cache, n);
  LaplacianEigenbasis eig = build_eigenbasis(build_spin_basis(n));
  if (cache) {
    if (cache->has_parent_path()) prepare_dir(cache->parent_path());
    io::write_eigenbasis(*cache, eig);
  }
  return eig;
}

void validate(const BasisCheckConfig& c) { require_n(c.n, 2, 256); }

void validate(const SimulateConfig& c) {
  require_n(c.n, 2, 256);
  require_finite_nonneg(c.t_final, "t-final");
  require_positive(c.h, "h");
  if (c.steps) require(*c.steps >= 1 && *c.steps <= 10000000, "steps must be in [1, 1e7]");
  require_width(c.width);
  if (c.initial) require(fs::exists(*c.initial), "initial file does not exist: " + c.initial->string());
}

void validate(const BlobConfig& c) {
  require_n(c.n, 2, 256);
  unit_point(c.point);
  require_finite_nonneg(c.t_final, "t-final");
  if (c.dt) require_positive(*c.dt, "dt");
  require(c.steps >= 1 && c.steps <= 10000000, "steps must be in [1, 1e7]");
  require_positive(c.h, "h");
  require_width(c.width);
}

void validate(const DeformConfig& c) {
  require(c.refinements >= 0 && c.refinements <= 8, "refinements must be in [0, 8]");
  require_finite_nonneg(c.t_final, "t-final");
  require_n(c.n, 2, 256);
  require_width(c.width);
}

void validate(const RenderConfig& c) {
  require(fs::exists(c.input), "input file does not exist: " + c.input.string());
  require(!c.output.empty(), "output path is required");
  require_width(c.width);
}

int cmd_basis_check(const BasisCheckConfig& c, std::ostream& log) {
  validate(c);
  const json config = {{"n", c.n}, {"out", c.out.generic_string()}};
  return with_manifest(c.out, "basis-check", config, [&](Manifest& manifest) {
    const int n = c.n;
    const SpinBasis basis(n);
    const auto& x = basis.generators();

    struct Check {
      std::string name;
      double value;
      double tolerance;
    };
    std::vector<Check> checks;

    const int cyc[3][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
    const char* names[3] = {"commutator_12_3", "commutator_31_2", "commutator_23_1"};
    for (int r = 0; r < 3; ++r) {
      const auto& [i, j, k] = cyc[r];
      const double res = (commutator(x[i], x[j]) - x[k] / static_cast<double>(n)).norm();
      checks.push_back({names[r], res, 1e-13 * n});
    }
    double skew = 0.0;
    double trace = 0.0;
    for (const auto& xk : x) {
      skew = std::max(skew, (xk + xk.adjoint()).norm());
      trace = std::max(trace, std::abs(xk.trace()));
    }
    checks.push_back({"skew_hermitian", skew, 1e-13});
    checks.push_back({"trace_free", trace, 1e-13});

    Matrix casimir = Matrix::Zero(n, n);
    for (const auto& xk : x) casimir += static_cast<double>(n) * n * xk * xk;
    casimir.diagonal().array() += 0.25 * (static_cast<double>(n) * n - 1.0);
    checks.push_back({"casimir", casimir.norm() / (0.25 * (static_cast<double>(n) * n - 1.0) * std::sqrt(n)), 1e-12});

    const LaplacianEigenbasis eig = build_eigenbasis(basis);
    std::vector<double> rayleigh(static_cast<std::size_t>(eig.count()));
    std::vector<double> residual(static_cast<std::size_t>(eig.count()));
    parallel_for(0, eig.count(), [&](int idx) {
      const int l = static_cast<int>(std::floor(std::sqrt(static_cast<double>(idx))));
      const Matrix t = eig.at_index(idx).dense();
      const Matrix lt = apply_laplacian(basis, t);
      rayleigh[static_cast<std::size_t>(idx)] = (t.adjoint() * lt).trace().real();
      residual[static_cast<std::size_t>(idx)] =
          (lt - LaplacianEigenbasis::eigenvalue(l) * t).norm() / std::max(1.0, -LaplacianEigenbasis::eigenvalue(l));
    });
    checks.push_back({"eigen_residual", *std::max_element(residual.begin(), residual.end()), 1e-10});

    double ortho = 0.0;
    double conj = 0.0;
    for (int m = -(n - 1); m <= n - 1; ++m) {
      const int len = n - std::abs(m);
      const int ls = n - std::abs(m);
      Matrix e(len, ls);
      for (int l = std::abs(m); l < n; ++l) {
        const auto& band = eig.at(l, m).entries;
        for (int p = 0; p < len; ++p) e(p, l - std::abs(m)) = band[static_cast<std::size_t>(p)];
        const auto& mirror = eig.at(l, -m).entries;
        const double sign = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
        for (int p = 0; p < len; ++p) {
          conj = std::max(conj, std::abs(std::conj(band[static_cast<std::size_t>(p)]) - sign * mirror[static_cast<std::size_t>(p)]));
        }
      }
      const Matrix gram = e.adjoint() * e;
      ortho = std::max(ortho, (gram - Matrix::Identity(ls, ls)).cwiseAbs().maxCoeff());
    }
    checks.push_back({"orthonormality", ortho, 1e-12});
    checks.push_back({"conjugation_symmetry", conj, 1e-12});

    // Spectrum grouped by degree.
    struct Degree {
      int multiplicity = 0;
      double deviation = 0.0;
    };
    std::vector<Degree> degrees(static_cast<std::size_t>(n));
    for (int idx = 0; idx < eig.count(); ++idx) {
      const int l = static_cast<int>(std::floor(std::sqrt(static_cast<double>(idx))));
      const double expected = LaplacianEigenbasis::eigenvalue(l);
      const double dev = std::abs(rayleigh[static_cast<std::size_t>(idx)] - expected);
      auto& d = degrees[static_cast<std::size_t>(l)];
      d.deviation = std::max(d.deviation, dev);
      if (dev <= 1e-9 * std::max(1.0, -expected)) ++d.multiplicity;
    }
    double spectrum_dev = 0.0;
    bool multiplicities_ok = true;
    {
      CsvWriter csv(c.out / "spectrum.csv", {"l", "eigenvalue", "multiplicity", "expected_multiplicity", "max_deviation"});
      log << "spectrum (l, eigenvalue, multiplicity):\n";
      for (int l = 0; l < n; ++l) {
        const auto& d = degrees[static_cast<std::size_t>(l)];
        spectrum_dev = std::max(spectrum_dev, d.deviation / std::max(1.0, -LaplacianEigenbasis::eigenvalue(l)));
        multiplicities_ok = multiplicities_ok && d.multiplicity == 2 * l + 1;
        csv.row({std::to_string(l), num(LaplacianEigenbasis::eigenvalue(l)), std::to_string(d.multiplicity),
                 std::to_string(2 * l + 1), num(d.deviation)});
        log << "  " << std::setw(4) << l << "  " << std::setw(10) << LaplacianEigenbasis::eigenvalue(l) << "  "
            << d.multiplicity << '\n';
      }
    }
    manifest.add_output(c.out / "spectrum.csv");
    checks.push_back({"spectrum", spectrum_dev, 1e-9});
    checks.push_back({"multiplicities", multiplicities_ok ? 0.0 : 1.0, 0.0});

    bool all = true;
    {
      CsvWriter csv(c.out / "basis_check.csv", {"check", "value", "tolerance", "status"});
      for (const auto& ch : checks) {
        const bool ok = ch.value <= ch.tolerance;
        all = all && ok;
        csv.row({ch.name, num(ch.value), num(ch.tolerance), ok ? "PASS" : "FAIL"});
        log << (ok ? "PASS " : "FAIL ") << std::left << std::setw(22) << ch.name << std::right
            << " value=" << std::scientific << std::setprecision(3) << ch.value << " tol=" << ch.tolerance
            << std::defaultfloat << std::setprecision(6) << '\n';
        manifest.add_result(ch.name, ch.value);
      }
    }
    manifest.add_output(c.out / "basis_check.csv");
    return all ? kOk : kFailure;
  });
}

int cmd_simulate(const SimulateConfig& c, std::ostream& log) {
  validate(c);
  const double h = c.steps ? (c.t_final > 0.0 ? c.t_final / *c.steps : c.h) : c.h;
  json config = {{"n", c.n},
                 {"model", model_name(c.model)},
                 {"t_final", c.t_final},
                 {"h", h},
                 {"steps", c.steps ? json(*c.steps) : json(nullptr)},
                 {"integrator", integrator_name(c.integrator)},
                 {"initial", c.initial ? json(opt_path(c.initial)) : json("default")},
                 {"save_states", c.save_states},
                 {"width", c.width},
                 {"out", c.out.generic_string()},
                 {"cache_eigenbasis", opt_path(c.cache_eigenbasis)}};
  return with_manifest(c.out, "simulate", config, [&](Manifest& manifest) {
    const LaplacianEigenbasis eig = load_or_build_eigenbasis(c.n, c.cache_eigenbasis);
    Matrix w;
    if (!c.initial) {
      w = quantize_function(default_vorticity(), eig);
    } else {
      try {
        w = quantize_function(io::read_coefficients(*c.initial), eig);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kFormat) throw;
        w = io::read_matrix(*c.initial);
      }
      require_square(w, c.n, "initial vorticity");
    }
    w.diagonal().array() -= w.trace() / static_cast<double>(c.n);

    const VorticityTrajectory traj =
        evolve_vorticity(eig, VorticityState{w, c.model}, c.t_final, h, c.integrator, c.save_states);

    const Complex tr2_0 = traj.diagnostics.front().trace_square;
    double max_tr2_drift = 0.0;
    double max_spec_drift = 0.0;
    {
      CsvWriter csv(c.out / "diagnostics.csv", {"step", "time", "trace_re", "trace_im", "trace_square_re",
                                                "trace_square_im", "trace_square_drift", "spectral_drift"});
      for (const auto& d : traj.diagnostics) {
        const double drift = std::abs(d.trace_square - tr2_0);
        max_tr2_drift = std::max(max_tr2_drift, drift);
        max_spec_drift = std::max(max_spec_drift, d.spectral_drift);
        csv.row({std::to_string(d.step), num(d.time), num(d.trace.real()), num(d.trace.imag()),
                 num(d.trace_square.real()), num(d.trace_square.imag()), num(drift), num(d.spectral_drift)});
      }
    }
    manifest.add_output(c.out / "diagnostics.csv");

    const Matrix& final_w = traj.states.back().w;
    io::write_matrix(c.out / "final_w.qmat", final_w);
    manifest.add_output(c.out / "final_w.qmat");
    if (c.save_states) {
      std::vector<Matrix> ms;
      ms.reserve(traj.states.size());
      for (const auto& s : traj.states) ms.push_back(s.w);
      io::write_matrices(c.out / "states.qmat", ms);
      manifest.add_output(c.out / "states.qmat");
    }
    const HarmonicCoefficients omega = dequantize_function(final_w, eig);
    io::write_coefficients(c.out / "final_vorticity.qcoef", omega);
    manifest.add_output(c.out / "final_vorticity.qcoef");
    write_raster(c.out / "vorticity.ppm", render_field(omega, c.width), manifest);

    manifest.add_result("steps", static_cast<double>(traj.diagnostics.size() - 1));
    manifest.add_result("max_trace_square_drift", max_tr2_drift);
    manifest.add_result("max_spectral_drift", max_spec_drift);
    log << "simulate: N=" << c.n << " model=" << model_name(c.model) << " integrator=" << integrator_name(c.integrator)
        << " steps=" << traj.diagnostics.size() - 1 << " max|dTrW^2|=" << max_tr2_drift
        << " max spectral drift=" << max_spec_drift << '\n';
    return kOk;
  });
}

int cmd_blob(const BlobConfig& c, std::ostream& log) {
  validate(c);
  const UnitVector3 y0 = unit_point(c.point);
  const double dt = c.dt.value_or(c.t_final > 0.0 ? c.t_final / 10.0 : 1.0);
  json config = {{"n", c.n},
                 {"mode", mode_name(c.mode)},
                 {"point", {y0.x(), y0.y(), y0.z()}},
                 {"width", c.width},
                 {"out", c.out.generic_string()},
                 {"cache_eigenbasis", opt_path(c.cache_eigenbasis)}};
  if (c.mode == BlobMode::kDensity) {
    config["t_final"] = c.t_final;
    config["dt"] = dt;
  } else {
    config["steps"] = c.steps;
    config["h"] = c.h;
  }
  return with_manifest(c.out, "blob", config, [&](Manifest& manifest) {
    const SpinBasis basis(c.n);
    const LaplacianEigenbasis eig = load_or_build_eigenbasis(c.n, c.cache_eigenbasis);
    const Matrix p = quantize_generator(example_generator(), eig);
    const BlobMatrix b0 = blob_at(basis, y0);
    const bool south = y0.z() <= -1.0 + 1e-12;

    CsvWriter csv(c.out / "track.csv", {"step", "t", "x", "y", "z", "exact_distance", "max_entry"});
    auto record = [&](int step, double t, const Matrix& b) {
      const UnitVector3 ctr = blob_center(basis, b);
      const double err = south ? angular_distance(ctr, y0) : angular_distance(ctr, exact_flow(y0, t));
      csv.row({std::to_string(step), num(t), num(ctr.x()), num(ctr.y()), num(ctr.z()), num(err),
               num(b.cwiseAbs().maxCoeff())});
      return std::pair{ctr, err};
    };

    Matrix final_b;
    std::pair<UnitVector3, double> last;
    if (c.mode == BlobMode::kDensity) {
      const int samples = c.t_final == 0.0 ? 0 : static_cast<int>(std::ceil(c.t_final / dt - 1e-9));
      last = record(0, 0.0, b0.matrix);
      final_b = b0.matrix;
      for (int k = 1; k <= samples; ++k) {
        const double t = (k == samples) ? c.t_final : k * dt;
        final_b = act_density(flow_of_stream(p, t), b0.matrix);
        last = record(k, t, final_b);
      }
    } else {
      const BlobTrajectory traj = transport_blob(basis, p, b0, c.steps, c.h);
      for (std::size_t k = 0; k < traj.steps.size(); ++k) {
        last = record(static_cast<int>(k), static_cast<double>(k) * c.h, traj.steps[k].matrix);
      }
      final_b = traj.steps.back().matrix;
      manifest.add_result("spectral_drift", spectral_distance(sorted_eigenvalues(final_b), sorted_eigenvalues(b0.matrix)));
    }
    manifest.add_output(c.out / "track.csv");

    io::write_matrix(c.out / "final_blob.qmat", final_b);
    manifest.add_output(c.out / "final_blob.qmat");
    const HarmonicCoefficients density = density_coefficients(final_b, eig);
    io::write_coefficients(c.out / "final_density.qcoef", density);
    manifest.add_output(c.out / "final_density.qcoef");
    write_raster(c.out / "blob.ppm", render_field(density, c.width), manifest);

    manifest.add_result("final_x", last.first.x());
    manifest.add_result("final_y", last.first.y());
    manifest.add_result("final_z", last.first.z());
    manifest.add_result("exact_distance", last.second);
    log << "blob: mode=" << mode_name(c.mode) << " N=" << c.n << " final center=(" << last.first.x() << ", "
        << last.first.y() << ", " << last.first.z() << ") distance to exact flow=" << last.second << " rad\n";
    return kOk;
  });
}

int cmd_deform(const DeformConfig& c, std::ostream& log) {
  validate(c);
  const json config = {{"refinements", c.refinements}, {"t_final", c.t_final}, {"n", c.n},
                       {"width", c.width},             {"out", c.out.generic_string()},
                       {"cache_eigenbasis", opt_path(c.cache_eigenbasis)}};
  return with_manifest(c.out, "deform", config, [&](Manifest& manifest) {
    const TriMesh mesh = icosasphere(c.refinements);
    TriMesh moved = transport_mesh(mesh, c.t_final);
    moved.face_scalars = face_area_ratios(mesh, moved);
    io::write_mesh(c.out / "mesh.qmesh", moved);
    manifest.add_output(c.out / "mesh.qmesh");

    double south_min = std::numeric_limits<double>::infinity();
    double north_max = 0.0;
    for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
      const double z = moved.face_centroid(f).z();
      const double r = moved.face_scalars[static_cast<std::size_t>(f)];
      if (z < -0.5) south_min = std::min(south_min, r);
      if (z > 0.5) north_max = std::max(north_max, r);
    }
    const double area = total_area(moved);

    const LaplacianEigenbasis eig = load_or_build_eigenbasis(c.n, c.cache_eigenbasis);
    const Matrix p = quantize_generator(example_generator(), eig);
    const Matrix ff = act_density(flow_of_stream(p, c.t_final), Matrix::Identity(c.n, c.n));
    io::write_matrix(c.out / "ff.qmat", ff);
    manifest.add_output(c.out / "ff.qmat");
    const HarmonicCoefficients density = density_coefficients(ff, eig);
    io::write_coefficients(c.out / "ff.qcoef", density);
    manifest.add_output(c.out / "ff.qcoef");
    write_raster(c.out / "ff.ppm", render_field(density, c.width), manifest);
    const double at_south = evaluate(density, std::numbers::pi, 0.0).real();
    const double at_north = evaluate(density, 0.0, 0.0).real();

    manifest.add_result("faces", static_cast<double>(mesh.faces.size()));
    manifest.add_result("south_min_ratio", south_min);
    manifest.add_result("north_max_ratio", north_max);
    manifest.add_result("total_area", area);
    manifest.add_result("ff_south", at_south);
    manifest.add_result("ff_north", at_north);
    log << "deform: faces=" << mesh.faces.size() << " min ratio (z<-0.5)=" << south_min
        << " max ratio (z>0.5)=" << north_max << " total area=" << std::setprecision(12) << area
        << std::setprecision(6) << " FF* south=" << at_south << " north=" << at_north << '\n';
    return kOk;
  });
}

int cmd_render(const RenderConfig& c, std::ostream& log) {
  validate(c);
  std::ifstream probe(c.input);
  std::string first;
  std::getline(probe, first);
  RenderedField r;
  if (first == "format=qcoef-v1") {
    r = render_field(io::read_coefficients(c.input), c.width);
  } else if (first == "format=qgrid-v1") {
    r = render_field(io::read_grid(c.input), c.width);
  } else if (first == "format=qmat-v1") {
    const Matrix m = io::read_matrix(c.input);
    const LaplacianEigenbasis eig = build_eigenbasis(build_spin_basis(static_cast<int>(m.rows())));
    r = render_field(density_coefficients(m, eig), c.width);
  } else {
    throw Error(ErrorCode::kFormat, c.input.string() + ": unrecognized container");
  }
  if (c.output.has_parent_path()) prepare_dir(c.output.parent_path());
  write_ppm(c.output, r.image);
  fs::path sidecar = c.output;
  sidecar += ".range";
  write_range_sidecar(sidecar, r.min, r.max);
  log << "render: " << c.output.string() << " min=" << r.min << " max=" << r.max << '\n';
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantized hydrodynamics and diffeomorphisms on the sphere"};
  app.name(args.empty() ? "qdiff" : fs::path(args.front()).filename().string());
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", QDIFF_VERSION);

  const std::map<std::string, Model> models{{"euler", Model::kEuler}, {"epdiff", Model::kEpdiff}};
  const std::map<std::string, Integrator> integrators{{"isomp", Integrator::kIsospectralMidpoint},
                                                       {"rk4", Integrator::kRk4}};
  const std::map<std::string, BlobMode> modes{{"density", BlobMode::kDensity}, {"center", BlobMode::kCenter}};

  BasisCheckConfig basis_cfg;
  auto* basis_cmd = app.add_subcommand("basis-check", "Spin-basis and Laplacian invariant suite");
  basis_cmd->add_option("--n", basis_cfg.n, "Matrix size N");
  basis_cmd->add_option("--out", basis_cfg.out, "Output directory");

  SimulateConfig sim_cfg;
  auto* sim_cmd = app.add_subcommand("simulate", "Quantized vorticity evolution");
  sim_cmd->add_option("--n", sim_cfg.n, "Matrix size N");
  sim_cmd->add_option("--model", sim_cfg.model, "euler | epdiff")->transform(CLI::CheckedTransformer(models));
  sim_cmd->add_option("--t-final", sim_cfg.t_final, "Final time");
  auto* sim_h = sim_cmd->add_option("--h", sim_cfg.h, "Step size");
  sim_cmd->add_option("--dt", sim_cfg.h, "Alias of --h")->excludes(sim_h);
  sim_cmd->add_option("--steps", sim_cfg.steps, "Number of steps (sets h = t_final / steps)");
  sim_cmd->add_option("--integrator", sim_cfg.integrator, "isomp | rk4")
      ->transform(CLI::CheckedTransformer(integrators));
  sim_cmd->add_option("--initial", sim_cfg.initial, "Initial vorticity (qcoef-v1 function or qmat-v1 matrix)");
  sim_cmd->add_flag("--save-states", sim_cfg.save_states, "Write every state to states.qmat");
  sim_cmd->add_option("--width", sim_cfg.width, "Raster width");
  sim_cmd->add_option("--out", sim_cfg.out, "Output directory");
  sim_cmd->add_option("--cache-eigenbasis", sim_cfg.cache_eigenbasis, "Eigenbasis cache file");

  BlobConfig blob_cfg;
  std::string blob_point = "-1,0,0";
  auto* blob_cmd = app.add_subcommand("blob", "Transport a quantized point mass along the example flow");
  blob_cmd->add_option("--n", blob_cfg.n, "Matrix size N");
  blob_cmd->add_option("--mode", blob_cfg.mode, "density | center")->transform(CLI::CheckedTransformer(modes));
  blob_cmd->add_option("--point", blob_point, "Initial point \"x,y,z\"");
  blob_cmd->add_option("--t-final", blob_cfg.t_final, "Final time (density mode)");
  blob_cmd->add_option("--dt", blob_cfg.dt, "Track spacing (density mode)");
  blob_cmd->add_option("--steps", blob_cfg.steps, "Number of steps (center mode)");
  blob_cmd->add_option("--h", blob_cfg.h, "Step size (center mode)");
  blob_cmd->add_option("--width", blob_cfg.width, "Raster width");
  blob_cmd->add_option("--out", blob_cfg.out, "Output directory");
  blob_cmd->add_option("--cache-eigenbasis", blob_cfg.cache_eigenbasis, "Eigenbasis cache file");

  DeformConfig deform_cfg;
  auto* deform_cmd = app.add_subcommand("deform", "Icosasphere deformation and quantized F F*");
  deform_cmd->add_option("--refinements", deform_cfg.refinements, "Icosahedron subdivisions");
  deform_cmd->add_option("--t-final", deform_cfg.t_final, "Flow time");
  deform_cmd->add_option("--n", deform_cfg.n, "Matrix size N");
  deform_cmd->add_option("--width", deform_cfg.width, "Raster width");
  deform_cmd->add_option("--out", deform_cfg.out, "Output directory");
  deform_cmd->add_option("--cache-eigenbasis", deform_cfg.cache_eigenbasis, "Eigenbasis cache file");

  RenderConfig render_cfg;
  auto* render_cmd = app.add_subcommand("render", "Hammer-projection raster of a stored field");
  render_cmd->add_option("--input", render_cfg.input, "qcoef-v1, qgrid-v1 or qmat-v1 file")->required();
  render_cmd->add_option("--out", render_cfg.output, "Output PPM path")->required();
  render_cmd->add_option("--width", render_cfg.width, "Raster width");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << QDIFF_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: code=usage message=" << msg << '\n';
    return kUsage;
  }

  try {
    if (*basis_cmd) return cmd_basis_check(basis_cfg, out);
    if (*sim_cmd) return cmd_simulate(sim_cfg, out);
    if (*blob_cmd) {
      blob_cfg.point = parse_point(blob_point);
      return cmd_blob(blob_cfg, out);
    }
    if (*deform_cmd) return cmd_deform(deform_cfg, out);
    if (*render_cmd) return cmd_render(render_cfg, out);
  } catch (const UsageError& e) {
    err << "error: code=usage message=" << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: code=" << to_string(e.code()) << " message=" << msg << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: code=internal message=" << msg << '\n';
    return kFailure;
  }
  err << "error: code=usage message=no subcommand\n";
  return kUsage;
}

}  // namespace qdiff::cli
