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

#include "qdiff/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "qdiff/error.hpp"

namespace qdiff::io {
namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <typename T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&v, b, sizeof(T));
  }
  return v;
}

using Header = std::map<std::string, std::string>;

class Writer {
 public:
  Writer(const std::filesystem::path& path, const std::string& magic) : out_(path, std::ios::binary) {
    if (!out_) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
    out_ << "format=" << magic << '\n';
  }
  void key(const std::string& k, const std::string& v) { out_ << k << '=' << v << '\n'; }
  void key(const std::string& k, long long v) { key(k, std::to_string(v)); }
  void end() { out_ << "end\n"; }
  void f64(double v) {
    v = to_little(v);
    out_.write(reinterpret_cast<const char*>(&v), sizeof v);
  }
  void i64(std::int64_t v) {
    v = to_little(v);
    out_.write(reinterpret_cast<const char*>(&v), sizeof v);
  }
  void c128(Complex z) {
    f64(z.real());
    f64(z.imag());
  }
  void finish(const std::filesystem::path& path) {
    out_.flush();
    if (!out_) throw Error(ErrorCode::kIo, "write failed for " + path.string());
  }

 private:
  std::ofstream out_;
};

class Reader {
 public:
  Reader(const std::filesystem::path& path, const std::string& magic) : path_(path), in_(path, std::ios::binary) {
    if (!in_) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    std::string line;
    bool ended = false;
    while (std::getline(in_, line)) {
      if (line == "end") {
        ended = true;
        break;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail("malformed header line '" + line + "'");
      header_[line.substr(0, eq)] = line.substr(eq + 1);
    }
    if (!ended) fail("missing header terminator");
    if (value("format") != magic) fail("expected format " + magic + ", found " + value("format"));
    if (header_.count("precision") && value("precision") != "binary64") fail("unsupported precision");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kFormat, path_.string() + ": " + what);
  }

  std::string value(const std::string& k) const {
    auto it = header_.find(k);
    if (it == header_.end()) fail("missing header key '" + k + "'");
    return it->second;
  }

  long long integer(const std::string& k, long long lo, long long hi) const {
    const std::string v = value(k);
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(v, &used);
    } catch (const std::exception&) {
      fail("non-integer value for '" + k + "'");
    }
    if (used != v.size() || x < lo || x > hi) fail("value out of range for '" + k + "'");
    return x;
  }

  double f64() {
    double v = 0.0;
    if (!in_.read(reinterpret_cast<char*>(&v), sizeof v)) fail("truncated payload");
    return to_little(v);
  }
  std::int64_t i64() {
    std::int64_t v = 0;
    if (!in_.read(reinterpret_cast<char*>(&v), sizeof v)) fail("truncated payload");
    return to_little(v);
  }
  Complex c128() {
    const double re = f64();
    return {re, f64()};
  }
  void expect_eof() {
    if (in_.peek() != std::char_traits<char>::eof()) fail("trailing bytes after payload");
  }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  Header header_;
};

constexpr long long kMaxDim = 1 << 20;

}  // namespace

void write_matrices(const std::filesystem::path& path, const std::vector<Matrix>& ms) {
  const long long n = ms.empty() ? 0 : ms.front().rows();
  for (const auto& m : ms) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::kSizeMismatch, "matrix stack must be square and uniform");
  }
  Writer w(path, "qmat-v1");
  w.key("n", n);
  w.key("count", static_cast<long long>(ms.size()));
  w.key("layout", "row-major");
  w.key("precision", "binary64");
  w.end();
  for (const auto& m : ms) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) w.c128(m(i, j));
  }
  w.finish(path);
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) { write_matrices(path, {m}); }

std::vector<Matrix> read_matrices(const std::filesystem::path& path) {
  Reader r(path, "qmat-v1");
  const auto n = r.integer("n", 0, 1 << 14);
  const auto count = r.integer("count", 0, kMaxDim);
  if (r.value("layout") != "row-major") r.fail("unsupported layout");
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long c = 0; c < count; ++c) {
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = r.c128();
    out.push_back(std::move(m));
  }
  r.expect_eof();
  return out;
}

Matrix read_matrix(const std::filesystem::path& path) {
  auto ms = read_matrices(path);
  if (ms.size() != 1) throw Error(ErrorCode::kFormat, path.string() + ": expected a single matrix");
  return std::move(ms.front());
}

void write_coefficients(const std::filesystem::path& path, const HarmonicCoefficients& c) {
  Writer w(path, "qcoef-v1");
  w.key("lmax", c.lmax());
  w.key("order", "l-major-m-fastest");
  w.key("precision", "binary64");
  w.end();
  for (const Complex& z : c.packed()) w.c128(z);
  w.finish(path);
}

HarmonicCoefficients read_coefficients(const std::filesystem::path& path) {
  Reader r(path, "qcoef-v1");
  const auto lmax = static_cast<int>(r.integer("lmax", 0, 4096));
  if (r.value("order") != "l-major-m-fastest") r.fail("unsupported order");
  std::vector<Complex> packed(static_cast<std::size_t>(HarmonicCoefficients::packed_size(lmax)));
  for (auto& z : packed) z = r.c128();
  r.expect_eof();
  return HarmonicCoefficients(lmax, std::move(packed));
}

void write_grid(const std::filesystem::path& path, const GridField& g) {
  if (g.weights.size() != g.colat.size() ||
      g.values.size() != g.colat.size() * static_cast<std::size_t>(g.nlon)) {
    throw Error(ErrorCode::kSizeMismatch, "inconsistent grid field");
  }
  Writer w(path, "qgrid-v1");
  w.key("nlat", g.nlat());
  w.key("nlon", g.nlon);
  w.key("precision", "binary64");
  w.end();
  for (double c : g.colat) w.f64(c);
  for (double q : g.weights) w.f64(q);
  for (int k = 0; k < g.nlon; ++k) w.f64(g.longitude(k));
  for (const Complex& z : g.values) w.c128(z);
  w.finish(path);
}

GridField read_grid(const std::filesystem::path& path) {
  Reader r(path, "qgrid-v1");
  GridField g;
  const auto nlat = r.integer("nlat", 1, kMaxDim);
  g.nlon = static_cast<int>(r.integer("nlon", 1, kMaxDim));
  g.colat.resize(static_cast<std::size_t>(nlat));
  g.weights.resize(static_cast<std::size_t>(nlat));
  for (auto& c : g.colat) c = r.f64();
  for (auto& q : g.weights) q = r.f64();
  for (int k = 0; k < g.nlon; ++k) {
    if (std::abs(r.f64() - g.longitude(k)) > 1e-12) r.fail("longitudes are not uniform");
  }
  g.values.resize(static_cast<std::size_t>(nlat * g.nlon));
  for (auto& z : g.values) z = r.c128();
  r.expect_eof();
  return g;
}

void write_mesh(const std::filesystem::path& path, const TriMesh& mesh) {
  const bool scalars = !mesh.face_scalars.empty();
  if (scalars && mesh.face_scalars.size() != mesh.faces.size()) {
    throw Error(ErrorCode::kSizeMismatch, "face scalars do not match face count");
  }
  Writer w(path, "qmesh-v1");
  w.key("vertices", static_cast<long long>(mesh.vertices.size()));
  w.key("faces", static_cast<long long>(mesh.faces.size()));
  w.key("scalars", scalars ? 1 : 0);
  w.key("precision", "binary64");
  w.key("index", "int64");
  w.end();
  for (const auto& v : mesh.vertices) {
    w.f64(v.x());
    w.f64(v.y());
    w.f64(v.z());
  }
  for (const auto& f : mesh.faces)
    for (int idx : f) w.i64(idx);
  for (double s : mesh.face_scalars) w.f64(s);
  w.finish(path);
}

TriMesh read_mesh(const std::filesystem::path& path) {
  Reader r(path, "qmesh-v1");
  if (r.value("index") != "int64") r.fail("unsupported index type");
  const auto nv = r.integer("vertices", 0, 1LL << 31);
  const auto nf = r.integer("faces", 0, 1LL << 31);
  const bool scalars = r.integer("scalars", 0, 1) == 1;
  TriMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i) {
    const double x = r.f64();
    const double y = r.f64();
    const double z = r.f64();
    try {
      mesh.vertices.emplace_back(x, y, z);
    } catch (const Error&) {
      r.fail("vertex " + std::to_string(i) + " is not on the unit sphere");
    }
  }
  mesh.faces.resize(static_cast<std::size_t>(nf));
  for (auto& f : mesh.faces) {
    for (auto& idx : f) {
      const auto v = r.i64();
      if (v < 0 || v >= nv) r.fail("face index out of range");
      idx = static_cast<int>(v);
    }
  }
  if (scalars) {
    mesh.face_scalars.resize(static_cast<std::size_t>(nf));
    for (auto& s : mesh.face_scalars) s = r.f64();
  }
  r.expect_eof();
  return mesh;
}

void write_eigenbasis(const std::filesystem::path& path, const LaplacianEigenbasis& eig) {
  std::vector<Matrix> ms;
  ms.reserve(static_cast<std::size_t>(eig.count()));
  for (int i = 0; i < eig.count(); ++i) ms.push_back(eig.at_index(i).dense());
  write_matrices(path, ms);
}

LaplacianEigenbasis read_eigenbasis(const std::filesystem::path& path, int n) {
  const auto ms = read_matrices(path);
  if (ms.empty() || ms.front().rows() != n || static_cast<int>(ms.size()) != n * n) {
    throw Error(ErrorCode::kFormat, path.string() + ": eigenbasis cache does not match N=" + std::to_string(n));
  }
  std::vector<BandMatrix> bands;
  bands.reserve(ms.size());
  for (int l = 0; l < n; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Matrix& d = ms[static_cast<std::size_t>(LaplacianEigenbasis::index(l, m))];
      BandMatrix b;
      b.n = n;
      b.offset = m;
      const int len = n - std::abs(m);
      b.entries.resize(static_cast<std::size_t>(len));
      double off_band = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i - j != m) off_band = std::max(off_band, std::abs(d(i, j)));
      if (off_band > 1e-12) {
        throw Error(ErrorCode::kFormat, path.string() + ": cached matrix is not supported on its diagonal");
      }
      for (int j = 0; j < len; ++j) b.entries[static_cast<std::size_t>(j)] = d(j + std::max(m, 0), j + std::max(-m, 0));
      bands.push_back(std::move(b));
    }
  }
  return LaplacianEigenbasis(n, std::move(bands));
}

}  // namespace qdiff::io
