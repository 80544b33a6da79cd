#include "gmv/io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "gmv/errors.hpp"
#include "gmv/procrustes.hpp"

namespace gmv {

namespace {

class ByteWriter {
public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void i8(std::int8_t v) { buf_.push_back(static_cast<std::uint8_t>(v)); }
  void magic(const char tag[4]) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(tag[i]));
  }

  void flush(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParameterError("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(buf_.data()),
              static_cast<std::streamsize>(buf_.size()));
    if (!out) throw ParameterError("short write to '" + path + "'");
  }

private:
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
public:
  explicit ByteReader(const std::string& path) : path_(path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw ParameterError("cannot open '" + path + "' for reading");
    const std::streamsize size = in.tellg();
    in.seekg(0);
    buf_.resize(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(buf_.data()), size);
    if (!in) throw ParameterError("read failure on '" + path + "'");
  }

  std::size_t offset() const { return pos_; }

  void expect_magic(const char tag[4]) {
    need(4, std::string("magic '") + std::string(tag, 4) + "'");
    if (std::memcmp(buf_.data() + pos_, tag, 4) != 0)
      throw FormatError(path_ + ": bad magic, expected '" + std::string(tag, 4) + "'", pos_);
    pos_ += 4;
  }

  std::uint8_t u8() {
    need(1, "u8");
    return buf_[pos_++];
  }
  std::uint32_t u32() {
    need(4, "u32");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8, "u64");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  float f32() { return std::bit_cast<float>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::int8_t i8() { return static_cast<std::int8_t>(u8()); }

  void expect_end() const {
    if (pos_ != buf_.size())
      throw FormatError(path_ + ": trailing bytes after payload", pos_);
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw FormatError(path_ + ": " + what, at);
  }

private:
  void need(std::size_t n, const std::string& what) {
    if (pos_ + n > buf_.size())
      throw FormatError(path_ + ": truncated payload while reading " + what, pos_);
  }

  std::string path_;
  std::vector<std::uint8_t> buf_;
  std::size_t pos_ = 0;
};

constexpr char kDescriptorMagic[4] = {'G', 'M', 'V', 'D'};
constexpr char kModelMagic[4] = {'G', 'M', 'V', 'M'};
constexpr std::uint32_t kFormatVersion = 1;

void write_descriptor_payload(ByteWriter& w, const Eigen::MatrixXd& x,
                              const std::vector<std::uint32_t>& ids) {
  w.magic(kDescriptorMagic);
  w.u32(kFormatVersion);
  w.u32(static_cast<std::uint32_t>(x.rows()));
  w.u32(static_cast<std::uint32_t>(x.cols()));
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) w.f32(static_cast<float>(x(i, j)));
  for (std::uint32_t id : ids) w.u32(id);
}

struct DescriptorPayload {
  Eigen::MatrixXd x;
  std::vector<std::uint32_t> ids;
};

DescriptorPayload read_descriptor_payload(ByteReader& r) {
  r.expect_magic(kDescriptorMagic);
  const std::size_t version_at = r.offset();
  const std::uint32_t version = r.u32();
  if (version != kFormatVersion)
    r.fail("unsupported GMVD version " + std::to_string(version), version_at);
  const std::size_t dims_at = r.offset();
  const std::uint64_t d = r.u32();
  const std::uint64_t n = r.u32();
  if (d == 0 || n == 0) r.fail("zero dimension or column count", dims_at);
  if (d * n > (std::size_t{1} << 32)) r.fail("implausible matrix size", dims_at);

  DescriptorPayload out;
  out.x.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::size_t col_at = r.offset();
    for (std::uint64_t i = 0; i < d; ++i) {
      const std::size_t at = r.offset();
      const float v = r.f32();
      if (!std::isfinite(v)) r.fail("non-finite value", at);
      out.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
    const double norm = out.x.col(static_cast<Eigen::Index>(j)).norm();
    if (norm == 0.0) r.fail("zero-norm column " + std::to_string(j), col_at);
    out.x.col(static_cast<Eigen::Index>(j)) /= norm;
  }
  out.ids.resize(n);
  for (std::uint64_t j = 0; j < n; ++j) out.ids[j] = r.u32();
  r.expect_end();
  return out;
}

}  // namespace

void save_descriptors(const std::string& path, const TemplateMatrix& templates) {
  ByteWriter w;
  write_descriptor_payload(w, templates.x, templates.ids);
  w.flush(path);
}

TemplateMatrix load_descriptors(const std::string& path) {
  ByteReader r(path);
  DescriptorPayload p = read_descriptor_payload(r);
  TemplateMatrix out;
  out.x = std::move(p.x);
  out.ids = std::move(p.ids);
  return out;
}

void save_queries(const std::string& path, const QuerySet& queries) {
  std::vector<std::uint32_t> ids(static_cast<std::size_t>(queries.count()));
  for (std::size_t j = 0; j < ids.size(); ++j) {
    const auto& id = queries.identities[j];
    if (id.has_value() && *id == kImpostorId)
      throw ParameterError("save_queries: identity collides with the impostor sentinel");
    ids[j] = id.has_value() ? *id : kImpostorId;
  }
  ByteWriter w;
  write_descriptor_payload(w, queries.queries, ids);
  w.flush(path);
}

QuerySet load_queries(const std::string& path) {
  ByteReader r(path);
  DescriptorPayload p = read_descriptor_payload(r);
  QuerySet out;
  out.queries = std::move(p.x);
  out.identities.resize(p.ids.size());
  out.difficulty.assign(p.ids.size(), Difficulty::unsplit);
  for (std::size_t j = 0; j < p.ids.size(); ++j) {
    if (p.ids[j] == kImpostorId)
      out.identities[j] = std::nullopt;
    else
      out.identities[j] = p.ids[j];
  }
  return out;
}

void save_model(const std::string& path, const GroupModel& model) {
  ByteWriter w;
  w.magic(kModelMagic);
  w.u32(kFormatVersion);
  w.u32(static_cast<std::uint32_t>(model.dim()));
  w.u32(static_cast<std::uint32_t>(model.code_length()));
  w.u32(static_cast<std::uint32_t>(model.params.s));
  w.u32(static_cast<std::uint32_t>(model.group_count()));
  w.u8(static_cast<std::uint8_t>(model.params.method));
  w.f64(model.params.xi);
  w.f64(model.params.gamma);
  w.f64(model.params.eta);
  w.u64(model.params.seed);
  for (Eigen::Index j = 0; j < model.w.cols(); ++j)
    for (Eigen::Index i = 0; i < model.w.rows(); ++i) w.f32(static_cast<float>(model.w(i, j)));
  for (Eigen::Index j = 0; j < model.r.cols(); ++j)
    for (Eigen::Index i = 0; i < model.r.rows(); ++i)
      w.i8(static_cast<std::int8_t>(model.r(i, j)));
  for (const auto& group : model.partition.members) w.u32(static_cast<std::uint32_t>(group.size()));
  for (const auto& group : model.partition.members)
    for (int idx : group) w.u32(static_cast<std::uint32_t>(idx));
  w.flush(path);
}

GroupModel load_model(const std::string& path) {
  ByteReader r(path);
  r.expect_magic(kModelMagic);
  const std::size_t version_at = r.offset();
  const std::uint32_t version = r.u32();
  if (version != kFormatVersion)
    r.fail("unsupported GMVM version " + std::to_string(version), version_at);

  const std::size_t header_at = r.offset();
  const std::uint64_t d = r.u32();
  const std::uint64_t l = r.u32();
  const std::uint64_t s = r.u32();
  const std::uint64_t m = r.u32();
  if (d == 0 || l == 0 || m == 0) r.fail("zero dimension in header", header_at);
  if (l > d) r.fail("l exceeds d", header_at);
  if (s == 0 || s > l) r.fail("sparsity budget out of range", header_at);

  const std::size_t method_at = r.offset();
  const std::uint8_t method_tag = r.u8();
  if (method_tag > 3) r.fail("unknown method tag " + std::to_string(method_tag), method_at);

  GroupModel model;
  model.params.l = static_cast<int>(l);
  model.params.s = static_cast<int>(s);
  model.params.method = static_cast<Method>(method_tag);
  model.params.xi = r.f64();
  model.params.gamma = r.f64();
  model.params.eta = r.f64();
  model.params.seed = r.u64();

  model.w.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(l));
  for (std::uint64_t j = 0; j < l; ++j)
    for (std::uint64_t i = 0; i < d; ++i) {
      const std::size_t at = r.offset();
      const float v = r.f32();
      if (!std::isfinite(v)) r.fail("non-finite projection entry", at);
      model.w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }

  model.r.resize(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m));
  for (std::uint64_t j = 0; j < m; ++j)
    for (std::uint64_t i = 0; i < l; ++i) {
      const std::size_t at = r.offset();
      const std::int8_t v = r.i8();
      if (v < -1 || v > 1) r.fail("representation entry outside {-1,0,1}", at);
      model.r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }

  std::vector<std::uint32_t> sizes(m);
  std::uint64_t total = 0;
  for (std::uint64_t g = 0; g < m; ++g) {
    const std::size_t at = r.offset();
    sizes[g] = r.u32();
    if (sizes[g] == 0) r.fail("empty group " + std::to_string(g), at);
    total += sizes[g];
  }
  if (total > (std::size_t{1} << 31)) r.fail("implausible member count", r.offset());
  std::vector<std::vector<int>> members(m);
  for (std::uint64_t g = 0; g < m; ++g) {
    members[g].resize(sizes[g]);
    for (std::uint32_t k = 0; k < sizes[g]; ++k) {
      const std::size_t at = r.offset();
      const std::uint32_t idx = r.u32();
      if (idx >= total) r.fail("member index out of range", at);
      members[g][k] = static_cast<int>(idx);
    }
  }
  r.expect_end();

  try {
    model.partition = GroupPartition::from_members(std::move(members), static_cast<int>(total));
  } catch (const ParameterError& e) {
    throw FormatError(path + ": " + e.what(), r.offset());
  }

  // float32 storage cannot carry the orthonormality tolerance; restore it
  // with the nearest column-orthonormal matrix.
  model.w = orthogonal_procrustes(model.w);
  model.validate();
  return model;
}

}  // namespace gmv
