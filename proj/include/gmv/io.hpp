#pragma once

#include <cstdint>
#include <string>

#include "gmv/data.hpp"
#include "gmv/model.hpp"

namespace gmv {

// Binary file formats, little-endian on every platform.
//
// GMVD descriptor file:
//   magic "GMVD", u32 version=1, u32 d, u32 N,
//   d*N float32 column-major values, N u32 identity labels.
//
// GMVM model file:
//   magic "GMVM", u32 version=1, u32 d, u32 l, u32 S, u32 M,
//   u8 method {0=aoe,1=eoa,2=baseline-aoe,3=baseline-eoa},
//   f64 xi, f64 gamma, f64 eta, u64 seed,
//   W as d*l float32 column-major, R as l*M int8,
//   M u32 group sizes followed by the concatenated member indices (u32).
//
// W is stored in float32, which cannot carry the 1e-8 orthonormality
// tolerance; loading therefore restores orthonormality by replacing W with
// its polar factor (the nearest column-orthonormal matrix).

inline constexpr std::uint32_t kImpostorId = 0xFFFFFFFFu;

void save_descriptors(const std::string& path, const TemplateMatrix& templates);

/// Parses a GMVD file, re-normalizes columns, rejects non-finite values.
/// Throws FormatError (with byte offset) on malformed content.
TemplateMatrix load_descriptors(const std::string& path);

/// Query batches reuse the GMVD container; impostors carry the sentinel
/// identity kImpostorId. Difficulty tags are not persisted.
void save_queries(const std::string& path, const QuerySet& queries);
QuerySet load_queries(const std::string& path);

void save_model(const std::string& path, const GroupModel& model);
GroupModel load_model(const std::string& path);

}  // namespace gmv
