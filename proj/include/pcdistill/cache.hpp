// Binary dataset cache. Little-endian, versioned header, coordinates stored
// as 32-bit floats:
//
//   magic   8 bytes  "PCDSPLIT"
//   u32     version (currently 1)
//   u32     n0            points per cloud
//   u32     k             number of known classes
//   k *     (u32 len, bytes)   class names
//   u64[4]  record counts: closed_train, closed_test, open_test, pseudo_open_train
//   records, in the partition order above:
//     u32 label, u8 provenance, f32 xyz * n0
#pragma once

#include <array>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pcdistill/types.hpp"

namespace pcdistill {

namespace detail {

constexpr char kCacheMagic[8] = {'P', 'C', 'D', 'S', 'P', 'L', 'I', 'T'};
constexpr std::uint32_t kCacheVersion = 1;

template <class T>
void write_pod(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
void read_pod(std::istream& in, T& value, const char* what) {
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw CacheTruncationError(std::string("cache truncated while reading ") + what);
}

inline void write_record(std::ostream& out, const LabeledSample& s) {
  write_pod(out, static_cast<std::uint32_t>(s.label));
  write_pod(out, static_cast<std::uint8_t>(s.provenance));
  for (Eigen::Index i = 0; i < s.cloud.points.rows(); ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      write_pod(out, static_cast<float>(s.cloud.points(i, j)));
}

inline LabeledSample read_record(std::istream& in, int n0, int k) {
  LabeledSample s;
  std::uint32_t label = 0;
  std::uint8_t prov = 0;
  read_pod(in, label, "record label");
  read_pod(in, prov, "record provenance");
  if (label > static_cast<std::uint32_t>(k))
    throw IoError("cache record label out of range: " + std::to_string(label));
  if (prov > 2) throw IoError("cache record has unknown provenance tag");
  s.label = static_cast<int>(label);
  s.provenance = static_cast<Provenance>(prov);
  s.cloud.points.resize(n0, 3);
  std::vector<float> buf(static_cast<std::size_t>(n0) * 3);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!in) throw CacheTruncationError("cache truncated inside a point record");
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < 3; ++j)
      s.cloud.points(i, j) = static_cast<real_t>(buf[static_cast<std::size_t>(i) * 3 + static_cast<std::size_t>(j)]);
  return s;
}

}  // namespace detail

inline void write_cache(const DatasetSplit& split, const std::filesystem::path& path) {
  int n0 = -1;
  for (const auto* part : {&split.closed_train, &split.closed_test, &split.open_test,
                           &split.pseudo_open_train}) {
    for (const auto& s : *part) {
      if (n0 < 0) n0 = s.cloud.size();
      if (s.cloud.size() != n0) throw ShapeError("write_cache: inconsistent point counts");
    }
  }
  if (n0 < 0) n0 = 0;  // fully empty split is still writable
  validate_split(split, n0 > 0 ? n0 : -1);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open cache for writing: " + path.string());
  out.write(detail::kCacheMagic, sizeof(detail::kCacheMagic));
  detail::write_pod(out, detail::kCacheVersion);
  detail::write_pod(out, static_cast<std::uint32_t>(n0));
  detail::write_pod(out, static_cast<std::uint32_t>(split.known_classes()));
  for (const auto& name : split.class_names) {
    detail::write_pod(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
  const std::array<std::uint64_t, 4> counts = {
      split.closed_train.size(), split.closed_test.size(), split.open_test.size(),
      split.pseudo_open_train.size()};
  for (const auto c : counts) detail::write_pod(out, c);
  for (const auto& s : split.closed_train) detail::write_record(out, s);
  for (const auto& s : split.closed_test) detail::write_record(out, s);
  for (const auto& s : split.open_test) detail::write_record(out, s);
  for (const auto& s : split.pseudo_open_train) detail::write_record(out, s);
  if (!out) throw IoError("failed writing cache: " + path.string());
}

inline DatasetSplit read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open cache: " + path.string());

  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, detail::kCacheMagic, sizeof(magic)) != 0)
    throw IoError("not a dataset cache: " + path.string());
  std::uint32_t version = 0, n0 = 0, k = 0;
  detail::read_pod(in, version, "version");
  if (version != detail::kCacheVersion)
    throw CacheVersionError("cache version " + std::to_string(version) + " unsupported (expected " +
                            std::to_string(detail::kCacheVersion) + ")");
  detail::read_pod(in, n0, "point count");
  detail::read_pod(in, k, "class count");

  DatasetSplit split;
  split.class_names.resize(k);
  for (auto& name : split.class_names) {
    std::uint32_t len = 0;
    detail::read_pod(in, len, "class name length");
    name.resize(len);
    in.read(name.data(), len);
    if (!in) throw CacheTruncationError("cache truncated inside class names");
  }
  std::array<std::uint64_t, 4> counts{};
  for (auto& c : counts) detail::read_pod(in, c, "record counts");

  auto read_partition = [&](std::vector<LabeledSample>& dst, std::uint64_t n) {
    dst.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
      dst.push_back(detail::read_record(in, static_cast<int>(n0), static_cast<int>(k)));
  };
  read_partition(split.closed_train, counts[0]);
  read_partition(split.closed_test, counts[1]);
  read_partition(split.open_test, counts[2]);
  read_partition(split.pseudo_open_train, counts[3]);

  in.peek();
  if (!in.eof()) throw IoError("cache has trailing bytes: " + path.string());
  validate_split(split, n0 > 0 ? static_cast<int>(n0) : -1);
  return split;
}

}  // namespace pcdistill
