// Core dataset types: point clouds, labeled samples and train/test splits.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "pcdistill/common.hpp"

namespace pcdistill {

using Points = Eigen::Matrix<real_t, Eigen::Dynamic, 3, Eigen::RowMajor>;

struct PointCloud {
  Points points;

  int size() const { return static_cast<int>(points.rows()); }
  bool finite() const { return points.allFinite(); }
};

enum class Provenance : std::uint8_t { real = 0, pseudo_open = 1, open_test = 2 };

struct LabeledSample {
  PointCloud cloud;
  int label = 0;
  Provenance provenance = Provenance::real;
};

// closed_* partitions carry labels 0..k-1; open_test and pseudo_open_train
// carry the unknown-class label k. Immutable once built.
struct DatasetSplit {
  std::vector<LabeledSample> closed_train;
  std::vector<LabeledSample> closed_test;
  std::vector<LabeledSample> open_test;
  std::vector<LabeledSample> pseudo_open_train;
  std::vector<std::string> class_names;

  int known_classes() const { return static_cast<int>(class_names.size()); }
};

// Center on the centroid, then scale so the farthest point sits on the unit
// sphere. A cloud of coincident points collapses to all zeros.
inline PointCloud normalize_cloud(const PointCloud& cloud) {
  if (cloud.size() < 1) throw ShapeError("normalize_cloud: empty cloud");
  PointCloud out;
  const Eigen::RowVector3d centroid = cloud.points.colwise().mean();
  out.points = cloud.points.rowwise() - centroid;
  const real_t max_norm = out.points.rowwise().norm().maxCoeff();
  if (max_norm > 0.0) {
    out.points /= max_norm;
  } else {
    out.points.setZero();
  }
  return out;
}

// Coordinates are persisted as 32-bit floats; snapping them to that grid at
// ingestion keeps cache round-trips bit-exact.
inline void quantize_coords_f32(PointCloud& cloud) {
  for (Eigen::Index i = 0; i < cloud.points.rows(); ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      cloud.points(i, j) = static_cast<real_t>(static_cast<float>(cloud.points(i, j)));
}

inline void validate_sample(const LabeledSample& s, int k, int expected_points) {
  if (expected_points >= 0 && s.cloud.size() != expected_points)
    throw ShapeError("sample has " + std::to_string(s.cloud.size()) + " points, expected " +
                     std::to_string(expected_points));
  if (!s.cloud.finite()) throw Error("sample has non-finite coordinates");
  if (s.label < 0 || s.label > k) throw Error("label out of range: " + std::to_string(s.label));
  const bool open_label = s.label == k;
  const bool open_prov = s.provenance != Provenance::real;
  if (open_label != open_prov)
    throw Error("label/provenance mismatch: label " + std::to_string(s.label));
}

inline void validate_split(const DatasetSplit& split, int expected_points = -1) {
  const int k = split.known_classes();
  if (k < 1) throw ConfigError("split has no known classes");
  for (const auto& s : split.closed_train) {
    validate_sample(s, k, expected_points);
    if (s.label == k) throw Error("closed_train sample labeled as unknown");
  }
  for (const auto& s : split.closed_test) {
    validate_sample(s, k, expected_points);
    if (s.label == k) throw Error("closed_test sample labeled as unknown");
  }
  for (const auto& s : split.open_test) {
    validate_sample(s, k, expected_points);
    if (s.label != k || s.provenance != Provenance::open_test)
      throw Error("open_test sample not labeled as unknown");
  }
  for (const auto& s : split.pseudo_open_train) {
    validate_sample(s, k, expected_points);
    if (s.label != k || s.provenance != Provenance::pseudo_open)
      throw Error("pseudo_open_train sample not labeled as pseudo-open");
  }
}

}  // namespace pcdistill
