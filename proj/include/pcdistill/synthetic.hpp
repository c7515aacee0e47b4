// Synthetic primitive-shape dataset for CPU-scale runs and CI. Four known
// classes (sphere, cube, cylinder, torus) and two held-out classes (cone,
// pyramid) that only appear in the open-set test partition. Points are drawn
// uniformly from each primitive's surface, then jittered per sample with a
// random anisotropic scale and rotation so classes have intra-class variance.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pcdistill/random.hpp"
#include "pcdistill/types.hpp"

namespace pcdistill {

struct SyntheticConfig {
  int train_per_class = 500;
  int test_per_class = 60;
  int open_test_per_class = 60;
  int n_points = 64;
  std::uint64_t rng_seed = 1;
};

namespace detail {

inline Eigen::RowVector3d sphere_point(Rng& rng) {
  Eigen::RowVector3d d(rng.normal(), rng.normal(), rng.normal());
  const real_t n = d.norm();
  return n > 0 ? Eigen::RowVector3d(d / n) : Eigen::RowVector3d(1, 0, 0);
}

inline Eigen::RowVector3d cube_point(Rng& rng) {
  const auto face = rng.uniform_int(0, 5);
  const real_t u = rng.uniform(-1.0, 1.0), v = rng.uniform(-1.0, 1.0);
  switch (face) {
    case 0: return {u, v, 1.0};
    case 1: return {u, v, -1.0};
    case 2: return {u, 1.0, v};
    case 3: return {u, -1.0, v};
    case 4: return {1.0, u, v};
    default: return {-1.0, u, v};
  }
}

inline Eigen::RowVector3d cylinder_point(Rng& rng) {
  const real_t r = 0.5, h = 1.4;
  const real_t lateral = 2.0 * M_PI * r * h;
  const real_t caps = 2.0 * M_PI * r * r;
  if (rng.uniform() * (lateral + caps) < lateral) {
    const real_t theta = rng.uniform(0.0, 2.0 * M_PI);
    return {r * std::cos(theta), r * std::sin(theta), rng.uniform(-h / 2, h / 2)};
  }
  const real_t theta = rng.uniform(0.0, 2.0 * M_PI);
  const real_t rho = r * std::sqrt(rng.uniform());
  const real_t z = rng.uniform() < 0.5 ? -h / 2 : h / 2;
  return {rho * std::cos(theta), rho * std::sin(theta), z};
}

inline Eigen::RowVector3d torus_point(Rng& rng) {
  const real_t R = 1.0, r = 0.4;
  // rejection on the minor angle keeps the surface density uniform
  real_t v = 0.0;
  for (;;) {
    v = rng.uniform(0.0, 2.0 * M_PI);
    if (rng.uniform() * (R + r) <= R + r * std::cos(v)) break;
  }
  const real_t u = rng.uniform(0.0, 2.0 * M_PI);
  const real_t w = R + r * std::cos(v);
  return {w * std::cos(u), w * std::sin(u), r * std::sin(v)};
}

inline Eigen::RowVector3d cone_point(Rng& rng) {
  const real_t r = 0.7, h = 1.4;
  const real_t slant = std::sqrt(r * r + h * h);
  const real_t lateral = M_PI * r * slant;
  const real_t base = M_PI * r * r;
  const real_t theta = rng.uniform(0.0, 2.0 * M_PI);
  if (rng.uniform() * (lateral + base) < lateral) {
    const real_t t = std::sqrt(rng.uniform());  // area grows with distance from apex
    return {t * r * std::cos(theta), t * r * std::sin(theta), h / 2 - t * h};
  }
  const real_t rho = r * std::sqrt(rng.uniform());
  return {rho * std::cos(theta), rho * std::sin(theta), -h / 2};
}

inline Eigen::RowVector3d triangle_point(const Eigen::RowVector3d& a, const Eigen::RowVector3d& b,
                                         const Eigen::RowVector3d& c, Rng& rng) {
  const real_t su = std::sqrt(rng.uniform());
  const real_t v = rng.uniform();
  return (1.0 - su) * a + su * (1.0 - v) * b + su * v * c;
}

inline Eigen::RowVector3d pyramid_point(Rng& rng) {
  const real_t s = 0.6, h = 1.2;  // half base side, height
  const Eigen::RowVector3d apex(0, 0, h / 2);
  const Eigen::RowVector3d c0(-s, -s, -h / 2), c1(s, -s, -h / 2), c2(s, s, -h / 2), c3(-s, s, -h / 2);
  const real_t side = 0.5 * ((c1 - c0).cross(apex - c0)).norm();
  const real_t base_tri = 0.5 * ((c1 - c0).cross(c2 - c0)).norm();
  const real_t total = 4 * side + 2 * base_tri;
  real_t pick = rng.uniform() * total;
  const Eigen::RowVector3d corners[4] = {c0, c1, c2, c3};
  for (int f = 0; f < 4; ++f) {
    if (pick < side) return triangle_point(corners[f], corners[(f + 1) % 4], apex, rng);
    pick -= side;
  }
  if (pick < base_tri) return triangle_point(c0, c1, c2, rng);
  return triangle_point(c0, c2, c3, rng);
}

inline PointCloud synthetic_cloud(int class_id, int n_points, Rng& rng) {
  PointCloud cloud;
  cloud.points.resize(n_points, 3);
  for (int i = 0; i < n_points; ++i) {
    Eigen::RowVector3d p;
    switch (class_id) {
      case 0: p = sphere_point(rng); break;
      case 1: p = cube_point(rng); break;
      case 2: p = cylinder_point(rng); break;
      case 3: p = torus_point(rng); break;
      case 4: p = cone_point(rng); break;
      default: p = pyramid_point(rng); break;
    }
    cloud.points.row(i) = p;
  }
  // per-sample pose/shape jitter
  const real_t sx = rng.uniform(0.8, 1.2), sy = rng.uniform(0.8, 1.2), sz = rng.uniform(0.8, 1.2);
  const real_t yaw = rng.uniform(0.0, 2.0 * M_PI);
  const real_t tilt = rng.uniform(-0.25, 0.25);
  Eigen::Matrix3d rot_z, rot_x;
  rot_z << std::cos(yaw), -std::sin(yaw), 0, std::sin(yaw), std::cos(yaw), 0, 0, 0, 1;
  rot_x << 1, 0, 0, 0, std::cos(tilt), -std::sin(tilt), 0, std::sin(tilt), std::cos(tilt);
  const Eigen::Matrix3d rot = rot_x * rot_z;
  for (int i = 0; i < n_points; ++i) {
    Eigen::RowVector3d p = cloud.points.row(i);
    p = {p.x() * sx, p.y() * sy, p.z() * sz};
    cloud.points.row(i) = p * rot.transpose();
  }
  return cloud;
}

}  // namespace detail

inline const std::vector<std::string>& synthetic_known_classes() {
  static const std::vector<std::string> names = {"sphere", "cube", "cylinder", "torus"};
  return names;
}

inline const std::vector<std::string>& synthetic_open_classes() {
  static const std::vector<std::string> names = {"cone", "pyramid"};
  return names;
}

inline DatasetSplit make_synthetic_split(const SyntheticConfig& cfg) {
  if (cfg.n_points < 1) throw ConfigError("synthetic split needs n_points >= 1");
  DatasetSplit split;
  split.class_names = synthetic_known_classes();
  const int k = split.known_classes();

  auto emit = [&](std::vector<LabeledSample>& dst, int class_id, int label, Provenance prov,
                  int count, const char* partition) {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t seed =
          mix_seed(cfg.rng_seed, fnv1a(std::string(partition) + "/" + std::to_string(class_id) +
                                       "/" + std::to_string(i)));
      Rng rng(seed);
      PointCloud cloud = normalize_cloud(detail::synthetic_cloud(class_id, cfg.n_points, rng));
      quantize_coords_f32(cloud);
      dst.push_back(LabeledSample{std::move(cloud), label, prov});
    }
  };

  for (int c = 0; c < k; ++c) {
    emit(split.closed_train, c, c, Provenance::real, cfg.train_per_class, "train");
    emit(split.closed_test, c, c, Provenance::real, cfg.test_per_class, "test");
  }
  for (int c = 0; c < static_cast<int>(synthetic_open_classes().size()); ++c) {
    emit(split.open_test, k + c, k, Provenance::open_test, cfg.open_test_per_class, "open");
  }
  validate_split(split, cfg.n_points);
  return split;
}

}  // namespace pcdistill
