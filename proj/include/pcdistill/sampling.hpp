// Surface point sampling: points are drawn from mesh faces with probability
// proportional to triangle area, uniformly within each triangle.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "pcdistill/mesh.hpp"
#include "pcdistill/random.hpp"
#include "pcdistill/types.hpp"

namespace pcdistill {

inline std::vector<real_t> face_areas(const Mesh& mesh) {
  std::vector<real_t> areas(mesh.faces.size());
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& tri = mesh.faces[f];
    const Eigen::RowVector3d a = mesh.vertices.row(tri[0]);
    const Eigen::RowVector3d ab = mesh.vertices.row(tri[1]) - a;
    const Eigen::RowVector3d ac = mesh.vertices.row(tri[2]) - a;
    areas[f] = 0.5 * ab.cross(ac).norm();
  }
  return areas;
}

inline PointCloud sample_point_cloud(const Mesh& mesh, int n_points, std::uint64_t rng_seed) {
  if (n_points < 1) throw ConfigError("sample_point_cloud: n_points must be >= 1");
  if (mesh.faces.empty()) throw Error("sample_point_cloud: mesh has no faces");

  const std::vector<real_t> areas = face_areas(mesh);
  std::vector<real_t> cumulative(areas.size());
  real_t total = 0.0;
  for (std::size_t f = 0; f < areas.size(); ++f) {
    total += areas[f];
    cumulative[f] = total;
  }
  if (!(total > 0.0)) throw Error("sample_point_cloud: mesh has zero total surface area");

  Rng rng(rng_seed);
  PointCloud cloud;
  cloud.points.resize(n_points, 3);
  for (int i = 0; i < n_points; ++i) {
    const real_t r = rng.uniform() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    const std::size_t f = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()), areas.size() - 1);
    const auto& tri = mesh.faces[f];
    const Eigen::RowVector3d a = mesh.vertices.row(tri[0]);
    const Eigen::RowVector3d b = mesh.vertices.row(tri[1]);
    const Eigen::RowVector3d c = mesh.vertices.row(tri[2]);
    // uniform barycentric sample
    const real_t su = std::sqrt(rng.uniform());
    const real_t v = rng.uniform();
    cloud.points.row(i) = (1.0 - su) * a + su * (1.0 - v) * b + su * v * c;
  }
  return cloud;
}

}  // namespace pcdistill
