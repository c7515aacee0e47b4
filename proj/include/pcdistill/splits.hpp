// Builds closed/open dataset splits from a ModelNet directory layout:
// <root>/<class>/{train,test}/*.off. Classes named in the config become the
// known (closed) classes with labels 0..k-1 in the given order; test meshes
// of every other class become open-set samples labeled k.
#pragma once

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "pcdistill/common.hpp"
#include "pcdistill/mesh.hpp"
#include "pcdistill/sampling.hpp"
#include "pcdistill/types.hpp"

namespace pcdistill {

struct IngestConfig {
  std::filesystem::path root;
  std::vector<std::string> known_class_names;
  int n_points = 1024;
  std::uint64_t rng_seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline std::vector<std::filesystem::path> sorted_off_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) return files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".off")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace detail

inline DatasetSplit build_splits(const IngestConfig& cfg) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(cfg.root)) throw IoError("dataset root not found: " + cfg.root.string());
  if (cfg.known_class_names.empty()) throw ConfigError("no known classes given");

  std::vector<std::string> all_classes;
  for (const auto& entry : fs::directory_iterator(cfg.root)) {
    if (entry.is_directory()) all_classes.push_back(entry.path().filename().string());
  }
  std::sort(all_classes.begin(), all_classes.end());

  const std::set<std::string> present(all_classes.begin(), all_classes.end());
  for (const auto& name : cfg.known_class_names) {
    if (!present.count(name)) throw IoError("missing class directory: " + name);
  }
  const std::set<std::string> known(cfg.known_class_names.begin(), cfg.known_class_names.end());
  const int k = static_cast<int>(cfg.known_class_names.size());

  struct Task {
    fs::path file;
    int label;             // 0..k-1 for known, k for open
    Provenance provenance;
    int partition;         // 0 closed_train, 1 closed_test, 2 open_test
  };
  std::vector<Task> tasks;
  for (const auto& cls : all_classes) {
    const bool is_known = known.count(cls) > 0;
    const auto train_files = detail::sorted_off_files(cfg.root / cls / "train");
    const auto test_files = detail::sorted_off_files(cfg.root / cls / "test");
    if (train_files.empty() && test_files.empty()) throw IoError("class has no meshes: " + cls);
    if (is_known) {
      if (train_files.empty() || test_files.empty())
        throw IoError("known class missing a train or test partition: " + cls);
      const int label = static_cast<int>(
          std::find(cfg.known_class_names.begin(), cfg.known_class_names.end(), cls) -
          cfg.known_class_names.begin());
      for (const auto& f : train_files) tasks.push_back({f, label, Provenance::real, 0});
      for (const auto& f : test_files) tasks.push_back({f, label, Provenance::real, 1});
    } else {
      // only the test meshes of unknown classes are usable (open-set evaluation)
      for (const auto& f : test_files) tasks.push_back({f, k, Provenance::open_test, 2});
    }
  }

  std::vector<LabeledSample> results(tasks.size());
  parallel_for(
      tasks.size(),
      [&](std::size_t i) {
        const Task& t = tasks[i];
        const Mesh mesh = parse_mesh_file(t.file);
        const std::string rel =
            t.file.parent_path().parent_path().filename().string() + "/" +
            t.file.parent_path().filename().string() + "/" + t.file.filename().string();
        const std::uint64_t seed = mix_seed(cfg.rng_seed, fnv1a(rel));
        PointCloud cloud = normalize_cloud(sample_point_cloud(mesh, cfg.n_points, seed));
        quantize_coords_f32(cloud);
        results[i] = LabeledSample{std::move(cloud), t.label, t.provenance};
      },
      cfg.threads);

  DatasetSplit split;
  split.class_names = cfg.known_class_names;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    switch (tasks[i].partition) {
      case 0: split.closed_train.push_back(std::move(results[i])); break;
      case 1: split.closed_test.push_back(std::move(results[i])); break;
      default: split.open_test.push_back(std::move(results[i])); break;
    }
  }
  validate_split(split, cfg.n_points);
  return split;
}

}  // namespace pcdistill
