// Pseudo-open-set sample synthesis. Point clouds from n different known
// classes are stacked, the (x, y, z) triples are shuffled uniformly, and the
// shuffled pool is split back into n clouds. The outputs sit between and
// across the source classes, so they serve as training stand-ins for the
// unknown class. Points are moved, never transformed: the multiset of
// coordinates is conserved exactly across one mixing call.
#pragma once

#include <map>
#include <vector>

#include "pcdistill/random.hpp"
#include "pcdistill/types.hpp"

namespace pcdistill {

struct MixConfig {
  std::vector<int> mix_orders = {2, 3, 4};
  std::map<int, int> counts_per_order;  // empty -> default_mix_count() for every order
  std::uint64_t rng_seed = 0;
  bool renormalize = true;  // mixed clouds can exceed the unit sphere
};

// Default sample count per mix order: with three orders this sizes the
// pseudo-open class at roughly one third of the closed training set, i.e.
// comparable to a single known class.
inline int default_mix_count(std::size_t closed_train_size) {
  return static_cast<int>((closed_train_size + 8) / 9);
}

inline std::vector<LabeledSample> mix_clouds(const std::vector<const LabeledSample*>& sources,
                                             int known_classes, Rng& rng) {
  const int n = static_cast<int>(sources.size());
  if (n < 2) throw ConfigError("mix_clouds: need at least two source clouds");
  const int n0 = sources[0]->cloud.size();
  std::vector<int> seen_labels;
  for (const auto* s : sources) {
    if (s->cloud.size() != n0) throw ShapeError("mix_clouds: mismatched point counts");
    if (s->label < 0 || s->label >= known_classes)
      throw ConfigError("mix_clouds: source label out of known-class range");
    for (int l : seen_labels)
      if (l == s->label) throw ConfigError("mix_clouds: duplicate source labels");
    seen_labels.push_back(s->label);
  }

  std::vector<std::pair<int, int>> slots;  // (source, row)
  slots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n0));
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n0; ++r) slots.emplace_back(s, r);
  rng.shuffle(slots);

  std::vector<LabeledSample> out(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    auto& sample = out[static_cast<std::size_t>(c)];
    sample.label = known_classes;
    sample.provenance = Provenance::pseudo_open;
    sample.cloud.points.resize(n0, 3);
    for (int r = 0; r < n0; ++r) {
      const auto [src, row] = slots[static_cast<std::size_t>(c) * static_cast<std::size_t>(n0) +
                                    static_cast<std::size_t>(r)];
      sample.cloud.points.row(r) = sources[static_cast<std::size_t>(src)]->cloud.points.row(row);
    }
  }
  return out;
}

inline std::vector<LabeledSample> mix_clouds(const std::vector<const LabeledSample*>& sources,
                                             int known_classes, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return mix_clouds(sources, known_classes, rng);
}

inline std::vector<LabeledSample> generate_pseudo_open_set(const DatasetSplit& split,
                                                           const MixConfig& cfg) {
  const int k = split.known_classes();
  std::vector<std::vector<int>> by_class(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < split.closed_train.size(); ++i)
    by_class[static_cast<std::size_t>(split.closed_train[i].label)].push_back(static_cast<int>(i));
  std::vector<int> populated;
  for (int c = 0; c < k; ++c)
    if (!by_class[static_cast<std::size_t>(c)].empty()) populated.push_back(c);

  std::vector<LabeledSample> out;
  for (int order : cfg.mix_orders) {
    if (order < 2 || order > k) throw ConfigError("mix order must be in [2, k]");
    int want = default_mix_count(split.closed_train.size());
    if (auto it = cfg.counts_per_order.find(order); it != cfg.counts_per_order.end())
      want = it->second;
    if (want < 0) throw ConfigError("negative pseudo sample count");
    if (want == 0) continue;
    if (static_cast<int>(populated.size()) < order)
      throw ConfigError("not enough populated classes for mix order " +
                        std::to_string(order));

    Rng rng(mix_seed(cfg.rng_seed, static_cast<std::uint64_t>(order)));
    int emitted = 0;
    while (emitted < want) {
      const std::vector<int> class_picks =
          rng.distinct_ints(order, 0, static_cast<int>(populated.size()) - 1);
      std::vector<const LabeledSample*> sources;
      sources.reserve(static_cast<std::size_t>(order));
      for (int pick : class_picks) {
        const auto& pool = by_class[static_cast<std::size_t>(populated[static_cast<std::size_t>(pick)])];
        const auto idx = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1));
        sources.push_back(&split.closed_train[static_cast<std::size_t>(pool[idx])]);
      }
      auto mixed = mix_clouds(sources, k, rng);
      for (auto& sample : mixed) {
        if (emitted >= want) break;
        if (cfg.renormalize) {
          sample.cloud = normalize_cloud(sample.cloud);
          quantize_coords_f32(sample.cloud);
        }
        out.push_back(std::move(sample));
        ++emitted;
      }
    }
  }
  return out;
}

}  // namespace pcdistill
