#pragma once

#include <random>
#include <vector>

#include "bott/tower.hpp"

namespace bott_test {

struct TowerShape {
    std::size_t max_height = 4;
    std::size_t max_dim = 3;
    int max_entry = 3;
};

bott::TowerSpec random_tower(std::mt19937_64& rng, const TowerShape& shape = {});

/// Tower with the given fiber dimensions and uniform entries in [-e, e].
bott::TowerSpec random_tower_with_dims(std::mt19937_64& rng, const std::vector<std::size_t>& dims, int max_entry);

/// Every tower with sum n_i <= max_total and entries in [-entry, entry],
/// plus `extra` random ones with entries up to 3 (same dimension limit).
std::vector<bott::TowerSpec> small_tower_corpus(std::size_t max_total, int entry, std::size_t extra,
                                                std::mt19937_64& rng);

/// Line-bundle sums over products of k <= 3 projective spaces of dimension
/// <= 3, n <= 3 rows, entries in [-3, 3]: exhaustive for small shapes,
/// sampled (biased towards trivial bundles) otherwise.
std::vector<bott::LineBundleSum> bundle_corpus(std::mt19937_64& rng);

/// All 3-stage Bott towers with |a|,|b|,|c| <= r.
std::vector<bott::TowerSpec> bott3_box(int r);

} // namespace bott_test
