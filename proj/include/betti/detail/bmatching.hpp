#pragma once

#include <span>
#include <vector>

namespace betti::detail {

struct BipartiteEdge {
  int left;
  int right;
};

/// Maximum b-matching: each left/right vertex may be used up to its capacity,
/// each edge any number of times. Returns the multiplicity chosen per edge.
std::vector<long> max_bmatching(std::span<const long> left_capacity,
                                std::span<const long> right_capacity,
                                std::span<const BipartiteEdge> edges);

}  // namespace betti::detail
