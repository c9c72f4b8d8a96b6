#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "jointspec/hikes/cycles.hpp"

namespace jointspec::hikes {

/// A hike (heap of cycles) in Cartier-Foata normal form. Level 0 is the
/// bottom of the heap; every piece above level 0 overlaps a piece one level
/// below. Pieces are cycle indices into a CycleCatalog, sorted within a level.
struct Hike {
  std::vector<std::vector<int>> levels;
  std::size_t length = 0;

  bool empty() const { return levels.empty(); }
  std::size_t piece_count() const;

  friend bool operator==(const Hike&, const Hike&) = default;
  friend auto operator<=>(const Hike& a, const Hike& b) { return a.levels <=> b.levels; }
};

struct HikeConfig {
  std::size_t max_length = 10;
};

/// Normal form of the hike represented by a word of cycle indices (leftmost = bottom).
Hike normal_form(const CycleCatalog& catalog, std::span<const int> word);

/// True when `h` satisfies the Cartier-Foata level conditions.
bool is_normal_form(const CycleCatalog& catalog, const Hike& h);

/// All hikes of total length <= max_length, each exactly once, generated as
/// lexicographically minimal words of the trace monoid.
std::vector<Hike> enumerate_hikes(const CycleCatalog& catalog, std::size_t max_length, const HikeConfig& cfg = {});

/// Reference enumeration: closure of the empty hike under stacking a cycle on
/// top, deduplicated by normal form. Slower; used to cross-check the above.
std::vector<Hike> enumerate_hikes_by_closure(const CycleCatalog& catalog, std::size_t max_length);

/// Maximal pieces of the heap, i.e. its prime right divisors.
std::vector<int> maximal_pieces(const CycleCatalog& catalog, const Hike& h);

/// True iff every prime right divisor of `h` meets `u`.
bool right_divisor_filter(const CycleCatalog& catalog, const Hike& h, VertexMask u);

/// Number of visits of `h` to `u`, counted with multiplicity.
int visits(const CycleCatalog& catalog, const Hike& h, VertexMask u);

/// The unique maximal piece of a pyramid; nullopt for other hikes.
std::optional<int> pyramid_top(const CycleCatalog& catalog, const Hike& h);

/// Hike von Mangoldt function: length of the unique maximal piece, else 0.
int von_mangoldt(const CycleCatalog& catalog, const Hike& h);
/// u-restricted version: visits of the unique maximal piece to u, else 0.
int von_mangoldt_u(const CycleCatalog& catalog, const Hike& h, VertexMask u);

template <class T>
T hike_weight(const std::vector<T>& cycle_weights, const Hike& h) {
  T w = T(1);
  for (const auto& level : h.levels)
    for (int c : level) w *= cycle_weights[static_cast<std::size_t>(c)];
  return w;
}

}  // namespace jointspec::hikes
