#include "jointspec/hikes/heaps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace jointspec::hikes {

std::size_t Hike::piece_count() const {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.size();
  return n;
}

Hike normal_form(const CycleCatalog& catalog, std::span<const int> word) {
  Hike h;
  std::vector<std::size_t> level_of(word.size(), 0);
  for (std::size_t t = 0; t < word.size(); ++t) {
    std::size_t level = 0;
    for (std::size_t s = 0; s < t; ++s)
      if (!catalog.commute(word[s], word[t])) level = std::max(level, level_of[s] + 1);
    level_of[t] = level;
    if (h.levels.size() <= level) h.levels.resize(level + 1);
    h.levels[level].push_back(word[t]);
    h.length += catalog[static_cast<std::size_t>(word[t])].length();
  }
  for (auto& level : h.levels) std::sort(level.begin(), level.end());
  return h;
}

bool is_normal_form(const CycleCatalog& catalog, const Hike& h) {
  for (std::size_t l = 0; l < h.levels.size(); ++l) {
    const auto& level = h.levels[l];
    if (level.empty() || !std::is_sorted(level.begin(), level.end())) return false;
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = i + 1; j < level.size(); ++j)
        if (!catalog.commute(level[i], level[j])) return false;
    if (l == 0) continue;
    for (int c : level) {
      bool supported = false;
      for (int below : h.levels[l - 1])
        if (!catalog.commute(c, below)) supported = true;
      if (!supported) return false;
    }
  }
  return true;
}

namespace {

void lex_words(const CycleCatalog& catalog, std::size_t remaining, std::vector<int>& word, std::vector<Hike>& out) {
  out.push_back(normal_form(catalog, word));
  for (std::size_t c = 0; c < catalog.size(); ++c) {
    if (catalog[c].length() > remaining) break;  // catalog is sorted by length
    const int ci = static_cast<int>(c);
    bool minimal = true;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (!catalog.commute(*it, ci)) break;
      if (*it > ci) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    word.push_back(ci);
    lex_words(catalog, remaining - catalog[c].length(), word, out);
    word.pop_back();
  }
}

std::vector<int> flatten(const Hike& h) {
  std::vector<int> word;
  for (const auto& level : h.levels) word.insert(word.end(), level.begin(), level.end());
  return word;
}

}  // namespace

std::vector<Hike> enumerate_hikes(const CycleCatalog& catalog, std::size_t max_length, const HikeConfig& cfg) {
  if (max_length > cfg.max_length)
    throw std::domain_error("hike enumeration is capped at length " + std::to_string(cfg.max_length) + " (requested " +
                            std::to_string(max_length) + ")");
  std::vector<Hike> out;
  std::vector<int> word;
  lex_words(catalog, max_length, word, out);
  return out;
}

std::vector<Hike> enumerate_hikes_by_closure(const CycleCatalog& catalog, std::size_t max_length) {
  std::set<Hike> seen{Hike{}};
  std::vector<Hike> frontier{Hike{}};
  while (!frontier.empty()) {
    std::vector<Hike> next;
    for (const Hike& h : frontier) {
      std::vector<int> word = flatten(h);
      for (std::size_t c = 0; c < catalog.size(); ++c) {
        if (h.length + catalog[c].length() > max_length) continue;
        word.push_back(static_cast<int>(c));
        Hike grown = normal_form(catalog, word);
        word.pop_back();
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> maximal_pieces(const CycleCatalog& catalog, const Hike& h) {
  std::vector<int> out;
  for (std::size_t l = 0; l < h.levels.size(); ++l)
    for (int c : h.levels[l]) {
      bool covered = false;
      for (std::size_t above = l + 1; above < h.levels.size() && !covered; ++above)
        for (int d : h.levels[above])
          if (!catalog.commute(c, d)) {
            covered = true;
            break;
          }
      if (!covered) out.push_back(c);
    }
  return out;
}

bool right_divisor_filter(const CycleCatalog& catalog, const Hike& h, VertexMask u) {
  for (int c : maximal_pieces(catalog, h))
    if ((catalog[static_cast<std::size_t>(c)].mask & u) == 0) return false;
  return true;
}

int visits(const CycleCatalog& catalog, const Hike& h, VertexMask u) {
  int total = 0;
  for (const auto& level : h.levels)
    for (int c : level) total += catalog[static_cast<std::size_t>(c)].visits(u);
  return total;
}

std::optional<int> pyramid_top(const CycleCatalog& catalog, const Hike& h) {
  const std::vector<int> tops = maximal_pieces(catalog, h);
  if (tops.size() != 1) return std::nullopt;
  return tops.front();
}

int von_mangoldt(const CycleCatalog& catalog, const Hike& h) {
  const auto top = pyramid_top(catalog, h);
  return top ? static_cast<int>(catalog[static_cast<std::size_t>(*top)].length()) : 0;
}

int von_mangoldt_u(const CycleCatalog& catalog, const Hike& h, VertexMask u) {
  const auto top = pyramid_top(catalog, h);
  return top ? catalog[static_cast<std::size_t>(*top)].visits(u) : 0;
}

}  // namespace jointspec::hikes
