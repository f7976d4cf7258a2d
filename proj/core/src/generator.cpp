#include "gentle/generator.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gentle/errors.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

namespace {

// Raw engine outputs with modulo reduction; the slight bias is irrelevant
// here and the results match across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i + 1); }

// Connected draft with exactly `total` arrows on `n` vertices within the
// per-vertex degree budget; nullopt if the draw painted itself into a corner.
std::optional<std::vector<Arrow>> draw_arrows(Rng& rng, std::size_t n, std::size_t total) {
  std::vector<std::size_t> out_degree(n, 0), in_degree(n, 0);
  std::vector<Arrow> arrows;
  auto add = [&](std::size_t s, std::size_t t) {
    arrows.push_back({"a" + std::to_string(arrows.size() + 1), vertex_name(s), vertex_name(t)});
    ++out_degree[s];
    ++in_degree[t];
  };

  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::pair<std::size_t, bool>> anchors;  // (vertex, attach as source)
    for (std::size_t j = 0; j < i; ++j) {
      if (out_degree[j] < 2) anchors.push_back({j, true});
      if (in_degree[j] < 2) anchors.push_back({j, false});
    }
    if (anchors.empty()) return std::nullopt;
    auto [j, as_source] = anchors[rng.below(anchors.size())];
    if (as_source) {
      add(j, i);
    } else {
      add(i, j);
    }
  }

  while (arrows.size() < total) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t s = 0; s < n; ++s) {
      if (out_degree[s] == 2) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (in_degree[t] < 2) slots.push_back({s, t});
      }
    }
    if (slots.empty()) return std::nullopt;
    auto [s, t] = slots[rng.below(slots.size())];
    add(s, t);
  }
  return arrows;
}

// Classify every composable pair at every vertex as bound or free.  Valid
// classifications put the bound pairs and the free pairs each into a partial
// matching between the incoming and outgoing arrows; a loop paired with
// itself must be bound, or it would walk forever.
std::optional<std::vector<std::pair<ArrowName, ArrowName>>> draw_relations(Rng& rng,
                                                                           const Quiver& q) {
  std::vector<std::pair<ArrowName, ArrowName>> result;  // (after, before)
  for (const VertexName& v : q.vertices()) {
    const auto& ins = q.arrows_into(v);
    const auto& outs = q.arrows_from(v);
    if (ins.empty() || outs.empty()) continue;

    std::vector<std::pair<ArrowName, ArrowName>> edges;
    for (const ArrowName& b : outs) {
      for (const ArrowName& a : ins) edges.push_back({b, a});
    }
    std::vector<std::uint32_t> valid;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      std::map<ArrowName, std::pair<int, int>> out_use, in_use;  // (bound, free)
      bool ok = true;
      for (std::size_t e = 0; e < edges.size() && ok; ++e) {
        const bool bound = (mask & (1u << e)) != 0;
        if (!bound && edges[e].first == edges[e].second) ok = false;
        auto& ou = out_use[edges[e].first];
        auto& iu = in_use[edges[e].second];
        ++(bound ? ou.first : ou.second);
        ++(bound ? iu.first : iu.second);
        if (ou.first > 1 || ou.second > 1 || iu.first > 1 || iu.second > 1) ok = false;
      }
      if (ok) valid.push_back(mask);
    }
    if (valid.empty()) return std::nullopt;
    const std::uint32_t mask = valid[rng.below(valid.size())];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (mask & (1u << e)) result.push_back(edges[e]);
    }
  }
  return result;
}

}  // namespace

BoundQuiver random_gentle(std::uint64_t seed, std::size_t target_arrow_count) {
  if (target_arrow_count == 0) throw InputError("arrow count must be positive");
  Rng rng(seed);
  constexpr int budget = 64;
  // Degree caps force at least ceil(total / 2) vertices; connectivity allows
  // at most total + 1.
  const std::size_t min_vertices = (target_arrow_count + 1) / 2;
  const std::size_t max_vertices = target_arrow_count + 1;
  for (int attempt = 0; attempt < budget; ++attempt) {
    const std::size_t vertices =
        min_vertices + rng.below(max_vertices - min_vertices + 1);
    std::optional<std::vector<Arrow>> arrows =
        draw_arrows(rng, vertices, target_arrow_count);
    if (!arrows) continue;
    std::vector<VertexName> names;
    names.reserve(vertices);
    for (std::size_t i = 0; i < vertices; ++i) names.push_back(vertex_name(i));
    Quiver q(std::move(names), std::move(*arrows));

    std::optional<std::vector<std::pair<ArrowName, ArrowName>>> pairs = draw_relations(rng, q);
    if (!pairs) continue;
    std::vector<Path> relations;
    relations.reserve(pairs->size());
    for (const auto& [after, before] : *pairs) {
      relations.push_back(make_path(q, {after, before}));
    }
    if (!is_admissible(q, relations)) continue;

    BoundQuiver out(std::move(q), std::move(relations));
    if (!is_gentle(out)) throw InternalError("generator produced a non-gentle bound quiver");
    return out;
  }
  throw GeneratorError("no admissible draw within " + std::to_string(budget) +
                       " attempts for seed " + std::to_string(seed) + ", size " +
                       std::to_string(target_arrow_count));
}

}  // namespace gentle
