#include "gentle/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "gentle/errors.hpp"
#include "gentle/families.hpp"

namespace gentle {

namespace {

using PairKey = std::pair<VertexName, VertexName>;
using ArrowClasses = std::map<PairKey, std::vector<ArrowName>>;

ArrowClasses classes_by_endpoints(const Quiver& q) {
  ArrowClasses classes;
  for (const Arrow& a : q.arrows()) classes[{a.source, a.target}].push_back(a.name);
  return classes;
}

std::size_t class_size(const ArrowClasses& classes, const VertexName& s, const VertexName& t) {
  auto it = classes.find({s, t});
  return it == classes.end() ? 0 : it->second.size();
}

struct IsoSearch {
  const BoundQuiver& a;
  const BoundQuiver& b;
  ArrowClasses ga;
  ArrowClasses gb;
  std::vector<std::vector<ArrowName>> rels_b;
  std::map<VertexName, VertexName> vmap;
  std::set<VertexName> used_vb;
  std::map<ArrowName, ArrowName> amap;
  std::set<ArrowName> used_ab;

  IsoSearch(const BoundQuiver& a_, const BoundQuiver& b_)
      : a(a_),
        b(b_),
        ga(classes_by_endpoints(a_.quiver())),
        gb(classes_by_endpoints(b_.quiver())) {
    for (const Path& rel : b.relations()) rels_b.push_back(rel.arrows());
    std::sort(rels_b.begin(), rels_b.end());
  }

  bool vertex_compatible(const VertexName& u, const VertexName& v) const {
    const Quiver& qa = a.quiver();
    const Quiver& qb = b.quiver();
    if (qa.arrows_from(u).size() != qb.arrows_from(v).size()) return false;
    if (qa.arrows_into(u).size() != qb.arrows_into(v).size()) return false;
    if (class_size(ga, u, u) != class_size(gb, v, v)) return false;
    for (const auto& [u2, v2] : vmap) {
      if (class_size(ga, u, u2) != class_size(gb, v, v2)) return false;
      if (class_size(ga, u2, u) != class_size(gb, v2, v)) return false;
    }
    return true;
  }

  bool search_vertices(std::size_t idx) {
    const std::vector<VertexName>& va = a.quiver().vertices();
    if (idx == va.size()) return search_arrows(0);
    const VertexName& u = va[idx];
    for (const VertexName& v : b.quiver().vertices()) {
      if (used_vb.contains(v) || !vertex_compatible(u, v)) continue;
      vmap.emplace(u, v);
      used_vb.insert(v);
      if (search_vertices(idx + 1)) return true;
      vmap.erase(u);
      used_vb.erase(v);
    }
    return false;
  }

  bool search_arrows(std::size_t idx) {
    const std::vector<Arrow>& arrows = a.quiver().arrows();
    if (idx == arrows.size()) return relations_match();
    const Arrow& x = arrows[idx];
    auto it = gb.find({vmap.at(x.source), vmap.at(x.target)});
    if (it == gb.end()) return false;
    for (const ArrowName& y : it->second) {
      if (used_ab.contains(y)) continue;
      amap.emplace(x.name, y);
      used_ab.insert(y);
      if (search_arrows(idx + 1)) return true;
      amap.erase(x.name);
      used_ab.erase(y);
    }
    return false;
  }

  bool relations_match() const {
    std::vector<std::vector<ArrowName>> mapped;
    for (const Path& rel : a.relations()) {
      std::vector<ArrowName> names;
      names.reserve(rel.length());
      for (const ArrowName& an : rel.arrows()) names.push_back(amap.at(an));
      mapped.push_back(std::move(names));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == rels_b;
  }
};

BoundQuiver rebuild(std::vector<VertexName> vertices, std::vector<Arrow> arrows,
                    const std::vector<std::vector<ArrowName>>& relations,
                    const std::string& context) {
  try {
    Quiver q(std::move(vertices), std::move(arrows));
    std::vector<Path> paths;
    paths.reserve(relations.size());
    for (const auto& names : relations) paths.push_back(make_path(q, names));
    return BoundQuiver(std::move(q), std::move(paths));
  } catch (const InputError& e) {
    throw InternalError(context + " produced an invalid bound quiver: " + e.what());
  }
}

// Unique relation-free arrow into x that precedes alpha; reflection depends on it.
ArrowName free_predecessor(const BoundQuiver& bq, const VertexName& x, const ArrowName& alpha) {
  std::vector<ArrowName> frees;
  for (const ArrowName& beta : bq.quiver().arrows_into(x)) {
    if (!bq.has_relation_pair(alpha, beta)) frees.push_back(beta);
  }
  if (frees.size() != 1) {
    throw StructureViolation("arrow '" + alpha + "' has " + std::to_string(frees.size()) +
                             " relation-free predecessors at vertex '" + x + "'");
  }
  return frees[0];
}

}  // namespace

std::optional<Isomorphism> are_isomorphic(const BoundQuiver& a, const BoundQuiver& b) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  if (qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count() ||
      a.relations().size() != b.relations().size()) {
    return std::nullopt;
  }
  auto degree_profile = [](const Quiver& q) {
    std::vector<std::pair<std::size_t, std::size_t>> profile;
    for (const VertexName& v : q.vertices()) {
      profile.push_back({q.arrows_from(v).size(), q.arrows_into(v).size()});
    }
    std::sort(profile.begin(), profile.end());
    return profile;
  };
  if (degree_profile(qa) != degree_profile(qb)) return std::nullopt;

  IsoSearch search(a, b);
  if (!search.search_vertices(0)) return std::nullopt;
  return Isomorphism{std::move(search.vmap), std::move(search.amap)};
}

bool reflection_applicable(const BoundQuiver& bq, const VertexName& x) {
  const Quiver& q = bq.quiver();
  if (!q.has_vertex(x)) throw InputError("unknown vertex '" + x + "'");
  if (!is_gentle(bq)) throw InputError("reflection requires a gentle bound quiver");
  for (const ArrowName& an : q.arrows_from(x)) {
    if (q.arrow(an).target == x) return false;
    bool has_free = false;
    for (const ArrowName& bn : q.arrows_into(x)) {
      if (!bq.has_relation_pair(an, bn)) {
        has_free = true;
        break;
      }
    }
    if (!has_free) return false;
  }
  return true;
}

BoundQuiver reflect(const BoundQuiver& bq, const VertexName& x) {
  if (!reflection_applicable(bq, x)) {
    throw InputError("reflection is not applicable at vertex '" + x + "'");
  }
  const Quiver& q = bq.quiver();
  const std::string context = "reflection at vertex '" + x + "'";

  auto relation_successor_enters_x = [&](const Arrow& a) {
    for (const ArrowName& bn : q.arrows_into(x)) {
      const Arrow& b = q.arrow(bn);
      if (b.source == a.target && bq.has_relation_pair(bn, a.name)) return true;
    }
    return false;
  };

  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) {
    if (a.target == x) {
      arrows.push_back({a.name, x, a.source});
      continue;
    }
    VertexName s = a.source == x ? q.arrow(free_predecessor(bq, x, a.name)).source : a.source;
    VertexName t = relation_successor_enters_x(a) ? x : a.target;
    arrows.push_back({a.name, std::move(s), std::move(t)});
  }

  std::vector<std::vector<ArrowName>> relations;
  for (const Path& rel : bq.relations()) {
    const Arrow& first = q.arrow(rel.arrows()[0]);
    if (first.target != x && first.source != x) relations.push_back(rel.arrows());
  }
  for (const ArrowName& an : q.arrows_from(x)) {
    relations.push_back({an, free_predecessor(bq, x, an)});
  }
  for (const Path& rel : bq.relations()) {
    if (q.arrow(rel.arrows()[0]).target != x) continue;
    for (const ArrowName& other : q.arrows_into(x)) {
      if (other != rel.arrows()[0]) relations.push_back({other, rel.arrows()[1]});
    }
  }

  BoundQuiver out = rebuild(q.vertices(), std::move(arrows), relations, context);
  if (!is_gentle(out)) throw InternalError(context + " lost gentleness");
  return out;
}

std::optional<Lambda0Shape> recognize_lambda0_shape(const Quiver& q) {
  ArrowClasses classes = classes_by_endpoints(q);
  const PairKey* pair_key = nullptr;
  for (const auto& [key, names] : classes) {
    if (names.size() == 1) continue;
    if (names.size() > 2 || pair_key != nullptr || key.first == key.second) return std::nullopt;
    pair_key = &key;
  }
  if (pair_key == nullptr) return std::nullopt;

  Lambda0Shape shape;
  shape.pair_source = pair_key->first;
  shape.pair_target = pair_key->second;
  shape.pair_arrows = classes.at(*pair_key);

  std::set<VertexName> visited{shape.pair_target};
  std::vector<ArrowName> walk;
  VertexName current = shape.pair_target;
  while (current != shape.pair_source) {
    const auto& outs = q.arrows_from(current);
    if (outs.size() != 1) return std::nullopt;
    const Arrow& a = q.arrow(outs[0]);
    if (!visited.insert(a.target).second) return std::nullopt;
    walk.push_back(a.name);
    current = a.target;
  }
  if (visited.size() != q.vertex_count()) return std::nullopt;
  if (walk.size() + 2 != q.arrow_count()) return std::nullopt;
  shape.chain.assign(walk.rbegin(), walk.rend());
  return shape;
}

BoundQuiver shift_relation(const BoundQuiver& bq, std::size_t i) {
  std::optional<Lambda0Shape> shape = recognize_lambda0_shape(bq.quiver());
  if (!shape) {
    throw InputError("relation shift requires one parallel pair plus a covering chain");
  }
  const std::size_t p = shape->chain.size();
  if (i < 2 || i + 1 > p) {
    throw InputError("relation shift position must satisfy 2 <= i <= " + std::to_string(p - 1));
  }
  const ArrowName& lower = shape->chain[i - 2];
  const ArrowName& mid = shape->chain[i - 1];
  const ArrowName& upper = shape->chain[i];
  if (!bq.has_relation_pair(mid, upper)) {
    throw InputError("no chain relation to move at position " + std::to_string(i));
  }
  if (bq.has_relation_pair(lower, mid)) {
    throw InputError("position " + std::to_string(i - 1) + " already carries a relation");
  }

  std::vector<std::vector<ArrowName>> relations;
  for (const Path& rel : bq.relations()) {
    if (rel.length() == 2 && rel.arrows()[0] == mid && rel.arrows()[1] == upper) continue;
    relations.push_back(rel.arrows());
  }
  relations.push_back({lower, mid});
  BoundQuiver out =
      rebuild(bq.quiver().vertices(), bq.quiver().arrows(), relations, "relation shift");

  const VertexName& head = bq.quiver().arrow(mid).target;
  BoundQuiver reflected = reflect(bq, head);
  if (!are_isomorphic(out, reflected)) {
    throw InternalError("relation shift disagrees with reflection at vertex '" + head + "'");
  }
  return out;
}

Coextension coextend_detailed(const BoundQuiver& bq, const Path& sigma) {
  std::vector<Path> maximal = maximal_paths(bq);
  if (std::find(maximal.begin(), maximal.end(), sigma) == maximal.end()) {
    throw InputError("'" + sigma.str() + "' is not a maximal relation-free path");
  }
  const Quiver& q = bq.quiver();
  const std::string context = "coextension along '" + sigma.str() + "'";

  std::size_t k = 1;
  while (q.has_vertex("_v" + std::to_string(k)) || q.has_arrow("_a" + std::to_string(k))) ++k;
  VertexName fresh_vertex = "_v" + std::to_string(k);
  ArrowName fresh_arrow = "_a" + std::to_string(k);

  std::vector<VertexName> vertices = q.vertices();
  vertices.push_back(fresh_vertex);
  std::vector<Arrow> arrows = q.arrows();
  arrows.push_back({fresh_arrow, sigma.target(), fresh_vertex});

  std::vector<std::vector<ArrowName>> relations;
  for (const Path& rel : bq.relations()) relations.push_back(rel.arrows());
  for (const ArrowName& an : q.arrows_into(sigma.target())) {
    if (an != sigma.terminating_arrow()) relations.push_back({fresh_arrow, an});
  }

  BoundQuiver out = rebuild(std::move(vertices), std::move(arrows), relations, context);
  if (!is_gentle(out)) throw InternalError(context + " lost gentleness");
  return {std::move(out), std::move(fresh_vertex), std::move(fresh_arrow)};
}

BoundQuiver coextend(const BoundQuiver& bq, const Path& sigma) {
  return coextend_detailed(bq, sigma).result;
}

PipelineResult extension_pipeline(std::size_t p, long r) {
  BoundQuiver start = lambda0(p, r);

  std::vector<Path> along;
  for (Path& sigma : maximal_paths(start)) {
    if (sigma.terminating_arrow() == "beta") along.push_back(std::move(sigma));
  }
  if (along.size() != 1) {
    throw InternalError("expected one maximal path terminating with 'beta', found " +
                        std::to_string(along.size()));
  }
  const Path& sigma = along[0];

  std::vector<PipelineStep> steps;
  steps.push_back({"start: lambda0(" + std::to_string(p) + ", " + std::to_string(r) + ")",
                   start});
  Coextension co = coextend_detailed(start, sigma);
  steps.push_back({"coextension along '" + sigma.str() + "' adding vertex '" + co.fresh_vertex +
                       "'",
                   co.result});
  BoundQuiver current = reflect(co.result, co.fresh_vertex);
  steps.push_back({"reflection at '" + co.fresh_vertex + "'", current});
  if (r >= 0) {
    current = reflect(current, co.fresh_vertex);
    steps.push_back({"reflection at '" + co.fresh_vertex + "'", current});
    for (long i = 2; i <= r + 1; ++i) {
      current = shift_relation(current, static_cast<std::size_t>(i));
      steps.push_back({"relation shift at position " + std::to_string(i), current});
    }
  }

  BoundQuiver target = lambda0(p + 1, r);
  std::optional<Isomorphism> witness = are_isomorphic(current, target);
  if (!witness) {
    throw InternalError("pipeline result is not isomorphic to lambda0(" + std::to_string(p + 1) +
                        ", " + std::to_string(r) + ")");
  }
  return {std::move(steps), std::move(*witness)};
}

}  // namespace gentle
