#include "support/oracles.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentle/errors.hpp"

namespace gentleq_tests {

namespace {

using gentle::ArrowName;
using gentle::BoundQuiver;
using gentle::DerivedInvariant;
using gentle::Path;
using gentle::Quiver;
using gentle::Thread;
using gentle::ThreadKind;
using gentle::VertexName;

using Word = std::vector<ArrowName>;

bool word_is_free(const Word& word, const std::vector<Word>& relations) {
  for (const Word& rel : relations) {
    if (rel.size() > word.size()) continue;
    for (std::size_t start = 0; start + rel.size() <= word.size(); ++start) {
      if (std::equal(rel.begin(), rel.end(), word.begin() + start)) return false;
    }
  }
  return true;
}

std::vector<Word> relation_words(const std::vector<Path>& relations) {
  std::vector<Word> words;
  words.reserve(relations.size());
  for (const Path& rel : relations) words.push_back(rel.arrows());
  return words;
}

// Extends word at the target end: prepends every arrow leaving the word's
// current target, keeping only relation-free results.
std::vector<Word> free_extensions(const Quiver& q, const Word& word,
                                  const std::vector<Word>& relations) {
  std::vector<Word> out;
  const VertexName& tip = q.arrow(word.front()).target;
  for (const ArrowName& next : q.arrows_from(tip)) {
    Word grown;
    grown.reserve(word.size() + 1);
    grown.push_back(next);
    grown.insert(grown.end(), word.begin(), word.end());
    if (word_is_free(grown, relations)) out.push_back(std::move(grown));
  }
  return out;
}

}  // namespace

bool oracle_is_admissible(const Quiver& q, const std::vector<Path>& relations) {
  const std::vector<Word> words = relation_words(relations);
  // Free paths are walks in a finite automaton whose states pair the last
  // arrow with the longest matched relation prefix; any free path longer
  // than the state count pumps to an infinite family.
  std::size_t bound = q.arrow_count() + 2;
  for (const Word& w : words) bound += w.size();

  std::vector<Word> frontier;
  for (const gentle::Arrow& a : q.arrows()) frontier.push_back({a.name});
  while (!frontier.empty()) {
    if (frontier.front().size() >= bound) return false;
    std::vector<Word> next;
    for (const Word& word : frontier) {
      std::vector<Word> grown = free_extensions(q, word, words);
      next.insert(next.end(), grown.begin(), grown.end());
    }
    frontier = std::move(next);
  }
  return true;
}

namespace {

// All relation-free composite paths; requires admissibility (terminates
// because the free language is then finite).
std::vector<Word> all_free_words(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  const std::vector<Word> words = relation_words(bq.relations());
  std::vector<Word> out, frontier;
  for (const gentle::Arrow& a : q.arrows()) frontier.push_back({a.name});
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& word : frontier) {
      std::vector<Word> grown = free_extensions(q, word, words);
      next.insert(next.end(), grown.begin(), grown.end());
    }
    out.insert(out.end(), frontier.begin(), frontier.end());
    frontier = std::move(next);
  }
  return out;
}

std::set<std::pair<ArrowName, ArrowName>> relation_pairs(const BoundQuiver& bq) {
  std::set<std::pair<ArrowName, ArrowName>> pairs;
  for (const Path& rel : bq.relations()) {
    if (rel.length() != 2) throw gentle::InputError("oracle needs length-2 relations");
    pairs.insert({rel.arrows()[0], rel.arrows()[1]});
  }
  return pairs;
}

// Trivial-path sides at a vertex: candidate when at most one arrow out and
// at most one in; with both present the kind follows the pass-through pair,
// with a side missing the vertex carries both kinds.
void trivial_threads(const BoundQuiver& bq, ThreadKind want, std::vector<Thread>& out) {
  const Quiver& q = bq.quiver();
  const auto pairs = relation_pairs(bq);
  for (const VertexName& v : q.vertices()) {
    const auto& outs = q.arrows_from(v);
    const auto& ins = q.arrows_into(v);
    if (outs.size() > 1 || ins.size() > 1) continue;
    bool qualifies = false;
    if (outs.empty() || ins.empty()) {
      qualifies = true;
    } else {
      const bool bound = pairs.count({outs.front(), ins.front()}) != 0;
      qualifies = bound == (want == ThreadKind::Forbidden);
    }
    if (qualifies) out.push_back({want, gentle::trivial_path(q, v)});
  }
}

}  // namespace

std::vector<Thread> oracle_permitted_threads(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  const std::vector<Word> words = relation_words(bq.relations());
  std::vector<Thread> out;
  for (const Word& word : all_free_words(bq)) {
    if (!free_extensions(q, word, words).empty()) continue;
    // Source-end extension: append every arrow entering the word's source.
    bool extends = false;
    const VertexName& root = q.arrow(word.back()).source;
    for (const ArrowName& prev : q.arrows_into(root)) {
      Word grown = word;
      grown.push_back(prev);
      if (word_is_free(grown, words)) extends = true;
    }
    if (extends) continue;
    out.push_back({ThreadKind::Permitted, make_path(q, word)});
  }
  trivial_threads(bq, ThreadKind::Permitted, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Thread> oracle_forbidden_threads(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  const auto pairs = relation_pairs(bq);
  auto is_anti = [&](const Word& word) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (pairs.count({word[i], word[i + 1]}) == 0) return false;
    }
    return true;
  };

  // Every antipath of length <= arrows + 1; longer ones repeat an arrow and
  // cycle forever, so they are never maximal and need not be enumerated.
  std::vector<Word> anti, frontier;
  for (const gentle::Arrow& a : q.arrows()) frontier.push_back({a.name});
  while (!frontier.empty() && frontier.front().size() <= q.arrow_count()) {
    anti.insert(anti.end(), frontier.begin(), frontier.end());
    std::vector<Word> next;
    for (const Word& word : frontier) {
      const VertexName& tip = q.arrow(word.front()).target;
      for (const ArrowName& grown_head : q.arrows_from(tip)) {
        Word grown;
        grown.push_back(grown_head);
        grown.insert(grown.end(), word.begin(), word.end());
        if (is_anti(grown)) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Thread> out;
  for (const Word& word : anti) {
    bool extends = false;
    const VertexName& tip = q.arrow(word.front()).target;
    for (const ArrowName& next : q.arrows_from(tip)) {
      if (pairs.count({next, word.front()}) != 0) extends = true;
    }
    const VertexName& root = q.arrow(word.back()).source;
    for (const ArrowName& prev : q.arrows_into(root)) {
      if (pairs.count({word.back(), prev}) != 0) extends = true;
    }
    if (extends) continue;
    out.push_back({ThreadKind::Forbidden, make_path(q, word)});
  }
  trivial_threads(bq, ThreadKind::Forbidden, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::size_t unique_index(const std::vector<std::size_t>& hits, const std::string& what) {
  if (hits.size() != 1) {
    throw std::runtime_error("oracle: " + what + " matched " +
                             std::to_string(hits.size()) + " threads");
  }
  return hits.front();
}

}  // namespace

DerivedInvariant oracle_derived_invariant(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  const std::vector<Thread> permitted = oracle_permitted_threads(bq);
  const std::vector<Thread> forbidden = oracle_forbidden_threads(bq);
  if (permitted.size() != forbidden.size()) {
    throw std::runtime_error("oracle: thread counts differ");
  }

  // Partner rules, matched against the full thread lists.  A composite thread
  // pairs with the same-endpoint thread whose edge arrow differs or which is
  // trivial; a trivial thread pairs through its pass-through arrow when that
  // side exists, and with the trivial thread of the other kind otherwise.
  const std::size_t n = forbidden.size();
  std::vector<std::size_t> to_permitted(n), to_forbidden(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Path& body = forbidden[i].body;
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < n; ++j) {
      const Path& cand = permitted[j].body;
      if (!body.is_trivial()) {
        if (cand.source() != body.source()) continue;
        if (!cand.is_trivial() && cand.starting_arrow() == body.starting_arrow()) continue;
      } else if (const auto& outs = q.arrows_from(body.source()); !outs.empty()) {
        if (cand.is_trivial() || cand.starting_arrow() != outs.front()) continue;
      } else {
        if (!cand.is_trivial() || cand.source() != body.source()) continue;
      }
      hits.push_back(j);
    }
    to_permitted[i] = unique_index(hits, "forbidden " + body.str());
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Path& body = permitted[j].body;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < n; ++i) {
      const Path& cand = forbidden[i].body;
      if (!body.is_trivial()) {
        if (cand.target() != body.target()) continue;
        if (!cand.is_trivial() && cand.terminating_arrow() == body.terminating_arrow()) continue;
      } else if (const auto& ins = q.arrows_into(body.source()); !ins.empty()) {
        if (cand.is_trivial() || cand.terminating_arrow() != ins.front()) continue;
      } else {
        if (!cand.is_trivial() || cand.source() != body.source()) continue;
      }
      hits.push_back(i);
    }
    to_forbidden[j] = unique_index(hits, "permitted " + body.str());
  }

  std::map<DerivedInvariant::Key, std::size_t> counts;
  std::vector<bool> visited(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::size_t orbit = 0, total = 0, current = start;
    while (!visited[current]) {
      visited[current] = true;
      ++orbit;
      total += forbidden[current].body.length();
      current = to_forbidden[to_permitted[current]];
    }
    if (current != start) throw std::runtime_error("oracle: orbit is not a cycle");
    ++counts[{orbit, total}];
  }

  // Arrows on no maximal antipath sit on full relation cycles; following the
  // relation partner walks each cycle once.
  std::set<ArrowName> covered;
  for (const Thread& t : forbidden) {
    for (const ArrowName& a : t.body.arrows()) covered.insert(a);
  }
  std::set<ArrowName> critical;
  for (const gentle::Arrow& a : bq.quiver().arrows()) {
    if (covered.count(a.name) == 0) critical.insert(a.name);
  }
  const auto pairs = relation_pairs(bq);
  std::set<ArrowName> seen;
  for (const ArrowName& start : critical) {
    if (seen.count(start) != 0) continue;
    std::size_t size = 0;
    ArrowName current = start;
    while (seen.insert(current).second) {
      ++size;
      std::vector<ArrowName> partners;
      for (const auto& [left, right] : pairs) {
        if (left == current) partners.push_back(right);
      }
      if (partners.size() != 1 || critical.count(partners.front()) == 0) {
        throw std::runtime_error("oracle: broken relation cycle at " + current);
      }
      current = partners.front();
    }
    if (current != start) throw std::runtime_error("oracle: relation walk left its cycle");
    ++counts[{0, size}];
  }

  std::vector<DerivedInvariant::Entry> entries(counts.begin(), counts.end());
  return DerivedInvariant(std::move(entries));
}

namespace {

struct ArrowMatcher {
  const Quiver& qa;
  const Quiver& qb;
  const std::map<VertexName, VertexName>& vmap;
  const std::vector<Word>& target_relations;  // sorted
  const std::vector<Word>& source_relations;
  std::map<ArrowName, ArrowName> amap;
  std::set<ArrowName> used;

  bool relations_agree() {
    std::vector<Word> mapped;
    for (const Word& rel : source_relations) {
      Word image;
      for (const ArrowName& a : rel) image.push_back(amap.at(a));
      mapped.push_back(std::move(image));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == target_relations;
  }

  bool assign(std::size_t index) {
    if (index == qa.arrows().size()) return relations_agree();
    const gentle::Arrow& a = qa.arrows()[index];
    for (const gentle::Arrow& b : qb.arrows()) {
      if (used.count(b.name) != 0) continue;
      if (vmap.at(a.source) != b.source || vmap.at(a.target) != b.target) continue;
      amap[a.name] = b.name;
      used.insert(b.name);
      if (assign(index + 1)) return true;
      amap.erase(a.name);
      used.erase(b.name);
    }
    return false;
  }
};

}  // namespace

bool oracle_isomorphic(const BoundQuiver& a, const BoundQuiver& b) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  if (qa.vertex_count() != qb.vertex_count()) return false;
  if (qa.arrow_count() != qb.arrow_count()) return false;
  if (a.relations().size() != b.relations().size()) return false;

  std::vector<Word> rels_a;
  for (const Path& rel : a.relations()) rels_a.push_back(rel.arrows());
  std::vector<Word> rels_b_sorted;
  for (const Path& rel : b.relations()) rels_b_sorted.push_back(rel.arrows());
  std::sort(rels_b_sorted.begin(), rels_b_sorted.end());

  std::vector<std::size_t> perm(qa.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<VertexName, VertexName> vmap;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      vmap[qa.vertices()[i]] = qb.vertices()[perm[i]];
    }
    ArrowMatcher matcher{qa, qb, vmap, rels_b_sorted, rels_a, {}, {}};
    if (matcher.assign(0)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gentleq_tests
