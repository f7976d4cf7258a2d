#include "gentle/bound_quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

// Checks that p is a valid path of q with consistent endpoints.
void validate_path(const Quiver& q, const Path& p, const char* what) {
  if (p.is_trivial()) {
    if (!q.has_vertex(p.source())) {
      throw InputError(std::string(what) + " 1_" + p.source() + " names an unknown vertex");
    }
    return;
  }
  Path rebuilt = make_path(q, p.arrows());
  if (rebuilt.source() != p.source() || rebuilt.target() != p.target()) {
    throw InputError(std::string(what) + " '" + p.str() + "' has inconsistent endpoints");
  }
}

// Aho-Corasick automaton over arrow indices for the reversed relation words
// (reversal turns composition order into traversal order).
struct SubwordAutomaton {
  std::vector<std::map<int, int>> edges;
  std::vector<int> fail;
  std::vector<char> terminal;
  std::vector<std::vector<int>> delta;  // full transition table [state][letter]

  explicit SubwordAutomaton(const std::vector<std::vector<int>>& patterns, int alphabet) {
    edges.emplace_back();
    fail.push_back(0);
    terminal.push_back(0);
    for (const auto& pattern : patterns) {
      int state = 0;
      for (int letter : pattern) {
        auto it = edges[state].find(letter);
        if (it == edges[state].end()) {
          int fresh = static_cast<int>(edges.size());
          edges[state][letter] = fresh;
          edges.emplace_back();
          fail.push_back(0);
          terminal.push_back(0);
          state = fresh;
        } else {
          state = it->second;
        }
      }
      terminal[state] = 1;
    }

    delta.assign(edges.size(), std::vector<int>(alphabet, 0));
    std::deque<int> queue;
    for (int c = 0; c < alphabet; ++c) {
      auto it = edges[0].find(c);
      if (it != edges[0].end()) {
        delta[0][c] = it->second;
        queue.push_back(it->second);
      }
    }
    while (!queue.empty()) {
      int state = queue.front();
      queue.pop_front();
      if (terminal[fail[state]]) terminal[state] = 1;
      for (int c = 0; c < alphabet; ++c) {
        auto it = edges[state].find(c);
        if (it != edges[state].end()) {
          fail[it->second] = delta[fail[state]][c];
          delta[state][c] = it->second;
          queue.push_back(it->second);
        } else {
          delta[state][c] = delta[fail[state]][c];
        }
      }
    }
  }
};

}  // namespace

BoundQuiver::BoundQuiver(Quiver quiver, std::vector<Path> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
  for (const Path& rel : relations_) {
    if (rel.length() < 2) {
      throw InputError("relation '" + rel.str() + "' has length " +
                       std::to_string(rel.length()) + "; relations need length >= 2");
    }
    validate_path(quiver_, rel, "relation");
  }
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
  if (!is_admissible(quiver_, relations_)) {
    throw InputError("relation set is not admissible: relation-free paths grow without bound");
  }
}

bool BoundQuiver::has_relation(const Path& p) const {
  return std::binary_search(relations_.begin(), relations_.end(), p);
}

bool BoundQuiver::has_relation_pair(const ArrowName& left, const ArrowName& right) const {
  for (const Path& rel : relations_) {
    if (rel.length() == 2 && rel.arrows()[0] == left && rel.arrows()[1] == right) return true;
  }
  return false;
}

bool contains_relation_subpath(const BoundQuiver& bq, const Path& sigma) {
  validate_path(bq.quiver(), sigma, "path");
  if (sigma.is_trivial()) return false;
  for (const Path& rel : bq.relations()) {
    if (is_arrow_subsequence(rel, sigma)) return true;
  }
  return false;
}

bool is_antipath(const BoundQuiver& bq, const Path& sigma) {
  if (!is_gentle(bq)) throw InputError("antipath test requires a gentle bound quiver");
  if (sigma.is_trivial()) throw InputError("antipath test requires a composite path");
  validate_path(bq.quiver(), sigma, "path");
  for (std::size_t i = 0; i + 1 < sigma.arrows().size(); ++i) {
    if (!bq.has_relation_pair(sigma.arrows()[i], sigma.arrows()[i + 1])) return false;
  }
  return true;
}

bool is_admissible(const Quiver& quiver, const std::vector<Path>& relations) {
  for (const Path& rel : relations) {
    if (rel.length() < 2) {
      throw InputError("relation '" + rel.str() + "' has length " +
                       std::to_string(rel.length()) + "; relations need length >= 2");
    }
    validate_path(quiver, rel, "relation");
  }

  const auto& arrows = quiver.arrows();
  const int n = static_cast<int>(arrows.size());
  if (n == 0) return true;

  std::map<ArrowName, int> index;
  for (int i = 0; i < n; ++i) index[arrows[i].name] = i;

  std::vector<std::vector<int>> patterns;
  patterns.reserve(relations.size());
  for (const Path& rel : relations) {
    std::vector<int> word;
    word.reserve(rel.length());
    for (auto it = rel.arrows().rbegin(); it != rel.arrows().rend(); ++it) {
      word.push_back(index.at(*it));
    }
    patterns.push_back(std::move(word));
  }

  SubwordAutomaton ac(patterns, n);
  const int states = static_cast<int>(ac.delta.size());

  // successors[a]: arrows traversable directly after a.
  std::vector<std::vector<int>> successors(n);
  for (int a = 0; a < n; ++a) {
    for (const ArrowName& b : quiver.arrows_from(arrows[a].target)) {
      successors[a].push_back(index.at(b));
    }
  }

  // Product walk graph: node = arrow * states + automaton state.  The
  // relation-free language is infinite iff a cycle is reachable.
  auto node_id = [states](int arrow, int state) { return arrow * states + state; };
  std::vector<signed char> color(static_cast<std::size_t>(n) * states, 0);  // 0 new, 1 open, 2 done

  struct Frame {
    int arrow, state;
    std::size_t next_succ;
  };

  std::vector<Frame> stack;
  for (int a = 0; a < n; ++a) {
    int start_state = ac.delta[0][a];
    if (ac.terminal[start_state]) continue;
    if (color[node_id(a, start_state)] == 2) continue;
    stack.push_back({a, start_state, 0});
    color[node_id(a, start_state)] = 1;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next_succ < successors[frame.arrow].size()) {
        int b = successors[frame.arrow][frame.next_succ++];
        int next_state = ac.delta[frame.state][b];
        if (ac.terminal[next_state]) continue;
        signed char& c = color[node_id(b, next_state)];
        if (c == 1) return false;  // reachable cycle
        if (c == 0) {
          c = 1;
          stack.push_back({b, next_state, 0});
        }
      } else {
        color[node_id(frame.arrow, frame.state)] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

namespace detail {

std::optional<ArrowLinks> compute_links(const BoundQuiver& bq) {
  for (const Path& rel : bq.relations()) {
    if (rel.length() != 2) {
      throw InputError("arrow links are defined for length-2 relations only");
    }
  }
  ArrowLinks links;
  const Quiver& q = bq.quiver();
  for (const VertexName& v : q.vertices()) {
    for (const ArrowName& b : q.arrows_into(v)) {
      for (const ArrowName& a : q.arrows_from(v)) {
        // composable pair "a b": traverse b, then a.
        if (bq.has_relation_pair(a, b)) {
          if (!links.rel_next.emplace(b, a).second) return std::nullopt;
          if (!links.rel_prev.emplace(a, b).second) return std::nullopt;
        } else {
          if (!links.free_next.emplace(b, a).second) return std::nullopt;
          if (!links.free_prev.emplace(a, b).second) return std::nullopt;
        }
      }
    }
  }
  return links;
}

}  // namespace detail

bool is_gentle(const BoundQuiver& bq) {
  for (const Path& rel : bq.relations()) {
    if (rel.length() != 2) return false;
  }
  const Quiver& q = bq.quiver();
  for (const VertexName& v : q.vertices()) {
    if (q.arrows_from(v).size() > 2 || q.arrows_into(v).size() > 2) return false;
  }
  if (!detail::compute_links(bq).has_value()) return false;
  return q.connected();
}

long cycle_excess(const BoundQuiver& bq) {
  return static_cast<long>(bq.quiver().arrow_count()) -
         static_cast<long>(bq.quiver().vertex_count());
}

bool is_two_cycle(const BoundQuiver& bq) { return cycle_excess(bq) == 1 && is_gentle(bq); }

std::vector<Path> enumerate_paths(const BoundQuiver& bq, std::size_t max_length) {
  const Quiver& q = bq.quiver();
  std::vector<Path> result;
  for (const VertexName& v : q.vertices()) result.push_back(Path::trivial(v));

  std::vector<Path> frontier;
  for (const Arrow& a : q.arrows()) frontier.push_back(make_path(q, {a.name}));

  std::size_t length = 1;
  while (length <= max_length && !frontier.empty()) {
    for (const Path& p : frontier) result.push_back(p);
    std::vector<Path> next;
    if (length < max_length) {
      for (const Path& p : frontier) {
        for (const ArrowName& a : q.arrows_into(p.source())) {
          Path extended = compose(p, make_path(q, {a}));
          if (!contains_relation_subpath(bq, extended)) next.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next);
    ++length;
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// Chains of a partial bijection on arrows, returned as composition-order
// paths.  A chain starts at an arrow with no predecessor; arrows on cycles of
// the map belong to no chain and are reported through `leftover`.
std::vector<Path> successor_chains(const BoundQuiver& bq,
                                   const std::map<ArrowName, ArrowName>& next,
                                   const std::map<ArrowName, ArrowName>& prev,
                                   std::set<ArrowName>& leftover) {
  const Quiver& q = bq.quiver();
  std::set<ArrowName> visited;
  std::vector<Path> chains;
  for (const Arrow& arrow : q.arrows()) {
    if (prev.contains(arrow.name)) continue;
    std::vector<ArrowName> traversal;
    ArrowName current = arrow.name;
    while (true) {
      if (!visited.insert(current).second) {
        throw InternalError("successor chain revisited arrow '" + current + "'");
      }
      traversal.push_back(current);
      auto it = next.find(current);
      if (it == next.end()) break;
      current = it->second;
    }
    std::reverse(traversal.begin(), traversal.end());
    chains.push_back(make_path(q, traversal));
  }
  leftover.clear();
  for (const Arrow& arrow : q.arrows()) {
    if (!visited.contains(arrow.name)) leftover.insert(arrow.name);
  }
  std::sort(chains.begin(), chains.end());
  return chains;
}

}  // namespace

std::vector<Path> maximal_paths(const BoundQuiver& bq) {
  if (!is_gentle(bq)) throw InputError("maximal paths require a gentle bound quiver");
  auto links = detail::compute_links(bq);
  std::set<ArrowName> leftover;
  auto chains = successor_chains(bq, links->free_next, links->free_prev, leftover);
  if (!leftover.empty()) {
    // A relation-free cycle would contradict admissibility.
    throw InternalError("relation-free cycle in an admissible bound quiver");
  }
  return chains;
}

std::vector<Path> maximal_antipaths(const BoundQuiver& bq) {
  if (!is_gentle(bq)) throw InputError("maximal antipaths require a gentle bound quiver");
  auto links = detail::compute_links(bq);
  std::set<ArrowName> leftover;
  return successor_chains(bq, links->rel_next, links->rel_prev, leftover);
}

}  // namespace gentle
