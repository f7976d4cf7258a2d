#ifndef GENTLE_QUIVER_HPP
#define GENTLE_QUIVER_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gentle {

using VertexName = std::string;
using ArrowName = std::string;

struct Arrow {
  ArrowName name;
  VertexName source;
  VertexName target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A finite quiver: named vertices, named arrows with source/target maps.
// Validation rejects duplicate names, dangling endpoints, isolated vertices
// (every vertex must meet at least one arrow) and empty vertex sets.
// Names are opaque symbolic tokens; every collection this class hands out is
// sorted by name so that downstream output is deterministic.
class Quiver {
 public:
  Quiver(std::vector<VertexName> vertices, std::vector<Arrow> arrows);

  const std::vector<VertexName>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool has_vertex(const VertexName& v) const;
  bool has_arrow(const ArrowName& a) const;

  // Throws InputError when the arrow does not exist.
  const Arrow& arrow(const ArrowName& a) const;

  // Arrows with the given source (resp. target), sorted by name.
  const std::vector<ArrowName>& arrows_from(const VertexName& v) const;
  const std::vector<ArrowName>& arrows_into(const VertexName& v) const;

  // Connectivity of the underlying undirected graph.
  bool connected() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<VertexName> vertices_;           // sorted
  std::vector<Arrow> arrows_;                  // sorted by name
  std::map<VertexName, std::vector<ArrowName>> out_;  // source -> arrows
  std::map<VertexName, std::vector<ArrowName>> in_;   // target -> arrows
};

// A path is stored as its arrows in composition order, left to right:
//
//   sigma = a1 a2 ... al   with   s(a_i) = t(a_{i+1}).
//
// Composition reads like function composition, so the LAST listed arrow is
// traversed FIRST: source(sigma) = s(al) and target(sigma) = t(a1).  a1 is
// the terminating arrow, al the starting arrow.  Every API in this library,
// the .bq text format included, lists arrows in this order; walking a path
// through the quiver therefore means reading its arrows right to left.
//
// A trivial path has no arrows and source == target.
class Path {
 public:
  // Trivial path at a vertex.  Most callers should prefer trivial_path()
  // below, which checks vertex membership.
  static Path trivial(VertexName v);

  const std::vector<ArrowName>& arrows() const { return arrows_; }
  const VertexName& source() const { return source_; }
  const VertexName& target() const { return target_; }

  std::size_t length() const { return arrows_.size(); }
  bool is_trivial() const { return arrows_.empty(); }

  // Terminating arrow a1 / starting arrow al; InputError on trivial paths.
  const ArrowName& terminating_arrow() const;
  const ArrowName& starting_arrow() const;

  // "a1 a2 ... al" or "1_v" for the trivial path at v.
  std::string str() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.arrows_ == b.arrows_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

  // Deterministic total order: arrow sequences lexicographically (so trivial
  // paths come first), ties broken by source vertex.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows_ != b.arrows_) return a.arrows_ < b.arrows_;
    return a.source_ < b.source_;
  }

 private:
  friend Path make_path(const Quiver& q, const std::vector<ArrowName>& arrows);
  friend Path compose(const Path& p1, const Path& p2);

  Path(std::vector<ArrowName> arrows, VertexName source, VertexName target)
      : arrows_(std::move(arrows)), source_(std::move(source)), target_(std::move(target)) {}

  std::vector<ArrowName> arrows_;
  VertexName source_;
  VertexName target_;
};

// Validated trivial path at a vertex of q; InputError if v is unknown.
Path trivial_path(const Quiver& q, const VertexName& v);

// Builds the path a1...al in composition order, checking that every arrow
// exists and that s(a_i) = t(a_{i+1}).  InputError otherwise (an empty arrow
// list is rejected: use trivial_path).
Path make_path(const Quiver& q, const std::vector<ArrowName>& arrows);

// Composite p1 after p2: defined when source(p1) == target(p2); length adds.
// Both paths must come from the same quiver — this is not re-checked here.
Path compose(const Path& p1, const Path& p2);

// Contiguity test on arrow sequences: true when sub's arrows occur as a
// consecutive block inside sup's arrows.  sub must be composite (InputError
// on trivial paths); the callers that need subpath tests only ever compare
// composite paths.
bool is_arrow_subsequence(const Path& sub, const Path& sup);

}  // namespace gentle

#endif  // GENTLE_QUIVER_HPP
