#ifndef GENTLE_BOUND_QUIVER_HPP
#define GENTLE_BOUND_QUIVER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

// A bound quiver (quiver, relations): monomial relations only, each a path of
// length >= 2.  Construction validates the relations against the quiver and
// checks admissibility — for some n, every length-n path must contain a
// relation as a contiguous subpath; equivalently, the set of relation-free
// paths is finite.  Construction throws InputError when any of this fails, so
// every live BoundQuiver is admissible by construction.
class BoundQuiver {
 public:
  BoundQuiver(Quiver quiver, std::vector<Path> relations);

  const Quiver& quiver() const { return quiver_; }

  // Sorted, duplicate-free.
  const std::vector<Path>& relations() const { return relations_; }

  bool has_relation(const Path& p) const;

  // Convenience for length-2 relations: is "left right" a relation?
  bool has_relation_pair(const ArrowName& left, const ArrowName& right) const;

  friend bool operator==(const BoundQuiver& a, const BoundQuiver& b) {
    return a.quiver_ == b.quiver_ && a.relations_ == b.relations_;
  }

 private:
  Quiver quiver_;
  std::vector<Path> relations_;
};

// True when sigma contains some relation of bq as a contiguous subpath.
// sigma must be a path of bq's quiver (InputError otherwise); trivial paths
// contain no relation.
bool contains_relation_subpath(const BoundQuiver& bq, const Path& sigma);

// True when every consecutive arrow pair of sigma is a relation.  Requires a
// gentle bound quiver (relations of length 2) and a composite sigma;
// InputError otherwise.  Single arrows are antipaths.
bool is_antipath(const BoundQuiver& bq, const Path& sigma);

// Decides admissibility of (quiver, relations) exactly, via a forbidden-
// subword automaton: walk states pair the last traversed arrow with the
// longest relation prefix currently matched; the relation-free language is
// infinite iff that graph has a reachable cycle.  Relations must be valid
// paths of length >= 2 (InputError otherwise).
bool is_admissible(const Quiver& quiver, const std::vector<Path>& relations);

// Gentleness: connected; all relations of length exactly 2; at most two
// arrows out of and into every vertex; every arrow has at most one
// relation-free successor and predecessor and at most one relation successor
// and predecessor.
bool is_gentle(const BoundQuiver& bq);

// arrow_count - vertex_count.  A gentle bound quiver with excess 1 is what
// the rest of this library calls a two-cycle algebra.
long cycle_excess(const BoundQuiver& bq);

bool is_two_cycle(const BoundQuiver& bq);

// Every relation-free path of length <= max_length, trivial paths included,
// sorted.  Works for any bound quiver.
std::vector<Path> enumerate_paths(const BoundQuiver& bq, std::size_t max_length);

// Maximal relation-free paths (never trivial: every vertex meets an arrow).
// Requires gentleness; the relation-free successor relation is then a
// partial bijection on arrows and the maximal paths are its chains.
std::vector<Path> maximal_paths(const BoundQuiver& bq);

// Maximal antipaths, computed as chains of the relation successor relation.
// Arrows on full relation cycles lie on no maximal antipath (every antipath
// through them extends forever) and are simply absent from the result; the
// result can therefore be empty.  Requires gentleness.
std::vector<Path> maximal_antipaths(const BoundQuiver& bq);

namespace detail {

// Per-arrow traversal links for gentle bound quivers.  For a composable pair
// (a after b), i.e. the length-2 path "a b": if "a b" is a relation, a is b's
// relation successor; otherwise a is b's relation-free successor.  Gentleness
// makes each of the four slots unique.
struct ArrowLinks {
  // arrow -> unique successor/predecessor in traversal order, when present.
  std::map<ArrowName, ArrowName> free_next, free_prev, rel_next, rel_prev;
};

// Computes the links; returns std::nullopt when a uniqueness budget is
// exceeded (the input then violates gentleness conditions).  Relations of
// length != 2 are a precondition violation (InputError).
std::optional<ArrowLinks> compute_links(const BoundQuiver& bq);

}  // namespace detail

}  // namespace gentle

#endif  // GENTLE_BOUND_QUIVER_HPP
