#ifndef GENTLE_TRANSFORMS_HPP
#define GENTLE_TRANSFORMS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/bound_quiver.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

// Structure-preserving relabeling: s, t and the relation set transport along both maps.
struct Isomorphism {
  std::map<VertexName, VertexName> vertex_map;
  std::map<ArrowName, ArrowName> arrow_map;
};

// Lexicographically least witness (vertex map first, then arrow map); nullopt if none.
std::optional<Isomorphism> are_isomorphic(const BoundQuiver& a, const BoundQuiver& b);

// Reflection at x is defined when x carries no loop and every arrow leaving x
// has a relation-free predecessor arriving at x.
bool reflection_applicable(const BoundQuiver& bq, const VertexName& x);

// Arrows into x reverse, arrows out of x slide back along their relation-free
// predecessor, and arrows whose relation successor arrives at x are redirected
// into x.  Keeps the vertex and arrow names.  Gentle in, gentle out.
BoundQuiver reflect(const BoundQuiver& bq, const VertexName& x);

// One parallel pair of arrows S -> T (S != T) plus a simple chain T -> S
// through every other vertex.  chain[k] is the (k+1)-th chain arrow counted
// from the pair's source, so chain.front() ends at S and chain.back() leaves T.
struct Lambda0Shape {
  VertexName pair_source;
  VertexName pair_target;
  std::vector<ArrowName> pair_arrows;
  std::vector<ArrowName> chain;
};

std::optional<Lambda0Shape> recognize_lambda0_shape(const Quiver& q);

// On a Lambda0Shape quiver, trade the chain relation at position i for one at
// position i-1 (positions count from the pair's source, 2 <= i <= chain length - 1).
// Same quiver, shifted relation set; agrees with reflection at the head of the
// i-th chain arrow up to swapping two vertices.
BoundQuiver shift_relation(const BoundQuiver& bq, std::size_t i);

struct Coextension {
  BoundQuiver result;
  VertexName fresh_vertex;
  ArrowName fresh_arrow;
};

// Attach a fresh sink behind the target of a maximal path sigma: one new arrow
// from target(sigma) to the fresh vertex, bound by one new relation over each
// arrow into target(sigma) other than sigma's terminating arrow.
Coextension coextend_detailed(const BoundQuiver& bq, const Path& sigma);
BoundQuiver coextend(const BoundQuiver& bq, const Path& sigma);

struct PipelineStep {
  std::string description;
  BoundQuiver state;
};

// Replays the growth step lambda0(p, r) -> lambda0(p + 1, r): coextend along
// the maximal path terminating with "beta", reflect at the fresh vertex (twice
// for r >= 0, once for r == -1), then walk the freed chain relation into place
// one shift at a time.  steps holds every intermediate state, the initial one
// first; witness maps the final state onto lambda0(p + 1, r).
struct PipelineResult {
  std::vector<PipelineStep> steps;
  Isomorphism witness;

  const BoundQuiver& final_state() const { return steps.back().state; }
};

PipelineResult extension_pipeline(std::size_t p, long r);

}  // namespace gentle

#endif  // GENTLE_TRANSFORMS_HPP
