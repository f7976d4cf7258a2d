#ifndef GENTLEQ_TESTS_SUPPORT_FIXTURES_HPP
#define GENTLEQ_TESTS_SUPPORT_FIXTURES_HPP

#include <vector>

#include "gentle/bound_quiver.hpp"
#include "gentle/quiver.hpp"

namespace gentleq_tests {

// Small hand-checked bound quivers used across the suites.  The two-cycle
// trio below carries deliberately different vertex labels than the family
// constructors so that label-independence is exercised everywhere.

// Two vertices, arrows alpha1: 1 -> 2 and beta, gamma: 2 -> 1, relations
// alpha1.beta and gamma.alpha1.  Structurally identical to lambda0(1, 0).
inline gentle::BoundQuiver two_cycle_small() {
  gentle::Quiver q({"1", "2"},
                   {{"alpha1", "1", "2"}, {"beta", "2", "1"}, {"gamma", "2", "1"}});
  std::vector<gentle::Path> rels;
  rels.push_back(make_path(q, {"alpha1", "beta"}));
  rels.push_back(make_path(q, {"gamma", "alpha1"}));
  return gentle::BoundQuiver(std::move(q), std::move(rels));
}

// Vertices b, m, c with alpha2: b -> m, alpha1: m -> c, beta, gamma: c -> b,
// relations alpha2.beta and gamma.alpha1.  Isomorphic to lambda0(2, 0).
inline gentle::BoundQuiver two_cycle_mid() {
  gentle::Quiver q({"b", "m", "c"}, {{"alpha2", "b", "m"},
                                     {"alpha1", "m", "c"},
                                     {"beta", "c", "b"},
                                     {"gamma", "c", "b"}});
  std::vector<gentle::Path> rels;
  rels.push_back(make_path(q, {"alpha2", "beta"}));
  rels.push_back(make_path(q, {"gamma", "alpha1"}));
  return gentle::BoundQuiver(std::move(q), std::move(rels));
}

// Same quiver as two_cycle_mid with the extra relation alpha1.alpha2.
// Isomorphic to lambda0(2, 1).
inline gentle::BoundQuiver two_cycle_mid_extra() {
  gentle::Quiver q({"b", "m", "c"}, {{"alpha2", "b", "m"},
                                     {"alpha1", "m", "c"},
                                     {"beta", "c", "b"},
                                     {"gamma", "c", "b"}});
  std::vector<gentle::Path> rels;
  rels.push_back(make_path(q, {"alpha2", "beta"}));
  rels.push_back(make_path(q, {"alpha1", "alpha2"}));
  rels.push_back(make_path(q, {"gamma", "alpha1"}));
  return gentle::BoundQuiver(std::move(q), std::move(rels));
}

// Two vertices a, b with alpha: a -> b, beta: b -> a and both compositions
// bound.  Every antipath cycles forever, so both arrows are critical.
inline gentle::BoundQuiver bound_pair() {
  gentle::Quiver q({"a", "b"}, {{"alpha", "a", "b"}, {"beta", "b", "a"}});
  std::vector<gentle::Path> rels;
  rels.push_back(make_path(q, {"alpha", "beta"}));
  rels.push_back(make_path(q, {"beta", "alpha"}));
  return gentle::BoundQuiver(std::move(q), std::move(rels));
}

// Valid bound quiver that is not gentle: three parallel arrows.
inline gentle::BoundQuiver parallel_triple() {
  gentle::Quiver q({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}, {"c", "x", "y"}});
  return gentle::BoundQuiver(std::move(q), {});
}

// Valid bound quiver that is not gentle: two components.
inline gentle::BoundQuiver two_components() {
  gentle::Quiver q({"p", "q", "r", "s"}, {{"a", "p", "q"}, {"b", "r", "s"}});
  return gentle::BoundQuiver(std::move(q), {});
}

// Valid bound quiver that is not gentle: a single length-3 relation on a
// four-vertex line.
inline gentle::BoundQuiver long_relation() {
  gentle::Quiver q({"1", "2", "3", "4"},
                   {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}});
  std::vector<gentle::Path> rels;
  rels.push_back(make_path(q, {"c", "b", "a"}));
  return gentle::BoundQuiver(std::move(q), std::move(rels));
}

// Every gentle fixture above, for property loops.
inline std::vector<gentle::BoundQuiver> gentle_fixtures() {
  std::vector<gentle::BoundQuiver> out;
  out.push_back(two_cycle_small());
  out.push_back(two_cycle_mid());
  out.push_back(two_cycle_mid_extra());
  out.push_back(bound_pair());
  return out;
}

}  // namespace gentleq_tests

#endif  // GENTLEQ_TESTS_SUPPORT_FIXTURES_HPP
