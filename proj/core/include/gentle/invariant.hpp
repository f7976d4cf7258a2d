#ifndef GENTLE_INVARIANT_HPP
#define GENTLE_INVARIANT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gentle/bound_quiver.hpp"

namespace gentle {

enum class ThreadKind { Permitted, Forbidden };

// A permitted thread is a maximal relation-free path, or a trivial path 1_x
// at a vertex with at most one outgoing arrow a, at most one incoming arrow
// b, and "a b" not a relation when both exist.  A forbidden thread is the
// dual: a maximal antipath, or a trivial 1_x whose pass-through pair "a b" is
// a relation when both arrows exist.  A trivial path with a missing side is
// both a permitted and a forbidden thread, so threads carry their kind.
struct Thread {
  ThreadKind kind;
  Path body;

  friend bool operator==(const Thread& a, const Thread& b) {
    return a.kind == b.kind && a.body == b.body;
  }
  friend bool operator<(const Thread& a, const Thread& b) {
    if (!(a.body == b.body)) return a.body < b.body;
    return a.kind < b.kind;
  }
};

// All permitted (resp. forbidden) threads, sorted by body.  Requires a
// gentle bound quiver (InputError otherwise).
std::vector<Thread> permitted_threads(const BoundQuiver& bq);
std::vector<Thread> forbidden_threads(const BoundQuiver& bq);

// The permitted-to-forbidden pairing: for a maximal path sigma, the unique
// forbidden thread with the same target whose terminating arrow differs (or
// which is trivial); for a permitted trivial thread at x with incoming arrow
// b, the unique forbidden thread terminating with b; otherwise 1_x itself.
// Throws InputError when sigma is not a permitted thread of bq and
// StructureViolation when the match is not unique.
Thread phi1(const BoundQuiver& bq, const Thread& sigma);

// Dual pairing from forbidden to permitted threads: same-source matching on
// starting arrows.
Thread phi2(const BoundQuiver& bq, const Thread& omega);

// Arrows contained in no maximal antipath: exactly the arrows lying on full
// relation cycles.  Sorted.
std::vector<ArrowName> critical_arrows(const BoundQuiver& bq);

// For a critical arrow a, the unique critical arrow a' with "a a'" a
// relation.  A bijection on critical_arrows(bq).
ArrowName phi_prime(const BoundQuiver& bq, const ArrowName& arrow);

// The invariant: a finitely supported multiplicity function on pairs
// (n, m) of naturals, stored as sorted ((n, m), count) entries.
class DerivedInvariant {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using Entry = std::pair<Key, std::size_t>;

  DerivedInvariant() = default;
  explicit DerivedInvariant(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }

  // Sum of all multiplicities (the number of orbits counted).
  std::size_t norm() const;

  friend bool operator==(const DerivedInvariant&, const DerivedInvariant&) = default;

  // "(n,m):count" pairs joined with "; ", or "empty".
  std::string str() const;

 private:
  std::vector<Entry> entries_;  // sorted by key, counts > 0
};

inline std::size_t norm(const DerivedInvariant& inv) { return inv.norm(); }

// Computes the invariant of a gentle bound quiver: orbits of the composite
// pairing phi1 . phi2 on forbidden threads contribute (orbit size, total
// length); orbits of phi_prime on critical arrows contribute (0, orbit
// size).  Checks |permitted| == |forbidden| and that both pairings are
// bijections, throwing StructureViolation otherwise.
DerivedInvariant derived_invariant(const BoundQuiver& bq);

// True iff there are no critical arrows.  For gentle bound quivers this is
// the finite-global-dimension test; norm 1 forces it.
bool finite_gldim_proxy(const BoundQuiver& bq);

}  // namespace gentle

#endif  // GENTLE_INVARIANT_HPP
