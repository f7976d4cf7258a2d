#ifndef GENTLE_SWEEP_HPP
#define GENTLE_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gentle/invariant.hpp"

namespace gentle {

struct SweepRecord {
  std::string family;        // "lambda0", "lambda1" or "lambda2"
  std::vector<long> params;  // constructor arguments in declaration order
  std::size_t vertices = 0;
  std::size_t arrows = 0;
  DerivedInvariant phi;
  std::size_t norm = 0;
  bool finite_gldim = false;
};

struct CollisionGroup {
  std::size_t vertices = 0;
  DerivedInvariant phi;
  std::vector<std::size_t> records;  // indices into SweepReport::records
};

struct SweepReport {
  std::string family;  // the filter the sweep ran under ("all" or one family)
  std::size_t max_vertices = 0;
  std::vector<SweepRecord> records;
  std::vector<CollisionGroup> collisions;

  // Violated built-in assertions, empty on a clean run.  Asserted: every
  // lambda0(p, r) has invariant {(p, p+2): 1}; lambda0 members sharing a p
  // land in one collision group; no collision group mixes lambda0 with
  // another family.  Groups inside lambda1 and lambda2 are data, not errors.
  std::vector<std::string> failures;
};

// Enumerates every member of the selected families ("all", "lambda0",
// "lambda1" or "lambda2") with at most max_vertices vertices (lambda2 members
// up to their cycle-swap symmetry), computes the orbit invariant of each, and
// groups members agreeing on (vertex count, invariant).  Assertion failures
// land in the report instead of throwing.  jobs >= 1 sets the worker thread
// count; the report is identical for every job count.
SweepReport run_sweep(std::size_t max_vertices, std::size_t jobs,
                      const std::string& family = "all");

// Stable JSON rendering: sorted keys, two-space indent, trailing newline.
std::string sweep_report_json(const SweepReport& report);

}  // namespace gentle

#endif  // GENTLE_SWEEP_HPP
