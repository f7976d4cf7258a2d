#ifndef GENTLE_FAMILIES_HPP
#define GENTLE_FAMILIES_HPP

#include <cstddef>

#include "gentle/bound_quiver.hpp"

namespace gentle {

// Canonical two-cycle families.  Vertices are "1", "2", ... in layout order;
// arrow names follow the chain labels below.  Each constructor checks its
// parameter ranges and returns a gentle two-cycle bound quiver.

// lambda0(p, r), p >= 1, -1 <= r <= p - 1.
//
// r >= 0: parallel pair beta, gamma from vertex p+1 to vertex 1, chain
// alpha_p ... alpha_1 from vertex 1 back up to vertex p+1 (alpha_i starts at
// p+1-i).  Relations: alpha_p over beta, gamma over alpha_1, and the r
// consecutive chain pairs alpha_i over alpha_{i+1} for i <= r.
//
// r == -1 (p >= 2): parallel pair gamma, delta from vertex p+1 to vertex 1,
// chain alpha_{p-1} ... alpha_1 from vertex 1 to vertex p, and a second
// parallel track beta from vertex 1 straight to vertex p.  Relations:
// alpha_{p-1} over gamma and beta over delta.
BoundQuiver lambda0(std::size_t p, long r);

// lambda1(p1, p2, p3, p4, r1): an oriented cycle made of an alpha chain of p1
// arrows from L to R and a beta chain of p2 arrows from R back to L, plus a
// gamma chain of p3 arrows R -> M and a delta chain of p4 arrows L -> M (M
// collapses onto L when p4 == 0 and onto R when p3 == 0).  Chain labels count
// against the walk: alpha_{p1} leaves L, alpha_1 enters R, beta_{p2} leaves R,
// beta_1 enters L.  Relations: both junction pairs alpha_{p1} over beta_1 and
// beta_{p2} over alpha_1, every consecutive beta pair, and the r1 consecutive
// alpha pairs adjacent to L.  Requires 0 <= r1 <= p1 - 1, p2 >= 1,
// p2 + p3 >= 2, p4 + r1 >= 1, p3 + p4 >= 1.
BoundQuiver lambda1(std::size_t p1, std::size_t p2, std::size_t p3, std::size_t p4,
                    std::size_t r1);

// lambda2(p1, p2, p3, r1, r2): an alpha cycle of p1 arrows through CL, a beta
// cycle of p2 arrows through CR, and a relation-free gamma chain of p3 arrows
// CR -> CL (CL == CR when p3 == 0).  Labels count against the walk as in
// lambda1.  Relations: the wrap pairs alpha_{p1} over alpha_1 at CL and
// beta_{p2} over beta_1 at CR, the r1 consecutive alpha pairs adjacent to CL,
// and the r2 consecutive beta pairs adjacent to CR.  Requires
// 0 <= r1 <= p1 - 1, 0 <= r2 <= p2 - 1, p3 + r1 + r2 >= 1.
BoundQuiver lambda2(std::size_t p1, std::size_t p2, std::size_t p3, std::size_t r1,
                    std::size_t r2);

}  // namespace gentle

#endif  // GENTLE_FAMILIES_HPP
