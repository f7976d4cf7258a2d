#ifndef GENTLE_REPRESENTATION_HPP
#define GENTLE_REPRESENTATION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "gentle/bound_quiver.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

// Dense row-major integer matrix: m[row][col], every row the same width.
using Matrix = std::vector<std::vector<int>>;

Matrix identity_matrix(std::size_t n);
Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b);

// One vector space dimension per vertex and one matrix per arrow, with
// rows = dim(target) and cols = dim(source).
class Representation {
 public:
  Representation(const Quiver& q, std::map<VertexName, std::size_t> dims,
                 std::map<ArrowName, Matrix> maps);

  std::size_t dim(const VertexName& v) const;
  const Matrix& map(const ArrowName& a) const;
  std::size_t total_dim() const;

 private:
  std::map<VertexName, std::size_t> dims_;
  std::map<ArrowName, Matrix> maps_;
};

// Walk module of a relation-free path: one basis element per walk position,
// counted 0..length from the source end; the arrow at walk step i sends
// position i-1 to position i, and every other matrix entry is zero.  Every
// relation of bq evaluates to zero on the result.
Representation string_module(const BoundQuiver& bq, const Path& sigma);

// Product of the arrow matrices along sigma, rightmost factor applied first;
// identity on dim(source(sigma)) for a trivial path.
Matrix evaluate_path(const Representation& rep, const Path& sigma);

}  // namespace gentle

#endif  // GENTLE_REPRESENTATION_HPP
