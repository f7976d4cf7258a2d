#include "gentle/representation.hpp"

#include <string>
#include <utility>

#include "gentle/errors.hpp"

namespace gentle {

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<int>(cols, 0));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  for (const auto& row : a) {
    if (row.size() != inner) throw InputError("matrix shapes do not compose");
  }
  Matrix out = zero_matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Representation::Representation(const Quiver& q, std::map<VertexName, std::size_t> dims,
                               std::map<ArrowName, Matrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {
  for (const VertexName& v : q.vertices()) {
    if (!dims_.contains(v)) throw InputError("missing dimension for vertex '" + v + "'");
  }
  if (dims_.size() != q.vertex_count()) throw InputError("dimension for an unknown vertex");
  for (const Arrow& a : q.arrows()) {
    auto it = maps_.find(a.name);
    if (it == maps_.end()) throw InputError("missing matrix for arrow '" + a.name + "'");
    const Matrix& m = it->second;
    if (m.size() != dims_.at(a.target)) {
      throw InputError("matrix for arrow '" + a.name + "' has the wrong row count");
    }
    for (const auto& row : m) {
      if (row.size() != dims_.at(a.source)) {
        throw InputError("matrix for arrow '" + a.name + "' has the wrong column count");
      }
    }
  }
  if (maps_.size() != q.arrow_count()) throw InputError("matrix for an unknown arrow");
}

std::size_t Representation::dim(const VertexName& v) const {
  auto it = dims_.find(v);
  if (it == dims_.end()) throw InputError("unknown vertex '" + v + "'");
  return it->second;
}

const Matrix& Representation::map(const ArrowName& a) const {
  auto it = maps_.find(a);
  if (it == maps_.end()) throw InputError("unknown arrow '" + a + "'");
  return it->second;
}

std::size_t Representation::total_dim() const {
  std::size_t total = 0;
  for (const auto& [v, d] : dims_) total += d;
  return total;
}

Representation string_module(const BoundQuiver& bq, const Path& sigma) {
  const Quiver& q = bq.quiver();
  if (sigma.is_trivial()) {
    if (!q.has_vertex(sigma.source())) {
      throw InputError("path does not live on this quiver");
    }
  } else {
    if (!(make_path(q, sigma.arrows()) == sigma)) {
      throw InputError("path does not live on this quiver");
    }
    if (contains_relation_subpath(bq, sigma)) {
      throw InputError("'" + sigma.str() + "' contains a relation subpath");
    }
  }

  // Walk vertices from the source end: position i is reached after i steps.
  const std::size_t l = sigma.length();
  std::vector<VertexName> position_vertex(l + 1);
  position_vertex[0] = sigma.source();
  for (std::size_t i = 1; i <= l; ++i) {
    position_vertex[i] = q.arrow(sigma.arrows()[l - i]).target;
  }

  std::map<VertexName, std::size_t> dims;
  for (const VertexName& v : q.vertices()) dims[v] = 0;
  std::vector<std::size_t> local_index(l + 1);
  for (std::size_t i = 0; i <= l; ++i) {
    auto it = dims.find(position_vertex[i]);
    if (it == dims.end()) throw InputError("path does not live on this quiver");
    local_index[i] = it->second++;
  }

  std::map<ArrowName, Matrix> maps;
  for (const Arrow& a : q.arrows()) {
    maps[a.name] = zero_matrix(dims.at(a.target), dims.at(a.source));
  }
  for (std::size_t i = 1; i <= l; ++i) {
    maps[sigma.arrows()[l - i]][local_index[i]][local_index[i - 1]] = 1;
  }
  return Representation(q, std::move(dims), std::move(maps));
}

Matrix evaluate_path(const Representation& rep, const Path& sigma) {
  if (sigma.is_trivial()) return identity_matrix(rep.dim(sigma.source()));
  Matrix out = rep.map(sigma.arrows()[0]);
  for (std::size_t i = 1; i < sigma.arrows().size(); ++i) {
    out = multiply(out, rep.map(sigma.arrows()[i]));
  }
  return out;
}

}  // namespace gentle
