#include "gentle/families.hpp"

#include <string>
#include <utility>
#include <vector>

#include "gentle/errors.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

namespace {

std::string v(std::size_t i) { return std::to_string(i); }

std::string indexed(const char* stem, std::size_t i) { return stem + std::to_string(i); }

std::vector<VertexName> numbered_vertices(std::size_t n) {
  std::vector<VertexName> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(v(i));
  return names;
}

BoundQuiver build(std::vector<VertexName> vertices, std::vector<Arrow> arrows,
                  const std::vector<std::vector<ArrowName>>& relations) {
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Path> paths;
  paths.reserve(relations.size());
  for (const auto& names : relations) paths.push_back(make_path(q, names));
  return BoundQuiver(std::move(q), std::move(paths));
}

}  // namespace

BoundQuiver lambda0(std::size_t p, long r) {
  if (p < 1) throw InputError("lambda0 requires p >= 1");
  if (r < -1 || r > static_cast<long>(p) - 1) {
    throw InputError("lambda0 requires -1 <= r <= p - 1");
  }
  if (r == -1 && p < 2) throw InputError("lambda0 with r == -1 requires p >= 2");

  std::vector<VertexName> vertices = numbered_vertices(p + 1);
  std::vector<Arrow> arrows;
  std::vector<std::vector<ArrowName>> relations;

  if (r >= 0) {
    for (std::size_t i = 1; i <= p; ++i) {
      arrows.push_back({indexed("alpha", i), v(p + 1 - i), v(p + 2 - i)});
    }
    arrows.push_back({"beta", v(p + 1), v(1)});
    arrows.push_back({"gamma", v(p + 1), v(1)});
    relations.push_back({indexed("alpha", p), "beta"});
    for (std::size_t i = 1; i <= static_cast<std::size_t>(r); ++i) {
      relations.push_back({indexed("alpha", i), indexed("alpha", i + 1)});
    }
    relations.push_back({"gamma", indexed("alpha", 1)});
  } else {
    for (std::size_t i = 1; i + 1 <= p; ++i) {
      arrows.push_back({indexed("alpha", i), v(p - i), v(p - i + 1)});
    }
    arrows.push_back({"beta", v(1), v(p)});
    arrows.push_back({"gamma", v(p + 1), v(1)});
    arrows.push_back({"delta", v(p + 1), v(1)});
    relations.push_back({indexed("alpha", p - 1), "gamma"});
    relations.push_back({"beta", "delta"});
  }
  return build(std::move(vertices), std::move(arrows), relations);
}

BoundQuiver lambda1(std::size_t p1, std::size_t p2, std::size_t p3, std::size_t p4,
                    std::size_t r1) {
  if (p1 < 1) throw InputError("lambda1 requires p1 >= 1");
  if (p2 < 1) throw InputError("lambda1 requires p2 >= 1");
  if (r1 + 1 > p1) throw InputError("lambda1 requires r1 <= p1 - 1");
  if (p2 + p3 < 2) throw InputError("lambda1 requires p2 + p3 >= 2");
  if (p4 + r1 < 1) throw InputError("lambda1 requires p4 + r1 >= 1");
  if (p3 + p4 < 1) throw InputError("lambda1 requires p3 + p4 >= 1");

  const std::size_t n = p1 + p2 + p3 + p4 - 1;
  const VertexName left = v(1);
  const VertexName right = v(p1 + 1);
  const VertexName middle = p3 == 0 ? right : (p4 == 0 ? left : v(n));

  auto alpha_vertex = [&](std::size_t j) {  // j-th vertex of the L -> R walk
    if (j == 0) return left;
    if (j == p1) return right;
    return v(1 + j);
  };
  auto beta_vertex = [&](std::size_t j) {  // j-th vertex of the R -> L walk
    if (j == 0) return right;
    if (j == p2) return left;
    return v(p1 + 1 + j);
  };
  auto gamma_vertex = [&](std::size_t j) {  // j-th vertex of the R -> M walk
    if (j == 0) return right;
    if (j == p3) return middle;
    return v(p1 + p2 + j);
  };
  const std::size_t delta_base = p1 + p2 + (p3 > 0 ? p3 - 1 : 0);
  auto delta_vertex = [&](std::size_t j) {  // j-th vertex of the L -> M walk
    if (j == 0) return left;
    if (j == p4) return middle;
    return v(delta_base + j);
  };

  std::vector<Arrow> arrows;
  for (std::size_t j = 1; j <= p1; ++j) {
    arrows.push_back({indexed("alpha", p1 + 1 - j), alpha_vertex(j - 1), alpha_vertex(j)});
  }
  for (std::size_t j = 1; j <= p2; ++j) {
    arrows.push_back({indexed("beta", p2 + 1 - j), beta_vertex(j - 1), beta_vertex(j)});
  }
  for (std::size_t j = 1; j <= p3; ++j) {
    arrows.push_back({indexed("gamma", j), gamma_vertex(j - 1), gamma_vertex(j)});
  }
  for (std::size_t j = 1; j <= p4; ++j) {
    arrows.push_back({indexed("delta", j), delta_vertex(j - 1), delta_vertex(j)});
  }

  std::vector<std::vector<ArrowName>> relations;
  for (std::size_t i = p1 - r1; i + 1 <= p1; ++i) {
    relations.push_back({indexed("alpha", i), indexed("alpha", i + 1)});
  }
  relations.push_back({indexed("alpha", p1), indexed("beta", 1)});
  for (std::size_t i = 1; i + 1 <= p2; ++i) {
    relations.push_back({indexed("beta", i), indexed("beta", i + 1)});
  }
  relations.push_back({indexed("beta", p2), indexed("alpha", 1)});

  return build(numbered_vertices(n), std::move(arrows), relations);
}

BoundQuiver lambda2(std::size_t p1, std::size_t p2, std::size_t p3, std::size_t r1,
                    std::size_t r2) {
  if (p1 < 1) throw InputError("lambda2 requires p1 >= 1");
  if (p2 < 1) throw InputError("lambda2 requires p2 >= 1");
  if (r1 + 1 > p1) throw InputError("lambda2 requires r1 <= p1 - 1");
  if (r2 + 1 > p2) throw InputError("lambda2 requires r2 <= p2 - 1");
  if (p3 + r1 + r2 < 1) throw InputError("lambda2 requires p3 + r1 + r2 >= 1");

  const std::size_t n = p1 + p2 + p3 - 1;
  const VertexName cl = v(1);
  const VertexName cr = p3 == 0 ? cl : v(p1 + 1);

  auto alpha_vertex = [&](std::size_t j) {  // j-th vertex of the cycle walk at CL
    if (j == 0 || j == p1) return cl;
    return v(1 + j);
  };
  auto beta_vertex = [&](std::size_t j) {  // j-th vertex of the cycle walk at CR
    if (j == 0 || j == p2) return cr;
    return p3 == 0 ? v(p1 + j) : v(p1 + 1 + j);
  };
  auto gamma_vertex = [&](std::size_t j) {  // j-th vertex of the CR -> CL walk
    if (j == 0) return cr;
    if (j == p3) return cl;
    return v(p1 + p2 + j);
  };

  std::vector<Arrow> arrows;
  for (std::size_t j = 1; j <= p1; ++j) {
    arrows.push_back({indexed("alpha", p1 + 1 - j), alpha_vertex(j - 1), alpha_vertex(j)});
  }
  for (std::size_t j = 1; j <= p2; ++j) {
    arrows.push_back({indexed("beta", p2 + 1 - j), beta_vertex(j - 1), beta_vertex(j)});
  }
  for (std::size_t j = 1; j <= p3; ++j) {
    arrows.push_back({indexed("gamma", j), gamma_vertex(j - 1), gamma_vertex(j)});
  }

  std::vector<std::vector<ArrowName>> relations;
  for (std::size_t i = p1 - r1; i + 1 <= p1; ++i) {
    relations.push_back({indexed("alpha", i), indexed("alpha", i + 1)});
  }
  relations.push_back({indexed("alpha", p1), indexed("alpha", 1)});
  for (std::size_t i = p2 - r2; i + 1 <= p2; ++i) {
    relations.push_back({indexed("beta", i), indexed("beta", i + 1)});
  }
  relations.push_back({indexed("beta", p2), indexed("beta", 1)});

  return build(numbered_vertices(n), std::move(arrows), relations);
}

}  // namespace gentle
