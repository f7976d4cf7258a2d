#include "gentle/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

void check_name(const std::string& name, const char* what) {
  if (name.empty()) throw InputError(std::string(what) + " name must not be empty");
  for (unsigned char c : name) {
    if (std::isspace(c) || c == '#') {
      throw InputError(std::string(what) + " name '" + name +
                       "' must not contain whitespace or '#'");
    }
  }
}

}  // namespace

Quiver::Quiver(std::vector<VertexName> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw InputError("quiver must have at least one vertex");

  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    check_name(vertices_[i], "vertex");
    if (i > 0 && vertices_[i] == vertices_[i - 1]) {
      throw InputError("duplicate vertex name '" + vertices_[i] + "'");
    }
  }

  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    check_name(a.name, "arrow");
    if (i > 0 && a.name == arrows_[i - 1].name) {
      throw InputError("duplicate arrow name '" + a.name + "'");
    }
    if (!has_vertex(a.source)) {
      throw InputError("arrow '" + a.name + "' has unknown source '" + a.source + "'");
    }
    if (!has_vertex(a.target)) {
      throw InputError("arrow '" + a.name + "' has unknown target '" + a.target + "'");
    }
  }

  for (const VertexName& v : vertices_) {
    out_[v];
    in_[v];
  }
  for (const Arrow& a : arrows_) {
    out_[a.source].push_back(a.name);
    in_[a.target].push_back(a.name);
  }

  for (const VertexName& v : vertices_) {
    if (out_[v].empty() && in_[v].empty()) {
      throw InputError("isolated vertex '" + v + "'");
    }
  }
}

bool Quiver::has_vertex(const VertexName& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Quiver::has_arrow(const ArrowName& a) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a,
                             [](const Arrow& x, const ArrowName& n) { return x.name < n; });
  return it != arrows_.end() && it->name == a;
}

const Arrow& Quiver::arrow(const ArrowName& a) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a,
                             [](const Arrow& x, const ArrowName& n) { return x.name < n; });
  if (it == arrows_.end() || it->name != a) {
    throw InputError("unknown arrow '" + a + "'");
  }
  return *it;
}

const std::vector<ArrowName>& Quiver::arrows_from(const VertexName& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) throw InputError("unknown vertex '" + v + "'");
  return it->second;
}

const std::vector<ArrowName>& Quiver::arrows_into(const VertexName& v) const {
  auto it = in_.find(v);
  if (it == in_.end()) throw InputError("unknown vertex '" + v + "'");
  return it->second;
}

bool Quiver::connected() const {
  if (vertices_.empty()) return false;
  std::set<VertexName> seen;
  std::vector<VertexName> stack{vertices_.front()};
  seen.insert(vertices_.front());
  while (!stack.empty()) {
    VertexName v = stack.back();
    stack.pop_back();
    auto visit = [&](const VertexName& w) {
      if (seen.insert(w).second) stack.push_back(w);
    };
    for (const ArrowName& a : arrows_from(v)) visit(arrow(a).target);
    for (const ArrowName& a : arrows_into(v)) visit(arrow(a).source);
  }
  return seen.size() == vertices_.size();
}

Path Path::trivial(VertexName v) { return Path({}, v, v); }

const ArrowName& Path::terminating_arrow() const {
  if (is_trivial()) throw InputError("trivial path has no terminating arrow");
  return arrows_.front();
}

const ArrowName& Path::starting_arrow() const {
  if (is_trivial()) throw InputError("trivial path has no starting arrow");
  return arrows_.back();
}

std::string Path::str() const {
  if (is_trivial()) return "1_" + source_;
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i > 0) out += ' ';
    out += arrows_[i];
  }
  return out;
}

Path trivial_path(const Quiver& q, const VertexName& v) {
  if (!q.has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
  return Path::trivial(v);
}

Path make_path(const Quiver& q, const std::vector<ArrowName>& arrows) {
  if (arrows.empty()) {
    throw InputError("a composite path needs at least one arrow; use trivial_path");
  }
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    const Arrow& left = q.arrow(arrows[i]);
    const Arrow& right = q.arrow(arrows[i + 1]);
    if (left.source != right.target) {
      throw InputError("arrows '" + left.name + "' and '" + right.name +
                       "' do not compose: s(" + left.name + ") = " + left.source +
                       " but t(" + right.name + ") = " + right.target);
    }
  }
  return Path(arrows, q.arrow(arrows.back()).source, q.arrow(arrows.front()).target);
}

Path compose(const Path& p1, const Path& p2) {
  if (p1.source() != p2.target()) {
    throw InputError("paths do not compose: source of left factor is " + p1.source() +
                     ", target of right factor is " + p2.target());
  }
  std::vector<ArrowName> arrows = p1.arrows();
  arrows.insert(arrows.end(), p2.arrows().begin(), p2.arrows().end());
  return Path(std::move(arrows), p2.source(), p1.target());
}

bool is_arrow_subsequence(const Path& sub, const Path& sup) {
  if (sub.is_trivial()) throw InputError("subpath test requires a composite path");
  const auto& s = sub.arrows();
  const auto& t = sup.arrows();
  if (s.size() > t.size()) return false;
  for (std::size_t off = 0; off + s.size() <= t.size(); ++off) {
    if (std::equal(s.begin(), s.end(), t.begin() + off)) return true;
  }
  return false;
}

}  // namespace gentle
