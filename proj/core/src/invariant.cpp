#include "gentle/invariant.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

struct ThreadContext {
  std::vector<Thread> permitted;
  std::vector<Thread> forbidden;
};

ThreadContext compute_threads(const BoundQuiver& bq) {
  if (!is_gentle(bq)) throw InputError("threads require a gentle bound quiver");

  ThreadContext ctx;
  for (Path& p : maximal_paths(bq)) {
    ctx.permitted.push_back({ThreadKind::Permitted, std::move(p)});
  }
  for (Path& p : maximal_antipaths(bq)) {
    ctx.forbidden.push_back({ThreadKind::Forbidden, std::move(p)});
  }

  const Quiver& q = bq.quiver();
  for (const VertexName& v : q.vertices()) {
    const auto& outs = q.arrows_from(v);
    const auto& ins = q.arrows_into(v);
    if (outs.size() > 1 || ins.size() > 1) continue;
    if (!outs.empty() && !ins.empty()) {
      if (bq.has_relation_pair(outs[0], ins[0])) {
        ctx.forbidden.push_back({ThreadKind::Forbidden, Path::trivial(v)});
      } else {
        ctx.permitted.push_back({ThreadKind::Permitted, Path::trivial(v)});
      }
    } else {
      // One side missing: 1_v qualifies on both sides.
      ctx.permitted.push_back({ThreadKind::Permitted, Path::trivial(v)});
      ctx.forbidden.push_back({ThreadKind::Forbidden, Path::trivial(v)});
    }
  }

  std::sort(ctx.permitted.begin(), ctx.permitted.end());
  std::sort(ctx.forbidden.begin(), ctx.forbidden.end());
  return ctx;
}

bool contains_thread(const std::vector<Thread>& threads, const Thread& t) {
  return std::binary_search(threads.begin(), threads.end(), t);
}

Thread unique_match(const std::vector<Thread>& candidates, const Thread& argument,
                    const char* description) {
  if (candidates.size() != 1) {
    throw StructureViolation(std::string("expected exactly one ") + description + " for '" +
                             argument.body.str() + "', found " +
                             std::to_string(candidates.size()));
  }
  return candidates.front();
}

Thread phi1_impl(const BoundQuiver& bq, const ThreadContext& ctx, const Thread& sigma) {
  const Quiver& q = bq.quiver();
  if (!sigma.body.is_trivial()) {
    std::vector<Thread> matches;
    for (const Thread& omega : ctx.forbidden) {
      if (omega.body.target() != sigma.body.target()) continue;
      if (!omega.body.is_trivial() &&
          omega.body.terminating_arrow() == sigma.body.terminating_arrow()) {
        continue;
      }
      matches.push_back(omega);
    }
    return unique_match(matches, sigma, "same-target forbidden thread");
  }

  const auto& ins = q.arrows_into(sigma.body.source());
  if (ins.empty()) {
    Thread result{ThreadKind::Forbidden, sigma.body};
    if (!contains_thread(ctx.forbidden, result)) {
      throw StructureViolation("trivial path '" + sigma.body.str() +
                               "' is not a forbidden thread");
    }
    return result;
  }
  std::vector<Thread> matches;
  for (const Thread& omega : ctx.forbidden) {
    if (!omega.body.is_trivial() && omega.body.terminating_arrow() == ins[0]) {
      matches.push_back(omega);
    }
  }
  return unique_match(matches, sigma, "forbidden thread terminating with the incoming arrow");
}

Thread phi2_impl(const BoundQuiver& bq, const ThreadContext& ctx, const Thread& omega) {
  const Quiver& q = bq.quiver();
  if (!omega.body.is_trivial()) {
    std::vector<Thread> matches;
    for (const Thread& sigma : ctx.permitted) {
      if (sigma.body.source() != omega.body.source()) continue;
      if (!sigma.body.is_trivial() &&
          sigma.body.starting_arrow() == omega.body.starting_arrow()) {
        continue;
      }
      matches.push_back(sigma);
    }
    return unique_match(matches, omega, "same-source permitted thread");
  }

  const auto& outs = q.arrows_from(omega.body.source());
  if (outs.empty()) {
    Thread result{ThreadKind::Permitted, omega.body};
    if (!contains_thread(ctx.permitted, result)) {
      throw StructureViolation("trivial path '" + omega.body.str() +
                               "' is not a permitted thread");
    }
    return result;
  }
  std::vector<Thread> matches;
  for (const Thread& sigma : ctx.permitted) {
    if (!sigma.body.is_trivial() && sigma.body.starting_arrow() == outs[0]) {
      matches.push_back(sigma);
    }
  }
  return unique_match(matches, omega, "permitted thread starting with the outgoing arrow");
}

}  // namespace

std::vector<Thread> permitted_threads(const BoundQuiver& bq) {
  return compute_threads(bq).permitted;
}

std::vector<Thread> forbidden_threads(const BoundQuiver& bq) {
  return compute_threads(bq).forbidden;
}

Thread phi1(const BoundQuiver& bq, const Thread& sigma) {
  ThreadContext ctx = compute_threads(bq);
  if (sigma.kind != ThreadKind::Permitted || !contains_thread(ctx.permitted, sigma)) {
    throw InputError("'" + sigma.body.str() + "' is not a permitted thread");
  }
  return phi1_impl(bq, ctx, sigma);
}

Thread phi2(const BoundQuiver& bq, const Thread& omega) {
  ThreadContext ctx = compute_threads(bq);
  if (omega.kind != ThreadKind::Forbidden || !contains_thread(ctx.forbidden, omega)) {
    throw InputError("'" + omega.body.str() + "' is not a forbidden thread");
  }
  return phi2_impl(bq, ctx, omega);
}

std::vector<ArrowName> critical_arrows(const BoundQuiver& bq) {
  std::set<ArrowName> covered;
  for (const Path& omega : maximal_antipaths(bq)) {
    covered.insert(omega.arrows().begin(), omega.arrows().end());
  }
  std::vector<ArrowName> critical;
  for (const Arrow& a : bq.quiver().arrows()) {
    if (!covered.contains(a.name)) critical.push_back(a.name);
  }
  return critical;
}

ArrowName phi_prime(const BoundQuiver& bq, const ArrowName& arrow) {
  std::vector<ArrowName> critical = critical_arrows(bq);
  if (!std::binary_search(critical.begin(), critical.end(), arrow)) {
    throw InputError("'" + arrow + "' is not a critical arrow");
  }
  std::vector<ArrowName> partners;
  for (const Path& rel : bq.relations()) {
    if (rel.arrows()[0] == arrow) partners.push_back(rel.arrows()[1]);
  }
  if (partners.size() != 1) {
    throw StructureViolation("critical arrow '" + arrow + "' has " +
                             std::to_string(partners.size()) + " relation partners");
  }
  if (!std::binary_search(critical.begin(), critical.end(), partners[0])) {
    throw StructureViolation("relation partner '" + partners[0] + "' of critical arrow '" +
                             arrow + "' is not critical");
  }
  return partners[0];
}

DerivedInvariant::DerivedInvariant(std::vector<Entry> entries) {
  std::map<Key, std::size_t> merged;
  for (const Entry& e : entries) {
    if (e.second == 0) continue;
    merged[e.first] += e.second;
  }
  entries_.assign(merged.begin(), merged.end());
}

std::size_t DerivedInvariant::norm() const {
  std::size_t total = 0;
  for (const Entry& e : entries_) total += e.second;
  return total;
}

std::string DerivedInvariant::str() const {
  if (entries_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += "; ";
    out += "(" + std::to_string(entries_[i].first.first) + "," +
           std::to_string(entries_[i].first.second) + "):" + std::to_string(entries_[i].second);
  }
  return out;
}

DerivedInvariant derived_invariant(const BoundQuiver& bq) {
  ThreadContext ctx = compute_threads(bq);
  if (ctx.permitted.size() != ctx.forbidden.size()) {
    throw StructureViolation("thread count mismatch: " + std::to_string(ctx.permitted.size()) +
                             " permitted vs " + std::to_string(ctx.forbidden.size()) +
                             " forbidden");
  }

  // Composite pairing on forbidden threads; must be a bijection.
  const std::size_t n = ctx.forbidden.size();
  std::vector<std::size_t> image(n);
  std::vector<bool> hit(n, false);
  auto index_of = [&](const Thread& t) {
    auto it = std::lower_bound(ctx.forbidden.begin(), ctx.forbidden.end(), t);
    if (it == ctx.forbidden.end() || !(*it == t)) {
      throw StructureViolation("pairing left the forbidden thread set at '" + t.body.str() + "'");
    }
    return static_cast<std::size_t>(it - ctx.forbidden.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    Thread mapped = phi1_impl(bq, ctx, phi2_impl(bq, ctx, ctx.forbidden[i]));
    image[i] = index_of(mapped);
    if (hit[image[i]]) {
      throw StructureViolation("forbidden-thread pairing is not a bijection at '" +
                               mapped.body.str() + "'");
    }
    hit[image[i]] = true;
  }

  std::vector<DerivedInvariant::Entry> entries;
  std::vector<bool> visited(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::size_t size = 0, total_length = 0;
    std::size_t j = i;
    while (!visited[j]) {
      visited[j] = true;
      ++size;
      total_length += ctx.forbidden[j].body.length();
      j = image[j];
    }
    entries.push_back({{size, total_length}, 1});
  }

  // Critical arrows fall into cycles of the relation-partner map.
  std::vector<ArrowName> critical = critical_arrows(bq);
  std::set<ArrowName> seen;
  for (const ArrowName& start : critical) {
    if (seen.contains(start)) continue;
    std::size_t size = 0;
    ArrowName current = start;
    while (seen.insert(current).second) {
      ++size;
      current = phi_prime(bq, current);
    }
    if (current != start) {
      throw StructureViolation("critical-arrow pairing is not a bijection at '" + start + "'");
    }
    entries.push_back({{0, size}, 1});
  }

  return DerivedInvariant(std::move(entries));
}

bool finite_gldim_proxy(const BoundQuiver& bq) { return critical_arrows(bq).empty(); }

}  // namespace gentle
