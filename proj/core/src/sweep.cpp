#include "gentle/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "json.hpp"

#include "gentle/errors.hpp"
#include "gentle/families.hpp"

namespace gentle {

namespace {

struct Job {
  std::string family;
  std::vector<long> params;
};

std::vector<Job> enumerate_jobs(std::size_t max_vertices, const std::string& family) {
  std::vector<Job> jobs;
  const long maxv = static_cast<long>(max_vertices);
  const bool all = family == "all";

  if (all || family == "lambda0") {
    for (long p = 1; p + 1 <= maxv; ++p) {
      for (long r = -1; r <= p - 1; ++r) {
        if (r == -1 && p < 2) continue;
        jobs.push_back({"lambda0", {p, r}});
      }
    }
  }

  if (all || family == "lambda1") {
    for (long p1 = 1; p1 <= maxv; ++p1) {
      for (long p2 = 1; p1 + p2 - 1 <= maxv; ++p2) {
        for (long p3 = 0; p1 + p2 + p3 - 1 <= maxv; ++p3) {
          for (long p4 = 0; p1 + p2 + p3 + p4 - 1 <= maxv; ++p4) {
            for (long r1 = 0; r1 <= p1 - 1; ++r1) {
              if (p2 + p3 < 2 || p4 + r1 < 1 || p3 + p4 < 1) continue;
              jobs.push_back({"lambda1", {p1, p2, p3, p4, r1}});
            }
          }
        }
      }
    }
  }

  if (all || family == "lambda2") {
    for (long p1 = 1; p1 <= maxv; ++p1) {
      for (long p2 = 1; p1 + p2 - 1 <= maxv; ++p2) {
        for (long p3 = 0; p1 + p2 + p3 - 1 <= maxv; ++p3) {
          for (long r1 = 0; r1 <= p1 - 1; ++r1) {
            for (long r2 = 0; r2 <= p2 - 1; ++r2) {
              if (p3 + r1 + r2 < 1) continue;
              if (std::make_pair(p1, r1) < std::make_pair(p2, r2)) continue;  // swap symmetry
              jobs.push_back({"lambda2", {p1, p2, p3, r1, r2}});
            }
          }
        }
      }
    }
  }
  return jobs;
}

SweepRecord compute_record(const Job& job) {
  auto as_size = [](long x) { return static_cast<std::size_t>(x); };
  const std::vector<long>& p = job.params;
  BoundQuiver bq = job.family == "lambda0"
                       ? lambda0(as_size(p[0]), p[1])
                       : job.family == "lambda1"
                             ? lambda1(as_size(p[0]), as_size(p[1]), as_size(p[2]),
                                       as_size(p[3]), as_size(p[4]))
                             : lambda2(as_size(p[0]), as_size(p[1]), as_size(p[2]),
                                       as_size(p[3]), as_size(p[4]));
  SweepRecord record;
  record.family = job.family;
  record.params = job.params;
  record.vertices = bq.quiver().vertex_count();
  record.arrows = bq.quiver().arrow_count();
  record.phi = derived_invariant(bq);
  record.norm = record.phi.norm();
  record.finite_gldim = finite_gldim_proxy(bq);
  return record;
}

void check_lambda0_facts(SweepReport& report) {
  for (const SweepRecord& record : report.records) {
    if (record.family != "lambda0") continue;
    const std::size_t p = static_cast<std::size_t>(record.params[0]);
    DerivedInvariant expected({{{p, p + 2}, 1}});
    if (!(record.phi == expected)) {
      report.failures.push_back("lambda0(" + std::to_string(record.params[0]) + ", " +
                                std::to_string(record.params[1]) + ") has invariant " +
                                record.phi.str() + ", expected " + expected.str());
    }
  }

  // lambda0 members sharing a p collide by construction, so each p with at
  // least two members must put all of them into one group.
  std::map<long, std::vector<std::size_t>> by_p;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    if (report.records[i].family == "lambda0") by_p[report.records[i].params[0]].push_back(i);
  }
  for (const auto& [p, indices] : by_p) {
    if (indices.size() < 2) continue;
    bool found = false;
    for (const CollisionGroup& group : report.collisions) {
      found = found || std::includes(group.records.begin(), group.records.end(),
                                     indices.begin(), indices.end());
    }
    if (!found) {
      report.failures.push_back("lambda0 members at p = " + std::to_string(p) +
                                " do not share a collision group");
    }
  }

  for (const CollisionGroup& group : report.collisions) {
    bool has_lambda0 = false, has_other = false;
    for (std::size_t idx : group.records) {
      (report.records[idx].family == "lambda0" ? has_lambda0 : has_other) = true;
    }
    if (has_lambda0 && has_other) {
      std::string members;
      for (std::size_t idx : group.records) {
        if (!members.empty()) members += ", ";
        members += report.records[idx].family + "#" + std::to_string(idx);
      }
      report.failures.push_back(
          "lambda0 shares (vertex count, invariant) with another family: " + members);
    }
  }
}

nlohmann::json phi_json(const DerivedInvariant& phi) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, count] : phi.entries()) {
    entries.push_back({key.first, key.second, count});
  }
  return entries;
}

nlohmann::json params_json(const SweepRecord& record) {
  nlohmann::json out;
  if (record.family == "lambda0") {
    out["p"] = record.params[0];
    out["r"] = record.params[1];
  } else {
    const char* names[] = {"p1", "p2", "p3", "p4", "r1"};
    const char* names2[] = {"p1", "p2", "p3", "r1", "r2"};
    for (std::size_t i = 0; i < record.params.size(); ++i) {
      out[record.family == "lambda1" ? names[i] : names2[i]] = record.params[i];
    }
  }
  return out;
}

}  // namespace

SweepReport run_sweep(std::size_t max_vertices, std::size_t jobs, const std::string& family) {
  if (max_vertices < 2) throw InputError("sweep needs max_vertices >= 2");
  if (jobs < 1) throw InputError("sweep needs jobs >= 1");
  if (family != "all" && family != "lambda0" && family != "lambda1" && family != "lambda2") {
    throw InputError("unknown family '" + family +
                     "' (expected all, lambda0, lambda1 or lambda2)");
  }

  const std::vector<Job> work = enumerate_jobs(max_vertices, family);
  SweepReport report;
  report.family = family;
  report.max_vertices = max_vertices;
  report.records.resize(work.size());

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      try {
        report.records[i] = compute_record(work[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const std::size_t count = std::min(jobs, work.size() > 0 ? work.size() : std::size_t{1});
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::map<std::pair<std::size_t, std::vector<DerivedInvariant::Entry>>, std::vector<std::size_t>>
      groups;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    groups[{report.records[i].vertices, report.records[i].phi.entries()}].push_back(i);
  }
  for (auto& [key, indices] : groups) {
    if (indices.size() < 2) continue;
    CollisionGroup group;
    group.vertices = key.first;
    group.phi = DerivedInvariant(std::vector<DerivedInvariant::Entry>(key.second));
    group.records = indices;
    report.collisions.push_back(std::move(group));
  }
  std::sort(report.collisions.begin(), report.collisions.end(),
            [](const CollisionGroup& a, const CollisionGroup& b) {
              return a.records[0] < b.records[0];
            });

  check_lambda0_facts(report);
  return report;
}

std::string sweep_report_json(const SweepReport& report) {
  nlohmann::json j;
  j["family"] = report.family;
  j["max_vertices"] = report.max_vertices;
  j["failures"] = report.failures;
  j["records"] = nlohmann::json::array();
  for (const SweepRecord& record : report.records) {
    nlohmann::json r;
    r["family"] = record.family;
    r["params"] = params_json(record);
    r["vertices"] = record.vertices;
    r["arrows"] = record.arrows;
    r["phi"] = phi_json(record.phi);
    r["norm"] = record.norm;
    r["finite_gldim"] = record.finite_gldim;
    j["records"].push_back(std::move(r));
  }
  j["collisions"] = nlohmann::json::array();
  for (const CollisionGroup& group : report.collisions) {
    nlohmann::json g;
    g["vertices"] = group.vertices;
    g["phi"] = phi_json(group.phi);
    g["records"] = group.records;
    j["collisions"].push_back(std::move(g));
  }
  return j.dump(2) + "\n";
}

}  // namespace gentle
