#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gentle/bq_io.hpp"
#include "gentle/errors.hpp"
#include "gentle/families.hpp"
#include "gentle/generator.hpp"
#include "gentle/invariant.hpp"
#include "gentle/quiver.hpp"
#include "gentle/sweep.hpp"
#include "gentle/transforms.hpp"

namespace gentle::cli {

namespace {

void emit(const BoundQuiver& bq, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << write_bq_string(bq);
  } else {
    write_bq_file(out_path, bq);
  }
}

void print_witness(const Isomorphism& witness, std::ostream& out) {
  for (const auto& [from, to] : witness.vertex_map) {
    out << "vertex " << from << " -> " << to << "\n";
  }
  for (const auto& [from, to] : witness.arrow_map) {
    out << "arrow " << from << " -> " << to << "\n";
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int run_check(const std::string& file, std::ostream& out) {
  BoundQuiver bq = read_bq_file(file);
  const Quiver& q = bq.quiver();
  out << "vertices: " << q.vertex_count() << "\n";
  out << "arrows: " << q.arrow_count() << "\n";
  out << "relations: " << bq.relations().size() << "\n";
  out << "connected: " << yes_no(q.connected()) << "\n";
  const bool gentle_ = is_gentle(bq);
  out << "gentle: " << yes_no(gentle_) << "\n";
  out << "cycle_excess: " << cycle_excess(bq) << "\n";
  out << "two_cycle: " << yes_no(is_two_cycle(bq)) << "\n";
  if (gentle_) out << "finite_gldim: " << yes_no(finite_gldim_proxy(bq)) << "\n";
  return 0;
}

int run_phi(const std::string& file, std::ostream& out) {
  BoundQuiver bq = read_bq_file(file);
  DerivedInvariant phi = derived_invariant(bq);
  out << "phi: " << phi.str() << "\n";
  out << "norm: " << phi.norm() << "\n";
  out << "finite_gldim: " << yes_no(finite_gldim_proxy(bq)) << "\n";
  return 0;
}

int run_threads(const std::string& file, std::ostream& out) {
  BoundQuiver bq = read_bq_file(file);
  for (const Thread& t : permitted_threads(bq)) {
    out << "permitted: " << t.body.str() << "\n";
  }
  for (const Thread& t : forbidden_threads(bq)) {
    out << "forbidden: " << t.body.str() << "\n";
  }
  return 0;
}

int run_iso(const std::string& left, const std::string& right, std::ostream& out) {
  BoundQuiver a = read_bq_file(left);
  BoundQuiver b = read_bq_file(right);
  std::optional<Isomorphism> witness = are_isomorphic(a, b);
  if (!witness) {
    out << "not isomorphic\n";
    return 1;
  }
  out << "isomorphic\n";
  print_witness(*witness, out);
  return 0;
}

int run_pipeline(long p, long r, bool dump, std::ostream& out) {
  if (p < 1) throw InputError("p must be positive");
  PipelineResult result = extension_pipeline(static_cast<std::size_t>(p), r);
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    out << "step " << i << ": " << result.steps[i].description << "\n";
    if (dump) out << write_bq_string(result.steps[i].state);
  }
  out << "isomorphic to lambda0(" << p + 1 << ", " << r << ")\n";
  print_witness(result.witness, out);
  return 0;
}

BoundQuiver make_family(const std::string& name, const std::vector<long>& params) {
  auto as_size = [](long x) {
    if (x < 0) throw InputError("parameter must be nonnegative");
    return static_cast<std::size_t>(x);
  };
  if (name == "lambda0") {
    if (params.size() != 2) throw InputError("lambda0 takes parameters: p r");
    if (params[0] < 1) throw InputError("lambda0 requires p >= 1");
    return lambda0(as_size(params[0]), params[1]);
  }
  if (name == "lambda1") {
    if (params.size() != 5) throw InputError("lambda1 takes parameters: p1 p2 p3 p4 r1");
    return lambda1(as_size(params[0]), as_size(params[1]), as_size(params[2]),
                   as_size(params[3]), as_size(params[4]));
  }
  if (name == "lambda2") {
    if (params.size() != 5) throw InputError("lambda2 takes parameters: p1 p2 p3 r1 r2");
    return lambda2(as_size(params[0]), as_size(params[1]), as_size(params[2]),
                   as_size(params[3]), as_size(params[4]));
  }
  throw InputError("unknown family '" + name + "' (expected lambda0, lambda1 or lambda2)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of gentle bound quivers"};
  app.name("gentleq");
  app.require_subcommand(1);

  std::string file, second_file, out_path, vertex, family_name;
  std::string sweep_family = "all";
  std::vector<std::string> path_arrows;
  std::vector<long> family_params;
  long pipeline_p = 0, pipeline_r = 0, shift_index = 0;
  bool pipeline_dump = false;
  std::uint64_t gen_seed = 0;
  long gen_size = 0, sweep_max = 0, sweep_jobs = 1;

  CLI::App* check = app.add_subcommand("check", "Read a .bq file and report its properties");
  check->add_option("file", file, "input .bq file")->required();

  CLI::App* phi = app.add_subcommand("phi", "Orbit invariant of a gentle bound quiver");
  phi->add_option("file", file, "input .bq file")->required();

  CLI::App* threads = app.add_subcommand("threads", "List permitted and forbidden threads");
  threads->add_option("file", file, "input .bq file")->required();

  CLI::App* reflect_cmd = app.add_subcommand("reflect", "Reflect at a vertex");
  reflect_cmd->add_option("file", file, "input .bq file")->required();
  reflect_cmd->add_option("--vertex", vertex, "vertex to reflect at")->required();
  reflect_cmd->add_option("-o,--out", out_path, "write the result here instead of stdout");

  CLI::App* coextend_cmd =
      app.add_subcommand("coextend", "Attach a fresh sink behind a maximal path");
  coextend_cmd->add_option("file", file, "input .bq file")->required();
  coextend_cmd->add_option("--path", path_arrows, "arrows of the path in composition order")
      ->required();
  coextend_cmd->add_option("-o,--out", out_path, "write the result here instead of stdout");

  CLI::App* shift = app.add_subcommand("shift", "Move a chain relation one place down");
  shift->add_option("file", file, "input .bq file")->required();
  shift->add_option("--index", shift_index, "chain position of the relation to move")
      ->required();
  shift->add_option("-o,--out", out_path, "write the result here instead of stdout");

  CLI::App* family = app.add_subcommand("family", "Emit a member of a two-cycle family");
  family->add_option("name", family_name, "lambda0, lambda1 or lambda2")->required();
  family->add_option("params", family_params, "family parameters")->required();
  family->add_option("-o,--out", out_path, "write the result here instead of stdout");

  CLI::App* iso = app.add_subcommand("iso", "Decide isomorphism of two bound quivers");
  iso->add_option("left", file, "first .bq file")->required();
  iso->add_option("right", second_file, "second .bq file")->required();

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "Replay the growth step lambda0(p, r) -> lambda0(p + 1, r)");
  pipeline->add_option("--p", pipeline_p, "chain length parameter")->required();
  pipeline->add_option("--r", pipeline_r, "relation count parameter")->required();
  pipeline->add_flag("--dump", pipeline_dump, "print every intermediate state");

  CLI::App* sweep = app.add_subcommand("sweep", "Family sweep report as JSON");
  sweep->add_option("--family", sweep_family, "all, lambda0, lambda1 or lambda2");
  sweep->add_option("--max", sweep_max, "largest vertex count to enumerate")->required();
  sweep->add_option("-j,--jobs", sweep_jobs, "worker thread count");
  sweep->add_option("-o,--out", out_path, "write the report here instead of stdout");

  CLI::App* gen = app.add_subcommand("gen", "Pseudorandom gentle bound quiver");
  gen->add_option("--seed", gen_seed, "random seed")->required();
  gen->add_option("--size", gen_size, "arrow count")->required();
  gen->add_option("-o,--out", out_path, "write the result here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file, out);
    if (phi->parsed()) return run_phi(file, out);
    if (threads->parsed()) return run_threads(file, out);
    if (reflect_cmd->parsed()) {
      emit(reflect(read_bq_file(file), vertex), out_path, out);
      return 0;
    }
    if (coextend_cmd->parsed()) {
      BoundQuiver bq = read_bq_file(file);
      Path sigma = make_path(bq.quiver(), path_arrows);
      emit(coextend(bq, sigma), out_path, out);
      return 0;
    }
    if (shift->parsed()) {
      if (shift_index < 2) throw InputError("index must be at least 2");
      emit(shift_relation(read_bq_file(file), static_cast<std::size_t>(shift_index)), out_path,
           out);
      return 0;
    }
    if (family->parsed()) {
      emit(make_family(family_name, family_params), out_path, out);
      return 0;
    }
    if (iso->parsed()) return run_iso(file, second_file, out);
    if (pipeline->parsed()) return run_pipeline(pipeline_p, pipeline_r, pipeline_dump, out);
    if (sweep->parsed()) {
      if (sweep_max < 2) throw InputError("--max must be at least 2");
      if (sweep_jobs < 1) throw InputError("--jobs must be at least 1");
      const SweepReport report = run_sweep(static_cast<std::size_t>(sweep_max),
                                           static_cast<std::size_t>(sweep_jobs), sweep_family);
      const std::string json = sweep_report_json(report);
      if (out_path.empty()) {
        out << json;
      } else {
        std::ofstream file_out(out_path);
        if (!file_out) throw InputError("cannot open '" + out_path + "' for writing");
        file_out << json;
      }
      if (!report.failures.empty()) {
        for (const std::string& failure : report.failures) {
          err << "failed: " << failure << "\n";
        }
        return 1;
      }
      return 0;
    }
    if (gen->parsed()) {
      if (gen_size < 1) throw InputError("size must be positive");
      emit(random_gentle(gen_seed, static_cast<std::size_t>(gen_size)), out_path, out);
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace gentle::cli
