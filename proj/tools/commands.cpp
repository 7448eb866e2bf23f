#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dcq/ball_clique.hpp"
#include "dcq/errors.hpp"
#include "dcq/generate.hpp"
#include "dcq/instance_io.hpp"
#include "dcq/kradii.hpp"
#include "dcq/oracle.hpp"
#include "dcq/range_tables.hpp"
#include "json.hpp"

namespace dcq::cli {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return std::max(ms, 1e-3);
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

template <typename T>
std::vector<T> parse_int_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(static_cast<T>(std::stoull(item)));
    } catch (const std::exception&) {
      throw ParseError("bad integer list entry '" + item + "'");
    }
  }
  return out;
}

/// Oracle mismatch between two algorithms under --algo both / --check.
class MismatchError : public Error {
 public:
  using Error::Error;
};

struct SolveFlags {
  std::string algo = "slab";
  bool check = false;
  bool json = false;
  std::size_t threads = 1;
  std::uint64_t budget = 100'000'000;
  bool budget_given = false;
};

template <typename Object>
std::vector<std::string> ids_of(const std::vector<Object>& objects, const std::vector<Index>& ids) {
  std::vector<std::string> out;
  for (Index i : ids) out.push_back(objects[i].id);
  return out;
}

template <typename Object, typename Pred>
void verify_clique(const std::vector<Object>& objects, const std::vector<Index>& ids,
                   Pred intersects) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!intersects(objects[ids[i]], objects[ids[j]])) {
        throw std::logic_error("emitted set is not a clique: " + objects[ids[i]].id + ", " +
                               objects[ids[j]].id);
      }
    }
  }
}

template <typename Object>
ordered_json guess_json(const Guess& guess, const std::vector<Object>& objects,
                        const std::vector<Scalar>& classes,
                        const std::vector<std::int64_t>* plane_labels) {
  ordered_json slots = ordered_json::array();
  for (const auto& slot : guess.slots) {
    if (slot.absent()) continue;
    ordered_json s;
    s["radius"] = to_string(classes[slot.key.radius_class]);
    if (plane_labels) s["plane"] = (*plane_labels)[slot.key.plane];
    s["a"] = objects[slot.pair->first].id;
    s["b"] = objects[slot.pair->second].id;
    slots.push_back(std::move(s));
  }
  return slots;
}

void emit(std::ostream& out, bool as_json, const ordered_json& doc) {
  if (as_json) {
    out << doc.dump(2) << '\n';
    return;
  }
  out << "size: " << doc["size"].get<std::size_t>() << '\n';
  out << "clique:";
  for (const auto& id : doc["clique"]) out << ' ' << id.get<std::string>();
  out << '\n';
  out << "algorithm: " << doc["algorithm"].get<std::string>() << '\n';
  out << "elapsed_ms: " << doc["elapsed_ms"].get<double>() << '\n';
  if (doc.contains("oracle")) {
    out << "oracle_size: " << doc["oracle"]["size"].get<std::size_t>() << '\n';
    out << "oracle_elapsed_ms: " << doc["oracle"]["elapsed_ms"].get<double>() << '\n';
  }
  out << "instance_digest: " << doc["instance_digest"].get<std::string>() << '\n';
}

// Runs the slab solver and/or the oracle per flags and assembles the result
// document. `slab` and `graph` are deferred so only the requested ones run.
template <typename Object, typename Pred>
ordered_json solve_and_report(const std::vector<Object>& objects, std::uint64_t digest,
                              const std::string& slab_name, const SolveFlags& flags,
                              const std::function<CliqueResult(const SearchOptions&)>& slab,
                              const std::function<IntersectionGraph()>& graph,
                              const std::vector<Scalar>& classes,
                              const std::vector<std::int64_t>* plane_labels, Pred intersects,
                              std::ostream& err) {
  const bool run_slab = flags.algo != "oracle";
  const bool run_oracle = flags.algo != "slab" || flags.check;

  ordered_json doc;
  std::optional<CliqueResult> slab_result;
  double slab_ms = 0;
  if (run_slab) {
    SearchOptions options;
    options.threads = flags.threads;
    options.budget = flags.budget;
    options.enforce_budget = flags.budget_given;
    options.warn = [&](std::string_view msg) { err << "warning: " << msg << '\n'; };
    const auto start = Clock::now();
    slab_result = slab(options);
    slab_ms = ms_since(start);
    verify_clique(objects, slab_result->ids, intersects);
  }

  std::optional<std::vector<Index>> oracle_ids;
  double oracle_ms = 0;
  if (run_oracle) {
    const auto start = Clock::now();
    oracle_ids = bron_kerbosch_max_clique(graph());
    oracle_ms = ms_since(start);
    verify_clique(objects, *oracle_ids, intersects);
  }

  const std::vector<Index>& ids = slab_result ? slab_result->ids : *oracle_ids;
  doc["size"] = ids.size();
  doc["clique"] = ids_of(objects, ids);
  doc["algorithm"] = slab_result ? slab_name : std::string("oracle-bron-kerbosch");
  doc["witness_guess"] =
      slab_result ? guess_json(slab_result->witness_guess, objects, classes, plane_labels)
                  : ordered_json(nullptr);
  doc["elapsed_ms"] = slab_result ? slab_ms : oracle_ms;
  doc["instance_digest"] = digest_hex(digest);
  if (slab_result && oracle_ids) {
    doc["oracle"] = {{"size", oracle_ids->size()},
                     {"clique", ids_of(objects, *oracle_ids)},
                     {"elapsed_ms", oracle_ms}};
    if (oracle_ids->size() != slab_result->ids.size()) {
      throw MismatchError("slab size " + std::to_string(slab_result->ids.size()) +
                          " != oracle size " + std::to_string(oracle_ids->size()));
    }
  }
  return doc;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& flags) {
  cmd->add_option("--algo", flags.algo, "slab, oracle or both")
      ->check(CLI::IsMember({"slab", "oracle", "both"}));
  cmd->add_flag("--check", flags.check, "Cross-check the slab result against the oracle");
  cmd->add_flag("--json", flags.json, "Emit the result as JSON");
  cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", flags.budget,
                  "Fail if the estimated guess count exceeds this (default: warn above 1e8)");
}

int cmd_clique(const std::string& file, SolveFlags flags, std::ostream& out, std::ostream& err) {
  const std::string text = read_text_file(file);
  if (instance_kind(text) != InstanceKind::Disks) {
    throw ValidationError("clique expects a disks instance; use 'dcq ball' for balls");
  }
  const DiskInstance inst = parse_disk_instance(text);
  const auto doc = solve_and_report(
      inst.disks, instance_digest(inst), "slab-kradii", flags,
      [&](const SearchOptions& o) { return max_clique_kradii(inst, o); },
      [&] { return intersection_graph(inst); }, radius_classes(inst.disks), nullptr,
      [](const Disk& a, const Disk& b) { return disks_intersect(a, b); }, err);
  emit(out, flags.json, doc);
  return kOk;
}

int cmd_ball(const std::string& file, const std::string& mode, SolveFlags flags,
             std::ostream& out, std::ostream& err) {
  const std::string text = read_text_file(file);
  if (instance_kind(text) != InstanceKind::Balls) {
    throw ValidationError("ball expects a balls instance");
  }
  const BallInstance inst = parse_ball_instance(text);
  const PlaneKind wanted = mode == "parallel" ? PlaneKind::ParallelXY : PlaneKind::PerpToXZ;
  if (inst.plane_kind != wanted) {
    throw ValidationError("--mode " + mode + " does not match the file's plane_kind");
  }
  const bool parallel = wanted == PlaneKind::ParallelXY;
  const auto doc = solve_and_report(
      inst.balls, instance_digest(inst), parallel ? "slab-balls-parallel" : "slab-balls-perp",
      flags,
      [&](const SearchOptions& o) {
        return parallel ? max_clique_balls_parallel(inst, o) : max_clique_balls_perp(inst, o);
      },
      [&] { return intersection_graph(inst); }, radius_classes(inst.balls), &inst.plane_labels,
      [](const Ball& a, const Ball& b) { return balls_intersect(a, b); }, err);
  emit(out, flags.json, doc);
  return kOk;
}

DiskInstance load_unit_disks(const std::string& file, bool perturb, std::ostream& err) {
  DiskInstance inst = parse_disk_instance(read_text_file(file));
  if (perturb) {
    bool changed = false;
    inst = perturb_to_general_position(inst, &changed);
    if (changed) {
      err << "warning: centers perturbed into general position; clique sizes can change "
             "only for exactly tangent pairs\n";
    }
  }
  return inst;
}

struct RangeBuildFlags {
  std::string file;
  std::string out;
  bool perturb = false;
  std::size_t max_n = kDefaultRangeMaxN;
  std::size_t threads = 1;
  bool verify = false;
};

int cmd_range_build(const RangeBuildFlags& flags, std::ostream& out, std::ostream& err) {
  const UnitInstance inst(load_unit_disks(flags.file, flags.perturb, err));
  RangeBuildOptions options;
  options.max_n = flags.max_n;
  options.threads = flags.threads;
  options.verify_incremental = flags.verify;
  const auto start = Clock::now();
  RangeTableFile file;
  file.s = build_s_table(inst, options);
  file.m = build_m_table(inst, file.s);
  const double elapsed = ms_since(start);
  file.x_order.assign(inst.x_order().begin(), inst.x_order().end());
  file.y_order.assign(inst.y_order().begin(), inst.y_order().end());
  file.digest = instance_digest(inst.disks());

  std::ofstream stream(flags.out, std::ios::binary);
  if (!stream) throw Error("cannot write " + flags.out);
  write_range_tables(stream, file);
  out << "n: " << inst.size() << '\n'
      << "tables: " << flags.out << '\n'
      << "elapsed_ms: " << elapsed << '\n'
      << "instance_digest: " << digest_hex(file.digest) << '\n';
  return kOk;
}

struct RangeQueryFlags {
  std::string tables;
  std::string instance;
  std::vector<std::string> rect;
  bool perturb = false;
  bool json = false;
};

int cmd_range_query(const RangeQueryFlags& flags, std::ostream& out, std::ostream& err) {
  const UnitInstance inst(load_unit_disks(flags.instance, flags.perturb, err));
  std::ifstream stream(flags.tables, std::ios::binary);
  if (!stream) throw Error("cannot open " + flags.tables);
  const auto start = Clock::now();
  const RangeTableFile file = read_range_tables(stream);
  const std::uint64_t digest = instance_digest(inst.disks());
  if (file.digest != digest) {
    throw ValidationError("table digest " + digest_hex(file.digest) +
                          " does not match instance digest " + digest_hex(digest));
  }
  if (!std::equal(file.x_order.begin(), file.x_order.end(), inst.x_order().begin(),
                  inst.x_order().end()) ||
      !std::equal(file.y_order.begin(), file.y_order.end(), inst.y_order().begin(),
                  inst.y_order().end())) {
    throw ValidationError("table sort orders do not match the instance");
  }
  const Rect rect{parse_scalar(flags.rect[0]), parse_scalar(flags.rect[1]),
                  parse_scalar(flags.rect[2]), parse_scalar(flags.rect[3])};
  const RangeAnswer answer = query_rect(inst, file.m, rect);
  verify_clique(inst.disks().disks, answer.ids,
                [](const Disk& a, const Disk& b) { return disks_intersect(a, b); });

  ordered_json doc;
  doc["size"] = answer.size;
  doc["clique"] = ids_of(inst.disks().disks, answer.ids);
  doc["algorithm"] = "range-table";
  doc["witness_guess"] = nullptr;
  doc["elapsed_ms"] = ms_since(start);
  doc["instance_digest"] = digest_hex(digest);
  doc["rect"] = flags.rect;
  emit(out, flags.json, doc);
  return kOk;
}

struct GenFlags {
  std::string kind = "disks";
  std::size_t n = 10;
  std::size_t k = 1;
  std::size_t planes = 2;
  std::uint64_t seed = 1;
  std::string extent;
  std::string radii = "1,2,3.5";
  unsigned decimals = 1;
  std::string out;
};

int cmd_gen(const GenFlags& flags, std::ostream& out) {
  std::string text;
  if (flags.kind == "disks" || flags.kind == "unit") {
    DiskGenOptions o;
    o.n = flags.n;
    o.k = flags.kind == "unit" ? 1 : flags.k;
    o.seed = flags.seed;
    if (!flags.extent.empty()) o.extent = parse_scalar(flags.extent);
    o.radii = parse_scalar_list(flags.radii);
    o.decimals = flags.decimals;
    o.general_position = flags.kind == "unit";
    text = serialize_instance(generate_disks(o));
  } else {
    BallGenOptions o;
    o.n = flags.n;
    o.k = flags.k;
    o.planes = flags.planes;
    o.seed = flags.seed;
    o.kind = flags.kind == "balls-parallel" ? PlaneKind::ParallelXY : PlaneKind::PerpToXZ;
    if (!flags.extent.empty()) o.extent = parse_scalar(flags.extent);
    o.radii = parse_scalar_list(flags.radii);
    o.decimals = flags.decimals;
    text = serialize_instance(generate_balls(o));
  }
  if (flags.out.empty()) {
    out << text;
  } else {
    write_text_file(flags.out, text);
  }
  return kOk;
}

struct BenchFlags {
  std::string suite = "kradii";
  std::string seeds = "1,2,3";
  std::string sizes = "6,8,10";
  std::size_t k = 1;
  std::size_t planes = 2;
  std::string algo = "slab";
  std::size_t threads = 1;
};

int cmd_bench(const BenchFlags& flags, std::ostream& out) {
  const auto seeds = parse_int_list<std::uint64_t>(flags.seeds);
  const auto sizes = parse_int_list<std::size_t>(flags.sizes);
  const bool run_slab = flags.algo != "oracle";
  const bool run_oracle = flags.algo != "slab";
  out << "n,k,r,algo,guesses,elapsed_ms,size\n";
  auto row = [&](std::size_t n, std::size_t k, std::size_t r, const std::string& algo,
                 std::uint64_t guesses, double ms, std::size_t size) {
    out << n << ',' << k << ',' << r << ',' << algo << ',' << guesses << ',' << ms << ',' << size
        << '\n';
  };

  SearchOptions search;
  search.threads = flags.threads;
  for (std::size_t n : sizes) {
    for (std::uint64_t seed : seeds) {
      if (flags.suite == "kradii") {
        DiskGenOptions o;
        o.n = n;
        o.k = flags.k;
        o.seed = seed;
        o.extent = Scalar(4);
        const DiskInstance inst = generate_disks(o);
        if (run_slab) {
          SearchStats stats;
          const auto start = Clock::now();
          const auto res = max_clique_kradii(inst, search, &stats);
          row(n, flags.k, 1, "slab", stats.guess_estimate, ms_since(start), res.size());
        }
        if (run_oracle) {
          const auto start = Clock::now();
          const auto ids = bron_kerbosch_max_clique(intersection_graph(inst));
          row(n, flags.k, 1, "oracle", 0, ms_since(start), ids.size());
        }
      } else if (flags.suite == "balls-parallel" || flags.suite == "balls-perp") {
        BallGenOptions o;
        o.n = n;
        o.k = flags.k;
        o.planes = flags.planes;
        o.seed = seed;
        o.kind = flags.suite == "balls-parallel" ? PlaneKind::ParallelXY : PlaneKind::PerpToXZ;
        const BallInstance inst = generate_balls(o);
        if (run_slab) {
          SearchStats stats;
          const auto start = Clock::now();
          const auto res = o.kind == PlaneKind::ParallelXY
                               ? max_clique_balls_parallel(inst, search, &stats)
                               : max_clique_balls_perp(inst, search, &stats);
          row(n, flags.k, flags.planes, "slab", stats.guess_estimate, ms_since(start),
              res.size());
        }
        if (run_oracle) {
          const auto start = Clock::now();
          const auto ids = bron_kerbosch_max_clique(intersection_graph(inst));
          row(n, flags.k, flags.planes, "oracle", 0, ms_since(start), ids.size());
        }
      } else if (flags.suite == "range") {
        DiskGenOptions o;
        o.n = n;
        o.seed = seed;
        o.extent = Scalar(4);
        o.decimals = 2;
        o.general_position = true;
        const UnitInstance inst(generate_disks(o));
        RangeBuildOptions options;
        options.threads = flags.threads;
        const auto start = Clock::now();
        const STable s = build_s_table(inst, options);
        const MTable m = build_m_table(inst, s);
        std::uint64_t slabs = 0;
        for (std::size_t l = 0; l < n; ++l) {
          for (std::size_t r = l; r < n; ++r) {
            slabs += inst.adjacent(inst.x_order()[l], inst.x_order()[r]) ? 1 : 0;
          }
        }
        row(n, 1, 1, "range-build", slabs, ms_since(start), m.sizes.at(0, n - 1, n - 1, 0));
      } else {
        throw ValidationError("unknown bench suite '" + flags.suite + "'");
      }
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum cliques in disk and ball intersection graphs"};
  app.require_subcommand(1);

  std::string clique_file;
  SolveFlags clique_flags;
  auto* clique = app.add_subcommand("clique", "Maximum clique of a disk instance (k radii)");
  clique->add_option("file", clique_file, "Instance JSON")->required();
  add_solve_flags(clique, clique_flags);

  std::string ball_file;
  std::string ball_mode;
  SolveFlags ball_flags;
  auto* ball = app.add_subcommand("ball", "Maximum clique of a ball instance on constrained planes");
  ball->add_option("file", ball_file, "Instance JSON")->required();
  ball->add_option("--mode", ball_mode, "parallel or perp")
      ->required()
      ->check(CLI::IsMember({"parallel", "perp"}));
  add_solve_flags(ball, ball_flags);

  auto* range = app.add_subcommand("range", "Rectangle range tables over unit disks");
  range->require_subcommand(1);
  RangeBuildFlags build_flags;
  auto* build = range->add_subcommand("build", "Precompute S and M tables into a DCRQ1 file");
  build->add_option("file", build_flags.file, "Unit-disk instance JSON")->required();
  build->add_option("--out", build_flags.out, "Output table file")->required();
  build->add_flag("--perturb", build_flags.perturb, "Nudge centers into general position");
  build->add_option("--max-n", build_flags.max_n, "Refuse instances larger than this");
  build->add_option("--threads", build_flags.threads, "Worker threads")->check(CLI::PositiveNumber);
  build->add_flag("--verify", build_flags.verify, "Check every sweep step against a rebuild");

  RangeQueryFlags query_flags;
  auto* query = range->add_subcommand("query", "Maximum clique with centers in a rectangle");
  query->add_option("--tables", query_flags.tables, "DCRQ1 table file")->required();
  query->add_option("--instance", query_flags.instance, "Instance the tables were built from")
      ->required();
  query->add_option("--rect", query_flags.rect, "x1 y1 x2 y2")->required()->expected(4);
  query->add_flag("--perturb", query_flags.perturb, "Apply the same nudge as the build");
  query->add_flag("--json", query_flags.json, "Emit the result as JSON");

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--kind", gen_flags.kind, "disks, unit, balls-parallel or balls-perp")
      ->check(CLI::IsMember({"disks", "unit", "balls-parallel", "balls-perp"}));
  gen->add_option("--n", gen_flags.n, "Number of objects");
  gen->add_option("--k", gen_flags.k, "Number of radius classes");
  gen->add_option("--planes", gen_flags.planes, "Number of planes (balls)");
  gen->add_option("--seed", gen_flags.seed, "RNG seed");
  gen->add_option("--extent", gen_flags.extent, "Coordinate range [0, extent]");
  gen->add_option("--radii", gen_flags.radii, "Comma-separated radii");
  gen->add_option("--decimals", gen_flags.decimals, "Decimal places of coordinates");
  gen->add_option("--out", gen_flags.out, "Output file (default: stdout)");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Timing sweep as CSV");
  bench->add_option("--suite", bench_flags.suite, "kradii, balls-parallel, balls-perp or range")
      ->check(CLI::IsMember({"kradii", "balls-parallel", "balls-perp", "range"}));
  bench->add_option("--seeds", bench_flags.seeds, "Comma-separated seeds");
  bench->add_option("--sizes", bench_flags.sizes, "Comma-separated instance sizes");
  bench->add_option("--k", bench_flags.k, "Radius classes");
  bench->add_option("--planes", bench_flags.planes, "Planes (ball suites)");
  bench->add_option("--algo", bench_flags.algo, "slab, oracle or both")
      ->check(CLI::IsMember({"slab", "oracle", "both"}));
  bench->add_option("--threads", bench_flags.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  clique_flags.budget_given = clique->count("--budget") > 0;
  ball_flags.budget_given = ball->count("--budget") > 0;

  try {
    if (*clique) return cmd_clique(clique_file, clique_flags, out, err);
    if (*ball) return cmd_ball(ball_file, ball_mode, ball_flags, out, err);
    if (*build) return cmd_range_build(build_flags, out, err);
    if (*query) return cmd_range_query(query_flags, out, err);
    if (*gen) return cmd_gen(gen_flags, out);
    if (*bench) return cmd_bench(bench_flags, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const PreconditionError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const MismatchError& e) {
    err << "oracle mismatch: " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsage;
}

}  // namespace dcq::cli
