// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every run writes exactly one JSON object to `out`
// (gen writes the instance file instead) and a short human summary to `err`.
//
// Exit codes: 0 success, 1 usage error, 2 bound violation or infeasible
// coloring, 3 parse/validation/input error, 4 internal invariant violation.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "mchroma/mchroma.hpp"

namespace mchroma::cli {

using nlohmann::json;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBound = 2,
  kExitValidation = 3,
  kExitInvariant = 4,
};

struct Options {
  std::string command;
  std::string file;
  std::optional<int> alpha;
  std::string selector = "shortest";
  std::uint64_t seed = 1;
  std::size_t max_n = kDefaultBruteBound;
  bool json_only = false;
  bool timing = false;
  // gen / bench
  std::string family = "graphic";
  GenParams gen;
  int count = 20;
  int threads = 1;
};

// RunReport: colors used, palette bound, per-matroid feasibility, oracle
// calls, iterations. Wall time is only emitted with --timing so reports stay
// byte-identical across runs.
struct RunReport {
  json body = json::object();
  int exit_code = kExitOk;
  std::string summary;
};

namespace detail {

inline json verdicts_json(const std::vector<MatroidVerdict>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    arr.push_back({{"feasible", v.feasible}, {"dependent_classes", v.dependent_classes}});
  }
  return arr;
}

inline std::uint64_t total_calls(const std::vector<Matroid>& ms) {
  std::uint64_t total = 0;
  for (const auto& m : ms) total += m.oracle_calls();
  return total;
}

inline void reset_calls(const std::vector<Matroid>& ms) {
  for (const auto& m : ms) m.reset_oracle_calls();
}

inline SelectorKind parse_selector(const std::string& s) {
  if (s == "shortest") return SelectorKind::kShortest;
  if (s == "dfs-chordless") return SelectorKind::kDfsChordless;
  throw InputError("unknown selector '" + s + "' (expected shortest or dfs-chordless)");
}

inline void require_matroids(const InstanceFile& inst, std::size_t at_least) {
  if (inst.matroids.size() < at_least) {
    throw ValidationError("instance needs at least " + std::to_string(at_least) + " matroid(s)");
  }
}

inline std::vector<PartitionStructure> trailing_partitions(const InstanceFile& inst) {
  std::vector<PartitionStructure> out;
  for (std::size_t i = 1; i < inst.matroids.size(); ++i) {
    const auto* p = inst.matroids[i].get_if<PartitionStructure>();
    if (!p) {
      throw ValidationError("$.matroids[" + std::to_string(i) + "]: must be a partition matroid, got " +
                            matroid_kind_name(inst.matroids[i].kind()));
    }
    out.push_back(*p);
  }
  return out;
}

inline int chi_of(const Matroid& m) {
  if (const auto* p = m.get_if<PartitionStructure>()) {
    return m.ground_size() == 0 ? 0 : partition_chromatic(*p);
  }
  return chromatic_number(m);
}

inline RunReport run_color(const Options& o) {
  auto inst = load_instance(o.file);
  require_matroids(inst, 1);
  const Matroid& m = inst.matroids.front();
  const auto kind = parse_selector(o.selector);
  RunReport r;
  int alpha = o.alpha ? *o.alpha : chromatic_number(m);
  m.reset_oracle_calls();
  int iterations = 0;
  std::optional<Coloring> c;
  if (inst.n == 0) {
    c = Coloring(0, alpha);
  } else {
    c = color_single(m, alpha, make_selector(kind), &iterations);
  }
  r.body["alpha"] = alpha;
  r.body["selector"] = selector_name(kind);
  r.body["palette_bound"] = alpha;
  r.body["iterations"] = iterations;
  r.body["oracle_calls"] = m.oracle_calls();
  if (!c) {
    r.body["status"] = "uncolorable";
    r.exit_code = kExitBound;
    r.summary = "no " + std::to_string(alpha) + "-coloring exists (no source-sink path)";
    return r;
  }
  auto verdict = verify_against(m, *c);
  r.body["status"] = verdict.feasible ? "ok" : "infeasible";
  r.body["coloring"] = c->assignment();
  r.body["colors_used"] = c->colors_used();
  r.body["feasible"] = verdicts_json({verdict});
  if (!verdict.feasible) r.exit_code = kExitInvariant;
  r.summary = "colored " + std::to_string(inst.n) + " elements with " +
              std::to_string(c->colors_used()) + " colors (alpha " + std::to_string(alpha) + ")";
  return r;
}

inline RunReport run_chi(const Options& o) {
  auto inst = load_instance(o.file);
  require_matroids(inst, 1);
  RunReport r;
  json per = json::array();
  for (const auto& m : inst.matroids) per.push_back(chi_of(m));
  r.body["status"] = "ok";
  r.body["chi"] = per.front();
  r.body["per_matroid"] = per;
  if (inst.n <= o.max_n) {
    r.body["chi_intersection"] = brute_chromatic(inst.matroids, o.max_n);
  }
  r.summary = "chi(M1) = " + per.front().dump();
  return r;
}

inline RunReport run_intersect(const Options& o) {
  auto inst = load_instance(o.file);
  require_matroids(inst, 1);
  auto partitions = trailing_partitions(inst);
  IntersectionInstance<Matroid> problem{inst.matroids.front(), partitions, o.alpha};
  IntersectionOptions opts;
  opts.initial = inst.coloring;
  reset_calls(inst.matroids);
  auto run = color_intersection(problem, opts);
  const Matroid& m1 = problem.m1;

  RunReport r;
  std::vector<MatroidVerdict> verdicts{verify_against(m1, run.coloring)};
  for (const auto& p : partitions) verdicts.push_back(verify_against(p, run.coloring));
  bool feasible = std::all_of(verdicts.begin(), verdicts.end(), [](auto& v) { return v.feasible; });
  const int bound = run.palette();
  const int used = run.coloring.colors_used();
  json chis = json::array({run.alpha});
  for (const auto& p : partitions) chis.push_back(partition_chromatic(p));

  r.body["alpha"] = run.alpha;
  r.body["surplus"] = run.surplus;
  r.body["chi"] = chis;
  r.body["palette_bound"] = bound;
  r.body["colors_used"] = used;
  r.body["coloring"] = run.coloring.assignment();
  r.body["feasible"] = verdicts_json(verdicts);
  r.body["iterations"] = run.iterations;
  r.body["oracle_calls"] = m1.oracle_calls();
  const bool ok = feasible && run.coloring.is_total() && used <= bound;
  r.body["status"] = ok ? "ok" : "bound-violation";
  if (!ok) r.exit_code = kExitBound;
  r.summary = "intersection colored with " + std::to_string(used) + " colors, bound " +
              std::to_string(bound) + (feasible ? ", feasible" : ", INFEASIBLE");
  return r;
}

inline RunReport run_rainbow(const Options& o) {
  auto inst = load_instance(o.file);
  require_matroids(inst, 1);
  if (!inst.blocks) throw ValidationError("$.rainbow: rainbow subcommand needs a blocks payload");
  RainbowInstance<Matroid> problem{inst.matroids.front(), *inst.blocks};
  problem.matroid.reset_oracle_calls();
  auto cover = rainbow_cover(problem);

  const std::size_t n = inst.n;
  ElementSet covered(n);
  ElementSet wanted(n);
  for (const auto& b : *inst.blocks) {
    for (Element e : b) wanted.insert(e);
  }
  bool rainbow = true;
  bool independent = true;
  json sets = json::array();
  for (const auto& s : cover.sets) {
    covered |= s;
    sets.push_back(s.to_vector());
    independent = independent && problem.matroid.is_independent(s);
    for (const auto& b : *inst.blocks) {
      int hits = 0;
      for (Element e : b) hits += s.contains(e);
      rainbow = rainbow && hits <= 1;
    }
  }
  const bool covering = covered == wanted;
  const int bound = cover.m + cover.r - 1;
  const bool within = cover.h() <= std::max(bound, 0) || cover.h() == 0;

  RunReport r;
  r.body["m"] = cover.m;
  r.body["r"] = cover.r;
  r.body["h"] = cover.h();
  r.body["bound"] = bound;
  r.body["sets"] = sets;
  r.body["checks"] = {{"covering", covering}, {"rainbow", rainbow}, {"independent", independent},
                      {"within_bound", within}};
  r.body["iterations"] = cover.run.iterations;
  r.body["oracle_calls"] = problem.matroid.oracle_calls();
  if (n <= o.max_n && !wanted.empty()) {
    std::vector<Element> elems = wanted.to_vector();
    Restriction<Matroid> sub(problem.matroid, elems);
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<Element>> parts;
    for (const auto& b : *inst.blocks) {
      std::vector<Element> p;
      for (Element e : b) p.push_back(local[e]);
      parts.push_back(p);
    }
    PartitionStructure blocks(elems.size(), parts);
    std::vector<IndependenceTest> tests{
        [&](const ElementSet& s) { return sub.is_independent(s); },
        [&](const ElementSet& s) { return blocks.is_independent(s); }};
    r.body["optimum"] = brute_chromatic(elems.size(), tests, o.max_n);
  }
  const bool ok = covering && rainbow && independent && within;
  r.body["status"] = ok ? "ok" : "bound-violation";
  if (!ok) r.exit_code = kExitBound;
  r.summary = "rainbow cover with " + std::to_string(cover.h()) + " sets, bound m+r-1 = " +
              std::to_string(bound);
  return r;
}

inline RunReport run_strong(const Options& o) {
  auto inst = load_instance(o.file);
  require_matroids(inst, 1);
  if (!inst.graph) throw ValidationError("$.graph: strong subcommand needs a graph payload");
  const Matroid& m = inst.matroids.front();
  const int chi_m = chromatic_number(m);
  m.reset_oracle_calls();
  auto res = strong_color(*inst.graph, m, o.alpha ? o.alpha : std::optional<int>(chi_m));
  StableSetOracle stable(*inst.graph);
  const auto graph_verdict = verify_against(stable, res.coloring);
  const auto matroid_verdict = verify_against(m, res.coloring);
  const int delta = inst.graph->max_degree();
  const int alpha = res.run.alpha;
  const int bound = delta + alpha + 1;
  const int used = res.coloring.colors_used();

  RunReport r;
  r.body["max_degree"] = delta;
  r.body["matchings"] = res.matchings.size();
  r.body["chi_m"] = chi_m;
  r.body["alpha"] = alpha;
  r.body["bound"] = bound;
  r.body["palette"] = res.run.palette();
  r.body["colors_used"] = used;
  r.body["coloring"] = res.coloring.assignment();
  r.body["stable"] = graph_verdict.feasible;
  r.body["feasible"] = verdicts_json({matroid_verdict});
  r.body["iterations"] = res.run.iterations;
  r.body["oracle_calls"] = m.oracle_calls();
  const bool ok = graph_verdict.feasible && matroid_verdict.feasible &&
                  res.coloring.is_total() && used <= bound;
  r.body["status"] = ok ? "ok" : "bound-violation";
  if (!ok) r.exit_code = kExitBound;
  r.summary = "strong coloring with " + std::to_string(used) + " colors, bound Delta+chi+1 = " +
              std::to_string(bound);
  return r;
}

inline RunReport run_verify(const Options& o) {
  LoadOptions lo;
  lo.reject_loops = false;
  auto inst = load_instance(o.file, lo);
  if (!inst.coloring) throw ValidationError("$.coloring: verify needs a coloring");
  auto report = verify_coloring(inst.matroids, *inst.coloring);
  RunReport r;
  r.body["feasible"] = verdicts_json(report.per_matroid);
  r.body["uncolored"] = report.uncolored.to_vector();
  r.body["colors_used"] = inst.coloring->colors_used();
  r.body["status"] = report.feasible() ? "ok" : "infeasible";
  if (!report.feasible()) {
    r.exit_code = kExitBound;
    for (std::size_t i = 0; i < report.per_matroid.size(); ++i) {
      if (!report.per_matroid[i].feasible) {
        const int cls = report.per_matroid[i].dependent_classes.front();
        r.summary = "color class " + std::to_string(cls) + " " +
                    inst.coloring->color_class(cls).to_string() + " is dependent in matroid " +
                    std::to_string(i + 1);
        break;
      }
    }
  } else {
    r.summary = "coloring feasible in all " + std::to_string(inst.matroids.size()) +
                " matroid(s), " + std::to_string(report.uncolored.size()) + " uncolored";
  }
  return r;
}

inline RunReport run_axioms(const Options& o) {
  LoadOptions lo;
  lo.reject_loops = false;
  auto inst = load_instance(o.file, lo);
  RunReport r;
  json results = json::array();
  bool all_ok = true;
  for (const auto& m : inst.matroids) {
    auto rep = axiom_check(m, o.max_n > kDefaultAxiomBound ? o.max_n : kDefaultAxiomBound);
    json item{{"ok", rep.ok}, {"kind", matroid_kind_name(m.kind())}};
    if (!rep.ok) {
      item["axiom"] = rep.axiom;
      item["detail"] = rep.detail;
      json w = json::array();
      for (const auto& s : rep.witness) w.push_back(s.to_vector());
      item["witness"] = w;
      if (all_ok) r.summary = "matroid " + std::to_string(results.size() + 1) + ": " + rep.detail;
      all_ok = false;
    }
    results.push_back(item);
  }
  r.body["results"] = results;
  r.body["status"] = all_ok ? "ok" : "not-a-matroid";
  if (!all_ok) r.exit_code = kExitValidation;
  if (all_ok) r.summary = "all " + std::to_string(results.size()) + " matroid(s) satisfy the axioms";
  return r;
}

inline json bench_row(const Options& o, std::uint64_t seed) {
  GenParams params = o.gen;
  const Family fam = parse_family(o.family);
  auto inst = generate(seed, fam, params);
  json row{{"seed", seed}, {"n", inst.n}};
  auto partitions = trailing_partitions(inst);
  IntersectionInstance<Matroid> problem{inst.matroids.front(), partitions, std::nullopt};
  auto run = color_intersection(problem);
  std::vector<MatroidVerdict> verdicts{verify_against(problem.m1, run.coloring)};
  for (const auto& p : partitions) verdicts.push_back(verify_against(p, run.coloring));
  const bool feasible = std::all_of(verdicts.begin(), verdicts.end(), [](auto& v) { return v.feasible; });
  row["k"] = inst.matroids.size();
  row["alpha"] = run.alpha;
  row["surplus"] = run.surplus;
  row["bound"] = run.palette();
  row["colors_used"] = run.coloring.colors_used();
  row["feasible"] = feasible && run.coloring.is_total();
  row["iterations"] = run.iterations;
  row["oracle_calls"] = problem.m1.oracle_calls();
  if (fam == Family::kPartition) {
    row["greedy_colors"] = greedy_baseline(problem).colors_used();
  }
  if (inst.n <= o.max_n) row["optimum"] = brute_chromatic(inst.matroids, o.max_n);
  return row;
}

inline RunReport run_bench(const Options& o) {
  if (o.count < 0 || o.threads < 1) throw InputError("bench needs count >= 0 and threads >= 1");
  const Family fam = parse_family(o.family);
  if (fam == Family::kRainbow || fam == Family::kStrong) {
    throw InputError("bench supports the intersection families only");
  }
  std::vector<json> rows(static_cast<std::size_t>(o.count));
  std::vector<std::string> errors(static_cast<std::size_t>(o.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < o.count; i = next++) {
      try {
        rows[static_cast<std::size_t>(i)] = bench_row(o, o.seed + static_cast<std::uint64_t>(i));
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(i)] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < o.threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (!e.empty()) throw InvariantViolation("bench instance failed: " + e);
  }
  RunReport r;
  int violations = 0;
  for (const auto& row : rows) {
    if (!row["feasible"].get<bool>() || row["colors_used"].get<int>() > row["bound"].get<int>()) {
      ++violations;
    }
  }
  r.body["family"] = o.family;
  r.body["count"] = o.count;
  r.body["rows"] = rows;
  r.body["violations"] = violations;
  r.body["status"] = violations == 0 ? "ok" : "bound-violation";
  if (violations) r.exit_code = kExitBound;
  r.summary = std::to_string(o.count) + " instances, " + std::to_string(violations) + " violations";
  return r;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid intersection coloring toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "Instance file (JSON)")->required();
    sub->add_option("--alpha", o.alpha, "Override chi(M1)");
    sub->add_option("--selector", o.selector, "Path selector: shortest | dfs-chordless");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--max-n", o.max_n, "Ground-set bound for brute-force checks");
    sub->add_flag("--json", o.json_only, "Suppress the human summary");
    sub->add_flag("--timing", o.timing, "Include wall time in the report");
  };
  auto add_gen = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "partition|laminar|graphic|transversal|uniform|rainbow|strong");
    sub->add_option("--n", o.gen.n, "Ground set size");
    sub->add_option("--k", o.gen.k, "Number of partition matroids besides M1");
    sub->add_option("--vertices", o.gen.vertices, "Vertex count (graphic, rainbow)");
    sub->add_option("--max-degree", o.gen.max_degree, "Degree cap (strong)");
    sub->add_option("--blocks", o.gen.blocks, "Block count (rainbow); 0 = rank");
    sub->add_option("--extra", o.gen.extra, "Edges outside every block (rainbow)");
  };

  for (const char* name : {"color", "chi", "intersect", "rainbow", "strong", "verify", "axioms"}) {
    add_common(app.add_subcommand(name, std::string("Run ") + name), true);
  }
  auto* gen_cmd = app.add_subcommand("gen", "Emit a seeded random instance");
  add_common(gen_cmd, false);
  add_gen(gen_cmd);
  auto* bench_cmd = app.add_subcommand("bench", "Run seeded instances and tabulate");
  add_common(bench_cmd, false);
  add_gen(bench_cmd);
  bench_cmd->add_option("--count", o.count, "Number of instances");
  bench_cmd->add_option("--threads", o.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  try {
    if (o.command == "gen") {
      out << save_instance(generate(o.seed, parse_family(o.family), o.gen));
      if (!o.json_only) err << "generated " << o.family << " instance (seed " << o.seed << ")\n";
      return kExitOk;
    }
    if (o.command == "color") r = detail::run_color(o);
    else if (o.command == "chi") r = detail::run_chi(o);
    else if (o.command == "intersect") r = detail::run_intersect(o);
    else if (o.command == "rainbow") r = detail::run_rainbow(o);
    else if (o.command == "strong") r = detail::run_strong(o);
    else if (o.command == "verify") r = detail::run_verify(o);
    else if (o.command == "axioms") r = detail::run_axioms(o);
    else if (o.command == "bench") r = detail::run_bench(o);
  } catch (const Error& e) {
    r = RunReport{};
    r.exit_code = e.code() == ErrorCode::kInvariantViolation ? kExitInvariant : kExitValidation;
    r.body["status"] = "error";
    r.body["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    r.summary = std::string("error: ") + e.what();
  }
  r.body["command"] = o.command;
  if (o.timing) {
    r.body["wall_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start).count();
  }
  out << r.body.dump() << "\n";
  if (!o.json_only) err << o.command << ": " << r.summary << "\n";
  return r.exit_code;
}

}  // namespace mchroma::cli
