#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kpvc/kpvc.hpp"
#include "kpvc/report_io.hpp"

namespace kpvc::cli {

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kCap = 3 };

struct InputOptions {
  std::string path;
  std::string family;
  bool graph6 = false;
  std::uint64_t seed = 1;
};

inline void add_input(CLI::App* cmd, InputOptions& in) {
  auto* file = cmd->add_option("-i,--input", in.path, "edge-list file (graph6 with --graph6 or a .g6 suffix)");
  auto* fam = cmd->add_option("-f,--family", in.family, "generated family, e.g. petersen or gnm(10,20)");
  file->excludes(fam);
  cmd->add_flag("--graph6", in.graph6, "read the input file as graph6");
  cmd->add_option("--seed", in.seed, "seed for random families and algorithms");
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw invalid_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Graph load_graph(const InputOptions& in) {
  if (in.path.empty() == in.family.empty()) throw invalid_input("exactly one of --input and --family is required");
  if (!in.family.empty()) return generate_family(parse_family(in.family, in.seed));
  const std::string text = read_file(in.path);
  if (in.graph6 || in.path.ends_with(".g6")) return parse_graph6(text);
  return parse_graph(text);
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-', 1);
    try {
      if (dash != std::string::npos) {
        int lo = std::stoi(item.substr(0, dash)), hi = std::stoi(item.substr(dash + 1));
        if (hi < lo) throw invalid_input("empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::logic_error&) {
      throw invalid_input("bad integer list '" + text + "'");
    }
  }
  return out;
}

inline std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

inline void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw invalid_input("unsupported --format '" + fmt + "'");
}

/// Runs one command line; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-path vertex cover toolkit: exact values, constructive covers, bounds"};
  app.require_subcommand(1);

  InputOptions in;
  int k = 3;
  std::string format = "text";
  SolverCaps caps;

  auto* solve = app.add_subcommand("solve", "exact psi_k with an optimal cover");
  add_input(solve, in);
  solve->add_option("-k", k, "path order")->check(CLI::Range(2, 64));
  solve->add_option("--format", format, "text | json");
  solve->add_option("--cap", caps.psi, "vertex cap for the exact solver");

  std::string method = "auto";
  std::string base = "4nm9_psi3";
  std::string xs_text = "5";
  int samples = 200;
  auto* cover = app.add_subcommand("cover", "run a constructive cover algorithm");
  add_input(cover, in);
  cover->add_option("-k", k, "path order")->check(CLI::Range(2, 64));
  cover->add_option("-m,--method", method, "algorithm id or auto");
  cover->add_option("--base", base, "pair_peel base algorithm");
  cover->add_option("--xs", xs_text, "pair_peel thresholds, e.g. 5,6,7");
  cover->add_option("--samples", samples, "random_order sample budget");
  cover->add_option("--format", format, "text | json");
  bool list_methods = false;
  cover->add_flag("--list", list_methods, "list algorithm ids and exit");

  bool planar = false, triangle_free = false, only_applicable = false;
  auto* bounds = app.add_subcommand("bounds", "evaluate every closed-form bound");
  add_input(bounds, in);
  bounds->add_option("-k", k, "path order")->check(CLI::Range(2, 64));
  bounds->add_flag("--planar", planar, "caller asserts the graph is planar");
  bounds->add_flag("--triangle-free", triangle_free, "caller asserts the graph is triangle-free");
  bounds->add_flag("--applicable", only_applicable, "only print applicable records");
  bounds->add_option("--format", format, "text | json | csv");

  std::string pair_base = "4/9,1/9";
  std::string pair_xs = "5,6,7,8,9,10,11,12,13,14";
  auto* pairs = app.add_subcommand("pairs", "feasible-pair recursion");
  pairs->add_option("-k", k, "path order")->check(CLI::Range(2, 64));
  pairs->add_option("--base", pair_base, "starting pair a,b");
  pairs->add_option("--xs", pair_xs, "thresholds, applied in order");
  pairs->add_option("--format", format, "text | json");

  std::string output;
  auto* generate = app.add_subcommand("generate", "write a generated graph");
  generate->add_option("-f,--family", in.family, "family spec")->required();
  generate->add_option("--seed", in.seed, "seed for random families");
  generate->add_option("-o,--output", output, "output file (default stdout)");
  generate->add_option("--format", format, "el | graph6");

  std::string exhaustive = "1-5";
  std::vector<std::string> sample_specs;
  std::string ks_text = "3";
  int jobs = 1;
  bool sweep = false, no_algorithms = false, summary_only = false;
  auto* verify = app.add_subcommand("verify", "check every bound and algorithm against exact values");
  verify->add_option("--exhaustive", exhaustive, "orders for labeled enumeration, e.g. 1-6 (empty for none)");
  verify->add_option("--sample", sample_specs, "family:count samples, e.g. gnm(8):100");
  verify->add_option("--k", ks_text, "k values, e.g. 3,4,5");
  verify->add_option("--seed", in.seed, "base seed for samples and algorithms");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--sweep", sweep, "the full sweep: n <= 6 exhaustive, 500 samples per n = 7..10, k = 3,4,5");
  verify->add_flag("--no-algorithms", no_algorithms, "skip cover algorithms");
  verify->add_flag("--summary", summary_only, "omit per-graph rows");
  verify->add_option("--format", format, "text | json | csv");

  std::string table_k = "2,3,4,5,6", table_omega = "2,3,4,5";
  auto* table = app.add_subcommand("table", "chordal bound comparison by k and omega");
  table->add_option("--k", table_k, "k values");
  table->add_option("--omega", table_omega, "omega values");
  table->add_option("--format", format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (solve->parsed()) {
      check_format(format, {"text", "json"});
      Graph g = load_graph(in);
      auto cert = psi_exact(g, k, caps);
      if (format == "json") {
        out << to_json(cert).dump(2) << "\n";
      } else {
        out << "psi=" << cert.size() << "\n";
        out << "cover=" << join(cert.cover) << "\n";
        out << "optimal=" << (cert.optimal ? "true" : "false") << "\n";
        out << "residual_longest_path=" << cert.residual_longest_path << "\n";
      }
      return kOk;
    }

    if (cover->parsed()) {
      if (list_methods) {
        for (const auto& a : cover_algorithms()) out << a.id << "  " << a.summary << "\n";
        return kOk;
      }
      check_format(format, {"text", "json"});
      Graph g = load_graph(in);
      CoverOptions opt;
      opt.seed = in.seed;
      opt.max_samples = samples;
      opt.pair_base = base;
      opt.xs = parse_int_list(xs_text);
      auto r = run_cover(g, k, method, opt);
      if (auto check = check_cover(g, k, r.cover); !check.valid) {
        err << "error: " << r.algorithm << " returned an invalid cover\n";
        return kViolation;
      }
      if (format == "json") {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << "algorithm=" << r.algorithm << "\n";
        out << "size=" << r.size() << "\n";
        out << "cover=" << join(r.cover) << "\n";
        out << "guarantee=" << r.guarantee_name << " = " << to_string(r.guarantee_value)
            << (r.guarantee_certified ? " (certified)" : " (not certified)") << "\n";
        out << "guarantee_met=" << (r.guarantee_met() ? "true" : "false") << "\n";
      }
      return kOk;
    }

    if (bounds->parsed()) {
      check_format(format, {"text", "json", "csv"});
      Graph g = load_graph(in);
      auto records = evaluate_bounds(g, k, BoundFlags{planar, triangle_free}, caps);
      if (only_applicable) std::erase_if(records, [](const BoundRecord& r) { return !r.applicable; });
      if (format == "json") {
        out << to_json(records).dump(2) << "\n";
      } else if (format == "csv") {
        out << to_csv(records);
      } else {
        for (const auto& r : records) {
          out << to_string(r.kind) << " " << r.name << " ";
          out << (r.applicable ? to_string(*r.value) : std::string("n/a"));
          if (!r.reason.empty()) out << "  [" << r.reason << "]";
          out << "\n";
        }
      }
      return kOk;
    }

    if (pairs->parsed()) {
      check_format(format, {"text", "json"});
      auto comma = pair_base.find(',');
      if (comma == std::string::npos) throw invalid_input("--base expects a,b");
      auto start = make_pair(k, parse_rational(pair_base.substr(0, comma)), parse_rational(pair_base.substr(comma + 1)));
      auto chain = pair_chain(start, parse_int_list(pair_xs));
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& p : chain) arr.push_back(to_json(p));
        out << arr.dump(2) << "\n";
      } else {
        out << "x a b\n";
        out << "- " << to_fraction_string(chain.front().a) << " " << to_fraction_string(chain.front().b) << "\n";
        for (std::size_t i = 1; i < chain.size(); ++i)
          out << chain[i].provenance.back().x << " " << to_fraction_string(chain[i].a) << " "
              << to_fraction_string(chain[i].b) << "\n";
      }
      return kOk;
    }

    if (generate->parsed()) {
      if (format == "text") format = "el";
      check_format(format, {"el", "graph6"});
      Graph g = generate_family(parse_family(in.family, in.seed));
      const std::string text = format == "graph6" ? write_graph6(g) + "\n" : write_graph(g);
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw invalid_input("cannot write '" + output + "'");
        f << text;
      }
      return kOk;
    }

    if (verify->parsed()) {
      check_format(format, {"text", "json", "csv"});
      CorpusSpec spec;
      if (sweep) {
        spec = default_sweep_spec();
      } else {
        spec.exhaustive_orders = parse_int_list(exhaustive);
        for (const auto& s : sample_specs) {
          auto colon = s.rfind(':');
          if (colon == std::string::npos) throw invalid_input("--sample expects family:count");
          FamilySample fs;
          fs.family = s.substr(0, colon);
          fs.count = parse_int_list(s.substr(colon + 1)).at(0);
          fs.seed = in.seed;
          spec.samples.push_back(fs);
        }
        spec.ks = parse_int_list(ks_text);
      }
      spec.algorithm_seed = in.seed;
      spec.jobs = jobs;
      spec.run_algorithms = !no_algorithms;
      spec.keep_rows = !summary_only && format != "text";
      auto rep = verify_all(spec);
      if (format == "json") {
        out << to_json(rep).dump(2) << "\n";
      } else if (format == "csv") {
        out << to_csv(rep);
      } else {
        out << "graphs=" << rep.totals.graphs << " instances=" << rep.totals.instances
            << " bound_checks=" << rep.totals.bound_checks << " algorithm_runs=" << rep.totals.algorithm_runs
            << " violations=" << rep.violations.size() << "\n";
        for (const auto& [name, c] : rep.tight_counts) out << "tight " << name << " " << c << "\n";
        for (const auto& v : rep.violations)
          out << "violation " << v.graph_id << " k=" << v.k << " " << v.check << ": " << v.detail << "\n";
      }
      return rep.ok() ? kOk : kViolation;
    }

    if (table->parsed()) {
      check_format(format, {"text", "json"});
      auto cells = table_chordal(parse_int_list(table_k), parse_int_list(table_omega));
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& row : cells)
          for (const auto& c : row)
            arr.push_back({{"k", c.k},
                           {"omega", c.omega},
                           {"chi_bound", to_fraction_string(c.by_chi)},
                           {"omega_bound", to_fraction_string(c.by_omega)},
                           {"best", to_string(c.best)}});
        out << arr.dump(2) << "\n";
      } else {
        out << "k omega chi_bound omega_bound best\n";
        for (const auto& row : cells)
          for (const auto& c : row)
            out << c.k << " " << c.omega << " " << to_fraction_string(c.by_chi) << " " << to_fraction_string(c.by_omega)
                << " " << to_string(c.best) << "\n";
      }
      return kOk;
    }
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace kpvc::cli
