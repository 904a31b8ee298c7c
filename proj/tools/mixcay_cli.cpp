// mixcay: build, analyze, classify and crosscheck mixed Cayley digraphs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mixcay/analysis.hpp"
#include "mixcay/classification.hpp"
#include "mixcay/error.hpp"
#include "mixcay/harness.hpp"
#include "mixcay/report.hpp"

using namespace mixcay;

namespace {

enum Exit { ok = 0, usage = 1, not_strong = 2, capacity = 3, mismatch = 4 };

struct InstanceArgs {
  std::string group = "";
  std::string group_file;
  std::string params_file;
  std::string s0, s1, t0, t1;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("--group", a.group, "Zn, Dn, Sn or a product such as Z2xZ2");
  cmd->add_option("--group-file", a.group_file, "Cayley table file (\"order n\" then n rows)");
  cmd->add_option("--params-file", a.params_file, "JSON document with group and the four sets");
  cmd->add_option("--s0", a.s0, "comma-separated indices, or none");
  cmd->add_option("--s1", a.s1, "comma-separated indices, or none");
  cmd->add_option("--t0", a.t0, "comma-separated indices, or none");
  cmd->add_option("--t1", a.t1, "comma-separated indices, or none");
}

std::vector<Element> parse_list(const std::string& text, const char* what) {
  std::vector<Element> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Error(ErrorKind::parse, std::string("bad element '") + item + "' in --" + what);
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, origin + ": " + e.what());
  }
}

MixedCayleyParams load_instance(const InstanceArgs& a) {
  if (!a.params_file.empty()) return params_from_json(parse_json(read_file(a.params_file), a.params_file));
  Group g = [&] {
    if (!a.group_file.empty()) return make_from_table(read_file(a.group_file), a.group_file);
    if (a.group.empty()) throw Error(ErrorKind::parse, "one of --group, --group-file, --params-file is required");
    return parse_group_spec(a.group);
  }();
  return make_params(std::move(g), parse_list(a.s0, "s0"), parse_list(a.s1, "s1"),
                     parse_list(a.t0, "t0"), parse_list(a.t1, "t1"));
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorKind::parse, "cannot write " + out);
  f << text;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::not_strong: return not_strong;
    case ErrorKind::capacity: return capacity;
    default: return usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed Cayley digraph connectivity toolkit"};
  app.require_subcommand(1);

  InstanceArgs inst;
  std::size_t atom_cap = kDefaultAtomCap;
  std::string out;
  bool literal = false;

  auto* analyze = app.add_subcommand("analyze", "direct connectivity analysis (flow and subsets)");
  add_instance_options(analyze, inst);
  analyze->add_option("--atom-cap", atom_cap, "largest vertex count for subset scans");
  analyze->add_option("--out", out, "output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "group-theoretic conditions only");
  add_instance_options(classify, inst);
  classify->add_flag("--literal", literal, "require a non-trivial H in the super-lambda conditions");
  classify->add_option("--out", out, "output file (default stdout)");

  std::string format = "dot";
  auto* exp = app.add_subcommand("export", "write the digraph as DOT or JSON");
  add_instance_options(exp, inst);
  exp->add_option("--format", format, "dot or json");
  exp->add_option("--out", out, "output file (default stdout)");

  std::string space_file, groups;
  std::size_t s_max = 2, t_min = 1, t_max = 2, sample = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool quiet = false;
  auto* cross = app.add_subcommand("crosscheck", "compare theorem predicates with direct computation");
  cross->add_option("--space-file", space_file, "JSON instance-space document");
  cross->add_option("--groups", groups, "comma-separated group specs");
  cross->add_option("--s-max", s_max, "largest |S0|, |S1|");
  cross->add_option("--t-min", t_min, "smallest |T0|, |T1|");
  cross->add_option("--t-max", t_max, "largest |T0|, |T1|");
  cross->add_option("--sample", sample, "sample groups with more candidates than this (0: never)");
  cross->add_option("--seed", seed, "sampling seed");
  cross->add_option("--atom-cap", atom_cap, "largest vertex count for subset scans");
  cross->add_option("--threads", threads, "worker threads (0: all cores)");
  cross->add_option("--out", out, "report file (default stdout)");
  cross->add_flag("--quiet", quiet, "no summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*analyze) {
      const MixedCayleyParams p = load_instance(inst);
      const InstanceAnalysis a = analyze_instance(p, atom_cap);
      emit(analysis_document(p, a).dump(2) + "\n", out);
      return ok;
    }
    if (*classify) {
      const MixedCayleyParams p = load_instance(inst);
      const auto reading = literal ? SubgroupReading::literal : SubgroupReading::admit_trivial;
      emit(classify_document(p, reading).dump(2) + "\n", out);
      return ok;
    }
    if (*exp) {
      if (format != "dot" && format != "json") {
        std::cerr << "unknown format '" << format << "' (expected dot or json)\n";
        return usage;
      }
      const MixedCayleyParams p = load_instance(inst);
      const Digraph x = build_mixed(p);
      emit(format == "dot" ? to_dot(x, "MD") : graph_document(p, x).dump(2) + "\n", out);
      return ok;
    }
    if (*cross) {
      InstanceSpaceSpec spec;
      if (!space_file.empty()) spec = space_from_json(parse_json(read_file(space_file), space_file));
      if (!groups.empty()) {
        std::stringstream ss(groups);
        std::string g;
        while (std::getline(ss, g, ',')) spec.groups.push_back(g);
      }
      if (space_file.empty()) {
        spec.s_max = s_max;
        spec.t_min = t_min;
        spec.t_max = t_max;
        spec.seed = seed;
        spec.atom_cap = atom_cap;
        if (sample > 0) spec.sample_limit = sample;
      }
      spec.threads = threads;
      for (const auto& g : spec.groups) parse_group_spec(g);  // fail early on typos
      const CrosscheckResult r = run_crosscheck(spec);
      emit(crosscheck_document(spec, r).dump(2) + "\n", out);
      if (!quiet) {
        std::cerr << "instances " << r.instances_total << ", strong " << r.instances_strong
                  << ", max-lambda agreements " << r.agreements(predicate::max_lambda) << "/"
                  << r.checked(predicate::max_lambda) << ", super-lambda agreements "
                  << r.agreements(predicate::super_lambda) << "/"
                  << r.checked(predicate::super_lambda) << ", mismatches " << r.mismatches.size()
                  << "\n";
      }
      return r.ok() ? ok : mismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_for(e);
  }
  return usage;
}
