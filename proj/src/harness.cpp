#include "mixcay/harness.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "mixcay/analysis.hpp"
#include "mixcay/error.hpp"

namespace mixcay {

std::size_t CrosscheckResult::mismatch_count(const std::string& pred) const {
  return static_cast<std::size_t>(std::count_if(
      mismatches.begin(), mismatches.end(), [&](const Mismatch& m) { return m.predicate == pred; }));
}

std::size_t CrosscheckResult::agreements(const std::string& pred) const {
  auto it = tallies.find(pred);
  return it == tallies.end() ? 0 : it->second.agreements;
}

std::size_t CrosscheckResult::checked(const std::string& pred) const {
  auto it = tallies.find(pred);
  return it == tallies.end() ? 0 : it->second.checked;
}

InstanceSpaceSpec space_from_json(const Json& j) {
  try {
    InstanceSpaceSpec s;
    if (j.contains("groups")) s.groups = j["groups"].get<std::vector<std::string>>();
    s.s_max = j.value("s_max", s.s_max);
    s.t_min = j.value("t_min", s.t_min);
    s.t_max = j.value("t_max", s.t_max);
    s.require_strong = j.value("require_strong", s.require_strong);
    if (j.contains("sample_limit") && !j["sample_limit"].is_null())
      s.sample_limit = j["sample_limit"].get<std::size_t>();
    s.seed = j.value("seed", s.seed);
    s.atom_cap = j.value("atom_cap", s.atom_cap);
    s.group_cap = j.value("group_cap", s.group_cap);
    // Execution detail only; never echoed into reports.
    s.threads = j.value("threads", s.threads);
    if (j.contains("instances"))
      for (const auto& p : j["instances"]) s.instances.push_back(params_from_json(p));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

Json space_to_json(const InstanceSpaceSpec& s) {
  Json j;
  j["groups"] = s.groups;
  j["s_max"] = s.s_max;
  j["t_min"] = s.t_min;
  j["t_max"] = s.t_max;
  j["require_strong"] = s.require_strong;
  j["sample_limit"] = s.sample_limit ? Json(*s.sample_limit) : Json(nullptr);
  j["seed"] = s.seed;
  j["sampler"] = "mt19937_64";
  j["atom_cap"] = s.atom_cap;
  j["group_cap"] = s.group_cap;
  Json inst = Json::array();
  for (const auto& p : s.instances) inst.push_back(params_to_json(p));
  j["instances"] = std::move(inst);
  return j;
}

namespace {

// Subsets of {first..n-1} with size in [lo, hi], as ascending bitmasks.
std::vector<std::uint64_t> subset_masks(std::size_t n, std::size_t first, std::size_t lo,
                                        std::size_t hi) {
  std::vector<std::uint64_t> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t mask) -> void {
    if (pick.size() >= lo && pick.size() <= hi) out.push_back(mask);
    if (pick.size() == hi) return;
    for (std::size_t e = from; e < n; ++e) {
      pick.push_back(e);
      self(self, e + 1, mask | (std::uint64_t{1} << e));
      pick.pop_back();
    }
  };
  rec(rec, first, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> mask_elements(std::uint64_t m) {
  std::vector<Element> v;
  for (Element e = 0; m; ++e, m >>= 1)
    if (m & 1) v.push_back(e);
  return v;
}

struct Candidates {
  std::vector<std::uint64_t> s, t;
  std::size_t count() const { return s.size() * s.size() * t.size() * t.size(); }
};

Candidates candidates(std::size_t n, const InstanceSpaceSpec& spec) {
  if (n > 64) throw Error(ErrorKind::capacity, "group too large to enumerate");
  Candidates c;
  c.s = subset_masks(n, 1, 0, spec.s_max);
  c.t = spec.t_min <= spec.t_max ? subset_masks(n, 0, spec.t_min, spec.t_max)
                                 : std::vector<std::uint64_t>{};
  return c;
}

}  // namespace

// FNV-1a; std::hash is not stable across standard libraries.
static std::uint32_t name_hash(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) h = (h ^ c) * 16777619u;
  return h;
}

std::size_t candidate_count(std::size_t group_order, const InstanceSpaceSpec& spec) {
  return candidates(group_order, spec).count();
}

std::vector<MixedCayleyParams> enumerate_group(const Group& g, const InstanceSpaceSpec& spec) {
  const Candidates c = candidates(g.order(), spec);
  const std::size_t total = c.count();
  std::vector<std::size_t> picks;
  if (spec.sample_limit && total > *spec.sample_limit) {
    // Floyd's sampling without replacement; the seed mixes in the group
    // order and name so groups draw independent streams.
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                      static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(g.order()),
                      name_hash(g.name())};
    std::mt19937_64 rng(seq);
    std::set<std::size_t> chosen;
    const std::size_t k = *spec.sample_limit;
    for (std::size_t j = total - k; j < total; ++j) {
      const std::size_t r = static_cast<std::size_t>(rng() % (j + 1));
      if (!chosen.insert(r).second) chosen.insert(j);
    }
    picks.assign(chosen.begin(), chosen.end());
  } else {
    picks.resize(total);
    for (std::size_t i = 0; i < total; ++i) picks[i] = i;
  }
  std::vector<MixedCayleyParams> out;
  out.reserve(picks.size());
  const std::size_t ns = c.s.size(), nt = c.t.size();
  for (std::size_t idx : picks) {
    const std::size_t i3 = idx % nt, i2 = idx / nt % nt, i1 = idx / nt / nt % ns,
                      i0 = idx / nt / nt / ns;
    out.push_back(make_params(g, mask_elements(c.s[i0]), mask_elements(c.s[i1]),
                              mask_elements(c.t[i2]), mask_elements(c.t[i3])));
  }
  return out;
}

namespace {

std::string yes_no(bool b, const char* yes, const char* no) { return b ? yes : no; }

void tally(CrosscheckResult& r, const char* pred, bool agree, const MixedCayleyParams& p,
           const std::string& direct, const std::string& theorem) {
  auto& t = r.tallies[pred];
  ++t.checked;
  if (agree)
    ++t.agreements;
  else
    r.mismatches.push_back({pred, params_to_json(p), direct, theorem});
}

void observe(CrosscheckResult& r, const char* pred, bool agree, const MixedCayleyParams& p,
             const std::string& detail) {
  auto& t = r.tallies[pred];
  ++t.checked;
  if (agree)
    ++t.agreements;
  else
    r.findings.push_back({pred, params_to_json(p), detail});
}

std::string failed_checks(const std::vector<PropertyOutcome>& checks) {
  std::string s;
  for (const auto& c : checks) {
    if (c.status != CheckStatus::fail) continue;
    if (!s.empty()) s += "; ";
    s += c.name;
    if (!c.detail.empty()) s += " (" + c.detail + ")";
  }
  return s;
}

// Distinct superatoms of the given sign share no vertex.
bool pairwise_disjoint(const std::vector<ArcFragment>& fs, Sign sign) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (fs[i].sign != sign || fs[j].sign != sign) continue;
      for (Vertex v : fs[i].vertices)
        if (fs[j].vertices.contains(v)) return false;
    }
  return true;
}

void check_degree_formulas(const MixedCayleyParams& p, const Digraph& x, CrosscheckResult& r) {
  const std::size_t n = p.group.order();
  bool ok = true;
  std::string detail;
  for (Element g = 0; g < n && ok; ++g) {
    const Vertex v0 = vertex_of(n, g, 0), v1 = vertex_of(n, g, 1);
    const std::size_t want[4] = {p.t0.size() + p.s0.size(), p.t1.size() + p.s0.size(),
                                 p.t1.size() + p.s1.size(), p.t0.size() + p.s1.size()};
    const std::size_t got[4] = {x.out_degree(v0), x.in_degree(v0), x.out_degree(v1),
                                x.in_degree(v1)};
    for (int k = 0; k < 4; ++k)
      if (want[k] != got[k]) {
        ok = false;
        detail = "vertex " + x.label(k < 2 ? v0 : v1) + " degree " + std::to_string(got[k]) +
                 " expected " + std::to_string(want[k]);
      }
  }
  tally(r, predicate::degree_formula, ok, p, detail, "formula");
  bool aut = true;
  std::string bad;
  for (Element a = 0; a < n; ++a)
    if (!is_automorphism(x, right_translation(p, a))) {
      aut = false;
      bad = "R(" + std::to_string(a) + ") is not an automorphism";
      break;
    }
  tally(r, predicate::right_translation, aut, p, bad, "automorphism");
}

void check_strong_instance(const MixedCayleyParams& p, const Digraph& x,
                           const InstanceSpaceSpec& spec, CrosscheckResult& r) {
  const std::size_t n = p.group.order();
  const bool small = x.vertex_count() <= spec.atom_cap;
  const std::size_t lambda = arc_connectivity(x).lambda;
  const std::size_t delta = mixed_min_degree(p);
  if (delta != degrees(x).delta)
    tally(r, predicate::degree_formula, false, p, "delta " + std::to_string(degrees(x).delta),
          "delta " + std::to_string(delta));

  if (small) {
    const std::size_t brute = arc_connectivity_bruteforce(x, spec.atom_cap);
    tally(r, predicate::lambda_oracle, brute == lambda, p, "subsets " + std::to_string(brute),
          "flow " + std::to_string(lambda));
  } else {
    r.skips.push_back({params_to_json(p), "subset oracle: vertex count above atom cap"});
  }

  const MaxLambdaVerdict mv = check_not_max_lambda(p, delta, spec.group_cap);
  tally(r, predicate::max_lambda, mv.not_max_lambda == (lambda < delta), p,
        "lambda " + std::to_string(lambda) + ", delta " + std::to_string(delta),
        yes_no(mv.not_max_lambda, "not max-lambda", "max-lambda"));
  if (mv.condition) {
    ++r.max_lambda_conditions[std::to_string(*mv.condition)];
    tally(r, predicate::max_lambda_witness,
          max_lambda_condition_holds(p, delta, *mv.condition, *mv.witness), p,
          "witness rejected", "condition " + std::to_string(*mv.condition));
  }

  std::optional<AtomReport> pos, neg;
  if (small) {
    pos = lambda_atoms(x, Sign::positive, n, spec.atom_cap);
    neg = lambda_atoms(x, Sign::negative, n, spec.atom_cap);
  } else {
    r.skips.push_back({params_to_json(p), "atoms: vertex count above atom cap"});
  }

  if (lambda < delta) {
    ++r.not_max_lambda_instances;
    if (!pos) return;
    std::string bad = failed_checks(atom_structure_checks(x, *pos, n, delta));
    const std::string bad_neg = failed_checks(atom_structure_checks(x, *neg, n, delta));
    if (!bad_neg.empty()) bad += (bad.empty() ? "" : "; ") + std::string("negative: ") + bad_neg;
    tally(r, predicate::atom_lemmas, bad.empty(), p, bad, "atom lemmas");

    const GammaOutcome gp = gamma_label(p, *pos, delta);
    const GammaOutcome gn = gamma_label(p, *neg, delta);
    const bool total = gp.label && gn.label;
    tally(r, predicate::gamma_total, total, p, gp.violation + (gn.violation.empty() ? "" : " | " + gn.violation),
          "one positive and one negative class");
    if (total) {
      ++r.gamma_labels[gp.label->name() + " / " + gn.label->name()];
      observe(r, predicate::gamma_pairing, gamma_equivalent(*gp.label) == *gn.label, p,
              "positive " + gp.label->name() + ", negative " + gn.label->name());
    }
    return;
  }

  ++r.max_lambda_instances;
  const SuperLambdaResult flow = is_super_lambda_flow(x);
  if (small) {
    const SuperLambdaResult ex = is_super_lambda_exhaustive(x, spec.atom_cap);
    tally(r, predicate::super_routes, ex.super_lambda == flow.super_lambda, p,
          yes_no(ex.super_lambda, "exhaustive: super", "exhaustive: not super"),
          yes_no(flow.super_lambda, "flow: super", "flow: not super"));
  }
  const bool not_super = !flow.super_lambda;

  std::vector<ArcFragment> superatoms;
  if (pos) superatoms = combined_superatoms(*pos, *neg);
  if (pos && not_super) {
    const bool size_ok = std::all_of(superatoms.begin(), superatoms.end(), [&](const auto& f) {
      return f.vertices.size() >= delta;
    });
    tally(r, predicate::superatom_size, size_ok, p, "superatom smaller than delta",
          "superatom size bound");
  }

  const SuperLambdaVerdict sv = check_not_super_lambda(p, delta, SubgroupReading::admit_trivial,
                                                       spec.group_cap);
  if (!sv.applicable) {
    ++r.excluded_by_hypotheses;
    return;
  }
  tally(r, predicate::super_lambda, sv.not_super_lambda == not_super, p,
        yes_no(not_super, "not super-lambda", "super-lambda"),
        sv.condition ? "condition " + std::to_string(*sv.condition) : std::string("no condition"));
  if (sv.condition) ++r.super_lambda_conditions[std::to_string(*sv.condition)];
  for (const auto& s : sv.satisfied) {
    tally(r, predicate::super_lambda_witness,
          super_lambda_condition_holds(p, delta, s.condition, s.witness), p, "witness rejected",
          "condition " + std::to_string(s.condition));
  }
  const SuperLambdaVerdict literal =
      check_not_super_lambda(p, delta, SubgroupReading::literal, spec.group_cap);
  if (literal.not_super_lambda != not_super) {
    ++r.literal_reading_disagreements;
    r.findings.push_back({"literal_nontrivial_subgroup_reading", params_to_json(p),
                          std::string("direct: ") + (not_super ? "not super-lambda" : "super-lambda") +
                              "; literal reading finds no condition"});
  }

  if (pos) {
    if (check_class_G(p))
      tally(r, predicate::class_g, has_one_layer_superatom(*pos, *neg, n), p,
            "no superatom inside one layer", "class G condition holds");
    if (not_super)
      observe(r, predicate::superatom_disjoint,
              pairwise_disjoint(superatoms, Sign::positive) &&
                  pairwise_disjoint(superatoms, Sign::negative),
              p,
              "two superatoms of one sign share a vertex");
  }
}

void merge(CrosscheckResult& into, CrosscheckResult&& part) {
  into.instances_total += part.instances_total;
  into.instances_strong += part.instances_strong;
  into.instances_not_strong += part.instances_not_strong;
  into.max_lambda_instances += part.max_lambda_instances;
  into.not_max_lambda_instances += part.not_max_lambda_instances;
  into.excluded_by_hypotheses += part.excluded_by_hypotheses;
  for (const auto& [k, t] : part.tallies) {
    into.tallies[k].checked += t.checked;
    into.tallies[k].agreements += t.agreements;
  }
  for (const auto& [k, v] : part.max_lambda_conditions) into.max_lambda_conditions[k] += v;
  for (const auto& [k, v] : part.super_lambda_conditions) into.super_lambda_conditions[k] += v;
  for (const auto& [k, v] : part.gamma_labels) into.gamma_labels[k] += v;
  into.literal_reading_disagreements += part.literal_reading_disagreements;
  for (auto& m : part.mismatches) into.mismatches.push_back(std::move(m));
  for (auto& f : part.findings) into.findings.push_back(std::move(f));
  for (auto& s : part.skips) into.skips.push_back(std::move(s));
}

}  // namespace

void crosscheck_instance(const MixedCayleyParams& p, const InstanceSpaceSpec& spec,
                         CrosscheckResult& r) {
  ++r.instances_total;
  try {
    p.validate();
    const Digraph x = build_mixed(p);
    check_degree_formulas(p, x, r);
    if (!is_strongly_connected(x)) {
      ++r.instances_not_strong;
      if (!spec.require_strong)
        r.skips.push_back({params_to_json(p), "not strongly connected"});
      return;
    }
    ++r.instances_strong;
    check_strong_instance(p, x, spec, r);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::capacity) throw;
    r.skips.push_back({params_to_json(p), std::string("capacity: ") + e.what()});
  }
}

CrosscheckResult run_crosscheck(const InstanceSpaceSpec& spec) {
  std::vector<MixedCayleyParams> work;
  for (const auto& name : spec.groups) {
    const Group g = parse_group_spec(name);
    auto part = enumerate_group(g, spec);
    work.insert(work.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  work.insert(work.end(), spec.instances.begin(), spec.instances.end());

  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = (work.size() + kBlock - 1) / kBlock;
  std::vector<CrosscheckResult> parts(blocks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      const std::size_t b = next++;
      if (b >= blocks) return;
      try {
        const std::size_t end = std::min(work.size(), (b + 1) * kBlock);
        for (std::size_t i = b * kBlock; i < end; ++i) crosscheck_instance(work[i], spec, parts[b]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(blocks, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CrosscheckResult out;
  for (auto& part : parts) merge(out, std::move(part));
  return out;
}

Json crosscheck_document(const InstanceSpaceSpec& spec, const CrosscheckResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "crosscheck";
  j["space"] = space_to_json(spec);
  j["instances_total"] = r.instances_total;
  j["instances_strong"] = r.instances_strong;
  j["instances_not_strong"] = r.instances_not_strong;
  j["max_lambda_instances"] = r.max_lambda_instances;
  j["not_max_lambda_instances"] = r.not_max_lambda_instances;
  j["excluded_by_hypotheses"] = r.excluded_by_hypotheses;
  j["max_lambda_agreements"] = r.agreements(predicate::max_lambda);
  j["super_lambda_agreements"] = r.agreements(predicate::super_lambda);
  Json t = Json::object();
  for (const auto& [k, v] : r.tallies)
    t[k] = {{"checked", v.checked}, {"agreements", v.agreements}};
  j["predicates"] = std::move(t);
  j["max_lambda_conditions"] = r.max_lambda_conditions;
  j["super_lambda_conditions"] = r.super_lambda_conditions;
  j["gamma_labels"] = r.gamma_labels;
  j["literal_reading_disagreements"] = r.literal_reading_disagreements;
  Json ms = Json::array();
  for (const auto& m : r.mismatches)
    ms.push_back({{"predicate", m.predicate}, {"params", m.params}, {"direct", m.direct},
                  {"theorem", m.theorem}});
  j["mismatches"] = std::move(ms);
  Json fs = Json::array();
  for (const auto& f : r.findings)
    fs.push_back({{"kind", f.kind}, {"params", f.params}, {"detail", f.detail}});
  j["findings"] = std::move(fs);
  Json ss = Json::array();
  for (const auto& s : r.skips) ss.push_back({{"params", s.params}, {"reason", s.reason}});
  j["skips"] = std::move(ss);
  return j;
}

}  // namespace mixcay
