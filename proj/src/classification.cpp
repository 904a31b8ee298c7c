#include "mixcay/classification.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mixcay/error.hpp"

namespace mixcay {

std::optional<Element> ConditionWitness::get(const std::string& role) const {
  for (const auto& e : elements)
    if (e.role == role) return e.value;
  return std::nullopt;
}

namespace {

enum class SizeRule { below_delta, equal_delta, half_delta };

struct Ctx {
  const Group& g;
  std::size_t n;
  ElementSet s0, s1, t0, t1;
  ElementSet t1_inv;
  ElementSet g0, g1;  // <S0>, <S1>
  std::size_t delta;
  SubgroupReading reading;

  Ctx(const MixedCayleyParams& p, std::size_t d,
      SubgroupReading r = SubgroupReading::admit_trivial)
      : g(p.group), n(p.group.order()), delta(d), reading(r) {
    s0 = ElementSet(n, p.s0.members());
    s1 = ElementSet(n, p.s1.members());
    t0 = ElementSet(n, p.t0.members());
    t1 = ElementSet(n, p.t1.members());
    t1_inv = set_inverse(g, t1);
    g0 = generated_subgroup(g, s0).elements;
    g1 = generated_subgroup(g, s1).elements;
  }

  ElementSet single(Element e) const { return ElementSet(n, {e}); }

  // <A> <= B for a subgroup B.
  bool gen_le(const ElementSet& a, const ElementSet& b) const {
    return generated_subgroup(g, a).elements.is_subset_of(b);
  }
  // t H t^-1
  ElementSet conj(Element t, const Subgroup& h) const {
    return conjugate_subgroup(g, t, h).elements;
  }
  // t^-1 H t
  ElementSet conj_inv(Element t, const Subgroup& h) const {
    return conjugate_subgroup(g, g.inv(t), h).elements;
  }
  bool cosets_disjoint(Element a, Element b, const Subgroup& h) const {
    return !left_coset(g, a, h).intersects(left_coset(g, b, h));
  }
  // a * B ⊆ H
  bool left_in(Element a, const ElementSet& b, const Subgroup& h) const {
    return set_product(g, single(a), b).is_subset_of(h.elements);
  }
  // A * b ⊆ H
  bool right_in(const ElementSet& a, Element b, const Subgroup& h) const {
    return set_product(g, a, single(b)).is_subset_of(h.elements);
  }
};

using Values = std::vector<Element>;

struct Condition {
  int number = 0;
  SizeRule rule = SizeRule::below_delta;
  bool require_proper = true;
  std::vector<std::string> roles;
  std::function<bool(const Ctx&, const Subgroup&, const Values&)> holds;
};

const ElementSet& domain_of(const Ctx& c, const std::string& role) {
  switch (role[0] == 's' ? (role[1] == '0' ? 0 : 1) : (role[1] == '0' ? 2 : 3)) {
    case 0: return c.s0;
    case 1: return c.s1;
    case 2: return c.t0;
    default: return c.t1;
  }
}

bool distinct(std::initializer_list<Element> xs) {
  std::vector<Element> v(xs);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// --- first parts -----------------------------------------------------------

bool a0(const Ctx& c, const Subgroup& h, std::initializer_list<Element> removed) {
  ElementSet rest = c.s0.with(kIdentity);
  for (Element e : removed) rest = rest.without(e);
  return c.gen_le(rest, h.elements);
}
bool a1(const Ctx& c, const Subgroup& h, std::initializer_list<Element> removed) {
  ElementSet rest = c.s1.with(kIdentity);
  for (Element e : removed) rest = rest.without(e);
  return c.gen_le(rest, h.elements);
}
bool b0(const Ctx& c, const Subgroup& h) { return c.g0.is_subset_of(h.elements); }
bool b1(const Ctx& c, const Subgroup& h) { return c.g1.is_subset_of(h.elements); }

// --- second parts, layer 0 ---------------------------------------------------

bool p0(const Ctx& c, const Subgroup& h, Element t0) {
  return c.g1.is_subset_of(c.conj(t0, h)) && c.right_in(c.t1_inv, t0, h) &&
         c.left_in(c.g.inv(t0), c.t0, h);
}

bool q0(const Ctx& c, const Subgroup& h, Element t0, Element t0p) {
  return t0 != t0p && c.g1.is_subset_of(c.conj(t0, h)) &&
         c.right_in(c.t1_inv, t0, h) && c.cosets_disjoint(t0p, t0, h) &&
         c.left_in(c.g.inv(t0), c.t0.without(t0p), h);
}

bool q0_triple(const Ctx& c, const Subgroup& h, Element t0, Element t0p, Element t0pp) {
  return distinct({t0, t0p, t0pp}) && c.g1.is_subset_of(c.conj(t0, h)) &&
         c.right_in(c.t1_inv, t0, h) && c.cosets_disjoint(t0p, t0, h) &&
         c.cosets_disjoint(t0pp, t0, h) &&
         c.left_in(c.g.inv(t0), c.t0.without(t0p).without(t0pp), h);
}

// --- second parts, layer 1 ---------------------------------------------------

bool p1(const Ctx& c, const Subgroup& h, Element t1) {
  return c.g0.is_subset_of(c.conj_inv(t1, h)) && c.right_in(c.t0, c.g.inv(t1), h) &&
         c.left_in(t1, c.t1_inv, h);
}

bool q1(const Ctx& c, const Subgroup& h, Element t1, Element t1p) {
  return t1 != t1p && c.g0.is_subset_of(c.conj_inv(t1, h)) &&
         c.right_in(c.t0, c.g.inv(t1), h) &&
         c.cosets_disjoint(c.g.inv(t1p), c.g.inv(t1), h) &&
         c.left_in(t1, c.t1_inv.without(c.g.inv(t1p)), h);
}

bool q1_triple(const Ctx& c, const Subgroup& h, Element t1, Element t1p, Element t1pp) {
  return distinct({t1, t1p, t1pp}) && c.g0.is_subset_of(c.conj_inv(t1, h)) &&
         c.right_in(c.t0, c.g.inv(t1), h) &&
         c.cosets_disjoint(c.g.inv(t1), c.g.inv(t1p), h) &&
         c.cosets_disjoint(c.g.inv(t1), c.g.inv(t1pp), h) &&
         c.left_in(t1, c.t1_inv.without(c.g.inv(t1p)).without(c.g.inv(t1pp)), h);
}

const std::vector<Condition>& max_lambda_conditions() {
  static const std::vector<Condition> conds = {
      {1, SizeRule::below_delta, true, {"s0", "t0"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return a0(c, h, {v[0]}) && p0(c, h, v[1]);
       }},
      {2, SizeRule::below_delta, true, {"t0", "t0'"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return b0(c, h) && q0(c, h, v[0], v[1]);
       }},
      {3, SizeRule::below_delta, true, {"s1", "t1"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return a1(c, h, {v[0]}) && p1(c, h, v[1]);
       }},
      {4, SizeRule::below_delta, true, {"t1", "t1'"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return b1(c, h) && q1(c, h, v[0], v[1]);
       }},
  };
  return conds;
}

// Conditions 3..16; (1) and (2) are handled by check_class_G.
const std::vector<Condition>& super_lambda_conditions() {
  static const std::vector<Condition> conds = {
      {3, SizeRule::equal_delta, true, {"s0", "t0"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return a0(c, h, {v[0]}) && p0(c, h, v[1]);
       }},
      {4, SizeRule::equal_delta, true, {"t0", "t0'"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return b0(c, h) && q0(c, h, v[0], v[1]);
       }},
      {5, SizeRule::equal_delta, true, {"s1", "t1"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return a1(c, h, {v[0]}) && p1(c, h, v[1]);
       }},
      {6, SizeRule::equal_delta, true, {"t1", "t1'"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return b1(c, h) && q1(c, h, v[0], v[1]);
       }},
      {7, SizeRule::half_delta, true, {"s0", "s0'", "t0"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return v[0] != v[1] && a0(c, h, {v[0], v[1]}) && p0(c, h, v[2]);
       }},
      {8, SizeRule::half_delta, false, {"t0", "t0'", "t0''"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return b0(c, h) && q0_triple(c, h, v[0], v[1], v[2]);
       }},
      {9, SizeRule::half_delta, true, {"s0", "t0", "t0'"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return a0(c, h, {v[0]}) && q0(c, h, v[1], v[2]);
       }},
      {10, SizeRule::half_delta, false, {"s1", "s1'", "t1"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return v[0] != v[1] && a1(c, h, {v[0], v[1]}) && p1(c, h, v[2]);
       }},
      {11, SizeRule::half_delta, true, {"t1", "t1'", "t1''"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return b1(c, h) && q1_triple(c, h, v[0], v[1], v[2]);
       }},
      {12, SizeRule::half_delta, true, {"s1", "t1", "t1'"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         return a1(c, h, {v[0]}) && q1(c, h, v[1], v[2]);
       }},
      {13, SizeRule::half_delta, true, {"s0", "s1", "t0"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         if (!a0(c, h, {v[0]})) return false;
         ElementSet rest = c.s1.with(kIdentity).without(v[1]);
         return c.gen_le(rest, c.conj(v[2], h)) && c.right_in(c.t1_inv, v[2], h) &&
                c.left_in(c.g.inv(v[2]), c.t0, h);
       }},
      {14, SizeRule::half_delta, true, {"s0", "t0", "t1"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         if (!a0(c, h, {v[0]})) return false;
         Element t0 = v[1], t1 = v[2];
         return c.g1.is_subset_of(c.conj(t0, h)) && c.left_in(c.g.inv(t0), c.t0, h) &&
                !h.elements.contains(c.g.mul(c.g.inv(t1), t0)) &&
                c.right_in(c.t1_inv.without(c.g.inv(t1)), t0, h);
       }},
      {15, SizeRule::half_delta, true, {"s1", "t1", "t0"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         if (!a1(c, h, {v[0]})) return false;
         Element t1 = v[1], t0 = v[2];
         return c.g0.is_subset_of(c.conj_inv(t1, h)) && c.left_in(t1, c.t1_inv, h) &&
                !h.elements.contains(c.g.mul(t0, c.g.inv(t1))) &&
                c.right_in(c.t0.without(t0), c.g.inv(t1), h);
       }},
      {16, SizeRule::half_delta, true, {"t0", "t0'", "t1"},
       [](const Ctx& c, const Subgroup& h, const Values& v) {
         if (!b0(c, h)) return false;
         Element t0 = v[0], t0p = v[1], t1 = v[2];
         return t0 != t0p && c.g1.is_subset_of(c.conj(t0, h)) &&
                !h.elements.contains(c.g.mul(c.g.inv(t1), t0)) &&
                c.right_in(c.t1_inv.without(c.g.inv(t1)), t0, h) &&
                c.cosets_disjoint(t0p, t0, h) &&
                c.left_in(c.g.inv(t0), c.t0.without(t0p), h);
       }},
  };
  return conds;
}

bool size_ok(const Ctx& c, const Condition& cond, const Subgroup& h) {
  const std::size_t k = h.order();
  if (cond.require_proper && k == c.n) return false;
  const std::size_t lo = c.reading == SubgroupReading::literal ? 2 : 1;
  switch (cond.rule) {
    case SizeRule::below_delta:
      return k < c.delta;
    case SizeRule::equal_delta:
      return k >= lo && k == c.delta;
    case SizeRule::half_delta:
      return c.delta % 2 == 0 && k >= lo && k == c.delta / 2;
  }
  return false;
}

// Lexicographic scan over the role domains.
std::optional<Values> search_values(const Ctx& c, const Condition& cond,
                                    const Subgroup& h) {
  std::vector<const ElementSet*> doms;
  for (const auto& r : cond.roles) {
    doms.push_back(&domain_of(c, r));
    if (doms.back()->empty()) return std::nullopt;
  }
  std::vector<std::size_t> idx(doms.size(), 0);
  Values v(doms.size());
  while (true) {
    for (std::size_t i = 0; i < doms.size(); ++i) v[i] = (*doms[i])[idx[i]];
    if (cond.holds(c, h, v)) return v;
    std::size_t i = doms.size();
    while (i > 0) {
      --i;
      if (++idx[i] < doms[i]->size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (doms.empty()) return std::nullopt;
  }
}

ConditionWitness make_witness(const Condition& cond, const Subgroup& h, const Values& v) {
  ConditionWitness w{h, {}};
  for (std::size_t i = 0; i < v.size(); ++i) w.elements.push_back({cond.roles[i], v[i]});
  return w;
}

std::optional<ConditionWitness> first_witness(const Ctx& c, const Condition& cond,
                                              const std::vector<Subgroup>& subgroups) {
  for (const auto& h : subgroups) {
    if (!size_ok(c, cond, h)) continue;
    if (auto v = search_values(c, cond, h)) return make_witness(cond, h, *v);
  }
  return std::nullopt;
}

bool check_given(const Ctx& c, const Condition& cond, const ConditionWitness& w) {
  if (w.h.parent_order != c.n || !is_subgroup(c.g, w.h.elements)) return false;
  if (!size_ok(c, cond, w.h)) return false;
  Values v;
  for (const auto& role : cond.roles) {
    auto e = w.get(role);
    if (!e || !domain_of(c, role).contains(*e)) return false;
    v.push_back(*e);
  }
  return cond.holds(c, w.h, v);
}

const Condition* find_condition(const std::vector<Condition>& conds, int number) {
  for (const auto& c : conds)
    if (c.number == number) return &c;
  return nullptr;
}

}  // namespace

MaxLambdaVerdict check_not_max_lambda(const MixedCayleyParams& p, std::size_t delta,
                                      std::size_t cap) {
  p.validate();
  const auto subgroups = all_subgroups(p.group, cap);
  Ctx c(p, delta);
  MaxLambdaVerdict out;
  for (const auto& cond : max_lambda_conditions()) {
    if (auto w = first_witness(c, cond, subgroups)) {
      out.not_max_lambda = true;
      out.condition = cond.number;
      out.witness = std::move(*w);
      break;
    }
  }
  return out;
}

bool max_lambda_condition_holds(const MixedCayleyParams& p, std::size_t delta,
                                int condition, const ConditionWitness& w) {
  const Condition* cond = find_condition(max_lambda_conditions(), condition);
  if (!cond) throw Error(ErrorKind::invalid_input, "no such condition: " + std::to_string(condition));
  Ctx c(p, delta);
  return check_given(c, *cond, w);
}

const char* to_string(FamilyLabel label) noexcept {
  switch (label) {
    case FamilyLabel::directed_cycle: return "directed_cycle";
    case FamilyLabel::symmetric_cycle: return "symmetric_cycle";
    case FamilyLabel::family_F: return "family_F";
    case FamilyLabel::class_G: return "class_G";
    case FamilyLabel::class_L: return "class_L";
  }
  return "?";
}

std::vector<FamilyLabel> detect_exceptional(const MixedCayleyParams& p) {
  p.validate();
  std::vector<FamilyLabel> out;
  const Digraph x = build_mixed(p);
  const bool strong = is_strongly_connected(x);
  bool all_one = true, all_two_sym = is_symmetric(x);
  for (Vertex v = 0; v < x.vertex_count(); ++v) {
    if (x.out_degree(v) != 1 || x.in_degree(v) != 1) all_one = false;
    if (x.out_degree(v) != 2) all_two_sym = false;
  }
  if (strong && all_one) out.push_back(FamilyLabel::directed_cycle);
  if (strong && all_two_sym) out.push_back(FamilyLabel::symmetric_cycle);

  const Group& g = p.group;
  if (p.s0.size() == 1 && p.s1.size() == 1 && p.t0.size() == 1 && p.t1.size() == 1 &&
      p.t0[0] == p.t1[0]) {
    auto involution = [&](Element s) { return g.mul(s, s) == kIdentity; };
    if (involution(p.s0[0]) || involution(p.s1[0])) out.push_back(FamilyLabel::family_F);
  }
  return out;
}

std::optional<ClassGWitness> check_class_G(const MixedCayleyParams& p) {
  p.validate();
  const std::size_t n = p.group.order();
  if (p.t0.size() != 1 && p.t1.size() != 1) return std::nullopt;
  const std::string singleton = p.t0.size() == 1 ? "t0" : "t1";
  auto try_layer = [&](int condition, const ElementSet& mine,
                       const ElementSet& other) -> std::optional<ClassGWitness> {
    if (mine.size() < 1 || mine.size() > other.size()) return std::nullopt;
    ElementSet h(n, mine.members());
    h = h.with(kIdentity);
    if (!is_subgroup(p.group, h)) return std::nullopt;
    return ClassGWitness{condition, Subgroup{h, n}, singleton};
  };
  if (auto w = try_layer(1, p.s0, p.s1)) return w;
  return try_layer(2, p.s1, p.s0);
}

std::vector<std::string> super_lambda_class_names(int condition) {
  static const std::map<int, std::vector<std::string>> names = {
      {1, {"class G"}},          {2, {"class G"}},
      {3, {"1", "1'"}},          {4, {"2", "4'"}},
      {5, {"3", "3'"}},          {6, {"4", "2'"}},
      {7, {"5", "5'"}},          {8, {"6", "9'"}},
      {9, {"7", "12'"}},         {10, {"8", "8'"}},
      {11, {"9", "6'"}},         {12, {"10", "13'"}},
      {13, {"11", "11'"}},       {14, {"12", "7'"}},
      {15, {"13", "10'"}},       {16, {"14", "14'"}},
  };
  auto it = names.find(condition);
  return it == names.end() ? std::vector<std::string>{} : it->second;
}

SuperLambdaVerdict check_not_super_lambda(const MixedCayleyParams& p, std::size_t delta,
                                          SubgroupReading reading, std::size_t cap) {
  p.validate();
  SuperLambdaVerdict out;
  out.family_labels = detect_exceptional(p);
  if (!out.family_labels.empty()) {
    out.reason = std::string("excluded family: ") + to_string(out.family_labels.front());
    return out;
  }
  out.applicable = true;
  const auto subgroups = all_subgroups(p.group, cap);
  Ctx c(p, delta, reading);

  if (auto g = check_class_G(p)) {
    ConditionWitness w{g->h, {}};
    out.satisfied.push_back({g->condition, w});
  }
  for (const auto& cond : super_lambda_conditions()) {
    if (auto w = first_witness(c, cond, subgroups)) out.satisfied.push_back({cond.number, *w});
  }
  if (!out.satisfied.empty()) {
    out.not_super_lambda = true;
    out.condition = out.satisfied.front().condition;
    out.witness = out.satisfied.front().witness;
    out.class_names = super_lambda_class_names(*out.condition);
    const bool in_g = *out.condition <= 2;
    out.family_labels.push_back(in_g ? FamilyLabel::class_G : FamilyLabel::class_L);
    if (*out.condition == 16)
      out.notes.push_back("coset clause read as t0'H ∩ t0H = ∅; only t0 != t0' is required");
    if (*out.condition == 13)
      out.notes.push_back("T1^-1 t0 read as a subset of H");
    if (*out.condition == 15)
      out.notes.push_back("t1 T^-1 read as t1 T1^-1");
    if (*out.condition >= 3 && out.witness->h.order() == 1)
      out.notes.push_back("witness uses the trivial subgroup");
  }
  return out;
}

bool super_lambda_condition_holds(const MixedCayleyParams& p, std::size_t delta,
                                  int condition, const ConditionWitness& w,
                                  SubgroupReading reading) {
  if (condition == 1 || condition == 2) {
    auto g = check_class_G(p);
    if (!g) return false;
    // Either layer may carry the witness; re-check the requested one.
    const ElementSet& mine = condition == 1 ? p.s0 : p.s1;
    const ElementSet& other = condition == 1 ? p.s1 : p.s0;
    if (mine.empty() || mine.size() > other.size()) return false;
    ElementSet h = ElementSet(p.group.order(), mine.members()).with(kIdentity);
    return is_subgroup(p.group, h) && h == w.h.elements;
  }
  const Condition* cond = find_condition(super_lambda_conditions(), condition);
  if (!cond) throw Error(ErrorKind::invalid_input, "no such condition: " + std::to_string(condition));
  Ctx c(p, delta, reading);
  return check_given(c, *cond, w);
}

// ---------------------------------------------------------------------------

std::string GammaLabel::name() const {
  return std::to_string(class_id) + (sign == Sign::negative ? "'" : "");
}

GammaLabel gamma_equivalent(const GammaLabel& label) {
  static const int pos_to_neg[5] = {0, 1, 4, 3, 2};  // 1->1', 2->4', 3->3', 4->2'
  return GammaLabel{pos_to_neg[label.class_id],
                    label.sign == Sign::positive ? Sign::negative : Sign::positive};
}

GammaOutcome gamma_label(const MixedCayleyParams& p, const AtomReport& atoms,
                         std::size_t delta) {
  GammaOutcome out;
  if (atoms.lambda >= delta) return out;
  if (atoms.atoms.empty()) {
    out.violation = "no atoms";
    return out;
  }
  const std::size_t n = p.group.order();
  const Digraph x = build_mixed(p);
  std::optional<DeficitVector> first;
  for (const auto& atom : atoms.atoms) {
    const LayerSplit split = layer_split(atom.vertices, n);
    if (split.layer0 != split.layer1 || split.layer0 >= delta) {
      out.violation = "atom layer split (" + std::to_string(split.layer0) + "," +
                      std::to_string(split.layer1) + ") is not balanced below delta";
      return out;
    }
    const auto prof = degree_profile(x, atom.vertices, n);
    if (!prof) {
      out.violation = "atom induces non-constant degrees";
      return out;
    }
    DeficitVector d{long(p.s0.size()) - long(prof->r0), long(p.t0.size()) - long(prof->p),
                    long(p.s1.size()) - long(prof->r1), long(p.t1.size()) - long(prof->q)};
    if (first && !(*first == d)) {
      out.violation = "atoms disagree on their degree profile";
      return out;
    }
    first = d;
  }
  out.deficits = first;
  const DeficitVector& d = *first;
  auto is = [&](long a, long b, long c, long e) {
    return d.s0 == a && d.t0 == b && d.s1 == c && d.t1 == e;
  };
  int id = 0;
  if (atoms.sign == Sign::positive) {
    if (is(1, 0, 0, 0)) id = 1;
    else if (is(0, 1, 0, 0)) id = 2;
    else if (is(0, 0, 1, 0)) id = 3;
    else if (is(0, 0, 0, 1)) id = 4;
  } else {
    if (is(1, 0, 0, 0)) id = 1;
    else if (is(0, 0, 0, 1)) id = 2;
    else if (is(0, 0, 1, 0)) id = 3;
    else if (is(0, 1, 0, 0)) id = 4;
  }
  if (id == 0) {
    out.violation = "deficit vector (" + std::to_string(d.s0) + "," + std::to_string(d.t0) +
                    "," + std::to_string(d.s1) + "," + std::to_string(d.t1) +
                    ") matches no class";
    return out;
  }
  out.label = GammaLabel{id, atoms.sign};
  return out;
}

}  // namespace mixcay
