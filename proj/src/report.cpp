#include "mixcay/report.hpp"

#include "mixcay/error.hpp"

namespace mixcay {

namespace {

Json elements(const ElementSet& s) { return Json(s.members()); }

Json arcs_to_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

std::vector<Element> read_set(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return {};
  if (!j[key].is_array()) throw Error(ErrorKind::parse, std::string(key) + " must be an array");
  return j[key].get<std::vector<Element>>();
}

Json checks_to_json(const std::vector<PropertyOutcome>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json e = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    out.push_back(std::move(e));
  }
  return out;
}

Json gamma_to_json(const GammaOutcome& g) {
  Json out;
  out["label"] = g.label ? Json(g.label->name()) : Json(nullptr);
  if (g.label) out["equivalent"] = gamma_equivalent(*g.label).name();
  if (g.deficits)
    out["deficits"] = {{"s0", g.deficits->s0}, {"t0", g.deficits->t0},
                       {"s1", g.deficits->s1}, {"t1", g.deficits->t1}};
  if (!g.violation.empty()) out["violation"] = g.violation;
  return out;
}

Json labels_to_json(const std::vector<FamilyLabel>& labels) {
  Json out = Json::array();
  for (auto l : labels) out.push_back(to_string(l));
  return out;
}

}  // namespace

Json params_to_json(const MixedCayleyParams& p) {
  Json j;
  j["group"] = p.group.name();
  j["order"] = p.group.order();
  j["s0"] = elements(p.s0);
  j["s1"] = elements(p.s1);
  j["t0"] = elements(p.t0);
  j["t1"] = elements(p.t1);
  return j;
}

MixedCayleyParams params_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "params document must be an object");
  try {
    Group g = [&] {
      if (j.contains("table"))
        return Group::from_table(j["table"].get<std::vector<std::vector<Element>>>(),
                                 j.value("group", std::string("table")));
      if (!j.contains("group")) throw Error(ErrorKind::parse, "missing \"group\"");
      return parse_group_spec(j["group"].get<std::string>());
    }();
    return make_params(std::move(g), read_set(j, "s0"), read_set(j, "s1"), read_set(j, "t0"),
                       read_set(j, "t1"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

Json fragment_to_json(const ArcFragment& f) {
  return {{"vertices", f.vertices.members()},
          {"sign", to_string(f.sign)},
          {"boundary_size", f.boundary_size}};
}

Json atom_report_to_json(const AtomReport& r) {
  Json j;
  j["sign"] = to_string(r.sign);
  j["lambda"] = r.lambda;
  auto list = [](const std::vector<ArcFragment>& fs, const std::vector<LayerSplit>& splits,
                 const std::vector<std::optional<DegreeProfile>>& profiles) {
    Json out = Json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Json e = fragment_to_json(fs[i]);
      if (i < splits.size()) e["layer_split"] = {splits[i].layer0, splits[i].layer1};
      if (i < profiles.size()) {
        const auto& pr = profiles[i];
        e["degree_profile"] =
            pr ? Json{{"r0", pr->r0}, {"r1", pr->r1}, {"p", pr->p}, {"q", pr->q}} : Json(nullptr);
      }
      out.push_back(std::move(e));
    }
    return out;
  };
  j["atoms"] = list(r.atoms, r.atom_layer_split, r.induced_degree_profile);
  // An empty list means no fragment with two or more vertices exists.
  j["superatoms"] = list(r.superatoms, r.superatom_layer_split, r.superatom_degree_profile);
  return j;
}

Json witness_to_json(const ConditionWitness& w) {
  Json j;
  j["subgroup"] = w.h.elements.members();
  Json el = Json::object();
  for (const auto& e : w.elements) el[e.role] = e.value;
  j["elements"] = std::move(el);
  return j;
}

Json max_lambda_to_json(const MaxLambdaVerdict& v) {
  Json j;
  j["not_max_lambda"] = v.not_max_lambda;
  j["condition"] = v.condition ? Json(*v.condition) : Json(nullptr);
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  return j;
}

Json super_lambda_to_json(const SuperLambdaVerdict& v) {
  Json j;
  j["applicable"] = v.applicable;
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["not_super_lambda"] = v.not_super_lambda;
  j["condition"] = v.condition ? Json(*v.condition) : Json(nullptr);
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  Json sat = Json::array();
  for (const auto& s : v.satisfied)
    sat.push_back({{"condition", s.condition}, {"witness", witness_to_json(s.witness)}});
  j["satisfied"] = std::move(sat);
  j["class_names"] = v.class_names;
  j["family_labels"] = labels_to_json(v.family_labels);
  j["notes"] = v.notes;
  return j;
}

Json analysis_document(const MixedCayleyParams& p, const InstanceAnalysis& a) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "analysis";
  j["params"] = params_to_json(p);
  j["vertex_count"] = a.vertex_count;
  j["arc_count"] = a.arc_count;
  const auto& c = a.connectivity;
  Json conn;
  conn["lambda"] = c.lambda;
  conn["delta_plus"] = c.delta_plus;
  conn["delta_minus"] = c.delta_minus;
  conn["delta"] = c.delta;
  conn["is_max_lambda"] = c.is_max_lambda;
  conn["is_super_lambda"] = c.is_super_lambda;
  conn["witness_cut"] = arcs_to_json(c.witness_cut);
  conn["nontrivial_cut_witness"] =
      c.nontrivial_cut_witness ? fragment_to_json(*c.nontrivial_cut_witness) : Json(nullptr);
  j["connectivity"] = std::move(conn);
  if (a.positive && a.negative) {
    Json combined = Json::array();
    for (const auto& f : combined_superatoms(*a.positive, *a.negative))
      combined.push_back(fragment_to_json(f));
    j["atoms"] = {{"positive", atom_report_to_json(*a.positive)},
                  {"negative", atom_report_to_json(*a.negative)},
                  {"superatoms_both_signs", std::move(combined)}};
    j["atom_checks"] = {{"positive", checks_to_json(a.positive_checks)},
                        {"negative", checks_to_json(a.negative_checks)}};
  } else {
    j["atoms"] = nullptr;
    j["atoms_skipped"] = a.atoms_skipped;
  }
  if (a.gamma_positive && a.gamma_negative)
    j["gamma"] = {{"positive", gamma_to_json(*a.gamma_positive)},
                  {"negative", gamma_to_json(*a.gamma_negative)}};
  j["family_labels"] = labels_to_json(a.family_labels);
  return j;
}

Json classification_document(const MixedCayleyParams& p, std::size_t delta,
                             const MaxLambdaVerdict& max_lambda,
                             const SuperLambdaVerdict& super_lambda) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "classification";
  j["params"] = params_to_json(p);
  j["delta"] = delta;
  j["max_lambda"] = max_lambda_to_json(max_lambda);
  j["super_lambda"] = super_lambda_to_json(super_lambda);
  return j;
}

Json classify_document(const MixedCayleyParams& p, SubgroupReading reading) {
  if (!is_strongly_connected(build_mixed(p)))
    throw Error(ErrorKind::not_strong, "the digraph is not strongly connected");
  const std::size_t delta = mixed_min_degree(p);
  const MaxLambdaVerdict mv = check_not_max_lambda(p, delta);
  SuperLambdaVerdict sv;
  if (mv.not_max_lambda) {
    sv.reason = "not max-lambda";
    sv.family_labels = detect_exceptional(p);
  } else {
    sv = check_not_super_lambda(p, delta, reading);
  }
  return classification_document(p, delta, mv, sv);
}

Json graph_document(const MixedCayleyParams& p, const Digraph& x) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "graph";
  j["params"] = params_to_json(p);
  Json vs = Json::array();
  for (Vertex v = 0; v < x.vertex_count(); ++v) vs.push_back({{"id", v}, {"label", x.label(v)}});
  j["vertices"] = std::move(vs);
  j["arcs"] = arcs_to_json(x.arcs());
  return j;
}

Digraph graph_from_json(const Json& j) {
  try {
    if (!j.contains("vertices") || !j.contains("arcs"))
      throw Error(ErrorKind::parse, "graph document needs \"vertices\" and \"arcs\"");
    const auto& vs = j["vertices"];
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i]["id"].get<std::size_t>() != i)
        throw Error(ErrorKind::parse, "vertex ids must be 0..n-1 in order");
      labels.push_back(vs[i].value("label", std::to_string(i)));
    }
    std::vector<Arc> arcs;
    for (const auto& a : j["arcs"]) {
      if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::parse, "arc must be [tail, head]");
      arcs.push_back({a[0].get<Vertex>(), a[1].get<Vertex>()});
    }
    return Digraph(vs.size(), std::move(arcs), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

}  // namespace mixcay
