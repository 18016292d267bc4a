#include "localepatch/io.hpp"

#include <fstream>
#include <sstream>

#include "localepatch/catalog.hpp"
#include "localepatch/errors.hpp"

namespace localepatch {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

ordered_json parse_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("input is not valid JSON");
  return doc;
}

void reject_unknown_fields(const ordered_json& doc,
                           std::initializer_list<const char*> known) {
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) throw ParseError("unknown field '" + key + "'");
  }
}

std::string string_field(const ordered_json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_string())
    throw ParseError(std::string("field '") + field + "' must be a string");
  return doc[field].get<std::string>();
}

Element label_id(const std::vector<std::string>& labels, const std::string& l,
                 const char* what) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<Element>(i);
  throw ParseError(std::string(what) + " names unknown element '" + l + "'");
}

std::vector<std::pair<Element, Element>> label_pairs(const ordered_json& arr,
                                                     const std::vector<std::string>& labels,
                                                     const char* what) {
  if (!arr.is_array())
    throw ParseError(std::string("field '") + what + "' must be an array of pairs");
  std::vector<std::pair<Element, Element>> out;
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw ParseError(std::string(what) + " entries must be [label, label] pairs");
    out.emplace_back(label_id(labels, entry[0].get<std::string>(), what),
                     label_id(labels, entry[1].get<std::string>(), what));
  }
  return out;
}

NamedPoset poset_from_doc(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("lattice document must be a JSON object");
  reject_unknown_fields(doc, {"name", "elements", "hasse", "leq"});
  const std::string name = string_field(doc, "name");

  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw ParseError("field 'elements' must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw ParseError("field 'elements' must be an array of labels");
    labels.push_back(e.get<std::string>());
  }

  const bool has_hasse = doc.contains("hasse");
  if (has_hasse == doc.contains("leq"))
    throw ParseError("exactly one of 'hasse' and 'leq' is required");
  if (has_hasse)
    return {name, FinitePoset::from_hasse(labels, label_pairs(doc["hasse"], labels, "hasse"))};
  return {name, FinitePoset::from_relation(labels, label_pairs(doc["leq"], labels, "leq"))};
}

ordered_json labels_of(const FiniteFrame& l, const std::vector<Element>& es) {
  ordered_json arr = ordered_json::array();
  for (Element e : es) arr.push_back(l.label(e));
  return arr;
}

std::string joined_labels(const FiniteFrame& l, const std::vector<Element>& es) {
  std::string s;
  for (size_t i = 0; i < es.size(); ++i) {
    if (i) s += " ";
    s += l.label(es[i]);
  }
  return s;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

const char* mode_name(WayBelowMode m) {
  switch (m) {
    case WayBelowMode::Exhaustive: return "exhaustive";
    case WayBelowMode::FastPath: return "fastpath";
    default: return "auto";
  }
}

ordered_json map_pairs(const MonotoneMap& h) {
  ordered_json arr = ordered_json::array();
  for (Element u = 0; u < h.source->size(); ++u)
    arr.push_back({h.source->label(u), h.target->label(h(u))});
  return arr;
}

}  // namespace

NamedPoset load_poset(const std::string& text) {
  const std::string bare = trimmed(text);
  if (is_catalog_poset(bare)) return {bare, catalog_poset(bare)};
  const ordered_json doc = parse_json(text);
  if (doc.is_string()) {
    const std::string name = doc.get<std::string>();
    if (is_catalog_poset(name)) return {name, catalog_poset(name)};
    throw ParseError("'" + name + "' is not a catalog name");
  }
  return poset_from_doc(doc);
}

NamedPoset load_poset_file(const std::string& path) { return load_poset(read_file(path)); }

std::string poset_to_json(const std::string& name, const FinitePoset& p) {
  ordered_json doc;
  doc["name"] = name;
  doc["elements"] = p.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : p.hasse_edges())
    edges.push_back({p.label(u), p.label(v)});
  doc["hasse"] = edges;
  return doc.dump(2) + "\n";
}

LoadedHom load_hom(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("hom document must be a JSON object");
  reject_unknown_fields(doc, {"name", "source", "target", "table"});

  auto frame_of = [](const ordered_json& spec, const char* side) {
    if (spec.is_string()) {
      const std::string name = spec.get<std::string>();
      if (!is_catalog_frame(name))
        throw ParseError("'" + name + "' is not a catalog lattice");
      return std::make_unique<const FiniteFrame>(catalog_frame(name));
    }
    const NamedPoset np = poset_from_doc(spec);
    (void)side;
    return std::make_unique<const FiniteFrame>(frame_from_poset(np.poset));
  };
  if (!doc.contains("source") || !doc.contains("target"))
    throw ParseError("hom document needs 'source' and 'target'");

  LoadedHom out;
  out.name = doc.contains("name") ? string_field(doc, "name") : "";
  out.source = frame_of(doc["source"], "source");
  out.target = frame_of(doc["target"], "target");

  if (!doc.contains("table") || !doc["table"].is_array())
    throw ParseError("field 'table' must be an array of pairs");
  std::vector<Element> table(out.source->size(), -1);
  for (const auto& entry : doc["table"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw ParseError("table entries must be [label, label] pairs");
    const Element u =
        label_id(out.source->poset().labels(), entry[0].get<std::string>(), "table");
    const Element v =
        label_id(out.target->poset().labels(), entry[1].get<std::string>(), "table");
    if (table[u] != -1) throw ParseError("table assigns '" + out.source->label(u) + "' twice");
    table[u] = v;
  }
  for (Element u = 0; u < out.source->size(); ++u)
    if (table[u] == -1)
      throw ParseError("table misses '" + out.source->label(u) + "'");

  out.map = make_monotone_map(*out.source, *out.target, std::move(table));
  return out;
}

LoadedHom load_hom_file(const std::string& path) { return load_hom(read_file(path)); }

nlohmann::ordered_json classification_json(const FiniteFrame& l,
                                           const ClassificationReport& r) {
  ordered_json doc;
  doc["size"] = l.size();
  doc["compact_opens"] = labels_of(l, r.compact_opens);
  doc["clopens"] = labels_of(l, r.clopens);
  doc["is_compact"] = r.is_compact;
  doc["is_spectral"] = r.is_spectral;
  doc["is_stone"] = r.is_stone;
  doc["conditions"] = {{"sp1", r.sp1}, {"sp2", r.sp2}, {"sp3", r.sp3}, {"sp4", r.sp4},
                       {"st1", r.st1}, {"st2", r.st2}, {"st3", r.st3}};
  ordered_json ws = ordered_json::array();
  for (const auto& w : r.witnesses) {
    ordered_json entry;
    entry["condition"] = w.condition;
    entry["elements"] = labels_of(l, w.elements);
    entry["detail"] = w.detail;
    ws.push_back(entry);
  }
  doc["witnesses"] = ws;
  doc["mode"] = mode_name(r.mode_used);
  doc["smallness"] = r.smallness_note;
  return doc;
}

std::string classification_text(const FiniteFrame& l, const ClassificationReport& r) {
  std::ostringstream out;
  out << "size: " << l.size() << "\n";
  out << "compact opens: " << joined_labels(l, r.compact_opens) << "\n";
  out << "clopens: " << joined_labels(l, r.clopens) << "\n";
  out << "compact: " << yesno(r.is_compact) << "\n";
  out << "spectral: " << yesno(r.is_spectral) << " (sp1=" << yesno(r.sp1)
      << " sp2=" << yesno(r.sp2) << " sp3=" << yesno(r.sp3) << " sp4=" << yesno(r.sp4)
      << ")\n";
  out << "stone: " << yesno(r.is_stone) << " (st1=" << yesno(r.st1)
      << " st2=" << yesno(r.st2) << " st3=" << yesno(r.st3) << ")\n";
  for (const auto& w : r.witnesses)
    out << "witness " << w.condition << " [" << joined_labels(l, w.elements)
        << "]: " << w.detail << "\n";
  out << "mode: " << mode_name(r.mode_used) << "\n";
  out << "smallness: " << r.smallness_note << "\n";
  return out.str();
}

nlohmann::ordered_json nucleus_json(const Nucleus& j) {
  const FiniteFrame& l = *j.frame;
  ordered_json doc;
  ordered_json table = ordered_json::array();
  std::vector<Element> fixed;
  for (Element u = 0; u < l.size(); ++u) {
    table.push_back({l.label(u), l.label(j(u))});
    if (j(u) == u) fixed.push_back(u);
  }
  doc["table"] = table;
  doc["fixed_points"] = labels_of(l, fixed);
  doc["certificate"] = {{"inflationary", j.certificate.inflationary},
                        {"meet_preserving", j.certificate.meet_preserving},
                        {"idempotent", j.certificate.idempotent},
                        {"scott_continuous", j.certificate.scott_continuous}};
  return doc;
}

std::string nucleus_text(const Nucleus& j) {
  const FiniteFrame& l = *j.frame;
  std::ostringstream out;
  out << "nucleus:";
  for (Element u = 0; u < l.size(); ++u)
    out << " " << l.label(u) << "->" << l.label(j(u));
  out << "\n";
  out << "certificate: inflationary=" << yesno(j.certificate.inflationary)
      << " meet_preserving=" << yesno(j.certificate.meet_preserving)
      << " idempotent=" << yesno(j.certificate.idempotent)
      << " scott_continuous=" << yesno(j.certificate.scott_continuous) << "\n";
  return out.str();
}

nlohmann::ordered_json patch_json(const PatchFrame& p, const FrameHom& eps,
                                  const ClassificationReport& patch_report) {
  const FiniteFrame& base = *p.base;
  const FiniteFrame& pf = p.frame();
  ordered_json doc;
  doc["base_size"] = base.size();
  doc["patch_size"] = pf.size();
  ordered_json carrier = ordered_json::array();
  for (Element e = 0; e < pf.size(); ++e) {
    ordered_json entry;
    entry["id"] = e;
    entry["label"] = pf.label(e);
    ordered_json gens = ordered_json::array();
    for (int gi : p.generator_joins[e]) gens.push_back(gi);
    entry["generator_join"] = gens;
    carrier.push_back(entry);
  }
  doc["carrier"] = carrier;
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators) {
    ordered_json entry;
    entry["closed"] = base.label(g.k1);
    entry["open"] = base.label(g.k2);
    entry["element"] = g.element;
    gens.push_back(entry);
  }
  doc["generators"] = gens;
  doc["counit"] = map_pairs(eps.map);
  doc["counit_right_adjoint"] = map_pairs(eps.right_adjoint);
  doc["classification"] = classification_json(pf, patch_report);
  return doc;
}

std::string patch_text(const PatchFrame& p, const FrameHom& eps,
                       const ClassificationReport& patch_report) {
  const FiniteFrame& base = *p.base;
  const FiniteFrame& pf = p.frame();
  std::ostringstream out;
  out << "base size: " << base.size() << "\n";
  out << "patch size: " << pf.size() << "\n";
  for (Element e = 0; e < pf.size(); ++e)
    out << "  " << e << ": " << pf.label(e) << "\n";
  out << "counit:";
  for (Element u = 0; u < base.size(); ++u)
    out << " " << base.label(u) << "->" << pf.label(eps(u));
  out << "\n";
  out << "patch classification:\n" << classification_text(pf, patch_report);
  return out.str();
}

nlohmann::ordered_json lift_json(const FrameHom& f, const LiftResult& r) {
  ordered_json doc;
  doc["source_size"] = f.source().size();
  doc["target_size"] = f.target().size();
  doc["patch_size"] = r.patch.frame().size();
  doc["hom"] = map_pairs(f.map);
  doc["lift"] = map_pairs(r.lift.map);
  doc["commutes"] = r.commutes;
  doc["unique"] = r.unique;
  doc["exhaustive_search_done"] = r.exhaustive_search_done;
  doc["uniqueness_search_bound"] = r.uniqueness_search_bound;
  return doc;
}

std::string lift_text(const FrameHom& f, const LiftResult& r) {
  const FiniteFrame& pf = r.patch.frame();
  std::ostringstream out;
  out << "hom:";
  for (Element u = 0; u < f.source().size(); ++u)
    out << " " << f.source().label(u) << "->" << f.target().label(f(u));
  out << "\n";
  out << "patch size: " << pf.size() << "\n";
  out << "lift:";
  for (Element e = 0; e < pf.size(); ++e)
    out << " " << pf.label(e) << "->" << f.target().label(r.lift(e));
  out << "\n";
  out << "commutes: " << yesno(r.commutes) << "\n";
  out << "unique: " << yesno(r.unique)
      << (r.exhaustive_search_done ? " (generator argument and exhaustive search)"
                                   : " (generator argument)")
      << "\n";
  return out.str();
}

}  // namespace localepatch
