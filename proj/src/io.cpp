#include "iasgl/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace iasgl {

Graph Document::graph() const { return Graph::create(vertices, edges); }

Labeling Document::labeling() const {
  if (!ground_set) throw Error("document has no ground_set");
  for (const auto& v : vertices)
    if (!labels.contains(v)) throw Error("vertex " + v + " has no label");
  return Labeling(GroundSet(*ground_set), labels);
}

Document make_document(const Graph& g, const std::optional<Labeling>& f) {
  Document d;
  d.vertices = g.vertex_ids();
  for (const auto& [u, v] : g.edges()) d.edges.emplace_back(g.id(u), g.id(v));
  if (f) {
    d.ground_set = f->ground().base();
    d.labels = f->assignment();
  }
  return d;
}

Json to_json(const IntegerSet& s) {
  Json j = Json::array();
  for (Element e : s) j.push_back(e);
  return j;
}

IntegerSet integer_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error("set must be a JSON array");
  std::vector<Element> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
      throw Error("set elements must be non-negative integers");
    out.push_back(e.get<Element>());
  }
  return IntegerSet(std::move(out));
}

Json to_json(const Document& d) {
  Json j = Json::object();
  if (d.ground_set) j["ground_set"] = to_json(*d.ground_set);
  Json vs = Json::array();
  for (const auto& id : d.vertices) {
    Json v = {{"id", id}};
    if (auto it = d.labels.find(id); it != d.labels.end()) v["label"] = to_json(it->second);
    vs.push_back(std::move(v));
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& [u, v] : d.edges) es.push_back({u, v});
  j["edges"] = std::move(es);

  const bool labelled = !d.edges.empty() && std::all_of(d.edges.begin(), d.edges.end(), [&](const auto& e) {
    return d.labels.contains(e.first) && d.labels.contains(e.second);
  });
  if (labelled) {
    Json el = Json::array();
    for (const auto& [u, v] : d.edges)
      el.push_back({{"edge", {u, v}}, {"label", to_json(sumset(d.labels.at(u), d.labels.at(v)))}});
    j["edge_labels"] = std::move(el);
  }
  return j;
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) throw Error("document must be a JSON object");
  Document d;
  try {
    if (j.contains("ground_set")) d.ground_set = integer_set_from_json(j.at("ground_set"));
    if (!j.contains("vertices") || !j.at("vertices").is_array()) throw Error("document needs a vertices array");
    for (const auto& v : j.at("vertices")) {
      if (v.is_string()) {
        d.vertices.push_back(v.get<std::string>());
        continue;
      }
      if (!v.is_object() || !v.contains("id") || !v.at("id").is_string())
        throw Error("vertex entries need a string id");
      VertexId id = v.at("id").get<std::string>();
      if (v.contains("label") && !v.at("label").is_null()) d.labels[id] = integer_set_from_json(v.at("label"));
      d.vertices.push_back(std::move(id));
    }
    if (!j.contains("edges") || !j.at("edges").is_array()) throw Error("document needs an edges array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw Error("edges must be pairs of vertex ids");
      d.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed document: ") + ex.what());
  }
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(path + ": " + ex.what());
  }
  return document_from_json(j);
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

Json to_json(const Violation& v) {
  Json sets = Json::array();
  for (const auto& s : v.sets) sets.push_back(to_json(s));
  return {{"rule", v.rule}, {"detail", v.detail}, {"vertices", v.vertices}, {"sets", std::move(sets)}};
}

Json to_json(const std::vector<Violation>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

Json to_json(const SearchOutcome& outcome) {
  Json witnesses = Json::array();
  for (const auto& w : outcome.witnesses) {
    Json labels = Json::object();
    for (const auto& [id, s] : w.assignment()) labels[id] = to_json(s);
    witnesses.push_back({{"ground_set", to_json(w.ground().base())}, {"labels", std::move(labels)}});
  }
  const auto& s = outcome.stats;
  return {{"status", to_string(outcome.status)},
          {"stats",
           {{"nodes", s.nodes},
            {"prunes",
             {{"P1", s.pruned_zero_degree},
              {"P2", s.pruned_non_summand},
              {"P3", s.pruned_edges},
              {"P4", s.pruned_coverage}}}}},
          {"gate", {{"passed", outcome.gate.passed}, {"violations", to_json(outcome.gate.violations)}}},
          {"witnesses", std::move(witnesses)}};
}

Json to_json(const Classification& c) {
  auto family = [](const std::vector<IntegerSet>& sets) {
    Json j = Json::array();
    for (const auto& s : sets) j.push_back(to_json(s));
    return j;
  };
  return {{"ground_set", to_json(c.ground.base())},
          {"mode", to_string(c.mode)},
          {"non_sumsets", family(c.non_sumsets)},
          {"non_summands", family(c.non_summands)},
          {"neither", family(c.neither)},
          {"counts",
           {{"non_sumsets", c.non_sumsets.size()},
            {"non_summands", c.non_summands.size()},
            {"neither", c.neither.size()}}}};
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const Graph& g, const std::optional<Labeling>& f) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& id : g.vertex_ids()) {
    out << "  " << quoted(id);
    if (f) out << " [label=" << quoted(f->at(id).to_string()) << "]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << quoted(g.id(u)) << " -- " << quoted(g.id(v));
    if (f) out << " [label=" << quoted(induced_edge_label(*f, g.id(u), g.id(v)).to_string()) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace iasgl
