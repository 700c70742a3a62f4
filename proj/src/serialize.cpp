#include "qpsurf/serialize.hpp"

#include <stdexcept>

namespace qpsurf {

namespace {

void require_schema(const Json& j, const char* schema) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != schema) {
    throw std::invalid_argument(std::string("expected schema ") + schema);
  }
}

Json slot_json(Slot s) { return Json::array({s.face, s.corner}); }

Slot slot_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("slot must be [face, corner]");
  const Slot s{j[0].get<int>(), j[1].get<int>()};
  if (s.face < 0 || s.corner < 0 || s.corner > 2) throw std::invalid_argument("slot out of range");
  return s;
}

}  // namespace

Json to_json(const IdealTriangulation& t) {
  Json j;
  j["schema"] = "triangulation.v1";
  j["genus"] = t.surface().genus;
  j["num_marked"] = t.surface().num_marked;
  Json faces = Json::array();
  for (int f = 0; f < t.num_faces(); ++f) {
    faces.push_back(Json::array({slot_json({f, 0}), slot_json({f, 1}), slot_json({f, 2})}));
  }
  j["faces"] = std::move(faces);
  Json pairing = Json::array();
  for (const auto& e : t.edges()) pairing.push_back(Json::array({slot_json(e.first), slot_json(e.second)}));
  j["pairing"] = std::move(pairing);
  return j;
}

IdealTriangulation triangulation_from_json(const Json& j) {
  require_schema(j, "triangulation.v1");
  const MarkedSurface s{j.at("genus").get<int>(), j.at("num_marked").get<int>()};
  const std::size_t faces = j.at("faces").size();
  std::vector<int> partner(3 * faces, -1);
  for (const auto& pair : j.at("pairing")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("pairing entries must be slot pairs");
    const Slot a = slot_from(pair[0]), b = slot_from(pair[1]);
    if (a.index() >= static_cast<int>(partner.size()) || b.index() >= static_cast<int>(partner.size())) {
      throw std::invalid_argument("pairing refers to a missing face");
    }
    if (partner[a.index()] >= 0 || partner[b.index()] >= 0) throw std::invalid_argument("slot paired twice");
    partner[a.index()] = b.index();
    partner[b.index()] = a.index();
  }
  return IdealTriangulation(s, std::move(partner));
}

Json to_json(const Quiver& q) {
  Json j;
  j["schema"] = "quiver.v1";
  j["num_vertices"] = q.num_vertices();
  const Embedding* emb = q.embedding();
  Json vertices = Json::array();
  for (int v = 0; v < q.num_vertices(); ++v) {
    Json x;
    x["id"] = v;
    if (emb != nullptr) {
      const auto& label = emb->labels[v];
      if (const auto* e = std::get_if<EdgePoint>(&label)) {
        x["kind"] = "edge";
        x["edge"] = e->edge;
        x["position"] = e->position;
      } else {
        const auto& p = std::get<InteriorPoint>(label);
        x["kind"] = "interior";
        x["face"] = p.face;
        x["bary"] = p.bary;
      }
    } else {
      x["kind"] = "abstract";
    }
    vertices.push_back(std::move(x));
  }
  j["vertices"] = std::move(vertices);
  Json arrows = Json::array();
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    Json x;
    x["id"] = i;
    x["source"] = a.source;
    x["target"] = a.target;
    x["name"] = a.name;
    if (a.tag) x["tag"] = {{"black_triangle", a.tag->black_triangle}, {"side", a.tag->side}};
    arrows.push_back(std::move(x));
  }
  j["arrows"] = std::move(arrows);
  if (emb != nullptr) j["embedding"] = {{"rank", emb->rank}, {"triangulation", to_json(emb->triangulation)}};
  return j;
}

Quiver quiver_from_json(const Json& j) {
  require_schema(j, "quiver.v1");
  if (j.contains("embedding")) {
    const auto& e = j.at("embedding");
    Quiver q = inscribed_quiver(triangulation_from_json(e.at("triangulation")), e.at("rank").get<int>());
    const auto& arrows = j.at("arrows");
    bool same = static_cast<int>(arrows.size()) == q.num_arrows();
    for (int i = 0; same && i < q.num_arrows(); ++i) {
      same = arrows[i].at("source").get<int>() == q.arrow(i).source &&
             arrows[i].at("target").get<int>() == q.arrow(i).target;
    }
    if (!same) throw std::invalid_argument("arrows do not match the embedded quiver");
    return q;
  }
  Quiver q(j.at("num_vertices").get<int>());
  int expected = 0;
  for (const auto& a : j.at("arrows")) {
    if (a.contains("id") && a.at("id").get<int>() != expected) throw std::invalid_argument("arrow ids must be 0..n-1");
    std::optional<ArrowTag> tag;
    if (a.contains("tag")) tag = ArrowTag{a["tag"].at("black_triangle").get<int>(), a["tag"].at("side").get<int>()};
    q.add_arrow(a.at("source").get<int>(), a.at("target").get<int>(), a.value("name", std::string{}), tag);
    ++expected;
  }
  return q;
}

Json to_json(const Potential& w) {
  Json j;
  j["schema"] = "potential.v1";
  if (w.truncation() == Potential::kUnlimited) {
    j["truncation"] = nullptr;
  } else {
    j["truncation"] = w.truncation();
  }
  Json terms = Json::array();
  for (const auto& [word, c] : w.terms()) terms.push_back({{"word", word.arrows()}, {"coeff", c.to_string()}});
  j["terms"] = std::move(terms);
  return j;
}

Potential potential_from_json(const Json& j) {
  require_schema(j, "potential.v1");
  const auto& t = j.at("truncation");
  Potential w(t.is_null() ? Potential::kUnlimited : t.get<std::size_t>());
  for (const auto& term : j.at("terms")) {
    w.add(term.at("word").get<Path>(), NovikovScalar::parse(term.at("coeff").get<std::string>()));
  }
  return w;
}

}  // namespace qpsurf
