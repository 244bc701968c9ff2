#include "gtkey/io.hpp"

namespace gtkey {

Json to_json(const Partition& p) { return Json(p.vec()); }
Json to_json(const WeightVector& w) { return Json(w.vec()); }
Json to_json(const Permutation& p) { return Json(p.one_line()); }
Json to_json(const Word& w) { return Json(w.letters); }

Json to_json(const GTPattern& p) { return Json{{"rows", p.rows()}}; }
Json to_json(const SkewGTPattern& p) { return Json{{"rows", p.rows()}}; }

Json to_json(const SSYT& t) { return Json{{"shape", t.shape.vec()}, {"rows", t.rows}}; }

Json to_json(const SkewSSYT& t) {
  return Json{{"shape", t.outer.vec()}, {"inner", t.inner.vec()}, {"rows", t.rows}};
}

Json to_json(const KoganFace& f) {
  Json cells = Json::array();
  for (const auto& [i, j] : f.cells) cells.push_back({i, j});
  return Json{{"n", f.n}, {"cells", cells}};
}

Json to_json(const MultiPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json{{"coeff", c.get_str()}, {"exp", e}});
  return out;
}

Json to_json(const UniPoly& p) {
  return Json{{"coeffs", p.coeff_strings()}, {"string", p.to_string()}, {"scaled", p.to_scaled_string()}};
}

Json to_json(const CountedObject& o) {
  Json j{{"object", to_string(o.kind)}, {"lambda", to_json(o.lambda)}};
  switch (o.kind) {
    case ObjectKind::gt: break;
    case ObjectKind::skew:
      j["mu"] = to_json(o.mu);
      j["n"] = o.n;
      break;
    case ObjectKind::gt_weight: j["weight"] = to_json(o.weight); break;
    case ObjectKind::skew_weight:
      j["mu"] = to_json(o.mu);
      j["weight"] = to_json(o.weight);
      break;
    case ObjectKind::key_complex: j["sigma"] = to_json(o.sigma); break;
    case ObjectKind::kogan_face: j["face"] = to_json(o.face); break;
  }
  return j;
}

Json to_json(const EhrhartResult& r) {
  Json samples = Json::array();
  for (const auto& [k, c] : r.samples) samples.push_back({{"k", k}, {"count", c.get_str()}});
  Json verify = Json::array();
  for (const auto& v : r.verify_points)
    verify.push_back({{"k", v.k}, {"count", v.count.get_str()}, {"predicted", v.predicted.get_str()}, {"matched", v.matched}});
  return Json{{"object", to_json(r.object)},  {"poly", to_json(r.poly)},    {"degree_bound", r.degree_bound},
              {"samples", samples},           {"verify_points", verify},    {"nonneg", r.nonneg},
              {"valid", r.valid},             {"empty", r.empty}};
}

GTPattern pattern_from_json(const Json& j) {
  try {
    return GTPattern(j.at("rows").get<std::vector<std::vector<Entry>>>());
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad pattern JSON: ") + e.what());
  }
}

KoganFace face_from_json(const Json& j) {
  try {
    std::vector<EqualityCell> cells;
    for (const auto& c : j.at("cells")) cells.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return KoganFace::make(j.at("n").get<int>(), std::move(cells));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad face JSON: ") + e.what());
  }
}

MultiPoly poly_from_json(const Json& j, int nvars) {
  MultiPoly f(nvars);
  try {
    for (const auto& t : j) f.add_term(t.at("exp").get<Exponent>(), parse_rational(t.at("coeff").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad polynomial JSON: ") + e.what());
  }
  return f;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace gtkey
