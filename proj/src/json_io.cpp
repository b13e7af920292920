#include "montes/json_io.hpp"

namespace montes {

Json to_json(const IntPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.get_str());
  return a;
}

IntPoly int_poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
  return IntPoly(std::move(c));
}

Json to_json(const FFElem& a) {
  if (a.field().level() == 0) return a.flat()[0];
  Json r = Json::array();
  for (std::size_t j = 0; j < a.field().degree(); ++j) r.push_back(to_json(a.coord(j)));
  return r;
}

FFElem ff_elem_from_json(const Json& j, const FieldHandle& K) {
  if (K->level() == 0) return K->from_int(j.get<long>());
  std::vector<FFElem> cs;
  for (const auto& x : j) cs.push_back(ff_elem_from_json(x, K->base()));
  return K->from_coords(cs);
}

Json to_json(const FFPoly& f) {
  Json r = Json::array();
  for (const auto& c : f.coeffs()) r.push_back(to_json(c));
  return r;
}

FFPoly ff_poly_from_json(const Json& j, const FieldHandle& K) {
  std::vector<FFElem> cs;
  for (const auto& x : j) cs.push_back(ff_elem_from_json(x, K));
  return FFPoly(K, std::move(cs));
}

Json to_json(const OMType& t) {
  Json j;
  j["psi0"] = to_json(t.psi0());
  Json lv = Json::array();
  for (const auto& L : t.levels()) {
    Json x;
    x["phi"] = to_json(L.phi);
    if (L.exact) {
      x["exact"] = true;
    } else {
      x["h"] = L.h;
      x["e"] = L.e;
      x["psi"] = to_json(L.psi);
      x["f"] = L.f;
    }
    x["V"] = L.V;
    x["m"] = L.m;
    lv.push_back(x);
  }
  j["levels"] = lv;
  return j;
}

OMType om_type_from_json(const Json& j, const Prime& p) {
  FieldHandle Fp = Field::prime_field(p);
  OMType t(p, ff_poly_from_json(j.at("psi0"), Fp));
  for (const auto& x : j.at("levels")) {
    IntPoly phi = int_poly_from_json(x.at("phi"));
    if (x.value("exact", false)) {
      t = t.extended_exact(std::move(phi));
    } else {
      FFPoly psi = ff_poly_from_json(x.at("psi"), t.field(t.order() + 1));
      t = t.extended(std::move(phi), x.at("h").get<long>(), x.at("e").get<long>(), std::move(psi));
    }
    const OMLevel& L = t.last();
    if (x.contains("V") && x["V"].get<long>() != L.V) throw Error(ErrorKind::InconsistentLevels, "stored V disagrees");
    if (x.contains("m") && x["m"].get<long>() != L.m) throw Error(ErrorKind::InconsistentLevels, "stored m disagrees");
  }
  return t;
}

Json to_json(const Side& s) {
  Json j;
  if (s.neg_infinite) {
    j["slope"] = "-inf";
  } else {
    j["slope"] = to_string(s.slope());
    j["h"] = s.h;
    j["e"] = s.e;
  }
  j["left"] = {s.left.x, s.left.y.is_infinite() ? Json("inf") : Json(s.left.y.value())};
  j["right"] = {s.right.x, s.right.y.value()};
  j["length"] = s.length();
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["kind"] = kind_name(w.kind);
  j["level"] = w.level;
  if (!w.sides.empty()) {
    Json a = Json::array();
    for (const auto& s : w.sides) a.push_back(to_json(s));
    j["sides"] = a;
  }
  if (!w.factors.empty()) {
    Json a = Json::array();
    for (const auto& f : w.factors) a.push_back(to_json(f));
    j["factors"] = a;
  }
  if (w.type) j["type"] = to_json(*w.type);
  return j;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["n"] = r.n;
  j["depth"] = r.depth;
  j["f0"] = r.f0;
  j["e"] = r.e;
  j["f"] = r.f;
  j["mu"] = to_string(r.mu);
  j["delta0"] = to_string(r.delta0);
  j["delta"] = r.delta;
  j["rho"] = to_string(r.rho);
  j["width"] = r.width;
  Json lv = Json::array();
  for (const auto& L : r.levels) lv.push_back({{"e", L.e}, {"f", L.f}, {"h", L.h}, {"m", L.m}, {"V", L.V}});
  j["levels"] = lv;
  return j;
}

}  // namespace montes
