#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nakct/singularity.hpp"

namespace nakct {

using Json = nlohmann::json;

inline Json to_json(const Indec& x) { return Json::array({x.i, x.j}); }

inline Json to_json(const std::vector<Indec>& xs) {
  Json a = Json::array();
  for (const Indec& x : xs) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const Algebra& A) {
  return Json{{"kind", to_string(A.kind())}, {"kupisch", A.kupisch()}};
}

inline Json to_json(const Subcategory& c) { return Json{{"members", to_json(c.members)}}; }

inline Json to_json(const Decomposition& d) {
  Json a = Json::array();
  for (const Piece& p : d.pieces) a.push_back(Json::array({p.start, p.end, p.loewy}));
  return a;
}

inline Json to_json(const ClassificationResult& r) {
  Json out{{"exists", r.exists}, {"case", to_string(r.kind)}};
  out["pieces"] = r.decomposition ? to_json(*r.decomposition) : Json::array();
  if (r.decomposition) out["self_glued"] = r.decomposition->self_glued;
  Json subs = Json::array();
  for (const Subcategory& c : r.subcategories) subs.push_back(to_json(c.members));
  out["subcategories"] = subs;
  return out;
}

inline Json to_json(const VerifyReport& rep) {
  Json fs = Json::array();
  for (const Failure& f : rep.failures) {
    Json j{{"kind", to_string(f.kind)}, {"module", to_json(f.x)}};
    if (f.kind == FailureKind::OrthogonalityFailure) {
      j["to"] = to_json(f.y);
      j["degree"] = f.degree;
    }
    if (f.kind == FailureKind::PerpGap) j["side"] = to_string(f.side);
    fs.push_back(j);
  }
  return Json{{"verdict", rep.verdict}, {"failures", fs}, {"zero_omega_n", to_json(rep.zero_omega_n)}};
}

inline Json to_json(const FCategory& f) {
  Json out{{"objects", to_json(f.objects)}};
  out["f_projectives"] = f.f_projectives ? to_json(*f.f_projectives) : Json(nullptr);
  return out;
}

inline Json to_json(const ResolutionQuiver& q) {
  Json a = Json::array();
  for (size_t v = 0; v < q.successor.size(); ++v)
    a.push_back(Json::array({static_cast<int>(v + 1),
                             q.successor[v] ? Json(*q.successor[v]) : Json(nullptr)}));
  return a;
}

inline Json to_json(const ARQuiver& q) {
  Json arrows = Json::array();
  for (const ARArrow& a : q.arrows)
    arrows.push_back(Json{{"from", to_json(a.from)},
                          {"to", to_json(a.to)},
                          {"tag", a.tag == ArrowTag::Mono ? "mono" : "epi"}});
  Json tr = Json::array();
  for (const auto& [x, y] : q.translations) tr.push_back(Json::array({to_json(x), to_json(y)}));
  return Json{{"vertices", to_json(q.vertices)}, {"arrows", arrows}, {"translations", tr}};
}

inline Indec indec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(ErrorCode::InvalidParameter, "module must be a pair [i, j]");
  return {j[0].get<int>(), j[1].get<int>()};
}

/// Members are canonicalized, so [15,15] over a 14-vertex cyclic algebra reads as [1,1].
inline Subcategory subcategory_from_json(const Algebra& A, const Json& j) {
  const Json& list = j.is_object() && j.contains("members") ? j.at("members") : j;
  if (!list.is_array()) throw Error(ErrorCode::InvalidParameter, "subcategory must list members");
  std::vector<Indec> xs;
  for (const Json& e : list) {
    const Indec x = indec_from_json(e);
    if (x.i > x.j) throw Error(ErrorCode::InvalidSubcategory, to_string(x) + " has i > j");
    xs.push_back(canonical(A, x.i, x.j));
  }
  Subcategory c(std::move(xs));
  require_valid(A, c);
  return c;
}

inline Kind kind_from_string(const std::string& s) {
  if (s == "acyclic") return Kind::Acyclic;
  if (s == "cyclic") return Kind::Cyclic;
  throw Error(ErrorCode::InvalidParameter, "kind must be \"acyclic\" or \"cyclic\"");
}

/// {"kind": ..., "kupisch": [...]} or {"kind": ..., "homogeneous": {"m": M, "l": L}}.
inline Algebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorCode::InvalidParameter, "algebra needs a string field \"kind\"");
  const Kind kind = kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("homogeneous")) {
    const Json& h = j.at("homogeneous");
    if (!h.is_object() || !h.contains("m") || !h.contains("l") || !h.at("m").is_number_integer() ||
        !h.at("l").is_number_integer())
      throw Error(ErrorCode::InvalidParameter, "homogeneous needs integer fields m and l");
    return Algebra::homogeneous(kind, h.at("m").get<int>(), h.at("l").get<int>());
  }
  if (!j.contains("kupisch") || !j.at("kupisch").is_array())
    throw Error(ErrorCode::InvalidParameter, "algebra needs an array field \"kupisch\"");
  std::vector<int> c;
  for (const Json& e : j.at("kupisch")) {
    if (!e.is_number_integer()) throw Error(ErrorCode::InvalidKupisch, "kupisch entries must be integers");
    c.push_back(e.get<int>());
  }
  return Algebra::from_kupisch(kind, std::move(c));
}

/// Compact form with a trailing newline; object keys come out sorted.
inline std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace nakct
