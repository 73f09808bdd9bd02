#include "maxsg/serialize.hpp"

namespace maxsg {

using nlohmann::json;

json to_json(Card c) {
  if (c.is_aleph0()) {
    return "aleph0";
  }
  return c.value();
}

json to_json(const CardInterval& iv) {
  return {{"lo", to_json(iv.lo())}, {"hi", to_json(iv.hi())}};
}

json to_json(Tri t) { return to_string(t); }

json to_json(const Certificate& cert) {
  return {{"inj", to_json(cert.inj)},   {"surj", to_json(cert.surj)},
          {"d", to_json(cert.d)},       {"c", to_json(cert.c)},
          {"kinf", to_json(cert.kinf)}, {"finImage", to_json(cert.fin_image)}};
}

json to_json(const Family& family) {
  json params = json::object();
  switch (family.kind) {
    case FamilyKind::S3:
    case FamilyKind::S4:
      params["mu"] = "aleph0";
      break;
    case FamilyKind::F1:
    case FamilyKind::F2:
      params["gamma"] = family.gamma;
      params["mu"] = to_string(family.mu);
      break;
    case FamilyKind::U1:
    case FamilyKind::U2:
      params["filter"] = family.filter ? family.filter->describe() : "";
      params["mu"] = to_string(family.mu);
      break;
    case FamilyKind::A1:
    case FamilyKind::A2:
      params["n"] = family.n;
      break;
    default:
      break;
  }
  return {{"family", to_string(family.kind)}, {"name", family.name()},
          {"params", params}};
}

json to_json(const Family& family, const Verdict& v) {
  json out = to_json(family);
  out["answer"] = to_json(v.answer);
  out["reason"] = v.reason;
  return out;
}

json to_json(const Decision& d) {
  json out = {{"answer", to_string(d.answer)}};
  if (d.witness) {
    out["witness"] = to_json(*d.witness);
  }
  if (!d.blocking.empty()) {
    out["blocking"] = d.blocking;
  }
  return out;
}

json to_json(const FiberReport& f, std::size_t sample) {
  struct V {
    std::size_t sample;
    json operator()(const FiniteFiber& x) const {
      return {{"kind", "finite"}, {"elements", x.elements}};
    }
    json operator()(const InfiniteFiber& x) const {
      return {{"kind", "infinite"},
              {"description", x.describe()},
              {"first", x.first(sample)}};
    }
    json operator()(const UnknownFiber& x) const {
      return {{"kind", "unknown"}, {"cap", x.cap}, {"sampled", x.sampled}};
    }
  };
  return std::visit(V{sample}, f);
}

json to_json(const Word& w) {
  json out = json::array();
  for (const auto& l : w) {
    out.push_back(to_string(l));
  }
  return out;
}

json to_json(const FinMap& f) { return to_string(f); }

}  // namespace maxsg
