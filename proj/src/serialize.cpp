#include "hesstop/serialize.hpp"

#include "hesstop/errors.hpp"

namespace hesstop {

namespace {

Json coeff_array(const HomoPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

HomoPoly poly_from_array(const Json& arr) {
  if (!arr.is_array()) throw DomainError("expected a coefficient array");
  std::vector<Rational> c;
  for (const auto& v : arr) c.push_back(parse_rational(v.get<std::string>()));
  if (c.empty()) throw DomainError("empty coefficient array");
  const int degree = static_cast<int>(c.size()) - 1;
  return HomoPoly(degree, std::move(c));
}

Json condition_json(const Condition& c) {
  return {{"name", c.name}, {"satisfied", c.satisfied}, {"certificate", to_json(c.certificate)}};
}

}  // namespace

Json to_json(const HomoPoly& p) { return {{"degree", p.degree()}, {"coeffs", coeff_array(p)}, {"text", p.to_string()}}; }

HomoPoly homopoly_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  HomoPoly p = poly_from_array(j.at("coeffs"));
  if (p.degree() != degree) throw DomainError("coefficient count does not match degree");
  return p;
}

Json to_json(const QuadForm& w) {
  // Each coefficient is written at the form's common degree.
  const int d = w.degree();
  auto at_degree = [d](const HomoPoly& p) { return p.is_zero() ? HomoPoly(d) : p; };
  return {{"degree", d}, {"a", coeff_array(at_degree(w.a))}, {"b", coeff_array(at_degree(w.b))}, {"c", coeff_array(at_degree(w.c))}};
}

QuadForm quadform_from_json(const Json& j) {
  const int d = j.at("degree").get<int>();
  QuadForm w{poly_from_array(j.at("a")), poly_from_array(j.at("b")), poly_from_array(j.at("c"))};
  for (const HomoPoly* p : {&w.a, &w.b, &w.c}) {
    if (p->degree() != d) throw DomainError("QuadForm coefficient degree does not match 'degree'");
  }
  return w;
}

Json to_json(const SignCertificate& c) {
  Json j{{"verdict", to_string(c.verdict)},
         {"semidefinite", to_string(c.semidefinite)},
         {"method", c.method},
         {"zero_lines", c.zero_lines}};
  if (c.witness) {
    Json w{{"x", to_string(c.witness->x)}, {"y", to_string(c.witness->y)}, {"value", to_string(c.witness->value)}};
    if (c.witness->slice_interval) {
      w["slice_interval"] = {to_string(c.witness->slice_interval->first), to_string(c.witness->slice_interval->second)};
    }
    j["witness"] = w;
    j["reference_sign"] = c.reference_sign;
  }
  return j;
}

Json to_json(const IsotopyCertificate& c) {
  Json hyp = Json::array();
  for (const auto& h : c.hypotheses) hyp.push_back(condition_json(h));
  Json conds = Json::array();
  for (const auto& h : c.conditions) conds.push_back(condition_json(h));
  Json legs = Json::array();
  for (const auto& l : c.legs) legs.push_back(to_json(l));
  return {{"kind", to_string(c.kind)},
          {"hypotheses", hyp},
          {"coefficients", {{"a0", c.a0.to_string()}, {"a1", c.a1.to_string()}, {"a2", c.a2.to_string()}}},
          {"conditions", conds},
          {"legs", legs},
          {"branch", c.branch},
          {"conclusion", c.conclusion},
          {"valid", c.valid()}};
}

Json to_json(const IndexResult& r) {
  return {{"index", r.index.to_string()},
          {"numerator", r.index.numerator},
          {"residual", r.index.residual},
          {"samples_used", r.samples_used},
          {"refinement_depth", r.trace.refinement_depth}};
}

Json to_json(const CensusRow& r) {
  return {{"n", r.n}, {"k", r.k}, {"m", r.m}, {"index", r.predicted_index().to_string()}, {"lower_bound", r.lower_bound}};
}

Json to_json(const RowCertificate& c) {
  Json j{{"row", to_json(c.row)},
         {"hyperbolic", to_json(c.hyperbolic.certificate)},
         {"index_f", to_json(c.index_f)}};
  if (c.elliptic) j["elliptic"] = to_json(c.elliptic->certificate);
  if (c.inequality) j["inequality"] = to_json(c.inequality->certificate);
  if (c.isotopy) j["isotopy"] = to_json(*c.isotopy);
  if (c.index_p) j["index_p"] = to_json(*c.index_p);
  return j;
}

Json to_json(const SeparatrixReport& r) {
  return {{"count", r.count()},
          {"minus_count", static_cast<int>(r.minus.size())},
          {"union_count", r.union_count()},
          {"plus_angles", r.plus},
          {"minus_angles", r.minus},
          {"convention", "rays from the origin; a full line counts twice"}};
}

Json to_json(const std::vector<IdentityRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json per = Json::object();
    for (std::size_t i = 0; i < r.ms.size(); ++i) per[std::to_string(r.ms[i])] = static_cast<bool>(r.passed[i]);
    arr.push_back({{"identity", r.name}, {"passed", r.all_passed()}, {"by_m", per}});
  }
  return arr;
}

}  // namespace hesstop
