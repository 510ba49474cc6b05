#include "casorati/serialize.hpp"

#include <stdexcept>

namespace casorati {

Json toJson(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Json toJson(const ExpPoly& f) { return Json{{"p", toJson(f.p)}, {"a", toString(f.a)}, {"b", toString(f.b)}}; }

Json toJson(const EntryFault& fault) {
  return Json{{"row", fault.row}, {"col", fault.col}, {"delta", fault.delta.str()}};
}

Json toJson(const std::vector<ExpPoly>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(toJson(f));
  return arr;
}

Poly polyFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
  std::vector<Gaussian> cs;
  for (const auto& c : j) cs.push_back(Gaussian::parse(c.get<std::string>()));
  return Poly(std::move(cs));
}

ExpPoly expPolyFromJson(const Json& j) {
  if (j.is_array()) return ExpPoly(polyFromJson(j));
  return ExpPoly(polyFromJson(j.at("p")), parseRational(j.value("a", std::string("0"))),
                 parseRational(j.value("b", std::string("0"))));
}

EntryFault faultFromJson(const Json& j) {
  EntryFault f;
  f.row = j.at("row").get<std::size_t>();
  f.col = j.at("col").get<std::size_t>();
  f.delta = Gaussian::parse(j.value("delta", std::string("1")));
  return f;
}

std::vector<ExpPoly> expPolyListFromJson(const Json& j) {
  std::vector<ExpPoly> out;
  for (const auto& e : j) out.push_back(expPolyFromJson(e));
  return out;
}

std::string abbreviate(const std::string& s, std::size_t limit) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + "...[" + std::to_string(s.size()) + " chars]";
}

Json toJson(const std::vector<Poly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(toJson(p));
  return a;
}

Json toJson(const RationalFn& f) { return Json{{"num", toJson(f.num())}, {"den", toJson(f.den())}}; }

std::vector<Poly> polyListFromJson(const Json& j) {
  std::vector<Poly> out;
  for (const auto& e : j) out.push_back(polyFromJson(e));
  return out;
}

RationalFn rationalFnFromJson(const Json& j) {
  if (j.is_array()) return RationalFn(polyFromJson(j));
  return RationalFn(polyFromJson(j.at("num")), polyFromJson(j.at("den")));
}

}  // namespace casorati
