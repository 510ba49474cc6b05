#pragma once

#include "casorati/casoratian.hpp"
#include "casorati/exp_poly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace casorati {

using Json = nlohmann::json;

// Polys are coefficient lists from the constant term up, each entry a
// Gaussian string such as "3/4" or "(1-2i)".
Json toJson(const Poly& p);
Json toJson(const ExpPoly& f);
Json toJson(const EntryFault& fault);
Json toJson(const std::vector<ExpPoly>& fs);
Json toJson(const std::vector<Poly>& ps);
// {"num": [...], "den": [...]}
Json toJson(const RationalFn& f);

Poly polyFromJson(const Json& j);
ExpPoly expPolyFromJson(const Json& j);
EntryFault faultFromJson(const Json& j);
std::vector<ExpPoly> expPolyListFromJson(const Json& j);
std::vector<Poly> polyListFromJson(const Json& j);
RationalFn rationalFnFromJson(const Json& j);

// Expressions longer than `limit` characters are cut and tagged with their
// full length.
std::string abbreviate(const std::string& s, std::size_t limit);

}  // namespace casorati
