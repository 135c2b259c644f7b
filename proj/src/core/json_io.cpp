#include "core/json_io.hpp"

#include <stdexcept>

#include "core/error.hpp"

namespace lcz {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t require_uint(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_number_unsigned())
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<Rational> rational_array(const Json& j, const char* key, std::uint64_t expected) {
  const Json& arr = require_field(j, key);
  if (!arr.is_array())
    throw ParseError(std::string("field \"") + key + "\" must be an array of rational strings");
  if (arr.size() != expected)
    throw ParseError(std::string("field \"") + key + "\" has " + std::to_string(arr.size()) +
                     " entries, expected " + std::to_string(expected));
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const Json& e : arr) {
    if (!e.is_string())
      throw ParseError(std::string("field \"") + key + "\" entries must be rational strings");
    out.push_back(Rational::parse(e.get<std::string>()));
  }
  return out;
}

Json rational_strings(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json series_to_json(const TruncatedSeries& f) {
  Json j;
  j["order"] = f.order();
  j["coeffs"] = rational_strings(f.coeffs());
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  const std::uint64_t order = require_uint(j, "order");
  return TruncatedSeries(rational_array(j, "coeffs", order + 1));
}

Json arithfun_to_json(const ArithFun& f) {
  Json j;
  j["bound"] = f.bound();
  j["values"] = rational_strings(f.values());
  return j;
}

ArithFun arithfun_from_json(const Json& j) {
  const std::uint64_t bound = require_uint(j, "bound");
  if (bound < 1) throw ParseError("function bound must be >= 1");
  return ArithFun(rational_array(j, "values", bound));
}

Json binfun_to_json(const BinomialArithFun& f) {
  Json j;
  j["bound"] = f.bound();
  j["values"] = rational_strings(f.values());
  return j;
}

BinomialArithFun binfun_from_json(const Json& j) {
  const std::uint64_t bound = require_uint(j, "bound");
  return BinomialArithFun(rational_array(j, "values", bound + 1));
}

Json bintype_to_json(const BinomialType& bt) {
  Json j;
  switch (bt.family()) {
    case BinomialFamily::factorial:
      j["family"] = "factorial";
      break;
    case BinomialFamily::ones:
      j["family"] = "ones";
      break;
    case BinomialFamily::q_factorial:
      j["family"] = "q_factorial";
      j["q"] = bt.q()->str();
      break;
    case BinomialFamily::custom:
      j["family"] = "custom";
      j["name"] = bt.name();
      break;
  }
  j["N"] = bt.max_order();
  if (bt.family() == BinomialFamily::custom) {
    std::vector<Rational> b;
    for (unsigned n = 0; n <= bt.max_order(); ++n) b.push_back(bt.b(n));
    j["B"] = rational_strings(b);
  }
  return j;
}

BinomialType bintype_from_json(const Json& j) {
  const Json& fam = require_field(j, "family");
  if (!fam.is_string()) throw ParseError("field \"family\" must be a string");
  const std::string family = fam.get<std::string>();
  const std::uint64_t n = require_uint(j, "N");
  try {
    if (family == "factorial") return BinomialType::make_factorial(static_cast<unsigned>(n));
    if (family == "ones") return BinomialType::make_ones(static_cast<unsigned>(n));
    if (family == "q_factorial") {
      const Json& q = require_field(j, "q");
      if (!q.is_string()) throw ParseError("field \"q\" must be a rational string");
      return BinomialType::make_q(Rational::parse(q.get<std::string>()), static_cast<unsigned>(n));
    }
    if (family == "custom") {
      std::string name = "custom";
      if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
      return BinomialType::make_custom(std::move(name), rational_array(j, "B", n + 1));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid binomial type: ") + e.what());
  }
  throw ParseError("unknown binomial family \"" + family + "\"");
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["id"] = r.condition;
  j["holds"] = r.holds;
  switch (r.mode) {
    case CheckMode::exact:
      j["mode"] = "exact";
      break;
    case CheckMode::exhaustive:
      j["mode"] = "exhaustive";
      break;
    case CheckMode::randomized:
      j["mode"] = "randomized";
      break;
  }
  j["scope"] = r.scope;
  if (r.mode == CheckMode::randomized) {
    j["trials"] = r.trials;
    j["seed"] = r.seed;
  }
  if (!r.hypothesis_ok) j["hypothesis_ok"] = false;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json verdict_to_json(const SuiteVerdict& v) {
  Json j;
  j["theorem"] = v.reports.empty() ? "" : v.reports.front().theorem;
  Json conditions = Json::array();
  for (const CheckReport& r : v.reports) conditions.push_back(report_to_json(r));
  j["conditions"] = std::move(conditions);
  j["consistent"] = v.consistent;
  return j;
}

}  // namespace lcz
