#pragma once

#include <string>

#include <json.hpp>

#include "core/arithfun.hpp"
#include "core/bintype.hpp"
#include "core/characterize.hpp"
#include "core/series.hpp"

namespace lcz {

// File schemas (all rationals as "p" / "p/q" strings):
//   series:            {"order": N, "coeffs": [N+1 strings]}
//   function (1..M):   {"bound": M, "values": [M strings]}
//   function (0..N):   {"bound": N, "values": [N+1 strings]}
//   binomial type:     {"family": "factorial"|"ones"|"q_factorial"|"custom",
//                       "q": "2" (q_factorial), "N": 16,
//                       "name": ..., "B": [...] (custom)}
// Emission uses a fixed key order so identical inputs serialize identically.

/// nlohmann parse with errors rewrapped as ParseError.
Json parse_json_text(const std::string& text);

Json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const Json& j);

Json arithfun_to_json(const ArithFun& f);
ArithFun arithfun_from_json(const Json& j);

Json binfun_to_json(const BinomialArithFun& f);
BinomialArithFun binfun_from_json(const Json& j);

Json bintype_to_json(const BinomialType& bt);
BinomialType bintype_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

/// {"theorem": ..., "conditions": [...], "consistent": ...}
Json verdict_to_json(const SuiteVerdict& v);

}  // namespace lcz
