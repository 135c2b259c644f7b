#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/arithfun.hpp"
#include "core/bintype.hpp"
#include "core/series.hpp"

namespace lcz {

using Json = nlohmann::ordered_json;

enum class CheckMode { exact, exhaustive, randomized };

/// Verdict for one numbered condition of a characterization suite.
///
/// holds for a randomized condition means "no counterexample found in
/// `trials` seeded trials" and never more; exact/exhaustive verdicts are
/// decided outright at the recorded order/bound. A false verdict always
/// carries a witness, and randomized witnesses record enough (seed, trial)
/// to be replayed bit-identically.
struct CheckReport {
  std::string theorem;   // suite label: "1.1".."1.4", "2.1".."2.3"
  int condition = 0;     // 1-based condition number within the suite
  bool holds = false;
  CheckMode mode = CheckMode::exact;
  bool hypothesis_ok = true;  // a_1 != 0 for the series suites
  unsigned trials = 0;        // randomized conditions only
  std::uint64_t seed = 0;     // randomized conditions only
  std::uint64_t scope = 0;    // order (series) or bound (functions) used
  Json witness;               // null when holds
  std::string note;
};

/// One suite = the equivalent conditions of a single characterization; the
/// verdict is consistent when every condition agrees.
struct SuiteVerdict {
  std::vector<CheckReport> reports;
  bool consistent = false;
};

bool all_reports_agree(const std::vector<CheckReport>& reports);

/// Which embedding realizes condition (2): the classical eta into the
/// unitary ring (factorial parameters only) or eta_M into the M-convolution
/// algebra. `auto` resolves to classical for the factorial family.
enum class EmbeddingMode { automatic, classical, binomial };

EmbeddingMode resolve_embedding(const BinomialType& bt, EmbeddingMode requested);
std::string theorem_label(const BinomialType& bt, Variant variant, EmbeddingMode resolved);

struct SuiteConfig {
  Variant variant = Variant::multiplicative;
  EmbeddingMode embedding = EmbeddingMode::automatic;
  unsigned trials = 50;
  std::uint64_t seed = 42;
  unsigned order = 16;
};

/// Condition (1): a_n B(n) = a_1^n (multiplicative) or n a_1 (additive) for
/// every n up to the working order. a_1 = 0 does not abort the check; the
/// report is marked hypothesis-violated.
CheckReport check_closed_form(const TruncatedSeries& f, const BinomialType& bt, Variant variant);

/// Condition (2): the embedded function is (binomial) multiplicative or
/// additive. Classical mode evaluates eta lazily on 1..primorial(min(order,7))
/// and scans all coprime pairs; binomial mode classifies eta_M outright.
CheckReport check_embedded(const TruncatedSeries& f, const BinomialType& bt, Variant variant,
                           EmbeddingMode embedding = EmbeddingMode::automatic);

/// Condition (3), Lambek form: F (.) (G H) against its distributed right
/// side for `trials` seeded random pairs (G, H).
CheckReport check_lambek(const TruncatedSeries& f, const BinomialType& bt, Variant variant,
                         unsigned trials, std::uint64_t seed, unsigned order);

/// Condition (4), the squared (Carlitz-pointing) form with a single random G
/// per trial; the additive right side carries the scalar 2.
CheckReport check_carlitz_square(const TruncatedSeries& f, const BinomialType& bt, Variant variant,
                                 unsigned trials, std::uint64_t seed, unsigned order);

/// Condition (5): sum of t(n) a_n X^n against F*F (multiplicative) or
/// 2 (sum 1/B(n) X^n) * F (additive), coefficient by coefficient.
CheckReport check_particular(const TruncatedSeries& f, const BinomialType& bt, Variant variant);

/// All five conditions of the suite selected by (bt, variant, embedding).
SuiteVerdict run_suite(const TruncatedSeries& f, const BinomialType& bt, const SuiteConfig& cfg);

/// The Dirichlet-convolution suites ("1.1" completely multiplicative, "1.2"
/// completely additive): (1) exhaustive classification, (2)/(3) randomized
/// distributivity, (4) the exact f tau identity. Requires bound >= 16.
SuiteVerdict check_dirichlet(const ArithFun& f, Variant variant, unsigned trials,
                             std::uint64_t seed);

/// Single condition 1..4 of the Dirichlet suite.
CheckReport check_dirichlet_condition(const ArithFun& f, Variant variant, int condition,
                                      unsigned trials, std::uint64_t seed);

/// Single condition 1..5 of a series suite.
CheckReport check_series_condition(const TruncatedSeries& f, const BinomialType& bt,
                                   const SuiteConfig& cfg, int condition);

}  // namespace lcz
