#include "core/characterize.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "core/exactnum.hpp"
#include "core/json_io.hpp"
#include "core/rng.hpp"

namespace lcz {

namespace {

// Primorials: the least m with omega(m) = k, so primorial(k) is the smallest
// bound realizing every omega class up to k.
constexpr std::array<std::uint64_t, 8> kPrimorial = {1, 2, 6, 30, 210, 2310, 30030, 510510};

const std::vector<std::uint8_t>& cached_omega_table(std::uint64_t bound) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<const std::vector<std::uint8_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bound);
  if (it == cache.end()) {
    it = cache
             .emplace(bound, std::make_unique<const std::vector<std::uint8_t>>(omega_table(bound)))
             .first;
  }
  return *it->second;
}

bool a1_hypothesis(const TruncatedSeries& f) {
  return f.order() >= 1 && !f.coeff(1).is_zero();
}

void mark_hypothesis(CheckReport& r, const TruncatedSeries& f) {
  r.hypothesis_ok = a1_hypothesis(f);
  if (!r.hypothesis_ok) r.note = "hypothesis a_1 != 0 violated; verdict is for the input as given";
}

void append_note(CheckReport& r, const std::string& note) {
  if (r.note.empty())
    r.note = note;
  else
    r.note += "; " + note;
}

Json pair_witness(std::uint64_t m, std::uint64_t n, const Rational& lhs, const Rational& rhs) {
  Json w;
  w["m"] = m;
  w["n"] = n;
  w["lhs"] = lhs.str();
  w["rhs"] = rhs.str();
  return w;
}

Json coeff_witness(unsigned n, const Rational& lhs, const Rational& rhs) {
  Json w;
  w["n"] = n;
  w["lhs"] = lhs.str();
  w["rhs"] = rhs.str();
  return w;
}

}  // namespace

bool all_reports_agree(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (r.holds != reports.front().holds) return false;
  return true;
}

EmbeddingMode resolve_embedding(const BinomialType& bt, EmbeddingMode requested) {
  switch (requested) {
    case EmbeddingMode::automatic:
      return bt.family() == BinomialFamily::factorial ? EmbeddingMode::classical
                                                      : EmbeddingMode::binomial;
    case EmbeddingMode::classical:
      if (bt.family() != BinomialFamily::factorial)
        throw std::invalid_argument(
            "classical embedding weights coefficients by omega(m)!, which matches only the "
            "factorial parameters");
      return EmbeddingMode::classical;
    case EmbeddingMode::binomial:
      return EmbeddingMode::binomial;
  }
  throw std::logic_error("unreachable");
}

std::string theorem_label(const BinomialType& bt, Variant variant, EmbeddingMode resolved) {
  if (resolved == EmbeddingMode::classical)
    return variant == Variant::multiplicative ? "1.3" : "1.4";
  if (variant == Variant::additive) return "2.2";
  return bt.family() == BinomialFamily::q_factorial ? "2.3" : "2.1";
}

CheckReport check_closed_form(const TruncatedSeries& f, const BinomialType& bt, Variant variant) {
  CheckReport r;
  r.theorem = theorem_label(bt, variant, resolve_embedding(bt, EmbeddingMode::automatic));
  r.condition = 1;
  r.mode = CheckMode::exact;
  mark_hypothesis(r, f);
  const unsigned n_max = std::min(f.order(), bt.max_order());
  r.scope = n_max;
  const Rational a1 = f.order() >= 1 ? f.coeff(1) : Rational(0);
  r.holds = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational expected = (variant == Variant::multiplicative ? a1.pow(n)
                                                                  : Rational(long(n)) * a1) /
                              bt.b(n);
    if (f.coeff(n) != expected) {
      r.holds = false;
      Json w;
      w["n"] = n;
      w["expected"] = expected.str();
      w["actual"] = f.coeff(n).str();
      r.witness = std::move(w);
      break;
    }
  }
  return r;
}

namespace {

// Condition (2), classical embedding, evaluated lazily: eta(F)(m) depends on
// m only through omega(m), so the scan uses an omega sieve, the weighted
// class values k! a_k, and a precomputed comparison cube indexed by
// (omega(mn), omega(m), omega(n)). No table of rationals on 1..M is built.
CheckReport check_embedded_classical(const TruncatedSeries& f, Variant variant) {
  CheckReport r;
  r.condition = 2;
  r.mode = CheckMode::exhaustive;
  mark_hypothesis(r, f);

  const unsigned k = std::min(f.order(), 7u);
  const std::uint64_t bound = kPrimorial[k];
  r.scope = bound;

  std::vector<Rational> v;  // omega-class values of eta(F)
  v.reserve(k + 1);
  for (unsigned i = 0; i <= k; ++i) v.push_back(factorial(i) * f.coeff(i));

  const bool additive = variant == Variant::additive;
  // agree[l][i][j]: does f(mn) = f(m) o f(n) hold on classes
  // (omega(mn), omega(m), omega(n)) = (l, i, j)?
  std::vector<bool> agree((k + 1) * (k + 1) * (k + 1));
  auto idx = [k](unsigned l, unsigned i, unsigned j) { return (l * (k + 1) + i) * (k + 1) + j; };
  for (unsigned l = 0; l <= k; ++l)
    for (unsigned i = 0; i <= k; ++i)
      for (unsigned j = 0; j <= k; ++j)
        agree[idx(l, i, j)] = additive ? v[l] == v[i] + v[j] : v[l] == v[i] * v[j];

  const auto& om = cached_omega_table(bound);
  r.holds = true;
  for (std::uint64_t m = 1; m * m <= bound && r.holds; ++m) {
    for (std::uint64_t n = m; m * n <= bound; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (!agree[idx(om[m * n], om[m], om[n])]) {
        r.holds = false;
        const Rational lhs = v[om[m * n]];
        const Rational rhs = additive ? v[om[m]] + v[om[n]] : v[om[m]] * v[om[n]];
        r.witness = pair_witness(m, n, lhs, rhs);
        break;
      }
    }
  }
  return r;
}

CheckReport check_embedded_binomial(const TruncatedSeries& f, const BinomialType& bt,
                                    Variant variant) {
  CheckReport r;
  r.condition = 2;
  r.mode = CheckMode::exhaustive;
  mark_hypothesis(r, f);
  const TruncatedSeries clamped =
      f.order() <= bt.max_order() ? f : truncate(f, bt.max_order());
  const BinomialArithFun embedded = eta_m(bt, clamped);
  r.scope = embedded.bound();
  const ClassifyResult res =
      binomial_classify(embedded, variant == Variant::multiplicative
                                      ? BinomialClassifyKind::binomial_multiplicative
                                      : BinomialClassifyKind::binomial_additive);
  r.holds = res.holds;
  if (res.witness)
    r.witness = pair_witness(res.witness->m, res.witness->n, res.witness->lhs, res.witness->rhs);
  if (res.vacuous) append_note(r, "vacuous: the embedded function is identically zero");
  return r;
}

}  // namespace

CheckReport check_embedded(const TruncatedSeries& f, const BinomialType& bt, Variant variant,
                           EmbeddingMode embedding) {
  const EmbeddingMode resolved = resolve_embedding(bt, embedding);
  CheckReport r = resolved == EmbeddingMode::classical
                      ? check_embedded_classical(f, variant)
                      : check_embedded_binomial(f, bt, variant);
  r.theorem = theorem_label(bt, variant, resolved);
  return r;
}

namespace {

// Shared trial loop of conditions (3) and (4). draw_pair tells whether the
// trial uses an independent (G, H) or a single G against itself.
CheckReport check_distributivity(const TruncatedSeries& f, const BinomialType& bt, Variant variant,
                                 unsigned trials, std::uint64_t seed, unsigned order,
                                 bool draw_pair) {
  if (trials < 1) throw std::invalid_argument("randomized check: trials must be >= 1");
  CheckReport r;
  r.condition = draw_pair ? 3 : 4;
  r.mode = CheckMode::randomized;
  r.trials = trials;
  r.seed = seed;
  mark_hypothesis(r, f);
  const unsigned ord = std::min({f.order(), bt.max_order(), order});
  r.scope = ord;
  r.holds = true;
  for (unsigned trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = derive_trial_seed(seed, trial);
    SplitMix64 gen(trial_seed);
    const TruncatedSeries g = random_series(gen, ord);
    const TruncatedSeries h = draw_pair ? random_series(gen, ord) : g;
    const TruncatedSeries lhs = odot(bt, f, cauchy_mul(g, h));
    TruncatedSeries rhs = TruncatedSeries::zero(0);
    if (variant == Variant::multiplicative) {
      if (draw_pair)
        rhs = cauchy_mul(odot(bt, f, g), odot(bt, f, h));
      else {
        const TruncatedSeries fg = odot(bt, f, g);
        rhs = cauchy_mul(fg, fg);
      }
    } else {
      if (draw_pair)
        rhs = add(cauchy_mul(odot(bt, f, g), h), cauchy_mul(odot(bt, f, h), g));
      else
        rhs = scale(Rational(2), cauchy_mul(odot(bt, f, g), g));
    }
    const SeriesComparison cmp = equals_to_order(lhs, rhs, ord);
    if (!cmp.equal) {
      r.holds = false;
      Json w;
      w["trial"] = trial;
      w["trial_seed"] = trial_seed;
      w["g"] = series_to_json(g);
      if (draw_pair) w["h"] = series_to_json(h);
      w["mismatch_index"] = cmp.first_mismatch;
      w["lhs"] = lhs.coeff(cmp.first_mismatch).str();
      w["rhs"] = rhs.coeff(cmp.first_mismatch).str();
      r.witness = std::move(w);
      break;
    }
  }
  if (r.holds) append_note(r, "no counterexample in " + std::to_string(trials) + " trials");
  return r;
}

}  // namespace

CheckReport check_lambek(const TruncatedSeries& f, const BinomialType& bt, Variant variant,
                         unsigned trials, std::uint64_t seed, unsigned order) {
  CheckReport r = check_distributivity(f, bt, variant, trials, seed, order, /*draw_pair=*/true);
  r.theorem = theorem_label(bt, variant, resolve_embedding(bt, EmbeddingMode::automatic));
  return r;
}

CheckReport check_carlitz_square(const TruncatedSeries& f, const BinomialType& bt, Variant variant,
                                 unsigned trials, std::uint64_t seed, unsigned order) {
  CheckReport r = check_distributivity(f, bt, variant, trials, seed, order, /*draw_pair=*/false);
  r.theorem = theorem_label(bt, variant, resolve_embedding(bt, EmbeddingMode::automatic));
  return r;
}

CheckReport check_particular(const TruncatedSeries& f, const BinomialType& bt, Variant variant) {
  CheckReport r;
  r.theorem = theorem_label(bt, variant, resolve_embedding(bt, EmbeddingMode::automatic));
  r.condition = 5;
  r.mode = CheckMode::exact;
  mark_hypothesis(r, f);
  const unsigned n_max = std::min(f.order(), bt.max_order());
  r.scope = n_max;

  const TruncatedSeries clamped = f.order() == n_max ? f : truncate(f, n_max);
  TruncatedSeries rhs = TruncatedSeries::zero(0);
  if (variant == Variant::multiplicative) {
    rhs = cauchy_mul(clamped, clamped);
  } else {
    std::vector<Rational> inv_b;
    inv_b.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) inv_b.push_back(Rational(1) / bt.b(n));
    rhs = scale(Rational(2), cauchy_mul(TruncatedSeries(std::move(inv_b)), clamped));
  }

  r.holds = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational lhs = bt.t_number(n) * f.coeff(n);
    if (lhs != rhs.coeff(n)) {
      r.holds = false;
      r.witness = coeff_witness(n, lhs, rhs.coeff(n));
      break;
    }
  }
  return r;
}

SuiteVerdict run_suite(const TruncatedSeries& f, const BinomialType& bt, const SuiteConfig& cfg) {
  const EmbeddingMode resolved = resolve_embedding(bt, cfg.embedding);
  const std::string label = theorem_label(bt, cfg.variant, resolved);
  SuiteVerdict v;
  v.reports.push_back(check_closed_form(f, bt, cfg.variant));
  v.reports.push_back(check_embedded(f, bt, cfg.variant, resolved));
  v.reports.push_back(check_lambek(f, bt, cfg.variant, cfg.trials, cfg.seed, cfg.order));
  v.reports.push_back(check_carlitz_square(f, bt, cfg.variant, cfg.trials, cfg.seed, cfg.order));
  v.reports.push_back(check_particular(f, bt, cfg.variant));
  for (CheckReport& r : v.reports) r.theorem = label;
  v.consistent = all_reports_agree(v.reports);
  return v;
}

CheckReport check_series_condition(const TruncatedSeries& f, const BinomialType& bt,
                                   const SuiteConfig& cfg, int condition) {
  const EmbeddingMode resolved = resolve_embedding(bt, cfg.embedding);
  CheckReport r;
  switch (condition) {
    case 1:
      r = check_closed_form(f, bt, cfg.variant);
      break;
    case 2:
      r = check_embedded(f, bt, cfg.variant, resolved);
      break;
    case 3:
      r = check_lambek(f, bt, cfg.variant, cfg.trials, cfg.seed, cfg.order);
      break;
    case 4:
      r = check_carlitz_square(f, bt, cfg.variant, cfg.trials, cfg.seed, cfg.order);
      break;
    case 5:
      r = check_particular(f, bt, cfg.variant);
      break;
    default:
      throw std::invalid_argument("series condition must be 1..5");
  }
  r.theorem = theorem_label(bt, cfg.variant, resolved);
  return r;
}

namespace {

ArithFun random_arithfun(SplitMix64& gen, std::uint64_t bound) {
  return ArithFun(random_values(gen, bound));
}

CheckReport dirichlet_condition_1(const ArithFun& f, Variant variant) {
  CheckReport r;
  r.condition = 1;
  r.mode = CheckMode::exhaustive;
  r.scope = f.bound();
  const ClassifyResult res =
      classify(f, variant == Variant::multiplicative ? ClassifyKind::completely_multiplicative
                                                     : ClassifyKind::completely_additive);
  r.holds = res.holds;
  if (res.witness)
    r.witness = pair_witness(res.witness->m, res.witness->n, res.witness->lhs, res.witness->rhs);
  if (res.vacuous) append_note(r, "vacuous: f is identically zero");
  return r;
}

// Conditions (2) and (3): distributivity over random Dirichlet convolutions.
CheckReport dirichlet_distributivity(const ArithFun& f, Variant variant, unsigned trials,
                                     std::uint64_t seed, bool draw_pair) {
  if (trials < 1) throw std::invalid_argument("randomized check: trials must be >= 1");
  CheckReport r;
  r.condition = draw_pair ? 2 : 3;
  r.mode = CheckMode::randomized;
  r.trials = trials;
  r.seed = seed;
  r.scope = f.bound();
  r.holds = true;
  for (unsigned trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = derive_trial_seed(seed, trial);
    SplitMix64 gen(trial_seed);
    const ArithFun g = random_arithfun(gen, f.bound());
    const ArithFun h = draw_pair ? random_arithfun(gen, f.bound()) : g;
    const ArithFun lhs = pointwise_mul(f, dirichlet_conv(g, h));
    ArithFun rhs = lhs;
    if (variant == Variant::multiplicative) {
      if (draw_pair)
        rhs = dirichlet_conv(pointwise_mul(f, g), pointwise_mul(f, h));
      else {
        const ArithFun fg = pointwise_mul(f, g);
        rhs = dirichlet_conv(fg, fg);
      }
    } else {
      if (draw_pair)
        rhs = pointwise_add(dirichlet_conv(pointwise_mul(f, g), h),
                            dirichlet_conv(g, pointwise_mul(f, h)));
      else
        rhs = pointwise_scale(Rational(2), dirichlet_conv(pointwise_mul(f, g), g));
    }
    if (const auto n = first_difference(lhs, rhs)) {
      r.holds = false;
      Json w;
      w["trial"] = trial;
      w["trial_seed"] = trial_seed;
      w["g"] = arithfun_to_json(g);
      if (draw_pair) w["h"] = arithfun_to_json(h);
      w["n"] = *n;
      w["lhs"] = lhs.at(*n).str();
      w["rhs"] = rhs.at(*n).str();
      r.witness = std::move(w);
      break;
    }
  }
  if (r.holds) append_note(r, "no counterexample in " + std::to_string(trials) + " trials");
  return r;
}

CheckReport dirichlet_condition_4(const ArithFun& f, Variant variant) {
  CheckReport r;
  r.condition = 4;
  r.mode = CheckMode::exact;
  r.scope = f.bound();
  const ArithFun tau = builtin(Builtin::tau, f.bound());
  const ArithFun lhs = pointwise_mul(f, tau);
  const ArithFun rhs =
      variant == Variant::multiplicative
          ? dirichlet_conv(f, f)
          : pointwise_scale(Rational(2), dirichlet_conv(f, builtin(Builtin::zeta, f.bound())));
  const auto n = first_difference(lhs, rhs);
  r.holds = !n.has_value();
  if (n) {
    Json w;
    w["n"] = *n;
    w["lhs"] = lhs.at(*n).str();
    w["rhs"] = rhs.at(*n).str();
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace

CheckReport check_dirichlet_condition(const ArithFun& f, Variant variant, int condition,
                                      unsigned trials, std::uint64_t seed) {
  if (f.bound() < 16) throw std::invalid_argument("Dirichlet suite: bound must be >= 16");
  CheckReport r;
  switch (condition) {
    case 1:
      r = dirichlet_condition_1(f, variant);
      break;
    case 2:
      r = dirichlet_distributivity(f, variant, trials, seed, /*draw_pair=*/true);
      break;
    case 3:
      r = dirichlet_distributivity(f, variant, trials, seed, /*draw_pair=*/false);
      break;
    case 4:
      r = dirichlet_condition_4(f, variant);
      break;
    default:
      throw std::invalid_argument("Dirichlet condition must be 1..4");
  }
  r.theorem = variant == Variant::multiplicative ? "1.1" : "1.2";
  return r;
}

SuiteVerdict check_dirichlet(const ArithFun& f, Variant variant, unsigned trials,
                             std::uint64_t seed) {
  SuiteVerdict v;
  for (int condition = 1; condition <= 4; ++condition)
    v.reports.push_back(check_dirichlet_condition(f, variant, condition, trials, seed));
  v.consistent = all_reports_agree(v.reports);
  return v;
}

}  // namespace lcz
