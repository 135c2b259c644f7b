#include "lcz/lcz.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "core/arithfun.hpp"
#include "core/bintype.hpp"
#include "core/characterize.hpp"
#include "core/error.hpp"
#include "core/exactnum.hpp"
#include "core/json_io.hpp"
#include "core/oracle.hpp"
#include "core/series.hpp"

using namespace lcz;

struct lcz_series {
  TruncatedSeries value;
};
struct lcz_arithfun {
  ArithFun value;
};
struct lcz_binfun {
  BinomialArithFun value;
};
struct lcz_bintype {
  BinomialType value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, mapping exceptions onto status codes and the thread-local
// error message.
template <typename Fn>
lcz_status guarded(Fn&& body) {
  try {
    body();
    return LCZ_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return LCZ_ERR_PARSE;
  } catch (const LimitError& e) {
    g_last_error = e.what();
    return LCZ_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return LCZ_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return LCZ_ERR_DOMAIN;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return LCZ_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LCZ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LCZ_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Variant to_variant(lcz_variant v) {
  require(v == LCZ_VARIANT_MULTIPLICATIVE || v == LCZ_VARIANT_ADDITIVE, "bad variant");
  return v == LCZ_VARIANT_MULTIPLICATIVE ? Variant::multiplicative : Variant::additive;
}

EmbeddingMode to_embedding(lcz_embedding e) {
  switch (e) {
    case LCZ_EMBEDDING_AUTO:
      return EmbeddingMode::automatic;
    case LCZ_EMBEDDING_CLASSICAL:
      return EmbeddingMode::classical;
    case LCZ_EMBEDDING_BINOMIAL:
      return EmbeddingMode::binomial;
  }
  throw std::invalid_argument("bad embedding mode");
}

void emit(char** out, const std::string& s) {
  require(out != nullptr, "null output pointer");
  *out = dup_string(s);
  if (*out == nullptr) throw std::bad_alloc();
}

Json classify_report(const char* kind, const ClassifyResult& res) {
  Json j;
  j["kind"] = kind;
  j["holds"] = res.holds;
  if (res.vacuous) j["vacuous"] = true;
  if (res.witness) {
    Json w;
    w["m"] = res.witness->m;
    w["n"] = res.witness->n;
    w["lhs"] = res.witness->lhs.str();
    w["rhs"] = res.witness->rhs.str();
    j["witness"] = std::move(w);
  }
  return j;
}

}  // namespace

extern "C" {

const char* lcz_version(void) { return "1.0.0"; }

const char* lcz_last_error(void) { return g_last_error.c_str(); }

void lcz_string_free(char* s) { std::free(s); }

void lcz_series_free(lcz_series* s) { delete s; }
void lcz_arithfun_free(lcz_arithfun* f) { delete f; }
void lcz_binfun_free(lcz_binfun* f) { delete f; }
void lcz_bintype_free(lcz_bintype* b) { delete b; }

/* ---- exact scalar kernel ------------------------------------------------ */

lcz_status lcz_rational_normalize(const char* text, char** out) {
  return guarded([&] {
    require(text != nullptr, "null input");
    emit(out, Rational::parse(text).str());
  });
}

lcz_status lcz_factorial(uint32_t n, char** out) {
  return guarded([&] { emit(out, factorial(n).str()); });
}

lcz_status lcz_q_integer(uint32_t i, const char* q, char** out) {
  return guarded([&] {
    require(q != nullptr, "null q");
    emit(out, q_integer(i, Rational::parse(q)).str());
  });
}

lcz_status lcz_q_factorial(uint32_t n, const char* q, char** out) {
  return guarded([&] {
    require(q != nullptr, "null q");
    emit(out, q_factorial(n, Rational::parse(q)).str());
  });
}

lcz_status lcz_gaussian_binomial(uint32_t n, uint32_t k, const char* q, char** out) {
  return guarded([&] {
    require(q != nullptr, "null q");
    emit(out, gaussian_binomial(n, k, Rational::parse(q)).str());
  });
}

lcz_status lcz_galois_number(uint32_t n, const char* q, char** out) {
  return guarded([&] {
    require(q != nullptr, "null q");
    emit(out, galois_number(n, Rational::parse(q)).str());
  });
}

/* ---- truncated series --------------------------------------------------- */

lcz_status lcz_series_from_json(const char* json_text, lcz_series** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = new lcz_series{series_from_json(parse_json_text(json_text))};
  });
}

lcz_status lcz_series_to_json(const lcz_series* s, char** out) {
  return guarded([&] {
    require(s != nullptr, "null series");
    emit(out, series_to_json(s->value).dump());
  });
}

lcz_status lcz_series_order(const lcz_series* s, uint32_t* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = s->value.order();
  });
}

lcz_status lcz_series_coeff(const lcz_series* s, uint32_t n, char** out) {
  return guarded([&] {
    require(s != nullptr, "null series");
    emit(out, s->value.coeff(n).str());
  });
}

lcz_status lcz_series_add(const lcz_series* f, const lcz_series* g, lcz_series** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_series{add(f->value, g->value)};
  });
}

lcz_status lcz_series_scale(const char* c, const lcz_series* f, lcz_series** out) {
  return guarded([&] {
    require(c != nullptr && f != nullptr && out != nullptr, "null argument");
    *out = new lcz_series{scale(Rational::parse(c), f->value)};
  });
}

lcz_status lcz_series_cauchy_mul(const lcz_series* f, const lcz_series* g, lcz_series** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_series{cauchy_mul(f->value, g->value)};
  });
}

lcz_status lcz_series_odot(const lcz_bintype* b, const lcz_series* f, const lcz_series* g,
                           lcz_series** out) {
  return guarded([&] {
    require(b != nullptr && f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_series{odot(b->value, f->value, g->value)};
  });
}

lcz_status lcz_series_equals_to_order(const lcz_series* f, const lcz_series* g, uint32_t up_to,
                                      int* equal, uint32_t* first_mismatch) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && equal != nullptr, "null argument");
    const SeriesComparison cmp = equals_to_order(f->value, g->value, up_to);
    *equal = cmp.equal ? 1 : 0;
    if (!cmp.equal && first_mismatch != nullptr) *first_mismatch = cmp.first_mismatch;
  });
}

lcz_status lcz_series_closed_form(const lcz_bintype* b, lcz_variant variant, const char* a1,
                                  uint32_t order, lcz_series** out) {
  return guarded([&] {
    require(b != nullptr && a1 != nullptr && out != nullptr, "null argument");
    *out = new lcz_series{
        closed_form_series(b->value, to_variant(variant), Rational::parse(a1), order)};
  });
}

/* ---- arithmetical functions on 1..M ------------------------------------- */

lcz_status lcz_arithfun_from_json(const char* json_text, lcz_arithfun** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = new lcz_arithfun{arithfun_from_json(parse_json_text(json_text))};
  });
}

lcz_status lcz_arithfun_to_json(const lcz_arithfun* f, char** out) {
  return guarded([&] {
    require(f != nullptr, "null function");
    emit(out, arithfun_to_json(f->value).dump());
  });
}

lcz_status lcz_arithfun_bound(const lcz_arithfun* f, uint64_t* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = f->value.bound();
  });
}

lcz_status lcz_arithfun_value(const lcz_arithfun* f, uint64_t n, char** out) {
  return guarded([&] {
    require(f != nullptr, "null function");
    emit(out, f->value.at(n).str());
  });
}

lcz_status lcz_arithfun_builtin(const char* name, uint64_t bound, lcz_arithfun** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const std::string n = name;
    if (n == "zeta")
      *out = new lcz_arithfun{builtin(Builtin::zeta, bound)};
    else if (n == "tau")
      *out = new lcz_arithfun{builtin(Builtin::tau, bound)};
    else if (n == "eps")
      *out = new lcz_arithfun{builtin(Builtin::identity_eps, bound)};
    else if (n == "big_omega")
      *out = new lcz_arithfun{builtin(Builtin::big_omega, bound)};
    else if (n == "small_omega")
      *out = new lcz_arithfun{builtin(Builtin::small_omega, bound)};
    else if (n.rfind("power:", 0) == 0) {
      const unsigned long k = std::stoul(n.substr(6));
      *out = new lcz_arithfun{builtin(Builtin::nth_power, bound, static_cast<unsigned>(k))};
    } else
      throw std::invalid_argument("unknown builtin \"" + n +
                                  "\" (expected zeta | tau | eps | power:<k> | big_omega | "
                                  "small_omega)");
  });
}

lcz_status lcz_arithfun_dirichlet(const lcz_arithfun* f, const lcz_arithfun* g,
                                  lcz_arithfun** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_arithfun{dirichlet_conv(f->value, g->value)};
  });
}

lcz_status lcz_arithfun_unitary(const lcz_arithfun* f, const lcz_arithfun* g, lcz_arithfun** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_arithfun{unitary_conv(f->value, g->value)};
  });
}

lcz_status lcz_arithfun_pointwise_mul(const lcz_arithfun* f, const lcz_arithfun* g,
                                      lcz_arithfun** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_arithfun{pointwise_mul(f->value, g->value)};
  });
}

lcz_status lcz_arithfun_pointwise_add(const lcz_arithfun* f, const lcz_arithfun* g,
                                      lcz_arithfun** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_arithfun{pointwise_add(f->value, g->value)};
  });
}

lcz_status lcz_arithfun_classify(const lcz_arithfun* f, const char* kind, char** report_json) {
  return guarded([&] {
    require(f != nullptr && kind != nullptr, "null argument");
    const std::string k = kind;
    ClassifyKind ck;
    if (k == "completely_multiplicative")
      ck = ClassifyKind::completely_multiplicative;
    else if (k == "multiplicative")
      ck = ClassifyKind::multiplicative;
    else if (k == "completely_additive")
      ck = ClassifyKind::completely_additive;
    else if (k == "additive")
      ck = ClassifyKind::additive;
    else
      throw std::invalid_argument("unknown classify kind \"" + k + "\"");
    emit(report_json, classify_report(kind, classify(f->value, ck)).dump());
  });
}

lcz_status lcz_factorize(uint64_t m, char** json_out) {
  return guarded([&] {
    const Factorization f = factorize(m);
    Json arr = Json::array();
    for (const PrimePower& pp : f.prime_powers) arr.push_back(Json::array({pp.prime, pp.exponent}));
    emit(json_out, arr.dump());
  });
}

lcz_status lcz_omega(uint64_t m, uint32_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = omega(m);
  });
}

/* ---- arithmetical functions on 0..N and binomial types ------------------ */

lcz_status lcz_binfun_from_json(const char* json_text, lcz_binfun** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = new lcz_binfun{binfun_from_json(parse_json_text(json_text))};
  });
}

lcz_status lcz_binfun_to_json(const lcz_binfun* f, char** out) {
  return guarded([&] {
    require(f != nullptr, "null function");
    emit(out, binfun_to_json(f->value).dump());
  });
}

lcz_status lcz_binfun_bound(const lcz_binfun* f, uint32_t* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = f->value.bound();
  });
}

lcz_status lcz_binfun_value(const lcz_binfun* f, uint32_t m, char** out) {
  return guarded([&] {
    require(f != nullptr, "null function");
    emit(out, f->value.at(m).str());
  });
}

lcz_status lcz_binfun_m_convolution(const lcz_bintype* b, const lcz_binfun* f,
                                    const lcz_binfun* g, lcz_binfun** out) {
  return guarded([&] {
    require(b != nullptr && f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_binfun{m_convolution(b->value, f->value, g->value)};
  });
}

lcz_status lcz_binfun_pointwise_mul(const lcz_binfun* f, const lcz_binfun* g, lcz_binfun** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new lcz_binfun{pointwise_mul(f->value, g->value)};
  });
}

lcz_status lcz_binfun_classify(const lcz_binfun* f, const char* kind, char** report_json) {
  return guarded([&] {
    require(f != nullptr && kind != nullptr, "null argument");
    const std::string k = kind;
    BinomialClassifyKind ck;
    if (k == "binomial_multiplicative")
      ck = BinomialClassifyKind::binomial_multiplicative;
    else if (k == "binomial_additive")
      ck = BinomialClassifyKind::binomial_additive;
    else
      throw std::invalid_argument("unknown classify kind \"" + k + "\"");
    emit(report_json, classify_report(kind, binomial_classify(f->value, ck)).dump());
  });
}

lcz_status lcz_bintype_make(const char* family, const char* q, uint32_t n, lcz_bintype** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "null argument");
    const std::string fam = family;
    if (fam == "factorial")
      *out = new lcz_bintype{BinomialType::make_factorial(n)};
    else if (fam == "ones")
      *out = new lcz_bintype{BinomialType::make_ones(n)};
    else if (fam == "q_factorial") {
      require(q != nullptr, "q_factorial family requires q");
      *out = new lcz_bintype{BinomialType::make_q(Rational::parse(q), n)};
    } else
      throw std::invalid_argument("unknown family \"" + fam +
                                  "\" (custom tables go through lcz_bintype_from_json)");
  });
}

lcz_status lcz_bintype_from_json(const char* json_text, lcz_bintype** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    *out = new lcz_bintype{bintype_from_json(parse_json_text(json_text))};
  });
}

lcz_status lcz_bintype_to_json(const lcz_bintype* b, char** out) {
  return guarded([&] {
    require(b != nullptr, "null type");
    emit(out, bintype_to_json(b->value).dump());
  });
}

lcz_status lcz_bintype_order(const lcz_bintype* b, uint32_t* out) {
  return guarded([&] {
    require(b != nullptr && out != nullptr, "null argument");
    *out = b->value.max_order();
  });
}

lcz_status lcz_bintype_b(const lcz_bintype* b, uint32_t n, char** out) {
  return guarded([&] {
    require(b != nullptr, "null type");
    emit(out, b->value.b(n).str());
  });
}

lcz_status lcz_bintype_ell_binomial(const lcz_bintype* b, uint32_t m, uint32_t k, char** out) {
  return guarded([&] {
    require(b != nullptr, "null type");
    emit(out, b->value.ell_binomial(m, k).str());
  });
}

lcz_status lcz_bintype_t_number(const lcz_bintype* b, uint32_t n, char** out) {
  return guarded([&] {
    require(b != nullptr, "null type");
    emit(out, b->value.t_number(n).str());
  });
}

/* ---- embeddings ---------------------------------------------------------- */

lcz_status lcz_eta_m(const lcz_bintype* b, const lcz_series* f, lcz_binfun** out) {
  return guarded([&] {
    require(b != nullptr && f != nullptr && out != nullptr, "null argument");
    *out = new lcz_binfun{eta_m(b->value, f->value)};
  });
}

lcz_status lcz_eta_m_inv(const lcz_bintype* b, const lcz_binfun* f, lcz_series** out) {
  return guarded([&] {
    require(b != nullptr && f != nullptr && out != nullptr, "null argument");
    *out = new lcz_series{eta_m_inv(b->value, f->value)};
  });
}

lcz_status lcz_eta(const lcz_series* f, uint64_t bound, lcz_arithfun** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = new lcz_arithfun{eta(f->value, bound)};
  });
}

/* ---- characterization suites --------------------------------------------- */

lcz_status lcz_check_series(const lcz_series* f, const lcz_bintype* b, lcz_variant variant,
                            lcz_embedding embedding, uint32_t condition, uint32_t trials,
                            uint64_t seed, uint32_t order, char** report_json) {
  return guarded([&] {
    require(f != nullptr && b != nullptr, "null argument");
    SuiteConfig cfg;
    cfg.variant = to_variant(variant);
    cfg.embedding = to_embedding(embedding);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.order = order;
    emit(report_json,
         report_to_json(check_series_condition(f->value, b->value, cfg, int(condition))).dump());
  });
}

lcz_status lcz_run_suite(const lcz_series* f, const lcz_bintype* b, lcz_variant variant,
                         lcz_embedding embedding, uint32_t trials, uint64_t seed, uint32_t order,
                         char** verdict_json, int* consistent) {
  return guarded([&] {
    require(f != nullptr && b != nullptr, "null argument");
    SuiteConfig cfg;
    cfg.variant = to_variant(variant);
    cfg.embedding = to_embedding(embedding);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.order = order;
    const SuiteVerdict v = run_suite(f->value, b->value, cfg);
    if (consistent != nullptr) *consistent = v.consistent ? 1 : 0;
    emit(verdict_json, verdict_to_json(v).dump());
  });
}

lcz_status lcz_check_dirichlet(const lcz_arithfun* f, lcz_variant variant, uint32_t trials,
                               uint64_t seed, char** verdict_json, int* consistent) {
  return guarded([&] {
    require(f != nullptr, "null argument");
    const SuiteVerdict v = check_dirichlet(f->value, to_variant(variant), trials, seed);
    if (consistent != nullptr) *consistent = v.consistent ? 1 : 0;
    emit(verdict_json, verdict_to_json(v).dump());
  });
}

lcz_status lcz_check_dirichlet_condition(const lcz_arithfun* f, lcz_variant variant,
                                         uint32_t condition, uint32_t trials, uint64_t seed,
                                         char** report_json) {
  return guarded([&] {
    require(f != nullptr, "null argument");
    emit(report_json,
         report_to_json(
             check_dirichlet_condition(f->value, to_variant(variant), int(condition), trials, seed))
             .dump());
  });
}

/* ---- enumeration oracles -------------------------------------------------- */

lcz_status lcz_count_subset_chains(uint32_t n, char** count_out) {
  return guarded([&] { emit(count_out, count_subset_chains(n).get_str()); });
}

lcz_status lcz_count_subspaces(uint32_t n, uint32_t k, uint32_t q, char** count_out) {
  return guarded([&] { emit(count_out, count_subspaces(n, k, q).get_str()); });
}

lcz_status lcz_count_complete_flags(uint32_t n, uint32_t q, char** count_out) {
  return guarded([&] { emit(count_out, count_complete_flags(n, q).get_str()); });
}

} /* extern "C" */
