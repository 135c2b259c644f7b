#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "lcz/lcz.h"

using OrderedJson = nlohmann::ordered_json;

namespace {

std::string take(char* p) {
  REQUIRE(p != nullptr);
  std::string s(p);
  lcz_string_free(p);
  return s;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::strlen(lcz_version()) > 0);
  char* out = nullptr;
  CHECK(lcz_rational_normalize("1/0", &out) == LCZ_ERR_PARSE);
  CHECK(std::strlen(lcz_last_error()) > 0);
  CHECK(lcz_rational_normalize(nullptr, &out) == LCZ_ERR_INVALID_ARGUMENT);
  CHECK(lcz_factorial(5, nullptr) == LCZ_ERR_INVALID_ARGUMENT);
  lcz_string_free(nullptr);  // no-op
  lcz_series_free(nullptr);
}

TEST_CASE("scalar kernel through the C surface") {
  char* out = nullptr;
  REQUIRE(lcz_rational_normalize("-6/4", &out) == LCZ_OK);
  CHECK(take(out) == "-3/2");
  REQUIRE(lcz_factorial(10, &out) == LCZ_OK);
  CHECK(take(out) == "3628800");
  REQUIRE(lcz_q_integer(3, "2", &out) == LCZ_OK);
  CHECK(take(out) == "7");
  REQUIRE(lcz_q_factorial(3, "2", &out) == LCZ_OK);
  CHECK(take(out) == "21");
  REQUIRE(lcz_gaussian_binomial(4, 2, "2", &out) == LCZ_OK);
  CHECK(take(out) == "35");
  REQUIRE(lcz_galois_number(3, "2", &out) == LCZ_OK);
  CHECK(take(out) == "16");
  CHECK(lcz_gaussian_binomial(3, 1, "-1", &out) == LCZ_ERR_DOMAIN);
  CHECK(lcz_q_integer(0, "2", &out) == LCZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("series round trip and arithmetic") {
  lcz_series* f = nullptr;
  REQUIRE(lcz_series_from_json(R"({"order": 2, "coeffs": ["1", "1", "1/2"]})", &f) == LCZ_OK);
  uint32_t order = 0;
  REQUIRE(lcz_series_order(f, &order) == LCZ_OK);
  CHECK(order == 2);
  char* coeff = nullptr;
  REQUIRE(lcz_series_coeff(f, 2, &coeff) == LCZ_OK);
  CHECK(take(coeff) == "1/2");
  CHECK(lcz_series_coeff(f, 3, &coeff) == LCZ_ERR_DOMAIN);

  char* json = nullptr;
  REQUIRE(lcz_series_to_json(f, &json) == LCZ_OK);
  const OrderedJson parsed = OrderedJson::parse(take(json));
  CHECK(parsed.at("order") == 2);
  CHECK(parsed.at("coeffs")[2] == "1/2");

  lcz_series* sum = nullptr;
  REQUIRE(lcz_series_add(f, f, &sum) == LCZ_OK);
  REQUIRE(lcz_series_coeff(sum, 1, &coeff) == LCZ_OK);
  CHECK(take(coeff) == "2");

  lcz_series* scaled = nullptr;
  REQUIRE(lcz_series_scale("3", f, &scaled) == LCZ_OK);
  REQUIRE(lcz_series_coeff(scaled, 2, &coeff) == LCZ_OK);
  CHECK(take(coeff) == "3/2");

  lcz_series* prod = nullptr;
  REQUIRE(lcz_series_cauchy_mul(f, f, &prod) == LCZ_OK);
  REQUIRE(lcz_series_coeff(prod, 2, &coeff) == LCZ_OK);
  CHECK(take(coeff) == "2");  // 2^2/2!

  int equal = 0;
  uint32_t mismatch = 0;
  REQUIRE(lcz_series_equals_to_order(f, sum, 2, &equal, &mismatch) == LCZ_OK);
  CHECK(equal == 0);
  CHECK(mismatch == 0);

  CHECK(lcz_series_from_json("not json", &f) == LCZ_ERR_PARSE);
  CHECK(lcz_series_from_json(R"({"order": 3, "coeffs": ["1"]})", &f) == LCZ_ERR_PARSE);

  lcz_series_free(prod);
  lcz_series_free(scaled);
  lcz_series_free(sum);
  lcz_series_free(f);
}

TEST_CASE("binomial types, odot and the embeddings") {
  lcz_bintype* fac = nullptr;
  REQUIRE(lcz_bintype_make("factorial", nullptr, 8, &fac) == LCZ_OK);
  char* out = nullptr;
  REQUIRE(lcz_bintype_b(fac, 5, &out) == LCZ_OK);
  CHECK(take(out) == "120");
  REQUIRE(lcz_bintype_ell_binomial(fac, 4, 2, &out) == LCZ_OK);
  CHECK(take(out) == "6");
  REQUIRE(lcz_bintype_t_number(fac, 5, &out) == LCZ_OK);
  CHECK(take(out) == "32");

  lcz_bintype* q2 = nullptr;
  REQUIRE(lcz_bintype_make("q_factorial", "2", 6, &q2) == LCZ_OK);
  REQUIRE(lcz_bintype_to_json(q2, &out) == LCZ_OK);
  const OrderedJson tj = OrderedJson::parse(take(out));
  CHECK(tj.at("family") == "q_factorial");
  CHECK(tj.at("q") == "2");

  lcz_bintype* weird = nullptr;
  CHECK(lcz_bintype_make("nope", nullptr, 3, &weird) == LCZ_ERR_INVALID_ARGUMENT);
  REQUIRE(lcz_bintype_from_json(R"({"family": "custom", "N": 2, "B": ["1", "1", "-2"]})",
                                &weird) == LCZ_OK);
  REQUIRE(lcz_bintype_b(weird, 2, &out) == LCZ_OK);
  CHECK(take(out) == "-2");

  lcz_series* exp = nullptr;
  REQUIRE(lcz_series_closed_form(fac, LCZ_VARIANT_MULTIPLICATIVE, "1", 8, &exp) == LCZ_OK);
  char* coeff = nullptr;
  REQUIRE(lcz_series_coeff(exp, 4, &coeff) == LCZ_OK);
  CHECK(take(coeff) == "1/24");
  CHECK(lcz_series_closed_form(fac, LCZ_VARIANT_MULTIPLICATIVE, "0", 8, &exp) ==
        LCZ_ERR_INVALID_ARGUMENT);

  lcz_series* sq = nullptr;
  REQUIRE(lcz_series_odot(fac, exp, exp, &sq) == LCZ_OK);
  REQUIRE(lcz_series_coeff(sq, 4, &coeff) == LCZ_OK);
  CHECK(take(coeff) == "1/24");  // B(4) a_4 a_4 = 4!/(4!4!)

  lcz_binfun* embedded = nullptr;
  REQUIRE(lcz_eta_m(fac, exp, &embedded) == LCZ_OK);
  REQUIRE(lcz_binfun_value(embedded, 6, &out) == LCZ_OK);
  CHECK(take(out) == "1");
  char* report = nullptr;
  REQUIRE(lcz_binfun_classify(embedded, "binomial_multiplicative", &report) == LCZ_OK);
  CHECK(OrderedJson::parse(take(report)).at("holds") == true);

  lcz_series* back = nullptr;
  REQUIRE(lcz_eta_m_inv(fac, embedded, &back) == LCZ_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(lcz_series_to_json(exp, &a) == LCZ_OK);
  REQUIRE(lcz_series_to_json(back, &b) == LCZ_OK);
  CHECK(take(a) == take(b));

  lcz_arithfun* classical = nullptr;
  REQUIRE(lcz_eta(exp, 210, &classical) == LCZ_OK);
  REQUIRE(lcz_arithfun_value(classical, 210, &out) == LCZ_OK);
  CHECK(take(out) == "1");

  lcz_arithfun_free(classical);
  lcz_series_free(back);
  lcz_binfun_free(embedded);
  lcz_series_free(sq);
  lcz_series_free(exp);
  lcz_bintype_free(weird);
  lcz_bintype_free(q2);
  lcz_bintype_free(fac);
}

TEST_CASE("function tables, convolutions and classification") {
  lcz_arithfun* zeta = nullptr;
  REQUIRE(lcz_arithfun_builtin("zeta", 100, &zeta) == LCZ_OK);
  lcz_arithfun* tau = nullptr;
  REQUIRE(lcz_arithfun_dirichlet(zeta, zeta, &tau) == LCZ_OK);
  char* out = nullptr;
  REQUIRE(lcz_arithfun_value(tau, 12, &out) == LCZ_OK);
  CHECK(take(out) == "6");

  lcz_arithfun* u = nullptr;
  REQUIRE(lcz_arithfun_unitary(zeta, zeta, &u) == LCZ_OK);
  REQUIRE(lcz_arithfun_value(u, 12, &out) == LCZ_OK);
  CHECK(take(out) == "4");

  char* report = nullptr;
  REQUIRE(lcz_arithfun_classify(tau, "completely_multiplicative", &report) == LCZ_OK);
  const OrderedJson r = OrderedJson::parse(take(report));
  CHECK(r.at("holds") == false);
  CHECK(r.at("witness").at("m") == 2);
  CHECK(lcz_arithfun_classify(tau, "nope", &report) == LCZ_ERR_INVALID_ARGUMENT);

  lcz_arithfun* pow3 = nullptr;
  REQUIRE(lcz_arithfun_builtin("power:3", 50, &pow3) == LCZ_OK);
  REQUIRE(lcz_arithfun_value(pow3, 2, &out) == LCZ_OK);
  CHECK(take(out) == "8");
  CHECK(lcz_arithfun_builtin("nope", 50, &pow3) == LCZ_ERR_INVALID_ARGUMENT);

  REQUIRE(lcz_factorize(12, &out) == LCZ_OK);
  CHECK(take(out) == "[[2,2],[3,1]]");
  uint32_t om = 0;
  REQUIRE(lcz_omega(30030, &om) == LCZ_OK);
  CHECK(om == 6);

  lcz_arithfun_free(pow3);
  lcz_arithfun_free(u);
  lcz_arithfun_free(tau);
  lcz_arithfun_free(zeta);
}

TEST_CASE("suite and oracle entry points") {
  lcz_bintype* fac = nullptr;
  REQUIRE(lcz_bintype_make("factorial", nullptr, 10, &fac) == LCZ_OK);
  lcz_series* exp = nullptr;
  REQUIRE(lcz_series_closed_form(fac, LCZ_VARIANT_MULTIPLICATIVE, "1", 10, &exp) == LCZ_OK);

  char* verdict = nullptr;
  int consistent = 0;
  REQUIRE(lcz_run_suite(exp, fac, LCZ_VARIANT_MULTIPLICATIVE, LCZ_EMBEDDING_BINOMIAL, 20, 42, 10,
                        &verdict, &consistent) == LCZ_OK);
  const OrderedJson v = OrderedJson::parse(take(verdict));
  CHECK(consistent == 1);
  CHECK(v.at("theorem") == "2.1");
  CHECK(v.at("conditions").size() == 5);
  for (const OrderedJson& c : v.at("conditions")) CHECK(c.at("holds") == true);

  char* report = nullptr;
  REQUIRE(lcz_check_series(exp, fac, LCZ_VARIANT_MULTIPLICATIVE, LCZ_EMBEDDING_AUTO, 5, 20, 42,
                           10, &report) == LCZ_OK);
  const OrderedJson r5 = OrderedJson::parse(take(report));
  CHECK(r5.at("id") == 5);
  CHECK(r5.at("holds") == true);
  CHECK(lcz_check_series(exp, fac, LCZ_VARIANT_MULTIPLICATIVE, LCZ_EMBEDDING_AUTO, 9, 20, 42, 10,
                         &report) == LCZ_ERR_INVALID_ARGUMENT);

  lcz_arithfun* square = nullptr;
  REQUIRE(lcz_arithfun_builtin("power:2", 100, &square) == LCZ_OK);
  REQUIRE(lcz_check_dirichlet(square, LCZ_VARIANT_MULTIPLICATIVE, 20, 42, &verdict, &consistent) ==
          LCZ_OK);
  CHECK(consistent == 1);
  CHECK(OrderedJson::parse(take(verdict)).at("theorem") == "1.1");

  char* count = nullptr;
  REQUIRE(lcz_count_subset_chains(5, &count) == LCZ_OK);
  CHECK(take(count) == "120");
  REQUIRE(lcz_count_subspaces(4, 2, 2, &count) == LCZ_OK);
  CHECK(take(count) == "35");
  REQUIRE(lcz_count_complete_flags(3, 2, &count) == LCZ_OK);
  CHECK(take(count) == "21");
  CHECK(lcz_count_subset_chains(9, &count) == LCZ_ERR_LIMIT);
  CHECK(lcz_count_subspaces(4, 2, 6, &count) == LCZ_ERR_INVALID_ARGUMENT);

  lcz_arithfun_free(square);
  lcz_series_free(exp);
  lcz_bintype_free(fac);
}
