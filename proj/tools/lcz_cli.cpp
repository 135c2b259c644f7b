// lcz command-line front end. Talks to the library exclusively through the
// C API in lcz/lcz.h; JSON rendering and argument parsing live here.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcz/lcz.h"

namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInconsistent = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owned C string from the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { lcz_string_free(p); }
  std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using SeriesHandle = Handle<lcz_series, lcz_series_free>;
using FunHandle = Handle<lcz_arithfun, lcz_arithfun_free>;
using BinFunHandle = Handle<lcz_binfun, lcz_binfun_free>;
using TypeHandle = Handle<lcz_bintype, lcz_bintype_free>;

void check(lcz_status status) {
  if (status != LCZ_OK) throw InputError(lcz_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text << "\n";
}

// Options shared by the report-producing subcommands.
struct CommonOpts {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  bool seed_from_flag = false;

  void attach(CLI::App* cmd, bool with_seed = true) {
    cmd->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out, "Write the result to this path instead of stdout");
    if (with_seed)
      cmd->add_option("--seed", seed, "Seed for the randomized conditions")
          ->each([this](const std::string&) { seed_from_flag = true; });
  }

  // flag wins over LCZ_SEED, which wins over the documented default
  void resolve_seed() {
    if (seed_from_flag) return;
    if (const char* env = std::getenv("LCZ_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        throw InputError(std::string("LCZ_SEED is not an unsigned integer: ") + env);
      }
    }
  }
};

lcz_variant parse_variant(const std::string& name) {
  if (name == "multiplicative") return LCZ_VARIANT_MULTIPLICATIVE;
  if (name == "additive") return LCZ_VARIANT_ADDITIVE;
  throw InputError("variant must be multiplicative or additive");
}

lcz_embedding parse_embedding(const std::string& name) {
  if (name == "auto") return LCZ_EMBEDDING_AUTO;
  if (name == "classical") return LCZ_EMBEDDING_CLASSICAL;
  if (name == "binomial") return LCZ_EMBEDDING_BINOMIAL;
  throw InputError("embedding must be auto, classical or binomial");
}

// --type: factorial | ones | q:<rational> | <path to a binomial-type JSON>
void make_type(const std::string& spec, std::uint32_t n, TypeHandle& out) {
  if (spec == "factorial" || spec == "ones") {
    check(lcz_bintype_make(spec.c_str(), nullptr, n, out.out()));
    return;
  }
  if (spec.rfind("q:", 0) == 0) {
    check(lcz_bintype_make("q_factorial", spec.substr(2).c_str(), n, out.out()));
    return;
  }
  check(lcz_bintype_from_json(read_file(spec).c_str(), out.out()));
}

void load_series(const std::string& path, SeriesHandle& out) {
  check(lcz_series_from_json(read_file(path).c_str(), out.out()));
}

void load_fun(const std::string& path, FunHandle& out) {
  check(lcz_arithfun_from_json(read_file(path).c_str(), out.out()));
}

const char* series_condition_name(int id) {
  switch (id) {
    case 1: return "closed form";
    case 2: return "embedded function";
    case 3: return "lambek distributivity";
    case 4: return "square distributivity";
    case 5: return "particular product";
  }
  return "?";
}

const char* dirichlet_condition_name(int id, lcz_variant variant) {
  switch (id) {
    case 1:
      return variant == LCZ_VARIANT_MULTIPLICATIVE ? "completely multiplicative"
                                                   : "completely additive";
    case 2: return "lambek distributivity";
    case 3: return "square distributivity";
    case 4: return "f tau identity";
  }
  return "?";
}

std::string render_condition_line(const OrderedJson& c, const std::string& name) {
  std::ostringstream line;
  const bool holds = c.at("holds").get<bool>();
  line << "  (" << c.at("id").get<int>() << ") ";
  line.setf(std::ios::left, std::ios::adjustfield);
  line.width(26);
  line << name;
  line.width(6);
  line << (holds ? "hold" : "FAIL");
  line << c.at("mode").get<std::string>();
  if (c.contains("trials")) line << " (" << c.at("trials").get<unsigned>() << " trials)";
  line << ", scope " << c.at("scope").get<std::uint64_t>();
  if (c.contains("hypothesis_ok") && !c.at("hypothesis_ok").get<bool>())
    line << " [hypothesis a_1 != 0 violated]";
  if (c.contains("note")) line << "\n      note: " << c.at("note").get<std::string>();
  if (c.contains("witness")) line << "\n      witness: " << c.at("witness").dump();
  return line.str();
}

std::string render_verdict_text(const OrderedJson& v, bool dirichlet, lcz_variant variant,
                                const std::string& context) {
  std::ostringstream out;
  out << "suite " << v.at("theorem").get<std::string>();
  if (!context.empty()) out << " — " << context;
  out << "\n";
  for (const OrderedJson& c : v.at("conditions")) {
    const int id = c.at("id").get<int>();
    out << render_condition_line(
               c, dirichlet ? dirichlet_condition_name(id, variant) : series_condition_name(id))
        << "\n";
  }
  out << "consistent: " << (v.at("consistent").get<bool>() ? "yes" : "no");
  return out.str();
}

std::string render_report_text(const OrderedJson& r, bool dirichlet, lcz_variant variant) {
  const int id = r.at("id").get<int>();
  return render_condition_line(
      r, dirichlet ? dirichlet_condition_name(id, variant) : series_condition_name(id));
}

// ---- suite / check -------------------------------------------------------

struct SuiteOpts {
  CommonOpts common;
  std::string series_path;
  std::string fn_path;
  std::string type_spec = "factorial";
  std::string variant = "multiplicative";
  std::string embedding = "auto";
  std::uint32_t order = 16;
  std::uint32_t trials = 50;
  std::uint32_t condition = 0;  // check only

  void attach(CLI::App* cmd, bool with_condition) {
    cmd->add_option("--series", series_path, "Series JSON file (series suites)");
    cmd->add_option("--fn", fn_path,
                    "Function JSON file (Dirichlet suites; the file's bound is used)");
    cmd->add_option("--type", type_spec,
                    "Binomial type: factorial | ones | q:<rational> | <file.json>");
    cmd->add_option("--variant", variant, "multiplicative or additive");
    cmd->add_option("--embedding", embedding,
                    "Condition (2) embedding: auto | classical | binomial");
    cmd->add_option("--order", order, "Working order for series checks");
    cmd->add_option("--trials", trials, "Trials for the randomized conditions");
    if (with_condition)
      cmd->add_option("--condition", condition, "Condition number to check")->required();
    common.attach(cmd);
  }
};

int run_suite_cmd(SuiteOpts& o, bool single_condition) {
  o.common.resolve_seed();
  const lcz_variant variant = parse_variant(o.variant);
  if (o.series_path.empty() == o.fn_path.empty())
    throw InputError("exactly one of --series and --fn is required");

  CStr json;
  int consistent = 1;
  bool dirichlet = false;
  if (!o.series_path.empty()) {
    SeriesHandle series;
    load_series(o.series_path, series);
    TypeHandle type;
    make_type(o.type_spec, o.order, type);
    const lcz_embedding embedding = parse_embedding(o.embedding);
    if (single_condition)
      check(lcz_check_series(series.get(), type.get(), variant, embedding, o.condition, o.trials,
                             o.common.seed, o.order, &json.p));
    else
      check(lcz_run_suite(series.get(), type.get(), variant, embedding, o.trials, o.common.seed,
                          o.order, &json.p, &consistent));
  } else {
    dirichlet = true;
    FunHandle fn;
    load_fun(o.fn_path, fn);
    if (single_condition)
      check(lcz_check_dirichlet_condition(fn.get(), variant, o.condition, o.trials, o.common.seed,
                                          &json.p));
    else
      check(lcz_check_dirichlet(fn.get(), variant, o.trials, o.common.seed, &json.p, &consistent));
  }

  std::ostringstream context;
  if (dirichlet)
    context << "fn " << o.fn_path << ", " << o.variant << ", bound per file, trials " << o.trials
            << ", seed " << o.common.seed;
  else
    context << "series " << o.series_path << ", " << o.variant << ", type " << o.type_spec
            << ", order " << o.order << ", trials " << o.trials << ", seed " << o.common.seed;

  const OrderedJson parsed = OrderedJson::parse(json.str());
  if (o.common.format == "json")
    write_output(parsed.dump(2), o.common.out);
  else if (single_condition)
    write_output(render_report_text(parsed, dirichlet, variant), o.common.out);
  else
    write_output(render_verdict_text(parsed, dirichlet, variant, context.str()), o.common.out);

  if (!single_condition && consistent == 0) return kExitInconsistent;
  return kExitOk;
}

// ---- conv ------------------------------------------------------------------

struct ConvOpts {
  CommonOpts common;
  std::string kind;
  std::string f_path;
  std::string g_path;
  std::string type_spec = "factorial";

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "dirichlet | unitary | binomial")->required();
    cmd->add_option("--f", f_path, "Left operand JSON file")->required();
    cmd->add_option("--g", g_path, "Right operand JSON file")->required();
    cmd->add_option("--type", type_spec, "Binomial type for --kind binomial");
    common.attach(cmd, /*with_seed=*/false);
  }
};

std::string render_table(const OrderedJson& fn_json, std::uint64_t first_index) {
  std::ostringstream out;
  std::uint64_t n = first_index;
  for (const OrderedJson& v : fn_json.at("values")) {
    out << n << "\t" << v.get<std::string>() << "\n";
    ++n;
  }
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

int run_conv_cmd(ConvOpts& o) {
  CStr result;
  std::uint64_t first_index = 1;
  if (o.kind == "dirichlet" || o.kind == "unitary") {
    FunHandle f, g;
    load_fun(o.f_path, f);
    load_fun(o.g_path, g);
    FunHandle conv;
    check(o.kind == "dirichlet" ? lcz_arithfun_dirichlet(f.get(), g.get(), conv.out())
                                : lcz_arithfun_unitary(f.get(), g.get(), conv.out()));
    check(lcz_arithfun_to_json(conv.get(), &result.p));
  } else if (o.kind == "binomial") {
    first_index = 0;
    BinFunHandle f, g;
    check(lcz_binfun_from_json(read_file(o.f_path).c_str(), f.out()));
    check(lcz_binfun_from_json(read_file(o.g_path).c_str(), g.out()));
    std::uint32_t bound = 0;
    check(lcz_binfun_bound(f.get(), &bound));
    TypeHandle type;
    make_type(o.type_spec, bound, type);
    BinFunHandle conv;
    check(lcz_binfun_m_convolution(type.get(), f.get(), g.get(), conv.out()));
    check(lcz_binfun_to_json(conv.get(), &result.p));
  } else {
    throw InputError("conv kind must be dirichlet, unitary or binomial");
  }

  const OrderedJson parsed = OrderedJson::parse(result.str());
  if (o.common.format == "json")
    write_output(parsed.dump(2), o.common.out);
  else
    write_output(render_table(parsed, first_index), o.common.out);
  return kExitOk;
}

// ---- generate ----------------------------------------------------------------

struct GenerateOpts {
  CommonOpts common;
  std::string type_spec = "factorial";
  std::string variant = "multiplicative";
  std::string a1 = "1";
  std::uint32_t order = 16;
  std::string fn_name;
  std::uint64_t bound = 200;

  void attach(CLI::App* cmd) {
    cmd->add_option("--type", type_spec, "Binomial type for the closed-form series");
    cmd->add_option("--variant", variant, "multiplicative or additive");
    cmd->add_option("--a1", a1, "Value of a_1 (nonzero rational)");
    cmd->add_option("--order", order, "Series order");
    cmd->add_option("--fn", fn_name,
                    "Emit a builtin function table instead: zeta | tau | eps | power:<k> | "
                    "big_omega | small_omega");
    cmd->add_option("--bound", bound, "Bound for --fn tables");
    common.attach(cmd, /*with_seed=*/false);
  }
};

int run_generate_cmd(GenerateOpts& o) {
  CStr json;
  if (!o.fn_name.empty()) {
    FunHandle fn;
    check(lcz_arithfun_builtin(o.fn_name.c_str(), o.bound, fn.out()));
    check(lcz_arithfun_to_json(fn.get(), &json.p));
  } else {
    TypeHandle type;
    make_type(o.type_spec, o.order, type);
    SeriesHandle series;
    check(lcz_series_closed_form(type.get(), parse_variant(o.variant), o.a1.c_str(), o.order,
                                 series.out()));
    check(lcz_series_to_json(series.get(), &json.p));
  }
  write_output(OrderedJson::parse(json.str()).dump(2), o.common.out);
  return kExitOk;
}

// ---- classify ------------------------------------------------------------------

struct ClassifyOpts {
  CommonOpts common;
  std::string fn_path;
  std::string binfn_path;
  std::string kind;

  void attach(CLI::App* cmd) {
    cmd->add_option("--fn", fn_path, "Function JSON file tabulated on 1..M");
    cmd->add_option("--binfn", binfn_path, "Function JSON file tabulated on 0..N");
    cmd->add_option("--kind", kind,
                    "completely_multiplicative | multiplicative | completely_additive | additive "
                    "| binomial_multiplicative | binomial_additive")
        ->required();
    common.attach(cmd, /*with_seed=*/false);
  }
};

int run_classify_cmd(ClassifyOpts& o) {
  if (o.fn_path.empty() == o.binfn_path.empty())
    throw InputError("exactly one of --fn and --binfn is required");
  CStr report;
  if (!o.fn_path.empty()) {
    FunHandle fn;
    load_fun(o.fn_path, fn);
    check(lcz_arithfun_classify(fn.get(), o.kind.c_str(), &report.p));
  } else {
    BinFunHandle fn;
    check(lcz_binfun_from_json(read_file(o.binfn_path).c_str(), fn.out()));
    check(lcz_binfun_classify(fn.get(), o.kind.c_str(), &report.p));
  }
  const OrderedJson parsed = OrderedJson::parse(report.str());
  if (o.common.format == "json") {
    write_output(parsed.dump(2), o.common.out);
  } else {
    std::ostringstream out;
    out << o.kind << ": " << (parsed.at("holds").get<bool>() ? "yes" : "no");
    if (parsed.contains("vacuous")) out << " (vacuous: the function is identically zero)";
    if (parsed.contains("witness")) out << "\n  witness: " << parsed.at("witness").dump();
    write_output(out.str(), o.common.out);
  }
  return kExitOk;
}

// ---- oracle ---------------------------------------------------------------------

struct OracleOpts {
  CommonOpts common;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 2;
};

int run_oracle_cmd(const std::string& kind, OracleOpts& o) {
  CStr count;
  CStr closed;
  OrderedJson params;
  if (kind == "chains") {
    check(lcz_count_subset_chains(o.n, &count.p));
    check(lcz_factorial(o.n, &closed.p));
    params["n"] = o.n;
  } else if (kind == "subspaces") {
    check(lcz_count_subspaces(o.n, o.k, o.q, &count.p));
    check(lcz_gaussian_binomial(o.n, o.k, std::to_string(o.q).c_str(), &closed.p));
    params["n"] = o.n;
    params["k"] = o.k;
    params["q"] = o.q;
  } else {
    check(lcz_count_complete_flags(o.n, o.q, &count.p));
    check(lcz_q_factorial(o.n, std::to_string(o.q).c_str(), &closed.p));
    params["n"] = o.n;
    params["q"] = o.q;
  }

  const bool match = count.str() == closed.str();
  if (o.common.format == "json") {
    OrderedJson out;
    out["kind"] = kind;
    out["params"] = params;
    out["count"] = count.str();
    out["closed_form"] = closed.str();
    out["match"] = match;
    write_output(out.dump(2), o.common.out);
  } else {
    std::ostringstream out;
    out << kind << " " << params.dump() << ": count = " << count.str()
        << ", closed form = " << closed.str() << (match ? "" : "  MISMATCH");
    write_output(out.str(), o.common.out);
  }
  return match ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checkers for Lambek-Carlitz type characterizations"};
  app.require_subcommand(1);

  SuiteOpts suite_opts;
  CLI::App* suite = app.add_subcommand(
      "suite", "Run every condition of a characterization suite and check consistency");
  suite_opts.attach(suite, /*with_condition=*/false);

  SuiteOpts check_opts;
  CLI::App* check_cmd = app.add_subcommand("check", "Run a single numbered condition");
  check_opts.attach(check_cmd, /*with_condition=*/true);

  ConvOpts conv_opts;
  CLI::App* conv = app.add_subcommand("conv", "Convolve two tabulated functions");
  conv_opts.attach(conv);

  GenerateOpts generate_opts;
  CLI::App* generate =
      app.add_subcommand("generate", "Emit closed-form series or builtin function tables");
  generate_opts.attach(generate);

  ClassifyOpts classify_opts;
  CLI::App* classify = app.add_subcommand("classify", "Test a multiplicativity/additivity kind");
  classify_opts.attach(classify);

  OracleOpts oracle_opts;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Enumeration oracles next to their closed forms");
  oracle->require_subcommand(1);
  CLI::App* chains = oracle->add_subcommand("chains", "Count maximal subset chains of {1..n}");
  chains->add_option("--n", oracle_opts.n, "Set size")->required();
  oracle_opts.common.attach(chains, /*with_seed=*/false);
  CLI::App* subspaces =
      oracle->add_subcommand("subspaces", "Count k-dimensional subspaces of F_q^n");
  subspaces->add_option("--n", oracle_opts.n, "Ambient dimension")->required();
  subspaces->add_option("--k", oracle_opts.k, "Subspace dimension")->required();
  subspaces->add_option("--q", oracle_opts.q, "Prime field size")->required();
  oracle_opts.common.attach(subspaces, /*with_seed=*/false);
  CLI::App* flags = oracle->add_subcommand("flags", "Count complete flags of F_q^n");
  flags->add_option("--n", oracle_opts.n, "Dimension")->required();
  flags->add_option("--q", oracle_opts.q, "Prime field size")->required();
  oracle_opts.common.attach(flags, /*with_seed=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (suite->parsed()) return run_suite_cmd(suite_opts, /*single_condition=*/false);
    if (check_cmd->parsed()) return run_suite_cmd(check_opts, /*single_condition=*/true);
    if (conv->parsed()) return run_conv_cmd(conv_opts);
    if (generate->parsed()) return run_generate_cmd(generate_opts);
    if (classify->parsed()) return run_classify_cmd(classify_opts);
    if (oracle->parsed()) {
      if (chains->parsed()) return run_oracle_cmd("chains", oracle_opts);
      if (subspaces->parsed()) return run_oracle_cmd("subspaces", oracle_opts);
      if (flags->parsed()) return run_oracle_cmd("flags", oracle_opts);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
