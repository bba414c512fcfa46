#include "dsum/cli.hpp"

#include "dsum/bernoulli.hpp"
#include "dsum/char_bernoulli.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/dirichlet.hpp"
#include "dsum/integrals.hpp"
#include "dsum/params.hpp"
#include "dsum/report.hpp"
#include "dsum/sweep.hpp"
#include "dsum/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace dsum {

namespace {

struct Output {
  std::ostream& out;
  bool pretty = false;
  void emit(const Json& j) const { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

Json char_json(const DirichletCharacter& chi) {
  Json j = Json::object();
  j["spec"] = character_spec(chi);
  j["modulus"] = chi.modulus();
  j["label"] = chi.label();
  j["exponents"] = chi.exponents();
  j["order"] = chi.order();
  j["conductor"] = chi.conductor();
  j["primitive"] = chi.is_primitive();
  j["principal"] = chi.is_principal();
  j["parity"] = chi.parity();
  return j;
}

CharacterFilter parse_filter(const std::string& s) {
  if (s == "all") return CharacterFilter::All;
  if (s == "primitive") return CharacterFilter::Primitive;
  if (s == "nonprincipal-primitive") return CharacterFilter::NonprincipalPrimitive;
  throw std::invalid_argument("unknown character filter '" + s + "'");
}

bool is_integer_literal(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size() || s.size() > 18) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Parameter flags shared by verify and integral. Scalars are kept as the
// strings the user typed; Params parses them on access.
struct ParamFlags {
  std::string params_json;
  std::map<std::string, std::string> scalars;
  std::map<std::string, std::string> lists;
  bool force = false;
  bool no_permutations = false;

  static constexpr const char* kScalars[] = {"p", "b", "c", "n", "m", "l", "q", "scale", "mu", "b1", "b2",
                                             "x", "y1", "y2", "t", "alpha", "beta", "chi", "chi1", "chi2"};
  static constexpr const char* kLists[] = {"degrees", "slopes", "offsets", "chars", "f", "y"};

  void attach(CLI::App* app) {
    app->add_option("--params", params_json, "parameters as a JSON object");
    for (const char* k : kScalars) app->add_option(std::string("--") + k, scalars[k]);
    for (const char* k : kLists) app->add_option(std::string("--") + k, lists[k], "comma separated");
    app->add_option("--s", scalars["s"], "Laplace variable (decimal)");
    app->add_flag("--force", force, "evaluate even when a hypothesis fails");
    app->add_flag("--no-permutations", no_permutations, "int-32-oracle: skip the permutation sub-checks");
  }

  Params build() const {
    Params p;
    if (!params_json.empty()) p = Params::parse(params_json);
    Json j = p.json();
    for (const auto& [k, v] : scalars) {
      if (v.empty()) continue;
      if (k == "s") {
        size_t used = 0;
        double d = 0;
        try {
          d = std::stod(v, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != v.size()) throw std::invalid_argument("parameter 's': expected a number");
        j[k] = d;
      } else if (k.rfind("chi", 0) != 0 && is_integer_literal(v)) {
        j[k] = std::stoll(v);
      } else {
        j[k] = v;
      }
    }
    for (const auto& [k, v] : lists) {
      if (v.empty()) continue;
      Json arr = Json::array();
      for (const auto& item : split(v)) {
        if (k == "degrees") {
          Rational r = Rational::parse(item);
          if (!r.is_integer()) throw std::invalid_argument("parameter 'degrees': expected integers");
          arr.push_back(r.to_integer());
        } else {
          arr.push_back(item);
        }
      }
      j[k] = arr;
    }
    if (force) j["force"] = true;
    if (no_permutations) j["permutations"] = false;
    return Params(j);
  }
};

int cmd_bernoulli(const Output& o, std::optional<int> number, std::optional<int> poly, std::optional<int> periodic,
                  const std::string& x, const std::string& chi_spec) {
  int chosen = number.has_value() + poly.has_value() + periodic.has_value();
  if (chosen != 1) throw std::invalid_argument("bernoulli: give exactly one of --number, --poly, --periodic");
  std::optional<DirichletCharacter> chi;
  if (!chi_spec.empty()) chi = parse_character(chi_spec);
  Json j = Json::object();
  if (number) {
    if (*number < 0) throw std::invalid_argument("--number: must be >= 0");
    j["value"] = chi ? scalar_to_json(gen_bernoulli_number(*chi, *number)) : scalar_to_json(bernoulli_number(*number));
  } else if (poly) {
    if (*poly < 0) throw std::invalid_argument("--poly: must be >= 0");
    Json coeffs = Json::array();
    if (chi) {
      for (const auto& c : gen_bernoulli_poly(*chi, *poly).coeffs()) coeffs.push_back(cyclotomic_to_json(c));
    } else {
      for (const auto& c : bernoulli_poly(*poly).coeffs()) coeffs.push_back(c.str());
    }
    j["coeffs"] = coeffs;
  } else {
    if (*periodic < 1) throw std::invalid_argument("--periodic: must be >= 1");
    if (x.empty()) throw std::invalid_argument("--periodic needs --x");
    Rational xv = Rational::parse(x);
    j["value"] = chi ? scalar_to_json(gen_bernoulli_function(*chi, *periodic, xv))
                     : scalar_to_json(periodic_bernoulli(*periodic, xv));
  }
  o.emit(j);
  return kExitOk;
}

int cmd_sum(const Output& o, const std::string& family_name, int p, long long b, long long c,
            const std::string& chi, const std::string& chi1, const std::string& chi2) {
  auto family = parse_sum_family(family_name);
  if (!family) throw std::invalid_argument("unknown sum family '" + family_name + "'");
  if (b < 1 || c < 1) throw std::invalid_argument("sum: b and c must be >= 1");
  Json j = Json::object();
  j["family"] = to_string(*family);
  Json chars = Json::array();
  Scalar value;
  auto need = [](const std::string& s, const char* flag) {
    if (s.empty()) throw std::invalid_argument(std::string("sum: missing ") + flag);
    return parse_character(s);
  };
  switch (*family) {
    case SumFamily::Classical:
      value = classical_dedekind_sum(b, c);
      break;
    case SumFamily::Apostol:
      if (p < 1) throw std::invalid_argument("sum: --p must be >= 1");
      value = apostol_sum(p, b, c);
      break;
    case SumFamily::CharSingle: {
      if (p < 1) throw std::invalid_argument("sum: --p must be >= 1");
      DirichletCharacter x = need(chi, "--chi");
      chars.push_back(character_spec(x));
      value = char_single_sum(p, b, c, x);
      break;
    }
    case SumFamily::CharPair:
    case SumFamily::Hat:
    case SumFamily::Tilde: {
      if (p < 1) throw std::invalid_argument("sum: --p must be >= 1");
      DirichletCharacter x1 = need(chi1, "--chi1"), x2 = need(chi2, "--chi2");
      chars.push_back(character_spec(x1));
      chars.push_back(character_spec(x2));
      value = *family == SumFamily::CharPair ? char_pair_sum(p, b, c, x1, x2)
              : *family == SumFamily::Hat    ? hat_sum(p, b, c, x1, x2)
                                             : tilde_sum(p, b, c, x1, x2);
      break;
    }
  }
  if (*family != SumFamily::Classical) j["p"] = p;
  j["b"] = b;
  j["c"] = c;
  j["chars"] = chars;
  j["value"] = scalar_to_json(value);
  o.emit(j);
  return kExitOk;
}

int cmd_integral(const Output& o, const std::string& mode, const ParamFlags& flags) {
  Params p = flags.build();
  ProductIntegralSpec spec;
  spec.degrees = p.ints("degrees");
  spec.slopes = p.rationals("slopes");
  spec.offsets = p.rationals("offsets");
  spec.x = p.rational_or("x", Rational(1));
  spec.validate();
  Json j = Json::object();
  j["mode"] = mode;
  if (p.has("chars")) {
    auto chars = p.characters("chars");
    if (mode == "direct") {
      j["value"] = scalar_to_json(char_product_integral_direct(spec, chars));
    } else {
      CharFormulaResult r = char_product_integral_formula(spec, chars);
      j["value"] = scalar_to_json(r.value);
      j["tail"] = scalar_to_json(r.tail);
    }
  } else {
    Rational v = mode == "direct" ? product_integral_direct(spec) : product_integral_formula(spec);
    j["value"] = v.str();
    j["scaled"] = (v / spec.factorial_weight()).str();
  }
  o.emit(j);
  return kExitOk;
}

int cmd_verify(const Output& o, const std::string& id, const ParamFlags& flags, std::optional<double> tolerance) {
  if (!is_identity_id(id)) throw std::invalid_argument("unknown identity id '" + id + "'");
  VerifyOptions opts;
  if (tolerance) opts.tolerance = *tolerance;
  VerificationReport r = verify_identity(id, flags.build(), opts);
  o.emit(r.to_json());
  return r.verdict == Verdict::Mismatch ? kExitMismatch : kExitOk;
}

struct SweepFlags {
  std::string id, p, n, m, l, k, k_pairs;
  std::optional<long long> bc_max, scale_max;
  std::optional<int> count;
  bool all_bc = false, coprime = false, summary_only = false;
};

int cmd_sweep(const Output& o, const SweepFlags& f, std::uint64_t seed, int jobs, std::optional<double> tolerance) {
  if (!is_identity_id(f.id)) throw std::invalid_argument("unknown identity id '" + f.id + "'");
  GridSpec g;
  auto ints = [](const std::string& s) {
    std::vector<int> v;
    if (s.empty()) return v;
    for (long long x : parse_range_list(s)) v.push_back(static_cast<int>(x));
    return v;
  };
  g.p = ints(f.p);
  g.n = ints(f.n);
  g.m = ints(f.m);
  g.l = ints(f.l);
  if (!f.k.empty()) g.k = parse_range_list(f.k);
  if (!f.k_pairs.empty()) g.k_pairs = parse_pair_list(f.k_pairs);
  g.bc_max = f.bc_max;
  g.scale_max = f.scale_max;
  g.count = f.count;
  g.seed = seed;
  if (f.all_bc && f.coprime) throw std::invalid_argument("sweep: --coprime and --all-bc exclude each other");
  if (f.all_bc) g.coprime = false;
  if (f.coprime) g.coprime = true;
  VerifyOptions opts;
  if (tolerance) opts.tolerance = *tolerance;
  SweepResult res = sweep(f.id, expand_grid(f.id, g), jobs, opts);
  if (!f.summary_only)
    for (const auto& r : res.reports) o.out << r.to_json().dump() << '\n';
  o.emit(Json{{"summary", res.summary.to_json()}});
  return res.summary.mismatch > 0 ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dedekind-type sums, Bernoulli functions and their identities"};
  app.name("dsum");
  app.require_subcommand(1);
  app.fallthrough();

  bool json = true, pretty = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  app.add_flag("--json", json, "emit JSON (the default and only format)");
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_option("--jobs", jobs, "worker threads for sweep")->check(CLI::Range(1, 256));
  app.add_option("--seed", seed, "seed for random grids");
  app.add_option("--tolerance", tolerance, "relative tolerance for the Laplace checks")->check(CLI::PositiveNumber);

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers, polynomials and periodic functions");
  std::optional<int> number, poly, periodic;
  std::string bx, bchi;
  bern->add_option("--number", number, "B_n (or B_{n,chi} with --chi)");
  bern->add_option("--poly", poly, "coefficients of B_n(x), constant term first");
  bern->add_option("--periodic", periodic, "periodic function at --x");
  bern->add_option("--x", bx, "argument, p/q");
  bern->add_option("--chi", bchi, "character k:label for the generalized versions");

  auto* chr = app.add_subcommand("char", "Dirichlet characters");
  chr->require_subcommand(1);
  auto* chr_list = chr->add_subcommand("list", "characters of a modulus");
  long long list_k = 0;
  std::string filter = "all";
  chr_list->add_option("--k", list_k, "modulus")->required()->check(CLI::Range(1LL, 100000LL));
  chr_list->add_option("--filter", filter, "all | primitive | nonprincipal-primitive");
  auto* chr_show = chr->add_subcommand("show", "one character and its values");
  std::string show_spec;
  chr_show->add_option("--chi", show_spec, "k:label")->required();

  auto* sum = app.add_subcommand("sum", "Dedekind-type sums");
  std::string family, schi, schi1, schi2;
  int sp = 1;
  long long sb = 0, sc = 0;
  sum->add_option("--family", family, "classical | apostol | char_single | char_pair | hat | tilde")->required();
  sum->add_option("--p", sp, "index p");
  sum->add_option("--b", sb)->required();
  sum->add_option("--c", sc)->required();
  sum->add_option("--chi", schi);
  sum->add_option("--chi1", schi1);
  sum->add_option("--chi2", schi2);

  auto* integ = app.add_subcommand("integral", "integrals of products of Bernoulli polynomials");
  integ->require_subcommand(1);
  ParamFlags direct_flags, formula_flags;
  auto* integ_direct = integ->add_subcommand("direct", "piecewise exact integration");
  auto* integ_formula = integ->add_subcommand("formula", "integration-by-parts formula");
  direct_flags.attach(integ_direct);
  formula_flags.attach(integ_formula);

  auto* ver = app.add_subcommand("verify", "check one identity at one parameter point");
  std::string vid;
  ParamFlags vflags;
  ver->add_option("--id", vid, "identity id")->required();
  vflags.attach(ver);

  auto* sw = app.add_subcommand("sweep", "check one identity over a grid");
  SweepFlags sf;
  sw->add_option("--id", sf.id, "identity id")->required();
  sw->add_option("--p", sf.p, "range list, e.g. 2..6 or 1,3,5");
  sw->add_option("--n", sf.n);
  sw->add_option("--m", sf.m);
  sw->add_option("--l", sf.l);
  sw->add_option("--k", sf.k, "moduli, e.g. 3,4,5,7");
  sw->add_option("--k-pairs", sf.k_pairs, "modulus pairs, e.g. 3:4,3:5");
  sw->add_option("--bc-max", sf.bc_max, "b and c run over 1..bc-max")->check(CLI::Range(1LL, 1000LL));
  sw->add_option("--scale-max", sf.scale_max, "lek2: q = 1..scale-max")->check(CLI::Range(1LL, 100LL));
  sw->add_option("--count", sf.count, "size of random grids")->check(CLI::Range(0, 1000000));
  sw->add_flag("--coprime", sf.coprime, "only gcd(b, c) = 1");
  sw->add_flag("--all-bc", sf.all_bc, "include pairs with gcd(b, c) > 1");
  sw->add_flag("--summary-only", sf.summary_only, "print only the summary line");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dsum: error: " << e.what() << '\n';
    return kExitUsage;
  }
  (void)json;

  Output o{out, pretty};
  try {
    if (bern->parsed()) return cmd_bernoulli(o, number, poly, periodic, bx, bchi);
    if (chr_list->parsed()) {
      Json arr = Json::array();
      for (const auto& chi : enumerate_characters(list_k, parse_filter(filter))) arr.push_back(char_json(chi));
      o.emit(arr);
      return kExitOk;
    }
    if (chr_show->parsed()) {
      DirichletCharacter chi = parse_character(show_spec);
      Json j = char_json(chi);
      Json values = Json::array();
      for (long long n = 0; n < chi.modulus(); ++n)
        values.push_back(chi.value_exponent(n) < 0 ? Json(nullptr) : cyclotomic_to_json(chi(n)));
      j["values"] = values;
      o.emit(j);
      return kExitOk;
    }
    if (sum->parsed()) return cmd_sum(o, family, sp, sb, sc, schi, schi1, schi2);
    if (integ_direct->parsed()) return cmd_integral(o, "direct", direct_flags);
    if (integ_formula->parsed()) return cmd_integral(o, "formula", formula_flags);
    if (ver->parsed()) return cmd_verify(o, vid, vflags, tolerance);
    if (sw->parsed()) return cmd_sweep(o, sf, seed, jobs, tolerance);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (auto& ch : msg)
      if (ch == '\n') ch = ' ';
    err << "dsum: error: " << msg << '\n';
    return kExitUsage;
  }
  err << "dsum: error: no subcommand\n";
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace dsum
