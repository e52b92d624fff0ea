#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heckoid/candidate_search.hpp"
#include "heckoid/factor.hpp"
#include "heckoid/report.hpp"
#include "heckoid/slope_half.hpp"

using namespace heckoid;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kFailure = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  long precision = 0;
  bool serial = false;
  std::string output;

  PrecisionPolicy policy() const {
    PrecisionPolicy pol;
    if (precision != 0) {
      pol.start = precision;
      return pol;
    }
    if (const char* env = std::getenv("HECKOID_PRECISION"); env && *env) {
      pol = PrecisionPolicy::from_env();
      if (std::to_string(pol.start) != env)
        throw UsageError(std::string("HECKOID_PRECISION must be an integer in [32, 4096], got '") + env + "'");
    }
    return pol;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--precision", c.precision, "Starting precision in bits (default $HECKOID_PRECISION or 128)")
      ->check(CLI::Range(32, 4096));
  app->add_flag("--serial", c.serial, "Single-threaded run");
  app->add_option("-o,--output", c.output, "Output file (default stdout)");
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw UsageError("cannot write " + c.output);
  out << text;
}

Order parse_order(const std::string& s) {
  if (s == "inf") return kParabolic;
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size() && v >= 2) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError("order must be an integer >= 2 or 'inf', got '" + s + "'");
}

IntPoly parse_poly(const std::string& s) {
  IntPoly f;
  try {
    f = IntPoly::parse_coeffs(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad polynomial '" + s + "': " + e.what());
  }
  if (f.degree() < 1) throw UsageError("polynomial must have positive degree");
  return f;
}

AlgebraicNumber parse_number(const std::string& poly, int root_index, const PrecisionPolicy& pol) {
  IntPoly f = parse_poly(poly);
  if (f.content() != 1 || f.lead() < 0) f = f.primitive_part();
  if (f.lead() < 0) f = -f;
  if (!is_irreducible(f, pol)) throw UsageError("polynomial " + f.str() + " is reducible");
  try {
    return AlgebraicNumber::from_root_index(f, root_index, pol);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SearchRegion parse_region(const std::string& s) {
  try {
    return SearchRegion::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string points_out(const std::vector<CandidatePoint>& pts, const std::string& format) {
  if (format == "csv") return point_cloud_csv(pts);
  std::string out;
  for (const auto& c : pts) out += candidate_json(c) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic and thin two-generator Kleinian groups: slope one-half table, criterion, "
               "Farey relators and candidate scans"};
  app.require_subcommand(1);

  Common common;

  auto* sh = app.add_subcommand("slope-half", "Enumerate the slope 1/2 table");
  SlopeHalfOptions sho;
  std::string sh_format = "csv";
  std::string golden = HECKOID_DEFAULT_GOLDEN;
  bool verify = false;
  sh->add_option("--p-max", sho.p_max, "Largest p")->capture_default_str();
  sh->add_option("--q-max", sho.q_max, "Largest q")->capture_default_str();
  sh->add_option("--n-max", sho.n_max, "Largest n")->capture_default_str();
  sh->add_flag("--takeuchi", sho.takeuchi, "Also require an arithmetic hyperbolic vertex");
  sh->add_option("--format", sh_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sh->add_flag("--verify-golden", verify, "Compare with the golden table; exit 1 on any difference");
  sh->add_option("--golden", golden, "Golden table path")->capture_default_str();
  add_common(sh, common);

  auto* cg = app.add_subcommand("check-gamma", "Arithmeticity criterion for (p, q, gamma)");
  std::string cg_p, cg_q, cg_poly;
  int cg_root = 0;
  bool gamma_field = false;
  cg->add_option("p", cg_p, "Order of f (integer or inf)")->required();
  cg->add_option("q", cg_q, "Order of g (integer or inf)")->required();
  cg->add_option("min_poly", cg_poly, "Ascending coefficients, e.g. 1,1,1")->required();
  cg->add_option("--root-index", cg_root, "Root in (real part, imaginary part) order, from 0")->capture_default_str();
  cg->add_flag("--gamma-field", gamma_field, "Parabolic pairs: test Q(gamma) instead of Q(rho); the polynomial is rho's");
  add_common(cg, common);

  auto* fa = app.add_subcommand("farey", "Search Farey words for elliptic or parabolic relators");
  std::string fa_p, fa_q, fa_poly;
  int fa_root = 0;
  RelatorOptions ro;
  bool rho_mode = false;
  fa->add_option("p", fa_p, "Order of f (integer or inf)")->required();
  fa->add_option("q", fa_q, "Order of g (integer or inf)")->required();
  fa->add_option("min_poly", fa_poly, "Ascending coefficients of gamma (or rho with --rho)")->required();
  fa->add_option("--root-index", fa_root, "Root in (real part, imaginary part) order, from 0")->capture_default_str();
  fa->add_option("--max-denominator", ro.max_denominator, "Largest slope denominator")->check(CLI::Range(1L, 100000L))->capture_default_str();
  fa->add_option("--tolerance", ro.tolerance, "Match tolerance")->capture_default_str();
  fa->add_option("--max-order", ro.max_order, "Largest elliptic order n")->check(CLI::Range(2, 1000))->capture_default_str();
  fa->add_flag("--rho", rho_mode, "Parabolic pair given by rho with [[1,1],[0,1]], [[1,0],[rho,1]]");
  add_common(fa, common);

  auto* sc = app.add_subcommand("scan", "Lattice scan for gamma with an arithmetic (p,q) pair");
  std::string sc_p, sc_q, sc_region = SearchRegion{}.str(), sc_format = "jsonl";
  int degree_max = 2;
  ScanOptions so;
  sc->add_option("p", sc_p, "Order of f")->required();
  sc->add_option("q", sc_q, "Order of g")->required();
  sc->add_option("--degree-max", degree_max, "Largest degree of gamma")->check(CLI::Range(2, 10))->capture_default_str();
  sc->add_option("--region", sc_region, "re_lo,re_hi,im_lo,im_hi[,max_abs]")->capture_default_str();
  sc->add_option("--cap", so.cap, "Largest lattice box per degree")->capture_default_str();
  sc->add_option("--max-denominator", so.relator_denominator, "Relator search depth, 0 to skip")->capture_default_str();
  sc->add_flag("--include-failing", so.include_failing, "Keep points failing the criterion");
  sc->add_option("--format", sc_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  add_common(sc, common);

  auto* sp = app.add_subcommand("scan-parabolic", "Quadratic rho for parabolic pairs");
  std::string sp_region = "-4,4,0,4", sp_format = "jsonl";
  bool no_symmetry = false;
  ScanOptions spo;
  spo.relator_denominator = 30;
  sp->add_option("--region", sp_region, "re_lo,re_hi,im_lo,im_hi[,max_abs] for rho")->capture_default_str();
  sp->add_flag("--no-symmetry", no_symmetry, "Keep both rho and -conj(rho)");
  sp->add_option("--max-denominator", spo.relator_denominator, "Relator search depth, 0 to skip")->capture_default_str();
  sp->add_option("--format", sp_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  add_common(sp, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const PrecisionPolicy pol = common.policy();

    if (sh->parsed()) {
      sho.parallel = !common.serial;
      sho.policy = pol;
      if (sho.p_max < 3 || sho.q_max < 3 || sho.n_max < 2)
        throw UsageError("orders start at 3 (p, q) and 2 (n)");
      const auto rows = enumerate_slope_half(sho);
      emit(common, sh_format == "csv" ? slope_half_csv(rows) : slope_half_json(rows));
      if (verify) {
        const auto diff = diff_slope_half(rows, parse_slope_half_csv(read_file(golden)));
        for (const auto& l : diff.lines) std::cerr << l << "\n";
        if (!diff.ok()) return kMismatch;
        std::cerr << "golden table verified (" << rows.size() << " rows)\n";
      }
      return kOk;
    }

    if (cg->parsed()) {
      const Order p = parse_order(cg_p), q = parse_order(cg_q);
      const AlgebraicNumber z = parse_number(cg_poly, cg_root, pol);
      CriterionReport r;
      if (p == kParabolic && q == kParabolic) {
        r = parabolic_check(z, gamma_field ? ParabolicField::Gamma : ParabolicField::Rho, pol);
      } else {
        try {
          r = check_arithmetic_subgroup({p, q, z}, pol);
        } catch (const RoutingError& e) {
          std::cerr << "not applicable: " << e.what() << "\n";
          return kMismatch;
        }
      }
      emit(common, criterion_json({p, q, z}, cg_root, r));
      return r.all_pass() ? kOk : kMismatch;
    }

    if (fa->parsed()) {
      const Order p = parse_order(fa_p), q = parse_order(fa_q);
      const AlgebraicNumber z = parse_number(fa_poly, fa_root, pol);
      ro.parallel = !common.serial;
      ro.policy = pol;
      if (rho_mode) {
        if (p != kParabolic || q != kParabolic) throw UsageError("--rho needs p = q = inf");
        emit(common, relator_json(p, q, relator_search_parabolic(z, ro)));
      } else {
        emit(common, relator_json(p, q, relator_search(p, q, z, ro)));
      }
      return kOk;
    }

    if (sc->parsed()) {
      const Order p = parse_order(sc_p), q = parse_order(sc_q);
      if (p == kParabolic || q == kParabolic) throw UsageError("use scan-parabolic for parabolic pairs");
      so.parallel = !common.serial;
      so.policy = pol;
      emit(common, points_out(enumerate_gammas(p, q, degree_max, parse_region(sc_region), so), sc_format));
      return kOk;
    }

    if (sp->parsed()) {
      spo.parallel = !common.serial;
      spo.policy = pol;
      emit(common, points_out(parabolic_scan(parse_region(sp_region), !no_symmetry, spo), sp_format));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
