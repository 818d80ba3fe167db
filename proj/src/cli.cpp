#include "lel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>

#include "lel/finite.hpp"
#include "lel/golden.hpp"
#include "lel/green.hpp"
#include "lel/oracle.hpp"
#include "lel/series.hpp"
#include "lel/sieve.hpp"
#include "lel/store.hpp"
#include "lel/torus.hpp"
#include "lel/version.hpp"

namespace lel {
namespace cli {

using nlohmann::json;

namespace {

struct Config {
  long precision = kDefaultPrecision;
  int order = 40;
  int threads = 0;  // 0 = hardware
  std::string format = "json";
  std::string cache_path;
};

int effective_threads(const Config& c) {
  if (c.threads > 0) return c.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void add_common(CLI::App* cmd, Config* cfg) {
  cmd->add_option("--precision", cfg->precision, "BigFloat precision in bits (>= 53)")
      ->capture_default_str();
  cmd->add_option("--threads", cfg->threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  cmd->add_option("--format", cfg->format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

std::ostream& emit_csv_escaped(std::ostream& os, const std::string& s) {
  // None of our fields contain commas or quotes; keep the writer trivial.
  return os << s;
}

// ---------------------------------------------------------------------------
// fp

int cmd_fp(const Config& cfg, const std::string& sap_str, bool exact, std::ostream& out) {
  Sap p = parse_sap(sap_str);
  sieve::FractionResult r = sieve::fraction(p, exact, cfg.precision, effective_threads(cfg));
  int digits = static_cast<int>(static_cast<double>(cfg.precision) * 0.30103) + 2;
  if (cfg.format == "json") {
    json j;
    j["sap"] = r.sap_key;
    j["ell"] = r.ell;
    j["patch_size"] = r.patch_size;
    if (r.exact) j["exact"] = r.exact->str();
    j["numeric"] = r.numeric.str(digits);
    j["precision"] = cfg.precision;
    out << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "sap,ell,patch_size,exact,numeric,precision\n";
    out << r.sap_key << ',' << r.ell << ',' << r.patch_size << ','
        << (r.exact ? r.exact->str() : "") << ',' << r.numeric.str(digits) << ',' << cfg.precision
        << '\n';
  } else {
    out << "sap           " << r.sap_key << "\n";
    out << "length        " << r.ell << "\n";
    out << "patch size    " << r.patch_size << "\n";
    if (r.exact) out << "exact         " << r.exact->str() << "\n";
    out << "numeric       " << r.numeric.str(digits) << "  (" << cfg.precision << "-bit)\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const Config& cfg, int max_len, bool exact, bool no_dedup,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  sieve::SweepOptions opt;
  opt.max_len = max_len;
  opt.exact = exact;
  opt.precision = cfg.precision;
  opt.threads = effective_threads(cfg);
  opt.dedup = !no_dedup;
  std::unique_ptr<Store> store;
  if (!cfg.cache_path.empty()) {
    store = std::make_unique<Store>(cfg.cache_path);
    opt.cache = store.get();
  }
  sieve::SweepTable table = sieve::sweep(opt);

  std::ostringstream csv;
  csv << "L,count,S\n";
  for (const auto& row : table.rows)
    csv << row.L << ',' << row.count << ',' << row.S.str(20) << '\n';
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f.good()) {
      err << "lel: cannot write " << out_path << "\n";
      return 1;
    }
    f << csv.str();
  }
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& row : table.rows)
      j.push_back({{"L", row.L}, {"count", row.count}, {"S", row.S.str(20)},
                   {"precision", cfg.precision}});
    out << j.dump() << '\n';
  } else {
    out << csv.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// series / ratio / zeta-tilde / alpha

int cmd_series(const Config& cfg, const std::string& sap_str, int order, std::ostream& out) {
  Sap p = parse_sap(sap_str);
  RatSeries s = series::loop_walk_series(p, order);
  if (cfg.format == "json") {
    json j = json::array();
    for (int l = p.length; l <= order; l += 2)
      j.push_back({{"ell", l}, {"coefficient", to_string(s.coeff(l))}});
    out << j.dump() << '\n';
  } else {
    out << "ell,coefficient\n";
    for (int l = p.length; l <= order; l += 2)
      out << l << ',' << to_string(s.coeff(l)) << '\n';
  }
  return 0;
}

int cmd_ratio(const Config& cfg, const std::string& sap_str, int order, std::ostream& out) {
  Sap p = parse_sap(sap_str);
  auto rows = series::ratio_convergence(p, order);
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"ell", r.ell}, {"ratio", r.ratio}, {"scaled_error", r.scaled_error}});
    out << j.dump() << '\n';
  } else {
    out << "ell,ratio,scaled_error\n";
    out << std::setprecision(15);
    for (const auto& r : rows) out << r.ell << ',' << r.ratio << ',' << r.scaled_error << '\n';
  }
  return 0;
}

int cmd_zeta_tilde(const Config& cfg, int order, std::ostream& out) {
  RatSeries zt = series::rooted_hike_zeta(order);
  RatSeries mt = series::rooted_hike_moebius(order);
  if (cfg.format == "json") {
    json j = json::array();
    for (int k = 0; k <= order; ++k)
      j.push_back({{"n", k}, {"zeta", to_string(zt.coeff(k))}, {"mu", to_string(mt.coeff(k))}});
    out << j.dump() << '\n';
  } else {
    out << "n,zeta,mu\n";
    for (int k = 0; k <= order; ++k)
      out << k << ',' << to_string(zt.coeff(k)) << ',' << to_string(mt.coeff(k)) << '\n';
  }
  return 0;
}

int cmd_alpha(const Config& cfg, std::ostream& out) {
  BigFloat a = series::lattice_alpha(cfg.precision);
  int digits = static_cast<int>(static_cast<double>(cfg.precision) * 0.30103) + 2;
  if (cfg.format == "json") {
    json j;
    j["alpha"] = a.str(digits);
    j["precision"] = cfg.precision;
    out << j.dump() << '\n';
  } else {
    out << a.str(digits) << "  (" << cfg.precision << "-bit)\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// dump-c

int cmd_dump_c(const Config& cfg, int radius, std::ostream& out) {
  if (radius < 0) fail(Errc::bad_input, "radius must be >= 0");
  green::warm_table(radius);
  if (cfg.format == "json") {
    json j = json::array();
    for (int dx = -radius; dx <= radius; ++dx)
      for (int dy = -radius; dy <= radius; ++dy) {
        PiPoly e = green::entry(dx, dy);
        j.push_back({{"dx", dx}, {"dy", dy}, {"a", to_string(e.coeff(0))},
                     {"b", to_string(e.coeff(1))}});
      }
    out << j.dump() << '\n';
    return 0;
  }
  out << "dx,dy,a,b\n";
  for (int dx = -radius; dx <= radius; ++dx)
    for (int dy = -radius; dy <= radius; ++dy) {
      PiPoly e = green::entry(dx, dy);
      out << dx << ',' << dy << ',';
      emit_csv_escaped(out, to_string(e.coeff(0))) << ',';
      emit_csv_escaped(out, to_string(e.coeff(1))) << '\n';
    }
  return 0;
}

// ---------------------------------------------------------------------------
// finite

finite::Digraph load_digraph(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) fail(Errc::bad_input, "cannot read graph file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return finite::Digraph::from_json(ss.str());
}

finite::VertexSet parse_support(const std::string& s) {
  finite::VertexSet v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    v.push_back(std::stoi(tok));
  }
  std::sort(v.begin(), v.end());
  return v;
}

int cmd_finite_zeta(const Config& cfg, const std::string& graph_path, int order,
                    std::ostream& out) {
  finite::Digraph g = load_digraph(graph_path);
  RatSeries z = finite::hike_zeta_series(g, order);
  if (cfg.format == "json") {
    json j = json::array();
    for (int k = 0; k <= order; ++k) j.push_back({{"n", k}, {"hikes", to_string(z.coeff(k))}});
    out << j.dump() << '\n';
  } else {
    out << "n,hikes\n";
    for (int k = 0; k <= order; ++k) out << k << ',' << to_string(z.coeff(k)) << '\n';
  }
  return 0;
}

int cmd_finite_viennot(const Config& cfg, const std::string& graph_path,
                       const std::string& support, int p_len, int order, std::ostream& out) {
  finite::Digraph g = load_digraph(graph_path);
  RatSeries s = finite::last_loop_series(g, parse_support(support), p_len, order);
  if (cfg.format == "json") {
    json j = json::array();
    for (int k = 0; k <= order; ++k) j.push_back({{"n", k}, {"walks", to_string(s.coeff(k))}});
    out << j.dump() << '\n';
  } else {
    out << "n,walks\n";
    for (int k = 0; k <= order; ++k) out << k << ',' << to_string(s.coeff(k)) << '\n';
  }
  return 0;
}

int cmd_finite_sieve_check(const Config& cfg, const std::string& graph_path,
                           const std::string& support_str, int p_len, int order,
                           std::ostream& out) {
  finite::Digraph g = load_digraph(graph_path);
  finite::VertexSet support = parse_support(support_str);
  BigFloat asym = finite::loop_fraction_asymptote(g, support, p_len, cfg.precision);
  RatSeries walks = finite::last_loop_series(g, support, p_len, order);
  RatSeries hikes = finite::hike_zeta_series(g, order);
  int k_max = g.size() - static_cast<int>(support.size());

  std::ostringstream body;
  body << "l,exact_ratio,asymptote_plus_error\n";
  body << std::setprecision(15);
  for (int l = p_len; l <= order; l += 2) {
    if (hikes.coeff(l) == 0) continue;
    Rational ratio = walks.coeff(l) / hikes.coeff(l);
    BigFloat err = finite::sieve_error_term(g, support, p_len, l, k_max, cfg.precision);
    body << l << ',' << to_double(ratio) << ',' << (asym + err).to_double() << '\n';
  }
  if (cfg.format == "json") {
    json j;
    j["asymptote"] = asym.to_double();
    j["table_csv"] = body.str();
    out << j.dump() << '\n';
  } else {
    out << "asymptote," << std::setprecision(15) << asym.to_double() << '\n' << body.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// oracle / mc

int cmd_oracle_count(const Config& cfg, const std::string& sap_str, int len, std::ostream& out) {
  Sap p = parse_sap(sap_str);
  long long c = oracle::count_last_loop(p, len);
  if (cfg.format == "json") {
    json j;
    j["sap"] = p.steps;
    j["len"] = len;
    j["count"] = c;
    out << j.dump() << '\n';
  } else {
    out << c << '\n';
  }
  return 0;
}

int cmd_oracle_hist(const Config& cfg, int len, const std::string& out_path, std::ostream& out,
                    std::ostream& err) {
  auto hist = oracle::last_loop_histogram(len);
  std::ostringstream csv;
  csv << "last_loop,count\n";
  for (const auto& [k, v] : hist) csv << k << ',' << v << '\n';
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f.good()) {
      err << "lel: cannot write " << out_path << "\n";
      return 1;
    }
    f << csv.str();
  }
  if (cfg.format == "json") {
    json j = json::object();
    for (const auto& [k, v] : hist) j[k] = v;
    out << j.dump() << '\n';
  } else {
    out << csv.str();
  }
  return 0;
}

int cmd_mc(const Config& cfg, const std::string& sap_str, long long samples, long long max_len,
           uint64_t seed, std::ostream& out) {
  Sap p = parse_sap(sap_str);
  oracle::McResult r = oracle::mc_first_return(p, samples, max_len, seed, effective_threads(cfg));
  if (cfg.format == "json") {
    json j;
    j["sap"] = p.steps;
    j["samples"] = samples;
    j["max_len"] = max_len;
    j["seed"] = seed;
    j["estimate"] = r.estimate;
    j["std_error"] = r.std_error;
    j["truncated_fraction"] = r.truncated_fraction;
    j["returned"] = r.returned;
    j["matched"] = r.matched;
    out << j.dump() << '\n';
  } else {
    out << std::setprecision(10) << "estimate           " << r.estimate << "\n"
        << "std_error          " << r.std_error << "\n"
        << "truncated_fraction " << r.truncated_fraction << "\n"
        << "returned           " << r.returned << "\n"
        << "matched            " << r.matched << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

void run_quick_checks(std::vector<Check>& checks) {
  {
    Check c{.name = "edge fraction = 1/8"};
    PiPoly f = sieve::fraction_exact(parse_sap("RL"));
    c.pass = (f == PiPoly::parse(golden::kEdgeFractionExact));
    c.detail = f.str();
    checks.push_back(c);
  }
  {
    Check c{.name = "unit-square fraction (exact + 0.0184)"};
    PiPoly f = sieve::fraction_exact(parse_sap("RULD"));
    double v = f.eval().to_double();
    c.pass = (f == PiPoly::parse(golden::kUnitSquareFractionExact)) &&
             std::abs(v - golden::kUnitSquareFraction) < 5e-5;
    c.detail = f.str();
    checks.push_back(c);
  }
  {
    Check c{.name = "rooted-hike zeta/moebius coefficients"};
    RatSeries zt = series::rooted_hike_zeta(12);
    RatSeries mt = series::rooted_hike_moebius(12);
    c.pass = true;
    for (int i = 0; i <= 6; ++i) {
      c.pass = c.pass && zt.coeff(2 * i) == Rational(golden::kRootedZetaCoeffs[static_cast<size_t>(i)]);
      c.pass = c.pass && mt.coeff(2 * i) == Rational(golden::kRootedMoebiusCoeffs[static_cast<size_t>(i)]);
    }
    checks.push_back(c);
  }
  {
    Check c{.name = "alpha = 0.8025 (4 dp)"};
    double a = series::lattice_alpha(128).to_double();
    c.pass = std::abs(a - golden::kAlpha4dp) < 5e-5;
    c.detail = std::to_string(a);
    checks.push_back(c);
  }
  {
    Check c{.name = "oracle counts (edge@4 = 7, square@6 = 12)"};
    c.pass = oracle::count_last_loop(parse_sap("RL"), 4) == golden::kEdgeCountLen4 &&
             oracle::count_last_loop(parse_sap("RULD"), 6) == golden::kUnitSquareCountLen6;
    checks.push_back(c);
  }
}

void run_full_checks(std::vector<Check>& checks) {
  {
    Check c{.name = "rectangle fractions to printed digits"};
    double f12 = sieve::fraction_exact(parse_sap("RRULLD")).eval().to_double();
    double f13 = sieve::fraction_exact(parse_sap("RRRULLLD")).eval().to_double();
    double f22 = sieve::fraction_exact(parse_sap("RRUULLDD")).eval().to_double();
    c.pass = std::abs(f12 - golden::kRect1x2Fraction) < 1e-6 &&
             std::abs(f13 - golden::kRect1x3Fraction) < 1e-8 &&
             std::abs(f22 - golden::kSquare2x2Fraction) < 1e-8;
    checks.push_back(c);
  }
  {
    Check c{.name = "loop-walk series coefficients (edge, unit square)"};
    RatSeries re = series::loop_walk_series(parse_sap("RL"), 12);
    RatSeries r11 = series::loop_walk_series(parse_sap("RULD"), 12);
    c.pass = true;
    for (size_t i = 0; i < golden::kEdgeSeriesCoeffs.size(); ++i)
      c.pass = c.pass && re.coeff(2 + 2 * static_cast<int>(i)) == Rational(golden::kEdgeSeriesCoeffs[i]);
    for (size_t i = 0; i < golden::kUnitSquareSeriesCoeffs.size(); ++i)
      c.pass = c.pass && r11.coeff(4 + 2 * static_cast<int>(i)) == Rational(golden::kUnitSquareSeriesCoeffs[i]);
    checks.push_back(c);
  }
  {
    Check c{.name = "elliptic closed forms at z0 = 0.1"};
    auto e = series::closed_form_check_edge(0.1);
    auto s = series::closed_form_check_square(0.1);
    c.pass = std::abs(e.series_value - e.closed_form_value) < 1e-8 &&
             std::abs(s.series_value - s.closed_form_value) < 1e-8;
    checks.push_back(c);
  }
  {
    Check c{.name = "S(L) table, L <= 8"};
    sieve::SweepOptions opt;
    opt.max_len = 8;
    sieve::SweepTable t = sieve::sweep(opt);
    c.pass = true;
    for (size_t i = 0; i < t.rows.size(); ++i)
      c.pass = c.pass && std::abs(t.rows[i].S.to_double() - golden::kSweepTable[i]) < 5e-5;
    checks.push_back(c);
  }
  {
    Check c{.name = "quadrature matches exact entries, radius 3"};
    c.pass = true;
    for (int dx = 0; dx <= 3 && c.pass; ++dx)
      for (int dy = 0; dy <= dx && c.pass; ++dy) {
        double exact = green::entry(dx, dy).eval().to_double();
        double numeric = green::entry_numeric(dx, dy, 1e-10);
        c.pass = std::abs(exact - numeric) < 1e-8;
      }
    checks.push_back(c);
  }
}

int cmd_verify(const std::string& level, std::ostream& out) {
  std::vector<Check> checks;
  run_quick_checks(checks);
  if (level == "full") run_full_checks(checks);
  bool all = true;
  for (const Check& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << "  -- " << c.detail;
    out << '\n';
    all = all && c.pass;
  }
  out << (all ? "verify: all checks passed\n" : "verify: FAILURES\n");
  return all ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"last-erased-loop engine for the square lattice"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("LEL_CACHE")) cfg.cache_path = env;

  // fp
  std::string sap_str;
  bool exact = false;
  auto* fp = app.add_subcommand("fp", "fraction of closed walks with last erased loop --sap");
  fp->add_option("--sap", sap_str, "step string over R,U,L,D")->required();
  fp->add_flag("--exact", exact, "also compute the exact value in Q[1/pi]");
  add_common(fp, &cfg);

  // sweep
  int max_len = 14;
  bool no_dedup = false;
  bool sweep_exact = false;
  std::string out_path;
  auto* sw = app.add_subcommand("sweep", "cumulative fractions S(L) over all anchored SAPs");
  sw->add_option("--max-len", max_len, "largest polygon length (even)")->required();
  sw->add_option("--out", out_path, "write table CSV here");
  sw->add_option("--cache", cfg.cache_path, "resumable result cache (*.lel.jsonl)");
  sw->add_flag("--no-dedup", no_dedup, "one computation per anchored SAP (differential testing)");
  sw->add_flag("--exact", sweep_exact, "store exact polynomials in the cache");
  add_common(sw, &cfg);

  // series
  int order = 20;
  std::string series_sap;
  auto* se = app.add_subcommand("series", "loop-walk generating function coefficients");
  se->add_option("--sap", series_sap)->required();
  se->add_option("--order", order, "truncation order")->capture_default_str();
  add_common(se, &cfg);

  // ratio
  int ratio_order = 40;
  std::string ratio_sap;
  auto* ra = app.add_subcommand("ratio", "coefficient-ratio convergence to the fraction");
  ra->add_option("--sap", ratio_sap)->required();
  ra->add_option("--order", ratio_order)->capture_default_str();
  add_common(ra, &cfg);

  // zeta-tilde
  int zt_order = 12;
  auto* zt = app.add_subcommand("zeta-tilde", "rooted-hike zeta and Moebius coefficients");
  zt->add_option("--order", zt_order)->capture_default_str();
  add_common(zt, &cfg);

  // alpha
  auto* al = app.add_subcommand("alpha", "hike/walk density constant");
  add_common(al, &cfg);

  // dump-c
  int radius = 5;
  auto* dc = app.add_subcommand("dump-c", "exact Green-matrix entries as CSV");
  dc->add_option("--radius", radius)->required();
  add_common(dc, &cfg);

  // finite
  auto* fi = app.add_subcommand("finite", "finite-digraph sieve engines");
  fi->require_subcommand(1);
  std::string graph_path, support_str;
  int p_len = 2;
  int fin_order = 40;
  auto* fz = fi->add_subcommand("zeta", "hike counts by length");
  fz->add_option("--graph", graph_path, "digraph JSON file")->required();
  fz->add_option("--order", fin_order)->capture_default_str();
  add_common(fz, &cfg);
  auto* fv = fi->add_subcommand("viennot", "walks with a fixed last erased loop");
  fv->add_option("--graph", graph_path)->required();
  fv->add_option("--support", support_str, "comma-separated vertex ids")->required();
  fv->add_option("--len", p_len, "length of the prime")->required();
  fv->add_option("--order", fin_order)->capture_default_str();
  add_common(fv, &cfg);
  auto* fs = fi->add_subcommand("sieve-check", "asymptote + error against the exact ratio");
  fs->add_option("--graph", graph_path)->required();
  fs->add_option("--support", support_str)->required();
  fs->add_option("--len", p_len)->required();
  fs->add_option("--order", fin_order)->capture_default_str();
  add_common(fs, &cfg);

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
  orc->require_subcommand(1);
  std::string orc_sap;
  int orc_len = 8;
  std::string hist_out;
  auto* oc = orc->add_subcommand("count", "closed walks with last erased loop --sap");
  oc->add_option("--sap", orc_sap)->required();
  oc->add_option("--len", orc_len)->required();
  add_common(oc, &cfg);
  auto* oh = orc->add_subcommand("hist", "last-erased-loop histogram over all closed walks");
  oh->add_option("--len", orc_len)->required();
  oh->add_option("--out", hist_out, "write CSV here");
  add_common(oh, &cfg);

  // mc
  long long samples = 1000000, mc_max_len = 10000;
  uint64_t seed = 42;
  std::string mc_sap;
  auto* mc = app.add_subcommand("mc", "Monte-Carlo first-return estimator");
  mc->add_option("--sap", mc_sap)->required();
  mc->add_option("--samples", samples)->capture_default_str();
  mc->add_option("--max-len", mc_max_len)->capture_default_str();
  mc->add_option("--seed", seed)->capture_default_str();
  add_common(mc, &cfg);

  // verify
  std::string level = "quick";
  auto* vf = app.add_subcommand("verify", "run the golden-value suite");
  vf->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("lel");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lel: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.precision < kMinPrecision) {
      err << "lel: --precision must be >= " << kMinPrecision << "\n";
      return 2;
    }
    if (fp->parsed()) return cmd_fp(cfg, sap_str, exact, out);
    if (sw->parsed()) return cmd_sweep(cfg, max_len, sweep_exact, no_dedup, out_path, out, err);
    if (se->parsed()) return cmd_series(cfg, series_sap, order, out);
    if (ra->parsed()) return cmd_ratio(cfg, ratio_sap, ratio_order, out);
    if (zt->parsed()) return cmd_zeta_tilde(cfg, zt_order, out);
    if (al->parsed()) return cmd_alpha(cfg, out);
    if (dc->parsed()) return cmd_dump_c(cfg, radius, out);
    if (fi->parsed()) {
      if (fz->parsed()) return cmd_finite_zeta(cfg, graph_path, fin_order, out);
      if (fv->parsed()) return cmd_finite_viennot(cfg, graph_path, support_str, p_len, fin_order, out);
      if (fs->parsed())
        return cmd_finite_sieve_check(cfg, graph_path, support_str, p_len, fin_order, out);
    }
    if (orc->parsed()) {
      if (oc->parsed()) return cmd_oracle_count(cfg, orc_sap, orc_len, out);
      if (oh->parsed()) return cmd_oracle_hist(cfg, orc_len, hist_out, out, err);
    }
    if (mc->parsed()) return cmd_mc(cfg, mc_sap, samples, mc_max_len, seed, out);
    if (vf->parsed()) return cmd_verify(level, out);
  } catch (const DomainError& e) {
    err << "lel: " << e.what() << "\n";
    return 1;
  }
  err << "lel: no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace lel
