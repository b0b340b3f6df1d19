// Command-line front end: G(z) evaluation, residual scans, exact polynomial
// tables, the fitting pipeline, constant extraction, and the verification
// suite. Every run emits a manifest (JSON, stderr or --manifest file) whose
// configuration determines the primary output bytes; the digest makes the
// determinism contract checkable.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "rpolylog/acceptance.hpp"
#include "rpolylog/rpolylog.hpp"

using namespace rpolylog;
using nlohmann::json;

namespace {

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// Accepts RE, REi (pure imaginary), RE+IMi, RE-IMi, i, -i.
MPComplex parse_complex(const std::string& text, const PrecisionContext& ctx) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty complex literal");
  auto parse_part = [&](std::string t) -> MPReal {
    if (t.empty() || t == "+") t = "1";
    else if (t == "-") t = "-1";
    return ctx.real(t);
  };
  if (s.back() == 'i' || s.back() == 'I') {
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not an exponent sign and not leading
    for (std::size_t pos = body.size(); pos-- > 1;) {
      char c = body[pos];
      if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
        return {parse_part(body.substr(0, pos)),
                parse_part(body.substr(pos))};
      }
    }
    return {ctx.zero(), parse_part(body)};
  }
  return {ctx.real(s), ctx.zero()};
}

struct GlobalOpts {
  unsigned digits = 50;
  unsigned threads = 0;
  std::string format = "text";
  std::string out;
  std::string manifest_path;
};

void deliver(const GlobalOpts& g, const std::string& command, const json& config,
             const std::string& primary, double wall_ms) {
  if (g.out.empty()) {
    std::cout << primary;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw IOError("cannot open output file " + g.out);
    f << primary;
  }
  json manifest = {{"command", command},
                   {"version", version_string},
                   {"config", config},
                   {"wall_ms", wall_ms},
                   {"output_digest", fnv1a_digest(primary)}};
  if (g.manifest_path.empty()) {
    std::cerr << "manifest " << manifest.dump() << "\n";
  } else {
    std::ofstream f(g.manifest_path);
    if (!f) throw IOError("cannot open manifest file " + g.manifest_path);
    f << manifest.dump(2) << "\n";
  }
}

std::string format_eval(const GlobalOpts& g, const MPComplex& z, const EvalResult& r,
                        unsigned digits) {
  std::ostringstream os;
  if (g.format == "csv") {
    os << "re_z,im_z,method,re_value,im_value,err\n";
    os << z.re.str(digits) << "," << z.im.str(digits) << "," << method_name(r.method) << ","
       << r.value.re.str(digits) << "," << r.value.im.str(digits) << "," << r.err.str(3) << "\n";
  } else if (g.format == "kv") {
    os << "z " << z.re.str(digits) << " " << z.im.str(digits) << "\n";
    os << "method " << method_name(r.method) << "\n";
    os << "value " << r.value.re.str(digits) << " " << r.value.im.str(digits) << "\n";
    os << "err " << r.err.str(3) << "\n";
  } else {
    os << "z      = " << z.re.str(digits) << (z.im >= 0 ? " + " : " - ") << abs(z.im).str(digits)
       << " i\n";
    os << "method = " << method_name(r.method) << "\n";
    os << "value  = " << r.value.re.str(digits) << (r.value.im >= 0 ? " + " : " - ")
       << abs(r.value.im).str(digits) << " i\n";
    os << "err    <= " << r.err.str(3) << "\n";
  }
  return os.str();
}

std::optional<Method> parse_method(const std::string& name) {
  if (name.empty() || name == "auto") return std::nullopt;
  for (Method m : {Method::Series, Method::ZetaExpansion, Method::Bilateral, Method::Inversion,
                   Method::NegAxis})
    if (name == method_name(m)) return m;
  throw CLI::ValidationError("--method", "unknown method " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analytic continuation of sum sqrt(n) z^n, its resurgent residual, and the "
               "exact polynomial machinery behind its asymptotic constants"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--digits", g.digits, "decimal working precision")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format: text|kv|csv")
      ->check(CLI::IsMember({"text", "kv", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write primary output to this file instead of stdout");
  app.add_option("--manifest", g.manifest_path, "write the run manifest to this file");

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "evaluate G(z)");
  std::string z_text, method_name_arg = "auto";
  bool crosscheck = false;
  eval->add_option("-z,--z", z_text, "complex point, e.g. -1, 2+3i, 0.5")->required();
  eval->add_option("--method", method_name_arg,
                   "series|zeta-expansion|bilateral|inversion|neg-axis|auto");
  eval->add_flag("--crosscheck", crosscheck, "verify with a second method");

  // ---- scan ----
  auto* scan = app.add_subcommand("scan", "tabulate S(u) over a grid");
  double su_min = 6, su_max = 60;
  unsigned scount = 28;
  int scan_k = -1;
  scan->add_option("--u-min", su_min)->capture_default_str();
  scan->add_option("--u-max", su_max)->capture_default_str();
  scan->add_option("--count", scount)->capture_default_str();
  scan->add_option("--K", scan_k, "prediction order from the shipped constants (-1 = all)");

  // ---- deltas ----
  auto* deltas_cmd = app.add_subcommand("deltas", "exact difference polynomials Delta_k");
  unsigned dk = 8;
  deltas_cmd->add_option("--K", dk)->capture_default_str();

  // ---- polys ----
  auto* polys_cmd = app.add_subcommand("polys", "exact polynomial table P_0..P_K");
  unsigned pk = 3;
  std::string constants_file;
  polys_cmd->add_option("--K", pk)->capture_default_str();
  polys_cmd->add_option("--constants-file", constants_file,
                        "constants table (default: shipped)");

  // ---- fit ----
  auto* fit = app.add_subcommand("fit", "sample S(u) on an even grid and peel P_k(0)");
  FitConfig fcfg;
  std::string constants_out;
  double gap_min = 10.0;
  unsigned tail_buffer = 12;
  fit->add_option("--u-min", fcfg.u_min)->capture_default_str();
  fit->add_option("--u-max", fcfg.u_max)->capture_default_str();
  fit->add_option("--count", fcfg.count)->capture_default_str();
  fit->add_option("--fit-digits", fcfg.digits, "sampling precision")->capture_default_str();
  fit->add_option("--K", fcfg.k_max)->capture_default_str();
  fit->add_option("--holdout", fcfg.holdout)->capture_default_str();
  fit->add_option("--buffer", tail_buffer, "extra 1/u orders in the fit")->capture_default_str();
  fit->add_option("--gap", gap_min, "CF acceptance gap, decimal digits")->capture_default_str();
  fit->add_option("--constants-out", constants_out, "also write a constants table here");

  // ---- constants ----
  auto* constants_cmd = app.add_subcommand("constants", "extract C and R from rational data");
  unsigned k_lo = 30, k_hi = 150;
  constants_cmd->add_option("--k-lo", k_lo)->capture_default_str();
  constants_cmd->add_option("--k-hi", k_hi)->capture_default_str();

  // ---- verify-all ----
  auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
  bool quick = false;
  std::vector<int> only;
  verify->add_flag("--quick", quick, "reduced case counts and a smaller fit");
  verify->add_option("--only", only, "run only these criteria (1..10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto wall = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    PrecisionContext ctx(g.digits);

    if (*eval) {
      MPComplex z = parse_complex(z_text, ctx);
      EvalResult r = g_auto(z, ctx, crosscheck, parse_method(method_name_arg));
      json cfg = {{"z", z_text}, {"digits", g.digits}, {"method", method_name_arg},
                  {"crosscheck", crosscheck}, {"format", g.format}};
      deliver(g, "eval", cfg, format_eval(g, z, r, g.digits), wall());
      return 0;
    }

    if (*scan) {
      std::vector<RationalPolynomial> polys;
      if (scan_k != 0) {
        try {
          unsigned avail = shipped_constants_max_k();
          unsigned want = scan_k < 0 ? avail : std::min<unsigned>(scan_k, avail);
          want = std::min<unsigned>(want, static_cast<unsigned>(su_min));
          polys = assemble(want, shipped_constants(want)).polys();
        } catch (const IOError&) {
          // no shipped table: scan still works, without predictions
        }
      }
      std::vector<MPReal> us(scount);
      std::vector<std::string> rows(scount);
      unsigned need = static_cast<unsigned>(su_max * 0.4342944819) + 40;
      PrecisionContext sctx(std::max(g.digits, need));
      parallel_for(scount, g.threads, [&](std::size_t i) {
        MPReal u = sctx.real(su_min) +
                   (sctx.real(su_max) - sctx.real(su_min)) * static_cast<long>(i) /
                       std::max(1u, scount - 1);
        ResidualSample s = s_of_u(u, sctx);
        std::ostringstream os;
        os << u.str(10) << "," << s.x.str(10) << "," << s.s.str(g.digits);
        if (!polys.empty()) {
          MPReal pred = s_predicted(u, polys, sctx);
          os << "," << pred.str(g.digits) << "," << MPReal(s.s - pred).str(6);
        } else {
          os << ",,";
        }
        rows[i] = os.str();
      });
      std::ostringstream out;
      out << "u,x,S,predicted,residual\n";
      for (const auto& r : rows) out << r << "\n";
      json cfg = {{"u_min", su_min}, {"u_max", su_max}, {"count", scount},
                  {"K", scan_k}, {"digits", g.digits}};
      deliver(g, "scan", cfg, out.str(), wall());
      return 0;
    }

    if (*deltas_cmd) {
      PolyTable t = delta_antidiff_table(dk);
      json cfg = {{"K", dk}};
      deliver(g, "deltas", cfg, polytable_to_text(t), wall());
      return 0;
    }

    if (*polys_cmd) {
      std::vector<BigRational> constants;
      try {
        constants = shipped_constants(pk, constants_file);
      } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      PolyTable t = assemble(pk, constants);
      std::ostringstream out;
      out << polytable_to_text(t);
      out << "# denominator smoothness: every coefficient denominator of P_k is (2k+3)-smooth "
             "(validated on assembly)\n";
      json cfg = {{"K", pk}, {"constants_file", constants_file}};
      deliver(g, "polys", cfg, out.str(), wall());
      return 0;
    }

    if (*fit) {
      fcfg.validate();  // fail fast, before any sampling
      auto samples = sample_residuals(fcfg, g.threads);
      PeelOptions popts;
      popts.tail_buffer = tail_buffer;
      popts.gap_min_log10 = gap_min;
      popts.holdout_fraction = fcfg.holdout;
      FitReport rep = peel_constants_report(samples, fcfg.k_max, popts);
      std::ostringstream out;
      out << rep.to_text();
      if (!constants_out.empty()) {
        std::ofstream cf(constants_out);
        if (!cf) throw IOError("cannot open " + constants_out);
        cf << "# P_k(0), exact; recovered by `fit --u-min " << fcfg.u_min << " --u-max "
           << fcfg.u_max << " --count " << fcfg.count << " --fit-digits " << fcfg.digits
           << " --K " << fcfg.k_max << "`\n";
        for (std::size_t k = 0; k < rep.constants.size(); ++k)
          cf << k << " " << rep.constants[k].str() << "\n";
      }
      json cfg = {{"u_min", fcfg.u_min}, {"u_max", fcfg.u_max}, {"count", fcfg.count},
                  {"fit_digits", fcfg.digits}, {"K", fcfg.k_max}, {"holdout", fcfg.holdout},
                  {"buffer", tail_buffer}, {"gap", gap_min}};
      deliver(g, "fit", cfg, out.str(), wall());
      return 0;
    }

    if (*constants_cmd) {
      PrecisionContext cctx(g.digits);
      ConstantsEstimate est = extract_CR(k_lo, k_hi, cctx);
      std::ostringstream out;
      if (g.format == "kv") {
        out << "C " << est.c.str(est.stable_digits) << "\n";
        out << "R " << est.r.str(est.stable_digits) << "\n";
        out << "stable_digits " << est.stable_digits << "\n";
        out << "k_window " << est.k_window.first << " " << est.k_window.second << "\n";
      } else {
        out << "C = " << est.c.str(est.stable_digits) << "\n";
        out << "R = " << est.r.str(est.stable_digits) << "\n";
        out << "stable digits: " << est.stable_digits << " (windows ending at k = "
            << est.k_window.second << ")\n";
      }
      json cfg = {{"k_lo", k_lo}, {"k_hi", k_hi}, {"digits", g.digits}};
      deliver(g, "constants", cfg, out.str(), wall());
      return 0;
    }

    if (*verify) {
      acceptance::Options opts;
      opts.quick = quick;
      opts.threads = g.threads;
      std::ostringstream out;
      auto outcomes = acceptance::run(only, opts, out);
      json cfg = {{"quick", quick}, {"only", only}};
      deliver(g, "verify-all", cfg, out.str(), wall());
      return acceptance::all_passed(outcomes) ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
