// escher: CLI over the exact R u sR arithmetic library. Subcommands: repl,
// eval, check (law suite), plot (pseudo-comparison raster).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "escher/errors.hpp"
#include "escher/eval.hpp"
#include "escher/laws.hpp"
#include "escher/plot.hpp"

namespace {

using escher::Rational;

struct CommonOpts {
  unsigned precision_bits = 256;
  unsigned digits = 30;
  bool unicode = false;
};

escher::eval::Session make_session(const CommonOpts& o) {
  escher::eval::Session s;
  s.float_bits = o.precision_bits;
  s.prec.start_bits = std::min(128u, o.precision_bits);
  s.prec.cap_bits = std::max(4096u, o.precision_bits);
  s.display_digits = o.digits;
  s.unicode = o.unicode;
  return s;
}

int run_eval(const std::string& text, const CommonOpts& opts) {
  escher::eval::Session session = make_session(opts);
  escher::eval::EvalOutcome out = escher::eval::eval_line(text, session);
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << out.printed << "\n";
  return 0;
}

int run_repl(const CommonOpts& opts) {
  escher::eval::Session session = make_session(opts);
  std::string line;
  std::cerr << "escher repl; 'quit' to leave\n";
  for (;;) {
    std::cerr << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == "quit" || line == "exit") break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      escher::eval::EvalOutcome out = escher::eval::eval_line(line, session);
      for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << out.printed << std::endl;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

nlohmann::json report_json(const escher::laws::LawReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  if (r.rank) j["rank"] = *r.rank;
  j["trials"] = r.trials;
  j["mode"] = r.exact_mode ? "exact" : "numeric";
  j["pass"] = r.pass();
  j["witnesses"] = r.failures;
  return j;
}

int run_check(const std::string& law, bool all, std::uint64_t trials,
              std::uint64_t seed, bool as_json, const CommonOpts& opts) {
  escher::laws::LawConfig cfg;
  cfg.float_bits = opts.precision_bits;
  std::vector<escher::laws::LawReport> reports;
  if (all) {
    reports = escher::laws::run_suite(seed, trials, cfg);
  } else {
    reports.push_back(escher::laws::fuzz_law(law, trials, seed, cfg));
  }
  bool ok = true;
  if (as_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
      j.push_back(report_json(r));
      ok = ok && r.pass();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : reports) {
      std::cout << r.line() << "\n";
      for (const auto& f : r.failures) std::cout << "  witness: " << f << "\n";
      ok = ok && r.pass();
      passed += r.pass();
    }
    std::cout << passed << "/" << reports.size() << " law reports passed\n";
  }
  return ok ? 0 : 1;
}

int run_plot(const std::string& center_expr, const std::string& re_min,
             const std::string& re_max, const std::string& t_min,
             const std::string& t_max, unsigned width, unsigned height,
             const std::string& out_path, const CommonOpts& opts) {
  escher::eval::Session session = make_session(opts);
  escher::expr::ParseResult parsed = escher::expr::parse(center_expr);
  escher::eval::Value v = escher::eval::evaluate(*parsed.ast, session);
  const auto* center = std::get_if<escher::CxE>(&v.v);
  if (!center) throw escher::DomainError("plot center must be an exact value");

  escher::plot::PlotSpec spec;
  spec.center = *center;
  spec.window = escher::Window{Rational(re_min), Rational(re_max),
                               Rational(t_min), Rational(t_max)};
  spec.width = width;
  spec.height = height;
  std::string ppm = escher::plot::render_ppm(spec, session.prec);
  escher::plot::write_file(out_path, ppm);
  std::cout << "wrote " << out_path << " (" << width << "x" << height
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic and law checking for the numbers R u sR"};
  app.require_subcommand(1);

  CommonOpts opts;
  if (const char* env = std::getenv("ESCHER_PRECISION_BITS")) {
    opts.precision_bits = static_cast<unsigned>(std::atoi(env));
    if (opts.precision_bits < 64) opts.precision_bits = 64;
  }
  app.add_option("--precision-bits", opts.precision_bits,
                 "working float precision in bits");
  app.add_option("--display-digits", opts.digits,
                 "digits shown for numeric values");
  app.add_flag("--unicode", opts.unicode,
               "print unicode glyphs (s -> stigma)");

  CLI::App* c_repl = app.add_subcommand("repl", "interactive session");

  std::string expr_text;
  CLI::App* c_eval = app.add_subcommand("eval", "evaluate one expression");
  c_eval->add_option("expr", expr_text, "expression text")->required();

  std::string law = "all";
  bool check_all = false;
  std::uint64_t trials = 1000, seed = 0;
  bool as_json = false;
  CLI::App* c_check = app.add_subcommand("check", "run law suite");
  CLI::Option* law_opt = c_check->add_option("--law", law, "law id");
  c_check->add_flag("--all", check_all, "check every registered law");
  c_check->add_option("--trials", trials, "random trials per law");
  c_check->add_option("--seed", seed, "fuzzing seed");
  c_check->add_flag("--json", as_json, "machine-readable report");

  std::string center = "0", re_min = "-3", re_max = "3", t_min = "0",
              t_max = "2", out_path = "plot.ppm";
  unsigned width = 64, height = 64;
  CLI::App* c_plot =
      app.add_subcommand("plot", "pseudo-comparison raster (plain PPM)");
  c_plot->add_option("--center", center, "center expression");
  c_plot->add_option("--re-min", re_min, "window: low real bound");
  c_plot->add_option("--re-max", re_max, "window: high real bound");
  c_plot->add_option("--t-min", t_min, "window: low t bound");
  c_plot->add_option("--t-max", t_max, "window: high t bound");
  c_plot->add_option("--width", width, "pixels across");
  c_plot->add_option("--height", height, "pixels down");
  c_plot->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_repl)) return run_repl(opts);
    if (app.got_subcommand(c_eval)) return run_eval(expr_text, opts);
    if (app.got_subcommand(c_check)) {
      if (!check_all && law_opt->count() == 0) {
        std::cerr << "check: pass --law ID or --all\n";
        return 2;
      }
      return run_check(law, check_all, trials, seed, as_json, opts);
    }
    return run_plot(center, re_min, re_max, t_min, t_max, width, height,
                    out_path, opts);
  } catch (const escher::UnknownLaw& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
