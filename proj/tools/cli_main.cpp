#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "csv.hpp"
#include "dkposc.h"

namespace {

constexpr std::array<const char*, 8> kRealKeys = {"M", "omega", "Omega",
                                                  "alpha", "A", "B",
                                                  "k", "phi"};

struct ModelDeleter {
  void operator()(dkposc_model* m) const { dkposc_model_destroy(m); }
};
using ModelPtr = std::unique_ptr<dkposc_model, ModelDeleter>;

struct SolutionDeleter {
  void operator()(dkposc_solution* s) const { dkposc_solution_destroy(s); }
};
using SolutionPtr = std::unique_ptr<dkposc_solution, SolutionDeleter>;

int exit_code(dkposc_status s) {
  switch (s) {
    case DKPOSC_OK:
      return 0;
    case DKPOSC_NO_ROOT:
      return 2;
    case DKPOSC_INVALID_PARAMETER:
    case DKPOSC_BAD_FIELD:
      return 3;
    default:
      return 4;
  }
}

int fail(dkposc_status s) {
  std::cerr << "error: " << dkposc_last_error() << "\n";
  return exit_code(s);
}

// Shared option set: a config file plus one flag per symbol; flags override
// file values which override defaults.
struct ParamOpts {
  std::string config_path;
  CLI::Option* config_opt = nullptr;
  std::array<double, 8> vals{};
  std::array<CLI::Option*, 8> opts{};
  int n = 0;
  int m = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* m_opt = nullptr;
};

void add_param_opts(CLI::App* cmd, ParamOpts& po) {
  po.config_opt =
      cmd->add_option("--config", po.config_path, "JSON config file");
  for (std::size_t i = 0; i < kRealKeys.size(); ++i)
    po.opts[i] = cmd->add_option(std::string("--") + kRealKeys[i], po.vals[i],
                                 std::string("override ") + kRealKeys[i]);
  po.n_opt = cmd->add_option("--n", po.n, "radial quantum number");
  po.m_opt = cmd->add_option("--m", po.m, "magnetic quantum number");
}

struct BuiltModel {
  ModelPtr model;
  int n = 0;
  int m = 0;
};

// Assembles the model from defaults, config file, then flags. Throws
// cli::config_error for file problems; field errors map to exit 3 upstream.
BuiltModel build_model(const ParamOpts& po) {
  BuiltModel bm;
  bm.model.reset(dkposc_model_create());
  if (!bm.model) throw std::runtime_error("model allocation failed");

  if (po.config_opt->count() > 0) {
    const auto cfg = cli::load_config(po.config_path);
    for (const auto& [key, value] : cfg.reals)
      dkposc_model_set(bm.model.get(), key.c_str(), value);
    if (cfg.n) bm.n = *cfg.n;
    if (cfg.m) bm.m = *cfg.m;
  }
  for (std::size_t i = 0; i < kRealKeys.size(); ++i)
    if (po.opts[i]->count() > 0)
      dkposc_model_set(bm.model.get(), kRealKeys[i], po.vals[i]);
  if (po.n_opt->count() > 0) bm.n = po.n;
  if (po.m_opt->count() > 0) bm.m = po.m;
  dkposc_model_set_quantum(bm.model.get(), bm.n, bm.m);
  return bm;
}

double get_field(const dkposc_model* m, const char* field) {
  double v = 0.0;
  dkposc_model_get(m, field, &v);
  return v;
}

// nu and a(E) as plain arithmetic on the public parameter set; used only
// for report output, never for solving.
double exponent_of(const dkposc_model* m, int mq) {
  const double M = get_field(m, "M"), w = get_field(m, "omega"),
               B = get_field(m, "B"), alpha = get_field(m, "alpha"),
               phi = get_field(m, "phi");
  const double meff = static_cast<double>(mq) - phi;
  return std::sqrt(M * M * w * w * B * B + meff * meff / (alpha * alpha));
}

double scale_of(const dkposc_model* m, double E) {
  const double M = get_field(m, "M"), w = get_field(m, "omega"),
               A = get_field(m, "A"), Om = get_field(m, "Omega");
  return std::sqrt(M * M * w * w * A * A + E * E * Om * Om);
}

// Representative root of a branch: the most positive root for "positive",
// the most negative for "negative". Returns false if the branch is empty.
bool pick_root(const dkposc_solution* sol, const std::string& branch,
               double* E_out) {
  const int count = dkposc_solution_count(sol);
  const int want = branch == "negative" ? -1 : 1;
  bool found = false;
  double best = 0.0;
  for (int i = 0; i < count; ++i) {
    double E = 0.0;
    int br = 0;
    dkposc_solution_root(sol, i, &E, nullptr, &br, nullptr);
    if (br != want) continue;
    if (!found || (want > 0 ? E > best : E < best)) best = E;
    found = true;
  }
  if (found && E_out) *E_out = best;
  return found;
}

template <typename Fn>
int with_out_stream(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 3;
  }
  fn(f);
  return 0;
}

int run_solve(const ParamOpts& po, const std::string& branch,
              const std::string& out_path) {
  auto bm = build_model(po);
  dkposc_solution* raw = nullptr;
  const dkposc_status st = dkposc_solve(bm.model.get(), &raw);
  if (st != DKPOSC_OK) return fail(st);
  SolutionPtr sol(raw);

  nlohmann::json out;
  out["n"] = bm.n;
  out["m"] = bm.m;
  out["branch"] = branch;
  out["exponent"] = exponent_of(bm.model.get(), bm.m);
  auto roots = nlohmann::json::array();
  const int count = dkposc_solution_count(sol.get());
  for (int i = 0; i < count; ++i) {
    double E = 0.0, residual = 0.0;
    int br = 0, flagged = 0;
    dkposc_solution_root(sol.get(), i, &E, &residual, &br, &flagged);
    if (branch == "positive" && br < 0) continue;
    if (branch == "negative" && br > 0) continue;
    roots.push_back({{"E", E},
                     {"residual", residual},
                     {"branch", br > 0 ? "positive" : "negative"},
                     {"flagged", flagged != 0},
                     {"scale", scale_of(bm.model.get(), E)}});
  }
  out["roots"] = std::move(roots);
  const bool empty = out["roots"].empty();
  if (empty) out["message"] = "no real root on requested branch";
  const int werr = with_out_stream(
      out_path, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
  if (werr) return werr;
  return empty ? 2 : 0;
}

struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 50;
  std::string branch = "positive";
  std::string multi;
  bool gnuplot = false;
};

// The swept values must satisfy the parameter's own range up front; a sweep
// that would fault midway is a config error, not a partial result.
int check_sweep_range(const SweepSpec& sw) {
  if (!(sw.from < sw.to)) {
    std::cerr << "error: sweep requires from < to\n";
    return 3;
  }
  auto bad = [&](const char* why) {
    std::cerr << "error: sweep range invalid for " << sw.param << ": " << why
              << "\n";
    return 3;
  };
  if (sw.param == "alpha" && (sw.from <= 0.0 || sw.to > 1.0))
    return bad("alpha lies in (0, 1]");
  if (sw.param == "Omega" && sw.from < 0.0) return bad("Omega must be >= 0");
  if (sw.param == "omega" && sw.from <= 0.0) return bad("omega must be > 0");
  if (sw.param == "n" && std::llround(sw.from) < 0)
    return bad("n must be >= 0");
  return 0;
}

int run_sweep(const ParamOpts& po, const SweepSpec& sw,
              const std::string& out_path) {
  if (int rc = check_sweep_range(sw)) return rc;

  // --multi name=v1,v2,... fans one sweep out into labelled curves.
  std::string multi_name;
  std::vector<double> multi_vals;
  if (!sw.multi.empty()) {
    const auto eq = sw.multi.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --multi expects name=v1,v2,...\n";
      return 3;
    }
    multi_name = sw.multi.substr(0, eq);
    const bool real_key =
        std::any_of(kRealKeys.begin(), kRealKeys.end(),
                    [&](const char* k) { return multi_name == k; });
    if (!real_key || multi_name == sw.param) {
      std::cerr << "error: --multi parameter must be a real field distinct "
                   "from the swept one: "
                << multi_name << "\n";
      return 3;
    }
    std::string rest = sw.multi.substr(eq + 1);
    for (std::size_t pos = 0; pos <= rest.size();) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      const std::string tok = rest.substr(pos, comma - pos);
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        multi_vals.push_back(v);
      } catch (const std::exception&) {
        std::cerr << "error: bad --multi value: '" << tok << "'\n";
        return 3;
      }
      pos = comma + 1;
    }
    if (multi_vals.empty()) {
      std::cerr << "error: --multi lists no values\n";
      return 3;
    }
  }

  auto bm = build_model(po);
  const bool integer_param = sw.param == "n" || sw.param == "m";
  int successes = 0;

  const int wrc = with_out_stream(out_path, [&](std::ostream& os) {
    std::vector<std::string> header;
    if (!multi_name.empty()) header.push_back("curve");
    for (const char* h : {"sweep_param", "value", "n", "m", "E", "residual",
                          "reason"})
      header.push_back(h);
    cli::write_row(os, header);

    const std::size_t curves = multi_vals.empty() ? 1 : multi_vals.size();
    for (std::size_t c = 0; c < curves; ++c) {
      std::string curve_label;
      if (!multi_vals.empty()) {
        dkposc_model_set(bm.model.get(), multi_name.c_str(), multi_vals[c]);
        curve_label = multi_name + "=" + cli::fmt(multi_vals[c]);
      }
      for (int i = 0; i < sw.steps; ++i) {
        const double raw =
            sw.from + (sw.to - sw.from) * i / double(sw.steps - 1);
        int n_now = bm.n, m_now = bm.m;
        std::string value_cell;
        if (integer_param) {
          const long long iv = std::llround(raw);
          value_cell = cli::fmt_int(iv);
          if (sw.param == "n")
            n_now = static_cast<int>(iv);
          else
            m_now = static_cast<int>(iv);
          dkposc_model_set_quantum(bm.model.get(), n_now, m_now);
        } else {
          value_cell = cli::fmt(raw);
          dkposc_model_set(bm.model.get(), sw.param.c_str(), raw);
        }

        auto emit = [&](const std::string& E, const std::string& residual,
                        const std::string& reason) {
          std::vector<std::string> row;
          if (!curve_label.empty()) row.push_back(curve_label);
          row.insert(row.end(),
                     {sw.param, value_cell, cli::fmt_int(n_now),
                      cli::fmt_int(m_now), E, residual, reason});
          cli::write_row(os, row);
        };

        dkposc_solution* raw_sol = nullptr;
        const dkposc_status st = dkposc_solve(bm.model.get(), &raw_sol);
        if (st != DKPOSC_OK) {
          emit("", "", dkposc_last_error());
          continue;
        }
        SolutionPtr sol(raw_sol);
        const int count = dkposc_solution_count(sol.get());
        bool any = false;
        for (int r = 0; r < count; ++r) {
          double E = 0.0, residual = 0.0;
          int br = 0;
          dkposc_solution_root(sol.get(), r, &E, &residual, &br, nullptr);
          if (sw.branch == "positive" && br < 0) continue;
          if (sw.branch == "negative" && br > 0) continue;
          emit(cli::fmt(E), cli::fmt(residual), "");
          any = true;
          ++successes;
        }
        if (!any) emit("", "", "no root on " + sw.branch + " branch");
      }
    }
  });
  if (wrc) return wrc;

  if (sw.gnuplot) {
    if (out_path == "-") {
      std::cerr << "error: --gnuplot needs --out pointing at a file\n";
      return 3;
    }
    std::ofstream gp(out_path + ".gp", std::ios::binary);
    if (!gp) {
      std::cerr << "error: cannot open plot script: " << out_path << ".gp\n";
      return 3;
    }
    gp << "# gnuplot script for " << out_path << "\n"
       << "set datafile separator ','\n"
       << "set xlabel '" << sw.param << "'\n"
       << "set ylabel 'E'\n";
    if (multi_name.empty()) {
      gp << "plot '" << out_path << "' skip 1 using 2:5 with lines title 'E("
         << sw.param << ")'\n";
    } else {
      gp << "curves = \"";
      for (std::size_t c = 0; c < multi_vals.size(); ++c)
        gp << (c ? " " : "") << multi_name << "=" << cli::fmt(multi_vals[c]);
      gp << "\"\n"
         << "plot for [c in curves] '" << out_path
         << "' skip 1 using 3:(strcol(1) eq c ? column(6) : NaN) "
            "with lines title c\n";
    }
  }

  if (successes == 0) {
    std::cerr << "error: sweep produced no successful points\n";
    return 2;
  }
  return 0;
}

int run_wavefunction(const ParamOpts& po, const std::string& branch,
                     int steps, std::optional<double> r_max,
                     const std::string& out_path) {
  if (branch == "all") {
    std::cerr << "error: wavefunction needs --branch positive or negative\n";
    return 3;
  }
  if (steps < 2) {
    std::cerr << "error: --steps must be >= 2\n";
    return 3;
  }
  auto bm = build_model(po);
  dkposc_solution* raw = nullptr;
  dkposc_status st = dkposc_solve(bm.model.get(), &raw);
  if (st != DKPOSC_OK) return fail(st);
  SolutionPtr sol(raw);
  double E = 0.0;
  if (!pick_root(sol.get(), branch, &E)) {
    std::cerr << "error: no root on " << branch << " branch\n";
    return 2;
  }

  double rmax = 0.0;
  if (r_max) {
    if (*r_max <= 0.0) {
      std::cerr << "error: --to must be > 0 for wavefunction\n";
      return 3;
    }
    rmax = *r_max;
  } else {
    st = dkposc_wavefunction_extent(bm.model.get(), E, &rmax);
    if (st != DKPOSC_OK) return fail(st);
  }

  int rc = 0;
  const int wrc = with_out_stream(out_path, [&](std::ostream& os) {
    cli::write_row(os, {"r", "phi1", "J_t"});
    for (int i = 0; i < steps && rc == 0; ++i) {
      const double r = rmax * i / double(steps - 1);
      double phi1 = 0.0, jt = 0.0;
      const dkposc_status es =
          dkposc_wavefunction_eval(bm.model.get(), E, r, &phi1, nullptr, &jt);
      if (es != DKPOSC_OK) {
        rc = fail(es);
        return;
      }
      cli::write_row(os, {cli::fmt(r), cli::fmt(phi1), cli::fmt(jt)});
    }
  });
  return wrc ? wrc : rc;
}

int run_oracle(const ParamOpts& po, const std::string& branch, int grid_points,
               const std::string& out_path) {
  if (branch == "all") {
    std::cerr << "error: oracle needs --branch positive or negative\n";
    return 3;
  }
  auto bm = build_model(po);
  dkposc_solution* raw = nullptr;
  dkposc_status st = dkposc_solve(bm.model.get(), &raw);
  if (st != DKPOSC_OK) return fail(st);
  SolutionPtr sol(raw);
  double E_closed = 0.0;
  if (!pick_root(sol.get(), branch, &E_closed)) {
    std::cerr << "error: no root on " << branch << " branch\n";
    return 2;
  }

  nlohmann::json out;
  out["E_closed"] = E_closed;
  if (grid_points > 0)
    out["grid_points"] = grid_points;
  else
    out["grid_points"] = nullptr;

  double E_oracle = 0.0;
  st = dkposc_oracle_energy(bm.model.get(), E_closed, grid_points, &E_oracle);
  if (st == DKPOSC_OK) {
    const double rel =
        std::fabs(E_oracle - E_closed) / std::max(std::fabs(E_closed), 1e-30);
    out["E_oracle"] = E_oracle;
    out["relative_difference"] = rel;
    out["agrees"] = rel <= 1e-6;
  } else if (st == DKPOSC_ORACLE_DISAGREEMENT) {
    // A disagreement is the oracle doing its job: report it, exit clean.
    out["finding"] = "oracle_disagreement";
    out["message"] = dkposc_last_error();
    out["agrees"] = false;
  } else {
    return fail(st);
  }
  const int wrc = with_out_stream(
      out_path, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
  return wrc;
}

int run_verify(const std::string& level, bool json_out,
               const std::string& out_path) {
  unsigned long long seed = 20260819ULL;
  if (const char* env = std::getenv("DKP_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') seed = v;
  }
  int passed = 0;
  char* report = nullptr;
  const dkposc_status st =
      dkposc_verify(level == "full" ? 1 : 0, seed, &passed, &report);
  if (st != DKPOSC_OK) return fail(st);
  std::unique_ptr<char, decltype(&dkposc_string_free)> guard(
      report, &dkposc_string_free);

  const int wrc = with_out_stream(out_path, [&](std::ostream& os) {
    if (json_out) {
      os << report << "\n";
      return;
    }
    const auto j = nlohmann::json::parse(report);
    os << "verify level=" << j["level"].get<std::string>()
       << " seed=" << j["seed"].get<unsigned long long>() << "\n";
    for (const auto& c : j["checks"]) {
      os << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ")
         << c["name"].get<std::string>()
         << " worst=" << cli::fmt(c["worst"].get<double>())
         << " tolerance=" << cli::fmt(c["tolerance"].get<double>()) << " ("
         << c["detail"].get<std::string>() << ")\n";
    }
    os << (j["all_passed"].get<bool>() ? "all checks passed"
                                       : "FAILED: see lines above")
       << "\n";
  });
  if (wrc) return wrc;
  return passed ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bound-state spectrum of a DKP oscillator with a Cornell-type "
      "interaction on a spinning cosmic-string background"};
  app.require_subcommand(1);

  std::string out_path = "-";
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file, or - for stdout")
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "roots of the quantization condition");
  add_out(solve);
  ParamOpts solve_po;
  add_param_opts(solve, solve_po);
  std::string solve_branch = "positive";
  solve->add_option("--branch", solve_branch, "positive, negative or all")
      ->check(CLI::IsMember({"positive", "negative", "all"}));

  auto* sweep = app.add_subcommand("sweep", "energy across a parameter range, CSV");
  add_out(sweep);
  ParamOpts sweep_po;
  add_param_opts(sweep, sweep_po);
  SweepSpec sw;
  sweep->add_option("--param", sw.param, "parameter to sweep")
      ->required()
      ->check(CLI::IsMember(
          {"alpha", "Omega", "omega", "A", "B", "phi", "k", "n", "m"}));
  sweep->add_option("--from", sw.from, "start value")->required();
  sweep->add_option("--to", sw.to, "end value")->required();
  sweep->add_option("--steps", sw.steps, "sample count, >= 2")
      ->capture_default_str()
      ->check(CLI::Range(2, 100000));
  sweep->add_option("--branch", sw.branch, "positive, negative or all")
      ->check(CLI::IsMember({"positive", "negative", "all"}));
  sweep->add_option("--multi", sw.multi,
                    "extra curves, e.g. omega=0.5,1,1.5");
  sweep->add_flag("--gnuplot", sw.gnuplot,
                  "also write a plot script next to --out");

  auto* wave = app.add_subcommand("wavefunction",
                                  "radial function and charge density, CSV");
  add_out(wave);
  ParamOpts wave_po;
  add_param_opts(wave, wave_po);
  std::string wave_branch = "positive";
  int wave_steps = 200;
  double wave_to = 0.0;
  wave->add_option("--branch", wave_branch, "positive or negative")
      ->check(CLI::IsMember({"positive", "negative", "all"}));
  auto* wave_to_opt =
      wave->add_option("--to", wave_to, "largest radius (default: auto)");
  wave->add_option("--steps", wave_steps, "row count, >= 2")
      ->capture_default_str();

  auto* oracle = app.add_subcommand(
      "oracle", "finite-difference cross-check of the closed form");
  add_out(oracle);
  ParamOpts oracle_po;
  add_param_opts(oracle, oracle_po);
  std::string oracle_branch = "positive";
  int grid_points = 0;
  bool oracle_json = false;
  oracle->add_option("--branch", oracle_branch, "positive or negative")
      ->check(CLI::IsMember({"positive", "negative", "all"}));
  oracle->add_option("--grid-points", grid_points,
                     "total grid nodes (default: built-in)");
  oracle->add_flag("--json", oracle_json, "JSON output (always on)");

  auto* verify = app.add_subcommand("verify", "cross-module self checks");
  add_out(verify);
  std::string verify_level = "quick";
  bool verify_json = false;
  verify->add_option("level", verify_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--json", verify_json, "emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (solve->parsed()) return run_solve(solve_po, solve_branch, out_path);
    if (sweep->parsed()) return run_sweep(sweep_po, sw, out_path);
    if (wave->parsed()) {
      std::optional<double> to;
      if (wave_to_opt->count() > 0) to = wave_to;
      return run_wavefunction(wave_po, wave_branch, wave_steps, to, out_path);
    }
    if (oracle->parsed())
      return run_oracle(oracle_po, oracle_branch, grid_points, out_path);
    if (verify->parsed())
      return run_verify(verify_level, verify_json, out_path);
  } catch (const cli::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 3;
}
