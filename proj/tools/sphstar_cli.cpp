// Command-line driver for the verification suites and single computations.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sphstar/kernels.hpp"
#include "sphstar/report.hpp"
#include "sphstar/starprod.hpp"
#include "sphstar/suites.hpp"
#include "sphstar/symbols.hpp"

using namespace sphstar;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

// "1", "-2.5i", "1+2i", "0.5-i"
cplx parse_complex(std::string s) {
  s = trim(s);
  if (s.empty()) throw ConfigError("empty complex number");
  if (s.back() != 'i') return parse_double(s);
  s.pop_back();
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  const std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
  std::string im = cut == std::string::npos ? s : s.substr(cut);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re), parse_double(im)};
}

CVec parse_cvec(const std::string& s, CaseId c) {
  const auto parts = split(s, ',');
  if (int(parts.size()) != c.m())
    throw ConfigError("vector '" + s + "' needs " + std::to_string(c.m()) + " entries for case " + c.name());
  CVec z(c.m());
  for (int j = 0; j < c.m(); ++j) z[j] = parse_complex(parts[j]);
  return z;
}

std::vector<CaseId> parse_cases(const std::vector<std::string>& items) {
  std::vector<CaseId> out;
  for (const auto& item : items)
    for (const auto& part : split(item, ';')) {
      if (part.empty() || part == "all") continue;
      try {
        out.push_back(CaseId::parse(part));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& p : split(s, ','))
    if (!p.empty()) out.push_back(parse_double(p));
  return out;
}

SymbolPoly parse_symbol(CaseId c, const std::string& text) {
  try {
    if (text == "1") return SymbolPoly::constant(c, 1.0);
    return SymbolPoly::word(c, parse_word(c, text));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// Flat key=value file; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(no) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

struct Options {
  std::vector<std::string> cases;
  std::string suites;
  std::string hbar;
  int trunc = 0;
  std::uint64_t seed = 1;
  double tol = 0.0;
  std::string out;
  std::string format = "csv";
  int samples = 20;
  std::string config;
  std::string f1 = "A3", f2 = "A3*", z, w, in, method = "oracle";
  int mc_samples = 100000;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--case", o.cases, "case id such as 2,2 (repeatable, or ';'-separated)");
  sub->add_option("--hbar", o.hbar, "comma-separated hbar values");
  sub->add_option("--trunc", o.trunc, "kernel series terms (0 = automatic)");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--out", o.out, "output path (default stdout)");
  sub->add_option("--format", o.format, "csv or json");
  sub->add_option("--config", o.config, "key=value config file (flags win)");
}

// Config file values first, then the flags that were given on the command line.
RunConfig build_run_config(const CLI::App* sub, const Options& o, const std::string& fixed_suite) {
  RunConfig cfg;
  std::string path = o.config;
  if (path.empty())
    if (const char* env = std::getenv("SPHSTAR_CONFIG")) path = env;
  std::map<std::string, std::string> kv;
  if (!path.empty()) kv = read_config(path);
  auto given = [&](const char* flag) { return sub->get_option_no_throw(flag) && sub->count(flag) > 0; };

  std::vector<std::string> case_items;
  if (given("--case"))
    case_items = o.cases;
  else if (kv.count("case"))
    case_items = {kv["case"]};
  cfg.cases = parse_cases(case_items);

  std::string suites = fixed_suite;
  if (suites.empty()) suites = given("--suite") ? o.suites : (kv.count("suite") ? kv["suite"] : "all");
  if (suites == "all")
    cfg.suites = suite_names();
  else
    for (const auto& s : split(suites, ','))
      if (!s.empty()) cfg.suites.push_back(s);

  const std::string hb = given("--hbar") ? o.hbar : (kv.count("hbar") ? kv["hbar"] : "");
  cfg.hbars = parse_doubles(hb);
  cfg.truncation = given("--trunc") ? o.trunc : (kv.count("trunc") ? int(parse_double(kv["trunc"])) : 0);
  cfg.seed = given("--seed") ? o.seed : (kv.count("seed") ? std::stoull(kv["seed"]) : 1);
  if (given("--tol"))
    cfg.tol = o.tol;
  else if (kv.count("tol"))
    cfg.tol = parse_double(kv["tol"]);
  cfg.format = given("--format") ? o.format : (kv.count("format") ? kv["format"] : "csv");
  cfg.out = given("--out") ? o.out : (kv.count("out") ? kv["out"] : "");
  cfg.samples = given("--samples") ? o.samples : (kv.count("samples") ? int(parse_double(kv["samples"])) : 20);
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

int emit(const std::vector<CheckRecord>& rows, const std::string& format, const std::string& out) {
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw ConfigError("cannot write " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;
  if (format == "json")
    write_json(os, rows);
  else
    write_csv(os, rows);
  int failed = 0;
  for (const auto& r : rows) failed += !r.pass;
  std::cerr << rows.size() << " checks, " << failed << " failed\n";
  for (const auto& r : rows)
    if (!r.pass)
      std::cerr << "FAIL " << r.suite << " " << r.case_name << " " << r.check_id << " err=" << r.abs_err
                << " tol=" << r.tol << " [" << r.inputs << "]\n";
  return failed ? 1 : 0;
}

int cmd_verify(const CLI::App* sub, const Options& o, const std::string& fixed_suite) {
  const RunConfig cfg = build_run_config(sub, o, fixed_suite);
  return emit(run(cfg), cfg.format, cfg.out);
}

int cmd_kernel(const CLI::App* sub, const Options& o) {
  const RunConfig cfg = build_run_config(sub, o, "kernels");
  if (cfg.cases.size() != 1) throw ConfigError("kernel needs exactly one --case");
  const CaseId c = cfg.cases[0];
  if (o.z.empty()) throw ConfigError("kernel needs --z");
  const CVec z = parse_cvec(o.z, c), w = o.w.empty() ? z : parse_cvec(o.w, c);
  const std::vector<double> hs = cfg.hbars.empty() ? std::vector<double>{1.0} : cfg.hbars;
  const int L = cfg.truncation > 0 ? cfg.truncation : default_truncation(c);
  std::printf("%-8s %-26s %-26s %-26s\n", "hbar", "series", "closed", "haar");
  for (double h : hs) {
    const cplx s = q_series(c, z, w, h, L).value;
    std::string closed = "undefined";
    try {
      closed = format_double(q_closed(c, z, w, h).value.real()) + " " +
               format_double(q_closed(c, z, w, h).value.imag()) + "i";
    } catch (const std::domain_error&) {
    }
    const cplx hq = q_haar(c, z, w, h, c.m() == 8 ? 24 : 64).value;
    std::printf("%-8g %-26s %-26s %-26s\n", h, (format_double(s.real()) + " " + format_double(s.imag()) + "i").c_str(),
                closed.c_str(), (format_double(hq.real()) + " " + format_double(hq.imag()) + "i").c_str());
  }
  return 0;
}

int cmd_star(const CLI::App* sub, const Options& o) {
  const RunConfig cfg = build_run_config(sub, o, "star");
  if (cfg.cases.size() != 1) throw ConfigError("star needs exactly one --case");
  const CaseId c = cfg.cases[0];
  if (o.z.empty()) throw ConfigError("star needs --z");
  const CVec z = parse_cvec(o.z, c);
  const SymbolPoly f1 = parse_symbol(c, o.f1), f2 = parse_symbol(c, o.f2);
  const std::vector<double> hs = cfg.hbars.empty() ? std::vector<double>{0.2, 0.1, 0.05} : cfg.hbars;
  if (o.method != "oracle" && o.method != "mc") throw ConfigError("method must be oracle or mc");
  std::printf("%-8s %-24s %-24s %-12s\n", "hbar", "star", "first_order", "remainder");
  std::vector<double> lx, ly;
  for (double h : hs) {
    StarConfig sc;
    sc.hbar = h;
    sc.truncation = cfg.truncation;
    sc.seed = cfg.seed;
    sc.mc_samples = o.mc_samples;
    cplx v;
    std::string extra;
    if (o.method == "mc") {
      const auto r = star_montecarlo(c, f1, f2, z, sc);
      v = r.value;
      extra = " +- " + format_double(r.std_error);
    } else {
      v = star_oracle(c, f1, f2, z, sc).value;
    }
    cplx fo = std::nan("");
    try {
      fo = star_firstorder(c, f1, f2, z, h);
    } catch (const std::domain_error&) {
    }
    const double rem = std::abs(v - fo);
    std::printf("%-8g %-24s %-24s %-12.4e%s\n", h, (format_double(v.real()) + " " + format_double(v.imag()) + "i").c_str(),
                (format_double(fo.real()) + " " + format_double(fo.imag()) + "i").c_str(), rem, extra.c_str());
    if (rem > 0 && std::isfinite(rem)) {
      lx.push_back(std::log(h));
      ly.push_back(std::log(rem));
    }
  }
  if (lx.size() >= 2) {
    const double n = double(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sx += lx[i];
      sy += ly[i];
      sxx += lx[i] * lx[i];
      sxy += lx[i] * ly[i];
    }
    std::printf("slope %.4f\n", (n * sxy - sx * sy) / (n * sxx - sx * sx));
  } else {
    std::printf("slope n/a\n");
  }
  return 0;
}

int cmd_report(const Options& o) {
  std::ifstream in(o.in);
  if (!in) throw ConfigError("cannot open report " + o.in);
  std::vector<CheckRecord> rows;
  try {
    rows = read_csv(in);
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  if (o.format != "csv" && o.format != "json") throw ConfigError("format must be csv or json");
  if (!o.out.empty() || o.format == "json") return emit(rows, o.format, o.out);
  std::map<std::string, std::pair<int, int>> by_suite;
  for (const auto& r : rows) {
    auto& [total, failed] = by_suite[r.suite + " " + r.case_name];
    ++total;
    failed += !r.pass;
  }
  int failed = 0;
  for (const auto& [key, tf] : by_suite) {
    std::printf("%-20s %5d checks %5d failed\n", key.c_str(), tf.first, tf.second);
    failed += tf.second;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification driver for coherent-state star products on spheres"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, o);
  verify->add_option("--suite", o.suites, "comma-separated suites or 'all'");
  verify->add_option("--tol", o.tol, "tolerance used for every check");
  verify->add_option("--samples", o.samples, "random points per case");

  std::map<std::string, CLI::App*> shortcuts;
  for (const char* name : {"invariance", "stationary", "sphere"}) {
    auto* s = app.add_subcommand(name, std::string("run the ") + name + " suite");
    add_common(s, o);
    s->add_option("--tol", o.tol, "tolerance used for every check");
    shortcuts[name] = s;
  }

  auto* kernel = app.add_subcommand("kernel", "evaluate Q(z,w) by series, closed form and group average");
  add_common(kernel, o);
  kernel->add_option("--z", o.z, "first point, comma-separated complex entries")->required();
  kernel->add_option("--w", o.w, "second point (default z)");

  auto* star = app.add_subcommand("star", "star product table over hbar with the fitted remainder slope");
  add_common(star, o);
  star->add_option("--f1", o.f1, "left word, e.g. A3 or A1*.A2");
  star->add_option("--f2", o.f2, "right word");
  star->add_option("--z", o.z, "evaluation point")->required();
  star->add_option("--method", o.method, "oracle or mc");
  star->add_option("--mc-samples", o.mc_samples, "Monte Carlo sample count");

  auto* report = app.add_subcommand("report", "summarize or convert a CSV report");
  report->add_option("--in", o.in, "CSV report")->required();
  report->add_option("--format", o.format, "csv (summary) or json (conversion)");
  report->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify, o, "");
    for (const auto& [name, sub] : shortcuts)
      if (sub->parsed()) return cmd_verify(sub, o, name);
    if (kernel->parsed()) return cmd_kernel(kernel, o);
    if (star->parsed()) return cmd_star(star, o);
    if (report->parsed()) return cmd_report(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
