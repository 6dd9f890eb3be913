// herglotz: evaluate functions, verify identities, and tabulate over ranges.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or unknown name,
// 3 domain or I/O error.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "herglotz/herglotz.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Exit {
  int code;
  std::string message;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_num(double v) { return std::isfinite(v) ? num(v) : "null"; }

std::string json_str(const std::string& s) { return nlohmann::json(s).dump(); }

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<double> parse_list(const std::string& s, const char* flag, int code) {
  std::vector<double> out;
  for (const std::string& p : split(s, ',')) {
    const auto v = parse_double(p);
    if (!v) throw Exit{code, std::string(flag) + ": cannot parse '" + p + "' as a number"};
    out.push_back(*v);
  }
  if (out.empty()) throw Exit{code, std::string(flag) + ": empty list"};
  return out;
}

// start:stop:count[:lin|:log]
std::vector<double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3 && parts.size() != 4) throw Exit{kExitUsage, "--range: expected start:stop:count[:lin|log]"};
  const auto a = parse_double(parts[0]);
  const auto b = parse_double(parts[1]);
  const auto n = parse_double(parts[2]);
  if (!a || !b || !n || *n < 1 || *n != std::floor(*n) || *n > 1e6)
    throw Exit{kExitUsage, "--range: expected start:stop:count with integer count >= 1"};
  const bool log_spaced = parts.size() == 4 && parts[3] == "log";
  if (parts.size() == 4 && parts[3] != "log" && parts[3] != "lin")
    throw Exit{kExitUsage, "--range: spacing must be 'lin' or 'log'"};
  if (log_spaced && !(*a > 0 && *b > 0)) throw Exit{kExitDomain, "--range: log spacing needs positive endpoints"};
  const int count = static_cast<int>(*n);
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    xs[i] = log_spaced ? *a * std::pow(*b / *a, f) : *a + f * (*b - *a);
  }
  if (count > 1) xs.back() = *b;
  return xs;
}

// --tol > HERGLOTZ_TOL > 0 (library default)
double resolve_tol(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0) || !std::isfinite(*flag)) throw Exit{kExitUsage, "--tol must be positive"};
    return *flag;
  }
  if (const char* env = std::getenv("HERGLOTZ_TOL"); env && *env) {
    const auto v = parse_double(env);
    if (!v || !(*v > 0) || !std::isfinite(*v)) throw Exit{kExitUsage, "HERGLOTZ_TOL must be a positive number"};
    return *v;
  }
  return 0.0;
}

int status_exit(hz_status s) {
  switch (s) {
    case HZ_OK: return kExitOk;
    case HZ_ERR_UNKNOWN_FUNCTION:
    case HZ_ERR_UNKNOWN_IDENTITY:
    case HZ_ERR_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
  }
}

// Runs task(i, ctx) for i in [0, n) on up to `jobs` threads, one context each.
// Stops handing out work after the first failure; returns the lowest failing index.
template <class Task>
std::optional<std::pair<std::size_t, Exit>> run_parallel(std::size_t n, int jobs, Task task) {
  std::vector<std::optional<Exit>> failures(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  const auto worker = [&] {
    hz_context* ctx = nullptr;
    if (hz_context_create(&ctx) != HZ_OK) {
      stop = true;
      return;
    }
    for (std::size_t i = next++; i < n && !stop; i = next++) {
      const hz_status s = task(i, ctx);
      if (s != HZ_OK) {
        failures[i] = Exit{status_exit(s), hz_context_last_error(ctx)};
        stop = true;
      }
    }
    hz_context_destroy(ctx);
  };
  const int k = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < n; ++i)
    if (failures[i]) return std::make_pair(i, *failures[i]);
  if (stop) return std::make_pair(std::size_t{0}, Exit{kExitDomain, "could not create a context"});
  return std::nullopt;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Exit{kExitDomain, "cannot open output file: " + out_path};
  f << text;
  f.close();
  if (!f) throw Exit{kExitDomain, "cannot write output file: " + out_path};
}

struct Common {
  std::optional<double> tol;
  std::string format = "csv";
  int jobs = 1;
  std::string out;
  bool timing = false;
};

struct Record {
  double x = 0.0;
  hz_value v{};
  double ms = 0.0;
};

std::string render_records(const std::string& fn, const std::vector<Record>& recs, const std::string& format) {
  std::string s;
  if (format == "json") {
    s += "[";
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const Record& r = recs[i];
      s += i ? ",\n  " : "\n  ";
      s += "{\"function\": " + json_str(fn) + ", \"x\": " + json_num(r.x) + ", \"value\": " + json_num(r.v.value) +
           ", \"error_estimate\": " + json_num(r.v.error_estimate) + ", \"elapsed_ms\": " + json_num(r.ms) + "}";
    }
    s += recs.empty() ? "]\n" : "\n]\n";
    return s;
  }
  s += "function,x,value,error_estimate,elapsed_ms\n";
  for (const Record& r : recs)
    s += fn + "," + num(r.x) + "," + num(r.v.value) + "," + num(r.v.error_estimate) + "," + num(r.ms) + "\n";
  return s;
}

int evaluate(const std::string& fn, const std::vector<double>& xs, const Common& c) {
  double default_tol = 0.0;
  if (hz_function_default_tol(fn.c_str(), &default_tol) != HZ_OK) throw Exit{kExitUsage, "unknown function: " + fn};
  const double tol = resolve_tol(c.tol);
  std::vector<Record> recs(xs.size());
  const auto failed = run_parallel(xs.size(), c.jobs, [&](std::size_t i, hz_context* ctx) {
    recs[i].x = xs[i];
    const auto t0 = std::chrono::steady_clock::now();
    const hz_status s = hz_eval(ctx, fn.c_str(), xs[i], tol, &recs[i].v);
    if (c.timing) recs[i].ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return s;
  });
  if (failed) throw Exit{failed->second.code, fn + " at x=" + num(xs[failed->first]) + ": " + failed->second.message};
  emit(render_records(fn, recs, c.format), c.out);
  return kExitOk;
}

struct VerifyTask {
  std::string id;
  double param;
  hz_report report{};
};

int verify(const std::string& id, const std::optional<std::string>& alphas, const Common& c) {
  std::vector<std::string> ids;
  if (id == "all") {
    if (alphas) throw Exit{kExitUsage, "--alphas needs a single --id"};
    for (std::size_t i = 0; i < hz_identity_count(); ++i) ids.emplace_back(hz_identity_name(i));
  } else {
    if (hz_identity_defaults(id.c_str(), nullptr, nullptr, nullptr) != HZ_OK)
      throw Exit{kExitUsage, "unknown identity: " + id};
    ids.push_back(id);
  }
  std::vector<VerifyTask> tasks;
  for (const std::string& name : ids) {
    const double* grid = nullptr;
    std::size_t count = 0;
    hz_identity_defaults(name.c_str(), &grid, &count, nullptr);
    std::vector<double> points(grid, grid + count);
    if (alphas) {
      points = parse_list(*alphas, "--alphas", kExitDomain);
      for (double p : points)
        if (!(p > 0) || !std::isfinite(p)) throw Exit{kExitDomain, "--alphas: grid points must be positive"};
    }
    for (double p : points) tasks.push_back({name, p, {}});
  }
  const double tol = resolve_tol(c.tol);
  const auto failed = run_parallel(tasks.size(), c.jobs, [&](std::size_t i, hz_context* ctx) {
    return hz_verify(ctx, tasks[i].id.c_str(), tasks[i].param, tol, &tasks[i].report);
  });
  if (failed) {
    const VerifyTask& t = tasks[failed->first];
    throw Exit{failed->second.code, t.id + " at " + num(t.param) + ": " + failed->second.message};
  }

  std::string s;
  if (c.format == "json") {
    s += "[";
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const hz_report& r = tasks[i].report;
      s += i ? ",\n  " : "\n  ";
      s += "{\"identity\": " + json_str(tasks[i].id) + ", \"param\": " + json_num(r.param) +
           ", \"partner\": " + json_num(r.partner) + ", \"lhs\": " + json_num(r.lhs) + ", \"rhs\": " + json_num(r.rhs) +
           ", \"residual\": " + json_num(r.residual) + ", \"error_estimate\": " + json_num(r.lhs_error + r.rhs_error) +
           ", \"tolerance\": " + json_num(r.tolerance) + ", \"pass\": " + (r.pass ? "true" : "false") + "}";
    }
    s += tasks.empty() ? "]\n" : "\n]\n";
  } else {
    s += "identity,param,partner,lhs,rhs,residual,error_estimate,tolerance,pass\n";
    for (const VerifyTask& t : tasks) {
      const hz_report& r = t.report;
      s += t.id + "," + num(r.param) + "," + num(r.partner) + "," + num(r.lhs) + "," + num(r.rhs) + "," +
           num(r.residual) + "," + num(r.lhs_error + r.rhs_error) + "," + num(r.tolerance) + "," +
           (r.pass ? "pass" : "FAIL") + "\n";
    }
  }
  emit(s, c.out);

  bool all_pass = true;
  for (const std::string& name : ids) {
    int n = 0;
    int passed = 0;
    double worst = 0.0;
    for (const VerifyTask& t : tasks) {
      if (t.id != name) continue;
      ++n;
      passed += t.report.pass;
      worst = std::max(worst, t.report.residual);
    }
    all_pass = all_pass && passed == n;
    std::cerr << "summary " << name << " passed " << passed << "/" << n << " max_residual " << num(worst) << "\n";
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

void add_common(CLI::App* cmd, Common& c, bool with_timing) {
  cmd->add_option("--tol", c.tol, "Absolute tolerance (overrides HERGLOTZ_TOL)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--jobs", c.jobs, "Concurrent evaluations")->check(CLI::Range(1, 256));
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  if (with_timing) cmd->add_flag("--timing", c.timing, "Fill elapsed_ms with wall-clock times");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerics for digamma-type series, Mellin-Barnes integrals and their modular relations"};
  app.require_subcommand(1);

  Common eval_opts;
  std::string eval_fn;
  std::string eval_x;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function at one or more points");
  eval_cmd->add_option("--fn", eval_fn, "Function name (see 'list')")->required();
  eval_cmd->add_option("--x", eval_x, "Comma-separated points")->required();
  add_common(eval_cmd, eval_opts, true);

  Common verify_opts;
  std::string verify_id;
  std::optional<std::string> verify_alphas;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities on a grid");
  verify_cmd->add_option("--id", verify_id, "Identity name or 'all'")->required();
  verify_cmd->add_option("--alphas", verify_alphas, "Comma-separated grid replacing the default");
  add_common(verify_cmd, verify_opts, false);

  Common table_opts;
  std::string table_fn;
  std::string table_range;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a function over a range");
  table_cmd->add_option("--fn", table_fn, "Function name")->required();
  table_cmd->add_option("--range", table_range, "start:stop:count[:lin|log]")->required();
  add_common(table_cmd, table_opts, true);

  auto* list_cmd = app.add_subcommand("list", "List functions and identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return evaluate(eval_fn, parse_list(eval_x, "--x", kExitUsage), eval_opts);
    if (*verify_cmd) return verify(verify_id, verify_alphas, verify_opts);
    if (*table_cmd) return evaluate(table_fn, parse_range(table_range), table_opts);
    if (*list_cmd) {
      for (std::size_t i = 0; i < hz_function_count(); ++i) std::cout << "function " << hz_function_name(i) << "\n";
      for (std::size_t i = 0; i < hz_identity_count(); ++i) std::cout << "identity " << hz_identity_name(i) << "\n";
      return kExitOk;
    }
  } catch (const Exit& e) {
    std::cerr << "herglotz: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
