#pragma once

/**
 * @file cli.hpp
 * @brief The multigamma command line, runnable in-process.
 *
 * Exit codes: 0 ok, 1 usage or input error, 2 singular input,
 * 3 verification failure, 4 calibration failure.
 */

#include "multigamma/multigamma.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace multigamma::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kSingular = 2, kVerifyFailed = 3, kCalibrationFailed = 4 };

inline constexpr const char* kDefaultConventionsPath = "multigamma-conventions.json";
inline constexpr const char* kConventionsEnv = "MULTIGAMMA_CONVENTIONS";

struct ExactComplex {
  Rational re;
  Rational im;

  template <class Real>
  Complex<Real> to() const {
    return {to_real<Real>(re), to_real<Real>(im)};
  }
};

inline std::string to_string(const ExactComplex& z) {
  if (z.im == 0) return multigamma::to_string(z.re);
  std::string im = multigamma::to_string(z.im < 0 ? Rational(-z.im) : z.im);
  if (im == "1") im.clear();
  const std::string sign = z.im < 0 ? "-" : "+";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + im + "i";
  return multigamma::to_string(z.re) + sign + im + "i";
}

/// "a", "a+bi", "a-bi", "bi"; each component an integer, n/d, or decimal.
inline ExactComplex parse_complex(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.empty()) throw std::invalid_argument("empty complex number");
  if (text.back() != 'i') return {parse_rational(text), Rational(0)};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  if (!im_text.empty() && im_text[0] == '+') im_text.erase(0, 1);
  return {re_text.empty() ? Rational(0) : parse_rational(re_text), parse_rational(im_text)};
}

inline std::vector<unsigned> parse_p_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in --p list");
    std::size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size() || v < 1) throw std::invalid_argument("--p entries must be positive integers");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw std::invalid_argument("--p list is empty");
  return out;
}

/// Runs f.template operator()<Real>() with the smallest type holding the working precision.
template <class F>
int with_real(const Precision& prec, F&& f) {
  prec.validate();
  if (prec.working() <= real_digits10<real50>()) return f.template operator()<real50>();
  if (prec.working() <= real_digits10<real100>()) return f.template operator()<real100>();
  throw std::invalid_argument("precision above " + std::to_string(real_digits10<real100>() - prec.guard) +
                              " digits is not supported");
}

/// Evaluates fn over items on worker threads; results keep the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn) -> std::vector<decltype(fn(items.front()))> {
  using Out = decltype(fn(items.front()));
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Out> out;
  out.reserve(items.size());
  for (std::size_t begin = 0; begin < items.size(); begin += workers) {
    std::vector<std::future<Out>> batch;
    for (std::size_t i = begin; i < std::min(items.size(), begin + workers); ++i)
      batch.push_back(std::async(std::launch::async, fn, std::cref(items[i])));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

inline std::string conventions_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kConventionsEnv); env && *env) return env;
  return kDefaultConventionsPath;
}

struct Options {
  unsigned r = 1;
  std::string z;
  std::string from, to, step = "1";
  std::string p = "2,3";
  unsigned precision = 30;
  std::optional<double> tolerance;
  std::string format = "text";
  std::string conventions;
  std::string suite = "all";
  unsigned r_max = 3;
  std::string function = "multigamma";
  unsigned j_max = 4;
  bool cross_validate = false;
  std::optional<unsigned> order;
};

struct CheckRow {
  std::string identity;
  unsigned r = 0;
  std::optional<unsigned> p;
  std::string z;
  std::optional<double> residual;  // empty for exact checks
  bool pass = false;
  std::string detail;
};

inline Json row_json(const CheckRow& row) {
  Json params{{"r", row.r}};
  if (row.p) params["p"] = *row.p;
  if (!row.z.empty()) params["z"] = row.z;
  Json j{{"identity", row.identity}, {"params", params}};
  if (row.residual) j["residual"] = *row.residual;
  else j["residual"] = "exact";
  j["pass"] = row.pass;
  if (!row.detail.empty()) j["detail"] = row.detail;
  return j;
}

inline std::string row_text(const CheckRow& row) {
  std::ostringstream os;
  os << (row.pass ? "PASS  " : "FAIL  ") << row.identity << " r=" << row.r;
  if (row.p) os << " p=" << *row.p;
  if (!row.z.empty()) os << " z=" << row.z;
  if (row.residual) os << "  residual=" << std::scientific << std::setprecision(3) << *row.residual;
  else os << "  exact";
  if (!row.detail.empty()) os << "  (" << row.detail << ")";
  return os.str();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int eval(const Options& o) {
    const ExactComplex z = parse_complex(o.z);
    auto cfg = base_config(o);
    if (o.function != "multigamma") cfg.conventions = load(o);
    return with_real(cfg.precision, [&]<class Real>() {
      const Complex<Real> zr = z.template to<Real>();
      LogValue<Real> v;
      std::string label;
      if (o.function == "multigamma") {
        v = log_multigamma(o.r, zr, cfg);
        label = "G_" + std::to_string(o.r);
      } else if (o.function == "gamma") {
        v = log_gamma_r(o.r, zr, cfg);
        label = "Gamma_" + std::to_string(o.r);
      } else {
        v = log_multiple_sine(o.r, zr, cfg);
        label = "S_" + std::to_string(o.r);
      }
      const Complex<Real> value = exp(v.value);
      const unsigned d = o.precision;
      const std::string zs = to_string(z);
      if (o.format == "json") {
        Json j{{"function", label}, {"z", zs}, {"log", to_json(v, d)},
               {"value", Json{{"re", format_real(value.re, d)}, {"im", format_real(value.im, d)}}}};
        out_ << j.dump(2) << "\n";
      } else if (o.format == "csv") {
        out_ << "function,z,re_log,im_log,re_value,im_value,method,err_est\n";
        out_ << label << "," << csv_escape(zs) << "," << format_real(v.value.re, d) << ","
             << format_real(v.value.im, d) << "," << format_real(value.re, d) << "," << format_real(value.im, d)
             << "," << method_name(v.method) << "," << format_real(v.err_est, 3) << "\n";
      } else {
        out_ << "log " << label << "(" << zs << ") = " << format_complex(v.value, d) << "\n";
        out_ << label << "(" << zs << ") = " << format_complex(value, d) << "\n";
        out_ << "method " << method_name(v.method) << ", err_est " << format_real(v.err_est, 3);
        if (v.discrepancy) out_ << ", cross-check discrepancy " << format_real(*v.discrepancy, 3);
        out_ << "\n";
      }
      return kOk;
    });
  }

  int table(const Options& o) {
    const Rational from = parse_rational(o.from), to = parse_rational(o.to), step = parse_rational(o.step);
    if (!(step > 0)) throw std::invalid_argument("--step must be positive");
    if (from > to) {
      err_ << "error: empty range (--from is greater than --to)\n";
      return kUsage;
    }
    std::vector<ExactComplex> points;
    for (Rational z = from; z <= to; z += step) points.push_back({z, Rational(0)});
    const auto cfg = base_config(o);
    return with_real(cfg.precision, [&]<class Real>() {
      struct Row {
        std::optional<LogValue<Real>> value;
      };
      const auto rows = parallel_map(points, [&](const ExactComplex& z) {
        try {
          return Row{log_multigamma(o.r, z.template to<Real>(), cfg)};
        } catch (const SingularInput&) {
          return Row{std::nullopt};
        }
      });
      const unsigned d = o.precision;
      if (o.format == "json") {
        Json arr = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          Json row{{"z", to_string(points[i])}};
          if (rows[i].value) row.update(to_json(*rows[i].value, d));
          else row.update(Json{{"re", nullptr}, {"im", nullptr}, {"method", "singular"}, {"err_est", nullptr}});
          arr.push_back(row);
        }
        out_ << Json{{"function", "log G_" + std::to_string(o.r)}, {"rows", arr}}.dump(2) << "\n";
      } else {
        const bool csv = o.format == "csv";
        out_ << (csv ? "z,re,im,method,err_est\n" : "z                 re                                     im          method      err_est\n");
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const std::string zs = to_string(points[i]);
          std::string re, im, method = "singular", err;
          if (rows[i].value) {
            re = format_real(rows[i].value->value.re, d);
            im = format_real(rows[i].value->value.im, d);
            method = method_name(rows[i].value->method);
            err = format_real(rows[i].value->err_est, 3);
          }
          if (csv) {
            out_ << zs << "," << re << "," << im << "," << method << "," << err << "\n";
          } else {
            out_ << std::left << std::setw(18) << zs << std::setw(39) << re << std::setw(12) << im << std::setw(12)
                 << method << err << "\n";
          }
        }
      }
      return kOk;
    });
  }

  int verify(const Options& o) {
    std::vector<CheckRow> rows;
    const auto p_list = parse_p_list(o.p);
    if (o.r_max < 1) throw std::invalid_argument("--r-max must be at least 1");
    if (o.suite == "symbolic" || o.suite == "all") {
      for (const auto& rep : check_identities(o.r_max, p_list)) {
        CheckRow row{rep.identity, rep.r, rep.p, "", std::nullopt, rep.pass, rep.note};
        if (!rep.pass && rep.witness) row.detail = "witness " + *rep.witness;
        rows.push_back(row);
      }
    }
    if (o.suite == "numeric" || o.suite == "all") {
      auto cfg = base_config(o);
      cfg.conventions = load(o);
      with_real(cfg.precision, [&]<class Real>() {
        for (auto& row : numeric_rows<Real>(o, cfg, p_list)) rows.push_back(std::move(row));
        return kOk;
      });
    }
    const auto first_failure = std::find_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; });
    if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& row : rows) arr.push_back(row_json(row));
      out_ << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
      out_ << "identity,r,p,z,residual,pass\n";
      for (const auto& row : rows) {
        std::ostringstream res;
        if (row.residual) res << std::scientific << std::setprecision(6) << *row.residual;
        else res << "exact";
        out_ << row.identity << "," << row.r << "," << (row.p ? std::to_string(*row.p) : "") << ","
             << csv_escape(row.z) << "," << res.str() << "," << (row.pass ? "true" : "false") << "\n";
      }
    } else {
      for (const auto& row : rows) out_ << row_text(row) << "\n";
      const auto failed = std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; });
      out_ << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " checks passed\n";
    }
    if (first_failure != rows.end()) {
      err_ << "first counterexample: " << row_text(*first_failure) << "\n";
      return kVerifyFailed;
    }
    return kOk;
  }

  int calibrate(const Options& o) {
    const auto cfg = base_config(o);
    const std::string path = conventions_path(o.conventions);
    return with_real(cfg.precision, [&]<class Real>() {
      ConventionSet conv;
      try {
        conv = calibrate_conventions<Real>(cfg);
      } catch (const CalibrationError& e) {
        err_ << "calibration failed: " << e.what();
        return static_cast<int>(kCalibrationFailed);
      }
      save_conventions(conv, path);
      if (o.format == "json") {
        out_ << to_json(conv).dump(2) << "\n";
      } else {
        out_ << "resolved conventions: s_phi=" << conv.s_phi << " sigma_phi=" << multigamma::to_string(conv.sigma_phi)
             << " s_R=" << conv.s_R << "\n";
        out_ << "written to " << path << "\n\n" << format_evidence(conv.evidence);
      }
      return static_cast<int>(kOk);
    });
  }

  int constants(const Options& o) {
    const auto cfg = base_config(o);
    return with_real(cfg.precision, [&]<class Real>() {
      const unsigned d = o.precision;
      const auto table = zeta_prime_neg_table<Real>(o.j_max + 1, cfg.precision);
      const Real log_glaisher = Real(1) / 12 - table.at(1);
      if (o.format == "json") {
        Json j = Json::object();
        Json zp = Json::array();
        for (unsigned i = 0; i < table.size(); ++i) zp.push_back(Json{{"j", i}, {"value", format_real(table[i], d)}});
        j["zeta_prime_neg"] = zp;
        j["log_glaisher"] = format_real(log_glaisher, d);
        out_ << j.dump(2) << "\n";
      } else if (o.format == "csv") {
        out_ << "name,value\n";
        for (unsigned i = 0; i < table.size(); ++i)
          out_ << zeta_label(i) << "," << format_real(table[i], d) << "\n";
        out_ << "log A," << format_real(log_glaisher, d) << "\n";
      } else {
        for (unsigned i = 0; i < table.size(); ++i)
          out_ << std::left << std::setw(9) << zeta_label(i) << " = " << format_real(table[i], d) << "\n";
        out_ << "log A     = " << format_real(log_glaisher, d) << "\n";
      }
      return static_cast<int>(kOk);
    });
  }

 private:
  static std::string zeta_label(unsigned j) { return j == 0 ? "zeta'(0)" : "zeta'(-" + std::to_string(j) + ")"; }

  EvalConfig base_config(const Options& o) const {
    EvalConfig cfg;
    cfg.precision = Precision{o.precision, 10};
    cfg.tolerance = o.tolerance.value_or(1e-8);
    cfg.cross_validate = o.cross_validate;
    if (o.order) cfg.extrapolation_order = *o.order;
    cfg.precision.validate();
    cfg.validate();
    return cfg;
  }

  ConventionSet load(const Options& o) const { return load_conventions(conventions_path(o.conventions)); }

  template <class Real>
  std::vector<CheckRow> numeric_rows(const Options& o, const EvalConfig& cfg, const std::vector<unsigned>& p_list) {
    struct Job {
      std::string identity;
      unsigned r;
      unsigned p;
      ExactComplex z;
    };
    const auto half = [](long n) { return ExactComplex{make_rational(n, 2), Rational(0)}; };
    std::vector<Job> jobs;
    for (unsigned r = 1; r <= o.r_max; ++r)
      for (unsigned p : p_list)
        for (long twice : {2L, 3L, 4L, 5L}) jobs.push_back({"multiplication", r, p, half(twice)});
    const unsigned r_route = std::min(o.r_max, 3u);
    const std::vector<ExactComplex> grid{half(1), half(3), half(5), ExactComplex{Rational(1), Rational(1)}};
    for (unsigned r = 1; r <= r_route; ++r)
      for (const auto& z : grid) jobs.push_back({"recurrence", r, 0, z});
    for (unsigned r = 1; r <= r_route; ++r)
      for (const auto& z : grid) jobs.push_back({"cross_method", r, 0, z});
    for (unsigned r = 1; r <= r_route; ++r)
      for (long twice : {1L, 2L, 3L, 4L}) jobs.push_back({"oracle", r, 0, half(twice)});

    return parallel_map(jobs, [&](const Job& job) {
      CheckRow row{job.identity, job.r, std::nullopt, to_string(job.z), std::nullopt, false, ""};
      const Complex<Real> z = job.z.template to<Real>();
      Real residual = 0;
      try {
        if (job.identity == "multiplication") {
          row.p = job.p;
          residual = multiplication_residual(job.r, job.p, z, cfg).residual;
        } else if (job.identity == "recurrence") {
          const Complex<Real> lhs = log_multigamma(job.r, z + Complex<Real>(Real(1)), cfg).value;
          const Complex<Real> rhs = log_multigamma(job.r - 1, z, cfg).value + log_multigamma(job.r, z, cfg).value;
          residual = relative_residual(lhs, rhs);
        } else if (job.identity == "cross_method") {
          const Complex<Real> w = z - Complex<Real>(Real(1));
          residual = relative_residual(log_multigamma_gauss(job.r, w, cfg).value,
                                       log_multigamma_asymptotic(job.r, w, cfg).value);
        } else {
          residual = relative_residual(barnes_zeta_oracle(job.r, z.re, cfg.precision).value,
                                       log_gamma_r(job.r, z, cfg).value);
        }
        row.residual = static_cast<double>(residual);
        row.pass = residual < Real(cfg.tolerance);
      } catch (const Error& e) {
        row.detail = e.what();
      }
      return row;
    });
  }

  std::ostream& out_;
  std::ostream& err_;
};

/// Parses argv and dispatches; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vigneras multiple gamma functions: evaluation, tables, identity checks, calibration"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "decimal digits (default 30)")->check(CLI::Range(10u, 90u));
    sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_order = [&o](CLI::App* sub) {
    sub->add_option("--order", o.order, "extrapolation order 0..8 (default 4, 0 = raw)")->check(CLI::Range(0u, 8u));
  };
  auto add_conventions = [&o](CLI::App* sub) {
    sub->add_option("--conventions", o.conventions,
                    std::string("conventions file (default ./") + kDefaultConventionsPath + ", or $" +
                        kConventionsEnv + ")");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate log G_r(z) (or Gamma_r, S_r)");
  eval_cmd->add_option("--r", o.r, "rank r >= 0")->required();
  eval_cmd->add_option("--z", o.z, "argument: a, a+bi, a/b")->required();
  eval_cmd->add_option("--function", o.function, "multigamma, gamma or sine")
      ->check(CLI::IsMember({"multigamma", "gamma", "sine"}));
  eval_cmd->add_flag("--cross-validate", o.cross_validate, "also run the asymptotic route and compare");
  eval_cmd->add_option("--tolerance", o.tolerance, "cross-validation tolerance (default 1e-8)");
  add_common(eval_cmd);
  add_order(eval_cmd);
  add_conventions(eval_cmd);

  auto* table_cmd = app.add_subcommand("table", "tabulate log G_r on a real grid");
  table_cmd->add_option("--r", o.r, "rank r >= 0")->required();
  table_cmd->add_option("--from", o.from, "first z")->required();
  table_cmd->add_option("--to", o.to, "last z")->required();
  table_cmd->add_option("--step", o.step, "grid step (default 1)");
  add_common(table_cmd);
  add_order(table_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check exact identities and numeric invariants");
  verify_cmd->add_option("--suite", o.suite, "symbolic, numeric or all")
      ->check(CLI::IsMember({"symbolic", "numeric", "all"}));
  verify_cmd->add_option("--r-max", o.r_max, "largest rank (default 3)");
  verify_cmd->add_option("--p", o.p, "comma-separated multiplication factors (default 2,3)");
  verify_cmd->add_option("--tolerance", o.tolerance, "numeric tolerance (default 1e-8)");
  add_common(verify_cmd);
  add_order(verify_cmd);
  add_conventions(verify_cmd);

  auto* calibrate_cmd = app.add_subcommand("calibrate", "resolve and store the sign/shift conventions");
  calibrate_cmd->add_option("--tolerance", o.tolerance, "residual threshold (default 1e-8)");
  add_common(calibrate_cmd);
  add_conventions(calibrate_cmd);

  auto* constants_cmd = app.add_subcommand("constants", "print zeta'(-j) and log A");
  constants_cmd->add_option("--j-max", o.j_max, "largest j (default 4)");
  add_common(constants_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (o.tolerance && !(*o.tolerance > 0)) {
    err << "error: --tolerance must be positive\n";
    return kUsage;
  }

  Runner runner(out, err);
  try {
    if (eval_cmd->parsed()) return runner.eval(o);
    if (table_cmd->parsed()) return runner.table(o);
    if (verify_cmd->parsed()) return runner.verify(o);
    if (calibrate_cmd->parsed()) return runner.calibrate(o);
    return runner.constants(o);
  } catch (const SingularInput& e) {
    err << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const CalibrationError& e) {
    err << "error: " << e.what() << "\n";
    return kCalibrationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace multigamma::cli
