// atrig: command-line front end for principal real algebras.
//
// JSON goes to stdout, a short human summary to stderr. Exit codes:
// 0 ok, 2 parse error, 3 domain error, 4 verification failure.

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "atrig/error.hpp"
#include "atrig/identities.hpp"
#include "atrig/transcendental.hpp"
#include "suites.hpp"

namespace {

using namespace atrig;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

enum class Format { json, csv, latex };

// Input problems are reported with exit 2, everything raised while
// computing with exit 3.
struct InputError {
  Error error;
};

struct Config {
  std::string algebra;
  std::string algebra_file;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<double> root_tol;
  std::optional<double> series_tol;
  std::optional<int> max_terms;

  std::string z;
  std::string branch;
  int m = 1;
  double theta = 0.0;
  int power = 1;
  std::string suite;
  std::optional<int> samples;
  std::optional<double> tol;
};

std::vector<double> parse_numbers(std::string_view text, std::string_view what) {
  std::vector<double> out;
  std::stringstream ss{std::string(text)};
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || errno == ERANGE)
      throw InputError{Error(ErrorCode::ParseError, "bad " + std::string(what) + " entry '" + token + "'")};
    out.push_back(v);
  }
  if (out.empty() || text.back() == ',')
    throw InputError{Error(ErrorCode::ParseError, "empty " + std::string(what) + " list")};
  return out;
}

template <typename F>
auto as_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError{e};
  }
}

PresentationPtr load_algebra(const Config& cfg) {
  if (!cfg.algebra_file.empty()) {
    std::ifstream in(cfg.algebra_file);
    if (!in) throw InputError{Error(ErrorCode::ParseError, "cannot read '" + cfg.algebra_file + "'")};
    std::ostringstream os;
    os << in.rdbuf();
    return as_input([&] { return parse_algebra_json(os.str()); });
  }
  if (cfg.algebra.empty()) return nullptr;
  if (std::isalpha(static_cast<unsigned char>(cfg.algebra.front())))
    return as_input([&] { return parse_preset_name(cfg.algebra); });
  const auto coeffs = parse_numbers(cfg.algebra, "coefficient");
  return as_input([&] { return Presentation::make(coeffs); });
}

PresentationPtr require_algebra(const PresentationPtr& p) {
  if (!p) throw InputError{Error(ErrorCode::ParseError, "one of --algebra or --algebra-file is required")};
  return p;
}

Element load_element(const PresentationPtr& p, const std::string& z) {
  return as_input([&] { return parse_element(p, z); });
}

BranchSpec load_branch(const std::string& text) {
  BranchSpec b;
  if (text.empty()) return b;
  for (double v : parse_numbers(text, "branch")) {
    if (v != std::floor(v) || std::abs(v) > 1e9)
      throw InputError{Error(ErrorCode::ParseError, "branch indices must be integers")};
    b.indices.push_back(static_cast<long>(v));
  }
  return b;
}

std::string number(double v) { return json(v).dump(); }

std::string csv_row(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + number(values[i]);
  return out;
}

std::vector<double> coords_of(const Element& z) { return {z.coords().begin(), z.coords().end()}; }

std::string describe(const PresentationPtr& p) {
  return p->label().value_or("R[k]/(" + p->polynomial_string() + ")");
}

class Runner {
 public:
  explicit Runner(Config cfg) : cfg_(std::move(cfg)) {
    if (cfg_.format == "csv")
      format_ = Format::csv;
    else if (cfg_.format == "latex")
      format_ = Format::latex;
    if (cfg_.series_tol) policy_.tolerance = *cfg_.series_tol;
    if (cfg_.max_terms) policy_.max_terms = *cfg_.max_terms;
    if (cfg_.root_tol) roots_.root_tolerance = *cfg_.root_tol;
  }

  int vector_command(const char* key, const std::function<Element(const Element&)>& op) {
    const auto p = require_algebra(load_algebra(cfg_));
    const auto z = load_element(p, cfg_.z);
    require_format({Format::json, Format::csv});
    const auto result = coords_of(op(z));
    if (format_ == Format::csv)
      std::cout << csv_row(result) << "\n";
    else
      std::cout << json{{key, result}}.dump() << "\n";
    std::cerr << key << " in " << describe(p) << ": " << csv_row(result) << "\n";
    return kExitOk;
  }

  int exp_cmd() {
    return vector_command("exp", [&](const Element& z) { return atrig::exp(z, policy_); });
  }

  int log_cmd() {
    const auto branch = load_branch(cfg_.branch);
    return vector_command("log", [&](const Element& z) {
      const auto dec = decompose(z.presentation());
      return atrig::log(z, branch, dec ? &*dec : nullptr);
    });
  }

  int arg_cmd() {
    const auto branch = load_branch(cfg_.branch);
    return vector_command("arg", [&](const Element& z) {
      const auto dec = decompose(z.presentation());
      return atrig::arg(z, branch, dec ? &*dec : nullptr);
    });
  }

  int trig_cmd() {
    const auto p = require_algebra(load_algebra(cfg_));
    require_format({Format::json, Format::csv});
    const auto s = trig_components(p, cfg_.m, cfg_.theta, policy_);
    if (format_ == Format::csv)
      std::cout << csv_row(s) << "\n";
    else
      std::cout << json{{"m", cfg_.m}, {"theta", cfg_.theta}, {"components", s}}.dump() << "\n";
    std::cerr << "s_1..s_" << s.size() << " of exp(k^" << cfg_.m << " * " << number(cfg_.theta) << ") in "
              << describe(p) << "\n";
    return kExitOk;
  }

  int pyth_cmd() {
    const auto p = require_algebra(load_algebra(cfg_));
    const auto z = load_element(p, cfg_.z);
    require_format({Format::json, Format::csv});
    const double f = pythagorean(z);
    if (format_ == Format::csv)
      std::cout << number(f) << "\n";
    else
      std::cout << json{{"pythagorean", f}}.dump() << "\n";
    std::cerr << "F(z) = " << number(f) << (is_unit(z) ? "" : " (not a unit)") << "\n";
    return kExitOk;
  }

  int polar_cmd() {
    const auto p = require_algebra(load_algebra(cfg_));
    const auto z = load_element(p, cfg_.z);
    const auto branch = load_branch(cfg_.branch);
    require_format({Format::json, Format::csv});
    const auto dec = decompose(p);
    const auto form = atrig::polar(z, branch, dec ? &*dec : nullptr);
    const auto arg = coords_of(form.arg);
    if (format_ == Format::csv)
      std::cout << number(form.rho) << "," << csv_row(arg) << "\n";
    else
      std::cout << json{{"rho", form.rho}, {"arg", json(arg)}}.dump() << "\n";
    std::cerr << "rho = " << number(form.rho) << ", arg = " << csv_row(arg) << "\n";
    return kExitOk;
  }

  int roots_cmd() {
    const auto p = require_algebra(load_algebra(cfg_));
    require_format({Format::json, Format::csv});
    const auto dec = find_roots(p, roots_);
    if (format_ == Format::csv) {
      for (double r : dec.real_roots) std::cout << number(r) << ",0\n";
      for (const auto& c : dec.complex_roots) std::cout << number(c.real()) << "," << number(c.imag()) << "\n";
    } else {
      json out;
      out["real_roots"] = dec.real_roots;
      auto complex = json::array();
      for (const auto& c : dec.complex_roots) complex.push_back({c.real(), c.imag()});
      out["complex_roots"] = std::move(complex);
      std::cout << out.dump() << "\n";
    }
    std::cerr << dec.real_count() << " real and " << dec.complex_count() << " conjugate pair(s) of roots of "
              << p->polynomial_string() << "\n";
    return kExitOk;
  }

  int identity_cmd(IdentityKind kind) {
    const auto p = require_algebra(load_algebra(cfg_));
    require_format({Format::json, Format::latex});
    const auto ids = kind == IdentityKind::adding_angle ? adding_angle(p) : de_moivre(p, cfg_.power);
    const auto text = render(ids, format_ == Format::latex ? RenderFormat::latex : RenderFormat::json);
    std::cout << text << (format_ == Format::latex ? "" : "\n");
    std::cerr << ids.formulas.size() << " formulas for " << describe(p) << "\n";
    return kExitOk;
  }

  int verify_cmd() {
    const auto suite = cli::parse_suite(cfg_.suite);
    if (!suite) throw InputError{Error(ErrorCode::ParseError, "unknown suite '" + cfg_.suite + "'")};
    require_format({Format::json, Format::csv});
    cli::SuiteOptions opt;
    opt.algebra = load_algebra(cfg_);
    opt.samples = cfg_.samples;
    opt.tolerance = cfg_.tol;
    opt.seed = seed();
    const auto report = cli::run_suite(*suite, opt);

    if (format_ == Format::csv) {
      std::cout << "algebra,samples,worst,passed\n";
      for (const auto& c : report.cases)
        std::cout << '"' << c.algebra << "\"," << c.samples << "," << number(c.worst) << ","
                  << (c.passed ? "true" : "false") << "\n";
    } else {
      auto cases = json::array();
      for (const auto& c : report.cases) {
        json entry{{"algebra", c.algebra}, {"samples", c.samples}, {"worst", c.worst}, {"passed", c.passed}};
        if (!c.note.empty()) entry["note"] = c.note;
        cases.push_back(std::move(entry));
      }
      std::cout << json{{"suite", cli::suite_name(*suite)},
                        {"seed", opt.seed},
                        {"tolerance", report.tolerance},
                        {"passed", report.passed},
                        {"cases", std::move(cases)}}
                       .dump()
                << "\n";
    }
    for (const auto& c : report.cases)
      std::cerr << (c.passed ? "pass " : "FAIL ") << c.algebra << "  worst " << number(c.worst) << "\n";
    std::cerr << cli::suite_name(*suite) << ": " << (report.passed ? "passed" : "FAILED") << " at tolerance "
              << number(report.tolerance) << "\n";
    return report.passed ? kExitOk : kExitVerify;
  }

 private:
  // The nil path of log needs no roots.
  std::optional<SpectralDecomposition> decompose(const PresentationPtr& p) const {
    if (p->is_nil()) return std::nullopt;
    return find_roots(p, roots_);
  }

  void require_format(std::initializer_list<Format> allowed) const {
    for (auto f : allowed)
      if (f == format_) return;
    throw InputError{Error(ErrorCode::ParseError, "--format " + cfg_.format + " is not available for this command")};
  }

  std::uint64_t seed() const {
    if (cfg_.seed) return *cfg_.seed;
    if (const char* env = std::getenv("ATRIG_SEED"); env && *env) {
      char* end = nullptr;
      errno = 0;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (*end != '\0' || errno == ERANGE || env[0] == '-')
        throw InputError{Error(ErrorCode::ParseError, "ATRIG_SEED must be a non-negative integer")};
      return v;
    }
    return 0;
  }

  Config cfg_;
  Format format_ = Format::json;
  SeriesPolicy policy_;
  RootFinderOptions roots_;
};

void report_error(const Error& e) {
  std::string message = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
  std::cout << json{{"error", to_string(e.code())}, {"message", message}}.dump() << "\n";
  std::cerr << "error: " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Arithmetic, exponentials and generalized trigonometry in R[k]/(p(k))", "atrig"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();

  auto* algebra = app.add_option("--algebra", cfg.algebra, "Preset (H<n>, C<n>, Gamma<n>) or coefficients c0,...,c(n-1)");
  auto* algebra_file = app.add_option("--algebra-file", cfg.algebra_file, "JSON file {\"label\": ..., \"coeffs\": [...]}");
  algebra->excludes(algebra_file);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--seed", cfg.seed, "Sampling seed (default: $ATRIG_SEED, else 0)");
  app.add_option("--root-tol", cfg.root_tol, "Root residual certificate tolerance")->check(CLI::PositiveNumber);
  app.add_option("--series-tol", cfg.series_tol, "Exponential series truncation tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-terms", cfg.max_terms, "Exponential series term budget")->check(CLI::PositiveNumber);

  auto add_z = [&](CLI::App* sub) {
    sub->add_option("--z", cfg.z, "Element coordinates x1,...,xn (ascending powers of k)")->required();
  };
  auto add_branch = [&](CLI::App* sub) {
    sub->add_option("--branch", cfg.branch, "One integer per complex component, comma separated");
  };

  auto* exp_cmd = app.add_subcommand("exp", "exp(z)");
  add_z(exp_cmd);
  auto* trig_cmd = app.add_subcommand("trig", "Coordinates of exp(k^m theta)");
  trig_cmd->add_option("--m", cfg.m, "Power of k")->capture_default_str();
  trig_cmd->add_option("--theta", cfg.theta, "Angle")->required();
  auto* pyth_cmd = app.add_subcommand("pyth", "Pythagorean function F(z) = det M(z)");
  add_z(pyth_cmd);
  auto* polar_cmd = app.add_subcommand("polar", "Generalized polar form (rho, arg)");
  add_z(polar_cmd);
  add_branch(polar_cmd);
  auto* log_cmd = app.add_subcommand("log", "Logarithm");
  add_z(log_cmd);
  add_branch(log_cmd);
  auto* arg_cmd = app.add_subcommand("arg", "Argument (log with the real part removed)");
  add_z(arg_cmd);
  add_branch(arg_cmd);
  auto* roots_cmd = app.add_subcommand("roots", "Spectral decomposition of p");

  auto* identity_cmd = app.add_subcommand("identity", "Exact trig identities");
  identity_cmd->require_subcommand(1);
  auto* add_angle_cmd = identity_cmd->add_subcommand("add-angle", "s_i(alpha + beta)");
  auto* de_moivre_cmd = identity_cmd->add_subcommand("de-moivre", "s_i(L alpha)");
  de_moivre_cmd->add_option("--power", cfg.power, "L")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Numerical verification suites");
  verify_cmd->add_option("--suite", cfg.suite, "kthagorean | lemma | roundtrip | identities | only-pure-power")
      ->required();
  verify_cmd->add_option("--samples", cfg.samples, "Samples per algebra")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", cfg.tol, "Tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  Runner run(cfg);
  try {
    if (exp_cmd->parsed()) return run.exp_cmd();
    if (trig_cmd->parsed()) return run.trig_cmd();
    if (pyth_cmd->parsed()) return run.pyth_cmd();
    if (polar_cmd->parsed()) return run.polar_cmd();
    if (log_cmd->parsed()) return run.log_cmd();
    if (arg_cmd->parsed()) return run.arg_cmd();
    if (roots_cmd->parsed()) return run.roots_cmd();
    if (add_angle_cmd->parsed()) return run.identity_cmd(IdentityKind::adding_angle);
    if (de_moivre_cmd->parsed()) return run.identity_cmd(IdentityKind::de_moivre);
    if (verify_cmd->parsed()) return run.verify_cmd();
  } catch (const InputError& e) {
    report_error(e.error);
    return kExitParse;
  } catch (const Error& e) {
    report_error(e);
    return kExitDomain;
  }
  return kExitParse;
}
