#include "json_io.hpp"
#include "suites.hpp"

#include "cochain/errors.hpp"
#include "cochain/extension.hpp"
#include "cochain/spaces.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

namespace {

using namespace cochain;
using verify::ConfigError;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// "2", "1-3" or "1,2,4" (and mixtures such as "0,2-3").
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  static const std::regex single(R"(\s*(\d+)\s*)");
  static const std::regex span(R"(\s*(\d+)\s*-\s*(\d+)\s*)");
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (std::regex_match(item, m, single)) {
      out.push_back(std::stoi(m[1]));
    } else if (std::regex_match(item, m, span)) {
      const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
      if (lo > hi) throw ConfigError("empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      throw ConfigError("cannot parse range '" + text + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty range '" + text + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Family> parse_families(const std::string& text) {
  if (text == "both" || text == "all") return {Family::full, Family::trimmed};
  std::vector<Family> out;
  for (const auto& item : split(text)) {
    try {
      out.push_back(parse_family(item));
    } catch (const ParseError& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

struct VerifyArgs {
  std::string n = "1-3", r = "1-2", k, family = "full,trimmed", suite = "all", json_path;
  std::uint64_t seed = 1;
  int points = 5;
  bool allow_slow = false;
};

int cmd_verify(const VerifyArgs& a) {
  verify::SuiteConfig config;
  config.n_values = parse_range(a.n);
  config.r_values = parse_range(a.r);
  if (!a.k.empty()) config.k_values = parse_range(a.k);
  config.families = parse_families(a.family);
  if (a.suite != "all") config.suites = split(a.suite);
  config.seed = a.seed;
  config.oracle_points = a.points;
  config.allow_slow = a.allow_slow;

  const auto outcome = verify::run_verify(config);
  for (std::size_t i = 0; i < outcome.suites.size(); ++i) {
    const auto& s = outcome.suites[i];
    long passed = 0, failed = 0;
    for (const auto& c : s.checks) {
      passed += c.passed;
      if (c.assertable) failed += c.failed;
    }
    std::cerr << std::left << std::setw(20) << s.name << (s.passed() ? "PASS" : "FAIL") << "  " << passed
              << " passed, " << failed << " failed  (" << std::fixed << std::setprecision(2) << outcome.seconds[i]
              << " s)\n";
    for (const auto& c : s.checks)
      if (c.failed > 0) std::cerr << "    " << c.name << (c.assertable ? "" : " [finding]") << ": " << c.failed << " failed\n";
  }
  if (!a.json_path.empty()) write_text(a.json_path, outcome.report.dump(2) + "\n");
  return outcome.passed ? 0 : kExitFailed;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_extend(const std::string& input, int k, const std::string& output) {
  const BoundaryForm data = io::boundary_from_json(io::parse_json(read_file(input)));
  if (k >= 0 && k != data.degree())
    throw ParseError("--k " + std::to_string(k) + " does not match the data degree " + std::to_string(data.degree()));
  const PolyForm ext = extend(data);
  write_text(output, io::form_to_json(ext).dump(2) + "\n");

  std::ostream& info = output.empty() || output == "-" ? std::cerr : std::cout;
  const auto deg = ext.poly_degree();
  const int r = deg ? *deg : 0;
  info << "degree k: " << ext.degree() << "\n";
  info << "polynomial degree: " << (deg ? std::to_string(*deg) : std::string("-inf")) << "\n";
  info << "in P_" << r << " Lambda^" << ext.degree() << ": " << yes_no(in_full(ext, r)) << "\n";
  if (r >= 1) info << "in P_" << r << "^- Lambda^" << ext.degree() << ": " << yes_no(in_trimmed(ext, r)) << "\n";
  info << "in P_" << r + 1 << "^- Lambda^" << ext.degree() << ": " << yes_no(in_trimmed(ext, r + 1)) << "\n";
  return 0;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text)) out.push_back(parse_rational(item));
  return out;
}

TangentVector parse_vector(const IndexSet& vertices, const std::string& text) {
  static const std::regex edge(R"(\s*(\d+)\s*-\s*(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, edge)) return TangentVector::edge(vertices, std::stoi(m[2]), std::stoi(m[1]));
  return TangentVector(vertices, parse_rationals(text));
}

int cmd_eval(const std::string& path, const std::string& point, const std::vector<std::string>& vectors) {
  const PolyForm u = io::form_from_json(io::parse_json(read_file(path)));
  const RationalPoint x(u.vertices(), parse_rationals(point));
  std::vector<TangentVector> vs;
  for (const auto& v : vectors) vs.push_back(parse_vector(u.vertices(), v));
  if (static_cast<int>(vs.size()) != u.degree())
    throw DegreeMismatch("a " + std::to_string(u.degree()) + "-form needs " + std::to_string(u.degree()) +
                         " vectors, got " + std::to_string(vs.size()));
  std::cout << to_fraction_string(form_eval(u, x, vs)) << "\n";
  return 0;
}

int cmd_bases(const VerifyArgs& a) {
  const auto ns = parse_range(a.n);
  const auto rs = parse_range(a.r);
  const auto families = parse_families(a.family);
  for (int n : ns) {
    if (n < 1 || n > verify::kHardMaxN) throw ConfigError("n = " + std::to_string(n) + " is out of range");
    const auto ks = a.k.empty() ? parse_range("0-" + std::to_string(n)) : parse_range(a.k);
    for (int r : rs)
      for (int k : ks) {
        if (k > n) continue;
        std::cout << "n=" << n << " r=" << r << " k=" << k;
        for (Family f : families) {
          const Integer dim = f == Family::full ? dim_full(n, r, k) : dim_trimmed(n, r, k);
          std::cout << "  " << to_string(f) << "=" << dim;
        }
        std::cout << "\n";
      }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial-preserving cochain extension on simplices, in exact rational arithmetic"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--n", va.n, "Dimensions, e.g. 2, 1-3 or 1,2")->capture_default_str();
  verify_cmd->add_option("--r", va.r, "Polynomial degrees")->capture_default_str();
  verify_cmd->add_option("--k", va.k, "Form degrees (default: all k <= n-1)");
  verify_cmd->add_option("--family", va.family, "full, trimmed or both")->capture_default_str();
  verify_cmd->add_option("--suite", va.suite, "Comma separated suite names or 'all'")->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "Seed for sampled points and vectors")->capture_default_str();
  verify_cmd->add_option("--points", va.points, "Oracle points per basis element")->capture_default_str();
  verify_cmd->add_option("--json", va.json_path, "Write the JSON report here ('-' for stdout)");
  verify_cmd->add_flag("--allow-slow", va.allow_slow, "Allow (n, r) beyond the default envelope");

  std::string extend_input, extend_output;
  int extend_k = -1;
  auto* extend_cmd = app.add_subcommand("extend", "Extend boundary data to the simplex");
  extend_cmd->add_option("input", extend_input, "Boundary form JSON")->required();
  extend_cmd->add_option("--k", extend_k, "Expected form degree");
  extend_cmd->add_option("--output,-o", extend_output, "Output path for the extension (default stdout)");

  std::string eval_form, eval_point;
  std::vector<std::string> eval_vectors;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a form at a point on tangent vectors");
  eval_cmd->add_option("form", eval_form, "Form JSON")->required();
  eval_cmd->add_option("--point", eval_point, "Barycentric coordinates, e.g. 1/3,1/3,1/3")->required();
  eval_cmd->add_option("--vector", eval_vectors, "Either 'i-j' for x_i - x_j or comma separated coefficients")
      ->take_all();

  VerifyArgs ba;
  ba.n = "1-3";
  ba.r = "1-3";
  auto* bases_cmd = app.add_subcommand("bases", "Print dimensions of the polynomial form spaces");
  bases_cmd->add_option("--n", ba.n, "Dimensions")->capture_default_str();
  bases_cmd->add_option("--r", ba.r, "Polynomial degrees")->capture_default_str();
  bases_cmd->add_option("--k", ba.k, "Form degrees (default: 0..n)");
  bases_cmd->add_option("--family", ba.family, "full, trimmed or both")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(va);
    if (*extend_cmd) return cmd_extend(extend_input, extend_k, extend_output);
    if (*eval_cmd) return cmd_eval(eval_form, eval_point, eval_vectors);
    if (*bases_cmd) return cmd_bases(ba);
  } catch (const IncompatibleTraces& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
