#include "hermite_kit_cli/cli.hpp"

#include <hermite_kit/errors.hpp>
#include <hermite_kit/expansions.hpp>
#include <hermite_kit/graphs.hpp>
#include <hermite_kit/hermite.hpp>
#include <hermite_kit/json.hpp>
#include <hermite_kit/quadrature.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace hermite_kit::cli {

namespace {

// Problems with a file named on the command line (exit 3).
class InputFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

char separator(const std::string& format) { return format == "tsv" ? '\t' : ','; }

template <class Range>
std::string join(const Range& items, char sep) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += item;
    first = false;
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? std::string() : item.substr(a, b - a + 1));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw InvalidArgument(flag + ": " + e.what());
    }
  }
  if (out.empty()) throw InvalidArgument(flag + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  for (const auto& r : parse_rational_list(text, flag)) out.push_back(to_double(r));
  return out;
}

PartSizes parse_parts(const std::string& text) {
  PartSizes parts;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item[0] == '-' || v > 100000) {
      throw InvalidArgument("--parts: '" + item + "' is not a part size");
    }
    parts.push_back(static_cast<unsigned>(v));
  }
  if (parts.empty()) throw InvalidArgument("--parts: empty list");
  return parts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SimpleGraph read_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw InputFileError(path + ": " + e.what());
  }
}

unsigned resolve_quad_order(std::optional<unsigned> flag, unsigned fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HERMITE_KIT_QUAD_ORDER"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > kMaxQuadratureOrder) {
      throw InvalidArgument("HERMITE_KIT_QUAD_ORDER must be an integer in 1.." +
                            std::to_string(kMaxQuadratureOrder));
    }
    return static_cast<unsigned>(v);
  }
  return fallback;
}

void print_polynomial(const ExactPolynomial& p, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(p).dump() << '\n';
  } else {
    out << join(p.to_strings(), separator(format)) << '\n';
  }
}

void print_series(const HermiteSeries& s, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(s).dump() << '\n';
    return;
  }
  const char sep = separator(format);
  out << "n" << sep << "coeff\n";
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) out << n << sep << fmt(s.coeffs[n]) << '\n';
}

std::vector<double> uniform_grid(double from, double to, unsigned samples) {
  if (samples < 2) throw InvalidArgument("--samples must be at least 2");
  if (!(from < to)) throw InvalidArgument("empty range: --from must be below --to");
  std::vector<double> xs(samples);
  for (unsigned i = 0; i < samples; ++i) {
    xs[i] = i + 1 == samples ? to : from + (to - from) * i / (samples - 1);
  }
  return xs;
}

void print_xy(const std::vector<double>& xs, const std::function<double(double)>& f, const std::string& format,
              std::ostream& out) {
  if (format == "json") {
    nlohmann::json j;
    j["x"] = xs;
    std::vector<double> ys;
    for (double x : xs) ys.push_back(f(x));
    j["y"] = ys;
    out << j.dump() << '\n';
    return;
  }
  const char sep = separator(format);
  out << "x" << sep << "y\n";
  for (double x : xs) out << fmt(x) << sep << fmt(f(x)) << '\n';
}

CLI::Option* add_format(CLI::App* cmd, std::string& format, const std::string& fallback) {
  format = fallback;
  return cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv", "json"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite polynomial, quadrature, expansion and matching toolkit", "hermite_kit"};
  app.require_subcommand(1);
  std::function<void()> action;

  // poly
  unsigned poly_n = 0;
  std::string poly_family = "he";
  std::string poly_format;
  auto* poly = app.add_subcommand("poly", "Exact coefficients of He_n or H_n, constant term first");
  poly->add_option("--n", poly_n, "Degree")->required()->check(CLI::Range(0u, 200u));
  poly->add_option("--family", poly_family, "he or h")->check(CLI::IsMember({"he", "h"}))->capture_default_str();
  add_format(poly, poly_format, "csv");
  poly->callback([&] {
    action = [&] { print_polynomial(hermite_explicit(poly_n, parse_family(poly_family)), poly_format, out); };
  });

  // quad
  unsigned quad_n = 1;
  std::string quad_format;
  bool quad_whole_line = false;
  auto* quad = app.add_subcommand("quad", "Gauss-Hermite nodes and weights for e^{-x^2/2}");
  quad->add_option("--n", quad_n, "Number of nodes")->required()->check(CLI::Range(1u, kMaxQuadratureOrder));
  quad->add_flag("--whole-line", quad_whole_line, "Add the w e^{x^2/2} column");
  add_format(quad, quad_format, "csv");
  quad->callback([&] {
    action = [&] {
      const auto rule = gauss_hermite_rule(quad_n);
      if (quad_format == "json") {
        nlohmann::json j;
        j["nodes"] = rule.nodes;
        j["weights"] = rule.weights;
        if (quad_whole_line) j["whole_line_weights"] = rule.whole_line_weights;
        out << j.dump() << '\n';
        return;
      }
      const char sep = separator(quad_format);
      out << "node" << sep << "weight" << (quad_whole_line ? std::string(1, sep) + "whole_line_weight" : "") << '\n';
      for (unsigned i = 0; i < rule.order; ++i) {
        out << fmt(rule.nodes[i]) << sep << fmt(rule.weights[i]);
        if (quad_whole_line) out << sep << fmt(rule.whole_line_weights[i]);
        out << '\n';
      }
    };
  });

  // plotdata
  std::string plot_kind = "poly";
  unsigned plot_n = 0;
  std::string plot_family = "he";
  double plot_from = -1.0;
  double plot_to = 1.0;
  unsigned plot_samples = 101;
  double plot_mu = 0.0;
  unsigned plot_truncation = 30;
  std::string plot_series_file;
  std::string plot_format;
  auto* plot = app.add_subcommand("plotdata", "Sample a polynomial, Hermite function or series on a grid");
  plot->add_option("--kind", plot_kind, "poly, function or series")
      ->check(CLI::IsMember({"poly", "function", "series"}))
      ->capture_default_str();
  plot->add_option("--n", plot_n, "Degree (poly, function)")->check(CLI::Range(0u, 200u));
  plot->add_option("--family", plot_family, "he or h")->check(CLI::IsMember({"he", "h"}))->capture_default_str();
  plot->add_option("--from", plot_from, "Range start")->capture_default_str();
  plot->add_option("--to", plot_to, "Range end")->capture_default_str();
  plot->add_option("--samples", plot_samples, "Grid points, at least 2")->capture_default_str();
  plot->add_option("--mu", plot_mu, "Shift of the N(mu, 1) density (series)");
  plot->add_option("--truncation", plot_truncation, "Series truncation (series)")->capture_default_str();
  plot->add_option("--series-file", plot_series_file, "JSON series to plot instead of the shifted Gaussian");
  add_format(plot, plot_format, "tsv");
  plot->callback([&] {
    action = [&] {
      const auto xs = uniform_grid(plot_from, plot_to, plot_samples);
      const auto family = parse_family(plot_family);
      if (plot_kind == "poly") {
        print_xy(xs, [&](double x) { return eval_hermite(plot_n, x, family); }, plot_format, out);
      } else if (plot_kind == "function") {
        const auto kind = parse_function_kind(plot_family);
        print_xy(xs, [&](double x) { return eval_hermite_function(plot_n, x, kind); }, plot_format, out);
      } else {
        HermiteSeries s;
        if (!plot_series_file.empty()) {
          try {
            s = series_from_json(nlohmann::json::parse(read_file(plot_series_file)));
          } catch (const nlohmann::json::exception& e) {
            throw InputFileError(plot_series_file + ": " + e.what());
          } catch (const ParseError& e) {
            throw InputFileError(plot_series_file + ": " + e.what());
          }
        } else {
          s = shifted_gaussian_series(plot_mu, plot_truncation);
        }
        print_xy(xs, [&](double x) { return evaluate_series(s, x); }, plot_format, out);
      }
    };
  });

  // graph
  auto* graph = app.add_subcommand("graph", "Matching counts and Hermite product integrals");
  graph->require_subcommand(1);

  std::string graph_file;
  std::string graph_format;
  auto* match_poly = graph->add_subcommand("match-poly", "Matching polynomial of an edge-list graph");
  match_poly->add_option("--file", graph_file, "Edge-list file")->required();
  add_format(match_poly, graph_format, "csv");
  match_poly->callback([&] {
    action = [&] { print_polynomial(matching_polynomial(read_graph(graph_file)), graph_format, out); };
  });

  std::string matches_format;
  auto* matches = graph->add_subcommand("matches", "Table of j-match counts p(G, j)");
  matches->add_option("--file", graph_file, "Edge-list file")->required();
  add_format(matches, matches_format, "csv");
  matches->callback([&] {
    action = [&] {
      const auto table = match_count_table(read_graph(graph_file));
      if (matches_format == "json") {
        std::vector<std::string> counts;
        for (const auto& c : table) counts.push_back(c.str());
        out << nlohmann::json(counts).dump() << '\n';
        return;
      }
      const char sep = separator(matches_format);
      out << "j" << sep << "count\n";
      for (std::size_t j = 0; j < table.size(); ++j) out << j << sep << table[j] << '\n';
    };
  });

  std::vector<std::string> kpartite_parts;
  std::string kpartite_format;
  auto* kpartite = graph->add_subcommand("kpartite", "P and J = sqrt(2 pi) P for complete multipartite graphs");
  kpartite->add_option("--parts", kpartite_parts, "Part sizes like 1,1,2; repeat for more rows")->required();
  add_format(kpartite, kpartite_format, "csv");
  kpartite->callback([&] {
    action = [&] {
      std::vector<PartSizes> rows;
      for (const auto& text : kpartite_parts) rows.push_back(parse_parts(text));
      if (kpartite_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& parts : rows) {
          j.push_back({{"parts", parts},
                       {"P", count_complete_matches(parts).str()},
                       {"J", hermite_product_integral(parts)}});
        }
        out << j.dump() << '\n';
        return;
      }
      const char sep = separator(kpartite_format);
      out << "parts" << sep << "P" << sep << "J\n";
      for (const auto& parts : rows) {
        std::vector<std::string> items;
        for (unsigned p : parts) items.push_back(std::to_string(p));
        out << join(items, ' ') << sep << count_complete_matches(parts) << sep << fmt(hermite_product_integral(parts))
            << '\n';
      }
    };
  });

  std::string product_parts;
  auto* product = graph->add_subcommand("product-integral", "Integral of e^{-x^2/2} prod He_{n_i}");
  product->add_option("--parts", product_parts, "Degrees like 1,1,2")->required();
  product->callback([&] { action = [&] { out << fmt(hermite_product_integral(parse_parts(product_parts))) << '\n'; }; });

  unsigned lin_m = 0;
  unsigned lin_n = 0;
  std::string lin_format;
  auto* linearize = graph->add_subcommand("linearize", "He_m He_n expanded in the He basis");
  linearize->add_option("--m", lin_m, "First degree")->required()->check(CLI::Range(0u, 1000u));
  linearize->add_option("--n", lin_n, "Second degree")->required()->check(CLI::Range(0u, 1000u));
  add_format(linearize, lin_format, "json");
  linearize->callback([&] {
    action = [&] {
      const auto coeffs = linearization_coeffs(lin_m, lin_n);
      if (lin_format == "json") {
        // highest degree first; counts stay exact as bare JSON integers
        std::string line = "{";
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
          if (it != coeffs.rbegin()) line += ',';
          line += "\"" + std::to_string(it->first) + "\":" + it->second.str();
        }
        out << line << "}\n";
        return;
      }
      const char sep = separator(lin_format);
      out << "l" << sep << "a\n";
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out << it->first << sep << it->second << '\n';
    };
  });

  // expand
  auto* expand = app.add_subcommand("expand", "Hermite expansions of densities and functions");
  expand->require_subcommand(1);
  std::optional<unsigned> quad_order;

  double fh_mu = 0.0;
  double fh_sigma = 1.0;
  unsigned fh_truncation = 30;
  std::string fh_format;
  auto* fh = expand->add_subcommand("fourier-hermite", "Fourier-Hermite coefficients of the N(mu, sigma^2) density");
  fh->add_option("--mu", fh_mu, "Mean")->capture_default_str();
  fh->add_option("--sigma", fh_sigma, "Standard deviation")->capture_default_str();
  fh->add_option("--truncation", fh_truncation, "Highest degree N")->capture_default_str()->check(CLI::Range(0u, 190u));
  fh->add_option("--quad-order", quad_order, "Quadrature order (default 2N+12)");
  add_format(fh, fh_format, "json");
  fh->callback([&] {
    action = [&] {
      if (!(fh_sigma > 0.0)) throw InvalidArgument("--sigma must be positive");
      const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * fh_sigma);
      const auto density = [&](double x) {
        const double z = (x - fh_mu) / fh_sigma;
        return norm * std::exp(-0.5 * z * z);
      };
      const unsigned q = resolve_quad_order(quad_order, default_quad_order(fh_truncation));
      print_series(fourier_hermite_coeffs(density, fh_truncation, q), fh_format, out);
    };
  });

  double gc_mu = 0.0;
  double gc_sigma = 1.0;
  std::optional<double> gc_nu3;
  std::optional<double> gc_nu4;
  std::string gc_nu;
  std::string gc_moments_file;
  std::vector<double> gc_x;
  bool gc_coeffs = false;
  std::string gc_format;
  auto* gc = expand->add_subcommand("gram-charlier", "Gram-Charlier density from standardized moments");
  gc->add_option("--mu", gc_mu, "Mean")->capture_default_str();
  gc->add_option("--sigma", gc_sigma, "Standard deviation")->capture_default_str();
  gc->add_option("--nu3", gc_nu3, "Standardized third moment");
  gc->add_option("--nu4", gc_nu4, "Standardized fourth moment");
  gc->add_option("--nu", gc_nu, "nu_3, nu_4, ... as a comma list (overrides --nu3/--nu4)");
  gc->add_option("--moments", gc_moments_file, "File with mu, sigma, nu_3, ... one per line");
  gc->add_option("--x", gc_x, "Evaluation points")->delimiter(',');
  gc->add_flag("--coeffs", gc_coeffs, "Print the series coefficients instead of density values");
  add_format(gc, gc_format, "csv");
  gc->callback([&] {
    action = [&] {
      StandardizedMoments m;
      if (!gc_moments_file.empty()) {
        const std::string text = read_file(gc_moments_file);
        try {
          m = parse_moment_list(text);
        } catch (const ParseError& e) {
          throw InputFileError(gc_moments_file + ": " + e.what());
        }
      } else {
        m.mu = gc_mu;
        m.sigma = gc_sigma;
        if (!gc_nu.empty()) {
          m.nu = parse_double_list(gc_nu, "--nu");
        } else if (gc_nu3 || gc_nu4) {
          m.nu.push_back(gc_nu3.value_or(0.0));
          if (gc_nu4) m.nu.push_back(*gc_nu4);
        }
      }
      if (!(m.sigma > 0.0)) throw InvalidArgument("sigma must be positive");
      if (gc_coeffs) {
        print_series(gram_charlier_coeffs(m), gc_format, out);
        return;
      }
      if (gc_x.empty()) throw InvalidArgument("--x is required unless --coeffs is given");
      if (gc_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (double x : gc_x) {
          const auto d = gram_charlier_density(m, x);
          j.push_back({{"x", x}, {"density", d.value}, {"negative", d.negative}});
        }
        out << j.dump() << '\n';
        return;
      }
      const char sep = separator(gc_format);
      out << "x" << sep << "density" << sep << "negative\n";
      for (double x : gc_x) {
        const auto d = gram_charlier_density(m, x);
        out << fmt(x) << sep << fmt(d.value) << sep << (d.negative ? 1 : 0) << '\n';
      }
    };
  });

  std::string wce_poly;
  std::optional<unsigned> wce_truncation;
  std::string wce_format;
  auto* wce = expand->add_subcommand("wce", "Chaos coefficients b_n of a polynomial f(Y), Y ~ N(0, 1)");
  wce->add_option("--poly", wce_poly, "Coefficients of f, constant term first")->required();
  wce->add_option("--truncation", wce_truncation, "Highest degree N (default: degree of f)")
      ->check(CLI::Range(0u, 190u));
  wce->add_option("--quad-order", quad_order, "Quadrature order (default 2N+12)");
  add_format(wce, wce_format, "json");
  wce->callback([&] {
    action = [&] {
      const auto coeffs = parse_double_list(wce_poly, "--poly");
      const unsigned n = wce_truncation.value_or(static_cast<unsigned>(coeffs.size() - 1));
      const auto f = [&](double y) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
        return acc;
      };
      const unsigned q = resolve_quad_order(quad_order, default_quad_order(n));
      print_series(wce_coeffs_1d(f, n, q), wce_format, out);
    };
  });

  std::string dec_coeffs;
  std::string dec_sigma = "1";
  std::string dec_format;
  auto* dec = expand->add_subcommand("deconvolve", "Polynomial f with N(0, sigma^2) smoothing equal to g");
  dec->add_option("--coeffs", dec_coeffs, "Coefficients of g, constant term first")->required();
  dec->add_option("--sigma", dec_sigma, "Kernel standard deviation (exact rational)")->capture_default_str();
  add_format(dec, dec_format, "csv");
  dec->callback([&] {
    action = [&] {
      const ExactPolynomial g(parse_rational_list(dec_coeffs, "--coeffs"));
      const Rational sigma = parse_rational_list(dec_sigma, "--sigma").front();
      print_polynomial(gaussian_mixture_deconvolve(g, sigma), dec_format, out);
    };
  });

  unsigned fc_n = 0;
  double fc_kmax = 3.0;
  unsigned fc_samples = 61;
  auto* fc = expand->add_subcommand("fourier-check", "Max error of F[h_n] against (-i)^n h_n on [-kmax, kmax]");
  fc->add_option("--n", fc_n, "Hermite function index")->required()->check(CLI::Range(0u, 90u));
  fc->add_option("--kmax", fc_kmax, "Half-width of the frequency grid")->capture_default_str();
  fc->add_option("--samples", fc_samples, "Frequency grid points")->capture_default_str();
  fc->add_option("--quad-order", quad_order, "Quadrature order (default max(2n+10, 80))");
  fc->callback([&] {
    action = [&] {
      if (!(fc_kmax > 0.0)) throw InvalidArgument("--kmax must be positive");
      const auto ks = uniform_grid(-fc_kmax, fc_kmax, fc_samples);
      const unsigned q = resolve_quad_order(quad_order, std::max(2 * fc_n + 10, 80u));
      out << fmt(fourier_eigen_check(fc_n, ks, q)) << '\n';
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const InputFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hermite_kit::cli
