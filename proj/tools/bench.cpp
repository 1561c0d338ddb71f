#include "bench.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tra/coulomb.hpp"
#include "tra/kummer.hpp"
#include "tra/representation.hpp"

namespace tra::bench {

namespace {

constexpr double kStencilStep = 1e-3;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CLI::ValidationError("not a number: '" + s + "'");
  }
  return v;
}

Complex parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return parse_double(parts[0]);
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw CLI::ValidationError("expected re[,im], got '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw CLI::ValidationError("not an integer: '" + part + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Method> parse_methods(const std::string& s) {
  std::vector<Method> out;
  for (const auto& part : split(s, ',')) {
    if (part == "oracle") {
      out.push_back(Method::oracle);
    } else if (part == "rep18") {
      out.push_back(Method::rep18);
    } else if (part == "rep19") {
      out.push_back(Method::rep19);
    } else {
      throw CLI::ValidationError("unknown method '" + part + "' (oracle, rep18, rep19)");
    }
  }
  return out;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::rep18: return "rep18";
    case Method::rep19: return "rep19";
  }
  return "?";
}

void write_records(const RunConfig& config, std::ostream& out, const std::vector<Record>& records) {
  if (config.format == Format::json) {
    write_json(out, records);
  } else {
    write_csv(out, records);
  }
}

// Writes to `path` or, when it is empty, to `fallback`. Returns false on I/O failure.
bool emit(const RunConfig& config, const std::string& path, std::ostream& fallback,
          const std::vector<Record>& records) {
  if (path.empty()) {
    write_records(config, fallback, records);
    return static_cast<bool>(fallback);
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) return false;
  write_records(config, file, records);
  file.flush();
  return static_cast<bool>(file);
}

std::string path_for_n(const std::string& path, int n) {
  const std::filesystem::path p(path);
  std::filesystem::path renamed = p.parent_path() / (p.stem().string() + "_N" + std::to_string(n));
  renamed += p.extension();
  return renamed.string();
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.steps < 1) throw std::invalid_argument("--steps must be at least 1");
  if (!(config.x_min < config.x_max)) throw std::invalid_argument("--xmin must be below --xmax");
  if (config.n_terms.empty()) throw std::invalid_argument("--N needs at least one value");
  for (int n : config.n_terms) {
    if (n < 1) throw std::invalid_argument("--N values must be at least 1");
  }
  if (!(config.r_max > 0.0)) throw std::invalid_argument("--rmax must be positive");
}

std::vector<double> grid(double lo, double hi, int steps) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(steps));
  for (int i = 1; i <= steps; ++i) xs.push_back(lo + i * (hi - lo) / steps);
  return xs;
}

std::string format_double(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, result.ptr};
}

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  if (records.empty()) return;
  for (std::size_t i = 0; i < records.front().size(); ++i) {
    out << (i ? "," : "") << records.front()[i].first;
  }
  out << '\n';
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              out << (v ? "true" : "false");
            } else if constexpr (!std::is_same_v<T, std::monostate>) {
              out << v;
            }
          },
          rec[i].second);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<Record>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, cell] : rec) {
      std::visit(
          [&obj, &key](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[key] = nullptr;
            } else {
              obj[key] = v;
            }
          },
          cell);
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const HypergeometricParams p{config.a, config.b, config.x};
  const int n = config.n_terms.front();
  std::vector<Record> records;
  for (Method m : config.methods) {
    SeriesResult r;
    try {
      switch (m) {
        case Method::oracle:
          r = config.n_given ? hyp1f1_oracle(p, kOracleDefaultTol, n) : hyp1f1_oracle(p);
          break;
        case Method::rep18: r = eval_rep18(p, n); break;
        case Method::rep19: r = eval_rep19(p, n); break;
      }
    } catch (const std::exception& e) {
      err << "error: " << method_name(m) << ": " << e.what() << '\n';
      return 1;
    }
    if (m == Method::oracle && !r.converged) {
      err << "error: oracle: series did not converge within " << r.terms_used << " terms\n";
      return 1;
    }
    records.push_back({{"method", std::string(method_name(m))},
                       {"value", r.value.real()},
                       {"value_im", r.value.imag()},
                       {"terms_used", static_cast<long long>(r.terms_used)},
                       {"last_term", r.last_term_magnitude},
                       {"converged", r.converged}});
  }
  if (!emit(config, config.output_path, out, records)) {
    err << "error: cannot write " << config.output_path << '\n';
    return 1;
  }
  return 0;
}

std::vector<TableRow> table1_rows(const RunConfig& config) {
  const int n = config.n_terms.front();
  std::vector<TableRow> rows;
  for (double x : grid(config.x_min, config.x_max, config.steps)) {
    const HypergeometricParams p{config.a, config.b, x};
    const SeriesResult exact = hyp1f1_oracle(p);
    if (!exact.converged) throw std::runtime_error("oracle did not converge at x = " + format_double(x));
    TableRow row{};
    row.x = x;
    row.exact = exact.value.real();
    row.rep18 = eval_rep18(p, n).value.real();
    row.rep19 = eval_rep19(p, n).value.real();
    row.abs_err_18 = std::abs(row.rep18 - row.exact);
    row.abs_err_19 = std::abs(row.rep19 - row.exact);
    rows.push_back(row);
  }
  return rows;
}

int cmd_table1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<TableRow> rows;
  try {
    rows = table1_rows(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  std::vector<Record> records;
  for (const auto& r : rows) {
    records.push_back({{"x", r.x},
                       {"exact", r.exact},
                       {"rep18", r.rep18},
                       {"rep19", r.rep19},
                       {"abs_err_18", r.abs_err_18},
                       {"abs_err_19", r.abs_err_19}});
  }
  if (!emit(config, config.output_path, out, records)) {
    err << "error: cannot write " << config.output_path << '\n';
    return 1;
  }
  return 0;
}

int cmd_deviation(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.a.imag() != 0.0) {
    err << "error: deviation needs a real --a\n";
    return 1;
  }
  const double a = config.a.real();
  const bool many = config.n_terms.size() > 1;
  for (int n : config.n_terms) {
    std::vector<Record> records;
    for (double x : grid(config.x_min, config.x_max, config.steps)) {
      auto cell = [&](Representation method) -> Cell {
        try {
          return relative_deviation(a, config.b, x, n, method);
        } catch (const std::exception& e) {
          err << "warning: N=" << n << " x=" << format_double(x) << ": " << e.what() << '\n';
          return std::monostate{};
        }
      };
      records.push_back({{"x", x},
                         {"delta_rep18", cell(Representation::rep18)},
                         {"delta_rep19", cell(Representation::rep19)}});
    }
    const std::string path =
        (many && !config.output_path.empty()) ? path_for_n(config.output_path, n) : config.output_path;
    if (many && path.empty()) out << "# N=" << n << '\n';
    if (!emit(config, path, out, records)) {
      err << "error: cannot write " << path << '\n';
      return 1;
    }
  }
  return 0;
}

int cmd_coulomb(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Record> records;
  try {
    const CoulombParams p(config.charge, config.energy, config.l);
    for (double r : grid(0.0, config.r_max, config.steps)) {
      const int n = config.n_given ? config.n_terms.front() : default_coulomb_terms(p, r);
      const double tra = coulomb_wave_tra(p, r, n).psi;
      const double exact = coulomb_wave_exact(p, r).psi;
      const double diff = std::abs(tra - exact);
      const double rel = exact == 0.0 ? diff : diff / std::abs(exact);
      const double h = std::min(kStencilStep, 0.25 * r);
      records.push_back({{"r", r},
                         {"psi_tra", tra},
                         {"psi_exact", exact},
                         {"rel_diff", rel},
                         {"schrodinger_residual", schrodinger_residual(p, r, h)}});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (!emit(config, config.output_path, out, records)) {
    err << "error: cannot write " << config.output_path << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bessel-series representations of the confluent hypergeometric function"};
  app.require_subcommand(1);
  RunConfig config;
  std::string a_text;
  std::string n_text;
  std::string methods_text;
  std::string format_text = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--a", a_text, "parameter a as re[,im]");
    sub->add_option("--b", config.b, "parameter b (real)");
    sub->add_option("--N,--n", n_text, "truncation order, or a comma list for deviation");
    sub->add_option("--out", config.output_path, "output file (default stdout)");
    sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--xmin", config.x_min, "grid start (excluded)");
    sub->add_option("--xmax", config.x_max, "grid end (included)");
    sub->add_option("--steps", config.steps, "number of grid points");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate 1F1 at one point by each method");
  add_common(eval);
  eval->add_option("--x", config.x, "argument x");
  eval->add_option("--methods", methods_text, "comma list of oracle, rep18, rep19");

  CLI::App* table = app.add_subcommand("table1", "exact vs. both representations on a grid");
  add_common(table);
  add_grid(table);

  CLI::App* deviation = app.add_subcommand("deviation", "signed relative deviation curves");
  add_common(deviation);
  add_grid(deviation);

  CLI::App* coulomb = app.add_subcommand("coulomb", "Coulomb wavefunction, series vs. closed form");
  coulomb->add_option("--Z", config.charge, "charge");
  coulomb->add_option("--E", config.energy, "energy (> 0)");
  coulomb->add_option("--l", config.l, "angular momentum");
  coulomb->add_option("--rmax", config.r_max, "largest radius");
  coulomb->add_option("--steps", config.steps, "number of radii");
  coulomb->add_option("--N,--n", n_text, "series truncation (default max(40, 2kr+20))");
  coulomb->add_option("--out", config.output_path, "output file (default stdout)");
  coulomb->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!a_text.empty()) config.a = parse_complex(a_text);
    if (!n_text.empty()) {
      config.n_terms = parse_int_list(n_text);
      config.n_given = true;
    }
    if (!methods_text.empty()) config.methods = parse_methods(methods_text);
    config.format = format_text == "json" ? Format::json : Format::csv;
    if (deviation->parsed()) {
      config.command = Command::deviation;
      if (deviation->count("--steps") == 0) config.steps = 100;
    } else if (coulomb->parsed()) {
      config.command = Command::coulomb;
      if (coulomb->count("--steps") == 0) config.steps = 20;
    } else if (table->parsed()) {
      config.command = Command::table1;
    }
    validate(config);
    if (config.command != Command::deviation && config.n_terms.size() != 1) {
      throw CLI::ValidationError("--N takes a list only for deviation");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  switch (config.command) {
    case Command::eval: return cmd_eval(config, out, err);
    case Command::table1: return cmd_table1(config, out, err);
    case Command::deviation: return cmd_deviation(config, out, err);
    case Command::coulomb: return cmd_coulomb(config, out, err);
  }
  return 1;
}

}  // namespace tra::bench
