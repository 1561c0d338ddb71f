#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tra/scalar.hpp"

namespace tra::bench {

enum class Command { eval, table1, deviation, coulomb };
enum class Format { csv, json };
enum class Method { oracle, rep18, rep19 };

struct RunConfig {
  Command command = Command::eval;
  Complex a{2.5, 0.0};
  double b = 3.7;
  double x = 1.0;
  std::vector<int> n_terms{20};
  bool n_given = false;
  double x_min = 0.0;
  double x_max = 10.0;
  int steps = 10;
  std::vector<Method> methods{Method::oracle, Method::rep18, Method::rep19};
  double charge = 1.0;
  double energy = 0.5;
  int l = 0;
  double r_max = 10.0;
  std::string output_path;  // empty: stdout
  Format format = Format::csv;
};

/// Throws std::invalid_argument when a grid or truncation setting is unusable.
void validate(const RunConfig& config);

/// Grid points x_min + i (x_max - x_min)/steps for i = 1..steps.
std::vector<double> grid(double lo, double hi, int steps);

struct TableRow {
  double x;
  double exact;
  double rep18;
  double rep19;
  double abs_err_18;
  double abs_err_19;
};

std::vector<TableRow> table1_rows(const RunConfig& config);

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;
using Record = std::vector<std::pair<std::string, Cell>>;

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// One header row then one line per record; monostate cells are left blank.
void write_csv(std::ostream& out, const std::vector<Record>& records);
/// JSON array of objects with the same fields; monostate cells become null.
void write_json(std::ostream& out, const std::vector<Record>& records);

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table1(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_deviation(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_coulomb(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point. Exit codes: 0 ok, 1 domain/runtime error, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tra::bench
