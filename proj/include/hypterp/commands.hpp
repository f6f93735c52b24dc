#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypterp/specfun.hpp"

namespace hypterp::cli {

// One table line at full precision; the CSV writer rounds to 4 decimals and
// recomputes abs_error from the rounded cells so the printed columns agree.
struct TableRow {
    double x{};
    double actual{};
    double approx{};
    double abs_error{};
    double bound{};
};

struct TableBlock {
    double a{};
    double b{};
    double c{};
    std::vector<TableRow> rows;
};

// Data behind `table <which>`, which in {1, 2, 3}.
std::vector<TableBlock> table_blocks(int which);

// Round-half-even to 4 decimals, the table output convention.
double round4(double v);

// CSV writers behind the subcommands; exposed so tests can run them in-process.

void write_table(int which, std::ostream& os);
void write_figure(const std::string& which, int grid, std::ostream& os);
void write_cf_compare(double a, double b, double c, int depth, int grid, std::ostream& os);

// Returns the process exit code: 0 clean, 10 anomaly in the conjectured range,
// 1 anomaly in an established range.
int write_scan(double a_min, double a_max, double a_step,
               double c_min, double c_max, double c_step, std::ostream& os);

void write_interp(const std::string& kind, const std::vector<double>& params, std::ostream& os);

double eval_value(double a, double b, double c, double x, const std::string& method,
                  const specfun::EvalOptions& opts);

std::vector<std::string> figure_kinds();

int run_cli(int argc, char** argv);

} // namespace hypterp::cli
