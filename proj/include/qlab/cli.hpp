#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlab/funceq.hpp"

namespace qlab::cli {

enum class Outcome { pass, fail, finding };

struct Report {
    std::string check;
    Params params;
    int order = 0;
    Outcome status = Outcome::pass;
    std::optional<Mismatch> first_mismatch;
    long elapsed_ms = 0;
    Status conjecture_status = Status::proved;
};

// Runs one catalog check; mismatches of conjectural entries are findings.
Report verify(const std::string& check, const Params& params, int order);

// Single-line JSON; coefficients as decimal strings.
std::string report_json(const Report& r);
Report parse_report_json(const std::string& text);

// "k=1..3,a=0..3". A value is an integer, an inclusive range lo..hi, a
// '|'-separated list of alternatives, or for key "weights" the form
// "level=lo..hi", which expands to every weight of length n+1 (n bound by
// another key) with level in the range.
std::vector<Params> expand_grid(const std::string& grid);

// Total order on parameter points: keys alphabetically, integer values numerically.
bool params_less(const Params& a, const Params& b);

// Evaluates the valid points of a grid on `jobs` threads and returns the
// reports sorted by params_less. Points rejected by the catalog are skipped.
std::vector<Report> sweep(const std::string& check, const std::string& grid, int order, int jobs);

// 0 all pass, 1 usage error, 2 a proved entry failed, 3 a finding.
int exit_code(const std::vector<Report>& reports);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlab::cli
