#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlab/cmpp.hpp"
#include "qlab/series.hpp"

namespace qlab {

// Parameter values are kept as strings: integers, colon-separated integer
// lists ("0:1:0") or names ("A", "principal").
using Params = std::map<std::string, std::string>;

int param_int(const Params& p, const std::string& key);
int param_int(const Params& p, const std::string& key, int fallback);
std::vector<int> param_list(const Params& p, const std::string& key);
std::string param_str(const Params& p, const std::string& key);
std::string param_str(const Params& p, const std::string& key, const std::string& fallback);
// "k=1,n=2,weights=0:0:1"; throws std::invalid_argument when malformed.
Params parse_params(const std::string& text);
std::string format_params(const Params& p);
std::string format_list(const std::vector<int>& v);

// A named library series, e.g. gen_fun(A,1,boundary=0:1).
struct SeriesRef {
    std::string name;
    Params params;
};

// Positional arguments are bound in the order listed by series_names().
SeriesRef parse_series_ref(const std::string& text);
std::string format_series_ref(const SeriesRef& r);
// name -> ordered parameter names
const std::vector<std::pair<std::string, std::vector<std::string>>>& series_names();
// Valid to q-order N; throws std::invalid_argument for unknown names or bad parameters.
QSeries evaluate_series(const SeriesRef& r, int N);

struct Monomial {
    int z = 0, w = 0, q = 0;
};

enum class Projection { none, z_zero, w_zero };

// coeff * prefactor * substitute(project(series), subst)
struct Term {
    int coeff = 1;
    Monomial prefactor;
    SeriesRef series;
    Subst subst;
    Projection projection = Projection::none;
};

enum class Status { proved, conjectural };
std::string status_name(Status s);

// lhs = rhs after multiplying both sides by the clearing monomial.
struct EquationSpec {
    std::string id;
    Params params;
    std::vector<Term> lhs, rhs;
    Monomial clearing;
    Status status = Status::proved;
    std::string description;
};

struct CatalogEntry {
    std::string id;
    std::vector<std::string> params;
    std::string description;
};

const std::vector<CatalogEntry>& catalog_ids();
// Throws std::out_of_range for an unknown id, std::invalid_argument when the
// parameters violate the entry's side conditions.
EquationSpec catalog(const std::string& id, const Params& params);

// Source order needed for a term so that it is exact to q^N after clearing.
int required_order(const Term& t, const Monomial& clearing, int N);

struct Residual {
    QSeries lhs, rhs, difference;
    std::optional<Mismatch> first_mismatch;
    bool zero() const { return !first_mismatch; }
};

Residual residual(const EquationSpec& spec, int N);

// Fixed-point solution of the four k = 2 equations for D^{(2)} with weights
// (2,0,0), (0,2,0), (1,1,0), (1,0,1), started from 1 and iterated in
// ascending q-degree. Returns the series in that order.
std::array<QSeries, 4> kis2_fixed_point(int N);
// First disagreement of the fixed point with the cmpp enumeration.
std::optional<Mismatch> kis2_uniqueness_check(int N);

}  // namespace qlab
