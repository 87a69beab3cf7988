#include "qlab/funceq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qlab/hall_littlewood.hpp"
#include "qlab/macdonald.hpp"
#include "qlab/multisums.hpp"
#include "qlab/products.hpp"

namespace qlab {

// ---------------------------------------------------------------- parameters

namespace {

int to_int(const std::string& key, const std::string& v)
{
    std::size_t pos = 0;
    int x = 0;
    try {
        x = std::stoi(v, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != v.size()) throw std::invalid_argument("malformed params: " + key + "=" + v + " is not an integer");
    return x;
}

std::string trim(const std::string& s)
{
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// Splits at commas outside parentheses.
std::vector<std::string> split_top(const std::string& s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

}  // namespace

int param_int(const Params& p, const std::string& key)
{
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
    return to_int(key, it->second);
}

int param_int(const Params& p, const std::string& key, int fallback)
{
    return p.count(key) ? param_int(p, key) : fallback;
}

std::vector<int> param_list(const Params& p, const std::string& key)
{
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
    std::vector<int> out;
    if (it->second.empty()) return out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ':')) out.push_back(to_int(key, trim(item)));
    return out;
}

std::string param_str(const Params& p, const std::string& key)
{
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
    return it->second;
}

std::string param_str(const Params& p, const std::string& key, const std::string& fallback)
{
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

Params parse_params(const std::string& text)
{
    Params p;
    for (const auto& item : split_top(text)) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("malformed params: '" + item + "'");
        std::string key = trim(item.substr(0, eq));
        if (p.count(key)) throw std::invalid_argument("malformed params: duplicate '" + key + "'");
        p[key] = trim(item.substr(eq + 1));
    }
    return p;
}

std::string format_params(const Params& p)
{
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ",";
        s += k + "=" + v;
    }
    return s;
}

std::string format_list(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ":";
        s += std::to_string(v[i]);
    }
    return s;
}

// ---------------------------------------------------------------- series references

namespace {

Family family_param(const Params& p, const std::string& key = "family")
{
    std::string v = param_str(p, key);
    if (v.size() != 1) throw std::invalid_argument("family must be A, C or D");
    return family_from_tag(v[0]);
}

Partition partition_param(const Params& p, const std::string& key)
{
    Partition lam;
    for (int x : param_list(p, key))
        if (x != 0) lam.parts.push_back(x);
    if (!lam.valid()) throw std::invalid_argument("'" + key + "' is not a partition");
    return lam;
}

template <class E>
E pick(const std::string& v, const std::vector<std::pair<std::string, E>>& table, const std::string& what)
{
    for (const auto& [name, e] : table)
        if (name == v) return e;
    throw std::invalid_argument("unknown " + what + " '" + v + "'");
}

SpecKind kind_param(const Params& p)
{
    return pick<SpecKind>(param_str(p, "kind", "nonstandard"),
                          {{"nonstandard", SpecKind::nonstandard}, {"principal", SpecKind::principal}}, "kind");
}

RootType root_param(const Params& p)
{
    return pick<RootType>(param_str(p, "type"), {{"B", RootType::B}, {"D", RootType::D}}, "root type");
}

// (z^a q^c; q^m)_inf for a >= 1, c >= 1, as a truncated series in (z, q).
QSeries zpoch(int a, int c, int m, int N)
{
    QSeries s = QSeries::one(N);
    for (int e = c; e <= N; e += m) {
        QSeries f = QSeries::one() - QSeries::monomial(Coeff(1), a, 0, e);
        s = (s * f).truncated(N);
    }
    return s;
}

QSeries inv_zpoch(int a, int c, int m, int N)
{
    QSeries s = QSeries::one(N);
    for (int e = c; e <= N; e += m) {
        QSeries g(N, 0);
        for (int j = 0; j * e <= N; ++j) g.add_term(a * j, 0, j * e, Coeff(1));
        s = (s * g).truncated(N);
    }
    return s;
}

using Evaluator = std::function<QSeries(const Params&, int)>;

struct SeriesDef {
    std::string name;
    std::vector<std::string> params;
    Evaluator eval;
};

QSeries product_of(const ProductSpec& s, int N) { return quotient_product(s, N); }

const std::vector<SeriesDef>& series_defs()
{
    static const std::vector<SeriesDef> defs = {
        {"gen_fun", {"family", "n", "boundary"},
         [](const Params& p, int N) { return gen_fun(family_param(p), param_int(p, "n"), Boundary{param_list(p, "boundary")}, N); }},
        {"gen_fun_reference", {"family", "n", "boundary"},
         [](const Params& p, int N) {
             return gen_fun_reference(family_param(p), param_int(p, "n"), Boundary{param_list(p, "boundary")}, N);
         }},
        {"gordon_frequency", {"k", "a"},
         [](const Params& p, int N) { return gordon_frequency_series(param_int(p, "k"), param_int(p, "a"), N); }},
        {"char_product", {"family", "kind", "n", "weights"},
         [](const Params& p, int N) {
             return char_product(family_param(p), kind_param(p), param_int(p, "n"), param_list(p, "weights"), N);
         }},
        {"theta", {"a", "m"}, [](const Params& p, int N) { return theta_q(param_int(p, "a"), param_int(p, "m"), N); }},
        {"gordon", {"k", "a"},
         [](const Params& p, int N) { return product_of(gordon_spec(param_int(p, "k"), param_int(p, "a")), N); }},
        {"jms", {"n", "a"}, [](const Params& p, int N) { return product_of(jms_spec(param_int(p, "n"), param_int(p, "a")), N); }},
        {"c_level1", {"n", "a"},
         [](const Params& p, int N) { return product_of(c_level1_spec(param_int(p, "n"), param_int(p, "a")), N); }},
        {"dk1", {"n", "a"}, [](const Params& p, int N) { return product_of(dk1_spec(param_int(p, "n"), param_int(p, "a")), N); }},
        {"c_rank0", {"k"}, [](const Params& p, int N) { return product_of(c_rank0_spec(param_int(p, "k")), N); }},
        {"d_rank1", {"k"}, [](const Params& p, int N) { return product_of(d_rank1_spec(param_int(p, "k")), N); }},
        {"c_rank1", {"k0", "k1"},
         [](const Params& p, int N) { return product_of(c_rank1_spec(param_int(p, "k0"), param_int(p, "k1")), N); }},
        {"ag_type", {"kind", "k"},
         [](const Params& p, int N) {
             AGProduct kind = pick<AGProduct>(param_str(p, "kind"),
                                              {{"shun", AGProduct::shun},
                                               {"k_lambda0", AGProduct::k_lambda0},
                                               {"k_lambda1", AGProduct::k_lambda1},
                                               {"omega", AGProduct::omega}},
                                              "ag product");
             return product_of(ag_type_spec(kind, param_int(p, "k")), N);
         }},
        {"ag_general", {"k", "a"},
         [](const Params& p, int N) { return product_of(ag_general_spec(param_int(p, "k"), param_int(p, "a")), N); }},
        // (z^{k+1} q^{k+1}; q^{2k+2})_inf / (zq; q^2)_inf
        {"c_rank0_z", {"k"},
         [](const Params& p, int N) {
             int k = param_int(p, "k");
             if (k < 0) throw std::invalid_argument("c_rank0_z: k >= 0");
             return (zpoch(k + 1, k + 1, 2 * k + 2, N) * inv_zpoch(1, 1, 2, N)).truncated(N);
         }},
        // (z^{k+1} q^{2k+2}; q^{2k+2})_inf / (zq^2; q^2)_inf
        {"d_rank1_z", {"k"},
         [](const Params& p, int N) {
             int k = param_int(p, "k");
             if (k < 0) throw std::invalid_argument("d_rank1_z: k >= 0");
             return (zpoch(k + 1, 2 * k + 2, 2 * k + 2, N) * inv_zpoch(1, 2, 2, N)).truncated(N);
         }},
        {"f_sum", {"n", "a", "delta"},
         [](const Params& p, int N) { return f_sum(param_int(p, "n"), param_int(p, "a"), param_int(p, "delta"), N); }},
        {"ag_sum", {"k", "a"}, [](const Params& p, int N) { return ag_sum(param_int(p, "k"), param_int(p, "a"), N); }},
        {"shun_sum", {"k"}, [](const Params& p, int N) { return shun_sum(param_int(p, "k"), N); }},
        {"shun2_sum", {"k", "variant"},
         [](const Params& p, int N) {
             Shun2Variant v = pick<Shun2Variant>(param_str(p, "variant"),
                                                 {{"k_lambda0", Shun2Variant::k_lambda0},
                                                  {"k_lambda1", Shun2Variant::k_lambda1},
                                                  {"mixed", Shun2Variant::mixed}},
                                                 "shun2 variant");
             return shun2_sum(param_int(p, "k"), v, N);
         }},
        {"wz_sum", {"variant", "k"},
         [](const Params& p, int N) {
             WZVariant v = pick<WZVariant>(param_str(p, "variant"),
                                           {{"A", WZVariant::A},
                                            {"B", WZVariant::B},
                                            {"C", WZVariant::C},
                                            {"D", WZVariant::D},
                                            {"guess_B", WZVariant::guess_B},
                                            {"guess_Omega", WZVariant::guess_Omega}},
                                           "wz variant");
             return wz_sum(v, param_int(p, "k", 2), N);
         }},
        {"alt_form", {"form"},
         [](const Params& p, int N) {
             AltForm f = pick<AltForm>(param_str(p, "form"),
                                       {{"lambda0_lambda1", AltForm::lambda0_lambda1},
                                        {"lambda0_lambda2", AltForm::lambda0_lambda2}},
                                       "alt form");
             return alt_form_sum(f, N);
         }},
        {"s_series", {"k1", "k2", "l1", "l2"},
         [](const Params& p, int N) {
             return s_series(param_int(p, "k1"), param_int(p, "k2"), param_int(p, "l1"), param_int(p, "l2"), N);
         }},
        {"atomic_residual", {"relation", "k1", "k2", "l1", "l2"},
         [](const Params& p, int N) {
             std::array<int, 4> a{param_int(p, "k1"), param_int(p, "k2"), param_int(p, "l1"), param_int(p, "l2")};
             return atomic_residual(atomic_from_name(param_str(p, "relation")), a, N);
         }},
        {"hl_principal_finite", {"parts", "kvars", "m"},
         [](const Params& p, int N) {
             return hl_principal_finite(partition_param(p, "parts"), param_int(p, "kvars"), param_int(p, "m"), N);
         }},
        {"hl_ls_2r1s", {"r", "s", "kvars", "m"},
         [](const Params& p, int N) {
             return hl_ls_2r1s(param_int(p, "r"), param_int(p, "s"), param_int(p, "kvars"), param_int(p, "m"), N);
         }},
        {"hl_symmetrization", {"parts", "L", "m"},
         [](const Params& p, int N) {
             return hl_symmetrization(partition_param(p, "parts"), param_int(p, "L"), param_int(p, "m"), N);
         }},
        {"hl_inf_spec", {"parts", "m"},
         [](const Params& p, int N) { return hl_inf_spec(partition_param(p, "parts"), param_int(p, "m"), N); }},
        {"hl_even_sum", {"k", "m", "shift"},
         [](const Params& p, int N) {
             return hl_even_sum(param_int(p, "k"), param_int(p, "m"), param_int(p, "shift", 0), N);
         }},
        {"prop_gow_sum", {"r", "n", "delta"},
         [](const Params& p, int N) {
             return prop_gow_sum(param_int(p, "r"), param_int(p, "n"), param_int(p, "delta"), N);
         }},
        {"hl_chain_sum", {"k", "n"}, [](const Params& p, int N) { return hl_chain_sum(param_int(p, "k"), param_int(p, "n"), N); }},
        {"hl_weighted_chain", {"variant", "param"},
         [](const Params& p, int N) {
             HLVariant v = pick<HLVariant>(param_str(p, "variant"), {{"v1", HLVariant::v1}, {"v2", HLVariant::v2}}, "hl variant");
             return hl_weighted_chain(v, param_int(p, "param"), N);
         }},
        {"pi_product", {"type", "exps", "base", "sigma", "tau"},
         [](const Params& p, int N) {
             return pi_product(root_param(p), param_list(p, "exps"), param_int(p, "base"), param_int(p, "sigma", 1),
                               param_int(p, "tau", 1), N);
         }},
        {"macdonald_sum", {"type", "exps", "base", "sigma", "tau"},
         [](const Params& p, int N) {
             return macdonald_sum(root_param(p), param_list(p, "exps"), param_int(p, "base"), param_int(p, "sigma", 1),
                                  param_int(p, "tau", 1), N);
         }},
        {"specialized_character_sum", {"family", "n", "two_k", "two_lambda"},
         [](const Params& p, int N) {
             HalfWeight hw{param_int(p, "two_k"), param_list(p, "two_lambda")};
             return specialized_character_sum(family_param(p), param_int(p, "n"), hw, N);
         }},
    };
    return defs;
}

const SeriesDef& find_def(const std::string& name)
{
    for (const auto& d : series_defs())
        if (d.name == name) return d;
    throw std::invalid_argument("unknown series '" + name + "'");
}

}  // namespace

const std::vector<std::pair<std::string, std::vector<std::string>>>& series_names()
{
    static const auto names = [] {
        std::vector<std::pair<std::string, std::vector<std::string>>> v;
        for (const auto& d : series_defs()) v.emplace_back(d.name, d.params);
        return v;
    }();
    return names;
}

SeriesRef parse_series_ref(const std::string& text)
{
    std::string t = trim(text);
    auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')') throw std::invalid_argument("malformed series '" + text + "'");
    SeriesRef r;
    r.name = trim(t.substr(0, open));
    const SeriesDef& def = find_def(r.name);
    std::size_t pos = 0;
    bool named = false;
    for (const auto& arg : split_top(t.substr(open + 1, t.size() - open - 2))) {
        auto eq = arg.find('=');
        std::string key, value;
        if (eq == std::string::npos) {
            if (named) throw std::invalid_argument("malformed series: positional argument after key=value");
            if (pos >= def.params.size()) throw std::invalid_argument("malformed series: too many arguments");
            key = def.params[pos++];
            value = arg;
        } else {
            named = true;
            key = trim(arg.substr(0, eq));
            value = trim(arg.substr(eq + 1));
            if (std::find(def.params.begin(), def.params.end(), key) == def.params.end())
                throw std::invalid_argument("series '" + r.name + "' has no parameter '" + key + "'");
        }
        if (!value.empty() && value.front() == '(' && value.back() == ')') {
            value = value.substr(1, value.size() - 2);
            std::replace(value.begin(), value.end(), ',', ':');
        }
        if (r.params.count(key)) throw std::invalid_argument("malformed series: duplicate '" + key + "'");
        r.params[key] = value;
    }
    return r;
}

std::string format_series_ref(const SeriesRef& r)
{
    std::string s = r.name + "(";
    bool first = true;
    for (const auto& key : find_def(r.name).params) {
        auto it = r.params.find(key);
        if (it == r.params.end()) continue;
        if (!first) s += ",";
        s += key + "=" + it->second;
        first = false;
    }
    return s + ")";
}

QSeries evaluate_series(const SeriesRef& r, int N)
{
    const SeriesDef& def = find_def(r.name);
    for (const auto& [k, v] : r.params)
        if (std::find(def.params.begin(), def.params.end(), k) == def.params.end())
            throw std::invalid_argument("series '" + r.name + "' has no parameter '" + k + "'");
    return def.eval(r.params, N);
}

std::string status_name(Status s) { return s == Status::proved ? "proved" : "conjectural"; }

// ---------------------------------------------------------------- catalog

namespace {

void require(bool ok, const std::string& msg)
{
    if (!ok) throw std::invalid_argument(msg);
}

SeriesRef ref(const std::string& name, Params p) { return SeriesRef{name, std::move(p)}; }

SeriesRef gf(Family f, int n, const std::vector<int>& w)
{
    return ref("gen_fun", {{"family", std::string(1, family_tag(f))}, {"n", std::to_string(n)}, {"boundary", format_list(w)}});
}

SeriesRef cp(Family f, int n, const std::vector<int>& w)
{
    return ref("char_product", {{"family", std::string(1, family_tag(f))},
                                {"kind", "nonstandard"},
                                {"n", std::to_string(n)},
                                {"weights", format_list(w)}});
}

SeriesRef named(const std::string& name, std::initializer_list<std::pair<const char*, int>> args)
{
    Params p;
    for (const auto& [k, v] : args) p[k] = std::to_string(v);
    return ref(name, p);
}

Term term(SeriesRef s, Monomial m = {}, Subst sub = {}, int coeff = 1)
{
    Term t;
    t.coeff = coeff;
    t.prefactor = m;
    t.series = std::move(s);
    t.subst = sub;
    return t;
}

Subst zq(int c) { return Subst::z_shift(c); }
Subst z_one() { return Subst::z_to_one(); }

// Weight of rank n (length n + 1) with the given (index, multiplicity) pairs added.
std::vector<int> weight(int n, std::initializer_list<std::pair<int, int>> parts)
{
    std::vector<int> w(n + 1, 0);
    for (const auto& [i, m] : parts) {
        if (i < 0 || i > n) throw std::invalid_argument("weight index out of range");
        w[i] += m;
    }
    return w;
}

std::vector<int> unit(int n, int a) { return weight(n, {{a, 1}}); }

int level_of(const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0); }

std::vector<int> weights_param(const Params& p, int n)
{
    auto w = param_list(p, "weights");
    require(static_cast<int>(w.size()) == n + 1, "weights must have n+1 entries");
    for (int x : w) require(x >= 0, "weights must be >= 0");
    return w;
}

EquationSpec make(const std::string& id, const Params& params, Status st, std::string desc)
{
    EquationSpec e;
    e.id = id;
    e.params = params;
    e.status = st;
    e.description = std::move(desc);
    return e;
}

Status proved_if(bool b) { return b ? Status::proved : Status::conjectural; }

using Builder = std::function<EquationSpec(const std::string&, const Params&)>;

struct Entry {
    CatalogEntry info;
    Builder build;
};

// Level-two D^{(2)} series with weight (a, b, c).
SeriesRef d2(int a, int b, int c) { return gf(Family::D, 2, {a, b, c}); }

EquationSpec rogers_selberg(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a");
    require(k >= 1 && a >= 0 && a <= k, "rogers-selberg: need k >= 1, 0 <= a <= k");
    auto e = make(id, p, Status::proved, "A(k-a,a)(z) - A(k-a+1,a-1)(z) = (zq)^a A(a,k-a)(zq)");
    e.lhs.push_back(term(gf(Family::A, 1, {k - a, a})));
    if (a >= 1) e.lhs.push_back(term(gf(Family::A, 1, {k - a + 1, a - 1}), {}, {}, -1));
    e.rhs.push_back(term(gf(Family::A, 1, {a, k - a}), {a, 0, a}, zq(1)));
    return e;
}

EquationSpec mr_system(const std::string& id, const Params& p)
{
    int n = param_int(p, "n"), a = param_int(p, "a"), br = param_int(p, "branch");
    require(n >= 1, "mr-system: need n >= 1");
    auto U = [&](int b) { return gf(Family::A, n, unit(n, b)); };
    auto e = make(id, p, Status::proved, "level-one A^{(n)} system");
    if (br == 1) {
        require(a >= 0 && 2 * a <= n, "mr-system branch 1: need 0 <= a <= n/2");
        e.lhs.push_back(term(U(a)));
        e.lhs.push_back(term(U(n - a), {}, zq(1), -1));
        for (int i = 1; i <= a; ++i) {
            e.rhs.push_back(term(U(a - i + 1), {1, 0, 2 * i - 1}, zq(2 * i)));
            e.rhs.push_back(term(U(n - a + i), {1, 0, 2 * i}, zq(2 * i + 1)));
        }
    } else if (br == 2) {
        require(a >= 0 && 2 * a <= n - 1, "mr-system branch 2: need 0 <= a <= (n-1)/2");
        e.lhs.push_back(term(U(n - a)));
        e.lhs.push_back(term(U(a + 1), {}, zq(1), -1));
        for (int i = 1; i <= a + 1; ++i) e.rhs.push_back(term(U(n - a + i - 1), {1, 0, 2 * i - 1}, zq(2 * i)));
        for (int i = 1; i <= a; ++i) e.rhs.push_back(term(U(a - i + 1), {1, 0, 2 * i}, zq(2 * i + 1)));
    } else {
        throw std::invalid_argument("mr-system: branch must be 1 or 2");
    }
    return e;
}

EquationSpec fun(const std::string& id, const Params& p)
{
    int n = param_int(p, "n"), k = param_int(p, "k"), a = param_int(p, "a");
    require(n >= 1 && k >= 0 && a >= 0 && a <= k, "fun: need n >= 1, 0 <= a <= k");
    auto e = make(id, p, Status::proved, "A_{(k-a)L0+aLn}(z) = sum_i (zq)^i A_{iL0+(a-i)L1+(k-a)Ln}(zq)");
    e.lhs.push_back(term(gf(Family::A, n, weight(n, {{0, k - a}, {n, a}}))));
    for (int i = 0; i <= a; ++i)
        e.rhs.push_back(term(gf(Family::A, n, weight(n, {{0, i}, {1, a - i}, {n, k - a}})), {i, 0, i}, zq(1)));
    return e;
}

EquationSpec fun2(const std::string& id, const Params& p, bool simplified)
{
    int n = param_int(p, "n"), k = param_int(p, "k");
    require(n >= 1 && k >= 1, "fun2: need n >= 1, k >= 1");
    auto e = make(id, p, Status::proved, simplified ? "simplified second functional equation" : "second functional equation");
    e.lhs.push_back(term(gf(Family::A, n, weight(n, {{0, k - 1}, {1, 1}}))));
    e.rhs.push_back(term(gf(Family::A, n, weight(n, {{n - 1, 1}, {n, k - 1}})), {}, zq(1)));
    SeriesRef top = gf(Family::A, n, weight(n, {{0, k}}));
    e.rhs.push_back(term(top, {k, 0, 2 * k}, zq(2)));
    if (simplified) {
        e.rhs.push_back(term(top, {k + 1, 0, 2 * k + 1}, zq(2), -1));
        e.rhs.push_back(term(gf(Family::A, n, weight(n, {{n, k}})), {1, 0, 1}, zq(1)));
    } else {
        for (int i = 0; i <= k - 1; ++i)
            e.rhs.push_back(term(gf(Family::A, n, weight(n, {{0, i}, {1, k - i}})), {1 + i, 0, 1 + 2 * i}, zq(2)));
    }
    return e;
}

EquationSpec fun_cd1(const std::string& id, const Params& p)
{
    int n = param_int(p, "n"), k = param_int(p, "k"), a = param_int(p, "a");
    require(n >= 1 && k >= 0 && a >= 0 && a <= k, "fun-cd1: need n >= 1, 0 <= a <= k");
    auto e = make(id, p, Status::proved, "C^{(n)} in terms of D^{(n+1)} at zq");
    e.lhs.push_back(term(gf(Family::C, n, weight(n, {{0, a}, {n, k - a}}))));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= k - a; ++j)
            e.rhs.push_back(term(gf(Family::D, n + 1, weight(n + 1, {{0, i}, {1, a - i}, {n, k - a - j}, {n + 1, j}})),
                                 {i + j, 0, i + j}, zq(1)));
    return e;
}

EquationSpec fun_cd2(const std::string& id, const Params& p)
{
    int n = param_int(p, "n"), k = param_int(p, "k"), a = param_int(p, "a");
    require(n >= 0 && k >= 0 && a >= 0 && a <= k, "fun-cd2: need n >= 0, 0 <= a <= k");
    auto e = make(id, p, Status::proved, "D^{(n+1)}_{aL0+(k-a)L_{n+1}}(z) = C^{(n)}_{aL0+(k-a)Ln}(zq)");
    e.lhs.push_back(term(gf(Family::D, n + 1, weight(n + 1, {{0, a}, {n + 1, k - a}}))));
    e.rhs.push_back(term(gf(Family::C, n, weight(n, {{0, a}, {n, k - a}})), {}, zq(1)));
    return e;
}

EquationSpec cdn2(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a");
    require(k >= 0 && a >= 0 && a <= k, "cdn2: need 0 <= a <= k");
    auto e = make(id, p, Status::proved, "C^{(1)}_{(a,k-a)}(zq) = D^{(2)}_{(a,0,k-a)}(z)");
    e.lhs.push_back(term(gf(Family::C, 1, {a, k - a}), {}, zq(1)));
    e.rhs.push_back(term(d2(a, 0, k - a)));
    return e;
}

EquationSpec eq_nis2(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a"), b = param_int(p, "b");
    require(k >= 1 && a >= 0 && b >= 0 && a + b <= k - 1, "eq-nis2: need a, b >= 0 and a+b <= k-1");
    auto e = make(id, p, Status::proved, "D^{(2)} difference equation");
    e.lhs.push_back(term(d2(a, k - a - b, b)));
    e.lhs.push_back(term(d2(a + 1, k - a - b - 1, b), {}, {}, -1));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= k - a; ++j) {
            int x = k + i - a + std::min(0, j - b);
            e.rhs.push_back(term(d2(i, k - i - j, j), {x, 0, x + i + j}, zq(2)));
        }
    return e;
}

EquationSpec nis2_difference(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a"), b = param_int(p, "b");
    require(k >= 2 && a >= 0 && b >= 0 && a + b <= k - 2, "nis2-difference: need a, b >= 0 and a+b <= k-2");
    auto e = make(id, p, Status::proved, "second difference of the D^{(2)} equation");
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            e.lhs.push_back(term(d2(i + a, k - i - j - a - b, j + b), {}, {}, ((i + j) % 2 == 0) ? 1 : -1));
    int x = k - a - b - 1;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            SeriesRef s = d2(i, k - i - j, j);
            e.rhs.push_back(term(s, {x + i + j, 0, x + 2 * (i + j)}, zq(2), -1));
            e.rhs.push_back(term(s, {x + 1 + i + j, 0, x + 1 + 2 * (i + j)}, zq(2), 1));
        }
    return e;
}

EquationSpec fun_d2(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a");
    require(k >= 0 && a >= 0 && a <= k, "fun-d2: need 0 <= a <= k");
    auto e = make(id, p, Status::proved, "D^{(2)}_{(a,0,k-a)}(z) = sum (zq^2)^{i+j} D^{(2)}_{(i,k-i-j,j)}(zq^2)");
    e.lhs.push_back(term(d2(a, 0, k - a)));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= k - a; ++j) e.rhs.push_back(term(d2(i, k - i - j, j), {i + j, 0, 2 * (i + j)}, zq(2)));
    return e;
}

EquationSpec nis2_fun_d2_sum(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a");
    require(k >= 1 && a >= 0 && a <= k - 1, "nis2-fun-d2-sum: need 0 <= a <= k-1");
    auto e = make(id, p, Status::proved, "D^{(2)}_{(a,1,k-a-1)} from the difference and fun-d2 equations");
    e.lhs.push_back(term(d2(a, 1, k - a - 1)));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= k - a - 1; ++j) {
            SeriesRef s = d2(i, k - i - j, j);
            e.rhs.push_back(term(s, {i + j, 0, 2 * (i + j)}, zq(2)));
            e.rhs.push_back(term(s, {i + j + 1, 0, 2 * (i + j) + 1}, zq(2)));
        }
    for (int i = 0; i <= a; ++i) e.rhs.push_back(term(d2(i, a - i, k - a), {k + i - a, 0, 2 * (k + i - a)}, zq(2)));
    for (int i = 0; i <= k - a - 1; ++i)
        e.rhs.push_back(term(d2(a + 1, k - a - i - 1, i), {i + a + 1, 0, 2 * (i + a + 1)}, zq(2)));
    return e;
}

EquationSpec kis2_system(const std::string& id, const Params& p)
{
    int eq = param_int(p, "eq");
    SeriesRef A = d2(2, 0, 0), B = d2(0, 2, 0), C = d2(1, 1, 0), D = d2(1, 0, 1);
    auto e = make(id, p, Status::proved, "level-two D^{(2)} system");
    switch (eq) {
    case 1:
        e.lhs = {term(A)};
        e.rhs = {term(B, {}, zq(2)), term(C, {1, 0, 2}, zq(2)), term(A, {2, 0, 4}, zq(2))};
        break;
    case 2:
        e.lhs = {term(D)};
        e.rhs = {term(B, {}, zq(2)), term(C, {1, 0, 2}, zq(2), 2), term(D, {2, 0, 4}, zq(2))};
        break;
    case 3:
        e.lhs = {term(B), term(C, {}, {}, -1)};
        e.rhs = {term(B, {2, 0, 2}, zq(2)), term(C, {2, 0, 3}, zq(2)), term(A, {2, 0, 4}, zq(2))};
        break;
    case 4:
        e.lhs = {term(C), term(D, {}, {}, -1)};
        e.rhs = {term(B, {1, 0, 1}, zq(2)), term(C, {2, 0, 3}, zq(2)), term(A, {2, 0, 4}, zq(2))};
        break;
    default:
        throw std::invalid_argument("kis2-system: eq must be 1..4");
    }
    return e;
}

EquationSpec automorphism(const std::string& id, const Params& p)
{
    Family f = family_param(p);
    int n = param_int(p, "n");
    require(f != Family::A, "automorphism: family must be C or D");
    check_family_rank(f, n);
    auto w = weights_param(p, n);
    auto r = w;
    std::reverse(r.begin(), r.end());
    auto e = make(id, p, Status::proved, "reversal of the boundary weights");
    e.lhs.push_back(term(gf(f, n, w)));
    e.rhs.push_back(term(gf(f, n, r)));
    return e;
}

EquationSpec b_b(const std::string& id, const Params& p)
{
    int k0 = param_int(p, "k0"), k1 = param_int(p, "k1");
    require(k0 >= 0 && k1 >= 0, "b-b: need k0, k1 >= 0");
    auto e = make(id, p, Status::proved, "A^{(1)}_{(k0,k1)} = Gordon frequency series B_{k0+k1,k1}");
    e.lhs.push_back(term(gf(Family::A, 1, {k0, k1})));
    e.rhs.push_back(term(named("gordon_frequency", {{"k", k0 + k1}, {"a", k1}})));
    return e;
}

SeriesRef wz(const std::string& v) { return ref("wz_sum", {{"variant", v}, {"k", "2"}}); }

EquationSpec wz_functional(const std::string& id, const Params& p)
{
    int eq = param_int(p, "eq");
    SeriesRef A = wz("A"), B = wz("B"), C = wz("C"), D = wz("D");
    Subst s = Subst::zw_shift(2, 2);
    auto e = make(id, p, Status::proved, "w-deformed level-two system");
    switch (eq) {
    case 1:
        e.lhs = {term(A)};
        e.rhs = {term(B, {}, s), term(C, {1, 0, 2}, s), term(A, {2, 0, 4}, s)};
        break;
    case 2:
        e.lhs = {term(D), term(A, {2, 0, 4}, s)};
        e.rhs = {term(A), term(C, {0, 1, 2}, s), term(D, {2, 0, 4}, s)};
        break;
    case 3:
        // B - (1 + w/z) C + (w/z) D + wq B' - z^2 q^2 B' = 0
        e.lhs = {term(B), term(D, {-1, 1, 0}), term(B, {0, 1, 1}, s)};
        e.rhs = {term(C), term(C, {-1, 1, 0}), term(B, {2, 0, 2}, s)};
        e.clearing = {1, 0, 0};
        break;
    case 4:
        e.lhs = {term(C)};
        e.rhs = {term(D), term(B, {1, 0, 1}, s), term(C, {2, 0, 3}, s), term(A, {1, 1, 4}, s)};
        break;
    default:
        throw std::invalid_argument("wz-functional: eq must be 1..4");
    }
    return e;
}

EquationSpec wz_guess_reduction(const std::string& id, const Params& p)
{
    std::string v = param_str(p, "variant");
    int k = param_int(p, "k");
    std::string side = param_str(p, "side");
    require(v == "B" || v == "Omega", "wz-guess-reduction: variant must be B or Omega");
    require(k >= 1, "wz-guess-reduction: need k >= 1");
    require(side == "w0" || side == "z0", "wz-guess-reduction: side must be w0 or z0");
    int a = v == "B" ? k : k - 1;
    auto e = make(id, p, Status::proved, "specialisations of the level-k two-variable guess");
    Term t = term(ref("wz_sum", {{"variant", v == "B" ? "guess_B" : "guess_Omega"}, {"k", std::to_string(k)}}));
    t.projection = side == "w0" ? Projection::w_zero : Projection::z_zero;
    e.lhs.push_back(t);
    Subst sub;
    if (side == "z0") sub = Subst{0, 1, 0, 0, 1, 0, 2};
    e.rhs.push_back(term(named("ag_sum", {{"k", k}, {"a", a}}), {}, sub));
    return e;
}

EquationSpec level_rank_n1(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), i = param_int(p, "i");
    require(k >= 1 && i >= 0 && i <= k, "level-rank-n1: need k >= 1, 0 <= i <= k");
    auto e = make(id, p, Status::proved, "rank one against level one at rank k");
    e.lhs.push_back(term(cp(Family::A, 1, {k - i, i})));
    int b = (i % 2 == 0) ? i / 2 : k - (i - 1) / 2;
    e.rhs.push_back(term(cp(Family::A, k, unit(k, b))));
    return e;
}

EquationSpec level_rank_n2(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), i = param_int(p, "i"), j = param_int(p, "j");
    require(k >= 1 && 0 <= i && i <= j && j <= k, "level-rank-n2: need 0 <= i <= j <= k, k >= 1");
    auto e = make(id, p, Status::proved, "rank two against level two at rank k");
    e.lhs.push_back(term(cp(Family::A, 2, {k - j, j - i, i})));
    std::vector<int> w;
    if ((i + j) % 2 == 0) w = weight(k, {{(j - i) / 2, 1}, {(i + j) / 2, 1}});
    else w = weight(k, {{k - (i + j - 1) / 2, 1}, {k - (j - i - 1) / 2, 1}});
    e.rhs.push_back(term(cp(Family::A, k, w)));
    return e;
}

// (level - d) L0 + 2 L1 (+ L2 for d = 3) at the given rank; -L0 + 2 L1 reads as L1.
std::vector<int> pattern_weight(int pattern, int level, int rank)
{
    if (pattern == 1) return weight(rank, {{0, level}});
    int d = pattern;
    std::vector<int> w = weight(rank, {{1, 2}});
    if (pattern == 3) w[2] += 1;
    if (level - d >= 0) w[0] += level - d;
    else if (level - d == -1) w[1] -= 1;
    else throw std::invalid_argument("level-rank-pattern: level too small");
    return w;
}

EquationSpec level_rank_pattern(const std::string& id, const Params& p)
{
    int pat = param_int(p, "pattern"), k = param_int(p, "k"), n = param_int(p, "n");
    require(pat >= 1 && pat <= 3, "level-rank-pattern: pattern must be 1..3");
    int lo = pat == 3 ? 2 : 1;
    require(k >= lo && n >= lo, "level-rank-pattern: k, n too small for this pattern");
    auto e = make(id, p, Status::proved, "general level-rank pattern");
    e.lhs.push_back(term(cp(Family::A, n, pattern_weight(pat, k, n))));
    e.rhs.push_back(term(cp(Family::A, k, pattern_weight(pat, n, k))));
    return e;
}

EquationSpec level_one(const std::string& id, const Params& p, Family f, const std::string& product)
{
    int n = param_int(p, "n"), a = param_int(p, "a");
    check_family_rank(f, n);
    require(n >= 1 || f == Family::C, "level-one: rank too small");
    require(a >= 0 && a <= n, "level-one: need 0 <= a <= n");
    auto e = make(id, p, Status::proved, "level-one product identity at z = 1");
    e.lhs.push_back(term(gf(f, n, unit(n, a)), {}, z_one()));
    e.rhs.push_back(term(named(product, {{"n", n}, {"a", a}})));
    return e;
}

EquationSpec gordon(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a");
    require(k >= 0 && a >= 0 && a <= k, "gordon: need 0 <= a <= k");
    auto e = make(id, p, Status::proved, "Gordon's theorem at z = 1");
    e.lhs.push_back(term(gf(Family::A, 1, {k - a, a}), {}, z_one()));
    e.rhs.push_back(term(named("gordon", {{"k", k}, {"a", a}})));
    return e;
}

EquationSpec andrews_gordon(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), a = param_int(p, "a");
    require(k >= 0 && a >= 0 && a <= k, "andrews-gordon: need 0 <= a <= k");
    auto e = make(id, p, Status::proved, "A^{(1)}_{(k-a,a)}(z) as the Andrews-Gordon sum");
    e.lhs.push_back(term(gf(Family::A, 1, {k - a, a})));
    e.rhs.push_back(term(named("ag_sum", {{"k", k}, {"a", a}})));
    return e;
}

EquationSpec f_bridge(const std::string& id, const Params& p, Family f)
{
    int n = param_int(p, "n"), a = param_int(p, "a");
    check_family_rank(f, n);
    require(a >= 0 && a <= n, "F-bridge: need 0 <= a <= n");
    auto e = make(id, p, Status::proved, "level-one series as an F-sum");
    e.lhs.push_back(term(gf(f, n, unit(n, a))));
    int rank = n, idx = 0, delta = 0;
    bool low = 2 * a <= n;
    if (f == Family::A) {
        idx = low ? 2 * a : 2 * n - 2 * a + 1;
        delta = 1;
    } else if (f == Family::C) {
        rank = n + 1;
        idx = low ? 2 * a + 1 : 2 * n - 2 * a + 1;
    } else {
        idx = low ? 2 * a : 2 * n - 2 * a;
    }
    e.rhs.push_back(term(named("f_sum", {{"n", rank}, {"a", idx}, {"delta", delta}})));
    return e;
}

SeriesRef even_sum(int k, int m, int shift) { return named("hl_even_sum", {{"k", k}, {"m", m}, {"shift", shift}}); }

EquationSpec eq_ann(const std::string& id, const Params& p)
{
    int n = param_int(p, "n"), w = param_int(p, "weight");
    require(n >= 1 && (w == 0 || w == n), "eq-ann: need n >= 1 and weight in {0, n}");
    auto e = make(id, p, Status::proved, "level-one A^{(n)} at L0 or Ln as a two-column HL sum");
    e.lhs.push_back(term(gf(Family::A, n, unit(n, w))));
    e.rhs.push_back(term(even_sum(1, 2 * n - 1, w == n ? 1 : 2)));
    return e;
}

EquationSpec con_product(const std::string& id, const Params& p, Family f)
{
    int n = param_int(p, "n");
    check_family_rank(f, n);
    auto w = weights_param(p, n);
    int k = level_of(w);
    Status st = Status::conjectural;
    SeriesRef rhs;
    if (f == Family::A) {
        st = proved_if(n == 1 || k <= 1);
        rhs = cp(f, n, w);
    } else if (f == Family::C) {
        bool k_lambda0 = w[0] == k;
        st = proved_if(n <= 1 || k <= 1 || k_lambda0);
        rhs = n == 0 ? named("c_rank0", {{"k", k}}) : cp(f, n, w);
    } else {
        st = proved_if(n == 1 || k <= 1);
        rhs = cp(f, n, w);
    }
    auto e = make(id, p, st, "generating function at z = 1 against the character product");
    e.lhs.push_back(term(gf(f, n, w), {}, z_one()));
    e.rhs.push_back(term(rhs));
    return e;
}

EquationSpec con_a2n2_qseries(const std::string& id, const Params& p)
{
    int n = param_int(p, "n"), k = param_int(p, "k"), w = param_int(p, "weight");
    require(n >= 1 && k >= 0 && (w == 0 || w == n), "con-a2n2-qseries: need n >= 1, k >= 0, weight in {0, n}");
    auto e = make(id, p, proved_if(k <= 1), "A^{(n)} at kL0 or kLn as an even HL sum in base q^{2n-1}");
    e.lhs.push_back(term(gf(Family::A, n, weight(n, {{w, k}}))));
    e.rhs.push_back(term(even_sum(k, 2 * n - 1, w == n ? 1 : 2)));
    return e;
}

EquationSpec con_cd_qseries(const std::string& id, const Params& p)
{
    Family f = family_param(p);
    int n = param_int(p, "n"), k = param_int(p, "k");
    require(f != Family::A, "con-cn1dn2-qseries: family must be C or D");
    check_family_rank(f, n);
    require(k >= 0, "con-cn1dn2-qseries: need k >= 0");
    bool base_case = (f == Family::C && n == 0) || (f == Family::D && n == 1);
    auto e = make(id, p, proved_if(base_case || k <= 1), "kL0 series as an even HL sum");
    e.lhs.push_back(term(gf(f, n, weight(n, {{0, k}}))));
    if (f == Family::C) e.rhs.push_back(term(n == 0 ? named("c_rank0_z", {{"k", k}}) : even_sum(k, 2 * n, 1)));
    else e.rhs.push_back(term(n == 1 ? named("d_rank1_z", {{"k", k}}) : even_sum(k, 2 * n - 2, 2)));
    return e;
}

EquationSpec alt_form(const std::string& id, const Params& p)
{
    Family f = family_param(p);
    int n = param_int(p, "n"), k = param_int(p, "k");
    int w = param_int(p, "weight", 0);
    require(k >= 0, "alt-form: need k >= 0");
    SeriesRef chain;
    int shift = 0;
    if (f == Family::A) {
        require(n >= 1 && (w == 0 || w == n), "alt-form: A needs n >= 1 and weight in {0, n}");
        chain = named("hl_chain_sum", {{"k", k}, {"n", 2 * n - 1}});
        shift = w == n ? 0 : 1;
    } else if (f == Family::C) {
        require(n >= 1 && w == 0, "alt-form: C needs n >= 1 and weight 0");
        chain = named("hl_chain_sum", {{"k", k}, {"n", 2 * n}});
    } else {
        require(n >= 2 && w == 0, "alt-form: D needs n >= 2 and weight 0");
        chain = named("hl_chain_sum", {{"k", k}, {"n", 2 * n - 2}});
        shift = 1;
    }
    auto e = make(id, p, proved_if(k <= 1), "kL0 or kLn series as an HL chain sum");
    e.lhs.push_back(term(gf(f, n, weight(n, {{w, k}}))));
    e.rhs.push_back(term(chain, {}, zq(shift)));
    return e;
}

EquationSpec hl_lemma(const std::string& id, const Params& p)
{
    int k = param_int(p, "k"), m = param_int(p, "m");
    require(k >= 0 && m >= 1, "hl-lemma: need k >= 0, m >= 1");
    auto e = make(id, p, Status::proved, "HL chain sum as an even HL sum");
    e.lhs.push_back(term(named("hl_chain_sum", {{"k", k}, {"n", m}})));
    e.rhs.push_back(term(even_sum(k, m, 1)));
    return e;
}

EquationSpec shun(const std::string& id, const Params& p)
{
    int k = param_int(p, "k");
    require(k >= 0, "shun: need k >= 0");
    auto e = make(id, p, proved_if(k <= 1), "interwoven sum as an even HL sum in base q^2");
    e.lhs.push_back(term(named("shun_sum", {{"k", k}})));
    e.rhs.push_back(term(even_sum(k, 2, 1)));
    return e;
}

SeriesRef shun2_ref(int k, const std::string& v)
{
    return ref("shun2_sum", {{"k", std::to_string(k)}, {"variant", v}});
}

EquationSpec shun2(const std::string& id, const Params& p)
{
    int k = param_int(p, "k");
    std::string v = param_str(p, "variant");
    std::vector<int> w;
    if (v == "k_lambda0") w = {k, 0, 0};
    else if (v == "k_lambda1") w = {0, k, 0};
    else if (v == "mixed") {
        require(k >= 1, "shun2 mixed: need k >= 1");
        w = {1, k - 1, 0};
    } else {
        throw std::invalid_argument("shun2: variant must be k_lambda0, k_lambda1 or mixed");
    }
    require(k >= 0, "shun2: need k >= 0");
    auto e = make(id, p, proved_if(k <= 2), "D^{(2)} series as interwoven sums");
    e.lhs.push_back(term(gf(Family::D, 2, w)));
    e.rhs.push_back(term(shun2_ref(k, v)));
    return e;
}

EquationSpec ag_products(const std::string& id, const Params& p)
{
    std::string kind = param_str(p, "kind");
    int k = param_int(p, "k");
    require(k >= 1, "ag-products: need k >= 1");
    SeriesRef sum;
    if (kind == "shun") sum = named("shun_sum", {{"k", k}});
    else if (kind == "k_lambda0" || kind == "k_lambda1") sum = shun2_ref(k, kind);
    else if (kind == "omega") sum = shun2_ref(k, "mixed");
    else throw std::invalid_argument("ag-products: kind must be shun, k_lambda0, k_lambda1 or omega");
    auto e = make(id, p, Status::conjectural, "interwoven sum at z = 1 as an AG-type product");
    e.lhs.push_back(term(sum, {}, z_one()));
    e.rhs.push_back(term(ref("ag_type", {{"kind", kind}, {"k", std::to_string(k)}})));
    return e;
}

EquationSpec hl_variant(const std::string& id, const Params& p, bool first)
{
    auto e = make(id, p, Status::conjectural, "weighted HL chain sums");
    if (first) {
        int n = param_int(p, "n");
        require(n >= 1, "hl-variant1: need n >= 1");
        e.status = proved_if(n <= 2);
        e.lhs.push_back(term(ref("hl_weighted_chain", {{"variant", "v1"}, {"param", std::to_string(n)}})));
        if (n % 2 == 1) e.rhs.push_back(term(gf(Family::A, (n + 1) / 2, unit((n + 1) / 2, 1))));
        else e.rhs.push_back(term(gf(Family::D, n / 2 + 1, unit(n / 2 + 1, 1))));
    } else {
        int k = param_int(p, "k");
        require(k >= 1, "hl-variant2: need k >= 1");
        e.status = proved_if(k <= 1);
        e.lhs.push_back(term(ref("hl_weighted_chain", {{"variant", "v2"}, {"param", std::to_string(k)}})));
        e.rhs.push_back(term(d2(k - 1, 1, 0)));
    }
    return e;
}

EquationSpec d2_level2_sums(const std::string& id, const Params& p)
{
    std::string v = param_str(p, "variant");
    std::vector<int> w;
    if (v == "A") w = {2, 0, 0};
    else if (v == "B") w = {0, 2, 0};
    else if (v == "C") w = {1, 1, 0};
    else if (v == "D") w = {1, 0, 1};
    else throw std::invalid_argument("d2-level2-sums: variant must be A, B, C or D");
    auto e = make(id, p, Status::proved, "level-two D^{(2)} series as interwoven sums at w = z");
    e.lhs.push_back(term(wz(v), {}, Subst::w_to_z()));
    e.rhs.push_back(term(gf(Family::D, 2, w)));
    return e;
}

EquationSpec alt_form_d2(const std::string& id, const Params& p)
{
    std::string f = param_str(p, "form");
    std::vector<int> w;
    if (f == "lambda0_lambda1") w = {1, 1, 0};
    else if (f == "lambda0_lambda2") w = {1, 0, 1};
    else throw std::invalid_argument("alt-form-d2: form must be lambda0_lambda1 or lambda0_lambda2");
    auto e = make(id, p, Status::proved, "Omega-type rewritings of the level-two D^{(2)} series");
    e.lhs.push_back(term(ref("alt_form", {{"form", f}})));
    e.rhs.push_back(term(gf(Family::D, 2, w)));
    return e;
}

EquationSpec atomic(const std::string& id, const Params& p)
{
    std::string rel = param_str(p, "relation");
    atomic_from_name(rel);
    auto e = make(id, p, Status::proved, "atomic relation between S-series");
    e.lhs.push_back(term(ref("atomic_residual", {{"relation", rel},
                                                  {"k1", std::to_string(param_int(p, "k1"))},
                                                  {"k2", std::to_string(param_int(p, "k2"))},
                                                  {"l1", std::to_string(param_int(p, "l1"))},
                                                  {"l2", std::to_string(param_int(p, "l2"))}})));
    return e;
}

const std::vector<Entry>& entries()
{
    using namespace std::placeholders;
    static const std::vector<Entry> list = {
        {{"rogers-selberg", {"k", "a"}, "Rogers-Selberg functional equations"}, rogers_selberg},
        {{"mr-system", {"n", "a", "branch"}, "level-one A^{(n)} functional equations"}, mr_system},
        {{"fun", {"n", "k", "a"}, "first A^{(n)} functional equation"}, fun},
        {{"fun2", {"n", "k"}, "second A^{(n)} functional equation"},
         [](const std::string& id, const Params& p) { return fun2(id, p, false); }},
        {{"fun2-simplified", {"n", "k"}, "simplified second A^{(n)} functional equation"},
         [](const std::string& id, const Params& p) { return fun2(id, p, true); }},
        {{"fun-cd1", {"n", "k", "a"}, "C^{(n)} through D^{(n+1)}"}, fun_cd1},
        {{"fun-cd2", {"n", "k", "a"}, "D^{(n+1)} through C^{(n)}"}, fun_cd2},
        {{"cdn2", {"k", "a"}, "C^{(1)} against D^{(2)}"}, cdn2},
        {{"eq-nis2", {"k", "a", "b"}, "D^{(2)} difference equations"}, eq_nis2},
        {{"nis2-difference", {"k", "a", "b"}, "second differences of the D^{(2)} equations"}, nis2_difference},
        {{"nis2-fun-d2-sum", {"k", "a"}, "combined D^{(2)} equation for (a,1,k-a-1)"}, nis2_fun_d2_sum},
        {{"fun-d2", {"k", "a"}, "D^{(2)} functional equation for (a,0,k-a)"}, fun_d2},
        {{"kis2-system", {"eq"}, "level-two D^{(2)} system"}, kis2_system},
        {{"automorphism", {"family", "n", "weights"}, "diagram automorphism of C and D"}, automorphism},
        {{"b-b", {"k0", "k1"}, "A^{(1)} against Gordon's frequency condition"}, b_b},
        {{"wz-functional", {"eq"}, "w-deformed level-two system"}, wz_functional},
        {{"wz-guess-reduction", {"variant", "k", "side"}, "specialisations of the level-k guess"}, wz_guess_reduction},
        {{"level-rank-n1", {"k", "i"}, "level-rank duality at rank one"}, level_rank_n1},
        {{"level-rank-n2", {"k", "i", "j"}, "level-rank duality at rank two"}, level_rank_n2},
        {{"level-rank-pattern", {"pattern", "k", "n"}, "general level-rank patterns"}, level_rank_pattern},
        {{"jms", {"n", "a"}, "level-one A^{(n)} products"},
         [](const std::string& id, const Params& p) { return level_one(id, p, Family::A, "jms"); }},
        {{"dk1", {"n", "a"}, "level-one D^{(n)} products"},
         [](const std::string& id, const Params& p) { return level_one(id, p, Family::D, "dk1"); }},
        {{"c-level1", {"n", "a"}, "level-one C^{(n)} products"},
         [](const std::string& id, const Params& p) { return level_one(id, p, Family::C, "c_level1"); }},
        {{"gordon", {"k", "a"}, "Gordon's theorem"}, gordon},
        {{"andrews-gordon", {"k", "a"}, "Andrews-Gordon sums"}, andrews_gordon},
        {{"a-f", {"n", "a"}, "A^{(n)} level one as F-sums"},
         [](const std::string& id, const Params& p) { return f_bridge(id, p, Family::A); }},
        {{"c-f", {"n", "a"}, "C^{(n)} level one as F-sums"},
         [](const std::string& id, const Params& p) { return f_bridge(id, p, Family::C); }},
        {{"d-f", {"n", "a"}, "D^{(n)} level one as F-sums"},
         [](const std::string& id, const Params& p) { return f_bridge(id, p, Family::D); }},
        {{"eq-ann", {"n", "weight"}, "level-one A^{(n)} as two-column HL sums"}, eq_ann},
        {{"con-a2n2", {"n", "weights"}, "A^{(n)} products"},
         [](const std::string& id, const Params& p) { return con_product(id, p, Family::A); }},
        {{"con-cn1", {"n", "weights"}, "C^{(n)} products"},
         [](const std::string& id, const Params& p) { return con_product(id, p, Family::C); }},
        {{"con-dn2", {"n", "weights"}, "D^{(n)} products"},
         [](const std::string& id, const Params& p) { return con_product(id, p, Family::D); }},
        {{"con-a2n2-qseries", {"n", "k", "weight"}, "A^{(n)} as even HL sums"}, con_a2n2_qseries},
        {{"con-cn1dn2-qseries", {"family", "n", "k"}, "C^{(n)} and D^{(n)} as even HL sums"}, con_cd_qseries},
        {{"alt-form", {"family", "n", "k", "weight"}, "HL chain sum alternative forms"}, alt_form},
        {{"hl-lemma", {"k", "m"}, "HL chain sums as even HL sums"}, hl_lemma},
        {{"shun", {"k"}, "interwoven sums in base q^2"}, shun},
        {{"shun2", {"k", "variant"}, "D^{(2)} interwoven sums"}, shun2},
        {{"ag-products", {"kind", "k"}, "AG-type products of interwoven sums"}, ag_products},
        {{"hl-variant1", {"n"}, "weighted HL chain sums, first family"},
         [](const std::string& id, const Params& p) { return hl_variant(id, p, true); }},
        {{"hl-variant2", {"k"}, "weighted HL chain sums, second family"},
         [](const std::string& id, const Params& p) { return hl_variant(id, p, false); }},
        {{"d2-level2-sums", {"variant"}, "level-two D^{(2)} interwoven sums"}, d2_level2_sums},
        {{"alt-form-d2", {"form"}, "Omega-type level-two D^{(2)} sums"}, alt_form_d2},
        {{"atomic", {"relation", "k1", "k2", "l1", "l2"}, "atomic S-series relations"}, atomic},
    };
    return list;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_ids()
{
    static const auto ids = [] {
        std::vector<CatalogEntry> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return ids;
}

EquationSpec catalog(const std::string& id, const Params& params)
{
    for (const auto& e : entries())
        if (e.info.id == id) {
            for (const auto& [k, v] : params)
                if (std::find(e.info.params.begin(), e.info.params.end(), k) == e.info.params.end())
                    throw std::invalid_argument("check '" + id + "' has no parameter '" + k + "'");
            return e.build(id, params);
        }
    throw std::out_of_range("unknown check '" + id + "'");
}

// ---------------------------------------------------------------- residuals

int required_order(const Term& t, const Monomial& clearing, int N)
{
    int target = N - (t.prefactor.q + clearing.q);
    if (target < 0) return -1;
    int m = t.subst.m;
    return (target + m) / m - 1;
}

namespace {

QSeries project(const QSeries& s, Projection p)
{
    switch (p) {
    case Projection::z_zero: return z_zero(s);
    case Projection::w_zero: return w_zero(s);
    default: return s;
    }
}

QSeries side_sum(const std::vector<Term>& terms, const Monomial& clearing, int N, std::map<std::string, QSeries>& memo)
{
    QSeries total(N, 0);
    for (const Term& t : terms) {
        Monomial mono{t.prefactor.z + clearing.z, t.prefactor.w + clearing.w, t.prefactor.q + clearing.q};
        if (mono.z < 0 || mono.w < 0) throw std::logic_error("equation: negative z/w exponent after clearing");
        if (t.subst.zq < 0 || t.subst.wq < 0) throw std::logic_error("equation: negative q-shift in a substitution");
        int M = required_order(t, clearing, N);
        if (M < 0) continue;
        std::string key = format_series_ref(t.series) + "@" + std::to_string(M);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, evaluate_series(t.series, M)).first;
        const QSeries& src = it->second;
        if (src.order() < M) throw std::runtime_error("insufficient internal truncation for " + format_series_ref(t.series));
        QSeries v = substitute(project(src, t.projection), t.subst).shifted(mono.z, mono.w, mono.q);
        if (v.order() < N) throw std::runtime_error("insufficient internal truncation for " + format_series_ref(t.series));
        if (t.coeff != 1) v.scale(Coeff(t.coeff));
        total += v.truncated(N);
    }
    return total;
}

}  // namespace

Residual residual(const EquationSpec& spec, int N)
{
    if (N < 0) throw std::invalid_argument("residual: order must be >= 0");
    std::map<std::string, QSeries> memo;
    Residual r;
    r.lhs = side_sum(spec.lhs, spec.clearing, N, memo);
    r.rhs = side_sum(spec.rhs, spec.clearing, N, memo);
    r.difference = r.lhs - r.rhs;
    r.first_mismatch = compare(r.lhs, r.rhs, N);
    return r;
}

// ---------------------------------------------------------------- k = 2 uniqueness

std::array<QSeries, 4> kis2_fixed_point(int N)
{
    if (N < 0) throw std::invalid_argument("kis2_fixed_point: order must be >= 0");
    std::array<QSeries, 4> s;
    for (auto& x : s) x = QSeries::one(N);
    auto mono = [&](int z, int q) { return QSeries::monomial(Coeff(1), z, 0, q, N); };
    for (int it = 0; it < N + 2; ++it) {
        std::array<QSeries, 4> sh;
        for (int i = 0; i < 4; ++i) sh[i] = substitute(s[i], Subst::z_shift(2));
        const QSeries &A = sh[0], &B = sh[1], &C = sh[2], &D = sh[3];
        QSeries nA = (B + mono(1, 2) * C + mono(2, 4) * A).truncated(N);
        QSeries two_c = mono(1, 2) * C;
        two_c.scale(Coeff(2));
        QSeries nD = (B + two_c + mono(2, 4) * D).truncated(N);
        QSeries nC = (nD + mono(1, 1) * B + mono(2, 3) * C + mono(2, 4) * A).truncated(N);
        QSeries nB = (nC + mono(2, 2) * B + mono(2, 3) * C + mono(2, 4) * A).truncated(N);
        s = {nA, nB, nC, nD};
    }
    return s;
}

std::optional<Mismatch> kis2_uniqueness_check(int N)
{
    auto fp = kis2_fixed_point(N);
    const std::array<std::vector<int>, 4> w = {{{2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {1, 0, 1}}};
    for (int i = 0; i < 4; ++i) {
        auto m = compare(fp[i], gen_fun(Family::D, 2, Boundary{w[i]}, N), N);
        if (m) return m;
    }
    return std::nullopt;
}

}  // namespace qlab
