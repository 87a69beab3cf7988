#include "qlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <sstream>
#include <thread>

namespace qlab::cli {

using nlohmann::json;

namespace {

std::string outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    default: return "finding";
    }
}

Outcome outcome_from(const std::string& s)
{
    if (s == "pass") return Outcome::pass;
    if (s == "fail") return Outcome::fail;
    if (s == "finding") return Outcome::finding;
    throw std::invalid_argument("unknown status '" + s + "'");
}

// Integer or colon-separated integer list.
std::optional<std::vector<long long>> as_ints(const std::string& v)
{
    std::vector<long long> out;
    std::stringstream ss(v);
    std::string item;
    if (v.empty() || v.back() == ':') return std::nullopt;
    while (std::getline(ss, item, ':')) {
        if (item.empty()) return std::nullopt;
        std::size_t pos = 0;
        try {
            out.push_back(std::stoll(item, &pos));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (pos != item.size()) return std::nullopt;
    }
    return out;
}

bool is_plain_int(const std::string& v)
{
    auto x = as_ints(v);
    return x && x->size() == 1 && std::to_string((*x)[0]) == v;
}

bool value_less(const std::string& a, const std::string& b)
{
    auto x = as_ints(a), y = as_ints(b);
    if (x && y) {
        if (*x != *y) return *x < *y;
        return a < b;
    }
    if (x || y) return static_cast<bool>(x);
    return a < b;
}

std::vector<int> int_range(const std::string& key, const std::string& v)
{
    std::vector<int> out;
    std::stringstream ss(v);
    std::string alt;
    while (std::getline(ss, alt, '|')) {
        auto dots = alt.find("..");
        if (dots == std::string::npos) {
            out.push_back(param_int({{key, alt}}, key));
            continue;
        }
        int lo = param_int({{key, alt.substr(0, dots)}}, key);
        int hi = param_int({{key, alt.substr(dots + 2)}}, key);
        if (hi < lo) throw std::invalid_argument("malformed grid: empty range for '" + key + "'");
        for (int i = lo; i <= hi; ++i) out.push_back(i);
    }
    return out;
}

std::vector<std::string> value_range(const std::string& key, const std::string& v)
{
    std::vector<std::string> out;
    bool numeric = v.find("..") != std::string::npos;
    if (numeric) {
        for (int x : int_range(key, v)) out.push_back(std::to_string(x));
        return out;
    }
    std::stringstream ss(v);
    std::string alt;
    while (std::getline(ss, alt, '|')) out.push_back(alt);
    return out;
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = total; x >= 0; --x) {
        cur.push_back(x);
        compositions(parts - 1, total - x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Report verify(const std::string& check, const Params& params, int order)
{
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    auto t0 = std::chrono::steady_clock::now();
    EquationSpec spec = catalog(check, params);
    Residual r = residual(spec, order);
    Report rep;
    rep.check = check;
    rep.params = params;
    rep.order = order;
    rep.conjecture_status = spec.status;
    rep.first_mismatch = r.first_mismatch;
    if (!r.zero()) rep.status = spec.status == Status::proved ? Outcome::fail : Outcome::finding;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_json(const Report& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.params) {
        if (is_plain_int(v)) params[k] = std::stoll(v);
        else params[k] = v;
    }
    json j;
    j["check"] = r.check;
    j["params"] = params;
    j["order"] = r.order;
    j["status"] = outcome_name(r.status);
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        j["first_mismatch"] = {{"dz", m.dz}, {"dw", m.dw}, {"dq", m.dq}, {"lhs", m.lhs.str()}, {"rhs", m.rhs.str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    j["conjecture_status"] = status_name(r.conjecture_status);
    return j.dump();
}

Report parse_report_json(const std::string& text)
{
    json j = json::parse(text);
    Report r;
    r.check = j.at("check").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        r.params[k] = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
    r.order = j.at("order").get<int>();
    r.status = outcome_from(j.at("status").get<std::string>());
    const json& m = j.at("first_mismatch");
    if (!m.is_null())
        r.first_mismatch = Mismatch{m.at("dz").get<int>(), m.at("dw").get<int>(), m.at("dq").get<int>(),
                                    Coeff::from_string(m.at("lhs").get<std::string>()),
                                    Coeff::from_string(m.at("rhs").get<std::string>())};
    r.elapsed_ms = j.at("elapsed_ms").get<long>();
    std::string cs = j.at("conjecture_status").get<std::string>();
    if (cs != "proved" && cs != "conjectural") throw std::invalid_argument("unknown conjecture_status '" + cs + "'");
    r.conjecture_status = cs == "proved" ? Status::proved : Status::conjectural;
    return r;
}

std::vector<Params> expand_grid(const std::string& grid)
{
    std::vector<Params> points{Params{}};
    std::optional<std::pair<int, int>> levels;
    Params raw = parse_params(grid);
    for (const auto& [key, value] : raw) {
        if (key == "weights" && value.rfind("level=", 0) == 0) {
            auto lv = int_range(key, value.substr(6));
            levels = std::make_pair(*std::min_element(lv.begin(), lv.end()), *std::max_element(lv.begin(), lv.end()));
            continue;
        }
        std::vector<Params> next;
        for (const auto& p : points)
            for (const auto& v : value_range(key, value)) {
                Params q = p;
                q[key] = v;
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }
    if (levels) {
        std::vector<Params> next;
        for (const auto& p : points) {
            int n = param_int(p, "n");
            if (n < 0) continue;
            for (int lvl = levels->first; lvl <= levels->second; ++lvl) {
                std::vector<std::vector<int>> ws;
                std::vector<int> cur;
                compositions(n + 1, lvl, cur, ws);
                for (const auto& w : ws) {
                    Params q = p;
                    q["weights"] = format_list(w);
                    next.push_back(std::move(q));
                }
            }
        }
        points = std::move(next);
    }
    std::sort(points.begin(), points.end(), params_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

bool params_less(const Params& a, const Params& b)
{
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return value_less(ia->second, ib->second);
    }
    return ia == a.end() && ib != b.end();
}

std::vector<Report> sweep(const std::string& check, const std::string& grid, int order, int jobs)
{
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    bool known = false;
    for (const auto& e : catalog_ids()) known = known || e.id == check;
    if (!known) throw std::out_of_range("unknown check '" + check + "'");

    std::vector<Params> points = expand_grid(grid);
    std::vector<std::optional<Report>> slots(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                slots[i] = verify(check, points[i], order);
            } catch (const std::invalid_argument&) {
                // outside the entry's domain: skipped
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, std::max<std::size_t>(points.size(), 1));
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Report> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

int exit_code(const std::vector<Report>& reports)
{
    bool fail = false, finding = false;
    for (const auto& r : reports) {
        fail = fail || r.status == Outcome::fail;
        finding = finding || r.status == Outcome::finding;
    }
    return fail ? 2 : finding ? 3 : 0;
}

namespace {

std::string series_json(const std::string& name, const QSeries& s)
{
    json terms = json::array();
    s.for_each_term([&](int z, int w, int q, const Coeff& c) { terms.push_back({z, w, q, c.str()}); });
    json j;
    j["series"] = name;
    if (s.exact()) j["order"] = "inf";
    else j["order"] = s.order();
    j["floor"] = s.floor();
    j["terms"] = terms;
    return j.dump();
}

int default_jobs()
{
    if (const char* env = std::getenv("QLAB_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series verification for cylindric partition identities"};
    app.require_subcommand(1);

    std::string series, format = "tsv", check, params, grid;
    int order = 0;
    int jobs = default_jobs();
    bool no_timing = false, z_one = false;

    auto* expand = app.add_subcommand("expand", "Print the coefficients of a named series");
    expand->add_option("--series", series, "name(args), e.g. gen_fun(A,1,boundary=0:1)")->required();
    expand->add_option("--order", order, "q-order N")->required()->check(CLI::NonNegativeNumber);
    expand->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    expand->add_flag("--z-one", z_one, "specialise z = 1 before printing");

    auto* ver = app.add_subcommand("verify", "Run one catalog check");
    ver->add_option("--check", check, "catalog id")->required();
    ver->add_option("--params", params, "k=1,a=1");
    ver->add_option("--order", order, "q-order N")->required()->check(CLI::NonNegativeNumber);
    ver->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

    auto* sw = app.add_subcommand("sweep", "Run a catalog check over a parameter grid");
    sw->add_option("--check", check, "catalog id")->required();
    sw->add_option("--grid", grid, "k=1..3,a=0..3")->required();
    sw->add_option("--order", order, "q-order N")->required()->check(CLI::NonNegativeNumber);
    sw->add_option("--jobs", jobs, "worker threads (default QLAB_JOBS or 1)")->check(CLI::PositiveNumber);
    sw->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

    auto* list = app.add_subcommand("list-checks", "List catalog ids and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*expand) {
            SeriesRef ref = parse_series_ref(series);
            QSeries s = evaluate_series(ref, order).truncated(order);
            if (z_one) s = substitute(s, Subst::z_to_one());
            if (format == "json") out << series_json(format_series_ref(ref), s) << "\n";
            else out << to_tsv(s);
            return 0;
        }
        if (*list) {
            for (const auto& e : catalog_ids()) {
                std::string ps;
                for (const auto& p : e.params) ps += (ps.empty() ? "" : ",") + p;
                out << e.id << "\t" << ps << "\t" << e.description << "\n";
            }
            return 0;
        }
        std::vector<Report> reports;
        if (*ver) reports.push_back(verify(check, parse_params(params), order));
        else reports = sweep(check, grid, order, jobs);
        for (auto& r : reports) {
            if (no_timing) r.elapsed_ms = 0;
            out << report_json(r) << "\n";
        }
        return exit_code(reports);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> storage{"qlab-cli"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qlab::cli
