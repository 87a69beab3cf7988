#include "qlab/cmpp.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qlab {

char family_tag(Family f) { return f == Family::A ? 'A' : f == Family::C ? 'C' : 'D'; }

Family family_from_tag(char c)
{
    switch (c) {
    case 'A': case 'a': return Family::A;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    }
    throw std::invalid_argument(std::string("unknown family ") + c);
}

int family_colours(Family f, int n)
{
    switch (f) {
    case Family::A: return n;
    case Family::C: return 2 * n + 1;
    case Family::D: return 2 * n - 1;
    }
    return 0;
}

int family_rows(Family f, int n) { return f == Family::A ? 2 * n : family_colours(f, n); }

void check_family_rank(Family f, int n)
{
    int lo = f == Family::C ? 0 : 1;
    if (n < lo) throw std::invalid_argument(std::string("invalid n for family ") + family_tag(f));
}

int Boundary::level_sum() const { return std::accumulate(k.begin(), k.end(), 0); }

int FrequencyArray::weight() const
{
    int w = 0;
    for (auto& [key, v] : freq) w += key.second * v;
    return w;
}

int FrequencyArray::length() const
{
    int l = 0;
    for (auto& [key, v] : freq) l += v;
    return l;
}

bool FrequencyArray::parity_ok() const
{
    for (auto& [key, v] : freq) {
        if (v == 0) continue;
        int s = key.first + key.second;
        if (family == Family::C && s % 2 != 0) return false;
        if (family == Family::D && s % 2 == 0) return false;
    }
    return true;
}

namespace {

// Row r (0-based) carries indices i >= -1 with i = par (mod 2); its boundary
// value sits at index -1 (par 1) or 0 (par 0).
struct Layout {
    int rows = 0;
    std::vector<int> par, colour, bval;
    int level = 0;
};

Layout make_layout(Family f, int n, const Boundary& b)
{
    check_family_rank(f, n);
    if (static_cast<int>(b.k.size()) != n + 1) throw std::invalid_argument("boundary length must be n+1");
    for (int x : b.k)
        if (x < 0) throw std::invalid_argument("boundary entries must be >= 0");
    Layout L;
    L.rows = family_rows(f, n);
    L.level = b.level_sum();
    for (int r = 1; r <= L.rows; ++r) {
        int par, col, bv;
        if (f == Family::A) {
            int c = (r + 1) / 2;
            col = c;
            if (r % 2 == 1) {
                par = 0;
                bv = c == 1 ? b.k[0] : 0;
            } else {
                par = 1;
                bv = b.k[c];
            }
        } else if (f == Family::C) {
            col = r;
            par = r % 2;
            bv = r % 2 == 1 ? b.k[(r - 1) / 2] : 0;
        } else {
            col = r;
            par = (r + 1) % 2;
            if (r % 2 == 0) {
                bv = b.k[r / 2];
            } else {
                int c = (r + 1) / 2;
                bv = (c == 1 ? b.k[0] : 0) + (c == n ? b.k[n] : 0);
            }
        }
        L.par.push_back(par);
        L.colour.push_back(col);
        L.bval.push_back(bv);
    }
    return L;
}

// Row of the cell (colour, size), or -1 when the parity rule forbids it.
int cell_row(Family f, const Layout& L, int colour, int size)
{
    if (f == Family::A) {
        int r = size % 2 == 0 ? 2 * colour - 2 : 2 * colour - 1;
        if (colour < 1 || r >= L.rows) return -1;
        return r;
    }
    int r = colour - 1;
    if (r < 0 || r >= L.rows) return -1;
    return (size - L.par[r]) % 2 == 0 ? r : -1;
}

constexpr int kNeg = -(1 << 29);

// Max path sum with indices confined to [lo, hi]; val(r, i) gives entries.
template <class V>
int confined_max(const Layout& L, int lo, int hi, V&& val)
{
    int width = hi - lo + 1;
    std::vector<int> cur(width, kNeg), nxt(width, kNeg);
    for (int i = lo; i <= hi; ++i)
        if (i >= -1 && ((i - L.par[0]) % 2 + 2) % 2 == 0) cur[i - lo] = val(0, i);
    for (int r = 1; r < L.rows; ++r) {
        std::fill(nxt.begin(), nxt.end(), kNeg);
        for (int i = lo; i <= hi; ++i) {
            if (i < -1 || ((i - L.par[r]) % 2 + 2) % 2 != 0) continue;
            int best = kNeg;
            if (i - 1 >= lo) best = std::max(best, cur[i - 1 - lo]);
            if (i + 1 <= hi) best = std::max(best, cur[i + 1 - lo]);
            if (best == kNeg) continue;
            nxt[i - lo] = best + val(r, i);
        }
        std::swap(cur, nxt);
    }
    int m = kNeg;
    for (int x : cur) m = std::max(m, x);
    return m;
}

}  // namespace

int max_path_sum(const FrequencyArray& a, const Boundary& b)
{
    if (a.family != Family::A && !a.parity_ok()) throw std::invalid_argument("frequency array violates the parity rule");
    Layout L = make_layout(a.family, a.n, b);
    int P = 0;
    std::map<std::pair<int, int>, int> cells;  // (row, index) -> value
    for (auto& [key, v] : a.freq) {
        if (v == 0) continue;
        int r = cell_row(a.family, L, key.first, key.second);
        if (r < 0) throw std::invalid_argument("frequency array colour/part mismatch");
        if (key.second < 1) throw std::invalid_argument("part sizes must be >= 1");
        cells[{r, key.second}] += v;
        P = std::max(P, key.second);
    }
    auto val = [&](int r, int i) {
        if (i == -1 || i == 0) return L.par[r] == (i == -1 ? 1 : 0) ? L.bval[r] : 0;
        auto it = cells.find({r, i});
        return it == cells.end() ? 0 : it->second;
    };
    return confined_max(L, -1, P + L.rows, val);
}

bool admissible(const FrequencyArray& a, const Boundary& b) { return max_path_sum(a, b) <= b.level_sum(); }

QSeries gen_fun_reference(Family f, int n, const Boundary& b, int N)
{
    Layout L = make_layout(f, n, b);
    QSeries result(N, 0);
    if (N < 0) return result;
    int R = L.rows;
    // grid[r][i + 1] for i in [-1, N + R]
    int width = N + R + 2;
    std::vector<std::vector<int>> grid(R, std::vector<int>(width, 0));
    for (int r = 0; r < R; ++r) grid[r][(L.par[r] == 1 ? -1 : 0) + 1] = L.bval[r];
    auto val = [&](int r, int i) { return grid[r][i + 1]; };
    auto bound = [&]() { return confined_max(L, -1, N + R, val); };
    if (bound() > L.level) return result;

    // cells ordered by decreasing size, then row
    std::vector<std::pair<int, int>> cells;
    for (int i = N; i >= 1; --i)
        for (int r = 0; r < R; ++r)
            if ((i - L.par[r]) % 2 == 0) cells.push_back({r, i});

    std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int weight, int len) {
        if (idx == cells.size()) {
            result.add_term(len, 0, weight, Coeff(1));
            return;
        }
        auto [r, i] = cells[idx];
        rec(idx + 1, weight, len);
        for (int v = 1; v <= L.level && weight + v * i <= N; ++v) {
            grid[r][i + 1] = v;
            if (bound() <= L.level) rec(idx + 1, weight + v * i, len + v);
            else {
                grid[r][i + 1] = 0;
                break;
            }
            grid[r][i + 1] = 0;
        }
    };
    rec(0, 0, 0);
    return result;
}

namespace {

struct TransferEval {
    const Layout& L;
    int N;
    int R;
    // window columns i+1 .. i+R-1, each stored as R row values
    std::vector<std::unordered_map<std::string, QSeries>> memo;

    TransferEval(const Layout& l, int n) : L(l), N(n), R(l.rows), memo(n + 1) {}

    int window_weight(const std::string& w, int i) const
    {
        int s = 0;
        for (int c = 0; c < R - 1; ++c)
            for (int r = 0; r < R; ++r) s += static_cast<unsigned char>(w[c * R + r]) * (i + 1 + c);
        return s;
    }

    // Boundary checks for paths dipping to index 0 or -1.
    bool boundary_ok(const std::string& w) const
    {
        auto val = [&](int r, int idx) -> int {
            if (idx == -1) return L.par[r] == 1 ? L.bval[r] : 0;
            if (idx == 0) return L.par[r] == 0 ? L.bval[r] : 0;
            int c = idx - 1;
            if (c >= R - 1) return 0;
            return static_cast<unsigned char>(w[c * R + r]);
        };
        if (confined_max(L, 0, R - 1, val) > L.level) return false;
        return confined_max(L, -1, R - 2, val) <= L.level;
    }

    QSeries eval(int i, const std::string& w)
    {
        if (i == 0) return boundary_ok(w) ? QSeries::one(N) : QSeries(N, 0);
        auto& m = memo[i];
        auto it = m.find(w);
        if (it != m.end()) return it->second;
        int T = N - window_weight(w, i);
        QSeries acc(T, 0);
        std::vector<int> rows;
        for (int r = 0; r < R; ++r)
            if ((i - L.par[r]) % 2 == 0) rows.push_back(r);
        std::vector<int> col(R, 0);
        auto val = [&](int r, int idx) -> int {
            if (idx == i) return col[r];
            int c = idx - i - 1;
            if (c < 0 || c >= R - 1) return 0;
            return static_cast<unsigned char>(w[c * R + r]);
        };
        std::function<void(std::size_t, int)> choose = [&](std::size_t j, int cnt) {
            if (j == rows.size()) {
                if (confined_max(L, i, i + R - 1, val) > L.level) return;
                std::string nw(static_cast<std::size_t>(R) * (R - 1), '\0');
                for (int r = 0; r < R; ++r) nw[r] = static_cast<char>(col[r]);
                for (int c = 0; c + 1 < R - 1; ++c)
                    for (int r = 0; r < R; ++r) nw[(c + 1) * R + r] = w[c * R + r];
                QSeries sub = eval(i - 1, nw);
                acc += sub.shifted(cnt, 0, cnt * i).truncated(T);
                return;
            }
            int r = rows[j];
            for (int v = 0; v <= L.level && (cnt + v) * i <= T; ++v) {
                col[r] = v;
                // a single column entry already exceeding the budget cannot recover
                if (v > 0 && confined_max(L, i, i + R - 1, val) > L.level) break;
                choose(j + 1, cnt + v);
            }
            col[r] = 0;
        };
        choose(0, 0);
        m.emplace(w, acc);
        return acc;
    }
};

}  // namespace

QSeries gen_fun_uncached(Family f, int n, const Boundary& b, int N)
{
    Layout L = make_layout(f, n, b);
    if (N < 0) return QSeries(N, 0);
    TransferEval ev(L, N);
    std::string w(static_cast<std::size_t>(L.rows) * (L.rows - 1), '\0');
    return ev.eval(N, w).truncated(N);
}

QSeries gen_fun(Family f, int n, const Boundary& b, int N)
{
    static std::mutex mu;
    static std::map<std::string, QSeries> cache;
    std::string key(1, family_tag(f));
    key += ":" + std::to_string(n);
    for (int x : b.k) key += ":" + std::to_string(x);
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.order() >= N) return it->second.truncated(N);
    }
    QSeries s = gen_fun_uncached(f, n, b, N);
    std::lock_guard<std::mutex> g(mu);
    auto& slot = cache[key];
    if (slot.order() < N || slot.exact()) slot = s;
    return s;
}

QSeries gordon_frequency_series(int k, int a, int N)
{
    QSeries result(N, 0);
    std::vector<int> f(N + 2, 0);
    std::function<void(int, int, int)> rec = [&](int i, int weight, int len) {
        if (i == 0) {
            if (f[1] <= a) result.add_term(len, 0, weight, Coeff(1));
            return;
        }
        for (int v = 0; v + f[i + 1] <= k && weight + v * i <= N; ++v) {
            f[i] = v;
            rec(i - 1, weight + v * i, len + v);
        }
        f[i] = 0;
    };
    rec(N, 0, 0);
    return result;
}

}  // namespace qlab
