#include "qlab/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace qlab {

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::valid() const
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p)
{
    Partition c;
    for (int j = 1; j <= p.largest(); ++j) {
        int n = 0;
        for (int x : p.parts)
            if (x >= j) ++n;
        c.parts.push_back(n);
    }
    return c;
}

int n_stat(const Partition& p)
{
    int s = 0;
    for (int i = 0; i < p.length(); ++i) s += i * p.parts[i];
    return s;
}

int frequency(const Partition& p, int i) { return static_cast<int>(std::count(p.parts.begin(), p.parts.end(), i)); }

PartitionStats partition_stats(const Partition& p)
{
    PartitionStats s;
    s.conjugate = conjugate(p);
    for (int x : p.parts) ++s.frequencies[x];
    s.n_stat = n_stat(p);
    s.length = p.length();
    s.weight = p.weight();
    return s;
}

Partition from_frequencies(const std::vector<int>& f)
{
    Partition p;
    for (int i = static_cast<int>(f.size()) - 1; i >= 1; --i)
        for (int j = 0; j < f[i]; ++j) p.parts.push_back(i);
    return p;
}

namespace {

void fill(int remaining, int cap, int len_left, Partition& cur, const std::function<void(const Partition&)>& f)
{
    if (remaining == 0) {
        f(cur);
        return;
    }
    if (len_left == 0) return;
    for (int x = std::min(cap, remaining); x >= 1; --x) {
        cur.parts.push_back(x);
        fill(remaining - x, x, len_left - 1, cur, f);
        cur.parts.pop_back();
    }
}

}  // namespace

void for_each_partition(int total_max, int part_max, int len_max, const std::function<void(const Partition&)>& f)
{
    Partition cur;
    for (int n = 0; n <= total_max; ++n) {
        int cap = part_max < 0 ? n : std::min(part_max, n);
        fill(n, cap, len_max < 0 ? n : len_max, cur, f);
    }
}

std::vector<Partition> partitions_list(int total_max, int part_max, int len_max)
{
    std::vector<Partition> v;
    for_each_partition(total_max, part_max, len_max, [&](const Partition& p) { v.push_back(p); });
    return v;
}

}  // namespace qlab
