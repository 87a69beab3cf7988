#pragma once

#include <functional>
#include <map>
#include <vector>

namespace qlab {

// Weakly decreasing positive parts; the empty list is the partition of 0.
struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int weight() const;
    int largest() const { return parts.empty() ? 0 : parts.front(); }
    // Part i (1-based), zero past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
    bool valid() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct PartitionStats {
    Partition conjugate;
    std::map<int, int> frequencies;  // i -> f_i, only nonzero entries
    int n_stat = 0;                  // sum (i-1) lambda_i
    int length = 0;
    int weight = 0;
};

PartitionStats partition_stats(const Partition& p);
Partition conjugate(const Partition& p);
int n_stat(const Partition& p);
// Multiplicity of part i.
int frequency(const Partition& p, int i);
// Partition with parts given by multiplicities f[1], f[2], ... (f[0] ignored).
Partition from_frequencies(const std::vector<int>& f);

// Pass kInfinite (-1) for an unbounded part size or length. Order: by weight,
// then reverse lexicographic within a weight ((2) before (1,1)).
void for_each_partition(int total_max, int part_max, int len_max, const std::function<void(const Partition&)>& f);
std::vector<Partition> partitions_list(int total_max, int part_max, int len_max);

}  // namespace qlab
