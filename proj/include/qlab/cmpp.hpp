#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

// A: 2n rows over n colours (n >= 1). C: 2n+1 colours with f_i^(c) = 0 unless
// c+i is even (n >= 0). D: 2n-1 colours with f_i^(c) = 0 unless c+i is odd
// (n >= 1). C at n = 0 and D at n = 1 are one-row arrays.
enum class Family { A, C, D };

char family_tag(Family f);
Family family_from_tag(char c);
int family_rows(Family f, int n);
int family_colours(Family f, int n);
void check_family_rank(Family f, int n);

struct Boundary {
    std::vector<int> k;  // k_0 .. k_n
    int level_sum() const;
};

struct FrequencyArray {
    Family family = Family::A;
    int n = 1;
    std::map<std::pair<int, int>, int> freq;  // (colour, part size) -> multiplicity

    int weight() const;
    int length() const;
    // Parity rule of the C and D families.
    bool parity_ok() const;
};

// Maximum of sum p_i over all paths, boundary columns -1 and 0 included.
int max_path_sum(const FrequencyArray& a, const Boundary& b);
bool admissible(const FrequencyArray& a, const Boundary& b);

// Sum over admissible coloured partitions of z^{l} q^{|lambda|}, |lambda| <= N.
// The reference enumerator walks part sizes downwards and prunes with the
// partial path bound; gen_fun uses a memoised column transfer over a window of
// rows-1 columns and caches results per (family, n, boundary).
QSeries gen_fun_reference(Family f, int n, const Boundary& b, int N);
QSeries gen_fun(Family f, int n, const Boundary& b, int N);

// Gordon's frequency condition f_1 <= a, f_i + f_{i+1} <= k, enumerated directly.
QSeries gordon_frequency_series(int k, int a, int N);

}  // namespace qlab
