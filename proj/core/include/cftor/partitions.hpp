#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cftor/errors.hpp"

namespace cftor {

/// Target data for one symbolic search: genus g, torsion order N,
/// quasi-period length m, and the interior degrees (delta_1,...,delta_{m-1}).
struct PartitionSpec {
    int g = 0;
    int N = 0;
    int m = 0;
    std::vector<int> deltas; ///< delta_1 ... delta_{m-1}

    int delta(int i) const; ///< delta_i for 0 <= i <= m (palindromic closure)
    bool operator==(const PartitionSpec& o) const = default;
    std::string to_string() const; ///< e.g. "g=2 N=11 m=7 (2,1,1,1,1,2)"
};

/// Inclusive bounds on the quasi-period length compatible with
/// g + m <= N <= m*g + 1. Throws EmptyRangeError when no m qualifies.
std::pair<int, int> m_range(int g, int N);

/// Whether the interior degrees satisfy all admissibility rules:
/// values in [1, g], palindromic, sum N-g-1, consecutive-degree caps, the
/// m > 2 rule delta_1 + delta_2 <= g+1, and no three consecutive saturated
/// sums at indices <= m/2.
bool partition_admissible(int g, int N, const std::vector<int>& deltas);

/// All admissible PartitionSpec values for (g, N), ordered by
/// (m, lexicographic deltas). Requires g >= 2, N > g+1.
std::vector<PartitionSpec> enumerate_partitions(int g, int N);

} // namespace cftor
