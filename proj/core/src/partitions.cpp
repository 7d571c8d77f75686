#include "cftor/partitions.hpp"

#include <numeric>
#include <sstream>

namespace cftor {

int PartitionSpec::delta(int i) const {
    if (i < 0 || i > m) throw Error("delta index out of range");
    if (i == 0 || i == m) return g + 1;
    return deltas[static_cast<size_t>(i - 1)];
}

std::string PartitionSpec::to_string() const {
    std::ostringstream out;
    out << "g=" << g << " N=" << N << " m=" << m << " (";
    for (size_t i = 0; i < deltas.size(); ++i) {
        if (i) out << ',';
        out << deltas[i];
    }
    out << ')';
    return out.str();
}

std::pair<int, int> m_range(int g, int N) {
    if (g < 1 || N < g + 1) throw Error("m_range requires g >= 1 and N >= g+1");
    int lo = std::max(1, (N - 1 + g - 1) / g); // ceil((N-1)/g)
    int hi = N - g;
    if (lo > hi) throw EmptyRangeError("no quasi-period length fits g+m <= N <= m*g+1");
    return {lo, hi};
}

bool partition_admissible(int g, int N, const std::vector<int>& deltas) {
    const int m = static_cast<int>(deltas.size()) + 1;
    auto delta = [&](int i) {
        return (i == 0 || i == m) ? g + 1 : deltas[static_cast<size_t>(i - 1)];
    };
    int sum = std::accumulate(deltas.begin(), deltas.end(), 0);
    if (sum != N - g - 1) return false;
    for (int i = 1; i < m; ++i) {
        if (delta(i) < 1 || delta(i) > g) return false;
        if (delta(i) != delta(m - i)) return false;
    }
    const int d1 = (m > 1) ? delta(1) : g + 1;
    std::vector<bool> equality(static_cast<size_t>(m) + 1, false);
    for (int j = 1; j <= m; ++j) {
        int s = delta(j - 1) + delta(j);
        if (s > g + 1 + d1) return false;
        equality[static_cast<size_t>(j)] = (s == g + 1 + d1);
        if (!equality[static_cast<size_t>(j)] && s > g + 1) return false;
    }
    if (m > 2 && delta(1) + delta(2) > g + 1) return false;
    for (int j = 2; j + 2 <= m - 1 && 2 * (j + 2) <= m; ++j)
        if (equality[static_cast<size_t>(j)] && equality[static_cast<size_t>(j + 1)] &&
            equality[static_cast<size_t>(j + 2)])
            return false;
    return true;
}

namespace {

void fill_free(int g, int N, int m, std::vector<int>& deltas, int next_free,
               std::vector<PartitionSpec>& out) {
    const int free_count = m / 2; // indices 1..m/2 determine the palindrome
    if (next_free > free_count) {
        if (partition_admissible(g, N, deltas))
            out.push_back(PartitionSpec{g, N, m, deltas});
        return;
    }
    for (int v = 1; v <= g; ++v) {
        deltas[static_cast<size_t>(next_free - 1)] = v;
        if (m - next_free != next_free) deltas[static_cast<size_t>(m - next_free - 1)] = v;
        fill_free(g, N, m, deltas, next_free + 1, out);
    }
}

} // namespace

std::vector<PartitionSpec> enumerate_partitions(int g, int N) {
    if (g < 2 || N < g + 1) throw Error("enumerate_partitions requires g >= 2 and N >= g+1");
    std::vector<PartitionSpec> out;
    auto [lo, hi] = m_range(g, N);
    for (int m = lo; m <= hi; ++m) {
        if (m == 1) {
            if (N == g + 1) out.push_back(PartitionSpec{g, N, 1, {}});
            continue;
        }
        std::vector<int> deltas(static_cast<size_t>(m - 1), 1);
        fill_free(g, N, m, deltas, 1, out);
    }
    return out;
}

} // namespace cftor
