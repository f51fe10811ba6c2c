#include "bernstir/rstirling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "bernstir/errors.hpp"
#include "bernstir/series.hpp"

namespace bernstir {

StirlingTable::StirlingTable(StirlingKind kind, unsigned r, unsigned max_n)
    : kind_(kind), r_(r), max_n_(std::max(max_n, r)) {
    rows_.resize(max_n_ - r_ + 1);
    for (unsigned n = r_; n <= max_n_; ++n) {
        auto& row = rows_[n - r_];
        row.assign(n - r_ + 1, Int(0));
        if (n == r_) {
            row[0] = 1;  // base row: [r r]_r = 1
            continue;
        }
        const auto& prev = rows_[n - r_ - 1];
        for (unsigned k = r_; k <= n; ++k) {
            Int v = 0;
            if (k <= n - 1) {
                Int mult = kind_ == StirlingKind::SecondKind ? Int(k) : Int(n - 1);
                v = mult * prev[k - r_];
            }
            if (k > r_) v += prev[k - 1 - r_];
            row[k - r_] = v;
        }
    }
}

const Int& StirlingTable::value(unsigned n, unsigned k) const {
    static const Int zero(0);
    if (n < r_ || n > max_n_ || k < r_ || k > n) return zero;
    return rows_[n - r_][k - r_];
}

namespace {

std::mutex table_mutex;
std::map<std::pair<int, unsigned>, std::shared_ptr<const StirlingTable>> table_cache;

}  // namespace

std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, unsigned r,
                                                    unsigned min_n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto key = std::make_pair(static_cast<int>(kind), r);
    auto it = table_cache.find(key);
    if (it != table_cache.end() && it->second->max_n() >= min_n) return it->second;
    unsigned grow = it == table_cache.end() ? min_n : std::max(min_n, 2 * it->second->max_n());
    auto table = std::make_shared<const StirlingTable>(kind, r, grow);
    table_cache[key] = table;
    return table;
}

Int rstir(StirlingKind kind, unsigned n, unsigned k, unsigned r) {
    if (n < r || k < r || k > n) return 0;
    return stirling_table(kind, r, n)->value(n, k);
}

namespace {

// Full DFS over set partitions of [n]: each element joins an existing block or
// opens a new one. Counts partitions with exactly k blocks where no block
// holds two elements of [r].
long long count_partitions(unsigned n, unsigned k, unsigned r) {
    long long count = 0;
    std::vector<bool> block_has_small;
    auto dfs = [&](auto&& self, unsigned elem) -> void {
        if (elem == n) {
            if (block_has_small.size() == k) ++count;
            return;
        }
        bool small = elem < r;  // elements are 0-based; [r] is elems 0..r-1
        for (std::size_t b = 0; b < block_has_small.size(); ++b) {
            if (small && block_has_small[b]) continue;
            bool saved = block_has_small[b];
            if (small) block_has_small[b] = true;
            self(self, elem + 1);
            block_has_small[b] = saved;
        }
        block_has_small.push_back(small);
        self(self, elem + 1);
        block_has_small.pop_back();
    };
    dfs(dfs, 0);
    return count;
}

// Walks every permutation of [n], decomposes into cycles, keeps those with k
// cycles and the elements of [r] in distinct cycles.
long long count_permutations(unsigned n, unsigned k, unsigned r) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    long long count = 0;
    std::vector<unsigned> cycle_of(n);
    do {
        unsigned cycles = 0;
        std::vector<bool> seen(n, false);
        bool ok = true;
        for (unsigned start = 0; start < n && ok; ++start) {
            if (seen[start]) continue;
            unsigned id = cycles++;
            for (unsigned e = start; !seen[e]; e = perm[e]) {
                seen[e] = true;
                cycle_of[e] = id;
            }
        }
        if (cycles != k) continue;
        for (unsigned a = 0; a < r && ok; ++a)
            for (unsigned b = a + 1; b < r && ok; ++b)
                if (cycle_of[a] == cycle_of[b]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

Int rstir_enum_oracle(StirlingKind kind, unsigned n, unsigned k, unsigned r) {
    if (n > 10) throw BudgetExceeded(n);
    if (k < r || k > n || n < r) return 0;
    if (n == 0) return Int(k == 0 ? 1 : 0);
    long c = kind == StirlingKind::SecondKind ? count_partitions(n, k, r)
                                              : count_permutations(n, k, r);
    return Int(c);
}

Int rstir_gf_oracle(StirlingKind kind, unsigned n, unsigned k, unsigned r) {
    std::size_t order = n + 1;
    Series gf(order);
    if (kind == StirlingKind::SecondKind) {
        // (1/k!) (exp(t)-1)^k exp(rt)
        Series em1 = series_sub(series_exp_ct(1, order), series_one(order));
        Series p = series_one(order);
        for (unsigned i = 0; i < k; ++i) p = series_mul(p, em1);
        gf = series_mul(p, series_exp_ct(rat(static_cast<long>(r)), order));
    } else {
        // (1/k!) (-log(1-t))^k (1-t)^(-r)
        Series one_minus_t = series_one_plus_ct(-1, order);
        Series l = series_scale(-1, series_log(one_minus_t));
        Series p = series_one(order);
        for (unsigned i = 0; i < k; ++i) p = series_mul(p, l);
        gf = series_mul(p, series_pow(one_minus_t, rat(-static_cast<long>(r))));
    }
    Rational value = egf_coeff(gf, n) / rat(factorial(k));
    if (!is_integer(value))
        throw NonIntegerCoefficient("r-Stirling GF coefficient is not an integer: " +
                                    to_string(value));
    return value.get_num();
}

}  // namespace bernstir
