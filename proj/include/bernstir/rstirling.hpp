#pragma once

/// r-Stirling numbers of both kinds. The recurrence tables are the production
/// path; two independent oracles (exhaustive enumeration, generating-function
/// coefficient extraction) cross-check them.
///
/// Index convention: rstir(kind, N, K, r) is the literal bracket/brace with
/// top index N, bottom index K and subscript r. The +r offset of the
/// generating functions is applied only inside rstir_gf_oracle.

#include <memory>

#include "bernstir/rational.hpp"

namespace bernstir {

enum class StirlingKind { FirstKindUnsigned, SecondKind };

/// Immutable triangle of values for one (kind, r), N up to maxN.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, unsigned r, unsigned max_n);

    StirlingKind kind() const { return kind_; }
    unsigned r() const { return r_; }
    unsigned max_n() const { return max_n_; }

    /// Zero-extended lookup: 0 for K < r, K > N or N < r.
    const Int& value(unsigned n, unsigned k) const;

private:
    StirlingKind kind_;
    unsigned r_;
    unsigned max_n_;
    std::vector<std::vector<Int>> rows_;  // rows_[N-r][K-r]
};

/// Cached table for (kind, r) covering at least min_n. Tables are built under
/// a lock and published as immutable shared pointers; concurrent callers may
/// duplicate a build but never see a partial one.
std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, unsigned r,
                                                    unsigned min_n);

/// [N K]_r resp. {N K}_r via the memoized recurrence table.
Int rstir(StirlingKind kind, unsigned n, unsigned k, unsigned r);

/// Brute-force count over set partitions / permutation cycle structures.
/// Throws BudgetExceeded for N > 10.
Int rstir_enum_oracle(StirlingKind kind, unsigned n, unsigned k, unsigned r);

/// [n+r, k+r]_r resp. {n+r, k+r}_r extracted from the generating functions.
/// Throws NonIntegerCoefficient if the extracted coefficient is not integral.
Int rstir_gf_oracle(StirlingKind kind, unsigned n, unsigned k, unsigned r);

}  // namespace bernstir
