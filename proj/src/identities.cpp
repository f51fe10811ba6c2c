#include "bernstir/identities.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bernstir/bernoulli.hpp"
#include "bernstir/rstirling.hpp"

namespace bernstir {

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::C1_first: return "c1-first";
        case IdentityId::C1_second: return "c1-second";
        case IdentityId::C1_ex_r1_first: return "c1-ex-r1-first";
        case IdentityId::C1_ex_r1_second: return "c1-ex-r1-second";
        case IdentityId::C1_ex_k0_first: return "c1-ex-k0-first";
        case IdentityId::C1_ex_k0_second: return "c1-ex-k0-second";
        case IdentityId::C1_ex_n0: return "c1-ex-n0";
        case IdentityId::C5_first: return "c5-first";
        case IdentityId::C5_second: return "c5-second";
        case IdentityId::C5_ex_k0_first: return "c5-ex-k0-first";
        case IdentityId::C5_ex_k0_second: return "c5-ex-k0-second";
        case IdentityId::C5_ex_n0: return "c5-ex-n0";
        case IdentityId::A5: return "a5";
        case IdentityId::A6: return "a6";
        case IdentityId::Carlitz: return "carlitz";
        case IdentityId::Remark2: return "remark2";
    }
    throw std::logic_error("unreachable");
}

std::vector<IdentityId> all_identity_ids() {
    return {IdentityId::C1_first,       IdentityId::C1_ex_r1_first, IdentityId::C1_ex_r1_second,
            IdentityId::C1_second,      IdentityId::C1_ex_k0_first, IdentityId::C1_ex_k0_second,
            IdentityId::C1_ex_n0,       IdentityId::C5_first,       IdentityId::C5_second,
            IdentityId::C5_ex_k0_first, IdentityId::C5_ex_k0_second, IdentityId::C5_ex_n0,
            IdentityId::A5,             IdentityId::A6,             IdentityId::Carlitz,
            IdentityId::Remark2};
}

bool parse_identity_id(const std::string& name, IdentityId& out) {
    for (IdentityId id : all_identity_ids())
        if (identity_name(id) == name) {
            out = id;
            return true;
        }
    return false;
}

namespace {

using Point = std::vector<long>;
using EvalFn = std::function<std::pair<Rational, Rational>(const Point&)>;

Rational sgn_pow(unsigned e, const Rational& v) { return e % 2 == 0 ? v : -v; }

Rational ipow(long base, unsigned e) { return rat(pow_int(Int(base), e)); }

struct RawFailure {
    std::size_t index;
    Rational lhs, rhs;
};

// Grid points are enumerated in lexicographic order, so sorting recorded
// failures by flat index yields smallest-lexicographic witnesses first.
IdentityReport assemble(IdentityId id, std::string desc,
                        const std::vector<const char*>& names,
                        const std::vector<Point>& points, std::vector<RawFailure> fails) {
    std::sort(fails.begin(), fails.end(),
              [](const RawFailure& a, const RawFailure& b) { return a.index < b.index; });
    IdentityReport report;
    report.id = id;
    report.grid_description = std::move(desc);
    report.checked = points.size();
    report.failure_count = fails.size();
    for (std::size_t i = 0; i < fails.size() && i < kMaxRecordedFailures; ++i) {
        Failure f;
        const Point& pt = points[fails[i].index];
        for (std::size_t d = 0; d < names.size(); ++d) f.params.emplace_back(names[d], pt[d]);
        f.lhs = fails[i].lhs;
        f.rhs = fails[i].rhs;
        report.failures.push_back(std::move(f));
    }
    return report;
}

IdentityReport run_sweep(IdentityId id, std::string desc,
                         const std::vector<const char*>& names,
                         const std::vector<Point>& points, const EvalFn& eval, SweepMode mode) {
    std::vector<RawFailure> fails;
    if (mode == SweepMode::Serial) {
        // reference implementation, kept for testing against the kernel below
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto [lhs, rhs] = eval(points[i]);
            if (lhs != rhs) fails.push_back({i, lhs, rhs});
        }
    } else {
        const long total = static_cast<long>(points.size());
#pragma omp parallel
        {
            std::vector<RawFailure> local;
#pragma omp for schedule(dynamic, 16) nowait
            for (long i = 0; i < total; ++i) {
                auto [lhs, rhs] = eval(points[static_cast<std::size_t>(i)]);
                if (lhs != rhs) local.push_back({static_cast<std::size_t>(i), lhs, rhs});
            }
#pragma omp critical
            fails.insert(fails.end(), local.begin(), local.end());
        }
    }
    return assemble(id, std::move(desc), names, points, std::move(fails));
}

std::string describe(const Grid& g, const std::string& dims) {
    std::ostringstream out;
    out << dims << ": n<=" << g.max_n << ",k<=" << g.max_k << ",r<=" << g.max_r
        << ",q<=" << g.max_q << ",p=n+{";
    for (std::size_t i = 0; i < g.p_offsets.size(); ++i)
        out << (i ? "," : "") << g.p_offsets[i];
    out << "}";
    return out.str();
}

std::vector<Point> grid_nkrqp(const Grid& g) {
    std::vector<Point> pts;
    for (unsigned n = 0; n <= g.max_n; ++n)
        for (unsigned k = 0; k <= g.max_k; ++k)
            for (unsigned r = 0; r <= g.max_r; ++r)
                for (unsigned q = 0; q <= g.max_q; ++q)
                    for (unsigned off : g.p_offsets)
                        pts.push_back({(long)n, (long)k, (long)r, (long)q, (long)(n + off)});
    return pts;
}

std::vector<Point> grid_nkqp(const Grid& g) {
    std::vector<Point> pts;
    for (unsigned n = 0; n <= g.max_n; ++n)
        for (unsigned k = 0; k <= g.max_k; ++k)
            for (unsigned q = 0; q <= g.max_q; ++q)
                for (unsigned off : g.p_offsets)
                    pts.push_back({(long)n, (long)k, (long)q, (long)(n + off)});
    return pts;
}

std::vector<Point> grid_nrqp(const Grid& g) {
    std::vector<Point> pts;
    for (unsigned n = 0; n <= g.max_n; ++n)
        for (unsigned r = 0; r <= g.max_r; ++r)
            for (unsigned q = 0; q <= g.max_q; ++q)
                for (unsigned off : g.p_offsets)
                    pts.push_back({(long)n, (long)r, (long)q, (long)(n + off)});
    return pts;
}

std::vector<Point> grid_kqp(const Grid& g) {
    std::vector<Point> pts;
    for (unsigned k = 0; k <= g.max_k; ++k)
        for (unsigned q = 0; q <= g.max_q; ++q)
            for (unsigned off : g.p_offsets)
                pts.push_back({(long)k, (long)q, (long)off});
    return pts;
}

// Pre-builds every Stirling table a sweep can touch so the parallel loop only
// does read-only lookups.
void prewarm(StirlingKind kind, unsigned max_r_index, unsigned max_n_index) {
    for (unsigned r = 0; r <= max_r_index; ++r) stirling_table(kind, r, max_n_index);
}

}  // namespace

IdentityReport check_c1(IdentityId variant, const Grid& grid, SweepMode mode) {
    if (variant != IdentityId::C1_first && variant != IdentityId::C1_second)
        throw std::invalid_argument("check_c1: bad variant");
    bool first = variant == IdentityId::C1_first;
    unsigned p_max = grid.max_n + *std::max_element(grid.p_offsets.begin(), grid.p_offsets.end());
    prewarm(first ? StirlingKind::FirstKindUnsigned : StirlingKind::SecondKind, grid.max_r,
            grid.max_n + grid.max_r + p_max + grid.max_q);
    prewarm(first ? StirlingKind::SecondKind : StirlingKind::FirstKindUnsigned, 0,
            grid.max_n + grid.max_k);
    EvalFn eval = [first](const Point& pt) {
        unsigned n = pt[0], k = pt[1], r = pt[2], q = pt[3], p = pt[4];
        StirlingKind lhs_kind = first ? StirlingKind::FirstKindUnsigned : StirlingKind::SecondKind;
        StirlingKind rhs_kind = first ? StirlingKind::SecondKind : StirlingKind::FirstKindUnsigned;
        Rational lhs = 0;
        for (unsigned j = 0; j <= p; ++j)
            lhs += sgn_pow(j, rat(binom_int(j + q, q) * binom_int(n + k + q + j, k) *
                                  binom_int(n + k + p + q + 1, p - j) *
                                  rstir(lhs_kind, n + r + j + q, r + j + q, r)));
        Rational rhs_sum = 0;
        for (unsigned j = 0; j <= n; ++j) {
            Rational tail = first ? ipow((long)r - 1, n - j) : falling(rat((long)r - 1), n - j);
            // both displays carry (-1)^j here; writing (-1)^(n-j) in the first
            // one flips the identity on every odd-n slice
            rhs_sum += sgn_pow(j,
                               rat(binom_int(n + k, j + k) * rstir(rhs_kind, j + k, k, 0)) * tail);
        }
        Rational rhs = rat(binom_int(n + k + q, q)) * rhs_sum;
        return std::make_pair(lhs, rhs);
    };
    return run_sweep(variant, describe(grid, "n,k,r,q,p"), {"n", "k", "r", "q", "p"},
                     grid_nkrqp(grid), eval, mode);
}

IdentityReport check_c1_examples(IdentityId which, const Grid& grid, SweepMode mode) {
    unsigned p_max = grid.max_n + *std::max_element(grid.p_offsets.begin(), grid.p_offsets.end());
    switch (which) {
        case IdentityId::C1_ex_r1_first:
        case IdentityId::C1_ex_r1_second: {
            bool first = which == IdentityId::C1_ex_r1_first;
            prewarm(StirlingKind::FirstKindUnsigned, 0, grid.max_n + p_max + grid.max_q + 1);
            prewarm(StirlingKind::SecondKind, 0, grid.max_n + p_max + grid.max_q + 1);
            EvalFn eval = [first](const Point& pt) {
                unsigned n = pt[0], k = pt[1], q = pt[2], p = pt[3];
                StirlingKind lhs_kind =
                    first ? StirlingKind::FirstKindUnsigned : StirlingKind::SecondKind;
                StirlingKind rhs_kind =
                    first ? StirlingKind::SecondKind : StirlingKind::FirstKindUnsigned;
                Rational lhs = 0;
                // at r=1 only the j=n term of the parent sum survives, leaving
                // (-1)^(n-j) on both specialized displays
                for (unsigned j = 0; j <= p; ++j)
                    lhs += sgn_pow(n - j,
                                   rat(binom_int(j + q, q) * binom_int(n + k + q + j, k) *
                                       binom_int(n + k + p + q + 1, p - j) *
                                       rstir(lhs_kind, j + n + q + 1, j + q + 1, 0)));
                Rational rhs = rat(binom_int(n + k + q, q) * rstir(rhs_kind, n + k, k, 0));
                return std::make_pair(lhs, rhs);
            };
            return run_sweep(which, describe(grid, "n,k,q,p"), {"n", "k", "q", "p"},
                             grid_nkqp(grid), eval, mode);
        }
        case IdentityId::C1_ex_k0_first:
        case IdentityId::C1_ex_k0_second: {
            bool first = which == IdentityId::C1_ex_k0_first;
            prewarm(first ? StirlingKind::FirstKindUnsigned : StirlingKind::SecondKind, grid.max_r,
                    grid.max_n + grid.max_r + p_max + grid.max_q);
            EvalFn eval = [first](const Point& pt) {
                unsigned n = pt[0], r = pt[1], q = pt[2], p = pt[3];
                StirlingKind kind =
                    first ? StirlingKind::FirstKindUnsigned : StirlingKind::SecondKind;
                Rational lhs = 0;
                // the k=0 specialization keeps the parent sum's (-1)^j in
                // both displays
                for (unsigned j = 0; j <= p; ++j)
                    lhs += sgn_pow(j,
                                   rat(binom_int(j + q, q) * binom_int(n + p + q + 1, p - j) *
                                       rstir(kind, n + r + j + q, r + j + q, r)));
                Rational tail = first ? ipow((long)r - 1, n) : falling(rat((long)r - 1), n);
                Rational rhs = rat(binom_int(n + q, q)) * tail;
                return std::make_pair(lhs, rhs);
            };
            return run_sweep(which, describe(grid, "n,r,q,p"), {"n", "r", "q", "p"},
                             grid_nrqp(grid), eval, mode);
        }
        case IdentityId::C1_ex_n0: {
            EvalFn eval = [](const Point& pt) {
                unsigned k = pt[0], q = pt[1], p = pt[2];
                Rational lhs = 0;
                for (unsigned j = 0; j <= p; ++j)
                    lhs += sgn_pow(j, rat(binom_int(j + q, q) * binom_int(k + q + j, k) *
                                          binom_int(k + q + p + 1, p - j)));
                return std::make_pair(lhs, rat(binom_int(k + q, q)));
            };
            return run_sweep(which, describe(grid, "k,q,p"), {"k", "q", "p"}, grid_kqp(grid),
                             eval, mode);
        }
        default:
            throw std::invalid_argument("check_c1_examples: bad id");
    }
}

IdentityReport check_c5(IdentityId variant, SignConvention sign, const Grid& grid,
                        SweepMode mode) {
    if (variant != IdentityId::C5_first && variant != IdentityId::C5_second)
        throw std::invalid_argument("check_c5: bad variant");
    bool first = variant == IdentityId::C5_first;
    StirlingKind kind = first ? StirlingKind::FirstKindUnsigned : StirlingKind::SecondKind;
    unsigned p_max = grid.max_n + *std::max_element(grid.p_offsets.begin(), grid.p_offsets.end());
    prewarm(kind, grid.max_r, grid.max_n + grid.max_r + grid.max_q + grid.max_k + 1 + p_max);
    // The printed form carries a (-1)^n on the first display's RHS; the
    // corrected convention drops it. The second display prints no sign, so
    // the convention flag is a no-op there.
    bool apply_paper_sign = first && sign == SignConvention::Paper;
    EvalFn eval = [kind, apply_paper_sign](const Point& pt) {
        unsigned n = pt[0], k = pt[1], r = pt[2], q = pt[3], p = pt[4];
        Rational lhs = 0;
        for (unsigned j = 0; j <= p; ++j)
            lhs += sgn_pow(j, rat(binom_int(n + p + q + k + 1, p - j) * binom_int(q + j, j) *
                                  binom_int(q + k + 1 + j, k) *
                                  rstir(kind, n + r + q + k + 1 + j, r + q + k + 1 + j, r)));
        Rational rhs = rat(binom_int(n + p + q + k + 1, n + k) * rstir(kind, n + k + r, k + r, r));
        if (apply_paper_sign) rhs = sgn_pow(n, rhs);
        return std::make_pair(lhs, rhs);
    };
    return run_sweep(variant, describe(grid, "n,k,r,q,p"), {"n", "k", "r", "q", "p"},
                     grid_nkrqp(grid), eval, mode);
}

IdentityReport check_c5_examples(IdentityId which, const Grid& grid, SweepMode mode) {
    unsigned p_max = grid.max_n + *std::max_element(grid.p_offsets.begin(), grid.p_offsets.end());
    switch (which) {
        case IdentityId::C5_ex_k0_first:
        case IdentityId::C5_ex_k0_second: {
            bool first = which == IdentityId::C5_ex_k0_first;
            StirlingKind kind = first ? StirlingKind::FirstKindUnsigned : StirlingKind::SecondKind;
            prewarm(kind, grid.max_r, grid.max_n + grid.max_r + grid.max_q + 1 + p_max);
            EvalFn eval = [first, kind](const Point& pt) {
                unsigned n = pt[0], r = pt[1], q = pt[2], p = pt[3];
                Rational lhs = 0;
                for (unsigned j = 0; j <= p; ++j)
                    lhs += sgn_pow(j, rat(binom_int(n + p + q + 1, p - j) * binom_int(q + j, j) *
                                          rstir(kind, n + r + q + 1 + j, r + q + 1 + j, r)));
                Rational tail = first ? rising(rat((long)r), n) : ipow((long)r, n);
                Rational rhs = rat(binom_int(n + p + q + 1, n)) * tail;
                return std::make_pair(lhs, rhs);
            };
            return run_sweep(which, describe(grid, "n,r,q,p"), {"n", "r", "q", "p"},
                             grid_nrqp(grid), eval, mode);
        }
        case IdentityId::C5_ex_n0: {
            EvalFn eval = [](const Point& pt) {
                unsigned k = pt[0], q = pt[1], p = pt[2];
                Rational lhs = 0;
                for (unsigned j = 0; j <= p; ++j)
                    lhs += sgn_pow(j, rat(binom_int(p + q + k + 1, p - j) * binom_int(q + j, q) *
                                          binom_int(q + k + 1 + j, k)));
                return std::make_pair(lhs, rat(binom_int(p + q + k + 1, k)));
            };
            return run_sweep(which, describe(grid, "k,q,p"), {"k", "q", "p"}, grid_kqp(grid),
                             eval, mode);
        }
        default:
            throw std::invalid_argument("check_c5_examples: bad id");
    }
}

IdentityReport check_basic(IdentityId id, const Grid& grid, SweepMode mode) {
    switch (id) {
        case IdentityId::A5:
        case IdentityId::A6: {
            bool a5 = id == IdentityId::A5;
            prewarm(a5 ? StirlingKind::SecondKind : StirlingKind::FirstKindUnsigned, grid.max_r,
                    grid.max_n + grid.max_r + grid.max_k);
            std::vector<Point> pts;
            for (unsigned n = 0; n <= grid.max_n; ++n)
                for (unsigned k = 0; k <= grid.max_k; ++k)
                    for (unsigned r = 0; r <= grid.max_r; ++r)
                        pts.push_back({(long)n, (long)k, (long)r});
            EvalFn eval = [a5](const Point& pt) {
                unsigned n = pt[0], k = pt[1], r = pt[2];
                BernoulliFamily fam = a5 ? BernoulliFamily::FirstKind : BernoulliFamily::SecondKind;
                Rational lhs = special_neg_order(fam, n, k, r);
                Rational rhs = oracle_eval(fam, n, rat(-(long)k), a5 ? (long)r : -(long)r);
                return std::make_pair(lhs, rhs);
            };
            return run_sweep(id, describe(grid, "n,k,r"), {"n", "k", "r"}, pts, eval, mode);
        }
        case IdentityId::Carlitz: {
            const std::vector<Rational> alphas = {rat(1),     rat(2),      rat(5),
                                                  rat(1, 2),  rat(-5, 2),  rat(7, 3)};
            std::vector<Point> pts;
            for (unsigned n = 0; n <= grid.max_n; ++n)
                for (long r = 0; r <= (long)grid.max_r; ++r)
                    for (int s : {1, -1})
                        for (std::size_t a = 0; a < alphas.size(); ++a)
                            pts.push_back({(long)n, s * r, (long)a});
            EvalFn eval = [alphas](const Point& pt) {
                unsigned n = pt[0];
                long x = pt[1];
                const Rational& alpha = alphas[static_cast<std::size_t>(pt[2])];
                Rational lhs = oracle_eval(BernoulliFamily::FirstKind, n, alpha, x);
                Rational rhs = oracle_eval(BernoulliFamily::SecondKind, n,
                                           rat((long)n + 1) - alpha, x - 1);
                return std::make_pair(lhs, rhs);
            };
            return run_sweep(id, describe(grid, "n,x,alpha"), {"n", "x", "alpha_index"}, pts,
                             eval, mode);
        }
        case IdentityId::Remark2: {
            prewarm(StirlingKind::SecondKind, grid.max_r, 2 * grid.max_n + grid.max_r + 1);
            std::vector<Point> pts;
            for (unsigned n = 0; n <= grid.max_n; ++n)
                for (unsigned r = 0; r <= grid.max_r; ++r) pts.push_back({(long)n, (long)r});
            EvalFn eval = [](const Point& pt) {
                unsigned n = pt[0], r = pt[1];
                return std::make_pair(remark2_B(n, r), classical_B_at_int(n, (long)r));
            };
            return run_sweep(id, describe(grid, "n,r"), {"n", "r"}, pts, eval, mode);
        }
        default:
            throw std::invalid_argument("check_basic: bad id");
    }
}

IdentityReport check_identity(IdentityId id, const Grid& grid, SignConvention sign,
                              SweepMode mode) {
    switch (id) {
        case IdentityId::C1_first:
        case IdentityId::C1_second:
            return check_c1(id, grid, mode);
        case IdentityId::C1_ex_r1_first:
        case IdentityId::C1_ex_r1_second:
        case IdentityId::C1_ex_k0_first:
        case IdentityId::C1_ex_k0_second:
        case IdentityId::C1_ex_n0:
            return check_c1_examples(id, grid, mode);
        case IdentityId::C5_first:
        case IdentityId::C5_second:
            return check_c5(id, sign, grid, mode);
        case IdentityId::C5_ex_k0_first:
        case IdentityId::C5_ex_k0_second:
        case IdentityId::C5_ex_n0:
            return check_c5_examples(id, grid, mode);
        default:
            return check_basic(id, grid, mode);
    }
}

}  // namespace bernstir
