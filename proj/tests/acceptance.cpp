// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every comparison is exact (rational/integer equality); the stated runtime
// budgets are enforced.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bernstir/bernoulli.hpp"
#include "bernstir/identities.hpp"
#include "bernstir/rstirling.hpp"

using namespace bernstir;

namespace {

int failures_total = 0;

void run(const std::string& name, double budget_seconds,
         const std::function<bool(std::string&)>& fn) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures_total;
}

const std::vector<Rational> kAlphas = {rat(1),    rat(2),     rat(5),
                                       rat(1, 2), rat(-5, 2), rat(7, 3)};

bool pole_free(const Rational& base, unsigned p, unsigned q) {
    for (unsigned j = 0; j <= p; ++j)
        if (base + rat(static_cast<long>(q + j)) == 0) return false;
    return true;
}

// One full scan over all permutations (resp. set partitions) of [N],
// tallying (number of cycles/blocks, largest r with [r] spread over distinct
// cycles/blocks). Suffix sums then give every r-Stirling value at once.
std::map<std::pair<unsigned, unsigned>, Int> enum_table(StirlingKind kind, unsigned N) {
    std::vector<std::vector<long>> tally(N + 1, std::vector<long>(N + 1, 0));
    if (kind == StirlingKind::FirstKindUnsigned) {
        std::vector<unsigned> perm(N);
        std::iota(perm.begin(), perm.end(), 0u);
        std::vector<unsigned> cycle_of(N);
        std::vector<bool> seen(N);
        do {
            unsigned cycles = 0;
            std::fill(seen.begin(), seen.end(), false);
            for (unsigned s = 0; s < N; ++s) {
                if (seen[s]) continue;
                unsigned id = cycles++;
                for (unsigned e = s; !seen[e]; e = perm[e]) {
                    seen[e] = true;
                    cycle_of[e] = id;
                }
            }
            // r_max = largest r with elements 0..r-1 in pairwise distinct cycles
            unsigned r_max = N;
            for (unsigned b = 1; b < N && r_max == N; ++b)
                for (unsigned a = 0; a < b; ++a)
                    if (cycle_of[a] == cycle_of[b]) {
                        r_max = b;
                        break;
                    }
            ++tally[cycles][r_max];
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::vector<unsigned> block_of(N);
        auto dfs = [&](auto&& self, unsigned elem, unsigned used) -> void {
            if (elem == N) {
                unsigned r_max = N;
                for (unsigned b = 1; b < N && r_max == N; ++b)
                    for (unsigned a = 0; a < b; ++a)
                        if (block_of[a] == block_of[b]) {
                            r_max = b;
                            break;
                        }
                ++tally[used][r_max];
                return;
            }
            for (unsigned b = 0; b <= used && b < N; ++b) {
                block_of[elem] = b;
                self(self, elem + 1, std::max(used, b + 1));
            }
        };
        if (N == 0)
            ++tally[0][0];
        else
            dfs(dfs, 0, 0);
    }
    std::map<std::pair<unsigned, unsigned>, Int> out;
    for (unsigned k = 0; k <= N; ++k) {
        long acc = 0;
        for (unsigned r = N + 1; r-- > 0;) {
            if (r <= N) acc += r < tally[k].size() ? tally[k][r] : 0;
            out[{k, r}] = Int(acc);
        }
    }
    return out;
}

bool criterion_stirling_triple(std::string& detail) {
    for (StirlingKind kind : {StirlingKind::FirstKindUnsigned, StirlingKind::SecondKind})
        for (unsigned N = 0; N <= 10; ++N) {
            auto enumerated = enum_table(kind, N);
            for (unsigned r = 0; r <= std::min(N, 4u); ++r)
                for (unsigned K = 0; K <= N; ++K) {
                    Int rec = rstir(kind, N, K, r);
                    if (rec != enumerated[{K, r}]) {
                        detail = "recurrence vs enumeration at N=" + std::to_string(N);
                        return false;
                    }
                    if (K >= r && N >= r &&
                        rstir_gf_oracle(kind, N - r, K - r, r) != rec) {
                        detail = "recurrence vs GF at N=" + std::to_string(N);
                        return false;
                    }
                }
        }
    // the per-point spec operation, full grid within its budget
    for (StirlingKind kind : {StirlingKind::FirstKindUnsigned, StirlingKind::SecondKind})
        for (unsigned N = 0; N <= 8; ++N)
            for (unsigned r = 0; r <= std::min(N, 4u); ++r)
                for (unsigned K = 0; K <= N; ++K)
                    if (rstir_enum_oracle(kind, N, K, r) != rstir(kind, N, K, r)) {
                        detail = "rstir_enum_oracle mismatch at N=" + std::to_string(N);
                        return false;
                    }
    return true;
}

bool criterion_eqs_5_6(std::string& detail) {
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= 8; ++k)
            for (unsigned r = 0; r <= 8; ++r) {
                if (special_neg_order(BernoulliFamily::FirstKind, n, k, r) !=
                    oracle_eval(BernoulliFamily::FirstKind, n, rat(-(long)k), (long)r)) {
                    detail = "second-kind closed form fails";
                    return false;
                }
                if (special_neg_order(BernoulliFamily::SecondKind, n, k, r) !=
                    oracle_eval(BernoulliFamily::SecondKind, n, rat(-(long)k), -(long)r)) {
                    detail = "first-kind closed form fails";
                    return false;
                }
            }
    return true;
}

bool criterion_propositions(std::string& detail) {
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned r = 0; r <= 3; ++r)
            for (unsigned p : {n, n + 1, n + 3})
                for (unsigned q = 0; q <= 2; ++q)
                    for (const Rational& alpha : kAlphas)
                        for (BernoulliFamily family :
                             {BernoulliFamily::FirstKind, BernoulliFamily::SecondKind}) {
                            Rational dual = rat((long)(n + 1)) - alpha;
                            const Rational& base1 =
                                family == BernoulliFamily::SecondKind ? alpha : dual;
                            if (pole_free(base1, p, q)) {
                                EvalSpec spec{n, alpha, -(long)r, p, q};
                                if (eval_prop1(family, spec) !=
                                    oracle_eval(family, n, alpha, -(long)r)) {
                                    detail = "eval_prop1 fails at n=" + std::to_string(n);
                                    return false;
                                }
                            }
                            const Rational& base2 =
                                family == BernoulliFamily::FirstKind ? alpha : dual;
                            if (pole_free(base2, p, q)) {
                                EvalSpec spec{n, alpha, (long)r, p, q};
                                if (eval_prop2(family, spec) !=
                                    oracle_eval(family, n, alpha, (long)r)) {
                                    detail = "eval_prop2 fails at n=" + std::to_string(n);
                                    return false;
                                }
                            }
                        }
    return true;
}

bool criterion_carlitz(std::string& detail) {
    for (unsigned n = 0; n <= 10; ++n)
        for (long r = 0; r <= 3; ++r)
            for (long x : {r, -r})
                for (const Rational& alpha : kAlphas)
                    if (oracle_eval(BernoulliFamily::FirstKind, n, alpha, x) !=
                        oracle_eval(BernoulliFamily::SecondKind, n, rat((long)(n + 1)) - alpha,
                                    x - 1)) {
                        detail = "Carlitz duality fails at n=" + std::to_string(n);
                        return false;
                    }
    return true;
}

bool criterion_representations(std::string& detail) {
    for (unsigned n = 1; n <= 12; ++n) {
        Rational b_first = 0, B_first = 0, B_second = 0, b_second = 0;
        for (unsigned j = 0; j <= n; ++j) {
            Rational c = rat(binom_int(2 * n, n + j));
            Rational t1 = c * rat(rstir(StirlingKind::FirstKindUnsigned, n + j, j, 0)) /
                          rat((long)(j + 1));
            b_first += (n + j) % 2 == 0 ? t1 : -t1;
            Rational t2 = c * rat(rstir(StirlingKind::FirstKindUnsigned, n + j + 1, j + 1, 0)) /
                          rat((long)(n + j));
            B_first += (n + j) % 2 == 0 ? t2 : -t2;
            Rational t3 = c * rat(rstir(StirlingKind::SecondKind, n + j, j, 0)) /
                          rat((long)(j + 1));
            B_second += j % 2 == 0 ? t3 : -t3;
            Rational t4 = c * rat(rstir(StirlingKind::SecondKind, n + j + 1, j + 1, 0)) /
                          rat((long)(n + j));
            b_second += j % 2 == 0 ? t4 : -t4;
        }
        Rational central = rat(binom_int(2 * n, n));
        Rational Bn = oracle_eval(BernoulliFamily::FirstKind, n, 1, 0);
        Rational bn = oracle_eval(BernoulliFamily::SecondKind, n, 1, 0);
        if (rat((long)(n + 1)) / central * b_first != bn ||
            rat((long)n) * B_first != Bn ||
            rat((long)(n + 1)) / central * B_second != Bn ||
            rat((long)n) * b_second != bn) {
            detail = "representation fails at n=" + std::to_string(n);
            return false;
        }
    }
    bool spots = oracle_eval(BernoulliFamily::FirstKind, 2, 1, 0) == rat(1, 6) &&
                 oracle_eval(BernoulliFamily::FirstKind, 4, 1, 0) == rat(-1, 30) &&
                 oracle_eval(BernoulliFamily::FirstKind, 12, 1, 0) == rat(-691, 2730) &&
                 oracle_eval(BernoulliFamily::SecondKind, 1, 1, 0) == rat(1, 2) &&
                 oracle_eval(BernoulliFamily::SecondKind, 2, 1, 0) == rat(-1, 6);
    if (!spots) detail = "spot value mismatch";
    return spots;
}

bool criterion_remark1(std::string& detail) {
    for (unsigned n = 1; n <= 6; ++n) {
        GenocchiRoutes routes = genocchi_routes(n);
        if (!routes.agree() || !is_integer(routes.product)) {
            detail = "genocchi routes at n=" + std::to_string(n);
            return false;
        }
    }
    for (long m = -6; m <= 6; m += 2)
        if (euler_at_even(1, m) != 1) {
            detail = "E_0 != 1";
            return false;
        }
    if (euler_at_even(2, 0) != rat(-1, 2)) {
        detail = "E_1(0) != -1/2";
        return false;
    }
    return true;
}

bool criterion_remark2(std::string& detail) {
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned r = 0; r <= 8; ++r)
            if (remark2_B(n, r) != classical_B_at_int(n, (long)r)) {
                detail = "n=" + std::to_string(n) + ", r=" + std::to_string(r);
                return false;
            }
    return true;
}

unsigned long default_cardinality(bool with_k, bool with_r) {
    Grid g;
    unsigned long c = (g.max_n + 1) * (g.max_q + 1) * g.p_offsets.size();
    if (with_k) c *= g.max_k + 1;
    if (with_r) c *= g.max_r + 1;
    return c;
}

bool criterion_c1(std::string& detail) {
    Grid g;  // default desk grid: n<=8, k<=4, r<=3, q<=3, p in {n, n+2}
    const IdentityId ids[] = {IdentityId::C1_first,       IdentityId::C1_second,
                              IdentityId::C1_ex_r1_first, IdentityId::C1_ex_r1_second,
                              IdentityId::C1_ex_k0_first, IdentityId::C1_ex_k0_second,
                              IdentityId::C1_ex_n0};
    for (IdentityId id : ids) {
        IdentityReport report = check_identity(id, g);
        if (!report.verified()) {
            detail = identity_name(id) + " falsified";
            return false;
        }
        unsigned long expected;
        switch (id) {
            case IdentityId::C1_first:
            case IdentityId::C1_second: expected = default_cardinality(true, true); break;
            case IdentityId::C1_ex_n0:
                expected = (g.max_k + 1) * (g.max_q + 1) * g.p_offsets.size();
                break;
            case IdentityId::C1_ex_k0_first:
            case IdentityId::C1_ex_k0_second: expected = default_cardinality(false, true); break;
            default: expected = default_cardinality(true, false); break;
        }
        if (report.checked != expected) {
            detail = identity_name(id) + " skipped grid points";
            return false;
        }
    }
    return true;
}

bool criterion_c5(std::string& detail) {
    Grid g;
    const IdentityId ids[] = {IdentityId::C5_first, IdentityId::C5_second,
                              IdentityId::C5_ex_k0_first, IdentityId::C5_ex_k0_second,
                              IdentityId::C5_ex_n0};
    for (IdentityId id : ids)
        if (!check_identity(id, g).verified()) {
            detail = identity_name(id) + " falsified under corrected sign";
            return false;
        }

    // Under the printed sign the first display must fail exactly where n is
    // odd and the RHS is nonzero, with lhs = -rhs.
    IdentityReport paper = check_c5(IdentityId::C5_first, SignConvention::Paper, g);
    unsigned long expected_failures = 0;
    for (unsigned n = 1; n <= g.max_n; n += 2)
        for (unsigned k = 0; k <= g.max_k; ++k)
            for (unsigned r = 0; r <= g.max_r; ++r)
                for (unsigned q = 0; q <= g.max_q; ++q)
                    for (unsigned off : g.p_offsets) {
                        (void)off;
                        if (rstir(StirlingKind::FirstKindUnsigned, n + k + r, k + r, r) != 0)
                            ++expected_failures;
                    }
    if (paper.failure_count != expected_failures) {
        detail = "paper-sign failure count " + std::to_string(paper.failure_count) +
                 " != expected " + std::to_string(expected_failures);
        return false;
    }
    for (const Failure& f : paper.failures)
        if (f.params[0].second % 2 != 1 || f.lhs != -f.rhs) {
            detail = "paper-sign failure outside the odd-n slice";
            return false;
        }
    const Failure& witness = paper.failures.front();
    bool witness_ok = witness.params ==
                          std::vector<std::pair<std::string, long>>{
                              {"n", 1}, {"k", 0}, {"r", 1}, {"q", 0}, {"p", 1}} &&
                      witness.lhs == rat(3) && witness.rhs == rat(-3);
    if (!witness_ok) detail = "hand-checked witness (n=1,k=0,q=0,p=1,r=1) not first";
    return witness_ok;
}

#ifdef BERNSTIR_CLI_PATH
std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(BERNSTIR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    return {WEXITSTATUS(pclose(pipe)), out};
}

bool criterion_cli(std::string& detail) {
    const std::pair<const char*, int> cases[] = {
        {"stirling --kind 2 --N 4 --K 3 --r 2", 0},
        {"stirling --kind 1 --N 3 --K 2 --r 1", 0},
        {"stirling --kind 2 --N 2 --K 2 --r 2", 0},
        {"bernoulli --family B --n 2 --alpha 1/1 --x 0", 0},
        {"bernoulli --family b --n 0 --alpha 7/3 --x 5", 0},
        {"bernoulli --family B --n 1 --alpha -1/1 --x 0 --route both", 0},
        {"verify c5-first --sign corrected --max-n 6", 0},
        {"verify c5-first --sign paper --max-n 2", 1},
        {"verify a5 --max-n 6", 0},
        {"table genocchi --max 3", 0},
        {"table bernoulli-numbers --max 4", 0},
        {"table euler-even --n 1 --m-max 4", 0},
        {"bernoulli --family B --n 1 --alpha 2 --x -1", 3},  // pole
        {"verify no-such-identity", 2},                      // usage
        {"stirling --kind 7 --N 1 --K 1 --r 0", 2},          // usage
    };
    for (const auto& [args, want_exit] : cases) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        if (first.first != want_exit) {
            detail = std::string("exit code ") + std::to_string(first.first) + " != " +
                     std::to_string(want_exit) + " for: " + args;
            return false;
        }
        if (first != second) {
            detail = std::string("non-deterministic output for: ") + args;
            return false;
        }
    }
    return true;
}
#endif

}  // namespace

int main() {
    run("r-Stirling triple agreement (recurrence = enumeration = GF), N <= 10", 30,
        criterion_stirling_triple);
    run("negative-order closed forms: special_neg_order = oracle_eval, n,k,r <= 8", 10, criterion_eqs_5_6);
    run("interpolation formulas (eval_prop1/2) = series oracle, (p,q)-invariant, n <= 10", 60,
        criterion_propositions);
    run("Carlitz duality on the proposition grid", 60, criterion_carlitz);
    run("classical Bernoulli representations, n <= 12, with spot values", 0,
        criterion_representations);
    run("Genocchi triple-route, Euler at even integers", 0, criterion_remark1);
    run("remark2_B = classical_B_at_int, n,r <= 8", 0, criterion_remark2);
    run("identity c1 + its r=1, k=0, n=0 specializations on the desk grid", 60, criterion_c1);
    run("identity c5 + its k=0, n=0 specializations; paper sign fails on the odd-n slice", 60, criterion_c5);
#ifdef BERNSTIR_CLI_PATH
    run("CLI determinism and exit-code mapping", 0, criterion_cli);
#endif
    if (failures_total == 0) {
        std::cout << "ALL ACCEPTANCE CRITERIA PASSED\n";
        return 0;
    }
    std::cout << failures_total << " CRITERIA FAILED\n";
    return 1;
}
