// Command-line front-end: exact r-Stirling numbers, higher-order Bernoulli
// polynomial values, identity sweeps and value tables, as JSON or CSV.
//
// Exit codes: 0 success/verified, 1 identity falsified, 2 usage error,
// 3 pole at a sampled point.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernstir/bernoulli.hpp"
#include "bernstir/errors.hpp"
#include "bernstir/identities.hpp"
#include "bernstir/rational.hpp"
#include "bernstir/rstirling.hpp"

using json = nlohmann::ordered_json;
using namespace bernstir;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPole = 3;

json rat_json(const Rational& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string csv_escape_free(const Rational& q) { return to_string(q); }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json report_json(const IdentityReport& report) {
    json failures = json::array();
    for (const Failure& f : report.failures) {
        json params = json::object();
        for (const auto& [name, value] : f.params) params[name] = value;
        failures.push_back(json{{"params", params}, {"lhs", rat_json(f.lhs)},
                                {"rhs", rat_json(f.rhs)}});
    }
    return json{{"identity", identity_name(report.id)},
                {"grid", report.grid_description},
                {"checked", report.checked},
                {"failure_count", report.failure_count},
                {"verified", report.verified()},
                {"failures", failures}};
}

void report_csv(const IdentityReport& report, std::ostream& out) {
    out << "identity,checked,failure_count,verified\n"
        << identity_name(report.id) << "," << report.checked << "," << report.failure_count
        << "," << (report.verified() ? "true" : "false") << "\n";
    if (!report.failures.empty()) {
        out << "params,lhs,rhs\n";
        for (const Failure& f : report.failures) {
            std::ostringstream params;
            for (std::size_t i = 0; i < f.params.size(); ++i)
                params << (i ? ";" : "") << f.params[i].first << "=" << f.params[i].second;
            out << params.str() << "," << csv_escape_free(f.lhs) << ","
                << csv_escape_free(f.rhs) << "\n";
        }
    }
}

StirlingKind parse_kind(int kind) {
    if (kind == 1) return StirlingKind::FirstKindUnsigned;
    if (kind == 2) return StirlingKind::SecondKind;
    throw UsageError("--kind must be 1 or 2");
}

// Closed-form route selection: negative integer orders go through the exact
// Stirling formulas (pole-free); everything else through the Melzak sums.
Rational closed_route(BernoulliFamily family, unsigned n, const Rational& alpha, long x,
                      unsigned p, unsigned q) {
    if (is_integer(alpha) && alpha < 0) {
        unsigned k = static_cast<unsigned>(-alpha.get_num().get_si());
        if (family == BernoulliFamily::FirstKind)
            return x >= 0 ? special_neg_order(family, n, k, static_cast<unsigned>(x))
                          : expansion_high_order(BernoulliFamily::SecondKind, n, k, x - 1);
        return x <= 0 ? special_neg_order(family, n, k, static_cast<unsigned>(-x))
                      : expansion_high_order(BernoulliFamily::FirstKind, n, k, x + 1);
    }
    EvalSpec spec{n, alpha, x, p, q};
    return x < 0 ? eval_prop1(family, spec) : eval_prop2(family, spec);
}

int cmd_stirling(int kind_flag, unsigned N, unsigned K, unsigned r, int table_max,
                 const std::string& format) {
    StirlingKind kind = parse_kind(kind_flag);
    json params{{"kind", kind_flag}, {"r", r}};
    if (table_max >= 0) {
        unsigned max_n = static_cast<unsigned>(table_max);
        auto table = stirling_table(kind, r, max_n);
        if (format == "csv") {
            std::cout << "N,K,value\n";
            for (unsigned n = r; n <= max_n; ++n)
                for (unsigned k = r; k <= n; ++k)
                    std::cout << n << "," << k << "," << table->value(n, k).get_str() << "\n";
            return kExitOk;
        }
        params["maxN"] = max_n;
        json rows = json::array();
        for (unsigned n = r; n <= max_n; ++n)
            for (unsigned k = r; k <= n; ++k)
                rows.push_back(json{{"N", n}, {"K", k}, {"value", table->value(n, k).get_str()}});
        emit(json{{"command", "stirling"}, {"params", params}, {"result", rows}});
        return kExitOk;
    }
    Int value = rstir(kind, N, K, r);
    if (format == "csv") {
        std::cout << "kind,N,K,r,value\n"
                  << kind_flag << "," << N << "," << K << "," << r << "," << value.get_str()
                  << "\n";
        return kExitOk;
    }
    params["N"] = N;
    params["K"] = K;
    emit(json{{"command", "stirling"}, {"params", params}, {"result", value.get_str()}});
    return kExitOk;
}

int cmd_bernoulli(const std::string& family_flag, unsigned n, const std::string& alpha_text,
                  long x, int p_flag, unsigned q, const std::string& route,
                  const std::string& format) {
    if (family_flag != "B" && family_flag != "b") throw UsageError("--family must be B or b");
    BernoulliFamily family =
        family_flag == "B" ? BernoulliFamily::FirstKind : BernoulliFamily::SecondKind;
    auto alpha = parse_rational(alpha_text);
    if (!alpha) throw UsageError("--alpha must be a rational 'a/b'");
    unsigned p = p_flag < 0 ? n : static_cast<unsigned>(p_flag);
    if (p < n) throw UsageError("--p must satisfy p >= n");

    json params{{"family", family_flag}, {"n", n}, {"alpha", rat_json(*alpha)},
                {"x", x},                {"p", p}, {"q", q},
                {"route", route}};
    json result;
    std::ostringstream csv;
    if (route == "oracle") {
        Rational v = oracle_eval(family, n, *alpha, x);
        result = rat_json(v);
        csv << "route,value\noracle," << to_string(v) << "\n";
    } else if (route == "closed") {
        Rational v = closed_route(family, n, *alpha, x, p, q);
        result = rat_json(v);
        csv << "route,value\nclosed," << to_string(v) << "\n";
    } else if (route == "both") {
        Rational closed = closed_route(family, n, *alpha, x, p, q);
        Rational oracle = oracle_eval(family, n, *alpha, x);
        result = json{{"closed", rat_json(closed)},
                      {"oracle", rat_json(oracle)},
                      {"agree", closed == oracle}};
        csv << "closed,oracle,agree\n"
            << to_string(closed) << "," << to_string(oracle) << ","
            << (closed == oracle ? "true" : "false") << "\n";
    } else {
        throw UsageError("--route must be closed, oracle or both");
    }
    if (format == "csv")
        std::cout << csv.str();
    else
        emit(json{{"command", "bernoulli"}, {"params", params}, {"result", result}});
    return kExitOk;
}

int cmd_verify(const std::string& id_text, const Grid& grid, const std::string& sign_text,
               const std::string& format) {
    IdentityId id;
    if (!parse_identity_id(id_text, id)) throw UsageError("unknown identity id: " + id_text);
    SignConvention sign =
        sign_text == "paper" ? SignConvention::Paper : SignConvention::Corrected;
    IdentityReport report = check_identity(id, grid, sign);
    if (format == "csv") {
        report_csv(report, std::cout);
    } else {
        json params{{"identity", id_text},
                    {"max-n", grid.max_n},
                    {"max-k", grid.max_k},
                    {"max-r", grid.max_r},
                    {"max-q", grid.max_q},
                    {"p-offsets", grid.p_offsets},
                    {"sign", sign_text}};
        emit(json{{"command", "verify"}, {"params", params}, {"result", report_json(report)}});
    }
    return report.verified() ? kExitOk : kExitFalsified;
}

int cmd_table(const std::string& which, unsigned max, unsigned n, unsigned m_max,
              const std::string& format) {
    json rows = json::array();
    std::ostringstream csv;
    json params;
    if (which == "genocchi") {
        params = json{{"max", max}};
        csv << "n,product_route,first_kind_route,second_kind_route,agree\n";
        for (unsigned i = 1; i <= max; ++i) {
            GenocchiRoutes routes = genocchi_routes(i);
            rows.push_back(json{{"n", i},
                                {"product_route", rat_json(routes.product)},
                                {"first_kind_route", rat_json(routes.first_kind_sum)},
                                {"second_kind_route", rat_json(routes.second_kind_sum)},
                                {"agree", routes.agree()}});
            csv << i << "," << to_string(routes.product) << ","
                << to_string(routes.first_kind_sum) << "," << to_string(routes.second_kind_sum)
                << "," << (routes.agree() ? "true" : "false") << "\n";
        }
    } else if (which == "bernoulli-numbers") {
        params = json{{"max", max}};
        csv << "n,oracle,closed,remark2,agree\n";
        for (unsigned i = 0; i <= max; ++i) {
            Rational oracle = oracle_eval(BernoulliFamily::FirstKind, i, 1, 0);
            Rational closed = classical_B_at_int(i, 0);
            Rational r2 = remark2_B(i, 0);
            bool agree = oracle == closed && oracle == r2;
            rows.push_back(json{{"n", i},
                                {"oracle", rat_json(oracle)},
                                {"closed", rat_json(closed)},
                                {"remark2", rat_json(r2)},
                                {"agree", agree}});
            csv << i << "," << to_string(oracle) << "," << to_string(closed) << ","
                << to_string(r2) << "," << (agree ? "true" : "false") << "\n";
        }
    } else if (which == "euler-even") {
        if (n < 1) throw UsageError("euler-even requires --n >= 1");
        params = json{{"n", n}, {"m-max", m_max}};
        csv << "m,closed,oracle,agree\n";
        for (long m = 0; m <= static_cast<long>(m_max); m += 2) {
            Rational closed = euler_at_even(n, m);
            Rational oracle = rat(2, static_cast<long>(n)) *
                              (oracle_eval(BernoulliFamily::FirstKind, n, 1, m) -
                               rat(pow_int(2, n)) *
                                   oracle_eval(BernoulliFamily::FirstKind, n, 1, m / 2));
            bool agree = closed == oracle;
            rows.push_back(json{{"m", m},
                                {"closed", rat_json(closed)},
                                {"oracle", rat_json(oracle)},
                                {"agree", agree}});
            csv << m << "," << to_string(closed) << "," << to_string(oracle) << ","
                << (agree ? "true" : "false") << "\n";
        }
    } else {
        throw UsageError("unknown table kind: " + which);
    }
    if (format == "csv")
        std::cout << csv.str();
    else
        emit(json{{"command", "table"}, {"params", params}, {"result", rows}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact r-Stirling numbers and higher-order Bernoulli polynomial values"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* stir = app.add_subcommand("stirling", "r-Stirling numbers");
    int kind = 0;
    unsigned N = 0, K = 0, r = 0;
    int table_max = -1;
    stir->add_option("--kind", kind, "1 = first kind (unsigned), 2 = second kind")->required();
    stir->add_option("--N", N, "top index");
    stir->add_option("--K", K, "bottom index");
    stir->add_option("--r", r, "subscript r");
    stir->add_option("--table", table_max, "emit the full triangle up to this N");

    auto* bern = app.add_subcommand("bernoulli", "higher-order Bernoulli polynomial values");
    std::string family = "B", alpha = "1", route = "closed";
    unsigned bn = 0, bq = 0;
    long bx = 0;
    int bp = -1;
    bern->add_option("--family", family, "B (first kind) or b (second kind)")->required();
    bern->add_option("--n", bn, "degree")->required();
    bern->add_option("--alpha", alpha, "order, as a/b")->required();
    bern->add_option("--x", bx, "integer argument")->required();
    bern->add_option("--p", bp, "interpolation degree bound (default n)");
    bern->add_option("--q", bq, "interpolation shift (default 0)");
    bern->add_option("--route", route, "closed | oracle | both");

    auto* verify = app.add_subcommand("verify", "sweep one identity over a grid");
    std::string identity, sign = "corrected", p_offsets_text = "0,2";
    Grid grid;
    verify->add_option("identity", identity, "identity id (e.g. c1-first)")->required();
    verify->add_option("--max-n", grid.max_n);
    verify->add_option("--max-k", grid.max_k);
    verify->add_option("--max-r", grid.max_r);
    verify->add_option("--max-q", grid.max_q);
    verify->add_option("--p-offsets", p_offsets_text, "comma-separated offsets, p = n+offset");
    verify->add_option("--sign", sign)->check(CLI::IsMember({"paper", "corrected"}));

    auto* table = app.add_subcommand("table", "value tables with route agreement");
    std::string table_kind;
    unsigned tmax = 6, tn = 1, m_max = 0;
    table->add_option("kind", table_kind, "genocchi | bernoulli-numbers | euler-even")
        ->required();
    table->add_option("--max", tmax, "upper index bound");
    table->add_option("--n", tn, "degree parameter for euler-even");
    table->add_option("--m-max", m_max, "largest even argument for euler-even");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*stir) return cmd_stirling(kind, N, K, r, table_max, format);
        if (*bern) return cmd_bernoulli(family, bn, alpha, bx, bp, bq, route, format);
        if (*verify) {
            grid.p_offsets.clear();
            std::stringstream ss(p_offsets_text);
            std::string item;
            while (std::getline(ss, item, ',')) grid.p_offsets.push_back(std::stoul(item));
            if (grid.p_offsets.empty()) throw UsageError("--p-offsets must be non-empty");
            return cmd_verify(identity, grid, sign, format);
        }
        if (*table) return cmd_table(table_kind, tmax, tn, m_max, format);
    } catch (const PoleAtSampledPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
