#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ylat/ylat.h"

using nlohmann::json;

namespace {

// Usage or input error: exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ylat_status st) {
    if (st == YLAT_OK)
        return;
    const std::string msg = ylat_last_error();
    if (st == YLAT_ERR_INVALID_ARGUMENT || st == YLAT_ERR_PRECONDITION)
        throw UsageError(msg);
    throw std::runtime_error(std::string(ylat_status_name(st)) + ": " + msg);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ylat_string_free(s);
    return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Poly = std::unique_ptr<ylat_poly, Deleter<ylat_poly, ylat_poly_free>>;
using Rational = std::unique_ptr<ylat_rational, Deleter<ylat_rational, ylat_rational_free>>;
using Series = std::unique_ptr<ylat_series, Deleter<ylat_series, ylat_series_free>>;
using Table = std::unique_ptr<ylat_table, Deleter<ylat_table, ylat_table_free>>;
using Report = std::unique_ptr<ylat_report, Deleter<ylat_report, ylat_report_free>>;

std::string poly_text(const ylat_poly* p) {
    char* s = nullptr;
    check(ylat_poly_to_text(p, &s));
    return take(s);
}

std::string poly_json(const ylat_poly* p) {
    char* s = nullptr;
    check(ylat_poly_to_json(p, &s));
    return take(s);
}

std::string rational_string(const ylat_rational* q) {
    char* s = nullptr;
    check(ylat_rational_to_string(q, &s));
    return take(s);
}

std::string rational_decimal(const ylat_rational* q) {
    char* s = nullptr;
    check(ylat_rational_to_decimal(q, &s));
    return take(s);
}

void print_poly(const ylat_poly* p, const std::string& format) {
    if (format == "json") {
        std::cout << poly_json(p) << '\n';
    } else if (format == "csv") {
        std::cout << "degree,coeff\n";
        const json coeffs = json::parse(poly_json(p));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            std::cout << i << ',' << coeffs[i].get<std::string>() << '\n';
    } else {
        std::cout << poly_text(p) << '\n';
    }
}

std::string monomial_text(const json& exps) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const int e = exps[i].get<int>();
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "x" + std::to_string(i + 1);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

void print_series(const ylat_series* s, const std::string& format) {
    char* raw = nullptr;
    check(ylat_series_to_json(s, &raw));
    const std::string text = take(raw);
    if (format == "json") {
        std::cout << text << '\n';
        return;
    }
    const json terms = json::parse(text);
    if (format == "csv")
        std::cout << "monomial,coeff\n";
    for (const auto& t : terms) {
        ylat_poly* p = nullptr;
        check(ylat_poly_from_json(t["coeff"].dump().c_str(), &p));
        Poly guard(p);
        if (format == "csv")
            std::cout << monomial_text(t["exponents"]) << ",\"" << poly_text(p) << "\"\n";
        else
            std::cout << monomial_text(t["exponents"]) << ": " << poly_text(p) << '\n';
    }
}

struct Options {
    std::string format = "text";
    std::string lambda;
    std::optional<std::string> mu;
    long k = 2;
    long m = 0;
    long n = 0;
    long trunc = 8;
    long max_k = 7;
    long max_sum = 8;
    long n_start = 0;
    long n_end = 0;
    long step = 1;
    std::string method = "direct";
    std::string target;
    ylat_verify_params vp{};
};

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

int cmd_rankpoly(const Options& o) {
    ylat_poly* p = nullptr;
    check(ylat_rankpoly(o.mu ? o.mu->c_str() : "", o.lambda.c_str(), &p));
    Poly guard(p);
    print_poly(p, o.format);
    return 0;
}

int cmd_count(const Options& o, bool by_shape) {
    if (by_shape) {
        char* s = nullptr;
        check(ylat_interval_count(o.mu ? o.mu->c_str() : "", o.lambda.c_str(), &s));
        const std::string count = take(s);
        if (o.format == "json")
            std::cout << json{{"count", count}}.dump() << '\n';
        else if (o.format == "csv")
            std::cout << "count\n" << count << '\n';
        else
            std::cout << count << '\n';
        return 0;
    }
    if (o.k < 1 || o.n < 0 || o.m < 0)
        throw UsageError("count needs k >= 1, n >= 0, m >= 0");
    char* c = nullptr;
    char* big = nullptr;
    check(ylat_c_kn(static_cast<size_t>(o.k), o.n, &c));
    const std::string small = take(c);
    check(ylat_C_kn(static_cast<size_t>(o.k), o.n, static_cast<int>(o.m), &big));
    const std::string total = take(big);
    if (o.format == "json")
        std::cout << json{{"k", o.k}, {"n", o.n}, {"m", o.m}, {"c", small}, {"C", total}}.dump() << '\n';
    else if (o.format == "csv")
        std::cout << "k,n,m,c,C\n" << o.k << ',' << o.n << ',' << o.m << ',' << small << ',' << total << '\n';
    else
        std::cout << "c = " << small << "\nC = " << total << '\n';
    return 0;
}

int cmd_gaussian(const Options& o) {
    ylat_poly* p = nullptr;
    check(ylat_gaussian(static_cast<int>(o.n), static_cast<int>(o.k), &p));
    Poly guard(p);
    print_poly(p, o.format);
    return 0;
}

int cmd_poincare(const Options& o) {
    ylat_poly* p = nullptr;
    check(ylat_poincare(o.lambda.c_str(), &p));
    Poly guard(p);
    print_poly(p, o.format);
    return 0;
}

int cmd_series(const Options& o) {
    if (o.k < 0 || o.trunc < 0)
        throw UsageError("series needs k >= 0 and trunc >= 0");
    const auto k = static_cast<size_t>(o.k);
    if (o.method == "xm") {
        char* s = nullptr;
        check(ylat_qk_xm_json(k, static_cast<int>(o.m), o.trunc, &s));
        const std::string text = take(s);
        if (o.format == "json") {
            std::cout << text << '\n';
            return 0;
        }
        const json coeffs = json::parse(text);
        if (o.format == "csv")
            std::cout << "n,coeff\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            std::cout << i << (o.format == "csv" ? "," : ": ") << coeffs[i].get<std::string>() << '\n';
        return 0;
    }
    ylat_series* s = nullptr;
    long max_degree = -1;
    if (o.method == "direct")
        check(ylat_qk_direct(k, o.trunc, &s));
    else if (o.method == "recursive")
        check(ylat_qk_recursive(k, o.trunc, &s));
    else
        check(ylat_dk_product(k, o.trunc, &s, &max_degree));
    Series guard(s);
    print_series(s, o.format);
    if (o.method == "numerator" && o.format == "text")
        std::cerr << "max degree " << max_degree << " of " << o.trunc << '\n';
    return 0;
}

int cmd_gk(const Options& o) {
    if (o.max_k < 1)
        throw UsageError("--max-k must be at least 1");
    json rows = json::array();
    if (o.format == "csv")
        std::cout << "k,G_k,decimal\n";
    for (long k = 1; k <= o.max_k; ++k) {
        ylat_rational* q = nullptr;
        check(ylat_gk(static_cast<size_t>(k), &q));
        Rational guard(q);
        const std::string exact = rational_string(q);
        const std::string dec = rational_decimal(q);
        if (o.format == "json")
            rows.push_back({{"k", k}, {"G_k", exact}, {"decimal", dec}});
        else if (o.format == "csv")
            std::cout << k << ',' << exact << ',' << dec << '\n';
        else
            std::cout << k << ", " << exact << ", " << dec << '\n';
    }
    if (o.format == "json")
        std::cout << rows.dump() << '\n';
    return 0;
}

int cmd_bkm(const Options& o) {
    if (o.max_sum < 0)
        throw UsageError("--max-sum must be nonnegative");
    json rows = json::array();
    if (o.format == "csv")
        std::cout << "k,m,B,decimal\n";
    for (long total = 0; total <= o.max_sum; ++total) {
        for (long k = 0; k <= total; ++k) {
            const long m = total - k;
            ylat_rational* q = nullptr;
            check(ylat_b_recursive(static_cast<size_t>(k), static_cast<int>(m), &q));
            Rational guard(q);
            const std::string exact = rational_string(q);
            const std::string dec = rational_decimal(q);
            if (o.format == "json")
                rows.push_back({{"k", k}, {"m", m}, {"B", exact}, {"decimal", dec}});
            else if (o.format == "csv")
                std::cout << k << ',' << m << ',' << exact << ',' << dec << '\n';
            else
                std::cout << "B(" << k << "," << m << ") = " << exact << "  (" << dec << ")\n";
        }
    }
    if (o.format == "json")
        std::cout << rows.dump() << '\n';
    return 0;
}

int cmd_asymptotics(const Options& o) {
    if (o.k < 1)
        throw UsageError("--k must be at least 1");
    const long start = o.n_start > 0 ? o.n_start : o.k;
    const long end = o.n_end > 0 ? o.n_end : start;
    ylat_table* t = nullptr;
    check(ylat_convergence_table(static_cast<size_t>(o.k), start, end, o.step, &t));
    Table guard(t);
    char* s = nullptr;
    if (o.format == "csv") {
        check(ylat_table_to_csv(t, &s));
        std::cout << take(s);
        return 0;
    }
    check(ylat_table_to_json(t, &s));
    const std::string text = take(s);
    if (o.format == "json") {
        std::cout << text << '\n';
        return 0;
    }
    const json table = json::parse(text);
    std::cout << "k = " << o.k << '\n';
    for (const auto& r : table["rows"])
        std::cout << "n=" << r["n"].get<long>() << "  c=" << r["c"].get<std::string>()
                  << "  C=" << r["C"].get<std::string>() << "  A=" << r["A"].get<std::string>()
                  << "  ratio=" << r["ratio"].get<std::string>() << " (" << r["ratio_decimal"].get<std::string>()
                  << ")\n";
    return 0;
}

int cmd_verify(const Options& o) {
    ylat_report* r = nullptr;
    check(ylat_verify(o.target.c_str(), &o.vp, &r));
    Report guard(r);
    const bool ok = ylat_report_ok(r) != 0;
    if (o.format == "json") {
        json out = {{"target", o.target},
                    {"ok", ok},
                    {"checks", ylat_report_checks(r)},
                    {"summary", ylat_report_summary(r)}};
        if (!ok)
            out["counterexample"] = ylat_report_counterexample(r);
        std::cout << out.dump() << '\n';
    } else if (o.format == "csv") {
        std::cout << "target,ok,checks\n" << o.target << ',' << (ok ? "true" : "false") << ','
                  << ylat_report_checks(r) << '\n';
    } else {
        std::cout << (ok ? "OK " : "FAIL ") << o.target << ": " << ylat_report_summary(r) << '\n';
        if (!ok)
            std::cout << "counterexample: " << ylat_report_counterexample(r) << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank generating functions of intervals in Young's lattice"};
    app.require_subcommand(1);
    Options o;
    ylat_verify_params_init(&o.vp);

    auto* rankpoly = app.add_subcommand("rankpoly", "P_{mu,lambda}(y)");
    rankpoly->add_option("--lambda", o.lambda, "Upper partition, e.g. 5,5,4,2,2")->required();
    rankpoly->add_option("--mu", o.mu, "Lower partition (default empty)");
    add_format(rankpoly, o);

    auto* count = app.add_subcommand("count", "#[mu,lambda], or c_{k,n} and C^m_{k,n}");
    auto* count_lambda = count->add_option("--lambda", o.lambda, "Upper partition");
    count->add_option("--mu", o.mu, "Lower partition (default empty)")->needs(count_lambda);
    auto* count_k = count->add_option("--k", o.k, "Number of parts");
    auto* count_n = count->add_option("--n", o.n, "Weighted rank");
    count->add_option("--m", o.m, "Weight shift");
    count_lambda->excludes(count_k)->excludes(count_n);
    add_format(count, o);

    auto* gaussian = app.add_subcommand("gaussian", "[n+k choose k]_y");
    gaussian->add_option("--n", o.n)->required();
    gaussian->add_option("--k", o.k)->required();
    add_format(gaussian, o);

    auto* poincare = app.add_subcommand("poincare", "P_lambda(y^2)");
    poincare->add_option("--lambda", o.lambda)->required();
    add_format(poincare, o);

    auto* series = app.add_subcommand("series", "Truncated Q_k");
    series->add_option("--k", o.k)->required();
    series->add_option("--trunc", o.trunc, "Truncation order")->capture_default_str();
    series->add_option("--method", o.method, "direct, recursive, numerator (Q_k * D_k) or xm")
        ->check(CLI::IsMember({"direct", "recursive", "numerator", "xm"}))
        ->capture_default_str();
    series->add_option("--m", o.m, "Shift for --method xm");
    add_format(series, o);

    auto* gk = app.add_subcommand("gk", "Growth constants G_1..G_max_k");
    gk->add_option("--max-k", o.max_k)->capture_default_str();
    add_format(gk, o);

    auto* bkm = app.add_subcommand("bkm", "B(k,m) for k + m <= max-sum");
    bkm->add_option("--max-sum", o.max_sum)->capture_default_str();
    add_format(bkm, o);

    auto* asym = app.add_subcommand("asymptotics", "A_{k,n} against G_k n^k");
    asym->add_option("--k", o.k)->required();
    asym->add_option("--n-start", o.n_start);
    asym->add_option("--n-end", o.n_end);
    asym->add_option("--step", o.step)->capture_default_str();
    add_format(asym, o);

    auto* verify = app.add_subcommand("verify", "Check an identity family");
    verify->add_option("target", o.target)
        ->required()
        ->check(CLI::IsMember({"recursion", "xm", "denominator", "decomposition", "bkm", "gaussian", "lemmas"}));
    verify->add_option("--k", o.vp.k);
    verify->add_option("--m", o.vp.m);
    verify->add_option("--trunc", o.vp.trunc);
    verify->add_option("--max-sum", o.vp.max_sum);
    verify->add_option("--max-n", o.vp.max_n);
    verify->add_option("--max-k", o.vp.max_k);
    verify->add_option("--max-rank", o.vp.max_rank);
    add_format(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*rankpoly)
            return cmd_rankpoly(o);
        if (*count) {
            const bool by_shape = count_lambda->count() > 0;
            if (!by_shape && (count_k->count() == 0 || count_n->count() == 0))
                throw UsageError("count needs --lambda, or both --k and --n");
            return cmd_count(o, by_shape);
        }
        if (*gaussian)
            return cmd_gaussian(o);
        if (*poincare)
            return cmd_poincare(o);
        if (*series)
            return cmd_series(o);
        if (*gk)
            return cmd_gk(o);
        if (*bkm)
            return cmd_bkm(o);
        if (*asym)
            return cmd_asymptotics(o);
        if (*verify)
            return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
