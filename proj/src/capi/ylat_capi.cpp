#include "ylat/ylat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ylat/counts.hpp"
#include "ylat/error.hpp"
#include "ylat/partition.hpp"
#include "ylat/rankpoly.hpp"
#include "ylat/serialize.hpp"
#include "ylat/series.hpp"
#include "ylat/verify.hpp"

struct ylat_poly {
    ylat::YPoly value;
};
struct ylat_rational {
    ylat::BigRational value;
};
struct ylat_series {
    ylat::MultiSeries value;
};
struct ylat_table {
    std::size_t k;
    std::vector<ylat::ConvergenceRow> rows;
};
struct ylat_report {
    ylat::VerifyReport value;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ylat::Partition partition_arg(const char* text) { return text ? ylat::Partition::parse(text) : ylat::Partition{}; }

template <class T>
void require(const T* p, const char* what) {
    if (!p)
        throw ylat::InvalidArgument(std::string(what) + " must not be NULL");
}

template <class Fn>
ylat_status guarded(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return YLAT_OK;
    } catch (const ylat::InvalidArgument& e) {
        last_error = e.what();
        return YLAT_ERR_INVALID_ARGUMENT;
    } catch (const ylat::PreconditionError& e) {
        last_error = e.what();
        return YLAT_ERR_PRECONDITION;
    } catch (const ylat::ArithmeticError& e) {
        last_error = e.what();
        return YLAT_ERR_ARITHMETIC;
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return YLAT_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return YLAT_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return YLAT_ERR_INTERNAL;
    }
}

template <class Handle, class Value>
ylat_status emit(Handle** out, Value&& value) {
    *out = new Handle{std::forward<Value>(value)};
    return YLAT_OK;
}

}  // namespace

extern "C" {

const char* ylat_version(void) { return "0.1.0"; }

const char* ylat_last_error(void) { return last_error.c_str(); }

const char* ylat_status_name(ylat_status status) {
    switch (status) {
        case YLAT_OK: return "ok";
        case YLAT_ERR_INVALID_ARGUMENT: return "invalid argument";
        case YLAT_ERR_PRECONDITION: return "precondition violated";
        case YLAT_ERR_ARITHMETIC: return "arithmetic error";
        case YLAT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ylat_string_free(char* s) { std::free(s); }

ylat_status ylat_contains(const char* mu, const char* lambda, int* out) {
    return guarded([&] {
        require(out, "out");
        *out = ylat::contains(partition_arg(mu), partition_arg(lambda)) ? 1 : 0;
    });
}

ylat_status ylat_partition_normalize(const char* text, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(partition_arg(text).to_string());
    });
}

ylat_status ylat_rankpoly(const char* mu, const char* lambda, ylat_poly** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::rank_gen_poly(partition_arg(mu), partition_arg(lambda)));
    });
}

ylat_status ylat_gaussian(int n, int k, ylat_poly** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::gaussian_poly(n, k));
    });
}

ylat_status ylat_poincare(const char* lambda, ylat_poly** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::poincare_poly(partition_arg(lambda)));
    });
}

ylat_status ylat_interval_count(const char* mu, const char* lambda, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(ylat::interval_count(partition_arg(mu), partition_arg(lambda)).get_str());
    });
}

long ylat_poly_degree(const ylat_poly* p) { return p ? p->value.degree() : -1; }

ylat_status ylat_poly_coeff(const ylat_poly* p, size_t i, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = dup_string(p->value.coeff(i).get_str());
    });
}

ylat_status ylat_poly_to_text(const ylat_poly* p, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = dup_string(p->value.to_string());
    });
}

ylat_status ylat_poly_to_json(const ylat_poly* p, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = dup_string(ylat::ypoly_to_json(p->value).dump());
    });
}

ylat_status ylat_poly_from_json(const char* json, ylat_poly** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        emit(out, ylat::ypoly_from_json(nlohmann::json::parse(json)));
    });
}

int ylat_poly_equal(const ylat_poly* a, const ylat_poly* b) { return a && b && a->value == b->value ? 1 : 0; }

void ylat_poly_free(ylat_poly* p) { delete p; }

ylat_status ylat_qk_direct(size_t k, long trunc, ylat_series** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::qk_direct(k, trunc));
    });
}

ylat_status ylat_qk_recursive(size_t k, long trunc, ylat_series** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::qk_recursive(k, trunc));
    });
}

ylat_status ylat_dk_product(size_t k, long trunc, ylat_series** out, long* max_degree) {
    return guarded([&] {
        require(out, "out");
        auto report = ylat::dk_product_check(k, trunc);
        if (max_degree)
            *max_degree = report.max_degree;
        emit(out, std::move(report.product));
    });
}

ylat_status ylat_qk_xm_json(size_t k, int m, long trunc, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(ylat::uniseries_to_json(ylat::qk_xm(k, m, trunc)).dump());
    });
}

size_t ylat_series_nvars(const ylat_series* s) { return s ? s->value.nvars() : 0; }
long ylat_series_trunc(const ylat_series* s) { return s ? s->value.trunc() : -1; }
size_t ylat_series_term_count(const ylat_series* s) { return s ? s->value.size() : 0; }

ylat_status ylat_series_to_json(const ylat_series* s, char** out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = dup_string(ylat::series_to_json(s->value).dump());
    });
}

ylat_status ylat_series_from_json(const char* json, size_t nvars, long trunc, ylat_series** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        emit(out, ylat::series_from_json(nlohmann::json::parse(json), nvars, trunc));
    });
}

int ylat_series_equal(const ylat_series* a, const ylat_series* b) { return a && b && a->value == b->value ? 1 : 0; }

void ylat_series_free(ylat_series* s) { delete s; }

ylat_status ylat_c_kn(size_t k, long n, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(ylat::c_kn(k, n).get_str());
    });
}

ylat_status ylat_C_kn(size_t k, long n, int m, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(ylat::C_kn(k, n, m).get_str());
    });
}

ylat_status ylat_A_kn(size_t k, long n, ylat_rational** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::A_kn(k, n));
    });
}

ylat_status ylat_A_le_kn(size_t k, long n, ylat_rational** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::A_le_kn(k, n));
    });
}

ylat_status ylat_b_recursive(size_t k, int m, ylat_rational** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::b_recursive(k, m));
    });
}

ylat_status ylat_b_direct(size_t k, int m, ylat_rational** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::b_direct(k, m));
    });
}

ylat_status ylat_gk(size_t k, ylat_rational** out) {
    return guarded([&] {
        require(out, "out");
        emit(out, ylat::g_k(k));
    });
}

ylat_status ylat_rational_to_string(const ylat_rational* q, char** out) {
    return guarded([&] {
        require(q, "rational");
        require(out, "out");
        *out = dup_string(q->value.to_string());
    });
}

ylat_status ylat_rational_numerator(const ylat_rational* q, char** out) {
    return guarded([&] {
        require(q, "rational");
        require(out, "out");
        *out = dup_string(q->value.numerator().get_str());
    });
}

ylat_status ylat_rational_denominator(const ylat_rational* q, char** out) {
    return guarded([&] {
        require(q, "rational");
        require(out, "out");
        *out = dup_string(q->value.denominator().get_str());
    });
}

ylat_status ylat_rational_to_decimal(const ylat_rational* q, char** out) {
    return guarded([&] {
        require(q, "rational");
        require(out, "out");
        *out = dup_string(ylat::to_decimal(q->value));
    });
}

ylat_status ylat_rational_parse(const char* text, ylat_rational** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        emit(out, ylat::BigRational::parse(text));
    });
}

int ylat_rational_equal(const ylat_rational* a, const ylat_rational* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

void ylat_rational_free(ylat_rational* q) { delete q; }

ylat_status ylat_convergence_table(size_t k, long n_start, long n_end, long step, ylat_table** out) {
    return guarded([&] {
        require(out, "out");
        if (k < 1)
            throw ylat::InvalidArgument("k must be at least 1");
        if (step < 1 || n_start < static_cast<long>(k) || n_end < n_start)
            throw ylat::InvalidArgument("need k <= n_start <= n_end and step >= 1");
        std::vector<long> ns;
        for (long n = n_start; n <= n_end; n += step)
            ns.push_back(n);
        *out = new ylat_table{k, ylat::convergence_table(k, ns)};
    });
}

size_t ylat_table_rows(const ylat_table* t) { return t ? t->rows.size() : 0; }

ylat_status ylat_table_ratio(const ylat_table* t, size_t row, ylat_rational** out) {
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        if (row >= t->rows.size())
            throw ylat::InvalidArgument("table row out of range");
        emit(out, t->rows[row].ratio);
    });
}

ylat_status ylat_table_to_csv(const ylat_table* t, char** out) {
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        *out = dup_string(ylat::convergence_csv(t->rows));
    });
}

ylat_status ylat_table_to_json(const ylat_table* t, char** out) {
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        *out = dup_string(ylat::convergence_json(t->k, t->rows).dump());
    });
}

void ylat_table_free(ylat_table* t) { delete t; }

void ylat_verify_params_init(ylat_verify_params* params) {
    if (!params)
        return;
    *params = ylat_verify_params{2, 0, 8, 8, 6, 6, 8};
}

ylat_status ylat_verify(const char* target, const ylat_verify_params* params, ylat_report** out) {
    return guarded([&] {
        require(target, "target");
        require(out, "out");
        ylat_verify_params p;
        ylat_verify_params_init(&p);
        if (params)
            p = *params;
        auto nonneg = [](long v, const char* name) {
            if (v < 0)
                throw ylat::InvalidArgument(std::string(name) + " must be nonnegative");
            return v;
        };
        const std::string t = target;
        ylat::VerifyReport rep;
        if (t == "recursion") {
            if (p.k < 1)
                throw ylat::InvalidArgument("k must be at least 1");
            rep = ylat::verify_recursion(static_cast<std::size_t>(p.k), nonneg(p.trunc, "trunc"));
        } else if (t == "xm") {
            if (p.k < 1)
                throw ylat::InvalidArgument("k must be at least 1");
            rep = ylat::verify_xm(static_cast<std::size_t>(p.k), static_cast<int>(nonneg(p.m, "m")),
                                  nonneg(p.trunc, "trunc"));
        } else if (t == "denominator") {
            if (p.k < 1)
                throw ylat::InvalidArgument("k must be at least 1");
            rep = ylat::verify_denominator(static_cast<std::size_t>(p.k), nonneg(p.trunc, "trunc"));
        } else if (t == "decomposition") {
            rep = ylat::verify_decomposition(static_cast<std::size_t>(nonneg(p.k, "k")),
                                             static_cast<int>(nonneg(p.m, "m")));
        } else if (t == "bkm") {
            rep = ylat::verify_bkm(static_cast<std::size_t>(nonneg(p.max_sum, "max_sum")));
        } else if (t == "gaussian") {
            rep = ylat::verify_gaussian(static_cast<int>(nonneg(p.max_n, "max_n")),
                                        static_cast<int>(nonneg(p.max_k, "max_k")));
        } else if (t == "lemmas") {
            rep = ylat::verify_lemmas(nonneg(p.max_rank, "max_rank"));
        } else {
            throw ylat::InvalidArgument("unknown verify target '" + t + "'");
        }
        *out = new ylat_report{std::move(rep)};
    });
}

int ylat_report_ok(const ylat_report* r) { return r && r->value.ok ? 1 : 0; }
size_t ylat_report_checks(const ylat_report* r) { return r ? r->value.checks : 0; }
const char* ylat_report_summary(const ylat_report* r) { return r ? r->value.summary.c_str() : ""; }
const char* ylat_report_counterexample(const ylat_report* r) { return r ? r->value.counterexample.c_str() : ""; }
void ylat_report_free(ylat_report* r) { delete r; }

}  // extern "C"
