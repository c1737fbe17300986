#include "cotop/cotop.h"

#include "cotop/error.hpp"
#include "cotop/expr.hpp"
#include "cotop/golomb.hpp"
#include "cotop/json_io.hpp"
#include "cotop/oracle.hpp"
#include "cotop/primefam.hpp"
#include "cotop/topology.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct cotop_set {
    cotop::EPSet value;
};

struct cotop_family {
    cotop::primefam::Family value;
};

struct cotop_witness_table {
    cotop::primefam::WitnessTable value;
};

namespace {

using cotop::EPSet;
using cotop::u64;
using cotop::json_io::ordered_json;

thread_local std::string g_last_error;
thread_local std::size_t g_last_offset = static_cast<std::size_t>(-1);

cotop_status status_of(cotop::ErrorKind kind) {
    switch (kind) {
        case cotop::ErrorKind::Range: return COTOP_ERR_RANGE;
        case cotop::ErrorKind::Precondition: return COTOP_ERR_PRECONDITION;
        case cotop::ErrorKind::Parse: return COTOP_ERR_PARSE;
        case cotop::ErrorKind::Semantic: return COTOP_ERR_SEMANTIC;
        case cotop::ErrorKind::Io: return COTOP_ERR_IO;
    }
    return COTOP_ERR_INTERNAL;
}

template <class Fn>
cotop_status guarded(Fn&& fn) {
    g_last_error.clear();
    g_last_offset = static_cast<std::size_t>(-1);
    try {
        fn();
        return COTOP_OK;
    } catch (const cotop::expr::ParseError& e) {
        g_last_error = e.what();
        g_last_offset = e.offset();
        return status_of(e.kind());
    } catch (const cotop::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return COTOP_ERR_RANGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return COTOP_ERR_INTERNAL;
    }
}

cotop_status null_arg(const char* name) {
    g_last_error = std::string("null argument: ") + name;
    g_last_offset = static_cast<std::size_t>(-1);
    return COTOP_ERR_NULL_ARGUMENT;
}

#define COTOP_REQUIRE(ptr)                   \
    do {                                     \
        if ((ptr) == nullptr) return null_arg(#ptr); \
    } while (0)

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cotop_set* wrap(EPSet s) { return new cotop_set{std::move(s)}; }

template <class Op>
cotop_status unary(const cotop_set* s, cotop_set** out, Op op) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(op(s->value)); });
}

template <class Op>
cotop_status binary(const cotop_set* s, const cotop_set* t, cotop_set** out, Op op) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(t);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(op(s->value, t->value)); });
}

template <class Pred>
cotop_status predicate(const cotop_set* s, int* out, Pred pred) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = pred(s->value) ? 1 : 0; });
}

ordered_json curated_json(const cotop::oracle::CuratedResult& r) {
    ordered_json j;
    j["case"] = r.source->name;
    j["expression"] = r.source->expression;
    j["closure"] = cotop::json_io::to_json(r.closure);
    j["open"] = cotop::json_io::to_json(r.open);
    j["golomb"] = cotop::json_io::to_json(r.golomb);
    j["clean"] = r.clean();
    return j;
}

}  // namespace

extern "C" {

const char* cotop_last_error(void) { return g_last_error.c_str(); }

size_t cotop_last_error_offset(void) { return g_last_offset; }

const char* cotop_status_name(cotop_status status) {
    switch (status) {
        case COTOP_OK: return "ok";
        case COTOP_ERR_RANGE: return "range error";
        case COTOP_ERR_PRECONDITION: return "precondition error";
        case COTOP_ERR_PARSE: return "parse error";
        case COTOP_ERR_SEMANTIC: return "semantic error";
        case COTOP_ERR_IO: return "io error";
        case COTOP_ERR_NULL_ARGUMENT: return "null argument";
        case COTOP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void cotop_string_free(char* s) { std::free(s); }

cotop_status cotop_set_parse(const char* text, cotop_set** out) {
    COTOP_REQUIRE(text);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(cotop::expr::evaluate(cotop::expr::parse_expr(text))); });
}

cotop_status cotop_set_from_json(const char* json, cotop_set** out) {
    COTOP_REQUIRE(json);
    COTOP_REQUIRE(out);
    return guarded([&] {
        ordered_json j;
        try {
            j = ordered_json::parse(json);
        } catch (const nlohmann::json::exception& e) {
            cotop::fail(cotop::ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
        }
        *out = wrap(cotop::json_io::set_from_json(j));
    });
}

cotop_status cotop_set_periodic(uint64_t m, const uint64_t* residues, size_t count, cotop_set** out) {
    if (count > 0) COTOP_REQUIRE(residues);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(EPSet::periodic(m, {residues, count})); });
}

cotop_status cotop_set_explicit(const uint64_t* elems, size_t count, cotop_set** out) {
    if (count > 0) COTOP_REQUIRE(elems);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(EPSet::explicit_set({elems, count})); });
}

cotop_status cotop_set_clone(const cotop_set* s, cotop_set** out) {
    return unary(s, out, [](const EPSet& v) { return v; });
}

void cotop_set_free(cotop_set* s) { delete s; }

cotop_status cotop_set_complement(const cotop_set* s, cotop_set** out) {
    return unary(s, out, [](const EPSet& v) { return cotop::complement(v); });
}

cotop_status cotop_set_intersect(const cotop_set* s, const cotop_set* t, cotop_set** out) {
    return binary(s, t, out, [](const EPSet& a, const EPSet& b) { return cotop::intersect(a, b); });
}

cotop_status cotop_set_union(const cotop_set* s, const cotop_set* t, cotop_set** out) {
    return binary(s, t, out, [](const EPSet& a, const EPSet& b) { return cotop::unite(a, b); });
}

cotop_status cotop_set_difference(const cotop_set* s, const cotop_set* t, cotop_set** out) {
    return binary(s, t, out, [](const EPSet& a, const EPSet& b) { return cotop::difference(a, b); });
}

cotop_status cotop_set_contains(const cotop_set* s, uint64_t x, int* out) {
    return predicate(s, out, [x](const EPSet& v) { return v.contains(cotop::arith::require_pos(x, "element")); });
}

cotop_status cotop_set_equals(const cotop_set* s, const cotop_set* t, int* out) {
    COTOP_REQUIRE(t);
    return predicate(s, out, [t](const EPSet& v) { return v == t->value; });
}

cotop_status cotop_set_is_empty(const cotop_set* s, int* out) {
    return predicate(s, out, [](const EPSet& v) { return v.empty(); });
}

cotop_status cotop_set_is_finite(const cotop_set* s, int* out) {
    return predicate(s, out, [](const EPSet& v) { return v.finite(); });
}

cotop_status cotop_set_enumerate(const cotop_set* s, uint64_t* buf, size_t k, size_t* written) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(written);
    if (k > 0) COTOP_REQUIRE(buf);
    return guarded([&] {
        const auto elems = s->value.enumerate(k);
        std::copy(elems.begin(), elems.end(), buf);
        *written = elems.size();
    });
}

cotop_status cotop_set_density(const cotop_set* s, uint64_t* numerator, uint64_t* denominator) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(numerator);
    COTOP_REQUIRE(denominator);
    return guarded([&] {
        const auto f = s->value.natural_density();
        *numerator = f.numerator;
        *denominator = f.denominator;
    });
}

cotop_status cotop_set_render(const cotop_set* s, char** out) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = dup_string(s->value.to_string()); });
}

cotop_status cotop_set_json(const cotop_set* s, char** out) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = dup_string(cotop::json_io::to_json(s->value).dump()); });
}

cotop_status cotop_sigma(uint64_t n, cotop_set** out) {
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(cotop::topo::sigma(n)); });
}

cotop_status cotop_sigma_decomposition_json(uint64_t n, char** out) {
    COTOP_REQUIRE(out);
    return guarded([&] {
        const auto d = cotop::topo::sigma_decomposition(n);
        ordered_json j;
        j["n"] = n;
        j["whole_space"] = d.whole_space;
        j["progressions"] = ordered_json::array();
        for (const auto& p : d.progressions) {
            j["progressions"].push_back({{"first", p.first}, {"step", p.step}});
        }
        *out = dup_string(j.dump());
    });
}

cotop_status cotop_closure_singleton(uint64_t n, cotop_set** out) {
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(cotop::topo::closure_singleton(n)); });
}

cotop_status cotop_closure(const cotop_set* s, cotop_set** out) {
    return unary(s, out, [](const EPSet& v) { return cotop::topo::closure(v); });
}

cotop_status cotop_interior(const cotop_set* s, cotop_set** out) {
    return unary(s, out, [](const EPSet& v) { return cotop::topo::interior(v); });
}

cotop_status cotop_boundary(const cotop_set* s, cotop_set** out) {
    return unary(s, out, [](const EPSet& v) { return cotop::topo::boundary(v); });
}

cotop_status cotop_classify(const cotop_set* s, cotop_classification* out) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    return guarded([&] {
        const auto r = cotop::topo::classify(s->value);
        *out = {r.is_open, r.is_closed, r.is_dense, r.is_nowhere_dense};
    });
}

cotop_status cotop_classify_json(const cotop_set* s, char** out) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    return guarded([&] {
        ordered_json j;
        j["set"] = cotop::json_io::to_json(s->value);
        j["text"] = s->value.to_string();
        const auto r = cotop::topo::classify(s->value);
        const auto flags = cotop::json_io::to_json(r);
        for (const auto& [k, v] : flags.items()) j[k] = v;
        j["closure_text"] = r.closure.to_string();
        j["interior_text"] = r.interior.to_string();
        j["boundary_text"] = r.boundary.to_string();
        *out = dup_string(j.dump());
    });
}

cotop_status cotop_golomb_basic(uint64_t a, uint64_t b, cotop_set** out) {
    COTOP_REQUIRE(out);
    return guarded([&] { *out = wrap(cotop::golomb::golomb_basic(a, b)); });
}

cotop_status cotop_is_golomb_open(const cotop_set* s, int* out) {
    return predicate(s, out, [](const EPSet& v) { return cotop::golomb::is_golomb_open(v); });
}

cotop_status cotop_coarseness_json(uint64_t n_max, char** out, int* demonstrated) {
    COTOP_REQUIRE(out);
    COTOP_REQUIRE(demonstrated);
    return guarded([&] {
        const auto r = cotop::golomb::coarseness_demo(n_max);
        auto j = cotop::json_io::to_json(r);
        j["witness_text"] = r.witness.to_string();
        *out = dup_string(j.dump());
        *demonstrated = r.demonstrates_strictness() ? 1 : 0;
    });
}

cotop_status cotop_family_from_name(const char* name, cotop_family** out) {
    COTOP_REQUIRE(name);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = new cotop_family{cotop::primefam::Family::from_name(name)}; });
}

cotop_status cotop_family_load(const char* path, cotop_family** out) {
    COTOP_REQUIRE(path);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = new cotop_family{cotop::primefam::Family::load_custom(path)}; });
}

void cotop_family_free(cotop_family* f) { delete f; }

cotop_status cotop_family_enumerate(const cotop_family* f, uint64_t* buf, size_t count, size_t* written,
                                    int* exhausted) {
    COTOP_REQUIRE(f);
    COTOP_REQUIRE(buf);
    COTOP_REQUIRE(written);
    COTOP_REQUIRE(exhausted);
    return guarded([&] {
        const auto e = cotop::primefam::family_enumerate(f->value, count);
        std::copy(e.members.begin(), e.members.end(), buf);
        *written = e.members.size();
        *exhausted = e.exhausted ? 1 : 0;
    });
}

cotop_status cotop_probe(const cotop_family* f, uint64_t n_max, uint64_t search_bound,
                         cotop_witness_table** out) {
    COTOP_REQUIRE(f);
    COTOP_REQUIRE(out);
    return guarded([&] {
        *out = new cotop_witness_table{cotop::primefam::density_probe(f->value, n_max, search_bound)};
    });
}

void cotop_witness_table_free(cotop_witness_table* t) { delete t; }

cotop_status cotop_witness_table_size(const cotop_witness_table* t, size_t* out) {
    COTOP_REQUIRE(t);
    COTOP_REQUIRE(out);
    *out = t->value.rows.size();
    return COTOP_OK;
}

cotop_status cotop_witness_table_row(const cotop_witness_table* t, size_t index, uint64_t* n,
                                     uint64_t* witness, int* resolved, uint64_t* bound) {
    COTOP_REQUIRE(t);
    COTOP_REQUIRE(n);
    COTOP_REQUIRE(witness);
    COTOP_REQUIRE(resolved);
    COTOP_REQUIRE(bound);
    return guarded([&] {
        if (index >= t->value.rows.size()) cotop::fail(cotop::ErrorKind::Range, "row index out of range");
        const auto& row = t->value.rows[index];
        *n = row.n;
        *witness = row.witness.value_or(0);
        *resolved = row.witness ? 1 : 0;
        *bound = row.search_bound;
    });
}

cotop_status cotop_witness_table_json(const cotop_witness_table* t, char** out) {
    COTOP_REQUIRE(t);
    COTOP_REQUIRE(out);
    return guarded([&] { *out = dup_string(cotop::json_io::to_json(t->value).dump()); });
}

cotop_status cotop_next_new_prime(const uint64_t* known, size_t count, uint64_t* out) {
    if (count > 0) COTOP_REQUIRE(known);
    COTOP_REQUIRE(out);
    return guarded([&] {
        const std::vector<u64> primes(known, known + count);
        *out = cotop::primefam::next_new_prime(primes);
    });
}

cotop_status cotop_partition_check(uint64_t n, int* out) {
    COTOP_REQUIRE(out);
    return guarded([&] { *out = cotop::primefam::partition_check(n) ? 1 : 0; });
}

cotop_status cotop_oracle_closure_json(const cotop_set* s, uint64_t window, uint64_t prime_bound,
                                       size_t subset_size, char** out, int* agrees) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    COTOP_REQUIRE(agrees);
    return guarded([&] {
        const auto v = cotop::oracle::oracle_closure_check(s->value, window, prime_bound, subset_size);
        *out = dup_string(cotop::json_io::to_json(v).dump());
        *agrees = v.agrees() ? 1 : 0;
    });
}

cotop_status cotop_oracle_open_json(const cotop_set* s, size_t sample, uint64_t n_bound, char** out,
                                    int* agrees) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    COTOP_REQUIRE(agrees);
    return guarded([&] {
        const auto v = cotop::oracle::oracle_open_check(s->value, sample, n_bound);
        *out = dup_string(cotop::json_io::to_json(v).dump());
        *agrees = v.agrees() ? 1 : 0;
    });
}

cotop_status cotop_oracle_golomb_json(const cotop_set* s, size_t sample, uint64_t b_bound, char** out,
                                      int* agrees) {
    COTOP_REQUIRE(s);
    COTOP_REQUIRE(out);
    COTOP_REQUIRE(agrees);
    return guarded([&] {
        const auto v = cotop::oracle::oracle_golomb_check(s->value, sample, b_bound);
        *out = dup_string(cotop::json_io::to_json(v).dump());
        *agrees = v.agrees() ? 1 : 0;
    });
}

cotop_status cotop_verify_json(cotop_level level, char** out, int* all_pass) {
    COTOP_REQUIRE(out);
    COTOP_REQUIRE(all_pass);
    return guarded([&] {
        using cotop::primefam::Level;
        const Level lvl = level == COTOP_LEVEL_FULL ? Level::Full : Level::Quick;
        const auto chain = cotop::primefam::verify_density_chain(lvl);
        const auto& suite = cotop::oracle::curated_suite();
        const std::size_t cases = lvl == Level::Full ? suite.size() : 10;

        ordered_json j;
        j["level"] = lvl == Level::Full ? "full" : "quick";
        bool ok = chain.all_pass();
        j["chain"] = cotop::json_io::to_json(chain);
        j["oracle"] = ordered_json::array();
        for (std::size_t i = 0; i < cases; ++i) {
            const auto r = cotop::oracle::run_curated_case(suite[i]);
            ok = ok && r.clean();
            j["oracle"].push_back(curated_json(r));
        }
        j["all_pass"] = ok;
        *out = dup_string(j.dump());
        *all_pass = ok ? 1 : 0;
    });
}

}  // extern "C"
