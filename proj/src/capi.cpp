#include "chromsum/chromsum.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "chromsum/json_io.hpp"
#include "chromsum/lemmas.hpp"
#include "chromsum/oracle.hpp"
#include "chromsum/repcount.hpp"
#include "chromsum/structure.hpp"

struct cs_tuple {
    chromsum::SetTuple value;
    std::vector<std::string> labels;
};

struct cs_structure {
    chromsum::StructureResult value;
};

namespace {

using namespace chromsum;

thread_local std::string last_error;

struct InvalidArgument {
    std::string message;
};

cs_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptySet: return CS_ERR_EMPTY_SET;
        case ErrorKind::NotNormalized: return CS_ERR_NOT_NORMALIZED;
        case ErrorKind::DegenerateTuple: return CS_ERR_DEGENERATE_TUPLE;
        case ErrorKind::Domain: return CS_ERR_DOMAIN;
        case ErrorKind::Dimension: return CS_ERR_DIMENSION;
        case ErrorKind::DegenerateAlphabet: return CS_ERR_DEGENERATE_ALPHABET;
        case ErrorKind::Bound: return CS_ERR_BOUND;
        case ErrorKind::Budget: return CS_ERR_BUDGET;
        case ErrorKind::SearchExhausted: return CS_ERR_SEARCH_EXHAUSTED;
        case ErrorKind::ColorOverlap: return CS_ERR_COLOR_OVERLAP;
        case ErrorKind::VerificationFailed: return CS_ERR_VERIFICATION;
        case ErrorKind::Overflow: return CS_ERR_OVERFLOW;
        case ErrorKind::Parse: return CS_ERR_PARSE;
    }
    return CS_ERR_INTERNAL;
}

template <class Fn>
cs_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        last_error.clear();
        return CS_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const InvalidArgument& e) {
        last_error = e.message;
        return CS_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CS_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CS_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return CS_ERR_INTERNAL;
    }
}

template <class T>
void require(const T* p, const char* name) {
    if (p == nullptr) throw InvalidArgument{std::string(name) + " is NULL"};
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json::json& j, char** out) { *out = dup_string(j.dump()); }

HVec hvec_from(const int64_t* h, std::size_t len) {
    if (len > 0) require(h, "h");
    return HVec(std::vector<Int>(h, h + len));
}

FiniteSet set_from(const int64_t* b, std::size_t len, const char* name) {
    if (len == 0) throw InvalidArgument{std::string(name) + " must be nonempty"};
    require(b, name);
    return FiniteSet::make(std::span<const Int>(b, len));
}

std::optional<BigCount> cap_from(const char* cap) {
    if (cap == nullptr) return std::nullopt;
    return json::decode_count(json::json(std::string(cap)));
}

}  // namespace

extern "C" {

const char* cs_status_name(cs_status status) {
    switch (status) {
        case CS_OK: return "OK";
        case CS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case CS_ERR_PARSE: return "ParseError";
        case CS_ERR_EMPTY_SET: return "EmptySet";
        case CS_ERR_DIMENSION: return "DimensionError";
        case CS_ERR_NOT_NORMALIZED: return "NotNormalized";
        case CS_ERR_DEGENERATE_TUPLE: return "DegenerateTuple";
        case CS_ERR_DOMAIN: return "DomainError";
        case CS_ERR_DEGENERATE_ALPHABET: return "DegenerateAlphabet";
        case CS_ERR_BOUND: return "BoundError";
        case CS_ERR_BUDGET: return "BudgetError";
        case CS_ERR_SEARCH_EXHAUSTED: return "SearchExhausted";
        case CS_ERR_COLOR_OVERLAP: return "ColorOverlap";
        case CS_ERR_VERIFICATION: return "VerificationFailed";
        case CS_ERR_OVERFLOW: return "OverflowError";
        case CS_ERR_INTERNAL: return "InternalError";
    }
    return "Unknown";
}

const char* cs_last_error(void) { return last_error.c_str(); }

void cs_free_string(char* s) { std::free(s); }

const char* cs_version(void) { return "0.1.0"; }

// ---------------------------------------------------------------- tuples

cs_status cs_tuple_from_json(const char* text, cs_tuple** out) {
    return guarded([&] {
        require(text, "json");
        require(out, "out");
        auto t = std::make_unique<cs_tuple>();
        t->value = json::decode_tuple(json::parse(text), &t->labels);
        *out = t.release();
    });
}

cs_status cs_tuple_from_arrays(const int64_t* const* sets, const size_t* sizes, size_t q, cs_tuple** out) {
    return guarded([&] {
        require(out, "out");
        if (q > 0) {
            require(sets, "sets");
            require(sizes, "sizes");
        }
        std::vector<FiniteSet> v;
        for (size_t i = 0; i < q; ++i) {
            if (sizes[i] == 0) {
                v.push_back(FiniteSet::empty());
                continue;
            }
            require(sets[i], "sets[i]");
            v.push_back(FiniteSet::make(std::span<const Int>(sets[i], sizes[i])));
        }
        *out = new cs_tuple{SetTuple(std::move(v)), {}};
    });
}

void cs_tuple_free(cs_tuple* tuple) { delete tuple; }

size_t cs_tuple_q(const cs_tuple* tuple) { return tuple ? tuple->value.q() : 0; }

int cs_tuple_is_normalized(const cs_tuple* tuple) { return tuple && tuple->value.normalized() ? 1 : 0; }

cs_status cs_tuple_to_json(const cs_tuple* tuple, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        emit(json::encode(tuple->value, tuple->labels), out_json);
    });
}

cs_status cs_tuple_normalize(const cs_tuple* tuple, cs_tuple** normalized, char** record_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(normalized, "normalized");
        require(record_json, "record_json");
        auto [norm, record] = normalize_tuple(tuple->value);
        auto handle = std::make_unique<cs_tuple>(cs_tuple{std::move(norm), tuple->labels});
        emit(json::encode(record), record_json);
        *normalized = handle.release();
    });
}

cs_status cs_tuple_reflect(const cs_tuple* tuple, cs_tuple** out) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out, "out");
        *out = new cs_tuple{reflect_tuple(tuple->value), tuple->labels};
    });
}

// -------------------------------------------------------------- counting

cs_status cs_count_table(const cs_tuple* tuple, const int64_t* h, size_t h_len, const char* cap, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        emit(json::encode(chromatic_count_table(tuple->value, hvec_from(h, h_len), cap_from(cap))), out_json);
    });
}

cs_status cs_inhomogeneous_count_table(const cs_tuple* tuple, const int64_t* h, size_t h_len, const int64_t* b,
                                       size_t b_len, const char* cap, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        const auto table =
            inhomogeneous_count_table(tuple->value, hvec_from(h, h_len), set_from(b, b_len, "B"), cap_from(cap));
        emit(json::encode(table), out_json);
    });
}

cs_status cs_partition_count_table(const int64_t* parts, size_t parts_len, int64_t n_max, const char* cap,
                                   char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        const auto c = cap_from(cap);
        if (!c) throw InvalidArgument{"partition counts need a cap"};
        emit(json::encode(partition_count_table(set_from(parts, parts_len, "parts"), n_max, *c)), out_json);
    });
}

cs_status cs_oracle_count_table(const cs_tuple* tuple, const int64_t* h, size_t h_len, uint64_t budget,
                                char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        emit(json::encode(oracle::oracle_count_table(tuple->value, hvec_from(h, h_len), budget)), out_json);
    });
}

cs_status cs_tfold_set(const cs_tuple* tuple, const int64_t* h, size_t h_len, int64_t t, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        emit(json::encode(tfold_set(tuple->value, hvec_from(h, h_len), t)), out_json);
    });
}

cs_status cs_inhomogeneous_tfold_set(const cs_tuple* tuple, const int64_t* h, size_t h_len, const int64_t* b,
                                     size_t b_len, int64_t t, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        emit(json::encode(inhomogeneous_tfold_set(tuple->value, hvec_from(h, h_len), set_from(b, b_len, "B"), t)),
             out_json);
    });
}

// ------------------------------------------------------------- structure

cs_status cs_structure_compute(const cs_tuple* tuple, int64_t t, cs_strategy strategy, int64_t margin,
                               cs_structure** out) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out, "out");
        const SetTuple& tup = tuple->value;
        StructureResult r;
        switch (strategy) {
            case CS_STRATEGY_CONSTRUCTIVE: r = structure_constants(tup, t, Strategy::Constructive, margin); break;
            case CS_STRATEGY_EMPIRICAL: r = structure_constants(tup, t, Strategy::Empirical, margin); break;
            case CS_STRATEGY_AUTO:
                require_normalized(tup);
                try {
                    if (!constructive_applicable(tup, t)) fail(ErrorKind::ColorOverlap, "");
                    r = structure_constants(tup, t, Strategy::Constructive, margin);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::ColorOverlap) throw;
                    r = structure_constants(tup, t, Strategy::Empirical, margin);
                }
                break;
            default: throw InvalidArgument{"unknown strategy"};
        }
        *out = new cs_structure{std::move(r)};
    });
}

cs_status cs_structure_compute_inhomogeneous(const cs_tuple* tuple, const int64_t* b, size_t b_len, int64_t t,
                                             int64_t margin, cs_structure** out) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out, "out");
        auto r = structure_constants_inhomogeneous(tuple->value, set_from(b, b_len, "B"), t,
                                                   SearchLimits{margin, std::nullopt});
        *out = new cs_structure{std::move(r)};
    });
}

cs_status cs_structure_from_json(const char* text, cs_structure** out) {
    return guarded([&] {
        require(text, "json");
        require(out, "out");
        *out = new cs_structure{json::decode_structure(json::parse(text))};
    });
}

cs_status cs_structure_to_json(const cs_structure* s, char** out_json) {
    return guarded([&] {
        require(s, "structure");
        require(out_json, "out_json");
        emit(json::encode(s->value), out_json);
    });
}

void cs_structure_free(cs_structure* s) { delete s; }

int64_t cs_structure_c(const cs_structure* s) { return s ? s->value.c : -1; }

int64_t cs_structure_d(const cs_structure* s) { return s ? s->value.d : -1; }

cs_status cs_structure_threshold(const cs_structure* s, int64_t* out, size_t out_len) {
    return guarded([&] {
        require(s, "structure");
        if (out_len != s->value.h_t.size()) throw InvalidArgument{"out_len does not match q"};
        if (out_len > 0) require(out, "out");
        for (size_t i = 0; i < out_len; ++i) out[i] = s->value.h_t[i];
    });
}

cs_status cs_structure_verify(const cs_tuple* tuple, int64_t t, const cs_structure* s, const int64_t* h, size_t h_len,
                              int* holds) {
    return guarded([&] {
        require(tuple, "tuple");
        require(s, "structure");
        require(holds, "holds");
        *holds = verify_structure(tuple->value, t, s->value, hvec_from(h, h_len)) ? 1 : 0;
    });
}

cs_status cs_structure_verify_inhomogeneous(const cs_tuple* tuple, const int64_t* b, size_t b_len, int64_t t,
                                            const cs_structure* s, const int64_t* h, size_t h_len, int* holds) {
    return guarded([&] {
        require(tuple, "tuple");
        require(s, "structure");
        require(holds, "holds");
        *holds = verify_structure_inhomogeneous(tuple->value, set_from(b, b_len, "B"), t, s->value,
                                                hvec_from(h, h_len))
                     ? 1
                     : 0;
    });
}

cs_status cs_compute_ct(const cs_tuple* tuple, int64_t t, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        const Fringe f = compute_ct(tuple->value, t);
        emit(json::json{{"C", json::encode(f.set)}, {"c", f.threshold}}, out_json);
    });
}

cs_status cs_compute_dt(const cs_tuple* tuple, int64_t t, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        const Fringe f = compute_dt(tuple->value, t);
        emit(json::json{{"D", json::encode(f.set)}, {"d", f.threshold}}, out_json);
    });
}

cs_status cs_certified_rep_bound(const cs_tuple* tuple, int64_t t, int64_t* out) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out, "out");
        *out = certified_rep_bound(tuple->value, t);
    });
}

cs_status cs_single_set_threshold(const int64_t* a, size_t a_len, int64_t t, int64_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = single_set_threshold(set_from(a, a_len, "A"), t);
    });
}

cs_status cs_witness(const cs_tuple* tuple, int64_t n, int64_t t, char** out_json) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        emit(json::encode(tuple->value, witness_representations(tuple->value, n, t)), out_json);
    });
}

cs_status cs_lemmas(const cs_tuple* tuple, const int64_t* h, size_t h_len, int64_t t, const int64_t* b, size_t b_len,
                    uint64_t budget, char** out_json, int* all_passed) {
    return guarded([&] {
        require(tuple, "tuple");
        require(out_json, "out_json");
        require(all_passed, "all_passed");
        std::optional<FiniteSet> translates;
        if (b_len > 0) translates = set_from(b, b_len, "B");
        const auto checks = check_lemmas(tuple->value, hvec_from(h, h_len), t, translates, budget);
        int ok = 1;
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) ok = 0;
        emit(json::encode(checks), out_json);
        *all_passed = ok;
    });
}

}  // extern "C"
