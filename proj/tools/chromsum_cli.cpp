// chromsum command-line front end. Talks to the library only through the
// C API in chromsum.h.
//
// Exit codes: 0 success, 1 internal failure, 2 usage error, 3 domain error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromsum/chromsum.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct UsageError {
    std::string message;
};

struct ApiError {
    cs_status status;
    std::string message;
};

void check(cs_status st) {
    if (st != CS_OK) throw ApiError{st, cs_last_error()};
}

struct TupleDeleter {
    void operator()(cs_tuple* t) const { cs_tuple_free(t); }
};
struct StructureDeleter {
    void operator()(cs_structure* s) const { cs_structure_free(s); }
};
using TuplePtr = std::unique_ptr<cs_tuple, TupleDeleter>;
using StructurePtr = std::unique_ptr<cs_structure, StructureDeleter>;

// Takes ownership of a string returned by the library and parses it.
json take_json(char* raw) {
    std::unique_ptr<char, decltype(&cs_free_string)> owned(raw, cs_free_string);
    return json::parse(owned.get());
}

template <class Fn>
json call_json(Fn&& fn) {
    char* out = nullptr;
    check(fn(&out));
    return take_json(out);
}

// "1,1", "[1, 1]" or "3".
std::vector<int64_t> parse_vector(const std::string& text, const char* flag) {
    std::string s;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != ' ') s.push_back(ch);
    std::vector<int64_t> out;
    if (s.empty()) return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError{std::string(flag) + ": '" + item + "' is not an integer"};
        }
    }
    return out;
}

std::vector<int64_t> vector_from(const json& j, const char* field) {
    if (j.is_number_integer()) return {j.get<int64_t>()};
    if (!j.is_array()) throw UsageError{std::string(field) + " must be an integer array"};
    std::vector<int64_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw UsageError{std::string(field) + " must be an integer array"};
        out.push_back(x.get<int64_t>());
    }
    return out;
}

struct Options {
    std::string sets;
    std::string h;
    std::string b;
    int64_t t = 1;
    std::string strategy = "auto";
    int64_t margin = 3;
    std::string cap;
    uint64_t budget = 1000000;
    int64_t n = 0;
    std::string result;
    std::string output = "json";
    bool from_stdin = false;
    bool use_oracle = false;
};

// Resolved request: flags given on the command line win over stdin fields.
struct Request {
    std::string command;
    std::optional<json> tuple;
    std::optional<std::vector<int64_t>> h;
    std::optional<std::vector<int64_t>> b;
    int64_t t = 1;
    std::string strategy = "auto";
    int64_t margin = 3;
    std::optional<std::string> cap;
    uint64_t budget = 1000000;
    std::optional<int64_t> n;
    std::optional<json> result;
    bool text = false;
    bool use_oracle = false;
};

json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError{std::string(what) + " is not valid JSON: " + e.what()};
    }
}

Request resolve(const std::string& command, const Options& o, const CLI::App& sub) {
    Request r;
    r.command = command;
    json in = json::object();
    if (o.from_stdin) {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        in = parse_json_text(text, "stdin request");
        if (!in.is_object()) throw UsageError{"stdin request must be a JSON object"};
        if (in.contains("command") && in["command"] != command) {
            throw UsageError{"stdin request is for command " + in["command"].dump() + ", not " + command};
        }
    }
    auto given = [&](const char* flag) {
        const CLI::Option* opt = sub.get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    try {
        if (given("--sets")) {
            r.tuple = parse_json_text(o.sets, "--sets");
        } else if (in.contains("sets")) {
            r.tuple = in.contains("labels") ? json{{"sets", in["sets"]}, {"labels", in["labels"]}} : in["sets"];
        }
        if (given("--h")) {
            r.h = parse_vector(o.h, "--h");
        } else if (in.contains("h")) {
            r.h = vector_from(in["h"], "h");
        }
        if (given("--B")) {
            r.b = parse_vector(o.b, "--B");
        } else if (in.contains("B")) {
            r.b = vector_from(in["B"], "B");
        }
        r.t = given("--t") ? o.t : in.value("t", o.t);
        r.strategy = given("--strategy") ? o.strategy : in.value("strategy", o.strategy);
        r.margin = given("--margin") ? o.margin : in.value("margin", o.margin);
        if (given("--cap")) {
            r.cap = o.cap;
        } else if (in.contains("cap")) {
            r.cap = in["cap"].is_string() ? in["cap"].get<std::string>() : in["cap"].dump();
        }
        r.budget = given("--budget") ? o.budget : in.value("budget", o.budget);
        if (given("--n")) {
            r.n = o.n;
        } else if (in.contains("n")) {
            r.n = in["n"].get<int64_t>();
        }
        if (given("--result")) {
            r.result = parse_json_text(o.result, "--result");
        } else if (in.contains("result")) {
            r.result = in["result"];
        }
        const std::string output = given("--output") ? o.output : in.value("output", o.output);
        if (output != "json" && output != "text") throw UsageError{"--output must be json or text"};
        r.text = output == "text";
        r.use_oracle = given("--oracle") ? o.use_oracle : in.value("oracle", false);
    } catch (const json::type_error& e) {
        throw UsageError{std::string("stdin request has a field of the wrong type: ") + e.what()};
    }
    if (r.t < 1) throw UsageError{"--t must be a positive integer"};
    if (r.margin < 0) throw UsageError{"--margin must be nonnegative"};
    return r;
}

TuplePtr load_tuple(const Request& r) {
    if (!r.tuple) throw UsageError{r.command + " needs --sets"};
    cs_tuple* raw = nullptr;
    const std::string text = r.tuple->dump();
    const cs_status st = cs_tuple_from_json(text.c_str(), &raw);
    if (st != CS_OK) throw ApiError{st, cs_last_error()};
    return TuplePtr(raw);
}

const std::vector<int64_t>& need_h(const Request& r) {
    if (!r.h) throw UsageError{r.command + " needs --h"};
    return *r.h;
}

const char* cap_arg(const Request& r) { return r.cap ? r.cap->c_str() : nullptr; }

cs_strategy strategy_of(const std::string& name) {
    if (name == "constructive") return CS_STRATEGY_CONSTRUCTIVE;
    if (name == "empirical") return CS_STRATEGY_EMPIRICAL;
    if (name == "auto") return CS_STRATEGY_AUTO;
    throw UsageError{"--strategy must be constructive, empirical or auto"};
}

// ------------------------------------------------------------ text output

std::string join(const json& arr, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return out;
}

// Runs of consecutive integers collapse to a..b.
std::string compact_set(const json& arr) {
    if (arr.empty()) return "{}";
    std::string out = "{";
    std::size_t i = 0;
    while (i < arr.size()) {
        std::size_t j = i;
        while (j + 1 < arr.size() && arr[j + 1].get<int64_t>() == arr[j].get<int64_t>() + 1) ++j;
        if (i) out += ", ";
        out += std::to_string(arr[i].get<int64_t>());
        if (j > i) out += ".." + std::to_string(arr[j].get<int64_t>());
        i = j + 1;
    }
    return out + "}";
}

std::string text_counts(const json& table) {
    std::ostringstream out;
    const int64_t offset = table["offset"].get<int64_t>();
    const json& counts = table["counts"];
    for (std::size_t i = 0; i < counts.size(); ++i) out << (offset + static_cast<int64_t>(i)) << ' ' << counts[i].get<std::string>() << '\n';
    if (!table["cap"].is_null()) out << "(counts capped at " << table["cap"].get<std::string>() << ")\n";
    return out.str();
}

std::string text_structure(const json& s) {
    std::ostringstream out;
    out << "C        = " << compact_set(s["C"]) << '\n'
        << "c        = " << s["c"].dump() << '\n'
        << "D        = " << compact_set(s["D"]) << '\n'
        << "d        = " << s["d"].dump() << '\n'
        << "h_t      = (" << join(s["h_t"]) << ")\n"
        << "strategy = " << s["strategy"].get<std::string>() << '\n'
        << "verified = (" << join(s["verified_box"][0]) << ") .. (" << join(s["verified_box"][1]) << ")\n";
    return out.str();
}

std::string text_verify(const json& v) {
    std::ostringstream out;
    for (const auto& p : v["points"]) out << '(' << join(p["h"]) << ") " << (p["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    out << (v["holds"].get<bool>() ? "structure holds on the whole box\n" : "structure fails somewhere in the box\n");
    return out.str();
}

std::string text_witness(const json& w) {
    std::ostringstream out;
    out << "n = " << w["n"].dump() << '\n';
    const json& sets = w["sets"];
    for (std::size_t k = 0; k < w["multiplicities"].size(); ++k) {
        out << "representation " << (k + 1) << ":";
        const json& rep = w["multiplicities"][k];
        for (std::size_t i = 0; i < rep.size(); ++i) {
            out << "  color " << (i + 1) << " [";
            bool first = true;
            for (std::size_t j = 0; j < rep[i].size(); ++j) {
                if (rep[i][j].get<int64_t>() == 0) continue;
                if (!first) out << ", ";
                first = false;
                out << rep[i][j].get<int64_t>() << 'x' << sets[i][j].get<int64_t>();
            }
            out << ']';
        }
        out << "  parts (" << join(w["parts_per_color"][k]) << ")\n";
    }
    return out.str();
}

std::string text_lemmas(const json& checks) {
    std::ostringstream out;
    for (const auto& c : checks) {
        std::string status = c["status"].get<std::string>();
        for (char& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << status << std::string(9 - std::min<std::size_t>(status.size(), 8), ' ') << c["name"].get<std::string>();
        const std::string detail = c["detail"].get<std::string>();
        if (!detail.empty()) out << "  " << detail;
        out << '\n';
    }
    return out.str();
}

// --------------------------------------------------------------- commands

struct Report {
    json payload;
    std::string text;
};

Report run_counts(const Request& r) {
    const TuplePtr tuple = load_tuple(r);
    const auto& h = need_h(r);
    if (r.use_oracle) {
        if (r.b || r.cap) throw UsageError{"--oracle does not combine with --B or --cap"};
        json table =
            call_json([&](char** out) { return cs_oracle_count_table(tuple.get(), h.data(), h.size(), r.budget, out); });
        return {table, text_counts(table)};
    }
    json table = r.b ? call_json([&](char** out) {
        return cs_inhomogeneous_count_table(tuple.get(), h.data(), h.size(), r.b->data(), r.b->size(), cap_arg(r), out);
    })
                     : call_json([&](char** out) { return cs_count_table(tuple.get(), h.data(), h.size(), cap_arg(r), out); });
    return {table, text_counts(table)};
}

Report run_sumset(const Request& r) {
    const TuplePtr tuple = load_tuple(r);
    const auto& h = need_h(r);
    json set = r.b ? call_json([&](char** out) {
        return cs_inhomogeneous_tfold_set(tuple.get(), h.data(), h.size(), r.b->data(), r.b->size(), r.t, out);
    })
                   : call_json([&](char** out) { return cs_tfold_set(tuple.get(), h.data(), h.size(), r.t, out); });
    return {set, compact_set(set) + "\n"};
}

StructurePtr compute_structure(const Request& r, const cs_tuple* tuple) {
    cs_structure* raw = nullptr;
    if (r.b) {
        check(cs_structure_compute_inhomogeneous(tuple, r.b->data(), r.b->size(), r.t, r.margin, &raw));
    } else {
        check(cs_structure_compute(tuple, r.t, strategy_of(r.strategy), r.margin, &raw));
    }
    return StructurePtr(raw);
}

Report run_structure(const Request& r) {
    const TuplePtr tuple = load_tuple(r);
    const StructurePtr s = compute_structure(r, tuple.get());
    json payload = call_json([&](char** out) { return cs_structure_to_json(s.get(), out); });
    return {payload, text_structure(payload)};
}

Report run_inhom(const Request& r) {
    if (!r.b) throw UsageError{"inhom needs --B"};
    return run_structure(r);
}

Report run_threshold(const Request& r) {
    const TuplePtr tuple = load_tuple(r);
    const StructurePtr s = compute_structure(r, tuple.get());
    const json full = call_json([&](char** out) { return cs_structure_to_json(s.get(), out); });
    json payload = {{"h_t", full["h_t"]}, {"strategy", full["strategy"]}, {"verified_box", full["verified_box"]}};
    std::ostringstream text;
    text << "h_t = (" << join(full["h_t"]) << ")\nverified on (" << join(full["verified_box"][0]) << ") .. ("
         << join(full["verified_box"][1]) << ")\n";
    return {payload, text.str()};
}

std::vector<std::vector<int64_t>> box(const std::vector<int64_t>& lo, int64_t margin) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> cur = lo;
    while (true) {
        out.push_back(cur);
        std::size_t i = cur.size();
        while (true) {
            if (i == 0) return out;
            --i;
            if (cur[i] < lo[i] + margin) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
        }
    }
}

Report run_verify(const Request& r) {
    if (!r.result) throw UsageError{"verify needs --result (a structure JSON report)"};
    const TuplePtr tuple = load_tuple(r);
    cs_structure* raw = nullptr;
    const std::string text = r.result->dump();
    check(cs_structure_from_json(text.c_str(), &raw));
    const StructurePtr s(raw);
    std::vector<int64_t> lower;
    if (r.h) {
        lower = *r.h;
    } else {
        lower.resize(cs_tuple_q(tuple.get()));
        check(cs_structure_threshold(s.get(), lower.data(), lower.size()));
    }
    json points = json::array();
    bool all = true;
    for (const auto& h : box(lower, r.margin)) {
        int holds = 0;
        if (r.b) {
            check(cs_structure_verify_inhomogeneous(tuple.get(), r.b->data(), r.b->size(), r.t, s.get(), h.data(), h.size(),
                                                    &holds));
        } else {
            check(cs_structure_verify(tuple.get(), r.t, s.get(), h.data(), h.size(), &holds));
        }
        all = all && holds;
        points.push_back({{"h", h}, {"holds", holds != 0}});
    }
    json payload = {{"holds", all}, {"points", points}};
    return {payload, text_verify(payload)};
}

Report run_witness(const Request& r) {
    if (!r.n) throw UsageError{"witness needs --n"};
    const TuplePtr tuple = load_tuple(r);
    json payload = call_json([&](char** out) { return cs_witness(tuple.get(), *r.n, r.t, out); });
    return {payload, text_witness(payload)};
}

Report run_lemmas(const Request& r) {
    const TuplePtr tuple = load_tuple(r);
    const auto& h = need_h(r);
    int all = 0;
    json checks = call_json([&](char** out) {
        return cs_lemmas(tuple.get(), h.data(), h.size(), r.t, r.b ? r.b->data() : nullptr, r.b ? r.b->size() : 0,
                         r.budget, out, &all);
    });
    json payload = {{"all_passed", all != 0}, {"checks", checks}};
    return {payload, text_lemmas(checks)};
}

Report dispatch(const Request& r) {
    if (r.command == "counts") return run_counts(r);
    if (r.command == "sumset") return run_sumset(r);
    if (r.command == "structure") return run_structure(r);
    if (r.command == "inhom") return run_inhom(r);
    if (r.command == "threshold") return run_threshold(r);
    if (r.command == "verify") return run_verify(r);
    if (r.command == "witness") return run_witness(r);
    return run_lemmas(r);
}

bool is_usage_status(cs_status st) {
    return st == CS_ERR_INVALID_ARGUMENT || st == CS_ERR_PARSE || st == CS_ERR_EMPTY_SET || st == CS_ERR_DIMENSION;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chromatic t-fold sumsets: representation counts and eventual structure"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cs_version()));

    Options o;
    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"counts", "representation counts r(n) for the exponent vector --h (with --B: counts over h.A + B)"},
        {"sumset", "the t-fold set (h.A)^(t), or (h.A + B)^(t) with --B"},
        {"structure", "structure constants C, c, D, d and threshold h_t"},
        {"threshold", "threshold vector h_t with its verification box"},
        {"verify", "check a structure report over the box [h, h + margin]"},
        {"inhom", "structure constants of h.A + B"},
        {"witness", "t distinct representations of n"},
        {"lemmas", "run the property checks on one instance"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->set_help_flag("--help", "print this help and exit");
        sub->add_option("--sets", o.sets, "tuple of sets as JSON, e.g. [[0,2,3],[0,1]]");
        sub->add_option("--h", o.h, "exponent vector, e.g. 1,1");
        sub->add_option("--t", o.t, "multiplicity threshold t (default 1)");
        sub->add_option("--B", o.b, "translate set, e.g. 0,1");
        sub->add_option("--strategy", o.strategy, "constructive, empirical or auto (default)");
        sub->add_option("--margin", o.margin, "verification box margin (default 3)");
        sub->add_option("--cap", o.cap, "saturate counts at this value");
        sub->add_option("--output", o.output, "json (default) or text");
        sub->add_option("--budget", o.budget, "enumeration budget for oracle checks");
        sub->add_option("--n", o.n, "target integer for witness");
        sub->add_option("--result", o.result, "structure report JSON for verify");
        sub->add_flag("--stdin", o.from_stdin, "read the request as a JSON object from stdin");
        if (std::string(c.name) == "counts")
            sub->add_flag("--oracle", o.use_oracle, "count by exhaustive enumeration (limited by --budget)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    try {
        const Request r = resolve(sub->get_name(), o, *sub);
        const Report report = dispatch(r);
        if (r.text) {
            std::cout << report.text;
        } else {
            std::cout << report.payload.dump(2) << '\n';
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << '\n';
        return 2;
    } catch (const ApiError& e) {
        std::cerr << "error: " << cs_status_name(e.status) << ": " << e.message << '\n';
        if (is_usage_status(e.status)) return 2;
        if (e.status == CS_ERR_INTERNAL) return 1;
        std::cout << json{{"error", cs_status_name(e.status)}, {"message", e.message}}.dump(2) << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
