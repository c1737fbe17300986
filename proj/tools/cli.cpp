#include "cli.hpp"

#include "cotop/cotop.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

namespace cotop::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Raised when a C API call fails; carries the library message.
struct ApiFailure {
    std::string message;
};

void check(cotop_status st) {
    if (st != COTOP_OK) {
        // Parse and semantic messages already name their kind.
        const std::string msg = cotop_last_error();
        const std::string kind = cotop_status_name(st);
        throw ApiFailure{msg.rfind(kind, 0) == 0 ? msg : kind + ": " + msg};
    }
}

struct SetDeleter {
    void operator()(cotop_set* s) const { cotop_set_free(s); }
};
struct FamilyDeleter {
    void operator()(cotop_family* f) const { cotop_family_free(f); }
};
struct TableDeleter {
    void operator()(cotop_witness_table* t) const { cotop_witness_table_free(t); }
};
struct StringDeleter {
    void operator()(char* s) const { cotop_string_free(s); }
};

using SetPtr = std::unique_ptr<cotop_set, SetDeleter>;
using FamilyPtr = std::unique_ptr<cotop_family, FamilyDeleter>;
using TablePtr = std::unique_ptr<cotop_witness_table, TableDeleter>;

std::string take(char* raw) {
    std::unique_ptr<char, StringDeleter> guard(raw);
    return raw ? std::string(raw) : std::string();
}

SetPtr parse_set(const std::string& text) {
    cotop_set* s = nullptr;
    check(cotop_set_parse(text.c_str(), &s));
    return SetPtr(s);
}

std::string render(const cotop_set* s) {
    char* raw = nullptr;
    check(cotop_set_render(s, &raw));
    return take(raw);
}

ordered_json set_json(const cotop_set* s) {
    char* raw = nullptr;
    check(cotop_set_json(s, &raw));
    return ordered_json::parse(take(raw));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(15) << key << value << '\n';
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

int cmd_eval(const std::string& text, std::size_t members, bool want_members, bool json, std::ostream& out) {
    const SetPtr s = parse_set(text);
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    check(cotop_set_density(s.get(), &num, &den));
    std::vector<std::uint64_t> elems(members);
    std::size_t written = 0;
    if (want_members) {
        check(cotop_set_enumerate(s.get(), elems.data(), members, &written));
        elems.resize(written);
    }
    const std::string density = std::to_string(num) + "/" + std::to_string(den);
    if (json) {
        ordered_json j;
        j["expression"] = text;
        j["set"] = set_json(s.get());
        j["text"] = render(s.get());
        j["density"] = density;
        if (want_members) j["members"] = elems;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << render(s.get()) << '\n';
    print_row(out, "density", density);
    if (want_members) print_row(out, "members", join(elems, ", "));
    return kOk;
}

int cmd_classify(const std::string& text, bool json, std::ostream& out) {
    const SetPtr s = parse_set(text);
    char* raw = nullptr;
    check(cotop_classify_json(s.get(), &raw));
    ordered_json j = ordered_json::parse(take(raw));
    std::vector<std::string> flags;
    if (j["is_open"].get<bool>()) flags.push_back("open");
    if (j["is_closed"].get<bool>()) flags.push_back("closed");
    if (j["is_dense"].get<bool>()) flags.push_back("dense");
    if (j["is_nowhere_dense"].get<bool>()) flags.push_back("nowhere dense");
    std::string verdict;
    for (std::size_t i = 0; i < flags.size(); ++i) verdict += (i ? ", " : "") + flags[i];
    if (json) {
        j["verdict"] = verdict;
        out << j.dump(2) << '\n';
        return kOk;
    }
    print_row(out, "set", j["text"].get<std::string>());
    print_row(out, "open", yes_no(j["is_open"].get<bool>()));
    print_row(out, "closed", yes_no(j["is_closed"].get<bool>()));
    print_row(out, "dense", yes_no(j["is_dense"].get<bool>()));
    print_row(out, "nowhere dense", yes_no(j["is_nowhere_dense"].get<bool>()));
    print_row(out, "closure", j["closure_text"].get<std::string>());
    print_row(out, "interior", j["interior_text"].get<std::string>());
    print_row(out, "boundary", j["boundary_text"].get<std::string>());
    print_row(out, "verdict", verdict);
    return kOk;
}

int cmd_operator(const std::string& which, const std::string& text, bool json, std::ostream& out) {
    const SetPtr s = parse_set(text);
    cotop_set* raw = nullptr;
    if (which == "closure") check(cotop_closure(s.get(), &raw));
    if (which == "interior") check(cotop_interior(s.get(), &raw));
    if (which == "boundary") check(cotop_boundary(s.get(), &raw));
    const SetPtr result(raw);
    if (json) {
        ordered_json j;
        j["operator"] = which;
        j["input"] = set_json(s.get());
        j["result"] = set_json(result.get());
        j["text"] = render(result.get());
        out << j.dump(2) << '\n';
    } else {
        out << render(result.get()) << '\n';
    }
    return kOk;
}

int cmd_sigma(std::uint64_t n, bool decompose, bool json, std::ostream& out) {
    cotop_set* raw = nullptr;
    check(cotop_sigma(n, &raw));
    const SetPtr s(raw);
    ordered_json decomposition;
    if (decompose) {
        char* text = nullptr;
        check(cotop_sigma_decomposition_json(n, &text));
        decomposition = ordered_json::parse(take(text));
    }
    if (json) {
        ordered_json j;
        j["n"] = n;
        j["set"] = set_json(s.get());
        j["text"] = render(s.get());
        if (decompose) j["decomposition"] = decomposition;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << render(s.get()) << '\n';
    if (decompose) {
        if (decomposition["whole_space"].get<bool>()) {
            out << "whole space N\n";
        } else {
            for (const auto& p : decomposition["progressions"]) {
                out << p["step"].get<std::uint64_t>() << "k + " << p["first"].get<std::uint64_t>()
                    << ", k >= 0\n";
            }
        }
    }
    return kOk;
}

int cmd_probe(const std::string& family, std::uint64_t n_max, std::uint64_t bound, const std::string& file,
              bool json, std::ostream& out, std::ostream& err) {
    cotop_family* raw = nullptr;
    if (family == "custom") {
        if (file.empty()) {
            err << "error: family 'custom' needs --family-file\n";
            return kUsage;
        }
        check(cotop_family_load(file.c_str(), &raw));
    } else {
        if (!file.empty()) {
            err << "error: --family-file only applies to family 'custom'\n";
            return kUsage;
        }
        check(cotop_family_from_name(family.c_str(), &raw));
    }
    const FamilyPtr fam(raw);
    cotop_witness_table* table_raw = nullptr;
    check(cotop_probe(fam.get(), n_max, bound, &table_raw));
    const TablePtr table(table_raw);
    char* text = nullptr;
    check(cotop_witness_table_json(table.get(), &text));
    const ordered_json j = ordered_json::parse(take(text));

    std::size_t resolved = 0;
    for (const auto& row : j["rows"]) resolved += row["witness"].is_null() ? 0 : 1;
    const bool complete = resolved == j["rows"].size();
    if (json) {
        out << j.dump(2) << '\n';
    } else {
        out << "family " << j["family"].get<std::string>() << ", n in [2, " << n_max << "], search bound "
            << bound << '\n';
        out << std::left << std::setw(10) << "n" << "witness\n";
        for (const auto& row : j["rows"]) {
            out << std::left << std::setw(10) << row["n"].get<std::uint64_t>()
                << (row["witness"].is_null() ? std::string("unresolved")
                                             : std::to_string(row["witness"].get<std::uint64_t>()))
                << '\n';
        }
        out << "resolved " << resolved << "/" << j["rows"].size() << '\n';
    }
    if (!complete) err << "probe: " << j["rows"].size() - resolved << " rows unresolved at bound " << bound << '\n';
    return complete ? kOk : kFailed;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                   item.end());
        if (item.empty()) continue;
        if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw CLI::ValidationError("next-prime", "'" + item + "' is not a decimal integer");
        }
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("next-prime", "'" + item + "' is out of range");
        }
    }
    return out;
}

int cmd_next_prime(const std::string& list, bool json, std::ostream& out) {
    const auto known = parse_prime_list(list);
    std::uint64_t q = 0;
    check(cotop_next_new_prime(known.data(), known.size(), &q));
    if (json) {
        out << ordered_json{{"known", known}, {"next", q}}.dump(2) << '\n';
    } else {
        out << q << '\n';
    }
    return kOk;
}

int cmd_golomb(std::uint64_t n_max, bool json, std::ostream& out) {
    char* text = nullptr;
    int demonstrated = 0;
    check(cotop_coarseness_json(n_max, &text, &demonstrated));
    const ordered_json j = ordered_json::parse(take(text));
    if (json) {
        out << j.dump(2) << '\n';
    } else {
        out << "every sigma(n), n <= " << n_max
            << ", is Golomb-open: " << yes_no(j["all_sigma_golomb_open"].get<bool>()) << '\n';
        out << "witness ap(1,4) = " << j["witness_text"].get<std::string>() << '\n';
        out << "  Golomb-open: " << yes_no(j["witness_is_golomb_open"].get<bool>()) << '\n';
        out << "  open in the coprimality topology: " << yes_no(j["witness_is_tau_open"].get<bool>()) << '\n';
        out << "strictly coarser than Golomb: " << (demonstrated ? "demonstrated" : "NOT demonstrated") << '\n';
    }
    return demonstrated ? kOk : kFailed;
}

int cmd_verify(const std::string& level, bool json, std::ostream& out) {
    char* text = nullptr;
    int all_pass = 0;
    check(cotop_verify_json(level == "full" ? COTOP_LEVEL_FULL : COTOP_LEVEL_QUICK, &text, &all_pass));
    const ordered_json j = ordered_json::parse(take(text));
    if (json) {
        out << j.dump(2) << '\n';
        return all_pass ? kOk : kFailed;
    }
    out << "identity chain (" << level << ", window " << j["chain"]["window"].get<std::uint64_t>() << ")\n";
    for (const auto& e : j["chain"]["entries"]) {
        out << (e["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << e["item"].get<std::string>() << ": "
            << e["statement"].get<std::string>();
        if (!e["detail"].get<std::string>().empty()) out << " (" << e["detail"].get<std::string>() << ")";
        out << '\n';
    }
    out << "oracle cross-checks\n";
    for (const auto& c : j["oracle"]) {
        out << (c["clean"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["case"].get<std::string>() << " "
            << c["expression"].get<std::string>() << ": closure " << c["closure"]["discrepancies"].size()
            << ", open " << c["open"]["discrepancies"].size() << ", golomb "
            << c["golomb"]["discrepancies"].size() << " discrepancies\n";
    }
    out << (all_pass ? "all checks passed" : "verification FAILED") << '\n';
    return all_pass ? kOk : kFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact engine for the coprimality topology on the positive integers", "cotop"};
    app.require_subcommand(1);

    std::string expr_text;
    bool json = false;
    std::size_t members = 0;

    auto* eval = app.add_subcommand("eval", "Evaluate a set expression to canonical form");
    eval->add_option("EXPR", expr_text, "set expression")->required();
    auto* members_opt = eval->add_option("--members", members, "list the K smallest elements");
    eval->add_flag("--json", json);

    auto* classify = app.add_subcommand("classify", "Open/closed/dense/nowhere-dense report");
    classify->add_option("EXPR", expr_text)->required();
    classify->add_flag("--json", json);

    std::vector<CLI::App*> operators;
    for (const char* name : {"closure", "interior", "boundary"}) {
        auto* sub = app.add_subcommand(name, std::string("Compute the ") + name + " of a set");
        sub->add_option("EXPR", expr_text)->required();
        sub->add_flag("--json", json);
        operators.push_back(sub);
    }

    std::uint64_t n = 0;
    bool decompose = false;
    auto* sigma = app.add_subcommand("sigma", "Basic open set of integers coprime to N");
    sigma->add_option("N", n)->required()->check(CLI::PositiveNumber);
    sigma->add_flag("--decompose", decompose, "list the arithmetic progressions");
    sigma->add_flag("--json", json);

    std::string family;
    std::uint64_t n_max = 0;
    std::uint64_t bound = 1'000'000;
    std::string family_file;
    auto* probe = app.add_subcommand("probe", "Density probe of a prime family");
    probe->add_option("FAMILY", family, "primes, mersenne, fermat, twin, progression(a,b), custom")->required();
    probe->add_option("--nmax", n_max)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100'000'000}));
    probe->add_option("--bound", bound, "largest family member searched")->check(CLI::PositiveNumber);
    probe->add_option("--family-file", family_file, "newline-separated primes for family 'custom'");
    probe->add_flag("--json", json);

    std::string prime_list;
    auto* next_prime = app.add_subcommand("next-prime", "Smallest prime coprime to the product of a list");
    next_prime->add_option("PRIMES", prime_list, "comma-separated primes")->required();
    next_prime->add_flag("--json", json);

    std::uint64_t golomb_max = 200;
    auto* golomb = app.add_subcommand("golomb-compare", "Demonstrate strict coarseness against Golomb");
    golomb->add_option("--nmax", golomb_max)->check(CLI::Range(std::uint64_t{4}, std::uint64_t{100'000}));
    golomb->add_flag("--json", json);

    std::string level = "quick";
    auto* verify = app.add_subcommand("verify", "Run the identity chain and oracle cross-checks");
    verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
    verify->add_flag("--json", json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(expr_text, members, members_opt->count() > 0, json, out);
        if (classify->parsed()) return cmd_classify(expr_text, json, out);
        for (auto* sub : operators) {
            if (sub->parsed()) return cmd_operator(sub->get_name(), expr_text, json, out);
        }
        if (sigma->parsed()) return cmd_sigma(n, decompose, json, out);
        if (probe->parsed()) return cmd_probe(family, n_max, bound, family_file, json, out, err);
        if (next_prime->parsed()) return cmd_next_prime(prime_list, json, out);
        if (golomb->parsed()) return cmd_golomb(golomb_max, json, out);
        if (verify->parsed()) return cmd_verify(level, json, out);
    } catch (const ApiFailure& f) {
        err << "error: " << f.message << '\n';
        return kUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cotop::cli
