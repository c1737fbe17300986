#include "cotop/cotop.h"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    cotop_string_free(s);
    return out;
}

cotop_set* parse(const char* text) {
    cotop_set* s = nullptr;
    REQUIRE(cotop_set_parse(text, &s) == COTOP_OK);
    return s;
}

std::string render(const cotop_set* s) {
    char* raw = nullptr;
    REQUIRE(cotop_set_render(s, &raw) == COTOP_OK);
    return take(raw);
}

}  // namespace

TEST_CASE("set handles round-trip through the C API") {
    cotop_set* s = parse("M(2) & M(3)");
    CHECK(render(s) == "Periodic(6; 0)");

    int flag = -1;
    CHECK(cotop_set_contains(s, 12, &flag) == COTOP_OK);
    CHECK(flag == 1);
    CHECK(cotop_set_contains(s, 8, &flag) == COTOP_OK);
    CHECK(flag == 0);
    CHECK(cotop_set_contains(s, 0, &flag) == COTOP_ERR_PRECONDITION);

    std::uint64_t buf[4] = {};
    std::size_t written = 0;
    CHECK(cotop_set_enumerate(s, buf, 4, &written) == COTOP_OK);
    CHECK(written == 4);
    CHECK(buf[3] == 24);

    std::uint64_t num = 0, den = 0;
    CHECK(cotop_set_density(s, &num, &den) == COTOP_OK);
    CHECK(num == 1);
    CHECK(den == 6);

    cotop_set* copy = nullptr;
    REQUIRE(cotop_set_clone(s, &copy) == COTOP_OK);
    CHECK(cotop_set_equals(s, copy, &flag) == COTOP_OK);
    CHECK(flag == 1);

    cotop_set* comp = nullptr;
    REQUIRE(cotop_set_complement(s, &comp) == COTOP_OK);
    cotop_set* both = nullptr;
    REQUIRE(cotop_set_intersect(s, comp, &both) == COTOP_OK);
    CHECK(cotop_set_is_empty(both, &flag) == COTOP_OK);
    CHECK(flag == 1);
    cotop_set* all = nullptr;
    REQUIRE(cotop_set_union(s, comp, &all) == COTOP_OK);
    CHECK(render(all) == "Periodic(1; 0)");
    cotop_set* diff = nullptr;
    REQUIRE(cotop_set_difference(all, comp, &diff) == COTOP_OK);
    CHECK(cotop_set_equals(diff, s, &flag) == COTOP_OK);
    CHECK(flag == 1);

    for (cotop_set* p : {s, copy, comp, both, all, diff}) cotop_set_free(p);
    cotop_set_free(nullptr);
}

TEST_CASE("finite sets and JSON") {
    const std::uint64_t elems[] = {9, 4, 4};
    cotop_set* s = nullptr;
    REQUIRE(cotop_set_explicit(elems, 3, &s) == COTOP_OK);
    int finite = 0;
    CHECK(cotop_set_is_finite(s, &finite) == COTOP_OK);
    CHECK(finite == 1);
    std::uint64_t buf[5] = {};
    std::size_t written = 0;
    CHECK(cotop_set_enumerate(s, buf, 5, &written) == COTOP_OK);
    CHECK(written == 2);

    char* raw = nullptr;
    REQUIRE(cotop_set_json(s, &raw) == COTOP_OK);
    const std::string text = take(raw);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["m"] == 1);
    CHECK(j["added"] == std::vector<int>{4, 9});

    cotop_set* back = nullptr;
    REQUIRE(cotop_set_from_json(text.c_str(), &back) == COTOP_OK);
    int eq = 0;
    CHECK(cotop_set_equals(s, back, &eq) == COTOP_OK);
    CHECK(eq == 1);
    cotop_set_free(back);
    cotop_set_free(s);

    CHECK(cotop_set_from_json("{\"m\": 2}", &back) == COTOP_ERR_PARSE);
    CHECK(cotop_set_from_json("not json", &back) == COTOP_ERR_PARSE);

    const std::uint64_t res[] = {1, 5};
    REQUIRE(cotop_set_periodic(6, res, 2, &s) == COTOP_OK);
    CHECK(render(s) == "Periodic(6; 1,5)");
    cotop_set_free(s);
    const std::uint64_t bad[] = {6};
    CHECK(cotop_set_periodic(6, bad, 1, &s) == COTOP_ERR_RANGE);
}

TEST_CASE("status codes and last error") {
    cotop_set* s = nullptr;
    CHECK(cotop_set_parse("M(2) |", &s) == COTOP_ERR_PARSE);
    CHECK(s == nullptr);
    CHECK(cotop_last_error_offset() == 6);
    CHECK(std::string(cotop_last_error()).find("byte 6") != std::string::npos);

    CHECK(cotop_set_parse("ap(2,4)", &s) == COTOP_ERR_SEMANTIC);
    CHECK(cotop_last_error_offset() == 0);

    CHECK(cotop_set_parse(nullptr, &s) == COTOP_ERR_NULL_ARGUMENT);
    CHECK(cotop_set_parse("N", nullptr) == COTOP_ERR_NULL_ARGUMENT);
    CHECK(cotop_last_error_offset() == static_cast<std::size_t>(-1));

    cotop_set* a = parse("M(65521)");
    cotop_set* b = parse("M(65519)");
    CHECK(cotop_set_intersect(a, b, &s) == COTOP_ERR_RANGE);
    cotop_set_free(a);
    cotop_set_free(b);

    CHECK(cotop_sigma(0, &s) == COTOP_ERR_PRECONDITION);
    CHECK(std::string(cotop_status_name(COTOP_OK)) == "ok");
    CHECK(std::string(cotop_status_name(COTOP_ERR_IO)) == "io error");
}

TEST_CASE("topology through the C API") {
    cotop_set* s = parse("M(5)");
    cotop_classification c{};
    REQUIRE(cotop_classify(s, &c) == COTOP_OK);
    CHECK(c.is_closed == 1);
    CHECK(c.is_open == 0);
    CHECK(c.is_nowhere_dense == 1);
    CHECK(c.is_dense == 0);

    char* raw = nullptr;
    REQUIRE(cotop_classify_json(s, &raw) == COTOP_OK);
    const auto j = nlohmann::json::parse(take(raw));
    CHECK(j["is_closed"] == true);
    CHECK(j["closure_text"] == "Periodic(5; 0)");
    cotop_set_free(s);

    cotop_set* cl = nullptr;
    REQUIRE(cotop_closure_singleton(12, &cl) == COTOP_OK);
    CHECK(render(cl) == "Periodic(6; 0)");
    cotop_set* in = nullptr;
    REQUIRE(cotop_interior(cl, &in) == COTOP_OK);
    int empty = 0;
    CHECK(cotop_set_is_empty(in, &empty) == COTOP_OK);
    CHECK(empty == 1);
    cotop_set* bd = nullptr;
    REQUIRE(cotop_boundary(cl, &bd) == COTOP_OK);
    int eq = 0;
    CHECK(cotop_set_equals(bd, cl, &eq) == COTOP_OK);
    CHECK(eq == 1);
    for (cotop_set* p : {cl, in, bd}) cotop_set_free(p);

    REQUIRE(cotop_sigma_decomposition_json(4, &raw) == COTOP_OK);
    const auto d = nlohmann::json::parse(take(raw));
    CHECK(d["whole_space"] == false);
    CHECK(d["progressions"].size() == 2);
    CHECK(d["progressions"][1]["first"] == 3);
    CHECK(d["progressions"][1]["step"] == 4);
}

TEST_CASE("Golomb and families through the C API") {
    cotop_set* g = nullptr;
    REQUIRE(cotop_golomb_basic(1, 4, &g) == COTOP_OK);
    int open = 0;
    CHECK(cotop_is_golomb_open(g, &open) == COTOP_OK);
    CHECK(open == 1);
    cotop_set_free(g);
    CHECK(cotop_golomb_basic(2, 4, &g) == COTOP_ERR_PRECONDITION);

    char* raw = nullptr;
    int demonstrated = 0;
    REQUIRE(cotop_coarseness_json(50, &raw, &demonstrated) == COTOP_OK);
    cotop_string_free(raw);
    CHECK(demonstrated == 1);

    cotop_family* f = nullptr;
    REQUIRE(cotop_family_from_name("mersenne", &f) == COTOP_OK);
    std::uint64_t buf[12] = {};
    std::size_t written = 0;
    int exhausted = 0;
    CHECK(cotop_family_enumerate(f, buf, 12, &written, &exhausted) == COTOP_OK);
    CHECK(written == 9);
    CHECK(exhausted == 1);

    cotop_witness_table* t = nullptr;
    REQUIRE(cotop_probe(f, 21, 1'000'000, &t) == COTOP_OK);
    std::size_t size = 0;
    CHECK(cotop_witness_table_size(t, &size) == COTOP_OK);
    CHECK(size == 20);
    std::uint64_t n = 0, w = 0, bound = 0;
    int resolved = 0;
    CHECK(cotop_witness_table_row(t, size - 1, &n, &w, &resolved, &bound) == COTOP_OK);
    CHECK(n == 21);
    CHECK(w == 31);
    CHECK(resolved == 1);
    CHECK(bound == 1'000'000);
    CHECK(cotop_witness_table_row(t, size, &n, &w, &resolved, &bound) == COTOP_ERR_RANGE);
    REQUIRE(cotop_witness_table_json(t, &raw) == COTOP_OK);
    CHECK(nlohmann::json::parse(take(raw))["rows"].size() == 20);
    cotop_witness_table_free(t);
    cotop_family_free(f);

    CHECK(cotop_family_from_name("perfect", &f) == COTOP_ERR_PRECONDITION);
    CHECK(cotop_family_load("/nonexistent/file", &f) == COTOP_ERR_IO);

    const auto path = std::filesystem::temp_directory_path() / "cotop_capi_family.txt";
    std::ofstream(path) << "# small\n5\n7\n";
    REQUIRE(cotop_family_load(path.string().c_str(), &f) == COTOP_OK);
    REQUIRE(cotop_probe(f, 40, 100, &t) == COTOP_OK);
    REQUIRE(cotop_witness_table_row(t, 33, &n, &w, &resolved, &bound) == COTOP_OK);
    CHECK(n == 35);
    CHECK(resolved == 0);
    cotop_witness_table_free(t);
    cotop_family_free(f);
    std::filesystem::remove(path);

    const std::uint64_t known[] = {2, 3, 5};
    std::uint64_t q = 0;
    CHECK(cotop_next_new_prime(known, 3, &q) == COTOP_OK);
    CHECK(q == 7);
    CHECK(cotop_next_new_prime(nullptr, 0, &q) == COTOP_OK);
    CHECK(q == 2);
    int ok = 0;
    CHECK(cotop_partition_check(1000, &ok) == COTOP_OK);
    CHECK(ok == 1);
}

TEST_CASE("oracle and verify through the C API") {
    cotop_set* s = parse("{4,9}");
    char* raw = nullptr;
    int agrees = 0;
    REQUIRE(cotop_oracle_closure_json(s, 100, 31, 5, &raw, &agrees) == COTOP_OK);
    CHECK(agrees == 1);
    const auto j = nlohmann::json::parse(take(raw));
    CHECK(j["check"] == "closure");
    CHECK(j["discrepancies"].empty());
    REQUIRE(cotop_oracle_open_json(s, 2, 100, &raw, &agrees) == COTOP_OK);
    cotop_string_free(raw);
    CHECK(agrees == 1);
    REQUIRE(cotop_oracle_golomb_json(s, 2, 100, &raw, &agrees) == COTOP_OK);
    cotop_string_free(raw);
    CHECK(agrees == 1);
    cotop_set_free(s);

    int all_pass = 0;
    REQUIRE(cotop_verify_json(COTOP_LEVEL_QUICK, &raw, &all_pass) == COTOP_OK);
    const auto v = nlohmann::json::parse(take(raw));
    CHECK(all_pass == 1);
    CHECK(v["oracle"].size() == 10);
    CHECK(v["all_pass"] == true);
}
