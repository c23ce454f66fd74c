#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmetria/oeis.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

using namespace symmetria;

namespace {

std::vector<long long> prefix(const std::string& id, int count) {
    std::vector<long long> out;
    for (const Int& v : computed_prefix(id, count)) out.push_back(v.convert_to<long long>());
    return out;
}

using Seq = std::vector<long long>;

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("computed prefixes of the scalar sequences") {
    CHECK(prefix("A001246", 6) == Seq{1, 1, 4, 25, 196, 1764});
    CHECK(prefix("A018224", 7) == Seq{1, 1, 4, 9, 36, 100, 400});
    CHECK(prefix("A000891", 5) == Seq{1, 3, 20, 175, 1764});
    CHECK(prefix("A005817", 8) == Seq{1, 1, 2, 4, 10, 25, 70, 196});
    CHECK(prefix("A005558", 8) == Seq{1, 1, 3, 6, 20, 50, 175, 490});
    CHECK(prefix("A051286", 13) == Seq{1, 1, 2, 5, 11, 26, 63, 153, 376, 931, 2317, 5794, 14545});
    CHECK(prefix("A004148", 13) == Seq{1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283});
}

TEST_CASE("computed prefixes of the triangles") {
    // Flattened rows of the statistic tables.
    CHECK(prefix("A341415", 9) == Seq{0, 2, 2, 0, 4, 4, 8, 0, 8});
    CHECK(prefix("A108747", 6) == Seq{2, 2, 4, 4, 8, 8});
    CHECK(prefix("A341445", 6) == Seq{1, 0, 2, 2, 0, 3});
    CHECK(prefix("A298645", 6) == Seq{1, 0, 2, 2, 0, 3});
    CHECK(prefix("A339754", 6) == Seq{1, 0, 2, 0, 2, 3});
    CHECK(prefix("A213600", 9) == Seq{1, 1, 1, 1, 4, 1, 4, 9, 1});
}

TEST_CASE("fixture parsing and validation") {
    std::string good = write_temp("symmetria_fixture_ok.json", R"({
        "id": "A001246",
        "offset": 0,
        "terms": ["1", "1", "4", "25", "196", "1764", "17424", "184041",
                   "2044900", "23639044", "283435200"],
        "source": "unit test",
        "note": ""
    })");
    OeisFixture f = load_fixture(good);
    CHECK(f.id == "A001246");
    CHECK(f.offset == 0);
    CHECK(f.terms.size() == 11);
    CHECK(f.terms[4] == Int(196));
    std::remove(good.c_str());

    std::string bad_id = write_temp("symmetria_fixture_bad.json",
                                    R"({"id": "X1", "offset": 0, "terms": ["1"]})");
    CHECK_THROWS(load_fixture(bad_id));
    std::remove(bad_id.c_str());
}

TEST_CASE("check_fixture accepts matching data and rejects tampering") {
    OeisFixture f;
    f.id = "A001246";
    f.offset = 0;
    for (const Int& v : computed_prefix("A001246", 12)) f.terms.push_back(v);
    SequenceCheck ok = check_fixture(f);
    CHECK(ok.ok);
    CHECK(ok.compared == 12);

    f.terms[7] += 1;
    SequenceCheck tampered = check_fixture(f);
    CHECK_FALSE(tampered.ok);

    OeisFixture tiny;
    tiny.id = "A001246";
    tiny.offset = 0;
    tiny.terms = {Int(1), Int(1), Int(4)};
    CHECK_FALSE(check_fixture(tiny).ok);  // too few terms to be conclusive
}

TEST_CASE("bundled fixtures all pass") {
    auto fixtures = load_fixture_dir(default_fixture_dir());
    CHECK(fixtures.size() == known_sequence_ids().size());
    for (const auto& f : fixtures) {
        SequenceCheck c = check_fixture(f);
        INFO(f.id, ": ", c.detail);
        CHECK(c.ok);
        CHECK(c.compared >= 12);
    }
}

TEST_CASE("unknown ids are rejected") {
    CHECK_THROWS(computed_prefix("A000000", 5));
}
