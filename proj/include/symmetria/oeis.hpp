#pragma once

// Frozen integer-sequence fixtures and the library-side routes that must
// reproduce them. Fixtures are JSON files ({id, offset, terms, source, note})
// generated once from formulas or reference data independent of the library
// code, then committed under data/oeis/. check_fixture() recomputes a prefix
// through the library (series engine, walk DP, or enumeration) and compares.

#include "symmetria/numeric.hpp"

#include <string>
#include <vector>

namespace symmetria {

struct OeisFixture {
    std::string id;  // e.g. "A108747"
    long long offset = 0;
    std::vector<Int> terms;
    std::string source;
    std::string note;
};

OeisFixture load_fixture(const std::string& path);
// All *.json fixtures in a directory, sorted by id.
std::vector<OeisFixture> load_fixture_dir(const std::string& dir);
// Compiled-in default: <data dir>/oeis.
std::string default_fixture_dir();

// The sequence ids with a registered library route.
std::vector<std::string> known_sequence_ids();
// First `count` terms via the library route; throws std::invalid_argument
// for unknown ids.
std::vector<Int> computed_prefix(const std::string& id, int count);

struct SequenceCheck {
    std::string id;
    bool ok = false;
    int compared = 0;  // number of terms compared
    std::string detail;
};
// Compares the fixture against the library route over min(fixture length,
// route's affordable prefix), requiring at least `min_terms` terms.
SequenceCheck check_fixture(const OeisFixture& f, int min_terms = 10);

}  // namespace symmetria
