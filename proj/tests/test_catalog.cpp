#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "stdform/catalog.hpp"
#include "stdform/generate.hpp"
#include "stdform/golden.hpp"
#include "stdform/transform.hpp"

using namespace stdform;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(STDFORM_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Group labels irrespective of member order, for permutation-stability checks.
std::vector<std::pair<std::string, std::vector<std::string>>> group_sets(const DedupResult& r) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& g : r.groups) {
        auto labels = g.labels;
        std::sort(labels.begin(), labels.end());
        out.emplace_back(g.key, labels);
    }
    return out;
}

}  // namespace

TEST_CASE("b-file parsing tolerates comments, blanks and CR-LF") {
    const SequenceRecord r =
        parse_bfile_text("# header\r\n\r\n0 5\n1 -3\r\n\n# tail\n2 8\n", "somewhere");
    CHECK(r.offset == 0);
    CHECK(r.terms == std::vector<long long>{5, -3, 8});
    CHECK(r.provenance == "somewhere");
    CHECK_FALSE(r.id.has_value());

    const SequenceRecord neg = parse_bfile_text("-2 7\n-1 7\n0 9\n");
    CHECK(neg.offset == -2);
    CHECK(neg.terms == std::vector<long long>{7, 7, 9});
}

TEST_CASE("b-file parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_bfile_text("1 2\n3 4\n"),
                         "line 2: expected index 2, got 3 (at offset 4)", ParseError);
    CHECK_THROWS_WITH_AS(parse_bfile_text("1 2\n2 4 junk\n"),
                         "line 2: trailing characters (at offset 4)", ParseError);
    CHECK_THROWS_AS(parse_bfile_text("1\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile_text("x 1\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_bfile_text("# nothing\n\n"), "no data lines found (at offset 0)",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_bfile_text(""), "no data lines found (at offset 0)", ParseError);
}

TEST_CASE("formatting is the canonical two-column form") {
    SequenceRecord r;
    r.offset = -1;
    r.terms = {4, 5, 6};
    CHECK(format_bfile(r) == "-1 4\n0 5\n1 6\n");
    // The generated fixtures are already canonical, so a parse and re-format
    // must reproduce them byte for byte.
    for (const char* name : {"b010060.txt", "b120613.txt", "b000201.txt"}) {
        const std::string text = slurp(fixture_path(name));
        CHECK(format_bfile(parse_bfile_text(text)) == text);
    }
}

TEST_CASE("writing goes through a rename with no temporary left behind") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "stdform-catalog-test";
    fs::create_directories(dir);
    const fs::path path = dir / "b000001.txt";

    SequenceRecord r;
    r.offset = 1;
    r.terms = {1, 2, 3};
    write_bfile(r, path.string());

    const SequenceRecord back = read_bfile(path.string());
    CHECK(back.offset == 1);
    CHECK(back.terms == r.terms);
    CHECK(back.provenance == path.string());

    std::size_t entries = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++entries;
        CHECK(entry.path() == path);
    }
    CHECK(entries == 1);
    fs::remove_all(dir);

    CHECK_THROWS_AS(read_bfile((dir / "missing.txt").string()), Error);
}

TEST_CASE("importing shifts the smallest term to letter 1") {
    SequenceRecord r;
    r.terms = {1, 2, 1, 1, 2};
    CHECK(import_as_word(r).shift == 0);
    CHECK(import_as_word(r).word == Word{1, 2, 1, 1, 2});

    r.terms = {0, 1, 1, 0};
    CHECK(import_as_word(r).shift == 1);
    CHECK(import_as_word(r).word == Word{1, 2, 2, 1});

    r.terms = {-3, 0, -3, 2};
    CHECK(import_as_word(r).shift == 4);
    CHECK(import_as_word(r).word == Word{1, 4, 1, 6});

    r.terms = {0, 5000};
    CHECK_THROWS_AS(import_as_word(r), DomainError);
    CHECK(import_as_word(r, 5001).word == Word{1, 5001});

    r.terms = {};
    CHECK_THROWS_AS(import_as_word(r), DomainError);
}

TEST_CASE("catalog ids normalize to the padded A-form") {
    CHECK(normalize_oeis_id("A123") == "A000123");
    CHECK(normalize_oeis_id("a28") == "A000028");
    CHECK(normalize_oeis_id("123") == "A000123");
    CHECK(normalize_oeis_id("A010060") == "A010060");
    CHECK(normalize_oeis_id("123456789") == "A123456789");
    CHECK_THROWS_AS(normalize_oeis_id("X123"), DomainError);
    CHECK_THROWS_AS(normalize_oeis_id(""), DomainError);
    CHECK_THROWS_AS(normalize_oeis_id("A12B"), DomainError);
    CHECK_THROWS_AS(normalize_oeis_id("A1234567890"), DomainError);
}

TEST_CASE("the cache directory honours the environment override") {
    setenv("STDFORM_CACHE_DIR", "/tmp/stdform-env-test", 1);
    CHECK(default_cache_dir() == "/tmp/stdform-env-test");
    unsetenv("STDFORM_CACHE_DIR");
    CHECK_FALSE(default_cache_dir().empty());
}

TEST_CASE("fetch resolves from the cache without touching the network") {
    FetchOptions opt;
    opt.cache_dir = STDFORM_FIXTURES_DIR;

    const SequenceRecord r = fetch_oeis("a120613", opt);
    REQUIRE(r.id.has_value());
    CHECK(*r.id == "A120613");
    CHECK(r.offset == 2);
    CHECK(r.terms.size() == 1000);
    CHECK(r.terms[0] == 1);

    CHECK_THROWS_AS(fetch_oeis("A999999", opt), Error);
    try {
        fetch_oeis("A999999", opt);
    } catch (const Error& e) {
        const std::string what = e.what();
        CHECK(what.find("not cached under") != std::string::npos);
        CHECK(what.find("network access is disabled") != std::string::npos);
    }
    CHECK_THROWS_AS(fetch_oeis("not-an-id", opt), DomainError);
}

TEST_CASE("duplicate rule sets group by standard form") {
    const std::vector<std::pair<std::string, std::string>> inputs = {
        {"plain", "1->12,2->1"},
        {"relabeled", "1->2,2->21"},   // the same rules with letters swapped
        {"doubler", "1->11,2->22"},
        {"broken", "1->12,2-"},
        {"too-wide", "1->1,2->2,3->3,4->4,5->5,6->6,7->7,8->8,9->9"},
    };
    const DedupResult r = dedup_morphisms(inputs);
    REQUIRE(r.groups.size() == 2);
    CHECK(r.groups[0].key == "1->11,2->22");
    CHECK(r.groups[0].labels == std::vector<std::string>{"doubler"});
    CHECK(r.groups[1].key == "1->12,2->1");
    CHECK(r.groups[1].labels == std::vector<std::string>{"plain", "relabeled"});
    REQUIRE(r.failures.size() == 2);
    CHECK(r.failures[0].label == "broken");
    CHECK_FALSE(r.failures[0].reason.empty());
    CHECK(r.failures[1].label == "too-wide");
    CHECK(r.failures[1].reason.find("max_alphabet") != std::string::npos);

    StandardizeOptions wide;
    wide.max_alphabet = 9;
    const DedupResult relaxed = dedup_morphisms(inputs, wide);
    CHECK(relaxed.failures.size() == 1);
    CHECK(relaxed.groups.size() == 3);
}

TEST_CASE("grouping is independent of job count and input order") {
    std::vector<std::pair<std::string, std::string>> inputs;
    for (int i = 0; i < 40; ++i) {
        const std::string label = "m" + std::to_string(i);
        switch (i % 4) {
            case 0: inputs.emplace_back(label, "1->12,2->1"); break;
            case 1: inputs.emplace_back(label, "1->2,2->21"); break;
            case 2: inputs.emplace_back(label, "1->12,2->21"); break;
            default: inputs.emplace_back(label, "oops"); break;
        }
    }
    const DedupResult serial = dedup_morphisms(inputs);
    const DedupResult parallel = dedup_morphisms(inputs, {}, 4);
    REQUIRE(serial.groups.size() == parallel.groups.size());
    for (std::size_t i = 0; i < serial.groups.size(); ++i) {
        CHECK(serial.groups[i].key == parallel.groups[i].key);
        CHECK(serial.groups[i].labels == parallel.groups[i].labels);
    }
    CHECK(serial.failures.size() == parallel.failures.size());

    auto shuffled = inputs;
    std::reverse(shuffled.begin(), shuffled.end());
    const DedupResult reversed = dedup_morphisms(shuffled);
    CHECK(group_sets(serial) == group_sets(reversed));
}

TEST_CASE("sequence grouping renames letters in first-occurrence order") {
    MorphicSequence tm(parse_morphism("1->12,2->21"), 1);
    const Word prefix = tm.prefix(64);

    SequenceRecord one_based;
    for (const Letter a : prefix) one_based.terms.push_back(a);
    SequenceRecord zero_based;
    for (const Letter a : prefix) zero_based.terms.push_back(a - 1);
    SequenceRecord complemented;
    for (const Letter a : prefix) complemented.terms.push_back(2 - a);  // 1 <-> 0
    SequenceRecord constant;
    constant.terms.assign(64, 7);
    SequenceRecord empty;

    const DedupResult r = dedup_sequences({{"one", one_based},
                                           {"zero", zero_based},
                                           {"flip", complemented},
                                           {"const", constant},
                                           {"void", empty}});
    REQUIRE(r.groups.size() == 2);
    // All three codings of the same word share a key; the constant does not.
    bool found = false;
    for (const auto& g : r.groups) {
        if (g.labels.size() == 3) {
            found = true;
            CHECK(g.labels == std::vector<std::string>{"one", "zero", "flip"});
        }
    }
    CHECK(found);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].label == "void");
    CHECK(r.failures[0].reason == "empty sequence");
}

TEST_CASE("sequence grouping only sees the compared prefix") {
    SequenceRecord a;
    a.terms = {1, 2, 1, 1, 2};
    SequenceRecord b;
    b.terms = {1, 2, 1, 1, 1};
    CHECK(dedup_sequences({{"a", a}, {"b", b}}, 4).groups.size() == 1);
    CHECK(dedup_sequences({{"a", a}, {"b", b}}, 8).groups.size() == 2);
    CHECK(dedup_sequences({{"a", a}, {"b", b}}, 5, 3).groups.size() == 2);
}

// The remaining cases check the bundled archive snapshots against the
// library's own generators, term by term.

TEST_CASE("archive snapshot: Thue-Morse") {
    const SequenceRecord r = read_bfile(fixture_path("b010060.txt"));
    REQUIRE(r.terms.size() == 1000);
    CHECK(r.offset == 0);

    MorphicSequence tm(parse_morphism("1->12,2->21"), 1);
    const Word direct = tm.prefix(r.terms.size());
    for (std::size_t i = 0; i < r.terms.size(); ++i) CHECK(r.terms[i] == direct[i] - 1);

    // Second route: the parity projection of the six-letter square system.
    const Morphism zeta = parse_morphism("1->23,2->14,3->21,4->56,5->63,6->54");
    MorphicSequence squared(power(zeta, 2), 1);
    const std::vector<int> projected =
        project(squared.prefix(r.terms.size()), LetterMap({0, 1, 0, 1, 0, 1}));
    for (std::size_t i = 0; i < r.terms.size(); ++i) CHECK(r.terms[i] == projected[i]);
}

TEST_CASE("archive snapshot: two-block Fibonacci orbit") {
    const SequenceRecord r = read_bfile(fixture_path("b159917.txt"));
    REQUIRE(r.terms.size() == 1000);
    CHECK(r.offset == 0);
    const NBlockMorphism blocks = block_morphism(parse_morphism("1->12,2->1"), 1, 2);
    MorphicSequence x2(blocks.morphism, 1);
    const std::vector<int> shifted = project(x2.prefix(r.terms.size()), LetterMap({0, 1, 2}));
    for (std::size_t i = 0; i < r.terms.size(); ++i) CHECK(r.terms[i] == shifted[i]);
}

TEST_CASE("archive snapshot: three-block Fibonacci orbit") {
    const SequenceRecord r = read_bfile(fixture_path("b138967.txt"));
    REQUIRE(r.terms.size() == 1000);
    CHECK(r.offset == 1);
    const NBlockMorphism blocks = block_morphism(parse_morphism("1->12,2->1"), 1, 3);
    MorphicSequence s(blocks.morphism, 1);
    const Word w = s.prefix(r.terms.size());
    for (std::size_t i = 0; i < r.terms.size(); ++i) CHECK(r.terms[i] == w[i]);
}

TEST_CASE("archive snapshot: the doubled-floor sequence and its increments") {
    const SequenceRecord g = read_bfile(fixture_path("b120613.txt"));
    REQUIRE(g.terms.size() == 1000);
    CHECK(g.offset == 2);
    for (std::size_t i = 0; i < g.terms.size(); ++i)
        CHECK(g_seq(static_cast<long>(g.offset + static_cast<long long>(i))) == static_cast<long>(g.terms[i]));

    const SequenceRecord inc = read_bfile(fixture_path("b120614.txt"));
    REQUIRE(inc.terms.size() == 1000);
    CHECK(inc.offset == 1);
    for (std::size_t i = 0; i < inc.terms.size(); ++i)
        CHECK(increment_g(static_cast<long>(inc.offset + static_cast<long long>(i))) ==
              static_cast<long>(inc.terms[i]));
}

TEST_CASE("archive snapshot: the Beatty sequence and the shifted recurrence") {
    const SequenceRecord a = read_bfile(fixture_path("b000201.txt"));
    REQUIRE(a.terms.size() == 1000);
    CHECK(a.offset == 1);
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        CHECK(beatty_a(static_cast<long>(a.offset + static_cast<long long>(i))) == static_cast<long>(a.terms[i]));

    const SequenceRecord e = read_bfile(fixture_path("b005206.txt"));
    REQUIRE(e.terms.size() == 1000);
    CHECK(e.offset == 0);
    for (std::size_t i = 0; i < e.terms.size(); ++i)
        CHECK(e_seq(static_cast<long>(e.offset + static_cast<long long>(i))) == static_cast<long>(e.terms[i]));
}
