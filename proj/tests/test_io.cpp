#include <sstream>

#include <catch_amalgamated.hpp>

#include "ybx/catalog.hpp"
#include "ybx/io.hpp"

using namespace ybx;

TEST_CASE("table document round trip") {
    auto doc = document_for_table("op", catalog::z6_shelf());
    auto text = serialize_document(doc);
    auto parsed = parse_document(text);
    CHECK(parsed.n == 6);
    REQUIRE(parsed.find_table("op") != nullptr);
    CHECK(*parsed.find_table("op") == catalog::z6_shelf());
    // serialize o parse is the canonical form
    CHECK(serialize_document(parsed) == text);
}

TEST_CASE("solution document round trip") {
    auto doc = document_for_solution(catalog::u8_solution());
    auto text = serialize_document(doc);
    auto parsed = parse_document(text);
    CHECK(parsed.has_solution);
    CHECK(parsed.solution() == catalog::u8_solution());
    CHECK(serialize_document(parsed) == text);
}

TEST_CASE("maps and multiple blocks") {
    std::string text =
        "ybx v1\n"
        "n 3\n"
        "table add\n"
        "0 1 2\n"
        "1 2 0\n"
        "2 0 1\n"
        "map f\n"
        "0 2 1\n";
    auto doc = parse_document(text);
    CHECK(doc.tables.size() == 1);
    REQUIRE(doc.find_map("f") != nullptr);
    CHECK((*doc.find_map("f"))(1) == 2);
    CHECK(serialize_document(doc) == text);
}

TEST_CASE("whitespace is normalized, comments skipped") {
    std::string text =
        "ybx v1\n"
        "n 2\n"
        "# a comment\n"
        "table op\n"
        "  0   1 \n"
        "1 0\n";
    auto doc = parse_document(text);
    CHECK(doc.tables[0].table.at(0, 1) == 1);
}

TEST_CASE("parse errors carry line numbers") {
    SECTION("bad header") {
        CHECK_THROWS_AS(parse_document(std::string("nope\n")), ParseError);
    }
    SECTION("truncated table") {
        std::string text = "ybx v1\nn 3\ntable op\n0 1 2\n";
        try {
            parse_document(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);  // ran out of rows after line 4
        }
    }
    SECTION("out of range entry") {
        std::string text = "ybx v1\nn 2\ntable op\n0 1\n0 2\n";
        try {
            parse_document(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 5);
        }
    }
    SECTION("wrong row length") {
        std::string text = "ybx v1\nn 2\ntable op\n0 1 0\n";
        CHECK_THROWS_AS(parse_document(text), ParseError);
    }
    SECTION("unknown block") {
        std::string text = "ybx v1\nn 2\nblob x\n";
        CHECK_THROWS_AS(parse_document(text), ParseError);
    }
}
