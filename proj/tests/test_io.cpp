#include "braidcone/io.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace braidcone;
using nlohmann::json;

TEST_CASE("parse_poset reads the numeric format") {
    Poset p = parse_poset("poset 4\n1 < 2\n1 < 3\n2 < 4\n3 < 4\n");
    CHECK(p == corpus::diamond4());
    CHECK(parse_poset("poset 2\n1 < 2") == corpus::chain(2));
}

TEST_CASE("parse_poset reads names, comments and blank lines") {
    Poset p = parse_poset("# a diamond\nelements a b c d\n\na < b  # lower left\na < c\nb < d\nc < d\n");
    CHECK(p == corpus::diamond4());
    CHECK(p.name_of(0) == "a");
    CHECK(p.name_of(3) == "d");
}

TEST_CASE("parse_poset reports cycles at the offending line") {
    try {
        parse_poset("poset 3\n1 < 2\n2 < 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("parse_poset diagnostics") {
    CHECK_THROWS_AS(parse_poset(""), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 4\n1 < 5\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 4\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("elements a b\na < c\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 1\n"), ParseError);
    // disconnected and too-small surface as ParseError too
    CHECK_THROWS_AS(parse_poset("poset 3\n1 < 2\n"), ParseError);
}

TEST_CASE("emit_poset then parse_poset is the identity") {
    for (const Poset& p : {corpus::diamond4(), corpus::glued6(), corpus::three_regular8()}) {
        CHECK(parse_poset(emit_poset(p)) == p);
    }
    Poset named = parse_poset("elements x y z\nx < z\ny < z\n");
    Poset round = parse_poset(emit_poset(named));
    CHECK(round == named);
    CHECK(round.names() == named.names());
}

TEST_CASE("certificate JSON carries the expected fields") {
    Poset d = corpus::diamond4();
    json j = json::parse(emit_certificate(d, gorenstein_status(d), Format::Json));
    CHECK(j["gorenstein"] == true);
    CHECK(j["q_gorenstein"] == true);
    CHECK(j["crepant"] == true);
    CHECK(j["index"] == 1);
    CHECK(j["verdict"] == "gorenstein");
    CHECK(j["labeling"]["1"] == -1);
    CHECK(j["labeling"]["2"] == 0);
    CHECK(j["labeling"]["3"] == 0);
    CHECK(j["labeling"]["4"] == 1);
    CHECK(j["method"] == "brute");
    CHECK(!j.contains("witness"));

    Poset v = corpus::vee3();
    json jv = json::parse(emit_certificate(v, gorenstein_status(v), Format::Json));
    CHECK(jv["crepant"] == false);
    CHECK(jv["gorenstein"] == true);
    CHECK(jv["labeling"]["3"] == 2);

    Poset bad = corpus::three_regular8();
    json jb = json::parse(emit_certificate(bad, gorenstein_status(bad), Format::Json));
    CHECK(jb["q_gorenstein"] == false);
    CHECK(!jb.contains("labeling"));
    CHECK(jb["witness"]["kind"] == "inconsistent_constraints");
    CHECK(jb["witness"]["upsets"].size() == 2);
}

TEST_CASE("fast-path witnesses serialize with their stage") {
    Poset p = corpus::quotient_cycle8();
    json j = json::parse(emit_certificate(p, decide_fast(p), Format::Json));
    CHECK(j["witness"]["kind"] == "m_set_cycle");
    CHECK(j["witness"]["stage"]["iteration"] == 1);
    CHECK(j["witness"]["cycle"].size() == 4);

    Poset t = corpus::tdc_violation9();
    json jt = json::parse(emit_certificate(t, decide_fast(t), Format::Json));
    CHECK(jt["witness"]["kind"] == "tree_downset_violation");
    CHECK(jt["witness"]["s"] == json::array({"7"}));
    CHECK(jt["witness"]["expected_components"] == 1);
    CHECK(jt["witness"]["found_components"] == 2);
}

TEST_CASE("emission is byte-stable") {
    Poset p = corpus::glued6();
    GorensteinCertificate c = status_via_blocks(p);
    CHECK(emit_certificate(p, c, Format::Json) == emit_certificate(p, c, Format::Json));
    SweepReport r1 = cross_validate(4, 1);
    SweepReport r2 = cross_validate(4, 3);
    CHECK(emit_report(r1, Format::Json) == emit_report(r2, Format::Json));
    CHECK(emit_report(r1, Format::Text) == emit_report(r2, Format::Text));
}

TEST_CASE("report JSON structure") {
    json j = json::parse(emit_report(verify_conjecture(3, 1), Format::Json));
    CHECK(j["mode"] == "verify_conjecture");
    CHECK(j["max_n"] == 3);
    CHECK(j["per_n"]["3"]["total"] == 12);
    CHECK(j["counterexamples"].empty());
    CHECK(!j.contains("meta"));
    json jt = json::parse(emit_report(verify_conjecture(3, 1), Format::Json, true));
    CHECK(jt.contains("meta"));
}

TEST_CASE("DOT export") {
    Poset d = corpus::diamond4();
    std::string dot = export_hasse(d, std::nullopt);
    CHECK(dot.find("digraph hasse") != std::string::npos);
    CHECK(dot.find("v0 -> v1") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);

    Labeling l{{-1, 0, 0, 1}, 1};
    std::string annotated = export_hasse(d, l);
    CHECK(annotated.find("1 (-1)") != std::string::npos);
    CHECK(annotated.find("4 (+1)") != std::string::npos);

    std::string two = export_hasse(corpus::chain(2), std::nullopt);
    CHECK(two.find("v0 -> v1") != std::string::npos);
}
