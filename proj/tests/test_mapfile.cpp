#include <catch_amalgamated.hpp>

#include "test_helpers.hpp"

#include <neutromap/cli.hpp>

using namespace neutromap;
using nmtest::load_fixture;
using nmtest::nmat;

TEST_CASE("fixture files parse cleanly") {
    for (const auto &name :
         {"fcbm_industry.nmap", "frbm_employee.nmap", "ncbm_child_labour.nmap",
          "nrm_female_infanticide.nmap", "frtm_employee.nmap", "fctm_pollution.nmap",
          "weak_neutro_bigraph.nmap"}) {
        auto result = parse(nmtest::slurp(std::string(FIXTURE_DIR) + "/" + name));
        CHECK(result.ok());
        for (const auto &d : result.diagnostics)
            CHECK(d.severity == Diagnostic::Severity::Warning);
    }
}

TEST_CASE("parsed relational document reproduces the printed matrix") {
    MapDocument doc = load_fixture("nrm_female_infanticide.nmap");
    CHECK(doc.kind == MapKind::Relational);
    RelationalMap m = to_relational(doc);
    CHECK(m.matrix == nmat({{"I 0 1 0 1", "0 0 1 I 1", "1 1 1 0 0", "0 1 1 0 1", "1 1 1 1 1",
                             "1 0 1 1 I", "0 0 0 I I"}}));
}

TEST_CASE("component without nodes is diagnosed") {
    auto result = parse("kind: cognitive\n[component \"empty\"]\nedges:\n");
    CHECK_FALSE(result.ok());
    bool found = false;
    for (const auto &d : result.diagnostics)
        if (d.message.find("at least one node") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("malformed input yields positioned diagnostics and never throws") {
    auto result = parse(nmtest::slurp(std::string(FIXTURE_DIR) + "/malformed.nmap"));
    CHECK_FALSE(result.ok());
    REQUIRE(result.diagnostics.size() >= 4);
    for (const auto &d : result.diagnostics) CHECK(d.line >= 1);

    auto has = [&](const std::string &needle) {
        for (const auto &d : result.diagnostics)
            if (d.message.find(needle) != std::string::npos) return true;
        return false;
    };
    CHECK(has("duplicate node 'B'"));
    CHECK(has("unknown label 'C'"));
    CHECK(has("malformed weight token '1q'"));
    CHECK(has("self-loop at 'A'"));
    CHECK(has("needs a weight"));
}

TEST_CASE("garbage text is survivable") {
    auto result = parse("\x01\x02 nonsense [[[\n:::\n");
    CHECK_FALSE(result.ok());
    CHECK(!result.diagnostics.empty());

    // oversized magnitudes are diagnostics, not crashes
    auto big = parse("kind: graph\n[component \"c\"]\nnodes: a\nmatrix:\n"
                     "99999999999999999999999999999\n");
    CHECK_FALSE(big.ok());
    auto tiny = parse("kind: graph\n[component \"c\"]\nnodes: a b\nmatrix:\n"
                      "1 0.0000000000000000000001\n1 1\n");
    CHECK_FALSE(tiny.ok());
}

TEST_CASE("parsing survives random mutations of a valid document") {
    std::string base = nmtest::slurp(std::string(FIXTURE_DIR) + "/fcbm_industry.nmap");
    nmtest::Rng rng(4242);
    const std::string alphabet = "ABC->:~-# []\"\n0123456789Iq.";
    for (int it = 0; it < 300; ++it) {
        std::string text = base;
        int edits = rng.pick(1, 12);
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = std::size_t(rng.pick(0, int(text.size()) - 1));
            char c = alphabet[std::size_t(rng.pick(0, int(alphabet.size()) - 1))];
            if (rng.chance(0.5)) text[pos] = c;
            else text.insert(pos, 1, c);
        }
        auto result = parse(text); // must not throw
        if (!result.ok()) CHECK(!result.diagnostics.empty());
    }
}

TEST_CASE("scenario labels must resolve") {
    auto result = parse("kind: cognitive\n"
                        "[component \"c\"]\n"
                        "nodes: A B\n"
                        "edges:\n"
                        "A -> B : 1\n"
                        "[scenario \"s\"]\n"
                        "on: A Z\n");
    CHECK_FALSE(result.ok());
    bool found = false;
    for (const auto &d : result.diagnostics)
        if (d.message.find("unknown label 'Z'") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("decimal entries only in graph documents") {
    std::string base = "[component \"m\"]\nnodes: A B\nmatrix:\n0 0.3\n0.7 0\n";
    auto cog = parse("kind: cognitive\n" + base);
    CHECK_FALSE(cog.ok());
    auto graph = parse("kind: graph\n" + base);
    CHECK(graph.ok());

    NMatrix m = to_nmatrix(*graph.document);
    CHECK(m.denom == 10);
    auto kind = nm_classify(m);
    CHECK(kind.content == NMatrixContent::Fuzzy);
}

TEST_CASE("classification-only documents support rectangular fuzzy grids") {
    // mixed rectangular fuzzy bimatrix (2x5 and 5x4, entries in [0,1])
    auto result = parse("kind: graph\n"
                        "[component \"A1\"]\n"
                        "nodes: a b\n"
                        "matrix:\n"
                        ".3 1 .5 1 .9\n"
                        ".6 0 .2 .3 .4\n"
                        "[component \"A2\"]\n"
                        "nodes: p q r s t\n"
                        "matrix:\n"
                        "1 .2 0 0\n"
                        ".3 1 .2 1\n"
                        ".4 1 0 0\n"
                        ".3 .3 .2 1\n"
                        "1 .5 .7 .6\n");
    REQUIRE(result.ok());
    auto kind = nm_classify(to_nmatrix(*result.document));
    CHECK(kind.shape == NMatrixShape::MixedRectangular);
    CHECK(kind.content == NMatrixContent::Fuzzy);

    // the node list must still match the row count
    auto bad = parse("kind: graph\n"
                     "[component \"A1\"]\n"
                     "nodes: a b c\n"
                     "matrix:\n"
                     ".3 1\n"
                     ".6 0\n");
    CHECK_FALSE(bad.ok());
}

TEST_CASE("serialize produces canonical re-parsable text") {
    for (const auto &name :
         {"fcbm_industry.nmap", "frbm_employee.nmap", "ncbm_child_labour.nmap",
          "nrm_female_infanticide.nmap", "frtm_employee.nmap", "fctm_pollution.nmap",
          "weak_neutro_bigraph.nmap"}) {
        MapDocument doc = load_fixture(name);
        std::string text = serialize(doc);
        auto round = parse(text);
        REQUIRE(round.ok());
        CHECK(*round.document == doc);
        // canonical: serializing again is byte-identical
        CHECK(serialize(*round.document) == text);
    }
}

TEST_CASE("matrix-block map documents drive the engines") {
    auto result = parse("kind: cognitive\n"
                        "[component \"m\"]\n"
                        "nodes: A B C\n"
                        "matrix:\n"
                        "0 1 0\n"
                        "0 0 1\n"
                        "-1 0 0\n"
                        "[scenario \"a\"]\n"
                        "on: A\n");
    REQUIRE(result.ok());
    CognitiveMap m = to_cognitive(*result.document);
    HiddenPattern hp = find_hidden_pattern(m, scenario_state(*result.document, m, {"A"}));
    CHECK(hp.verdicts[0].kind == VerdictKind::FixedPoint);
    CHECK(hp.verdicts[0].states[0] == nmtest::vals("1 1 1"));

    auto bad_diag = parse("kind: cognitive\n"
                          "[component \"m\"]\n"
                          "nodes: A B\n"
                          "matrix:\n"
                          "1 0\n"
                          "0 0\n");
    CHECK_FALSE(bad_diag.ok());
}

TEST_CASE("one-node document serializes minimally") {
    auto result = parse("kind: graph\n[component \"g\"]\nnodes: only\n");
    REQUIRE(result.ok());
    std::string text = serialize(*result.document);
    auto round = parse(text);
    REQUIRE(round.ok());
    CHECK(*round.document == *result.document);
}

TEST_CASE("explicit vertex ordering is preserved") {
    auto result = parse("kind: graph\n"
                        "[component \"g\"]\n"
                        "nodes: v1 v2 v10\n"
                        "order: v2 v10 v1\n"
                        "edges:\n"
                        "v1 -- v2\n");
    REQUIRE(result.ok());
    MapDocument doc = *result.document;
    CHECK(doc.components[0].effective_order() == std::vector<std::string>{"v2", "v10", "v1"});
    auto round = parse(serialize(doc));
    REQUIRE(round.ok());
    CHECK(round.document->components[0].effective_order() ==
          std::vector<std::string>{"v2", "v10", "v1"});
}

TEST_CASE("round trip on generated documents") {
    nmtest::Rng rng(31);
    for (int it = 0; it < 60; ++it) {
        MapDocument doc = nmtest::random_document(rng);
        std::string text = serialize(doc);
        auto round = parse(text);
        REQUIRE(round.ok());
        CHECK(*round.document == doc);
    }
}

TEST_CASE("duplicate edges are diagnosed") {
    auto dup = parse("kind: cognitive\n[component \"c\"]\nnodes: A B\nedges:\n"
                     "A -> B : 1\nA -> B : -1\n");
    CHECK_FALSE(dup.ok());

    // an undirected edge equals its reverse
    auto rev = parse("kind: graph\n[component \"c\"]\nnodes: A B\nedges:\n"
                     "A -- B\nB -- A\n");
    CHECK_FALSE(rev.ok());

    // opposite directions are distinct arcs
    auto two_way = parse("kind: cognitive\n[component \"c\"]\nnodes: A B\nedges:\n"
                         "A -> B : 1\nB -> A : 1\n");
    CHECK(two_way.ok());
}

TEST_CASE("ordering lines must match the declared nodes") {
    auto bad = parse("kind: graph\n[component \"g\"]\nnodes: a b\norder: a c\n");
    CHECK_FALSE(bad.ok());

    auto misplaced = parse("kind: graph\n[component \"g\"]\nnodes: a b\nrange-order: a b\n");
    CHECK_FALSE(misplaced.ok());
}

TEST_CASE("duplicate components warn") {
    auto result = parse("kind: graph\n"
                        "[component \"a\"]\nnodes: x y\nedges:\nx -- y\n"
                        "[component \"b\"]\nnodes: x y\nedges:\nx -- y\n");
    // identical components are a warning, not an error
    REQUIRE(result.ok());
    bool warned = false;
    for (const auto &d : result.diagnostics)
        if (d.severity == Diagnostic::Severity::Warning &&
            d.message.find("identical") != std::string::npos)
            warned = true;
    CHECK(warned);
}

TEST_CASE("json mirror round-trips") {
    for (const auto &name : {"fcbm_industry.nmap", "frbm_employee.nmap", "weak_neutro_bigraph.nmap"}) {
        MapDocument doc = load_fixture(name);
        auto j = cli::doc_to_json(doc);
        MapDocument round = cli::doc_from_json(j);
        CHECK(round == doc);
    }
}

TEST_CASE("a shared label switches on in every component declaring it") {
    auto result = parse("kind: cognitive\n"
                        "[component \"g1\"]\nnodes: X A\nedges:\nX -> A : 1\n"
                        "[component \"g2\"]\nnodes: X B\nedges:\nB -> X : 1\n");
    REQUIRE(result.ok());
    CognitiveMap m = to_cognitive(*result.document);
    StateVector s = scenario_state(*result.document, m, {"X"});
    // the declared sequence orders each component, so X comes first in both
    CHECK(s.components[0] == nmtest::vals("1 0"));
    CHECK(s.components[1] == nmtest::vals("1 0"));
}

TEST_CASE("scenario state resolution") {
    MapDocument doc = load_fixture("nrm_female_infanticide.nmap");
    RelationalMap m = to_relational(doc);

    RelationalState st = scenario_state(doc, m, {"R2"});
    CHECK(st.side == Side::Range);
    CHECK(st.values.components[0] == nmtest::vals("0 1 0 0 0"));

    RelationalState dom = scenario_state(doc, m, {"D1", "D3"});
    CHECK(dom.side == Side::Domain);
    CHECK(dom.values.components[0] == nmtest::vals("1 0 1 0 0 0 0"));

    CHECK_THROWS_AS(scenario_state(doc, m, {"D1", "R2"}), std::invalid_argument);
    CHECK_THROWS_AS(scenario_state(doc, m, {"nope"}), std::invalid_argument);
}
