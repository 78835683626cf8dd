#include <catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace neutromap;
using nmtest::grid;
using nmtest::nmat;
using nmtest::vals;

namespace {

// N(R) of the female-infanticide model, used by several cases below.
NMatrix female_infanticide_nr() {
    return nmat({{"I 0 1 0 1", "0 0 1 I 1", "1 1 1 0 0", "0 1 1 0 1", "1 1 1 1 1", "1 0 1 1 I",
                  "0 0 0 I I"}});
}

} // namespace

TEST_CASE("bimatrix equality is ordered and componentwise") {
    NMatrix a = nmat({{"3 2 0", "2 1 1"}, {"0 -1 2", "0 0 1"}});
    NMatrix c = nmat({{"1 1 1", "0 0 0"}, {"2 0 1", "1 0 2"}});
    CHECK_FALSE(nm_equal(a, c));
    CHECK(nm_equal(a, a));

    NMatrix swapped = nmat({{"0 -1 2", "0 0 1"}, {"3 2 0", "2 1 1"}});
    CHECK_FALSE(nm_equal(a, swapped));
}

TEST_CASE("scalar multiplication") {
    NMatrix a = nmat({{"2 0 1", "3 3 -1"}, {"0 1 -1", "2 1 0"}});
    NMatrix expect3 = nmat({{"6 0 3", "9 9 -3"}, {"0 3 -3", "6 3 0"}});
    CHECK(nm_scalar_mul({3, 0}, a) == expect3);

    NMatrix row = nmat({{"3 1 2 -4"}, {"0 1 -1 0"}});
    NMatrix expect_neg2 = nmat({{"-6 -2 -4 8"}, {"0 -2 2 0"}});
    CHECK(nm_scalar_mul({-2, 0}, row) == expect_neg2);

    NMatrix zero = nm_scalar_mul(NeutroValue::zero(), a);
    for (const auto &c : zero.components)
        for (const auto &v : c.cells) CHECK(v.is_zero());
}

TEST_CASE("addition") {
    NMatrix a = nmat({{"1 2", "3 4"}, {"0 1", "1 0"}});
    NMatrix b = nmat({{"-1 0", "2 2"}, {"1 1", "0 I"}});
    NMatrix expect = nmat({{"0 2", "5 6"}, {"1 2", "1 I"}});
    CHECK(nm_add(a, b) == expect);

    NMatrix zero = nm_scalar_mul(NeutroValue::zero(), a);
    CHECK(nm_add(a, zero) == a);

    NMatrix bad = nmat({{"1 2", "3 4"}, {"0 1 0", "1 0 0"}});
    CHECK_THROWS_WITH(nm_add(a, bad), Catch::Matchers::ContainsSubstring("component 2"));
}

TEST_CASE("vector-matrix product reproduces the business/employee step") {
    NMatrix b = nmat({{"0 1 0 1 1", "0 0 -1 0 0", "1 -1 0 0 0", "1 0 0 0 -1", "0 0 0 -1 0"},
                      {"0 0 0 0 1 0 0 0 0", "0 0 0 0 0 0 1 1 0", "0 0 0 0 0 1 1 0 0",
                       "0 0 0 0 0 1 0 0 1", "0 0 0 0 0 0 0 0 0", "0 0 1 1 0 0 0 0 0",
                       "0 1 1 0 0 0 0 0 0", "0 1 0 0 0 0 0 0 0", "0 0 0 1 0 0 0 0 0"}});
    NVector x({vals("1 0 0 0 0"), vals("0 1 0 0 0 0 0 0 0")});
    NVector expect({vals("0 1 0 1 1"), vals("0 0 0 0 0 0 1 1 0")});
    CHECK(nm_vec_mul(x, b) == expect);

    NVector zero({vals("0 0 0 0 0"), vals("0 0 0 0 0 0 0 0 0")});
    CHECK(nm_vec_mul(zero, b) == NVector({vals("0 0 0 0 0"), vals("0 0 0 0 0 0 0 0 0")}));
}

TEST_CASE("vector-matrix product through the transpose (single component)") {
    NMatrix nrt = nm_transpose(female_infanticide_nr());
    NVector a1({vals("0 1 0 0 0")});
    CHECK(nm_vec_mul(a1, nrt) == NVector({vals("0 0 1 1 1 0 0")}));
}

TEST_CASE("transpose") {
    NMatrix nr = female_infanticide_nr();
    NMatrix printed_nrt = nmat({{"I 0 1 0 1 1 0", "0 0 1 1 1 0 0", "1 1 1 1 1 1 0",
                                 "0 I 0 0 1 1 I", "1 1 0 1 1 I I"}});
    CHECK(nm_transpose(nr) == printed_nrt);
    CHECK(nm_transpose(nm_transpose(nr)) == nr);

    NMatrix one = nmat({{"7"}});
    CHECK(nm_transpose(one) == one);

    // labels swap sides
    NMatrix labeled = nmat({{"1 2", "3 4", "5 6"}});
    labeled.components[0].row_labels = {"a", "b", "c"};
    labeled.components[0].col_labels = {"x", "y"};
    NMatrix t = nm_transpose(labeled);
    CHECK(t.components[0].row_labels == std::vector<std::string>{"x", "y"});
    CHECK(t.components[0].col_labels == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("classification across the taxonomy") {
    // 3x3 pair with I entries in both components
    NMatrix ex121 = nmat({{"0 I 0", "1 2 -1", "3 2 I"}, {"2 I 1", "I 0 I", "1 1 2"}});
    auto k121 = nm_classify(ex121);
    CHECK(k121.shape == NMatrixShape::Square);
    CHECK(k121.content == NMatrixContent::Neutrosophic);

    // only the second component carries I
    NMatrix ex125 = nmat({{"3 1 1", "2 2 2"}, {"-I 1 2", "0 I 3"}});
    auto k125 = nm_classify(ex125);
    CHECK(k125.shape == NMatrixShape::Rectangular);
    CHECK(k125.content == NMatrixContent::SemiNeutrosophic);

    // 2x5 and 5x4 pair, I in both
    NMatrix ex123 = nmat({{"3 1 1 1 I", "I 0 2 3 4"},
                          {"I 2 0 I", "3 1 2 1", "4 1 0 0", "3 3 1 1", "1 I 0 I"}});
    auto k123 = nm_classify(ex123);
    CHECK(k123.shape == NMatrixShape::MixedRectangular);
    CHECK(k123.content == NMatrixContent::Neutrosophic);

    NMatrix mixed_square = nmat({{"3 0 1 2", "0 0 1 1", "2 1 0 0", "1 0 1 0"},
                                 {"1 1 2", "0 2 1", "0 0 4"}});
    CHECK(nm_classify(mixed_square).shape == NMatrixShape::MixedSquare);
}

TEST_CASE("fuzzy classification uses scaled entries") {
    // 3x3 square fuzzy bimatrix with entries in [0,1]
    std::vector<MatrixComponent> comps;
    comps.push_back(grid({"0 1 0", "1 2 1", "3 2 1"}));
    comps.push_back(grid({"2 1 1", "1 0 1", "2 1 2"}));
    NMatrix fuzzy(std::move(comps), 10); // every entry is n/10
    auto kf = nm_classify(fuzzy);
    CHECK(kf.shape == NMatrixShape::Square);
    CHECK(kf.content == NMatrixContent::Fuzzy);

    // semi fuzzy: first component has integer entries above 1
    std::vector<MatrixComponent> comps2;
    comps2.push_back(grid({"30 10 10", "20 20 20"}));
    comps2.push_back(grid({"5 7 2", "0 1 3"}));
    NMatrix semi(std::move(comps2), 10);
    CHECK(nm_classify(semi).content == NMatrixContent::SemiFuzzy);

    // fuzzy neutrosophic: decimals plus I coefficients inside [0,1]
    std::vector<MatrixComponent> comps3;
    comps3.push_back(grid({"0 I 3I", "2I 4 10"}));
    comps3.push_back(grid({"10 I 0", "I 10 8"}));
    NMatrix fn(std::move(comps3), 10);
    CHECK(nm_classify(fn).content == NMatrixContent::FuzzyNeutrosophic);
}

TEST_CASE("classification is total on random matrices") {
    nmtest::Rng rng(20240801);
    for (int it = 0; it < 200; ++it) {
        int k = rng.pick(1, 3);
        std::vector<MatrixComponent> comps;
        for (int c = 0; c < k; ++c) {
            MatrixComponent m(rng.pick(1, 4), rng.pick(1, 4));
            for (auto &v : m.cells) v = {rng.pick(-2, 2), rng.pick(-1, 1)};
            comps.push_back(std::move(m));
        }
        NMatrix a(std::move(comps));
        auto kind = nm_classify(a); // must not throw, must yield valid enums
        bool shape_ok = kind.shape == NMatrixShape::Square || kind.shape == NMatrixShape::MixedSquare ||
                        kind.shape == NMatrixShape::Rectangular ||
                        kind.shape == NMatrixShape::MixedRectangular;
        CHECK(shape_ok);
    }
}

TEST_CASE("componentwise laws") {
    nmtest::Rng rng(42);
    for (int it = 0; it < 100; ++it) {
        int k = rng.pick(1, 3);
        std::vector<MatrixComponent> ca, cb;
        std::vector<std::vector<NeutroValue>> vc;
        for (int c = 0; c < k; ++c) {
            std::size_t r = rng.pick(1, 4), s = rng.pick(1, 4);
            MatrixComponent ma(r, s), mb(r, s);
            for (auto &v : ma.cells) v = {rng.pick(-2, 2), rng.pick(-1, 1)};
            for (auto &v : mb.cells) v = {rng.pick(-2, 2), rng.pick(-1, 1)};
            ca.push_back(std::move(ma));
            cb.push_back(std::move(mb));
            std::vector<NeutroValue> row(r);
            for (auto &v : row) v = {rng.pick(-1, 1), rng.pick(0, 1)};
            vc.push_back(std::move(row));
        }
        NMatrix a(ca), b(cb);
        NVector v(vc);
        NeutroValue lambda{rng.pick(-2, 2), rng.pick(0, 1)};

        NMatrix sum = nm_add(a, b);
        NMatrix scaled = nm_scalar_mul(lambda, a);
        NVector prod = nm_vec_mul(v, a);
        for (int c = 0; c < k; ++c) {
            NMatrix ac({a.components[c]}), bc({b.components[c]});
            NVector vcomp({v.components[c]});
            CHECK(nm_add(ac, bc).components[0] == sum.components[c]);
            CHECK(nm_scalar_mul(lambda, ac).components[0] == scaled.components[c]);
            CHECK(nm_vec_mul(vcomp, ac).components[0] == prod.components[c]);
        }

        CHECK(nm_add(a, b) == nm_add(b, a));

        // dimension contract: v*a feeds (v*a)*a^T with the original lengths
        NVector back = nm_vec_mul(prod, nm_transpose(a));
        for (int c = 0; c < k; ++c) CHECK(back.components[c].size() == v.components[c].size());
    }
}

TEST_CASE("addition is associative") {
    nmtest::Rng rng(43);
    for (int it = 0; it < 50; ++it) {
        std::size_t r = rng.pick(1, 3), s = rng.pick(1, 3);
        auto make = [&] {
            MatrixComponent m(r, s);
            for (auto &v : m.cells) v = {rng.pick(-2, 2), rng.pick(-1, 1)};
            return NMatrix({m});
        };
        NMatrix a = make(), b = make(), c = make();
        CHECK(nm_add(nm_add(a, b), c) == nm_add(a, nm_add(b, c)));
    }
}

TEST_CASE("duplicate component detection") {
    NMatrix dup = nmat({{"1 0", "0 1"}, {"1 0", "0 1"}});
    auto d = dup.duplicate_components();
    REQUIRE(d.has_value());
    CHECK(d->first == 0);
    CHECK(d->second == 1);

    // the zero n-matrix is the sanctioned exception
    NMatrix zeros = nmat({{"0 0", "0 0"}, {"0 0", "0 0"}});
    CHECK_FALSE(zeros.duplicate_components().has_value());

    NMatrix ok = nmat({{"1 0", "0 1"}, {"1 1", "0 1"}});
    CHECK_FALSE(ok.duplicate_components().has_value());
}

TEST_CASE("text rendering") {
    NMatrix a = nmat({{"0 1", "-1 I"}, {"2+I 0", "0 2I"}});
    CHECK(nm_to_text(a) == "0 1\n-1 I\n---\n2+I 0\n0 2I\n");
}

TEST_CASE("matrix literal round trip") {
    NMatrix a = nmat({{"0 1", "-1 I"}, {"2+I 0", "0 2I"}});
    CHECK(nm_from_text(nm_to_text(a)) == a);

    nmtest::Rng rng(77);
    for (int it = 0; it < 50; ++it) {
        int k = rng.pick(1, 3);
        std::vector<MatrixComponent> comps;
        for (int c = 0; c < k; ++c) {
            MatrixComponent m(rng.pick(1, 4), rng.pick(1, 4));
            for (auto &v : m.cells) v = {rng.pick(-3, 3), rng.pick(-2, 2)};
            comps.push_back(std::move(m));
        }
        NMatrix a2(std::move(comps));
        CHECK(nm_from_text(nm_to_text(a2)) == a2);
    }

    // decimal literals land as scaled rationals
    NMatrix dec = nm_from_text("0 0.3\n0.25 1\n");
    CHECK(dec.denom == 100);
    CHECK(dec.components[0].at(0, 1) == NeutroValue{30, 0});
    CHECK(dec.components[0].at(1, 0) == NeutroValue{25, 0});

    CHECK_THROWS_AS(nm_from_text("1 2\n3\n"), std::invalid_argument);
    CHECK_THROWS_AS(nm_from_text("1 x\n"), std::invalid_argument);
}
