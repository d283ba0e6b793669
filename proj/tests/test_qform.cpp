#include <doctest.h>

#include "oracle.hpp"
#include "textio.hpp"

using namespace qf2;

namespace {

Gf2k f2() { return Gf2k(1); }

RatFunc R(const char* s) { return parse_ratfunc(f2(), s); }

GramInput gram(Gf2k f, std::vector<std::vector<const char*>> rows) {
    GramInput g{f, {}};
    for (auto& row : rows) {
        std::vector<RatFunc> r;
        for (const char* cell : row) r.push_back(parse_ratfunc(f, cell));
        g.rows.push_back(std::move(r));
    }
    return g;
}

}  // namespace

TEST_CASE("normalize the binary template") {
    // q(x,y) = x^2 + xy + t y^2
    QuadraticForm q = normalize(gram(f2(), {{"1", "1"}, {"t"}}));
    CHECK(q.rank() == 2);
    CHECK(!q.odd_part());
    REQUIRE(q.binaries().size() == 1);
    CHECK(q.binaries()[0].first == R("1"));
    CHECK(q.binaries()[0].second == R("t"));
}

TEST_CASE("normalize splits off the radical") {
    // q(x,y,z) = x^2 + yz
    QuadraticForm q = normalize(gram(f2(), {{"1", "0", "0"}, {"0", "1"}, {"0"}}));
    CHECK(q.rank() == 3);
    REQUIRE(q.odd_part());
    CHECK(*q.odd_part() == R("1"));
    REQUIRE(q.binaries().size() == 1);
    CHECK(q.binaries()[0].first.is_zero());
    CHECK(q.binaries()[0].second.is_zero());
}

TEST_CASE("normalize rejects degenerate input") {
    // q(x,y) = x^2 + y^2 has identically zero polar form on rank 2
    CHECK_THROWS_AS((void)normalize(gram(f2(), {{"1", "0"}, {"1"}})), Error);
    try {
        (void)normalize(gram(f2(), {{"1", "0"}, {"1"}}));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegenerateForm);
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    // rank-1 zero form vanishes on its radical
    CHECK_THROWS_AS((void)normalize(gram(f2(), {{"0"}})), Error);
}

TEST_CASE("scaling") {
    QuadraticForm q = QuadraticForm::binary(R("1"), R("t+1"));
    CHECK(scale(R("1"), q) == q);
    QuadraticForm s = scale(R("t^2"), q);
    CHECK(s.binaries()[0].first == R("t^2"));
    CHECK(s.binaries()[0].second == R("(t+1)/t^2"));
    CHECK(scale(R("t"), scale(R("1/t"), q)) == q);
    CHECK_THROWS_AS((void)scale(R("0"), q), Error);
}

TEST_CASE("invariants read off the canonical shape") {
    Gf2k f = f2();
    QuadraticForm h = QuadraticForm::hyperbolic(f, 1);
    CHECK(invariants(h).rank == 2);
    CHECK(invariants(h).disc.is_zero());

    QuadraticForm q3 = direct_sum(QuadraticForm::odd(R("t")), QuadraticForm::binary(R("1"), R("1")));
    CHECK(invariants(q3).rank == 3);
    CHECK(invariants(q3).disc == R("t"));

    QuadraticForm q4 = direct_sum(QuadraticForm::binary(R("1"), R("t")),
                                  QuadraticForm::binary(R("t"), R("t")));
    CHECK(invariants(q4).rank == 4);
    CHECK(invariants(q4).disc == R("t + t^2"));
}

TEST_CASE("Clifford symbol lists") {
    Gf2k f = f2();
    SUBCASE("hyperbolic spaces are trivial everywhere") {
        QuadraticForm h3 = QuadraticForm::hyperbolic(f, 3);
        CliffordData cd = clifford_symbol_list(h3);
        for (const SymbolPair& p : cd.symbols) CHECK(p.trivially_split());
        for (const Place& v : cd.support) CHECK(cd.class_at(v) == 0);
    }
    SUBCASE("odd part scales the pair") {
        QuadraticForm q = direct_sum(QuadraticForm::odd(R("t")), QuadraticForm::binary(R("1"), R("t+1")));
        CliffordData cd = clifford_symbol_list(q);
        REQUIRE(cd.symbols.size() == 1);
        CHECK(cd.symbols[0].as_slot == R("t+1"));   // a*b
        CHECK(cd.symbols[0].mult_slot == R("t"));   // d*a
    }
    SUBCASE("division pair has classes at t and t+1 only") {
        QuadraticForm q = QuadraticForm::binary(R("1+t"), R("1/(t*(1+t))"));
        CliffordData cd = clifford_symbol_list(q);
        REQUIRE(cd.symbols.size() == 1);
        CHECK(cd.symbols[0].as_slot == R("1/t"));
        CHECK(cd.symbols[0].mult_slot == R("1+t"));
        CHECK(cd.class_at(Place::finite(parse_poly(f, "t"))) == 1);
        CHECK(cd.class_at(Place::finite(parse_poly(f, "t+1"))) == 1);
        CHECK(cd.class_at(Place::infinity(f)) == 0);
        CHECK(cd.class_at(Place::finite(parse_poly(f, "t^2+t+1"))) == 0);
    }
}

TEST_CASE("direct sums") {
    Gf2k f = f2();
    QuadraticForm h = QuadraticForm::hyperbolic(f, 1);
    CHECK(invariants(direct_sum(h, h)).rank == 4);
    CHECK(invariants(direct_sum(h, h)).disc.is_zero());
    CHECK(direct_sum(QuadraticForm::odd(R("1")), h).rank() == 3);
    CHECK_THROWS_AS((void)direct_sum(QuadraticForm::odd(R("1")), QuadraticForm::odd(R("t"))), Error);
}

TEST_CASE("support places") {
    Gf2k f = f2();
    QuadraticForm h = QuadraticForm::hyperbolic(f, 1);
    SUBCASE("hyperbolic support is just infinity") {
        std::vector<Place> s = support_places(h, h);
        REQUIRE(s.size() == 1);
        CHECK(s[0].is_infinity());
    }
    SUBCASE("[1, 1/t]") {
        QuadraticForm q = QuadraticForm::binary(R("1"), R("1/t"));
        std::vector<Place> s = support_places(q, q);
        REQUIRE(s.size() == 2);
        CHECK(s[0] == Place::finite(parse_poly(f, "t")));
        CHECK(s[1].is_infinity());
    }
    SUBCASE("slots are factored") {
        QuadraticForm q = QuadraticForm::binary(R("1+t"), R("1/(t*(1+t))"));
        std::vector<Place> s = support_places(q, q);
        REQUIRE(s.size() == 3);
        CHECK(s[0] == Place::finite(parse_poly(f, "t")));
        CHECK(s[1] == Place::finite(parse_poly(f, "t+1")));
        CHECK(s[2].is_infinity());
    }
}

TEST_CASE("normalization invariance under planted transports") {
    Rng rng(616);
    for (int k : {1, 2}) {
        Gf2k f(k);
        for (int trial = 0; trial < 20; ++trial) {
            int rank = 1 + static_cast<int>(rng() % 5);
            QuadraticForm q = random_form(rng, f, rank, 2);
            GramInput g = gram_of(q);
            QuadraticForm qn = normalize(g);
            CHECK(qn.rank() == q.rank());
            CHECK(global_disc_equal(qn, q));
            CHECK(global_clifford_equal(qn, q).equal);

            Matrix T = random_invertible(rng, f, rank);
            QuadraticForm qt = normalize(gram_transport(g, T));
            CHECK(qt.rank() == q.rank());
            CHECK(global_disc_equal(qt, q));
            CHECK(global_clifford_equal(qt, q).equal);
        }
    }
}

TEST_CASE("scaling preserves the right invariants") {
    Rng rng(717);
    Gf2k f(2);
    for (int trial = 0; trial < 20; ++trial) {
        int rank = 1 + static_cast<int>(rng() % 5);
        QuadraticForm q = random_form(rng, f, rank, 2);
        RatFunc a = random_ratfunc(rng, f, 2, true);
        QuadraticForm s = scale(a, q);
        CHECK(s.rank() == q.rank());
        if (rank % 2 == 0) {
            CHECK(arf_representative(s) == arf_representative(q));  // exact, pairwise
        } else {
            CHECK(*s.odd_part() == a * *q.odd_part());
            // odd-rank Clifford classes are scaling-invariant
            CliffordData cq = clifford_symbol_list(q), cs = clifford_symbol_list(s);
            std::vector<Place> places = support_places(q, s);
            for (const Place& v : places) CHECK(cq.class_at(v) == cs.class_at(v));
        }
    }
}

TEST_CASE("Clifford data satisfies reciprocity") {
    Rng rng(818);
    for (int k : {1, 2}) {
        Gf2k f(k);
        for (int trial = 0; trial < 15; ++trial) {
            QuadraticForm q = random_form(rng, f, 1 + static_cast<int>(rng() % 6), 2);
            CliffordData cd = clifford_symbol_list(q);
            int acc = 0;
            for (const Place& v : cd.support) acc ^= cd.class_at(v);
            CHECK(acc == 0);
        }
    }
}
