#include <doctest.h>

#include <random>

#include "localinv.hpp"
#include "oracle.hpp"

using namespace qf2;

namespace {

Gf2k f2() { return Gf2k(1); }

RatFunc parse2(std::initializer_list<unsigned> num, std::initializer_list<unsigned> den) {
    auto mk = [](std::initializer_list<unsigned> bits) {
        std::vector<FieldElem> c;
        for (unsigned b : bits) c.push_back(FieldElem(static_cast<uint8_t>(b), 1));
        return Poly(Gf2k(1), std::move(c));
    };
    return RatFunc(mk(num), mk(den));
}

Place place_t() { return Place::finite(Poly::t(f2())); }
Place place_t1() { return Place::finite(Poly(f2(), {f2().one(), f2().one()})); }
Place place_q() { return Place::finite(Poly(f2(), {f2().one(), f2().one(), f2().one()})); }

}  // namespace

TEST_CASE("local square classes") {
    Gf2k f = f2();
    RatFunc one = RatFunc::one(f), t = RatFunc::t(f);
    CHECK(local_square_equal(t * t, one, place_t()));
    CHECK(local_square_equal(t * t, one, Place::infinity(f)));
    CHECK(!local_square_equal(t, one, place_t()));
    // t^2+t+1 is not a square: its expansion at t has a linear term
    CHECK(!local_square_equal(parse2({1, 1, 1}, {1}), one, place_t()));
    {
        LaurentExpansion e = local_expansion(parse2({1, 1, 1}, {1}), place_t(), 2);
        CHECK(!e.at(1).is_zero());
    }
    CHECK_THROWS_AS((void)local_square_equal(RatFunc::zero(f), one, place_t()), Error);
}

TEST_CASE("wp-membership at a place") {
    Gf2k f = f2();
    RatFunc one = RatFunc::one(f), t = RatFunc::t(f);
    CHECK(local_wp_member(one / (t * t) + one / t, place_t()));  // wp(1/t)
    CHECK(!local_wp_member(one / (t * t), place_t()));           // reduction leaves 1/t
    CHECK(!local_wp_member(one, place_t()));                     // trace of 1 in F_2
    CHECK(local_wp_member(RatFunc::zero(f), place_t()));

    SUBCASE("agrees with the global test on planted preimages") {
        Rng rng(404);
        for (int k : {1, 2}) {
            Gf2k fk(k);
            for (int trial = 0; trial < 25; ++trial) {
                RatFunc c = random_ratfunc(rng, fk, 3, false).wp();
                std::vector<Place> places = finite_support(c);
                places.push_back(Place::infinity(fk));
                places.push_back(random_place(rng, fk, 2));
                for (const Place& v : places) CHECK(local_wp_member(c, v));
            }
        }
    }
    SUBCASE("global failure has a local witness in the support") {
        Rng rng(405);
        for (int trial = 0; trial < 40; ++trial) {
            RatFunc c = random_ratfunc(rng, Gf2k(1), 3, true);
            if (global_as_test(c)) continue;
            std::vector<Place> places = finite_support(c);
            places.push_back(Place::infinity(c.field()));
            bool found = false;
            for (const Place& v : places) found = found || !local_wp_member(c, v);
            CHECK(found);
        }
    }
}

TEST_CASE("Schmid symbol examples") {
    Gf2k f = f2();
    RatFunc one = RatFunc::one(f), t = RatFunc::t(f);
    SymbolPair p(one / t, one + t);
    CHECK(schmid_symbol(p, place_t()) == 1);
    CHECK(schmid_symbol(p, place_t1()) == 1);
    CHECK(schmid_symbol(p, Place::infinity(f)) == 0);
    CHECK(schmid_symbol(SymbolPair(t, one), place_t()) == 0);  // dy = 0
    for (const Place& v : {place_t(), place_t1(), Place::infinity(f), place_q()})
        CHECK(schmid_symbol(SymbolPair(t, t), v) == 0);  // x dy/y = dt, no residues
    CHECK_THROWS_AS(SymbolPair(t, RatFunc::zero(f)), Error);
}

TEST_CASE("symbol bilinearity, wp-kill, and symmetry") {
    Rng rng(808);
    for (int k : {1, 2}) {
        Gf2k fk(k);
        for (int trial = 0; trial < 30; ++trial) {
            RatFunc x1 = random_ratfunc(rng, fk, 2, false), x2 = random_ratfunc(rng, fk, 2, false);
            RatFunc y1 = random_ratfunc(rng, fk, 2, true), y2 = random_ratfunc(rng, fk, 2, true);
            Place v = random_place(rng, fk, 2);
            CHECK(schmid_symbol(SymbolPair(x1 + x2, y1), v) ==
                  (schmid_symbol(SymbolPair(x1, y1), v) ^ schmid_symbol(SymbolPair(x2, y1), v)));
            CHECK(schmid_symbol(SymbolPair(x1, y1 * y2), v) ==
                  (schmid_symbol(SymbolPair(x1, y1), v) ^ schmid_symbol(SymbolPair(x1, y2), v)));
            // wp-images kill the symbol
            RatFunc z = random_ratfunc(rng, fk, 2, false);
            CHECK(schmid_symbol(SymbolPair(z.wp(), y1), v) == 0);
            // quaternion symmetry
            CHECK(quaternion_class(x1, x2, v) == quaternion_class(x2, x1, v));
        }
    }
}

TEST_CASE("symbol is independent of the residue root") {
    Rng rng(909);
    for (int k : {1, 2}) {
        Gf2k fk(k);
        for (int trial = 0; trial < 15; ++trial) {
            RatFunc x = random_ratfunc(rng, fk, 3, true);
            RatFunc y = random_ratfunc(rng, fk, 3, true);
            SymbolPair p(x, y);
            for (int deg : {2, 3}) {
                Place v = Place::finite(monic_irreducibles(fk, deg).front());
                int base = schmid_symbol(p, v, 0);
                for (int shift = 1; shift < deg; ++shift) CHECK(schmid_symbol(p, v, shift) == base);
            }
        }
    }
}

TEST_CASE("quaternion class examples") {
    Gf2k f = f2();
    RatFunc one = RatFunc::one(f), t = RatFunc::t(f), zero = RatFunc::zero(f);
    RatFunc w = one / (t * (one + t));
    for (const Place& v : {place_t(), place_t1(), Place::infinity(f)}) {
        CHECK(quaternion_class(zero, t, v) == 0);       // [0,b] is isotropic
        CHECK(quaternion_class(one, one / t, v) == 0);  // {1,c} contains a nilpotent
    }
    CHECK(quaternion_class(one + t, w, place_t()) == 1);  // reduces to (1/t, 1+t]
    CHECK(quaternion_class(one + t, w, place_t1()) == 1);
    CHECK(quaternion_class(one + t, w, Place::infinity(f)) == 0);
}

TEST_CASE("local profiles") {
    Gf2k f = f2();
    RatFunc one = RatFunc::one(f), t = RatFunc::t(f);
    SUBCASE("hyperbolic plane") {
        QuadraticForm h = QuadraticForm::hyperbolic(f, 1);
        for (const Place& v : {place_t(), place_q(), Place::infinity(f)}) {
            LocalProfile p = local_profile(h, v);
            CHECK(p.anis_rank == 0);
            CHECK(p.witt_index == 1);
            CHECK(p.disc_trivial);
            CHECK(p.clifford_class == 0);
        }
    }
    SUBCASE("[1, 1/t] at t") {
        LocalProfile p = local_profile(QuadraticForm::binary(one, one / t), place_t());
        CHECK(!p.disc_trivial);
        CHECK(p.anis_rank == 2);
        CHECK(p.witt_index == 0);
    }
    SUBCASE("rank 5 always has positive Witt index") {
        Rng rng(111);
        for (int trial = 0; trial < 15; ++trial) {
            QuadraticForm q = random_form(rng, f, 5, 2);
            Place v = random_place(rng, f, 2);
            LocalProfile p = local_profile(q, v);
            CHECK((p.anis_rank == 1 || p.anis_rank == 3));
            CHECK(p.witt_index >= 1);
        }
    }
    SUBCASE("forced table: low ranks cannot demand m > n") {
        Rng rng(222);
        for (int trial = 0; trial < 40; ++trial) {
            Place v = random_place(rng, f, 2);
            QuadraticForm q1 = random_form(rng, f, 1, 2);
            CHECK(local_profile(q1, v).clifford_class == 0);
            QuadraticForm q2 = random_form(rng, f, 2, 2);
            LocalProfile p2 = local_profile(q2, v);
            if (p2.disc_trivial) CHECK(p2.clifford_class == 0);
        }
    }
}

TEST_CASE("local isometry") {
    Gf2k f = f2();
    RatFunc one = RatFunc::one(f), t = RatFunc::t(f);
    QuadraticForm h = QuadraticForm::hyperbolic(f, 1);
    QuadraticForm bad = QuadraticForm::binary(one, one / t);
    QuadraticForm iso10 = QuadraticForm::binary(one, RatFunc::zero(f));
    Rng rng(333);
    for (int trial = 0; trial < 10; ++trial) {
        QuadraticForm q = random_form(rng, f, 1 + static_cast<int>(rng() % 4), 2);
        Place v = random_place(rng, f, 2);
        CHECK(local_isometric(q, q, v));
    }
    CHECK(!local_isometric(h, bad, place_t()));
    for (const Place& v : {place_t(), place_t1(), place_q(), Place::infinity(f)})
        CHECK(local_isometric(iso10, h, v));  // [1,0] is isotropic with trivial invariants
}

TEST_CASE("local similarity") {
    Gf2k f = f2();
    RatFunc one = RatFunc::one(f), t = RatFunc::t(f);
    Rng rng(444);
    SUBCASE("scaling is a local similarity") {
        for (int trial = 0; trial < 12; ++trial) {
            QuadraticForm q = random_form(rng, f, 1 + static_cast<int>(rng() % 4), 2);
            RatFunc a = random_ratfunc(rng, f, 2, true);
            Place v = random_place(rng, f, 2);
            CHECK(local_similar(q, scale(a, q), v));
        }
    }
    SUBCASE("rank-1 forms are all similar") {
        for (const Place& v : {place_t(), place_q(), Place::infinity(f)})
            CHECK(local_similar(QuadraticForm::odd(one), QuadraticForm::odd(t), v));
    }
    SUBCASE("Witt index mismatch refutes") {
        CHECK(!local_similar(QuadraticForm::hyperbolic(f, 1), QuadraticForm::binary(one, one / t),
                             place_t()));
    }
    SUBCASE("rank mismatch is an error") {
        CHECK_THROWS_AS(
            (void)local_similar(QuadraticForm::odd(one), QuadraticForm::hyperbolic(f, 1), place_t()),
            Error);
    }
}
