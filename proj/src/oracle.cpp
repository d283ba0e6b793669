/*
   Copyright 2026 The qf2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "oracle.hpp"

#include <algorithm>
#include <sstream>

namespace qf2 {

namespace {

// Common-denominator clearing: q(x) * D as polynomial coefficients c~_ij.
struct ClearedForm {
    std::vector<std::vector<Poly>> coeff;  // full upper triangle, coeff[i][j-i]
    int n;
};

ClearedForm clear_denominators(const GramInput& g) {
    Gf2k fld = g.field;
    Poly lcm = Poly::one(fld);
    for (int i = 0; i < g.rank(); ++i)
        for (int j = i; j < g.rank(); ++j) {
            const Poly& den = g.coeff(i, j).den();
            lcm = lcm * (den / gcd(lcm, den));
        }
    ClearedForm out;
    out.n = g.rank();
    out.coeff.assign(static_cast<size_t>(out.n), {});
    for (int i = 0; i < out.n; ++i)
        for (int j = i; j < out.n; ++j) {
            RatFunc c = g.coeff(i, j) * RatFunc(lcm);
            if (!c.is_polynomial()) fail(Errc::Internal, "denominator clearing failed");
            out.coeff[static_cast<size_t>(i)].push_back(c.num());
        }
    return out;
}

uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        r ^= a << __builtin_ctzll(b);
        b &= b - 1;
    }
    return r;
}

Poly poly_from_bits(Gf2k fld, uint64_t bits) {
    std::vector<FieldElem> c;
    for (uint64_t v = bits; v; v >>= 1) c.push_back(fld.from_bits(static_cast<unsigned>(v & 1)));
    return Poly(fld, std::move(c));
}

// Exhaustive graded search over F_2[t] with packed-word arithmetic.
std::optional<std::vector<Poly>> packed_search(const ClearedForm& cf, Gf2k fld, int bound) {
    int n = cf.n;
    std::vector<std::vector<uint64_t>> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            uint64_t bits = 0;
            const Poly& p = cf.coeff[static_cast<size_t>(i)][static_cast<size_t>(j - i)];
            for (int d = 0; d <= p.degree(); ++d)
                if (p.coeff(d).is_one()) bits |= 1ull << d;
            c[static_cast<size_t>(i)].push_back(bits);
        }
    auto cij = [&](int i, int j) { return c[static_cast<size_t>(i)][static_cast<size_t>(j - i)]; };

    for (int stage = 0; stage <= bound; ++stage) {
        uint64_t lim = 1ull << (stage + 1);
        uint64_t floor_bit = stage == 0 ? 0 : (1ull << stage);
        std::vector<uint64_t> x(static_cast<size_t>(n), 0);
        // odometer advancing the first coordinate fastest
        for (;;) {
            uint64_t maxv = 0;
            for (uint64_t v : x) maxv = std::max(maxv, v);
            bool in_stage = stage == 0 ? maxv > 0 : maxv >= floor_bit;
            if (in_stage) {
                uint64_t acc = 0;
                for (int i = 0; i < n; ++i) {
                    uint64_t xi = x[static_cast<size_t>(i)];
                    if (!xi) continue;
                    for (int j = i; j < n; ++j) {
                        uint64_t xj = x[static_cast<size_t>(j)];
                        if (!xj) continue;
                        uint64_t cc = cij(i, j);
                        if (cc) acc ^= clmul(cc, clmul(xi, xj));
                    }
                }
                if (acc == 0) {
                    std::vector<Poly> coords;
                    coords.reserve(static_cast<size_t>(n));
                    for (uint64_t v : x) coords.push_back(poly_from_bits(fld, v));
                    return coords;
                }
            }
            int i = 0;
            while (i < n && ++x[static_cast<size_t>(i)] == lim) x[static_cast<size_t>(i++)] = 0;
            if (i == n) break;
        }
    }
    return std::nullopt;
}

// Generic graded odometer over F_q[t] coordinates, capped.
std::optional<std::vector<Poly>> generic_search(const ClearedForm& cf, Gf2k fld, int bound,
                                                long max_candidates) {
    int n = cf.n;
    unsigned q = fld.q();
    long tried = 0;
    for (int stage = 0; stage <= bound; ++stage) {
        // each coordinate is a vector of stage+1 coefficient indices
        unsigned long long per = 1;
        for (int i = 0; i <= stage; ++i) per *= q;
        std::vector<unsigned long long> x(static_cast<size_t>(n), 0);
        auto coord_poly = [&](unsigned long long v) {
            std::vector<FieldElem> cc;
            for (int d = 0; d <= stage; ++d) {
                cc.push_back(fld.from_bits(static_cast<unsigned>(v % q)));
                v /= q;
            }
            return Poly(fld, std::move(cc));
        };
        for (;;) {
            bool in_stage = false;
            for (unsigned long long v : x)
                if (v >= per / q && stage > 0) in_stage = true;
            if (stage == 0) {
                for (unsigned long long v : x)
                    if (v) in_stage = true;
            }
            if (in_stage) {
                std::vector<Poly> coords;
                coords.reserve(static_cast<size_t>(n));
                for (unsigned long long v : x) coords.push_back(coord_poly(v));
                // projective normalization: first nonzero coordinate monic
                bool canonical = true;
                for (const Poly& p : coords) {
                    if (p.is_zero()) continue;
                    canonical = p.is_monic();
                    break;
                }
                if (canonical) {
                    if (++tried > max_candidates) return std::nullopt;
                    Poly acc(fld);
                    for (int i = 0; i < n; ++i)
                        for (int j = i; j < n; ++j)
                            acc = acc + cf.coeff[static_cast<size_t>(i)][static_cast<size_t>(j - i)] *
                                            coords[static_cast<size_t>(i)] * coords[static_cast<size_t>(j)];
                    if (acc.is_zero()) return coords;
                }
            }
            int i = 0;
            while (i < n && ++x[static_cast<size_t>(i)] == per) x[static_cast<size_t>(i++)] = 0;
            if (i == n) break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<VectorWitness> search_isotropic(const QuadraticForm& q, int degree_bound,
                                              long max_candidates) {
    if (q.rank() < 1) fail(Errc::InvalidArgument, "isotropy search needs rank >= 1");
    GramInput g = gram_of(q);
    ClearedForm cf = clear_denominators(g);
    Gf2k fld = q.field();

    int max_cdeg = 0;
    for (const auto& row : cf.coeff)
        for (const Poly& p : row) max_cdeg = std::max(max_cdeg, p.degree());
    std::optional<std::vector<Poly>> coords;
    if (fld.k() == 1 && max_cdeg + 2 * degree_bound <= 62)
        coords = packed_search(cf, fld, degree_bound);
    else
        coords = generic_search(cf, fld, degree_bound, max_candidates);
    if (!coords) return std::nullopt;

    std::vector<RatFunc> xs;
    xs.reserve(coords->size());
    for (const Poly& p : *coords) xs.emplace_back(p);
    RatFunc value = g.eval(xs);
    if (!value.is_zero()) fail(Errc::Internal, "isotropic witness failed exact verification");
    return VectorWitness{std::move(*coords), value};
}

bool transport_check(const QuadraticForm& f, const QuadraticForm& g, const Matrix& T) {
    if (f.rank() != g.rank()) fail(Errc::RankMismatch, "transport between different ranks");
    if (static_cast<int>(T.size()) != f.rank()) fail(Errc::RankMismatch, "transport matrix of wrong size");
    if (!matrix_invertible(T)) fail(Errc::SingularMatrix, "transport matrix is singular");
    GramInput lhs = gram_transport(gram_of(f), T);
    GramInput rhs = gram_of(g);
    for (int i = 0; i < f.rank(); ++i)
        for (int j = i; j < f.rank(); ++j)
            if (lhs.coeff(i, j) != rhs.coeff(i, j)) return false;
    return true;
}

bool check_reciprocity(const SymbolPair& p) {
    std::vector<Place> places = finite_support(p.as_slot);
    for (Place& v : finite_support(p.mult_slot)) places.push_back(std::move(v));
    places.push_back(Place::infinity(p.as_slot.field()));
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    int acc = 0;
    for (const Place& v : places) acc ^= schmid_symbol(p, v);
    return acc == 0;
}

bool albert_check(const RatFunc& a1, const RatFunc& b1, const RatFunc& a2, const RatFunc& b2) {
    Gf2k fld = a1.field();
    QuadraticForm phi =
        direct_sum(direct_sum(QuadraticForm::binary(RatFunc::one(fld), a1 * b1 + a2 * b2),
                              QuadraticForm::binary(a1, b1)),
                   QuadraticForm::binary(a2, b2));
    for (const Place& v : support_places(phi, phi)) {
        int xor_class = quaternion_class(a1, b1, v) ^ quaternion_class(a2, b2, v);
        bool split_here = local_profile(phi, v).witt_index > 1;
        if (split_here != (xor_class == 0)) return false;
    }
    return true;
}

FieldElem random_field_elem(Rng& rng, Gf2k field) {
    return field.from_bits(static_cast<unsigned>(rng() % field.q()));
}

Poly random_poly(Rng& rng, Gf2k field, int max_deg) {
    int deg = static_cast<int>(rng() % static_cast<uint64_t>(max_deg + 1));
    std::vector<FieldElem> c;
    c.reserve(static_cast<size_t>(deg + 1));
    for (int i = 0; i <= deg; ++i) c.push_back(random_field_elem(rng, field));
    return Poly(field, std::move(c));
}

Poly random_monic(Rng& rng, Gf2k field, int max_deg) {
    int deg = static_cast<int>(rng() % static_cast<uint64_t>(max_deg + 1));
    std::vector<FieldElem> c;
    c.reserve(static_cast<size_t>(deg + 1));
    for (int i = 0; i < deg; ++i) c.push_back(random_field_elem(rng, field));
    c.push_back(field.one());
    return Poly(field, std::move(c));
}

RatFunc random_ratfunc(Rng& rng, Gf2k field, int max_deg, bool nonzero) {
    for (;;) {
        RatFunc u(random_poly(rng, field, max_deg), random_monic(rng, field, max_deg));
        if (!nonzero || !u.is_zero()) return u;
    }
}

QuadraticForm random_form(Rng& rng, Gf2k field, int rank, int coeff_deg) {
    std::optional<RatFunc> odd_part;
    if (rank % 2 == 1) odd_part = random_ratfunc(rng, field, coeff_deg, true);
    std::vector<BinaryPair> bs;
    for (int i = 0; i < rank / 2; ++i)
        bs.emplace_back(random_ratfunc(rng, field, coeff_deg, false),
                        random_ratfunc(rng, field, coeff_deg, false));
    return QuadraticForm(field, std::move(odd_part), std::move(bs));
}

Matrix random_invertible(Rng& rng, Gf2k field, int n) {
    Matrix T = identity_matrix(field, n);
    int ops = 2 * n + 2;
    for (int o = 0; o < ops; ++o) {
        switch (rng() % 3) {
            case 0: {  // row_i += u * row_j
                if (n < 2) break;
                int i = static_cast<int>(rng() % static_cast<uint64_t>(n));
                int j = static_cast<int>(rng() % static_cast<uint64_t>(n));
                if (i == j) break;
                RatFunc u = random_ratfunc(rng, field, 1, false);
                for (int c = 0; c < n; ++c)
                    T[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                        T[static_cast<size_t>(i)][static_cast<size_t>(c)] +
                        u * T[static_cast<size_t>(j)][static_cast<size_t>(c)];
                break;
            }
            case 1: {  // swap
                int i = static_cast<int>(rng() % static_cast<uint64_t>(n));
                int j = static_cast<int>(rng() % static_cast<uint64_t>(n));
                std::swap(T[static_cast<size_t>(i)], T[static_cast<size_t>(j)]);
                break;
            }
            default: {  // scale by a nonzero function
                int i = static_cast<int>(rng() % static_cast<uint64_t>(n));
                RatFunc u = random_ratfunc(rng, field, 1, true);
                for (int c = 0; c < n; ++c)
                    T[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                        T[static_cast<size_t>(i)][static_cast<size_t>(c)] * u;
                break;
            }
        }
    }
    return T;
}

Place random_place(Rng& rng, Gf2k field, int max_deg) {
    if (rng() % 8 == 0) return Place::infinity(field);
    for (;;) {
        int deg = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_deg));
        std::vector<FieldElem> c;
        for (int i = 0; i < deg; ++i) c.push_back(random_field_elem(rng, field));
        c.push_back(field.one());
        Poly p(field, std::move(c));
        if (is_irreducible(p)) return Place::finite(p);
    }
}

namespace {

std::string describe_form(const QuadraticForm& q) {
    std::ostringstream os;
    os << "rank " << q.rank();
    return os.str();
}

}  // namespace

FuzzReport fuzz_normalization(uint64_t seed, int trials, Gf2k field) {
    FuzzReport rep;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++rep.trials;
        int rank = 1 + static_cast<int>(rng() % 5);
        QuadraticForm planted = random_form(rng, field, rank, 2);
        GramInput g1 = gram_of(planted);
        Matrix T = random_invertible(rng, field, rank);
        GramInput g2 = gram_transport(g1, T);
        QuadraticForm q1 = normalize(g1);
        QuadraticForm q2 = normalize(g2);

        std::string why;
        if (q1.rank() != q2.rank()) {
            why = "rank changed";
        } else if (!global_disc_equal(q1, q2)) {
            why = "discriminant class changed";
        } else {
            CliffordCompare cc = global_clifford_equal(q1, q2);
            if (!cc.equal) why = "local Clifford class changed";
        }
        if (!why.empty()) {
            ++rep.failures;
            if (rep.first_failure.empty()) {
                std::ostringstream os;
                os << why << " (seed " << seed << ", trial " << t << ", " << describe_form(planted) << ")";
                rep.first_failure = os.str();
            }
        }
    }
    return rep;
}

}  // namespace qf2
