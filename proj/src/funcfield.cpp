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

#include "funcfield.hpp"

#include <algorithm>

namespace qf2 {

Place Place::finite(Poly pi) {
    if (pi.degree() < 1) fail(Errc::InvalidArgument, "a finite place needs degree >= 1");
    if (!pi.is_monic()) pi = make_monic(pi);
    if (!is_irreducible(pi)) fail(Errc::InvalidArgument, "a finite place must be irreducible");
    return Place(false, std::move(pi));
}

Place Place::infinity(Gf2k field) { return Place(true, Poly::t(field)); }

const Poly& Place::pi() const {
    if (infinite_) fail(Errc::InvalidArgument, "the infinite place has no polynomial");
    return pi_;
}

bool Place::operator==(const Place& o) const {
    if (infinite_ != o.infinite_) return false;
    return infinite_ || pi_ == o.pi_;
}

bool Place::operator<(const Place& o) const {
    if (infinite_ != o.infinite_) return !infinite_;  // finite places first
    if (infinite_) return false;
    return poly_cmp(pi_, o.pi_) < 0;
}

ResidueData residue_data(const Place& v) {
    if (v.is_infinity()) {
        ExtFieldPtr fld = ExtField::make(Poly::t(v.field()));
        ExtElem root = fld->zero();
        return ResidueData{v, fld, root, 0, 1};
    }
    ExtFieldPtr fld = ExtField::make(v.pi());
    ExtElem best = fld->gen();
    int best_shift = 0;
    ExtElem cur = best;
    for (int j = 1; j < v.degree(); ++j) {
        cur = cur.frobenius_q();
        if (ExtElem::cmp(cur, best) < 0) {
            best = cur;
            best_shift = j;
        }
    }
    return ResidueData{v, fld, best, best_shift, v.degree()};
}

Poly ResidueData::lift(const ExtElem& e) const {
    // root = xbar^(q^j); with F_q coefficients B(root) = B(xbar)^(q^j), so the
    // representative of e^(q^(d-j)) evaluates back to e at the root.
    int d = num_roots;
    ExtElem w = e;
    for (int i = 0; i < (d - canon_shift) % d; ++i) w = w.frobenius_q();
    return w.rep_poly();
}

ExtElem residue_root(const ResidueData& rd, int shift) {
    ExtElem r = rd.root;
    for (int i = 0; i < shift % rd.num_roots; ++i) r = r.frobenius_q();
    return r;
}

namespace {

int multiplicity(Poly f, const Poly& pi) {
    int m = 0;
    for (;;) {
        auto [q, r] = divmod(f, pi);
        if (!r.is_zero()) return m;
        ++m;
        f = q;
    }
}

}  // namespace

Valuation valuation(const RatFunc& u, const Place& v) {
    if (u.is_zero()) return Valuation{true, 0};
    if (v.is_infinity()) return Valuation{false, static_cast<long>(u.den().degree() - u.num().degree())};
    int mn = multiplicity(u.num(), v.pi());
    int md = mn > 0 ? 0 : multiplicity(u.den(), v.pi());  // num, den coprime
    return Valuation{false, static_cast<long>(mn - md)};
}

ExtElem LaurentExpansion::at(int exponent) const {
    int idx = exponent - start;
    if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return field->zero();
    return coeffs[static_cast<size_t>(idx)];
}

namespace {

using Series = std::vector<ExtElem>;  // ascending powers of the uniformizer

// Coefficients of p(alpha + s) as a polynomial in s over k_v.
Series embed_shifted(const Poly& p, const ExtElem& alpha) {
    const ExtFieldPtr& fld = alpha.field_ptr();
    Series r;
    for (int i = p.degree(); i >= 0; --i) {
        Series nr(r.size() + 1, fld->zero());
        for (size_t j = 0; j < r.size(); ++j) {
            nr[j + 1] = nr[j + 1] + r[j];
            nr[j] = nr[j] + r[j] * alpha;
        }
        nr[0] = nr[0] + fld->from_base(p.coeff(i));
        r = std::move(nr);
    }
    return r;
}

Series series_inverse(const Series& a, int len, const ExtFieldPtr& fld) {
    Series b(static_cast<size_t>(len), fld->zero());
    ExtElem a0inv = a[0].inv();
    b[0] = a0inv;
    for (int n = 1; n < len; ++n) {
        ExtElem acc = fld->zero();
        for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i)
            acc = acc + a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        b[static_cast<size_t>(n)] = acc * a0inv;
    }
    return b;
}

Series series_mul_trunc(const Series& a, const Series& b, int len, const ExtFieldPtr& fld) {
    Series r(static_cast<size_t>(len), fld->zero());
    for (int i = 0; i < static_cast<int>(a.size()) && i < len; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j < len; ++j)
            r[static_cast<size_t>(i + j)] =
                r[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return r;
}

}  // namespace

LaurentExpansion local_expansion(const RatFunc& u, const Place& v, int precision, int root_shift) {
    if (u.is_zero()) fail(Errc::ZeroElement, "Laurent expansion of 0");
    if (v.is_infinity())
        return local_expansion(substitute_reciprocal(u), Place::finite(Poly::t(v.field())), precision, 0);

    ResidueData rd = residue_data(v);
    ExtElem alpha = residue_root(rd, root_shift);
    Series ns = embed_shifted(u.num(), alpha);
    Series ds = embed_shifted(u.den(), alpha);
    auto first_nonzero = [](const Series& s) {
        for (size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero()) return static_cast<int>(i);
        fail(Errc::Internal, "vanishing embedded polynomial");
    };
    int a = first_nonzero(ns), b = first_nonzero(ds);
    int start = a - b;
    int len = precision - start;
    if (len <= 0) return LaurentExpansion{start, rd.field, {}};
    Series nu(ns.begin() + a, ns.end());
    Series du(ds.begin() + b, ds.end());
    Series c = series_mul_trunc(nu, series_inverse(du, len, rd.field), len, rd.field);
    return LaurentExpansion{start, rd.field, std::move(c)};
}

namespace {

Poly poly_inv_mod(const Poly& a, const Poly& mod) {
    Poly r0 = mod, r1 = a % mod;
    Poly s0 = Poly::zero(mod.field()), s1 = Poly::one(mod.field());
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = s0 + q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) fail(Errc::Internal, "modular inverse of a non-unit");
    return s0 * r0.leading().inv() % mod;
}

}  // namespace

std::vector<PrincipalTerm> principal_part(const RatFunc& u, const Place& v) {
    if (v.is_infinity())
        return principal_part(substitute_reciprocal(u), Place::finite(Poly::t(v.field())));
    if (u.is_zero()) return {};
    Valuation val = valuation(u, v);
    if (val.v >= 0) return {};
    int m = static_cast<int>(-val.v);
    Poly pim = Poly::one(v.field());
    for (int i = 0; i < m; ++i) pim = pim * v.pi();
    Poly h = u.den() / pim;
    Poly b = u.num() * poly_inv_mod(h, pim) % pim;
    std::vector<PrincipalTerm> out;
    for (int i = 0; i < m; ++i) {  // pi-adic digits, lowest order of pi first
        auto [q, digit] = divmod(b, v.pi());
        if (!digit.is_zero()) out.push_back(PrincipalTerm{m - i, digit});
        b = q;
    }
    std::sort(out.begin(), out.end(), [](const PrincipalTerm& x, const PrincipalTerm& y) {
        return x.order < y.order;
    });
    return out;
}

ExtElem residue_of_differential(const RatFunc& u, const Place& v, int root_shift) {
    if (v.is_infinity()) {
        ResidueData rd = residue_data(v);
        if (u.is_zero()) return rd.field->zero();
        // dt = ds/s^2 under t = 1/s, so Res = [s^1] u(1/s)
        RatFunc uh = substitute_reciprocal(u);
        LaurentExpansion e = local_expansion(uh, Place::finite(Poly::t(v.field())), 2, 0);
        ExtElem r = e.at(1);
        return rd.field->from_poly(r.rep_poly());
    }
    ResidueData rd = residue_data(v);
    if (u.is_zero()) return rd.field->zero();
    if (valuation(u, v).v >= 0) return rd.field->zero();
    LaurentExpansion e = local_expansion(u, v, 0, root_shift);
    return e.at(-1);
}

RatFunc substitute_reciprocal(const RatFunc& u) {
    if (u.is_zero()) return u;
    Gf2k f = u.field();
    auto reversed = [&](const Poly& p) {
        std::vector<FieldElem> c(p.coeffs().rbegin(), p.coeffs().rend());
        return Poly(f, std::move(c));
    };
    int dn = u.num().degree(), dd = u.den().degree();
    Poly n = reversed(u.num());
    Poly d = reversed(u.den());
    if (dd > dn)
        n = n.shifted(dd - dn);
    else if (dn > dd)
        d = d.shifted(dn - dd);
    return RatFunc(std::move(n), std::move(d));
}

std::vector<Place> finite_support(const RatFunc& u) {
    std::vector<Place> out;
    if (u.is_zero()) return out;
    for (const Poly& p : {u.num(), u.den()})
        if (p.degree() > 0)
            for (const auto& [pi, mult] : factorize(p)) out.push_back(Place::finite(pi));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<RatFunc> global_as_test(const RatFunc& c) {
    Gf2k fld = c.field();
    if (c.is_zero()) return RatFunc::zero(fld);

    // Poles of any preimage: half the (necessarily even) pole orders of c.
    Poly d_poly = Poly::one(fld);
    if (c.den().degree() > 0) {
        for (const auto& [pi, mult] : factorize(c.den())) {
            if (mult % 2 != 0) return std::nullopt;
            for (int i = 0; i < mult / 2; ++i) d_poly = d_poly * pi;
        }
    }
    int pole_inf = c.num().degree() - c.den().degree();
    if (pole_inf > 0 && pole_inf % 2 != 0) return std::nullopt;
    int e_inf = pole_inf > 0 ? pole_inf / 2 : 0;

    int deg_y = d_poly.degree() + e_inf;
    RatFunc e_rf = c * RatFunc(d_poly * d_poly);
    if (!e_rf.is_polynomial()) fail(Errc::Internal, "cleared Artin-Schreier target not polynomial");
    const Poly& e_poly = e_rf.num();

    // Solve Y^2 + Y*D = E over the F_2-coordinates of the coefficients of Y.
    int k = fld.k();
    int unknowns = (deg_y + 1) * k;
    int max_coeff = std::max({2 * deg_y, deg_y + d_poly.degree(), e_poly.degree()});
    int rows_n = (max_coeff + 1) * k;

    auto poly_bits = [&](const Poly& p, std::vector<uint8_t>& row) {
        for (int ci = 0; ci <= p.degree(); ++ci) {
            unsigned bits = p.coeff(ci).bits();
            for (int bi = 0; bi < k; ++bi)
                if (bits >> bi & 1) row[static_cast<size_t>(ci * k + bi)] ^= 1;
        }
    };

    // rows x (unknowns + 1), the last column holding E
    std::vector<std::vector<uint8_t>> m(static_cast<size_t>(rows_n),
                                        std::vector<uint8_t>(static_cast<size_t>(unknowns + 1), 0));
    for (int j = 0; j <= deg_y; ++j)
        for (int bi = 0; bi < k; ++bi) {
            FieldElem e = fld.from_bits(1u << bi);
            Poly contrib = Poly::constant(e.square()).shifted(2 * j) + (d_poly * e).shifted(j);
            std::vector<uint8_t> col(static_cast<size_t>(rows_n), 0);
            poly_bits(contrib, col);
            int u_idx = j * k + bi;
            for (int r = 0; r < rows_n; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(u_idx)] = col[static_cast<size_t>(r)];
        }
    {
        std::vector<uint8_t> rhs(static_cast<size_t>(rows_n), 0);
        poly_bits(e_poly, rhs);
        for (int r = 0; r < rows_n; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(unknowns)] = rhs[static_cast<size_t>(r)];
    }

    // Gauss-Jordan over F_2
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < unknowns && rank < rows_n; ++col) {
        int sel = -1;
        for (int r = rank; r < rows_n; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(rank)]);
        for (int r = 0; r < rows_n; ++r)
            if (r != rank && m[static_cast<size_t>(r)][static_cast<size_t>(col)])
                for (int cc = col; cc <= unknowns; ++cc)
                    m[static_cast<size_t>(r)][static_cast<size_t>(cc)] ^=
                        m[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < rows_n; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(unknowns)]) return std::nullopt;

    std::vector<unsigned> ycoeff(static_cast<size_t>(deg_y + 1), 0);
    for (int r = 0; r < rank; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(unknowns)]) {
            int col = pivot_col[static_cast<size_t>(r)];
            ycoeff[static_cast<size_t>(col / k)] |= 1u << (col % k);
        }
    std::vector<FieldElem> yc;
    yc.reserve(ycoeff.size());
    for (unsigned b : ycoeff) yc.push_back(fld.from_bits(b));
    RatFunc y(Poly(fld, std::move(yc)), d_poly);

    // The solution pair is {y, y+1}; keep the deterministic smaller one.
    RatFunc y1 = y + RatFunc::one(fld);
    auto rf_less = [](const RatFunc& a, const RatFunc& b) {
        int cn = poly_cmp(a.num(), b.num());
        if (cn != 0) return cn < 0;
        return poly_cmp(a.den(), b.den()) < 0;
    };
    if (rf_less(y1, y)) y = y1;
    if (y.wp() != c) fail(Errc::Internal, "Artin-Schreier preimage failed to verify");
    return y;
}

}  // namespace qf2
