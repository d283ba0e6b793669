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

#include "qform.hpp"

#include <algorithm>

namespace qf2 {

QuadraticForm::QuadraticForm(Gf2k field, std::optional<RatFunc> odd_part, std::vector<BinaryPair> binaries)
    : k_(field.k()), odd_(std::move(odd_part)), binaries_(std::move(binaries)) {
    if (odd_ && odd_->is_zero()) fail(Errc::DegenerateForm, "odd part must be nonzero");
    if (odd_ && odd_->field() != field) fail(Errc::ModulusMismatch, "odd part over a different field");
    for (const BinaryPair& p : binaries_)
        if (p.first.field() != field || p.second.field() != field)
            fail(Errc::ModulusMismatch, "binary pair over a different field");
}

QuadraticForm QuadraticForm::odd(RatFunc d) {
    Gf2k f = d.field();
    return QuadraticForm(f, std::move(d), {});
}

QuadraticForm QuadraticForm::binary(RatFunc a, RatFunc b) {
    Gf2k f = a.field();
    return QuadraticForm(f, std::nullopt, {{std::move(a), std::move(b)}});
}

QuadraticForm QuadraticForm::hyperbolic(Gf2k field, int copies) {
    std::vector<BinaryPair> bs(static_cast<size_t>(copies), {RatFunc::zero(field), RatFunc::zero(field)});
    return QuadraticForm(field, std::nullopt, std::move(bs));
}

bool QuadraticForm::operator==(const QuadraticForm& o) const {
    if (k_ != o.k_ || odd_.has_value() != o.odd_.has_value()) return false;
    if (odd_ && *odd_ != *o.odd_) return false;
    return binaries_ == o.binaries_;
}

const RatFunc& GramInput::coeff(int i, int j) const {
    if (i > j || i < 0 || j >= rank()) fail(Errc::InvalidArgument, "gram index outside the upper triangle");
    return rows[static_cast<size_t>(i)][static_cast<size_t>(j - i)];
}

RatFunc GramInput::eval(const std::vector<RatFunc>& x) const {
    RatFunc acc = RatFunc::zero(field);
    for (int i = 0; i < rank(); ++i)
        for (int j = i; j < rank(); ++j)
            acc = acc + coeff(i, j) * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    return acc;
}

RatFunc GramInput::polar(const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) const {
    // b(x,y) = q(x+y) - q(x) - q(y); diagonal terms drop in characteristic 2
    RatFunc acc = RatFunc::zero(field);
    for (int i = 0; i < rank(); ++i)
        for (int j = i + 1; j < rank(); ++j)
            acc = acc + coeff(i, j) * (x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] +
                                       x[static_cast<size_t>(j)] * y[static_cast<size_t>(i)]);
    return acc;
}

QuadraticForm normalize(const GramInput& input) {
    Gf2k fld = input.field;
    int n = input.rank();
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(input.rows[static_cast<size_t>(i)].size()) != n - i)
            fail(Errc::InvalidArgument, "ragged gram input");

    // working basis as coordinate vectors
    std::vector<std::vector<RatFunc>> basis;
    for (int i = 0; i < n; ++i) {
        std::vector<RatFunc> e(static_cast<size_t>(n), RatFunc::zero(fld));
        e[static_cast<size_t>(i)] = RatFunc::one(fld);
        basis.push_back(std::move(e));
    }

    std::vector<BinaryPair> binaries;
    for (;;) {
        // first u with a nonzero pairing, then first partner w, in row order
        int ui = -1, wi = -1;
        for (size_t i = 0; i < basis.size() && ui < 0; ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                if (!input.polar(basis[i], basis[j]).is_zero()) {
                    ui = static_cast<int>(i);
                    wi = static_cast<int>(j);
                    break;
                }
            }
        if (ui < 0) break;
        std::vector<RatFunc> u = basis[static_cast<size_t>(ui)];
        std::vector<RatFunc> w = basis[static_cast<size_t>(wi)];
        RatFunc buw = input.polar(u, w);
        for (RatFunc& c : w) c = c / buw;  // now b(u, w) = 1
        binaries.emplace_back(input.eval(u), input.eval(w));
        std::vector<std::vector<RatFunc>> rest;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (static_cast<int>(i) == ui || static_cast<int>(i) == wi) continue;
            std::vector<RatFunc> z = basis[i];
            RatFunc zw = input.polar(z, w), zu = input.polar(z, u);
            for (size_t c = 0; c < z.size(); ++c)
                z[c] = z[c] + zw * u[c] + zu * w[c];
            rest.push_back(std::move(z));
        }
        basis = std::move(rest);
    }

    if (basis.size() > 1)
        fail(Errc::DegenerateForm,
             "polar form radical has dimension " + std::to_string(basis.size()));
    std::optional<RatFunc> odd_part;
    if (basis.size() == 1) {
        RatFunc d = input.eval(basis[0]);
        if (d.is_zero()) fail(Errc::DegenerateForm, "form vanishes on the 1-dimensional radical");
        odd_part = d;
    }
    return QuadraticForm(fld, std::move(odd_part), std::move(binaries));
}

QuadraticForm scale(const RatFunc& a, const QuadraticForm& q) {
    if (a.is_zero()) fail(Errc::ZeroScalar, "scaling a form by 0");
    std::optional<RatFunc> odd_part;
    if (q.odd_part()) odd_part = a * *q.odd_part();
    std::vector<BinaryPair> bs;
    bs.reserve(q.binaries().size());
    for (const BinaryPair& p : q.binaries()) bs.emplace_back(a * p.first, p.second / a);
    return QuadraticForm(q.field(), std::move(odd_part), std::move(bs));
}

RatFunc arf_representative(const QuadraticForm& q) {
    RatFunc acc = RatFunc::zero(q.field());
    for (const BinaryPair& p : q.binaries()) acc = acc + p.first * p.second;
    return acc;
}

FormInvariants invariants(const QuadraticForm& q) {
    if (q.odd_part()) return FormInvariants{q.rank(), *q.odd_part()};
    return FormInvariants{q.rank(), arf_representative(q)};
}

int CliffordData::class_at(const Place& v) const {
    int acc = 0;
    for (const SymbolPair& p : symbols) acc ^= schmid_symbol(p, v);
    return acc;
}

namespace {

void collect_support(const RatFunc& u, std::vector<Place>& out) {
    for (Place& p : finite_support(u)) out.push_back(std::move(p));
}

std::vector<Place> finish_support(std::vector<Place> acc, Gf2k field) {
    acc.push_back(Place::infinity(field));
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

}  // namespace

CliffordData clifford_symbol_list(const QuadraticForm& q) {
    CliffordData out;
    const std::optional<RatFunc>& d = q.odd_part();
    for (const BinaryPair& p : q.binaries()) {
        // odd rank: Clif_0(<d> | R) matches Clif(dR), so scale the pair by d
        SymbolPair sp = d ? SymbolPair::quaternion(*d * p.first, p.second / *d)
                          : SymbolPair::quaternion(p.first, p.second);
        out.symbols.push_back(std::move(sp));
    }
    std::vector<Place> acc;
    for (const SymbolPair& sp : out.symbols) {
        if (sp.trivially_split()) continue;
        collect_support(sp.as_slot, acc);
        collect_support(sp.mult_slot, acc);
    }
    out.support = finish_support(std::move(acc), q.field());
    return out;
}

QuadraticForm direct_sum(const QuadraticForm& f, const QuadraticForm& g) {
    if (f.field() != g.field()) fail(Errc::ModulusMismatch, "direct sum over different fields");
    if (f.odd_part() && g.odd_part())
        fail(Errc::TwoOddParts, "direct sum of two odd parts is degenerate; normalize a gram input instead");
    std::optional<RatFunc> odd_part = f.odd_part() ? f.odd_part() : g.odd_part();
    std::vector<BinaryPair> bs = f.binaries();
    bs.insert(bs.end(), g.binaries().begin(), g.binaries().end());
    return QuadraticForm(f.field(), std::move(odd_part), std::move(bs));
}

std::vector<Place> support_places(const QuadraticForm& f, const QuadraticForm& g) {
    if (f.field() != g.field()) fail(Errc::ModulusMismatch, "support of forms over different fields");
    std::vector<Place> acc;
    for (const QuadraticForm* q : {&f, &g}) {
        if (q->odd_part()) collect_support(*q->odd_part(), acc);
        for (const BinaryPair& p : q->binaries()) {
            collect_support(p.first, acc);
            collect_support(p.second, acc);
        }
        RatFunc arf = arf_representative(*q);
        if (!arf.is_zero()) collect_support(arf, acc);
        for (const SymbolPair& sp : clifford_symbol_list(*q).symbols) {
            if (sp.trivially_split()) continue;
            collect_support(sp.as_slot, acc);
            collect_support(sp.mult_slot, acc);
        }
    }
    return finish_support(std::move(acc), f.field());
}

GramInput gram_of(const QuadraticForm& q) {
    Gf2k fld = q.field();
    int n = q.rank();
    GramInput g{fld, {}};
    g.rows.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < n; ++i)
        g.rows[static_cast<size_t>(i)].assign(static_cast<size_t>(n - i), RatFunc::zero(fld));
    auto set = [&](int i, int j, const RatFunc& v) { g.rows[static_cast<size_t>(i)][static_cast<size_t>(j - i)] = v; };
    int pos = 0;
    for (const BinaryPair& p : q.binaries()) {
        set(pos, pos, p.first);
        set(pos, pos + 1, RatFunc::one(fld));
        set(pos + 1, pos + 1, p.second);
        pos += 2;
    }
    if (q.odd_part()) set(pos, pos, *q.odd_part());
    return g;
}

GramInput gram_transport(const GramInput& g, const Matrix& T) {
    Gf2k fld = g.field;
    int n = g.rank();
    if (static_cast<int>(T.size()) != n) fail(Errc::RankMismatch, "transport matrix of wrong size");
    for (const auto& row : T)
        if (static_cast<int>(row.size()) != n) fail(Errc::RankMismatch, "transport matrix not square");

    GramInput out{fld, {}};
    out.rows.assign(static_cast<size_t>(n), {});
    for (int r = 0; r < n; ++r)
        out.rows[static_cast<size_t>(r)].assign(static_cast<size_t>(n - r), RatFunc::zero(fld));
    auto add = [&](int r, int s, const RatFunc& v) {
        out.rows[static_cast<size_t>(r)][static_cast<size_t>(s - r)] =
            out.rows[static_cast<size_t>(r)][static_cast<size_t>(s - r)] + v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const RatFunc& c = g.coeff(i, j);
            if (c.is_zero()) continue;
            if (i == j) {
                // c * x_i^2 composed with T: squares stay squares in char 2
                for (int r = 0; r < n; ++r) {
                    const RatFunc& tir = T[static_cast<size_t>(i)][static_cast<size_t>(r)];
                    if (!tir.is_zero()) add(r, r, c * tir * tir);
                }
            } else {
                for (int r = 0; r < n; ++r) {
                    const RatFunc& tir = T[static_cast<size_t>(i)][static_cast<size_t>(r)];
                    const RatFunc& tjr = T[static_cast<size_t>(j)][static_cast<size_t>(r)];
                    if (!tir.is_zero() && !tjr.is_zero()) add(r, r, c * tir * tjr);
                    for (int s = r + 1; s < n; ++s)
                        add(r, s,
                            c * (tir * T[static_cast<size_t>(j)][static_cast<size_t>(s)] +
                                 T[static_cast<size_t>(i)][static_cast<size_t>(s)] * tjr));
                }
            }
        }
    return out;
}

Matrix identity_matrix(Gf2k field, int n) {
    Matrix T(static_cast<size_t>(n), std::vector<RatFunc>(static_cast<size_t>(n), RatFunc::zero(field)));
    for (int i = 0; i < n; ++i) T[static_cast<size_t>(i)][static_cast<size_t>(i)] = RatFunc::one(field);
    return T;
}

bool matrix_invertible(const Matrix& T) {
    Matrix m = T;
    int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) return false;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(col)]);
        for (int r = col + 1; r < n; ++r) {
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) continue;
            RatFunc ratio = m[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                            m[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int cc = col; cc < n; ++cc)
                m[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(cc)] +
                    ratio * m[static_cast<size_t>(col)][static_cast<size_t>(cc)];
        }
    }
    return true;
}

}  // namespace qf2
