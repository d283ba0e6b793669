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

#include "extfield.hpp"

#include <algorithm>

namespace qf2 {

std::shared_ptr<const ExtField> ExtField::make(Poly modulus) {
    if (modulus.degree() < 1) fail(Errc::InvalidArgument, "extension modulus needs degree >= 1");
    if (!modulus.is_monic()) fail(Errc::InvalidArgument, "extension modulus must be monic");
    if (!is_irreducible(modulus)) fail(Errc::InvalidArgument, "extension modulus must be irreducible");
    return std::shared_ptr<const ExtField>(new ExtField(std::move(modulus)));
}

ExtElem ExtField::zero() const {
    return ExtElem(shared_from_this(), std::vector<FieldElem>(static_cast<size_t>(ext_degree()), base().zero()));
}

ExtElem ExtField::one() const { return from_base(base().one()); }

ExtElem ExtField::from_base(const FieldElem& c) const {
    std::vector<FieldElem> r(static_cast<size_t>(ext_degree()), base().zero());
    r[0] = c;
    return ExtElem(shared_from_this(), std::move(r));
}

ExtElem ExtField::from_poly(const Poly& rep) const {
    Poly red = rep % modulus_;
    std::vector<FieldElem> r(static_cast<size_t>(ext_degree()), base().zero());
    for (int i = 0; i <= red.degree(); ++i) r[static_cast<size_t>(i)] = red.coeff(i);
    return ExtElem(shared_from_this(), std::move(r));
}

ExtElem ExtField::gen() const { return from_poly(Poly::t(base())); }

ExtElem::ExtElem(ExtFieldPtr fld, std::vector<FieldElem> rep) : fld_(std::move(fld)), rep_(std::move(rep)) {
    if (static_cast<int>(rep_.size()) != fld_->ext_degree())
        fail(Errc::Internal, "extension element representative of wrong length");
}

Poly ExtElem::rep_poly() const { return Poly(fld_->base(), rep_); }

bool ExtElem::is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

bool ExtElem::is_one() const {
    if (!rep_[0].is_one()) return false;
    return std::all_of(rep_.begin() + 1, rep_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

static void check_same(const ExtElem& a, const ExtElem& b) {
    if (a.field_ptr()->modulus() != b.field_ptr()->modulus())
        fail(Errc::ModulusMismatch, "extension elements over different moduli");
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check_same(*this, o);
    std::vector<FieldElem> r = rep_;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.rep_[i];
    return ExtElem(fld_, std::move(r));
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check_same(*this, o);
    return fld_->from_poly(rep_poly() * o.rep_poly());
}

ExtElem ExtElem::operator*(const FieldElem& s) const {
    std::vector<FieldElem> r = rep_;
    for (FieldElem& c : r) c = c * s;
    return ExtElem(fld_, std::move(r));
}

ExtElem ExtElem::inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0 in F_{q^d}");
    // extended Euclid in F_q[x] against the modulus
    Poly r0 = fld_->modulus(), r1 = rep_poly();
    Poly s0 = Poly::zero(fld_->base()), s1 = Poly::one(fld_->base());
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = s0 + q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd is a nonzero constant
    return fld_->from_poly(s0 * r0.leading().inv());
}

ExtElem ExtElem::pow(unsigned long long e) const {
    ExtElem base = *this, acc = fld_->one();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base.square();
        e >>= 1;
    }
    return acc;
}

ExtElem ExtElem::frobenius_q() const {
    ExtElem x = *this;
    for (int i = 0; i < fld_->base().k(); ++i) x = x.square();
    return x;
}

ExtElem ExtElem::sqrt() const {
    // x^(2^(N-1)) where N = absolute degree; squaring N times is identity
    ExtElem x = *this;
    for (int i = 0; i < fld_->abs_degree() - 1; ++i) x = x.square();
    return x;
}

int ExtElem::trace_bit() const {
    ExtElem acc = fld_->zero(), x = *this;
    for (int i = 0; i < fld_->abs_degree(); ++i) {
        acc = acc + x;
        x = x.square();
    }
    if (!acc.is_zero() && !acc.is_one()) fail(Errc::Internal, "absolute trace landed outside F_2");
    return acc.is_one() ? 1 : 0;
}

FieldElem ExtElem::trace_to_base() const {
    ExtElem acc = fld_->zero(), x = *this;
    for (int i = 0; i < fld_->ext_degree(); ++i) {
        acc = acc + x;
        x = x.frobenius_q();
    }
    for (size_t i = 1; i < acc.rep_.size(); ++i)
        if (!acc.rep_[i].is_zero()) fail(Errc::Internal, "relative trace landed outside F_q");
    return acc.rep_[0];
}

bool ExtElem::operator==(const ExtElem& o) const {
    check_same(*this, o);
    for (size_t i = 0; i < rep_.size(); ++i)
        if (rep_[i] != o.rep_[i]) return false;
    return true;
}

int ExtElem::cmp(const ExtElem& a, const ExtElem& b) {
    check_same(a, b);
    for (size_t i = 0; i < a.rep_.size(); ++i) {
        unsigned x = a.rep_[i].bits(), y = b.rep_[i].bits();
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

std::optional<ExtElem> solve_artin_schreier(const ExtElem& c) {
    const ExtFieldPtr& fld = c.field_ptr();
    int n = fld->abs_degree();
    if (n > 64) fail(Errc::InvalidArgument, "Artin-Schreier solver limited to q^d <= 2^64");
    int k = fld->base().k();

    auto coords = [&](const ExtElem& e) {
        uint64_t bits = 0;
        for (int j = 0; j < fld->ext_degree(); ++j)
            bits |= static_cast<uint64_t>(e.rep()[static_cast<size_t>(j)].bits()) << (j * k);
        return bits;
    };
    auto from_coords = [&](uint64_t bits) {
        std::vector<FieldElem> rep;
        rep.reserve(static_cast<size_t>(fld->ext_degree()));
        for (int j = 0; j < fld->ext_degree(); ++j)
            rep.push_back(fld->base().from_bits((bits >> (j * k)) & (fld->base().q() - 1)));
        return ExtElem(fld, std::move(rep));
    };

    // columns[m] = coordinates of wp(e_m) over the F_2-basis e_m = y^i x^j
    std::vector<uint64_t> columns(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        ExtElem e = from_coords(1ull << m);
        columns[static_cast<size_t>(m)] = coords(e.square() + e);
    }

    // Gaussian elimination on the transposed system, rows = equations
    uint64_t target = coords(c);
    std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
    std::vector<int> rhs(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        for (int m = 0; m < n; ++m)
            if (columns[static_cast<size_t>(m)] >> r & 1) rows[static_cast<size_t>(r)] |= 1ull << m;
        rhs[static_cast<size_t>(r)] = static_cast<int>(target >> r & 1);
    }
    std::vector<int> pivot_of_row(static_cast<size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (rows[static_cast<size_t>(r)] >> col & 1) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(rank)]);
        std::swap(rhs[static_cast<size_t>(sel)], rhs[static_cast<size_t>(rank)]);
        for (int r = 0; r < n; ++r)
            if (r != rank && (rows[static_cast<size_t>(r)] >> col & 1)) {
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rank)];
                rhs[static_cast<size_t>(r)] ^= rhs[static_cast<size_t>(rank)];
            }
        pivot_of_row[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (rhs[static_cast<size_t>(r)]) return std::nullopt;  // trace obstruction

    uint64_t ybits = 0;
    for (int r = 0; r < rank; ++r)
        if (rhs[static_cast<size_t>(r)]) ybits |= 1ull << pivot_of_row[static_cast<size_t>(r)];
    ExtElem y = from_coords(ybits);
    ExtElem y1 = y + fld->one();
    ExtElem& canon = ExtElem::cmp(y, y1) <= 0 ? y : y1;
    if (canon.square() + canon != c) fail(Errc::Internal, "Artin-Schreier solution failed to verify");
    return canon;
}

}  // namespace qf2
