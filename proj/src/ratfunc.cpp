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

#include "ratfunc.hpp"

namespace qf2 {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field() != den_.field()) fail(Errc::ModulusMismatch, "num/den over different fields");
    if (den_.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElem lc = den_.leading();
    if (!lc.is_one()) {
        FieldElem inv = lc.inv();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0 in F_q(t)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc acc = RatFunc::one(field()), base = *this;
    unsigned long ue = static_cast<unsigned long>(e);
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

RatFunc RatFunc::derivative() const {
    // (n/d)' = (n'd + n d') / d^2, signs free in characteristic 2
    return RatFunc(qf2::derivative(num_) * den_ + num_ * qf2::derivative(den_), den_ * den_);
}

ExtElem RatFunc::eval(const ExtElem& x) const {
    const ExtFieldPtr& fld = x.field_ptr();
    auto eval_poly = [&](const Poly& p) {
        ExtElem acc = fld->zero();
        for (int i = p.degree(); i >= 0; --i) acc = acc * x + fld->from_base(p.coeff(i));
        return acc;
    };
    ExtElem d = eval_poly(den_);
    if (d.is_zero()) fail(Errc::DivisionByZero, "denominator vanishes at evaluation point");
    return eval_poly(num_) / d;
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

std::optional<RatFunc> global_square_test(const RatFunc& u) {
    if (u.is_zero()) fail(Errc::ZeroElement, "square test of 0");
    std::optional<Poly> n = poly_square_root(u.num());
    if (!n) return std::nullopt;
    std::optional<Poly> d = poly_square_root(u.den());
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

}  // namespace qf2
