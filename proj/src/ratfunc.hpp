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

#ifndef QF2_RATFUNC_HPP
#define QF2_RATFUNC_HPP

#include "extfield.hpp"
#include "poly.hpp"

namespace qf2 {

/// Element of K = F_q(t) in lowest terms: gcd(num, den) = 1, den monic,
/// zero stored as 0/1.
class RatFunc {
   public:
    explicit RatFunc(Gf2k field) : num_(field), den_(Poly::one(field)) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
    RatFunc(Poly num, Poly den);

    static RatFunc zero(Gf2k f) { return RatFunc(f); }
    static RatFunc one(Gf2k f) { return RatFunc(Poly::one(f)); }
    static RatFunc t(Gf2k f) { return RatFunc(Poly::t(f)); }
    static RatFunc constant(FieldElem c) { return RatFunc(Poly::constant(c)); }

    Gf2k field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;  // also subtraction
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
    RatFunc inv() const;
    RatFunc pow(long e) const;
    RatFunc square() const { return *this * *this; }

    /// Formal t-derivative.
    RatFunc derivative() const;

    /// The Artin-Schreier image wp(u) = u^2 + u.
    RatFunc wp() const { return square() + *this; }

    /// Evaluate in a residue field; the denominator must not vanish there.
    ExtElem eval(const ExtElem& x) const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

   private:
    Poly num_, den_;
};

/// Exact membership in K*^2: the square root, or nothing. Both num and den
/// of a square in lowest terms are polynomial squares.
std::optional<RatFunc> global_square_test(const RatFunc& u);

}  // namespace qf2

#endif
