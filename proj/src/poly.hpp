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

#ifndef QF2_POLY_HPP
#define QF2_POLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gf2k.hpp"

namespace qf2 {

/// Univariate polynomial over F_q in the variable t, coefficients stored by
/// ascending degree with no trailing zeros; the zero polynomial has degree -1.
class Poly {
   public:
    explicit Poly(Gf2k field) : k_(field.k()) {}
    Poly(Gf2k field, std::vector<FieldElem> coeffs);

    static Poly zero(Gf2k f) { return Poly(f); }
    static Poly one(Gf2k f) { return constant(f.one()); }
    static Poly t(Gf2k f);
    static Poly constant(FieldElem c);

    Gf2k field() const { return Gf2k(k_); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    FieldElem coeff(int i) const;
    FieldElem leading() const;
    const std::vector<FieldElem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;  // also subtraction in characteristic 2
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    Poly shifted(int e) const;  // * t^e, e >= 0

    FieldElem eval(const FieldElem& x) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

   private:
    uint8_t k_;
    std::vector<FieldElem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly derivative(const Poly& f);
Poly make_monic(const Poly& f);
Poly poly_pow_mod(const Poly& base, unsigned long long e, const Poly& mod);

/// Deterministic order: by degree, then coefficients compared from the
/// leading term down by bit value. Returns <0, 0, >0.
int poly_cmp(const Poly& a, const Poly& b);

/// g with g^2 = f, which exists iff every odd-degree coefficient vanishes.
std::optional<Poly> poly_square_root(const Poly& f);

bool is_irreducible(const Poly& f);

/// Monic irreducible factors with multiplicities, sorted by poly_cmp;
/// multiplying them back (times the leading coefficient) restores f.
/// The seed fixes the random splitting choices.
std::vector<std::pair<Poly, int>> factorize(const Poly& f, uint64_t seed = 1);

/// All monic irreducibles of the given degree, in poly_cmp order.
std::vector<Poly> monic_irreducibles(Gf2k field, int degree);

}  // namespace qf2

#endif
