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

#ifndef QF2_EXTFIELD_HPP
#define QF2_EXTFIELD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "poly.hpp"

namespace qf2 {

class ExtElem;

/// F_{q^d} = F_q[x]/(pi) for a monic irreducible pi of degree d >= 1.
/// Residue fields of places are realized this way, with pi the place itself.
class ExtField : public std::enable_shared_from_this<ExtField> {
   public:
    static std::shared_ptr<const ExtField> make(Poly modulus);

    Gf2k base() const { return modulus_.field(); }
    const Poly& modulus() const { return modulus_; }
    int ext_degree() const { return modulus_.degree(); }     // d
    int abs_degree() const { return base().k() * ext_degree(); }  // F_2-dimension

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem from_base(const FieldElem& c) const;
    ExtElem from_poly(const Poly& rep) const;  // reduces mod pi
    ExtElem gen() const;                       // the class of x

   private:
    explicit ExtField(Poly modulus) : modulus_(std::move(modulus)) {}
    Poly modulus_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// Element of F_{q^d}, stored as its reduced representative polynomial.
class ExtElem {
   public:
    ExtElem(ExtFieldPtr fld, std::vector<FieldElem> rep);

    const ExtFieldPtr& field_ptr() const { return fld_; }
    const std::vector<FieldElem>& rep() const { return rep_; }  // size d, ascending
    Poly rep_poly() const;
    bool is_zero() const;
    bool is_one() const;

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator*(const FieldElem& s) const;
    ExtElem operator/(const ExtElem& o) const { return *this * o.inv(); }
    ExtElem inv() const;
    ExtElem pow(unsigned long long e) const;
    ExtElem square() const { return *this * *this; }
    ExtElem frobenius_q() const;  // x -> x^q
    ExtElem sqrt() const;         // unique square root (perfect field)

    int trace_bit() const;            // absolute trace to F_2
    FieldElem trace_to_base() const;  // Tr_{F_{q^d}/F_q}

    bool operator==(const ExtElem& o) const;
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

    /// Lexicographic order on the coefficient vector, constant term first.
    static int cmp(const ExtElem& a, const ExtElem& b);

   private:
    ExtFieldPtr fld_;
    std::vector<FieldElem> rep_;
};

/// Solve y^2 + y = c in F_{q^d} via the F_2-linear system for the
/// Artin-Schreier map; returns the lexicographically smaller root, or
/// nothing when trace_bit(c) = 1.
std::optional<ExtElem> solve_artin_schreier(const ExtElem& c);

}  // namespace qf2

#endif
