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

#ifndef QF2_FUNCFIELD_HPP
#define QF2_FUNCFIELD_HPP

#include <set>
#include <vector>

#include "ratfunc.hpp"

namespace qf2 {

/// A place of K = F_q(t): a monic irreducible polynomial, or the degree
/// valuation at infinity (uniformizer 1/t, residue field F_q).
class Place {
   public:
    static Place finite(Poly pi);
    static Place infinity(Gf2k field);

    bool is_infinity() const { return infinite_; }
    const Poly& pi() const;
    int degree() const { return infinite_ ? 1 : pi_.degree(); }
    Gf2k field() const { return pi_.field(); }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const;  // finite by (deg, lex), infinity last

   private:
    Place(bool inf, Poly pi) : infinite_(inf), pi_(std::move(pi)) {}
    bool infinite_;
    Poly pi_;  // holds t as a placeholder for the infinite place
};

/// Realization of the residue field k_v together with the canonical root of
/// pi used for expansions: the lexicographically first root among the
/// conjugates of x mod pi. Any root gives the same trace data; the fixed
/// choice makes reported residues reproducible.
struct ResidueData {
    Place place;
    ExtFieldPtr field;
    ExtElem root;
    int canon_shift;  // canonical root = (x mod pi)^(q^canon_shift)
    int num_roots;    // = deg(pi), 1 at infinity

    /// Polynomial B with deg B < deg pi and B(root) = e.
    Poly lift(const ExtElem& e) const;
};

ResidueData residue_data(const Place& v);

/// Root of pi number `shift` (Frobenius orbit of the canonical one); used by
/// the root-independence cross-checks.
ExtElem residue_root(const ResidueData& rd, int shift);

struct Valuation {
    bool infinite;  // true only for u = 0
    long v;
    bool operator==(const Valuation& o) const { return infinite == o.infinite && (infinite || v == o.v); }
};

Valuation valuation(const RatFunc& u, const Place& v);

/// Laurent coefficients of u at the place, exponents start..(start+size-1),
/// computed at the chosen root after scalar extension to k_v. Exponents are
/// produced for v(u) <= i < precision.
struct LaurentExpansion {
    int start;
    ExtFieldPtr field;
    std::vector<ExtElem> coeffs;
    ExtElem at(int exponent) const;
};

LaurentExpansion local_expansion(const RatFunc& u, const Place& v, int precision, int root_shift = 0);

/// One term A/pi^order of the partial-fraction decomposition at a finite
/// place, deg A < deg pi. At infinity the terms are taken at s = 1/t after
/// the substitution t -> 1/s (so A is a constant and the term reads A*t^order).
struct PrincipalTerm {
    int order;  // >= 1
    Poly numer;
};

std::vector<PrincipalTerm> principal_part(const RatFunc& u, const Place& v);

/// Res_v(u dt) in k_v. At infinity dt = ds/s^2 under t = 1/s.
ExtElem residue_of_differential(const RatFunc& u, const Place& v, int root_shift = 0);

/// u(1/s) as a rational function of s (the involution swapping 0 and
/// infinity); applying it twice is the identity.
RatFunc substitute_reciprocal(const RatFunc& u);

/// Finite places in the support (zeros and poles) of u; empty for u = 0.
std::vector<Place> finite_support(const RatFunc& u);

/// Exact membership in wp(K) = {y^2 + y}: a preimage, or nothing. Poles of a
/// preimage sit exactly under even-order poles of c at half the order, which
/// bounds the solution space; the rest is an F_2-linear solve.
std::optional<RatFunc> global_as_test(const RatFunc& c);

}  // namespace qf2

#endif
