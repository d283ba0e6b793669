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

#ifndef QF2_ORACLE_HPP
#define QF2_ORACLE_HPP

#include <random>

#include "globaldec.hpp"

namespace qf2 {

/// Projective isotropic vector with denominator-cleared polynomial
/// coordinates; plugging it into the form gives exactly 0.
struct VectorWitness {
    std::vector<Poly> coords;
    RatFunc value;
};

/// Enumerate coordinate tuples of polynomials in graded lexicographic order
/// (stage = max coordinate degree, first nonzero coordinate monic) and return
/// the first exact zero. `max_candidates` caps the generic-arithmetic path;
/// over F_2 with small coefficients a packed fast path runs exhaustively.
std::optional<VectorWitness> search_isotropic(const QuadraticForm& q, int degree_bound,
                                              long max_candidates = 2000000);

/// g(x) = f(Tx) as an exact polynomial identity.
bool transport_check(const QuadraticForm& f, const QuadraticForm& g, const Matrix& T);

/// Sum of the local symbol classes over the slot support and infinity is 0.
bool check_reciprocity(const SymbolPair& p);

/// Albert-form cross-check for the pair of quaternions {a1,b1}, {a2,b2}: at
/// every support place the rank-6 form [1, a1b1+a2b2] | [a1,b1] | [a2,b2]
/// has Witt index > 1 exactly when the two local classes agree.
bool albert_check(const RatFunc& a1, const RatFunc& b1, const RatFunc& a2, const RatFunc& b2);

struct FuzzReport {
    int trials = 0;
    int failures = 0;
    std::string first_failure;  // reproduction data for the first mismatch
};

/// Random gram inputs put through random invertible transports; rank,
/// discriminant class and all local Clifford classes must survive
/// normalization on both sides.
FuzzReport fuzz_normalization(uint64_t seed, int trials, Gf2k field);

// --- deterministic random generators (shared by the oracle and the tests) ---

using Rng = std::mt19937_64;

FieldElem random_field_elem(Rng& rng, Gf2k field);
Poly random_poly(Rng& rng, Gf2k field, int max_deg);
Poly random_monic(Rng& rng, Gf2k field, int max_deg);          // nonzero
RatFunc random_ratfunc(Rng& rng, Gf2k field, int max_deg, bool nonzero);
QuadraticForm random_form(Rng& rng, Gf2k field, int rank, int coeff_deg);
Matrix random_invertible(Rng& rng, Gf2k field, int n);
Place random_place(Rng& rng, Gf2k field, int max_deg);  // occasionally infinity

}  // namespace qf2

#endif
