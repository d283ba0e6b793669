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

#ifndef QF2_QFORM_HPP
#define QF2_QFORM_HPP

#include <optional>
#include <utility>

#include "symbols.hpp"

namespace qf2 {

using BinaryPair = std::pair<RatFunc, RatFunc>;
using Matrix = std::vector<std::vector<RatFunc>>;

/// Non-degenerate quadratic form over K in the canonical shape
/// <d> | [a_1,b_1] | ... | [a_m,b_m]; the odd part is present exactly for odd
/// rank and is nonzero. Binary pairs may contain zeros (hyperbolic planes are
/// kept for rank bookkeeping).
class QuadraticForm {
   public:
    explicit QuadraticForm(Gf2k field) : k_(field.k()) {}
    QuadraticForm(Gf2k field, std::optional<RatFunc> odd_part, std::vector<BinaryPair> binaries);

    static QuadraticForm odd(RatFunc d);
    static QuadraticForm binary(RatFunc a, RatFunc b);
    static QuadraticForm hyperbolic(Gf2k field, int copies);

    Gf2k field() const { return Gf2k(k_); }
    int rank() const { return (odd_ ? 1 : 0) + 2 * static_cast<int>(binaries_.size()); }
    const std::optional<RatFunc>& odd_part() const { return odd_; }
    const std::vector<BinaryPair>& binaries() const { return binaries_; }

    bool operator==(const QuadraticForm& o) const;
    bool operator!=(const QuadraticForm& o) const { return !(*this == o); }

   private:
    uint8_t k_;
    std::optional<RatFunc> odd_;
    std::vector<BinaryPair> binaries_;
};

/// Raw coefficient input q(x) = sum_{i<=j} c_ij x_i x_j, upper triangle only.
struct GramInput {
    Gf2k field;
    std::vector<std::vector<RatFunc>> rows;  // rows[i] = (c_ii, ..., c_i(n-1))

    int rank() const { return static_cast<int>(rows.size()); }
    const RatFunc& coeff(int i, int j) const;  // i <= j
    RatFunc eval(const std::vector<RatFunc>& x) const;
    RatFunc polar(const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) const;
};

/// Symplectic reduction of the polar form to the canonical shape. Throws
/// DegenerateForm when the radical is too large or the form vanishes on it.
QuadraticForm normalize(const GramInput& input);

/// a*q: the odd part picks up a, each binary (b, c) becomes (ab, c/a).
QuadraticForm scale(const RatFunc& a, const QuadraticForm& q);

struct FormInvariants {
    int rank;
    RatFunc disc;  // odd rank: square-class representative; even: raw Arf sum
};

FormInvariants invariants(const QuadraticForm& q);

/// Arf representative sum a_1 b_1 + ... (zero for odd rank callers who want
/// the even part only).
RatFunc arf_representative(const QuadraticForm& q);

/// Formal sum of quaternion symbol classes representing the Clifford
/// invariant: one pair per binary, scaled through the odd part first when the
/// rank is odd. The support contains every place where any local class can be
/// nonzero.
struct CliffordData {
    std::vector<SymbolPair> symbols;
    std::vector<Place> support;  // sorted, infinity last

    int class_at(const Place& v) const;
};

CliffordData clifford_symbol_list(const QuadraticForm& q);

QuadraticForm direct_sum(const QuadraticForm& f, const QuadraticForm& g);

/// Coefficient-support superset: every place dividing any coefficient, Arf
/// representative or symbol slot of either form, plus infinity.
std::vector<Place> support_places(const QuadraticForm& f, const QuadraticForm& g);

/// Gram matrix of the canonical shape (binary blocks, odd part last).
GramInput gram_of(const QuadraticForm& q);

/// Coefficients of x -> q(Tx).
GramInput gram_transport(const GramInput& g, const Matrix& T);

Matrix identity_matrix(Gf2k field, int n);
bool matrix_invertible(const Matrix& T);

}  // namespace qf2

#endif
