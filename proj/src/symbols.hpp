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

#ifndef QF2_SYMBOLS_HPP
#define QF2_SYMBOLS_HPP

#include "funcfield.hpp"

namespace qf2 {

/// The cyclic algebra (x, y]: adjoin theta with theta^2 + theta = x and twist
/// by y. The quaternion {a,b} of a binary form [a,b] maps to (ab, a] for
/// a != 0; pairs with as_slot = 0 are split by convention.
struct SymbolPair {
    RatFunc as_slot;    // x
    RatFunc mult_slot;  // y, nonzero

    SymbolPair(RatFunc x, RatFunc y);
    static SymbolPair quaternion(const RatFunc& a, const RatFunc& b);
    bool trivially_split() const { return as_slot.is_zero(); }
};

/// d1/d2 in K_v*^2? Decided by the exact global square test: K_v*^2 meets K*
/// in K*^2 (the completion is separable over K), so the answer does not
/// depend on v for global inputs.
bool local_square_equal(const RatFunc& d1, const RatFunc& d2, const Place& v);

/// c in wp(K_v)? Peels even-order pole terms with wp-corrections built from
/// residue-field square roots; an odd-order pole kills membership, and the
/// regular remainder is tested through the residue trace.
bool local_wp_member(const RatFunc& c, const Place& v);

/// Local class of (x, y] in F_2, by the residue formula
/// Tr_{k_v/F_2}(Res_v(x dy/y)).
int schmid_symbol(const SymbolPair& p, const Place& v, int root_shift = 0);

/// Local Brauer class of the quaternion {a,b}; 0 when a or b vanishes
/// (the binary form [a,b] is then isotropic).
int quaternion_class(const RatFunc& a, const RatFunc& b, const Place& v);

}  // namespace qf2

#endif
