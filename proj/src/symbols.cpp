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

#include "symbols.hpp"

namespace qf2 {

SymbolPair::SymbolPair(RatFunc x, RatFunc y) : as_slot(std::move(x)), mult_slot(std::move(y)) {
    if (mult_slot.is_zero()) fail(Errc::ZeroMultiplicativeSlot, "symbol with zero multiplicative slot");
}

SymbolPair SymbolPair::quaternion(const RatFunc& a, const RatFunc& b) {
    Gf2k f = a.field();
    if (a.is_zero() || b.is_zero()) return SymbolPair(RatFunc::zero(f), RatFunc::one(f));
    return SymbolPair(a * b, a);
}

bool local_square_equal(const RatFunc& d1, const RatFunc& d2, const Place& v) {
    (void)v;
    if (d1.is_zero() || d2.is_zero()) fail(Errc::ZeroElement, "square class of 0");
    if (d1.field() != v.field() || d2.field() != v.field())
        fail(Errc::ModulusMismatch, "square-class inputs over a different constant field");
    return global_square_test(d1 * d2).has_value();
}

namespace {

bool finite_wp_member(const RatFunc& c0, const Place& v) {
    ResidueData rd = residue_data(v);
    RatFunc c = c0;
    for (;;) {
        std::vector<PrincipalTerm> pp = principal_part(c, v);
        if (pp.empty()) break;
        const PrincipalTerm& top = pp.back();
        if (top.order % 2 != 0) return false;
        // subtract wp(B / pi^(m/2)) with B(root)^2 = A_m(root); the top term
        // cancels because A_m - B^2 gains a factor of pi
        ExtElem a = RatFunc(top.numer).eval(rd.root);
        Poly b = rd.lift(a.sqrt());
        Poly pim_half = Poly::one(v.field());
        for (int i = 0; i < top.order / 2; ++i) pim_half = pim_half * v.pi();
        c = c + RatFunc(b, pim_half).wp();
        if (static_cast<int>(-valuation(c, v).v) >= top.order && !c.is_zero())
            fail(Errc::Internal, "wp-reduction failed to lower the pole order");
    }
    if (c.is_zero()) return true;
    ExtElem r = c.eval(rd.root);
    return r.trace_bit() == 0;
}

}  // namespace

bool local_wp_member(const RatFunc& c, const Place& v) {
    if (c.is_zero()) return true;
    if (v.is_infinity())
        return finite_wp_member(substitute_reciprocal(c), Place::finite(Poly::t(v.field())));
    return finite_wp_member(c, v);
}

int schmid_symbol(const SymbolPair& p, const Place& v, int root_shift) {
    if (p.mult_slot.is_zero()) fail(Errc::ZeroMultiplicativeSlot, "symbol with zero multiplicative slot");
    if (p.as_slot.is_zero()) return 0;
    RatFunc w = p.as_slot * p.mult_slot.derivative() / p.mult_slot;
    if (w.is_zero()) return 0;  // dy = 0: y is a square, the algebra splits
    return residue_of_differential(w, v, root_shift).trace_bit();
}

int quaternion_class(const RatFunc& a, const RatFunc& b, const Place& v) {
    return schmid_symbol(SymbolPair::quaternion(a, b), v);
}

}  // namespace qf2
