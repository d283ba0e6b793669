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

#include "localinv.hpp"

namespace qf2 {

LocalProfile local_profile(const QuadraticForm& q, const Place& v) {
    int n = q.rank();
    bool disc_trivial;
    if (q.odd_part())
        disc_trivial = local_square_equal(*q.odd_part(), RatFunc::one(q.field()), v);
    else
        disc_trivial = local_wp_member(arf_representative(q), v);
    int cls = clifford_symbol_list(q).class_at(v);

    int m;
    if (n % 2 == 1) {
        m = cls ? 3 : 1;
    } else {
        m = disc_trivial ? (cls ? 4 : 0) : 2;
    }
    if (m > n)
        fail(Errc::Internal, "local classification table produced m > n (rank " + std::to_string(n) + ")");
    return LocalProfile{v, n, disc_trivial, cls, m, (n - m) / 2};
}

namespace {

bool local_disc_equal(const QuadraticForm& f, const QuadraticForm& g, const Place& v) {
    if (f.odd_part()) return local_square_equal(*f.odd_part(), *g.odd_part(), v);
    return local_wp_member(arf_representative(f) + arf_representative(g), v);
}

}  // namespace

bool local_isometric(const QuadraticForm& f, const QuadraticForm& g, const Place& v) {
    if (f.rank() != g.rank()) return false;
    if (!local_disc_equal(f, g, v)) return false;
    return clifford_symbol_list(f).class_at(v) == clifford_symbol_list(g).class_at(v);
}

bool local_similar(const QuadraticForm& f, const QuadraticForm& g, const Place& v) {
    if (f.rank() != g.rank()) fail(Errc::RankMismatch, "local similarity needs equal ranks");
    LocalProfile pf = local_profile(f, v), pg = local_profile(g, v);
    if (pf.witt_index != pg.witt_index) return false;
    if (f.rank() % 2 == 1) return true;
    return local_disc_equal(f, g, v);
}

}  // namespace qf2
