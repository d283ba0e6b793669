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

#ifndef QF2_LOCALINV_HPP
#define QF2_LOCALINV_HPP

#include "qform.hpp"

namespace qf2 {

/// Per-place invariant record. Over a local field the anisotropic rank m is
/// pinned by the discriminant and Clifford class:
///   n odd:  m = 1 or 3 according to the Clifford class bit;
///   n even: m = 0 (trivial disc, split), 2 (nontrivial disc),
///           4 (trivial disc, nonsplit).
/// Always m = n (mod 2), m <= min(n, 4), and the Witt index is (n - m)/2.
struct LocalProfile {
    Place place;
    int rank;
    bool disc_trivial;
    int clifford_class;  // 0 or 1
    int anis_rank;       // m
    int witt_index;      // i0
};

LocalProfile local_profile(const QuadraticForm& q, const Place& v);

/// Same rank, same local discriminant, same local Clifford class.
bool local_isometric(const QuadraticForm& f, const QuadraticForm& g, const Place& v);

/// Equal Witt index; even rank additionally needs equal local discriminants.
/// Requires equal rank.
bool local_similar(const QuadraticForm& f, const QuadraticForm& g, const Place& v);

}  // namespace qf2

#endif
