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

#ifndef QF2_GLOBALDEC_HPP
#define QF2_GLOBALDEC_HPP

#include <string>

#include "localinv.hpp"

namespace qf2 {

struct CheckRecord {
    std::string check;
    std::optional<Place> place;
    bool ok;
    std::string detail;
};

enum class FactorStatus { None, Exact, VerifiedSearch, NotFoundWithinBound };

const char* factor_status_name(FactorStatus s);

/// Decision with its audit trail. A false verdict always carries either a
/// witness place where a required local equality fails, or a failed global
/// test named in the certificate.
struct Decision {
    bool verdict = false;
    std::optional<RatFunc> factor;  // f isometric to factor * g when present
    FactorStatus factor_status = FactorStatus::None;
    std::optional<Place> witness;
    std::vector<CheckRecord> certificate;
};

/// Equal global discriminants: square classes for odd rank, Arf classes
/// (difference in wp K) for even rank. Requires equal rank.
bool global_disc_equal(const QuadraticForm& f, const QuadraticForm& g);

struct CliffordCompare {
    bool equal;
    std::vector<Place> diff_places;
    std::vector<Place> support;
};

/// Local Clifford classes compared at every support place; both classes
/// vanish elsewhere, so agreement there is agreement everywhere.
CliffordCompare global_clifford_equal(const QuadraticForm& f, const QuadraticForm& g);

/// Classification by rank, discriminant and Clifford invariant.
Decision isometric(const QuadraticForm& f, const QuadraticForm& g);

/// Hasse-Minkowski with the local anisotropy tables; rank >= 5 is always
/// isotropic, rank 4 fails exactly at a place with trivial local disc and
/// nonsplit Clifford class.
Decision global_isotropic(const QuadraticForm& q);

/// n - 2 * min_v i0(q_v), in {0,...,4} with the parity of n.
int global_anisotropic_dimension(const QuadraticForm& q);

/// The local-global similarity decision. Odd rank reduces to Clifford class
/// agreement with the exact factor d1/d2; even rank needs equal Arf classes
/// and nontrivial local discriminant wherever the Clifford classes differ,
/// with the factor taken from a verified bounded search when nontrivial.
Decision similar_decide(const QuadraticForm& f, const QuadraticForm& g, int degree_bound = 6);

struct FactorSearch {
    std::optional<RatFunc> factor;
    long candidates_tried = 0;
    bool pool_capped = false;
};

/// Search for a similarity factor a with the prescribed local quaternion
/// profile (c, a], c the Arf representative; every hit is verified through
/// isometric(f, scale(a, g)) before being returned.
FactorSearch find_similarity_factor(const QuadraticForm& f, const QuadraticForm& g, int degree_bound);

/// First place where c fails wp-membership locally, scanning supp(c) and
/// infinity; exists whenever the global test fails.
std::optional<Place> wp_failure_witness(const RatFunc& c);

}  // namespace qf2

#endif
