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

#include "globaldec.hpp"

#include <algorithm>

namespace qf2 {

namespace {

constexpr long kMaxFactorCandidates = 200000;
constexpr size_t kMaxPoolExtension = 64;

void record(Decision& d, std::string check, std::optional<Place> place, bool ok, std::string detail = "") {
    d.certificate.push_back(CheckRecord{std::move(check), std::move(place), ok, std::move(detail)});
}

}  // namespace

const char* factor_status_name(FactorStatus s) {
    switch (s) {
        case FactorStatus::None: return "none";
        case FactorStatus::Exact: return "exact";
        case FactorStatus::VerifiedSearch: return "verified-search";
        case FactorStatus::NotFoundWithinBound: return "not-found-within-bound";
    }
    return "unknown";
}

bool global_disc_equal(const QuadraticForm& f, const QuadraticForm& g) {
    if (f.rank() != g.rank()) fail(Errc::RankMismatch, "discriminant comparison needs equal ranks");
    if (f.odd_part()) return global_square_test(*f.odd_part() * *g.odd_part()).has_value();
    RatFunc diff = arf_representative(f) + arf_representative(g);
    return global_as_test(diff).has_value();
}

CliffordCompare global_clifford_equal(const QuadraticForm& f, const QuadraticForm& g) {
    CliffordCompare out;
    out.support = support_places(f, g);
    CliffordData cf = clifford_symbol_list(f), cg = clifford_symbol_list(g);
    for (const Place& v : out.support)
        if (cf.class_at(v) != cg.class_at(v)) out.diff_places.push_back(v);
    out.equal = out.diff_places.empty();
    return out;
}

std::optional<Place> wp_failure_witness(const RatFunc& c) {
    std::vector<Place> places = finite_support(c);
    places.push_back(Place::infinity(c.field()));
    for (const Place& v : places)
        if (!local_wp_member(c, v)) return v;
    return std::nullopt;
}

namespace {

std::optional<Place> odd_valuation_witness(const RatFunc& u) {
    for (const Place& v : finite_support(u))
        if (valuation(u, v).v % 2 != 0) return v;
    Place inf = Place::infinity(u.field());
    if (valuation(u, inf).v % 2 != 0) return inf;
    return std::nullopt;
}

// Discriminant comparison with a local witness for the failure.
bool disc_equal_with_witness(const QuadraticForm& f, const QuadraticForm& g, Decision& d) {
    if (f.odd_part()) {
        RatFunc prod = *f.odd_part() * *g.odd_part();
        bool ok = global_square_test(prod).has_value();
        record(d, "disc_square_equal", std::nullopt, ok,
               ok ? "" : "d1*d2 is not a global square");
        if (!ok) d.witness = odd_valuation_witness(prod);
        return ok;
    }
    RatFunc diff = arf_representative(f) + arf_representative(g);
    bool ok = global_as_test(diff).has_value();
    record(d, "arf_wp_equal", std::nullopt, ok, ok ? "" : "Arf(f)+Arf(g) is not in wp K");
    if (!ok) {
        d.witness = wp_failure_witness(diff);
        if (!d.witness) fail(Errc::Internal, "global wp failure without a local witness");
    }
    return ok;
}

}  // namespace

Decision isometric(const QuadraticForm& f, const QuadraticForm& g) {
    Decision d;
    bool ranks = f.rank() == g.rank();
    record(d, "rank_equal", std::nullopt, ranks,
           std::to_string(f.rank()) + " vs " + std::to_string(g.rank()));
    if (!ranks) return d;
    if (!disc_equal_with_witness(f, g, d)) return d;
    CliffordCompare cc = global_clifford_equal(f, g);
    record(d, "clifford_equal", cc.equal ? std::nullopt : std::make_optional(cc.diff_places.front()),
           cc.equal, cc.equal ? "" : "local Clifford classes differ");
    if (!cc.equal) {
        d.witness = cc.diff_places.front();
        return d;
    }
    d.verdict = true;
    return d;
}

Decision global_isotropic(const QuadraticForm& q) {
    Decision d;
    int n = q.rank();
    if (n < 1) fail(Errc::InvalidArgument, "isotropy needs rank >= 1");
    if (n >= 5) {
        d.verdict = true;
        record(d, "rank_rule", std::nullopt, true, "rank > 4 is isotropic over every completion");
        return d;
    }
    switch (n) {
        case 1:
            record(d, "rank_one", std::nullopt, false, "rank-1 forms are anisotropic");
            return d;
        case 2: {
            bool ok = global_as_test(arf_representative(q)).has_value();
            record(d, "arf_trivial", std::nullopt, ok, ok ? "Arf in wp K" : "Arf not in wp K");
            d.verdict = ok;
            if (!ok) d.witness = wp_failure_witness(arf_representative(q));
            return d;
        }
        case 3: {
            CliffordData cd = clifford_symbol_list(q);
            for (const Place& v : cd.support)
                if (cd.class_at(v) != 0) {
                    record(d, "clifford_local_class", v, false, "nonsplit Clifford class");
                    d.witness = v;
                    return d;
                }
            record(d, "clifford_trivial", std::nullopt, true);
            d.verdict = true;
            return d;
        }
        default: {  // rank 4: anisotropic exactly at a place with m = 4
            CliffordData cd = clifford_symbol_list(q);
            RatFunc arf = arf_representative(q);
            std::vector<Place> places = support_places(q, q);
            for (const Place& v : places)
                if (cd.class_at(v) == 1 && local_wp_member(arf, v)) {
                    record(d, "anisotropic_profile", v, false,
                           "trivial local disc with nonsplit Clifford class");
                    d.witness = v;
                    return d;
                }
            record(d, "no_anisotropic_place", std::nullopt, true);
            d.verdict = true;
            return d;
        }
    }
}

int global_anisotropic_dimension(const QuadraticForm& q) {
    int n = q.rank();
    if (n == 0) return 0;
    if (n % 2 == 1) {
        CliffordData cd = clifford_symbol_list(q);
        for (const Place& v : cd.support)
            if (cd.class_at(v) != 0) return 3;
        return 1;
    }
    CliffordData cd = clifford_symbol_list(q);
    RatFunc arf = arf_representative(q);
    std::vector<Place> places = support_places(q, q);
    for (const Place& v : places)
        if (cd.class_at(v) == 1 && local_wp_member(arf, v)) return 4;
    if (!global_as_test(arf).has_value()) return 2;
    return 0;
}

Decision similar_decide(const QuadraticForm& f, const QuadraticForm& g, int degree_bound) {
    Decision d;
    bool ranks = f.rank() == g.rank();
    record(d, "rank_equal", std::nullopt, ranks,
           std::to_string(f.rank()) + " vs " + std::to_string(g.rank()));
    if (!ranks) return d;

    if (f.rank() % 2 == 1) {
        CliffordCompare cc = global_clifford_equal(f, g);
        record(d, "clifford_equal", cc.equal ? std::nullopt : std::make_optional(cc.diff_places.front()),
               cc.equal, cc.equal ? "" : "local Clifford classes differ");
        if (!cc.equal) {
            d.witness = cc.diff_places.front();
            return d;
        }
        RatFunc a = *f.odd_part() / *g.odd_part();
        Decision check = isometric(f, scale(a, g));
        record(d, "factor_verified", std::nullopt, check.verdict, "a = d1/d2");
        if (!check.verdict) fail(Errc::Internal, "odd-rank similarity factor failed verification");
        d.verdict = true;
        d.factor = a;
        d.factor_status = FactorStatus::Exact;
        return d;
    }

    if (!disc_equal_with_witness(f, g, d)) return d;
    CliffordCompare cc = global_clifford_equal(f, g);
    RatFunc arf = arf_representative(f);
    // Classes may only differ where both local discriminants are nontrivial
    // (anisotropic rank 2 on both sides); a trivial local disc there splits
    // the Witt indices apart.
    for (const Place& v : cc.diff_places) {
        bool trivial_disc = local_wp_member(arf, v);
        record(d, "diff_place_disc_nontrivial", v, !trivial_disc,
               trivial_disc ? "local disc trivial where Clifford classes differ" : "");
        if (trivial_disc) {
            d.witness = v;
            return d;
        }
    }
    d.verdict = true;
    if (cc.diff_places.empty()) {
        record(d, "clifford_equal", std::nullopt, true, "locally isometric everywhere");
        d.factor = RatFunc::one(f.field());
        d.factor_status = FactorStatus::Exact;
        return d;
    }
    FactorSearch fs = find_similarity_factor(f, g, degree_bound);
    if (fs.factor) {
        d.factor = fs.factor;
        d.factor_status = FactorStatus::VerifiedSearch;
        record(d, "factor_verified", std::nullopt, true,
               "after " + std::to_string(fs.candidates_tried) + " candidates");
    } else {
        d.factor_status = FactorStatus::NotFoundWithinBound;
        record(d, "factor_search", std::nullopt, false,
               "decided by the local-global principle, factor not found (bound " +
               std::to_string(degree_bound) + ", " + std::to_string(fs.candidates_tried) +
               " candidates)");
    }
    return d;
}

namespace {

struct PoolEntry {
    Poly pi;
    std::vector<uint8_t> profile;  // symbol of (c, pi] at each support place
};

// Subsets of the pool enumerated by (total degree, index sequence); the
// callback returns true to stop.
template <typename F>
void enumerate_subsets(const std::vector<PoolEntry>& pool, int max_total_degree, long max_candidates, F&& visit) {
    std::vector<size_t> chosen;
    long seen = 0;
    // iterative deepening keeps the (degree, lex) order without materializing
    for (int target = 1; target <= max_total_degree; ++target) {
        auto rec = [&](auto&& self, size_t from, int remaining) -> bool {
            if (remaining == 0) {
                ++seen;
                if (visit(chosen)) return true;
                return seen >= max_candidates;
            }
            for (size_t i = from; i < pool.size(); ++i) {
                int deg = pool[i].pi.degree();
                if (deg > remaining) continue;
                chosen.push_back(i);
                bool stop = self(self, i + 1, remaining - deg);
                chosen.pop_back();
                if (stop) return true;
            }
            return false;
        };
        if (rec(rec, 0, target)) return;
    }
}

}  // namespace

FactorSearch find_similarity_factor(const QuadraticForm& f, const QuadraticForm& g, int degree_bound) {
    FactorSearch out;
    Gf2k fld = f.field();
    RatFunc c = arf_representative(g);

    std::vector<Place> support = support_places(f, g);
    CliffordData cf = clifford_symbol_list(f), cg = clifford_symbol_list(g);
    std::vector<uint8_t> target;
    target.reserve(support.size());
    int parity = 0;
    for (const Place& v : support) {
        uint8_t bit = static_cast<uint8_t>(cf.class_at(v) ^ cg.class_at(v));
        parity ^= bit;
        target.push_back(bit);
    }
    if (parity != 0) fail(Errc::Internal, "required local profile violates reciprocity");

    // Pool: support irreducibles first, then off-support irreducibles of
    // degree <= bound whose own-place symbol vanishes (others can never occur
    // in a matching product).
    std::vector<PoolEntry> pool;
    auto profile_of = [&](const Poly& pi) {
        std::vector<uint8_t> prof;
        prof.reserve(support.size());
        SymbolPair sp(c, RatFunc(pi));  // (c, pi]
        for (const Place& v : support) prof.push_back(static_cast<uint8_t>(schmid_symbol(sp, v)));
        return prof;
    };
    auto in_support = [&](const Poly& pi) {
        return std::any_of(support.begin(), support.end(), [&](const Place& v) {
            return !v.is_infinity() && v.pi() == pi;
        });
    };
    for (const Place& v : support)
        if (!v.is_infinity()) pool.push_back(PoolEntry{v.pi(), profile_of(v.pi())});
    int sup_degree_sum = 0;
    for (const PoolEntry& e : pool) sup_degree_sum += e.pi.degree();
    for (int deg = 1; deg <= degree_bound && pool.size() < kMaxPoolExtension; ++deg)
        for (const Poly& pi : monic_irreducibles(fld, deg)) {
            if (pool.size() >= kMaxPoolExtension) {
                out.pool_capped = true;
                break;
            }
            if (in_support(pi)) continue;
            // a candidate containing pi would carry this class at pi itself,
            // where the target profile is 0
            if (schmid_symbol(SymbolPair(c, RatFunc(pi)), Place::finite(pi)) != 0) continue;
            pool.push_back(PoolEntry{pi, profile_of(pi)});
        }

    int max_total = sup_degree_sum + degree_bound;
    std::optional<RatFunc> found;
    enumerate_subsets(pool, max_total, kMaxFactorCandidates, [&](const std::vector<size_t>& chosen) {
        ++out.candidates_tried;
        std::vector<uint8_t> acc(support.size(), 0);
        for (size_t i : chosen)
            for (size_t j = 0; j < acc.size(); ++j) acc[j] ^= pool[i].profile[j];
        if (acc != target) return false;
        Poly prod = Poly::one(fld);
        for (size_t i : chosen) prod = prod * pool[i].pi;
        RatFunc a(prod);
        if (isometric(f, scale(a, g)).verdict) {
            found = a;
            return true;
        }
        return false;
    });
    out.factor = found;
    return out;
}

}  // namespace qf2
