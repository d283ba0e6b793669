// Acceptance suite: one criterion per section, one PASS/FAIL line each, all
// exact (characteristic-2 arithmetic leaves no tolerance to negotiate).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "jobs.hpp"
#include "oracle.hpp"

using namespace qf2;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, const char* title, bool ok, const std::string& detail, double secs) {
    std::printf("%s criterion %d: %s (%s, %.1fs)\n", ok ? "PASS" : "FAIL", criterion, title,
                detail.c_str(), secs);
    if (!ok) ++g_failures;
}

RatFunc R(Gf2k f, const char* s) { return parse_ratfunc(f, s); }

QuadraticForm parse_form(Gf2k f, const char* odd, std::vector<std::pair<const char*, const char*>> bins) {
    std::optional<RatFunc> odd_part;
    if (odd) odd_part = R(f, odd);
    std::vector<BinaryPair> bs;
    for (auto& [a, b] : bins) bs.emplace_back(R(f, a), R(f, b));
    return QuadraticForm(f, std::move(odd_part), std::move(bs));
}

// ---------------------------------------------------------------- criterion 1
void criterion_scaling_completeness() {
    Timer timer;
    int failures = 0;
    long trials = 0;
    for (int k : {1, 2}) {
        Gf2k f(k);
        Rng rng(1000 + k);
        for (int i = 0; i < 250; ++i) {
            ++trials;
            int rank = 1 + static_cast<int>(rng() % 6);
            QuadraticForm q = random_form(rng, f, rank, 3);
            RatFunc a = random_ratfunc(rng, f, 3, true);
            QuadraticForm aq = scale(a, q);
            Decision d = similar_decide(q, aq);
            if (!d.verdict) {
                ++failures;
                continue;
            }
            if (d.factor && !isometric(q, scale(*d.factor, aq)).verdict) ++failures;
        }
    }
    report(1, "scaling completeness, 500 random (q, a) over F_2(t) and F_4(t)", failures == 0,
           std::to_string(trials) + " pairs, " + std::to_string(failures) + " failures", timer.seconds());
}

// ---------------------------------------------------------------- criterion 2
void criterion_reciprocity() {
    Timer timer;
    int failures = 0;
    long trials = 0;
    for (int k : {1, 2}) {
        Gf2k f(k);
        Rng rng(2000 + k);
        for (int i = 0; i < 500; ++i) {
            ++trials;
            SymbolPair p(random_ratfunc(rng, f, 4, false), random_ratfunc(rng, f, 4, true));
            if (!check_reciprocity(p)) ++failures;
        }
    }
    report(2, "reciprocity of 1000 random symbol pairs", failures == 0,
           std::to_string(trials) + " pairs, " + std::to_string(failures) + " failures", timer.seconds());
}

// ---------------------------------------------------------------- criterion 3
void criterion_basis_change() {
    Timer timer;
    int failures = 0;
    long trials = 0;
    for (int k : {1, 2}) {
        Gf2k f(k);
        Rng rng(3000 + k);
        for (int i = 0; i < 100; ++i) {
            ++trials;
            int rank = 1 + static_cast<int>(rng() % 5);
            QuadraticForm planted = random_form(rng, f, rank, 2);
            GramInput g = gram_of(planted);
            Matrix T = random_invertible(rng, f, rank);
            QuadraticForm q1 = normalize(g);
            QuadraticForm q2 = normalize(gram_transport(g, T));
            bool ok = q1.rank() == q2.rank() && global_disc_equal(q1, q2) &&
                      global_clifford_equal(q1, q2).equal;
            if (!ok) ++failures;
        }
    }
    report(3, "basis-change invariance of rank/disc/Clifford on 200 gram inputs", failures == 0,
           std::to_string(trials) + " transports, " + std::to_string(failures) + " failures",
           timer.seconds());
}

// ---------------------------------------------------------------- criterion 4
void criterion_local_table() {
    Timer timer;
    int failures = 0;
    long trials = 0;
    for (int k : {1, 2}) {
        Gf2k f(k);
        Rng rng(4000 + k);
        for (int i = 0; i < 250; ++i) {
            ++trials;
            int rank = 1 + static_cast<int>(rng() % 6);
            QuadraticForm q = random_form(rng, f, rank, 2);
            Place v = random_place(rng, f, 3);
            LocalProfile p = local_profile(q, v);
            bool ok = (p.anis_rank % 2) == (rank % 2) && p.anis_rank <= std::min(rank, 4) &&
                      p.anis_rank + 2 * p.witt_index == rank;
            if (rank >= 5) ok = ok && p.witt_index >= 1;
            if (rank == 2 && p.disc_trivial) ok = ok && p.clifford_class == 0;
            if (rank == 1) ok = ok && p.clifford_class == 0;
            if (!ok) ++failures;
        }
    }
    report(4, "local classification table coherence on 500 (form, place) samples", failures == 0,
           std::to_string(trials) + " samples, " + std::to_string(failures) + " failures",
           timer.seconds());
}

// ---------------------------------------------------------------- criterion 5
void criterion_regressions() {
    Timer timer;
    Gf2k f(1);
    Place at_t = Place::finite(parse_poly(f, "t"));
    Place at_t1 = Place::finite(parse_poly(f, "t+1"));
    int failures = 0;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ++failures;
            std::printf("  regression failed: %s\n", what);
        }
    };
    SymbolPair sp(R(f, "1/t"), R(f, "1+t"));
    expect(schmid_symbol(sp, at_t) == 1, "symbol (1/t, 1+t] at t");
    expect(schmid_symbol(sp, at_t1) == 1, "symbol (1/t, 1+t] at t+1");
    expect(schmid_symbol(sp, Place::infinity(f)) == 0, "symbol (1/t, 1+t] at infinity");
    expect(!local_wp_member(R(f, "1/t^2"), at_t), "1/t^2 not in wp K_t");
    expect(local_wp_member(R(f, "1/t^2 + 1/t"), at_t), "wp(1/t) in wp K_t");
    Decision iso = global_isotropic(parse_form(f, nullptr, {{"1", "1/t"}}));
    expect(!iso.verdict && iso.witness && *iso.witness == at_t, "[1, 1/t] anisotropic with witness t");
    expect(quaternion_class(R(f, "1+t"), R(f, "1/(t*(1+t))"), at_t) == 1,
           "{1+t, 1/(t(1+t))} is division at t");
    report(5, "hand-derived regressions over F_2(t)", failures == 0,
           std::to_string(failures) + " failures", timer.seconds());
}

// ---------------------------------------------------------------- criterion 6
bool rerun_named_check(const QuadraticForm& f1, const QuadraticForm& f2, const Decision& d) {
    // re-execute the failing certificate entry at the reported witness place
    if (!d.witness) return false;
    for (const CheckRecord& c : d.certificate) {
        if (c.ok) continue;
        if (c.check == "arf_wp_equal")
            return !local_wp_member(arf_representative(f1) + arf_representative(f2), *d.witness);
        if (c.check == "diff_place_disc_nontrivial")
            return local_wp_member(arf_representative(f1), *d.witness) &&
                   clifford_symbol_list(f1).class_at(*d.witness) !=
                       clifford_symbol_list(f2).class_at(*d.witness);
        if (c.check == "clifford_equal")
            return clifford_symbol_list(f1).class_at(*d.witness) !=
                   clifford_symbol_list(f2).class_at(*d.witness);
    }
    return false;
}

void criterion_negative_certificates() {
    Timer timer;
    Gf2k f(1);
    int failures = 0;

    QuadraticForm h2 = QuadraticForm::hyperbolic(f, 2);
    QuadraticForm g1 = direct_sum(parse_form(f, nullptr, {{"1+t", "1/(t*(1+t))"}}),
                                  QuadraticForm::hyperbolic(f, 1));
    Decision d1 = similar_decide(h2, g1);
    if (d1.verdict || !rerun_named_check(h2, g1, d1)) ++failures;

    QuadraticForm h1 = QuadraticForm::hyperbolic(f, 1);
    QuadraticForm g2 = parse_form(f, nullptr, {{"1", "1/t"}});
    Decision d2 = similar_decide(h1, g2);
    if (d2.verdict || !rerun_named_check(h1, g2, d2)) ++failures;

    // same check through the diff-place path: trivial common Arf, nonsplit class
    QuadraticForm a4 = direct_sum(parse_form(f, nullptr, {{"1+t", "1/(t*(1+t))"}}),
                                  parse_form(f, nullptr, {{"1", "1/t"}}));
    Decision d3 = similar_decide(h2, a4);
    if (d3.verdict || !rerun_named_check(h2, a4, d3)) ++failures;

    report(6, "negative similarity decisions carry reproducible certificates", failures == 0,
           std::to_string(failures) + " failures", timer.seconds());
}

// ---------------------------------------------------------------- criterion 7
void criterion_witness_search() {
    Timer timer;
    Gf2k f(1);
    int failures = 0;

    std::vector<QuadraticForm> isotropic_suite = {
        // rank 2 with trivial Arf class
        parse_form(f, nullptr, {{"0", "0"}}),
        parse_form(f, nullptr, {{"1", "t^2+t"}}),
        parse_form(f, nullptr, {{"t", "t+1"}}),
        parse_form(f, nullptr, {{"1+t", "t"}}),
        parse_form(f, nullptr, {{"0", "t^3"}}),
        // rank 3 with trivial Clifford class
        parse_form(f, "1", {{"1", "1"}}),
        parse_form(f, "t", {{"t", "t"}}),
        parse_form(f, "t+1", {{"0", "1/t"}}),
        parse_form(f, "t^2+t+1", {{"t^2+t+1", "1"}}),
        // rank 4 with trivial local obstructions
        QuadraticForm::hyperbolic(f, 2),
        parse_form(f, nullptr, {{"1", "t^2+t"}, {"0", "0"}}),
        parse_form(f, nullptr, {{"1", "1"}, {"1", "1"}}),
        parse_form(f, nullptr, {{"t", "t"}, {"t", "t+1"}}),
        parse_form(f, nullptr, {{"1", "1/t"}, {"1/t", "1"}}),
        // rank 5 and 6: isotropic by the rank rule
        parse_form(f, "1", {{"0", "0"}, {"1", "1"}}),
        parse_form(f, "t", {{"1", "1/t"}, {"t", "t"}}),
        parse_form(f, "1+t", {{"1", "t"}, {"t+1", "1/(t*(1+t))"}}),
        QuadraticForm::hyperbolic(f, 3),
        parse_form(f, nullptr, {{"1", "1/t"}, {"1+t", "1/(t*(1+t))"}, {"t", "1"}}),
        parse_form(f, nullptr, {{"t", "t^2"}, {"1", "t+1"}, {"0", "1/t"}}),
    };
    int idx = 0;
    for (const QuadraticForm& q : isotropic_suite) {
        ++idx;
        Decision d = global_isotropic(q);
        if (!d.verdict) {
            std::printf("  suite form %d unexpectedly decided anisotropic\n", idx);
            ++failures;
            continue;
        }
        auto w = search_isotropic(q, 4);
        if (!w) {
            std::printf("  suite form %d (rank %d): no witness within degree 4\n", idx, q.rank());
            ++failures;
        }
    }

    std::vector<QuadraticForm> anisotropic_suite = {
        parse_form(f, "1", {}),
        parse_form(f, "t", {}),
        parse_form(f, nullptr, {{"1", "1/t"}}),
        parse_form(f, nullptr, {{"t", "t"}}),
        parse_form(f, nullptr, {{"1+t", "1/(t*(1+t))"}}),
        parse_form(f, "1", {{"1+t", "1/(t*(1+t))"}}),
        direct_sum(parse_form(f, nullptr, {{"1+t", "1/(t*(1+t))"}}),
                   parse_form(f, nullptr, {{"1", "1/t"}})),
    };
    for (const QuadraticForm& q : anisotropic_suite) {
        Decision d = global_isotropic(q);
        if (d.verdict) {
            std::printf("  anisotropic-suite rank-%d form decided isotropic\n", q.rank());
            ++failures;
            continue;
        }
        if (search_isotropic(q, 6).has_value()) {
            std::printf("  rank-%d anisotropic form produced a witness at degree 6\n", q.rank());
            ++failures;
        }
    }
    report(7, "isotropy decisions versus exhaustive vector search", failures == 0,
           std::to_string(isotropic_suite.size()) + " isotropic + " +
               std::to_string(anisotropic_suite.size()) + " anisotropic forms, " +
               std::to_string(failures) + " failures",
           timer.seconds());
}

// ---------------------------------------------------------------- criterion 8
void criterion_local_global_agreement() {
    Timer timer;
    int failures = 0;
    long trials = 0;
    for (int k : {1, 2}) {
        Gf2k f(k);
        Rng rng(8000 + k);
        for (int i = 0; i < 150; ++i) {
            ++trials;
            int rank = 1 + static_cast<int>(rng() % 5);
            QuadraticForm q1 = random_form(rng, f, rank, 2);
            QuadraticForm q2 = (rng() % 2) ? scale(random_ratfunc(rng, f, 2, true), q1)
                                           : random_form(rng, f, rank, 2);
            bool decided = similar_decide(q1, q2).verdict;

            std::vector<Place> places = support_places(q1, q2);
            for (int e = 0; e < 20; ++e) places.push_back(random_place(rng, f, 3));
            bool conj = true;
            for (const Place& v : places) conj = conj && local_similar(q1, q2, v);
            if (rank % 2 == 0) conj = conj && global_disc_equal(q1, q2);
            if (conj != decided) ++failures;
        }
    }
    report(8, "similar_decide agrees with local conjunction + global Arf test", failures == 0,
           std::to_string(trials) + " pairs, " + std::to_string(failures) + " failures",
           timer.seconds());
}

}  // namespace

int main() {
    Timer total;
    criterion_scaling_completeness();
    criterion_reciprocity();
    criterion_basis_change();
    criterion_local_table();
    criterion_regressions();
    criterion_negative_certificates();
    criterion_witness_search();
    criterion_local_global_agreement();
    std::printf("%s: %d criterion failure(s), %.1fs total\n", g_failures == 0 ? "OK" : "FAILED",
                g_failures, total.seconds());
    return g_failures == 0 ? 0 : 1;
}
