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

#include "jobs.hpp"

#include <chrono>
#include <set>

#include "oracle.hpp"

namespace qf2 {

namespace {

const std::set<std::string> kCommands = {"invariants", "localize", "isometric", "similar",
                                         "isotropic",  "factor",   "reciprocity", "selftest"};

int command_arity(const std::string& cmd) {
    if (cmd == "isometric" || cmd == "similar" || cmd == "factor") return 2;
    if (cmd == "selftest") return 0;
    return 1;
}

}  // namespace

JobSpec parse_job(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, std::string("invalid job document: ") + e.what());
    }
    if (!doc.is_object()) fail(Errc::ParseError, "job document must be a JSON object");

    JobSpec job;
    if (doc.contains("field")) {
        const Json& f = doc["field"];
        if (!f.is_object() || !f.contains("k") || !f["k"].is_number_integer())
            fail(Errc::ParseError, "\"field\" must be {\"k\": <int>}");
        job.k = f["k"].get<int>();
    }
    if (job.k < 1 || job.k > 8)
        fail(Errc::UnsupportedField, "field degree k = " + std::to_string(job.k) + " not in 1..8");
    Gf2k field(job.k);

    if (!doc.contains("command") || !doc["command"].is_string())
        fail(Errc::ParseError, "job document needs a \"command\" string");
    job.command = doc["command"].get<std::string>();
    if (!kCommands.count(job.command)) fail(Errc::ParseError, "unknown command \"" + job.command + "\"");

    if (doc.contains("forms")) {
        if (!doc["forms"].is_array()) fail(Errc::ParseError, "\"forms\" must be an array");
        for (const Json& fj : doc["forms"]) job.forms.push_back(form_from_json(field, fj));
    }
    int want = command_arity(job.command);
    bool reciprocity_symbol = job.command == "reciprocity" && doc.contains("options") &&
                              doc["options"].is_object() && doc["options"].contains("symbol");
    if (!reciprocity_symbol && static_cast<int>(job.forms.size()) != want)
        fail(Errc::ParseError, "command \"" + job.command + "\" needs exactly " +
                                   std::to_string(want) + " form(s), got " +
                                   std::to_string(job.forms.size()));

    if (doc.contains("options")) {
        const Json& o = doc["options"];
        if (!o.is_object()) fail(Errc::ParseError, "\"options\" must be an object");
        if (o.contains("degree_bound")) job.options.degree_bound = o["degree_bound"].get<int>();
        if (o.contains("seed")) job.options.seed = o["seed"].get<uint64_t>();
        if (o.contains("negative_exit_zero")) job.options.negative_exit_zero = o["negative_exit_zero"].get<bool>();
        if (o.contains("timing")) job.options.timing = o["timing"].get<bool>();
        if (o.contains("verbose")) job.options.verbose = o["verbose"].get<bool>();
        if (o.contains("trials")) job.options.trials = o["trials"].get<int>();
        if (o.contains("places"))
            for (const Json& p : o["places"]) job.options.places.push_back(p.get<std::string>());
        if (o.contains("symbol")) {
            const Json& s = o["symbol"];
            if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string())
                fail(Errc::ParseError, "\"symbol\" must be a pair of expression strings");
            job.options.symbol_x = s[0].get<std::string>();
            job.options.symbol_y = s[1].get<std::string>();
        }
        if (job.options.degree_bound < 0 || job.options.degree_bound > 16)
            fail(Errc::ParseError, "degree_bound must be in 0..16");
    }
    return job;
}

Json decision_to_json(const Decision& d) {
    Json out = Json::object();
    out["verdict"] = d.verdict;
    out["factor"] = d.factor ? Json(ratfunc_to_string(*d.factor)) : Json(nullptr);
    out["factor_status"] = factor_status_name(d.factor_status);
    out["witness"] = d.witness ? Json(place_to_string(*d.witness)) : Json(nullptr);
    Json cert = Json::array();
    for (const CheckRecord& c : d.certificate) {
        Json e = Json::object();
        e["check"] = c.check;
        e["place"] = c.place ? Json(place_to_string(*c.place)) : Json(nullptr);
        e["ok"] = c.ok;
        e["detail"] = c.detail;
        cert.push_back(std::move(e));
    }
    out["certificate"] = cert;
    return out;
}

Json profile_to_json(const LocalProfile& p) {
    Json out = Json::object();
    out["place"] = place_to_string(p.place);
    out["rank"] = p.rank;
    out["disc_trivial"] = p.disc_trivial;
    out["clifford_class"] = p.clifford_class;
    out["anisotropic_rank"] = p.anis_rank;
    out["witt_index"] = p.witt_index;
    return out;
}

namespace {

Json invariants_report(const QuadraticForm& q) {
    Json out = Json::object();
    FormInvariants inv = invariants(q);
    out["rank"] = inv.rank;
    out["disc"] = ratfunc_to_string(inv.disc);
    out["disc_kind"] = q.odd_part() ? "square-class" : "arf-class";
    CliffordData cd = clifford_symbol_list(q);
    Json symbols = Json::array();
    for (const SymbolPair& p : cd.symbols)
        symbols.push_back(Json::array({ratfunc_to_string(p.as_slot), ratfunc_to_string(p.mult_slot)}));
    out["clifford_symbols"] = symbols;
    Json classes = Json::object();
    for (const Place& v : cd.support) classes[place_to_string(v)] = cd.class_at(v);
    out["clifford_local_classes"] = classes;
    out["anisotropic_dimension"] = global_anisotropic_dimension(q);
    return out;
}

// Per-place profiles of every input form over the combined support, appended
// to decision reports in verbose mode.
Json verbose_profiles(const std::vector<QuadraticForm>& forms) {
    Json out = Json::array();
    if (forms.empty()) return out;
    std::vector<Place> places = forms.size() > 1 ? support_places(forms[0], forms[1])
                                                 : support_places(forms[0], forms[0]);
    for (size_t i = 0; i < forms.size(); ++i) {
        Json entry = Json::object();
        entry["form"] = static_cast<int>(i);
        Json profs = Json::array();
        for (const Place& v : places) profs.push_back(profile_to_json(local_profile(forms[i], v)));
        entry["profiles"] = profs;
        out.push_back(std::move(entry));
    }
    return out;
}

Json localize_report(const QuadraticForm& q, const JobOptions& opt) {
    std::vector<Place> places;
    if (!opt.places.empty()) {
        for (const std::string& s : opt.places) places.push_back(parse_place(q.field(), s));
    } else {
        places = support_places(q, q);
    }
    Json out = Json::array();
    for (const Place& v : places) out.push_back(profile_to_json(local_profile(q, v)));
    return out;
}

Json reciprocity_report(const JobSpec& job, Gf2k field, bool& all_ok) {
    Json out = Json::object();
    std::vector<SymbolPair> pairs;
    if (job.options.symbol_x) {
        pairs.emplace_back(parse_ratfunc(field, *job.options.symbol_x),
                           parse_ratfunc(field, *job.options.symbol_y));
    } else {
        const QuadraticForm q = canonicalize(job.forms.at(0));
        for (const SymbolPair& p : clifford_symbol_list(q).symbols) pairs.push_back(p);
    }
    Json items = Json::array();
    all_ok = true;
    for (const SymbolPair& p : pairs) {
        bool ok = check_reciprocity(p);
        all_ok = all_ok && ok;
        Json e = Json::object();
        e["symbol"] = Json::array({ratfunc_to_string(p.as_slot), ratfunc_to_string(p.mult_slot)});
        e["reciprocity"] = ok;
        items.push_back(std::move(e));
    }
    out["symbols"] = items;
    out["all"] = all_ok;
    return out;
}

Json selftest_report(const JobOptions& opt, Gf2k field, bool& all_ok) {
    uint64_t seed = opt.seed;
    int n_scale = opt.trials > 0 ? opt.trials : 30;
    int n_recip = opt.trials > 0 ? opt.trials : 60;
    int n_fuzz = opt.trials > 0 ? opt.trials : 25;
    Rng rng(seed);
    Json batteries = Json::array();
    all_ok = true;

    {  // scaled pairs decide similar with a verified factor when returned
        int failures = 0;
        for (int i = 0; i < n_scale; ++i) {
            int rank = 1 + static_cast<int>(rng() % 6);
            QuadraticForm q = random_form(rng, field, rank, 2);
            RatFunc a = random_ratfunc(rng, field, 2, true);
            Decision d = similar_decide(q, scale(a, q), opt.degree_bound);
            bool ok = d.verdict;
            if (ok && d.factor) ok = isometric(q, scale(*d.factor, scale(a, q))).verdict;
            if (!ok) ++failures;
        }
        all_ok = all_ok && failures == 0;
        batteries.push_back(Json{{"name", "scaled-similarity"}, {"trials", n_scale}, {"failures", failures}});
    }
    {  // symbol reciprocity
        int failures = 0;
        for (int i = 0; i < n_recip; ++i) {
            SymbolPair p(random_ratfunc(rng, field, 3, false), random_ratfunc(rng, field, 3, true));
            if (!check_reciprocity(p)) ++failures;
        }
        all_ok = all_ok && failures == 0;
        batteries.push_back(Json{{"name", "reciprocity"}, {"trials", n_recip}, {"failures", failures}});
    }
    {  // normalization invariance
        FuzzReport fr = fuzz_normalization(seed + 1, n_fuzz, field);
        all_ok = all_ok && fr.failures == 0;
        batteries.push_back(Json{{"name", "normalization-invariance"},
                                 {"trials", fr.trials},
                                 {"failures", fr.failures},
                                 {"first_failure", fr.first_failure}});
    }
    {  // hand-derived regressions over F_2(t)
        Gf2k f2(1);
        RatFunc t = RatFunc::t(f2), one = RatFunc::one(f2);
        Place at_t = Place::finite(Poly::t(f2));
        Place at_t1 = Place::finite(Poly(f2, {f2.one(), f2.one()}));
        int failures = 0;
        auto expect = [&](bool cond) {
            if (!cond) ++failures;
        };
        SymbolPair sp(one / t, one + t);
        expect(schmid_symbol(sp, at_t) == 1);
        expect(schmid_symbol(sp, at_t1) == 1);
        expect(schmid_symbol(sp, Place::infinity(f2)) == 0);
        expect(!local_wp_member(one / (t * t), at_t));
        expect(local_wp_member(one / (t * t) + one / t, at_t));
        Decision iso = global_isotropic(QuadraticForm::binary(one, one / t));
        expect(!iso.verdict && iso.witness && *iso.witness == at_t);
        expect(quaternion_class(one + t, one / (t * (one + t)), at_t) == 1);
        all_ok = all_ok && failures == 0;
        batteries.push_back(Json{{"name", "regressions"}, {"trials", 7}, {"failures", failures}});
    }
    Json out = Json::object();
    out["batteries"] = batteries;
    out["all"] = all_ok;
    return out;
}

}  // namespace

JobResult run_job(const JobSpec& job) {
    auto t0 = std::chrono::steady_clock::now();
    Gf2k field(job.k);
    JobResult res;
    Json report = Json::object();
    report["tool"] = "qf2";
    report["version"] = "0.1.0";
    report["command"] = job.command;
    report["field"] = Json{{"k", job.k}};
    report["options"] = Json{{"degree_bound", job.options.degree_bound},
                             {"seed", job.options.seed}};

    std::vector<QuadraticForm> forms;
    forms.reserve(job.forms.size());
    for (const FormOrGram& fg : job.forms) forms.push_back(canonicalize(fg));
    Json inputs = Json::array();
    for (const QuadraticForm& q : forms) inputs.push_back(form_to_json(q));
    report["inputs"] = inputs;

    int exit_code = kExitDecided;
    if (job.command == "invariants") {
        report["result"] = invariants_report(forms.at(0));
    } else if (job.command == "localize") {
        report["result"] = localize_report(forms.at(0), job.options);
    } else if (job.command == "isometric") {
        Decision d = isometric(forms.at(0), forms.at(1));
        report["result"] = decision_to_json(d);
        exit_code = d.verdict || job.options.negative_exit_zero ? kExitDecided : kExitNegative;
    } else if (job.command == "similar") {
        Decision d = similar_decide(forms.at(0), forms.at(1), job.options.degree_bound);
        report["result"] = decision_to_json(d);
        exit_code = d.verdict || job.options.negative_exit_zero ? kExitDecided : kExitNegative;
    } else if (job.command == "isotropic") {
        Decision d = global_isotropic(forms.at(0));
        report["result"] = decision_to_json(d);
        exit_code = d.verdict || job.options.negative_exit_zero ? kExitDecided : kExitNegative;
    } else if (job.command == "factor") {
        Decision d = similar_decide(forms.at(0), forms.at(1), job.options.degree_bound);
        report["result"] = decision_to_json(d);
        if (!d.verdict)
            exit_code = job.options.negative_exit_zero ? kExitDecided : kExitNegative;
        else if (!d.factor)
            exit_code = kExitFactorNotFound;
    } else if (job.command == "reciprocity") {
        bool ok = false;
        report["result"] = reciprocity_report(job, field, ok);
        exit_code = ok || job.options.negative_exit_zero ? kExitDecided : kExitNegative;
    } else if (job.command == "selftest") {
        bool ok = false;
        report["result"] = selftest_report(job.options, field, ok);
        exit_code = ok ? kExitDecided : kExitNegative;
    } else {
        fail(Errc::InvalidArgument, "unknown command \"" + job.command + "\"");
    }

    if (job.options.verbose &&
        (job.command == "isometric" || job.command == "similar" || job.command == "isotropic" ||
         job.command == "factor"))
        report["local_profiles"] = verbose_profiles(forms);

    if (job.options.timing) {
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        report["timing_ms"] = dt.count();
    }
    report["exit_code"] = exit_code;
    res.exit_code = exit_code;
    res.report = std::move(report);
    return res;
}

}  // namespace qf2
