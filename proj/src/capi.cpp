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

#include "qf2.h"

#include <cstring>
#include <new>
#include <string>

#include "jobs.hpp"

struct qf2_field {
    qf2::Gf2k impl;
};

struct qf2_form {
    qf2::Gf2k field;
    qf2::QuadraticForm impl;
};

namespace {

thread_local std::string t_last_error;

qf2_status map_errc(qf2::Errc c) {
    using qf2::Errc;
    switch (c) {
        case Errc::DivisionByZero: return QF2_ERR_DIVISION_BY_ZERO;
        case Errc::ModulusMismatch: return QF2_ERR_MODULUS_MISMATCH;
        case Errc::ZeroPolynomial: return QF2_ERR_ZERO_POLYNOMIAL;
        case Errc::ZeroElement: return QF2_ERR_ZERO_ELEMENT;
        case Errc::ZeroScalar: return QF2_ERR_ZERO_SCALAR;
        case Errc::ZeroMultiplicativeSlot: return QF2_ERR_ZERO_MULT_SLOT;
        case Errc::DegenerateForm: return QF2_ERR_DEGENERATE_FORM;
        case Errc::RankMismatch: return QF2_ERR_RANK_MISMATCH;
        case Errc::TwoOddParts: return QF2_ERR_TWO_ODD_PARTS;
        case Errc::SingularMatrix: return QF2_ERR_SINGULAR_MATRIX;
        case Errc::ParseError: return QF2_ERR_PARSE;
        case Errc::UnsupportedField: return QF2_ERR_UNSUPPORTED_FIELD;
        case Errc::InvalidArgument: return QF2_ERR_INVALID_ARGUMENT;
        case Errc::Internal: return QF2_ERR_INTERNAL;
    }
    return QF2_ERR_INTERNAL;
}

template <typename F>
qf2_status guarded(F&& body) {
    try {
        return body();
    } catch (const qf2::Error& e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QF2_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qf2_status emit(const qf2::Json& doc, char** out_json) {
    *out_json = dup_string(doc.dump());
    if (!*out_json) {
        t_last_error = "allocation failed";
        return QF2_ERR_INTERNAL;
    }
    return QF2_OK;
}

qf2_status require(bool ok, const char* what) {
    if (!ok) {
        t_last_error = what;
        return QF2_ERR_NULL_ARGUMENT;
    }
    return QF2_OK;
}

}  // namespace

extern "C" {

const char* qf2_version(void) { return "0.1.0"; }

const char* qf2_last_error(void) { return t_last_error.c_str(); }

void qf2_string_free(char* s) { delete[] s; }

qf2_status qf2_field_create(int k, qf2_field** out) {
    if (qf2_status s = require(out != nullptr, "out must not be null")) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new qf2_field{qf2::Gf2k(k)};
        return QF2_OK;
    });
}

void qf2_field_free(qf2_field* field) { delete field; }

int qf2_field_k(const qf2_field* field) { return field ? field->impl.k() : 0; }

qf2_status qf2_form_parse(const qf2_field* field, const char* json_text, qf2_form** out) {
    if (qf2_status s = require(field && json_text && out, "field, json_text and out must not be null"))
        return s;
    *out = nullptr;
    return guarded([&] {
        qf2::Json doc = qf2::Json::parse(json_text, nullptr, false);
        if (doc.is_discarded()) {
            t_last_error = "form document is not valid JSON";
            return QF2_ERR_PARSE;
        }
        qf2::QuadraticForm q = qf2::canonicalize(qf2::form_from_json(field->impl, doc));
        *out = new qf2_form{field->impl, std::move(q)};
        return QF2_OK;
    });
}

qf2_status qf2_form_to_json(const qf2_form* form, char** out_json) {
    if (qf2_status s = require(form && out_json, "form and out_json must not be null")) return s;
    return guarded([&] { return emit(qf2::form_to_json(form->impl), out_json); });
}

void qf2_form_free(qf2_form* form) { delete form; }

int qf2_form_rank(const qf2_form* form) { return form ? form->impl.rank() : -1; }

qf2_status qf2_form_scale(const qf2_form* form, const char* expr, qf2_form** out) {
    if (qf2_status s = require(form && expr && out, "form, expr and out must not be null")) return s;
    *out = nullptr;
    return guarded([&] {
        qf2::RatFunc a = qf2::parse_ratfunc(form->field, expr);
        *out = new qf2_form{form->field, qf2::scale(a, form->impl)};
        return QF2_OK;
    });
}

qf2_status qf2_invariants(const qf2_form* form, char** out_json) {
    if (qf2_status s = require(form && out_json, "form and out_json must not be null")) return s;
    return guarded([&] {
        qf2::FormInvariants inv = qf2::invariants(form->impl);
        qf2::Json doc;
        doc["rank"] = inv.rank;
        doc["disc"] = qf2::ratfunc_to_string(inv.disc);
        doc["disc_kind"] = form->impl.odd_part() ? "square-class" : "arf-class";
        doc["anisotropic_dimension"] = qf2::global_anisotropic_dimension(form->impl);
        return emit(doc, out_json);
    });
}

qf2_status qf2_local_profile(const qf2_form* form, const char* place, char** out_json) {
    if (qf2_status s = require(form && place && out_json, "form, place and out_json must not be null"))
        return s;
    return guarded([&] {
        qf2::Place v = qf2::parse_place(form->field, place);
        return emit(qf2::profile_to_json(qf2::local_profile(form->impl, v)), out_json);
    });
}

qf2_status qf2_isometric(const qf2_form* f, const qf2_form* g, char** out_json) {
    if (qf2_status s = require(f && g && out_json, "f, g and out_json must not be null")) return s;
    return guarded([&] { return emit(qf2::decision_to_json(qf2::isometric(f->impl, g->impl)), out_json); });
}

qf2_status qf2_similar(const qf2_form* f, const qf2_form* g, int degree_bound, char** out_json) {
    if (qf2_status s = require(f && g && out_json, "f, g and out_json must not be null")) return s;
    return guarded([&] {
        return emit(qf2::decision_to_json(qf2::similar_decide(f->impl, g->impl, degree_bound)), out_json);
    });
}

qf2_status qf2_isotropic(const qf2_form* form, char** out_json) {
    if (qf2_status s = require(form && out_json, "form and out_json must not be null")) return s;
    return guarded([&] { return emit(qf2::decision_to_json(qf2::global_isotropic(form->impl)), out_json); });
}

qf2_status qf2_run_job(const char* job_json, char** out_report_json, int* out_exit_code) {
    if (qf2_status s =
            require(job_json && out_report_json && out_exit_code, "all arguments must be non-null"))
        return s;
    return guarded([&] {
        qf2::JobResult r = qf2::run_job(qf2::parse_job(job_json));
        *out_exit_code = r.exit_code;
        return emit(r.report, out_report_json);
    });
}

}  // extern "C"
