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

#include "textio.hpp"

#include <cctype>
#include <sstream>

namespace qf2 {

std::string elem_to_string(const FieldElem& c) {
    if (c.is_zero()) return "0";
    if (c.is_one()) return "1";
    FieldElem g = c.field().gen();
    FieldElem p = g;
    for (unsigned i = 1; i < c.field().q(); ++i) {
        if (p == c) return i == 1 ? "g" : "g^" + std::to_string(i);
        p = p * g;
    }
    fail(Errc::Internal, "element outside the cyclic group");
}

std::string poly_to_string(const Poly& p, bool compact) {
    if (p.is_zero()) return "0";
    const char* plus = compact ? "+" : " + ";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        FieldElem c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << plus;
        first = false;
        if (i == 0) {
            os << elem_to_string(c);
        } else {
            if (!c.is_one()) os << elem_to_string(c) << "*";
            os << (i == 1 ? "t" : "t^" + std::to_string(i));
        }
    }
    return os.str();
}

namespace {

bool multi_term(const std::string& s) { return s.find('+') != std::string::npos; }

}  // namespace

std::string ratfunc_to_string(const RatFunc& u, bool compact) {
    std::string n = poly_to_string(u.num(), compact);
    if (u.den().is_one()) return n;
    std::string d = poly_to_string(u.den(), compact);
    if (multi_term(n)) n = "(" + n + ")";
    if (multi_term(d)) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

// Recursive-descent parser for the rational-expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] digits)?
//   atom   := 't' | 'g' | digits | '(' expr ')'
class ExprParser {
   public:
    ExprParser(Gf2k field, const std::string& text) : fld_(field), s_(text) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) err("unexpected trailing input");
        return r;
    }

   private:
    [[noreturn]] void err(const std::string& what) {
        fail(Errc::ParseError,
             what + " at position " + std::to_string(pos_ + 1) + " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            err("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) err("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    RatFunc atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFunc r = expr();
            if (!eat(')')) err("expected ')'");
            return r;
        }
        if (c == 't') {
            ++pos_;
            return RatFunc::t(fld_);
        }
        if (c == 'g') {
            ++pos_;
            return RatFunc::constant(fld_.gen());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return RatFunc::constant(fld_.from_int(static_cast<unsigned long long>(v)));
        }
        err("expected 't', 'g', a digit or '('");
    }

    RatFunc factor() {
        RatFunc base = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0 && base.is_zero()) err("negative power of 0");
            return base.pow(e);
        }
        return base;
    }

    RatFunc term() {
        RatFunc acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) err("division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatFunc expr() {
        if (peek() == '-') ++pos_;  // unary minus is the identity here
        RatFunc acc = term();
        while (peek() == '+' || peek() == '-') {
            ++pos_;  // '-' is '+' in characteristic 2
            acc = acc + term();
        }
        return acc;
    }

    Gf2k fld_;
    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(Gf2k field, const std::string& text) { return ExprParser(field, text).parse(); }

Poly parse_poly(Gf2k field, const std::string& text) {
    RatFunc u = parse_ratfunc(field, text);
    if (!u.is_polynomial()) fail(Errc::ParseError, "expected a polynomial: \"" + text + "\"");
    return u.num();
}

std::string ext_elem_to_string(const ExtElem& e) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e.rep().size(); ++i) {
        if (i) os << ",";
        os << elem_to_string(e.rep()[i]);
    }
    os << "]";
    return os.str();
}

std::string place_to_string(const Place& v) {
    if (v.is_infinity()) return "inf";
    return "π:" + poly_to_string(v.pi(), true);
}

Place parse_place(Gf2k field, const std::string& text) {
    if (text == "inf" || text == "infinity") return Place::infinity(field);
    std::string body;
    if (text.rfind("π:", 0) == 0)
        body = text.substr(std::string("π:").size());
    else if (text.rfind("pi:", 0) == 0)
        body = text.substr(3);
    else
        fail(Errc::ParseError, "place must be \"π:<poly>\", \"pi:<poly>\" or \"inf\": \"" + text + "\"");
    return Place::finite(parse_poly(field, body));
}

Json form_to_json(const QuadraticForm& q) {
    Json doc = Json::object();
    if (q.odd_part()) doc["odd"] = ratfunc_to_string(*q.odd_part());
    Json bs = Json::array();
    for (const BinaryPair& p : q.binaries())
        bs.push_back(Json::array({ratfunc_to_string(p.first), ratfunc_to_string(p.second)}));
    doc["binaries"] = bs;
    return doc;
}

FormOrGram form_from_json(Gf2k field, const Json& doc) {
    if (!doc.is_object()) fail(Errc::ParseError, "form document must be an object");
    if (doc.contains("gram")) {
        const Json& rows = doc["gram"];
        if (!rows.is_array() || rows.empty()) fail(Errc::ParseError, "\"gram\" must be a non-empty array");
        GramInput g{field, {}};
        int n = static_cast<int>(rows.size());
        for (int i = 0; i < n; ++i) {
            const Json& row = rows[static_cast<size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n - i)
                fail(Errc::ParseError, "gram row " + std::to_string(i) + " must have " +
                                           std::to_string(n - i) + " entries");
            std::vector<RatFunc> r;
            for (const Json& cell : row) {
                if (!cell.is_string()) fail(Errc::ParseError, "gram entries must be strings");
                r.push_back(parse_ratfunc(field, cell.get<std::string>()));
            }
            g.rows.push_back(std::move(r));
        }
        return g;
    }
    std::optional<RatFunc> odd_part;
    if (doc.contains("odd")) {
        if (!doc["odd"].is_string()) fail(Errc::ParseError, "\"odd\" must be a string");
        odd_part = parse_ratfunc(field, doc["odd"].get<std::string>());
        if (odd_part->is_zero()) fail(Errc::ParseError, "odd part must be nonzero");
    }
    std::vector<BinaryPair> bs;
    if (doc.contains("binaries")) {
        if (!doc["binaries"].is_array()) fail(Errc::ParseError, "\"binaries\" must be an array");
        for (const Json& pair : doc["binaries"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
                fail(Errc::ParseError, "each binary must be a pair of strings");
            bs.emplace_back(parse_ratfunc(field, pair[0].get<std::string>()),
                            parse_ratfunc(field, pair[1].get<std::string>()));
        }
    }
    if (!odd_part && bs.empty())
        fail(Errc::ParseError, "form needs \"odd\", \"binaries\" or \"gram\"");
    return QuadraticForm(field, std::move(odd_part), std::move(bs));
}

QuadraticForm canonicalize(const FormOrGram& fg) {
    if (std::holds_alternative<QuadraticForm>(fg)) return std::get<QuadraticForm>(fg);
    return normalize(std::get<GramInput>(fg));
}

}  // namespace qf2
