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

#include "poly.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace qf2 {

Poly::Poly(Gf2k field, std::vector<FieldElem> coeffs) : k_(field.k()), c_(std::move(coeffs)) {
    for (const FieldElem& e : c_)
        if (e.k() != k_) fail(Errc::ModulusMismatch, "polynomial coefficient over a different field");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::t(Gf2k f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::constant(FieldElem c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field().zero();
    return c_[static_cast<size_t>(i)];
}

FieldElem Poly::leading() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of 0");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (k_ != o.k_) fail(Errc::ModulusMismatch, "polynomials over different fields");
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), field().zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(field(), std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (k_ != o.k_) fail(Errc::ModulusMismatch, "polynomials over different fields");
    if (is_zero() || o.is_zero()) return Poly(field());
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, field().zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field(), std::move(r));
}

Poly Poly::operator*(const FieldElem& s) const {
    std::vector<FieldElem> r = c_;
    for (FieldElem& e : r) e = e * s;
    return Poly(field(), std::move(r));
}

Poly Poly::shifted(int e) const {
    if (is_zero()) return *this;
    std::vector<FieldElem> r(static_cast<size_t>(e), field().zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field(), std::move(r));
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc = field().zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (k_ != o.k_) fail(Errc::ModulusMismatch, "polynomials over different fields");
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by 0");
    Gf2k f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    FieldElem lb_inv = b.leading().inv();
    std::vector<FieldElem> rem(a.coeffs());
    std::vector<FieldElem> quo(static_cast<size_t>(a.degree() - b.degree() + 1), f.zero());
    for (int d = a.degree(); d >= b.degree(); --d) {
        FieldElem c = rem[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        FieldElem q = c * lb_inv;
        quo[static_cast<size_t>(d - b.degree())] = q;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(d - b.degree() + i)] =
                rem[static_cast<size_t>(d - b.degree() + i)] + q * b.coeff(i);
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : make_monic(x);
}

Poly derivative(const Poly& f) {
    // (t^i)' = i * t^(i-1); only odd i survive in characteristic 2.
    std::vector<FieldElem> r;
    for (int i = 1; i <= f.degree(); i += 2) {
        while (static_cast<int>(r.size()) < i - 1) r.push_back(f.field().zero());
        r.push_back(f.coeff(i));
        r.push_back(f.field().zero());
    }
    return Poly(f.field(), std::move(r));
}

Poly make_monic(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot normalize 0 to monic");
    return f * f.leading().inv();
}

Poly poly_pow_mod(const Poly& base, unsigned long long e, const Poly& mod) {
    Poly acc = Poly::one(base.field());
    Poly b = base % mod;
    while (e) {
        if (e & 1) acc = acc * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return acc;
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        unsigned x = a.coeff(i).bits(), y = b.coeff(i).bits();
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

std::optional<Poly> poly_square_root(const Poly& f) {
    if (f.is_zero()) return Poly(f.field());
    if (f.degree() % 2 != 0) return std::nullopt;
    std::vector<FieldElem> r(static_cast<size_t>(f.degree() / 2 + 1), f.field().zero());
    for (int i = 0; i <= f.degree(); ++i) {
        if (i % 2 == 1) {
            if (!f.coeff(i).is_zero()) return std::nullopt;
        } else {
            r[static_cast<size_t>(i / 2)] = f.coeff(i).sqrt();
        }
    }
    return Poly(f.field(), std::move(r));
}

namespace {

// x^(q^e) mod f by repeated squaring (q = 2^k).
Poly frobenius_pow(const Poly& x, int e, const Poly& f) {
    Poly r = x % f;
    int k = f.field().k();
    for (int i = 0; i < e * k; ++i) r = r * r % f;
    return r;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Sum of h^(2^i) mod f for i < bits: the absolute trace map to F_2 applied
// componentwise, the characteristic-2 splitting polynomial.
Poly trace_map(const Poly& h, int bits, const Poly& f) {
    Poly acc(f.field());
    Poly x = h % f;
    for (int i = 0; i < bits; ++i) {
        acc = acc + x;
        x = x * x % f;
    }
    return acc;
}

Poly random_poly_below(std::mt19937_64& rng, Gf2k fld, int deg_bound) {
    std::vector<FieldElem> c;
    c.reserve(static_cast<size_t>(deg_bound));
    for (int i = 0; i < deg_bound; ++i)
        c.push_back(fld.from_bits(static_cast<unsigned>(rng() % fld.q())));
    return Poly(fld, std::move(c));
}

// Cantor-Zassenhaus, equal-degree stage: f is monic squarefree, all
// irreducible factors of degree d. The usual odd-characteristic exponent
// trick is unavailable; gcd with the additive trace map splits instead.
void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    int bits = f.field().k() * d;
    for (;;) {
        Poly h = random_poly_below(rng, f.field(), f.degree());
        Poly g = gcd(f, trace_map(h, bits, f));
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

// Distinct-degree stage on a monic squarefree input.
void distinct_degree_factor(const Poly& f0, std::mt19937_64& rng, std::vector<Poly>& out) {
    Poly f = f0;
    Poly x = Poly::t(f.field());
    Poly frob = x % f;
    int k = f.field().k();
    for (int d = 1; f.degree() > 0 && d <= f.degree(); ++d) {
        for (int i = 0; i < k; ++i) frob = frob * frob % f;
        Poly g = gcd(f, frob + x);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            f = f / g;
            frob = frob % f;
        }
        if (2 * (d + 1) > f.degree() && f.degree() > 0) {
            out.push_back(f);  // remainder is itself irreducible
            return;
        }
    }
}

// Squarefree decomposition in characteristic 2 over a perfect field:
// part[m] collects the product of factors of multiplicity exactly m.
void squarefree_parts(const Poly& f0, int mult, std::map<int, Poly>& parts) {
    Poly f = f0;
    if (f.degree() < 1) return;
    Poly fp = derivative(f);
    if (fp.is_zero()) {
        // f = g(t)^2 with g extracted via coefficient square roots
        std::optional<Poly> g = poly_square_root(f);
        if (!g) fail(Errc::Internal, "zero derivative without a square root");
        squarefree_parts(*g, 2 * mult, parts);
        return;
    }
    Poly c = gcd(f, fp);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) {
            auto it = parts.find(mult * i);
            if (it == parts.end())
                parts.emplace(mult * i, z);
            else
                it->second = it->second * z;
        }
        ++i;
        w = y;
        c = c / y;
    }
    // leftover c is a perfect square; the zero-derivative branch doubles it
    squarefree_parts(c, mult, parts);
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "irreducibility of 0");
    int n = f.degree();
    if (n < 1) fail(Errc::InvalidArgument, "irreducibility needs degree >= 1");
    Poly m = make_monic(f);
    Poly x = Poly::t(f.field());
    // Rabin: x^(q^n) = x mod f, and x^(q^(n/p)) - x coprime to f for p | n.
    if (frobenius_pow(x, n, m) != x % m) return false;
    for (int p : prime_divisors(n)) {
        Poly g = gcd(m, frobenius_pow(x, n / p, m) + x);
        if (!g.is_one()) return false;
    }
    return true;
}

std::vector<std::pair<Poly, int>> factorize(const Poly& f, uint64_t seed) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "factorization of 0");
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed);
    std::map<int, Poly> parts;
    squarefree_parts(make_monic(f), 1, parts);
    for (const auto& [mult, part] : parts) {
        std::vector<Poly> irr;
        distinct_degree_factor(part, rng, irr);
        for (Poly& p : irr) out.emplace_back(std::move(p), mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_cmp(a.first, b.first) < 0; });
    return out;
}

std::vector<Poly> monic_irreducibles(Gf2k field, int degree) {
    std::vector<Poly> out;
    unsigned q = field.q();
    // odometer over the non-leading coefficients
    std::vector<unsigned> digits(static_cast<size_t>(degree), 0);
    for (;;) {
        std::vector<FieldElem> c;
        c.reserve(static_cast<size_t>(degree + 1));
        for (unsigned d : digits) c.push_back(field.from_bits(d));
        c.push_back(field.one());
        Poly p(field, std::move(c));
        if (is_irreducible(p)) out.push_back(p);
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });
    return out;
}

}  // namespace qf2
