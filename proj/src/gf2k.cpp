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

#include "gf2k.hpp"

#include <array>

namespace qf2 {

namespace {

// Lexicographically smallest irreducible of degree k over F_2, bit i = coeff of y^i.
constexpr std::array<unsigned, 9> kModulus = {
    0,
    0b10,         // y
    0b111,        // y^2+y+1
    0b1011,       // y^3+y+1
    0b10011,      // y^4+y+1
    0b100101,     // y^5+y^2+1
    0b1000011,    // y^6+y+1
    0b10000011,   // y^7+y+1
    0b100011011,  // y^8+y^4+y^3+y+1
};

int bitdeg(unsigned v) {
    int d = -1;
    while (v) {
        ++d;
        v >>= 1;
    }
    return d;
}

// Plain F_2[y] remainder, used only for the construction-time modulus check.
unsigned f2_mod(unsigned a, unsigned m) {
    int dm = bitdeg(m);
    for (int d = bitdeg(a); d >= dm; d = bitdeg(a)) a ^= m << (d - dm);
    return a;
}

bool f2_irreducible(unsigned m) {
    int d = bitdeg(m);
    if (d < 1) return false;
    if (d == 1) return true;
    for (unsigned f = 2; bitdeg(f) <= d / 2; ++f)
        if (f2_mod(m, f) == 0) return false;
    return true;
}

uint8_t raw_mul(uint8_t a, uint8_t b, int k) {
    unsigned acc = 0, aa = a;
    for (unsigned bb = b; bb; bb >>= 1) {
        if (bb & 1) acc ^= aa;
        aa <<= 1;
    }
    unsigned m = kModulus[static_cast<size_t>(k)];
    for (int d = 15; d >= k; --d)
        if (acc >> d & 1) acc ^= m << (d - k);
    return static_cast<uint8_t>(acc);
}

unsigned raw_order(uint8_t a, int k) {
    if (a == 0) return 0;
    unsigned n = 1;
    uint8_t x = a;
    while (x != 1) {
        x = raw_mul(x, a, k);
        ++n;
    }
    return n;
}

uint8_t generator_bits(int k) {
    static std::array<uint8_t, 9> cache = [] {
        std::array<uint8_t, 9> g{};
        g[1] = 1;  // F_2^* = {1}
        for (int kk = 2; kk <= 8; ++kk) {
            unsigned q = 1u << kk;
            for (unsigned a = 2; a < q; ++a)
                if (raw_order(static_cast<uint8_t>(a), kk) == q - 1) {
                    g[static_cast<size_t>(kk)] = static_cast<uint8_t>(a);
                    break;
                }
        }
        return g;
    }();
    return cache[static_cast<size_t>(k)];
}

}  // namespace

Gf2k::Gf2k(int k) : k_(k) {
    if (k < 1 || k > 8) fail(Errc::UnsupportedField, "field degree k must be in 1..8");
    if (!f2_irreducible(kModulus[static_cast<size_t>(k)]))
        fail(Errc::Internal, "built-in modulus is not irreducible");
}

unsigned Gf2k::modulus_bits() const { return kModulus[static_cast<size_t>(k_)]; }

FieldElem Gf2k::zero() const { return FieldElem(0, k_); }
FieldElem Gf2k::one() const { return FieldElem(1, k_); }
FieldElem Gf2k::gen() const { return FieldElem(generator_bits(k_), k_); }

FieldElem Gf2k::from_bits(unsigned bits) const {
    if (bits >= q()) fail(Errc::InvalidArgument, "element bits out of range for the field");
    return FieldElem(static_cast<uint8_t>(bits), k_);
}

FieldElem Gf2k::from_int(unsigned long long n) const { return FieldElem(n & 1 ? 1 : 0, k_); }

std::vector<FieldElem> Gf2k::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q());
    for (unsigned b = 0; b < q(); ++b) out.push_back(FieldElem(static_cast<uint8_t>(b), k_));
    return out;
}

static void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.k() != b.k()) fail(Errc::ModulusMismatch, "field elements over different F_{2^k}");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(*this, o);
    return FieldElem(val_ ^ o.val_, k_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(*this, o);
    return FieldElem(raw_mul(val_, o.val_, k_), k_);
}

FieldElem FieldElem::inv() const {
    if (val_ == 0) fail(Errc::DivisionByZero, "inverse of 0 in F_q");
    unsigned q = 1u << k_;
    return pow(q - 2);
}

FieldElem FieldElem::pow(unsigned long long e) const {
    FieldElem base = *this, acc(1, k_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElem FieldElem::sqrt() const {
    // x -> x^(q/2) inverts Frobenius; q = 2 makes this the identity.
    return pow(1ull << (k_ - 1));
}

int FieldElem::trace_bit() const {
    FieldElem acc(0, k_), x = *this;
    for (int i = 0; i < k_; ++i) {
        acc = acc + x;
        x = x.square();
    }
    if (!acc.is_zero() && !acc.is_one()) fail(Errc::Internal, "trace landed outside F_2");
    return acc.is_one() ? 1 : 0;
}

unsigned FieldElem::order() const { return raw_order(val_, k_); }

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(*this, o);
    return val_ == o.val_;
}

std::optional<FieldElem> solve_artin_schreier(const FieldElem& c) {
    if (c.trace_bit() != 0) return std::nullopt;
    Gf2k f = c.field();
    for (unsigned b = 0; b < f.q(); ++b) {
        FieldElem y = f.from_bits(b);
        if (y.square() + y == c) return y;  // ascending scan returns min(y, y+1)
    }
    fail(Errc::Internal, "trace-zero element without Artin-Schreier preimage");
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::ZeroScalar: return "ZeroScalar";
        case Errc::ZeroMultiplicativeSlot: return "ZeroMultiplicativeSlot";
        case Errc::DegenerateForm: return "DegenerateForm";
        case Errc::RankMismatch: return "RankMismatch";
        case Errc::TwoOddParts: return "TwoOddParts";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::ParseError: return "ParseError";
        case Errc::UnsupportedField: return "UnsupportedField";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace qf2
