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

#ifndef QF2_GF2K_HPP
#define QF2_GF2K_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "error.hpp"

namespace qf2 {

class FieldElem;

/// The constant field F_q, q = 2^k, 1 <= k <= 8, modeled as F_2[y]/(m) for a
/// fixed built-in irreducible m of degree k (the lexicographically smallest
/// one, so serialized elements are stable across runs).
class Gf2k {
   public:
    explicit Gf2k(int k);

    int k() const { return k_; }
    unsigned q() const { return 1u << k_; }
    unsigned modulus_bits() const;  // bit i = coefficient of y^i

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem gen() const;  // smallest multiplicative generator
    FieldElem from_bits(unsigned bits) const;
    FieldElem from_int(unsigned long long n) const;  // image of an integer (n mod 2)
    std::vector<FieldElem> elements() const;         // all q elements, ascending bit value

    bool operator==(const Gf2k& o) const { return k_ == o.k_; }
    bool operator!=(const Gf2k& o) const { return k_ != o.k_; }

   private:
    int k_;
};

/// One element of F_{2^k}; addition is XOR of the coordinate bits.
class FieldElem {
   public:
    FieldElem() : val_(0), k_(1) {}
    FieldElem(uint8_t bits, int k) : val_(bits), k_(static_cast<uint8_t>(k)) {}

    uint8_t bits() const { return val_; }
    int k() const { return k_; }
    Gf2k field() const { return Gf2k(k_); }
    bool is_zero() const { return val_ == 0; }
    bool is_one() const { return val_ == 1; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
    FieldElem inv() const;
    FieldElem pow(unsigned long long e) const;
    FieldElem square() const { return *this * *this; }
    FieldElem sqrt() const;  // Frobenius inverse, unique in characteristic 2

    /// Absolute trace down to F_2: x + x^2 + ... + x^(q/2).
    int trace_bit() const;

    /// Multiplicative order (0 has none; returns 0 for the zero element).
    unsigned order() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

   private:
    uint8_t val_;
    uint8_t k_;
};

/// Canonical solution y of y^2 + y = c in F_q, the lexicographically smaller
/// of the two roots; empty when the trace obstruction is nonzero.
std::optional<FieldElem> solve_artin_schreier(const FieldElem& c);

}  // namespace qf2

#endif
