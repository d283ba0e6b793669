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

#ifndef QF2_ERROR_HPP
#define QF2_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qf2 {

enum class Errc {
    DivisionByZero,
    ModulusMismatch,
    ZeroPolynomial,
    ZeroElement,
    ZeroScalar,
    ZeroMultiplicativeSlot,
    DegenerateForm,
    RankMismatch,
    TwoOddParts,
    SingularMatrix,
    ParseError,
    UnsupportedField,
    InvalidArgument,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qf2

#endif
