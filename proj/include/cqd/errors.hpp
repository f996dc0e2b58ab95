// Copyright 2026 The cqdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQD_ERRORS_HPP
#define CQD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cqd {

/// Base class of every error raised by the library. The `kind()` string is the
/// stable machine-readable name used by the CLI.
class Error : public std::invalid_argument {
   public:
    Error(std::string kind, const std::string &what)
        : std::invalid_argument(kind + ": " + what), kind_(std::move(kind)) {
    }
    const std::string &kind() const {
        return kind_;
    }

   private:
    std::string kind_;
};

#define CQD_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                     \
       public:                                                      \
        explicit Name(const std::string &what) : Error(#Name, what) { \
        }                                                           \
    }

CQD_DEFINE_ERROR(BoundaryMismatch);
CQD_DEFINE_ERROR(InvalidDiagram);
CQD_DEFINE_ERROR(NotPlain);
CQD_DEFINE_ERROR(WrongKind);
CQD_DEFINE_ERROR(InvalidMatch);
CQD_DEFINE_ERROR(TensorTooLarge);
CQD_DEFINE_ERROR(WrongSignature);
CQD_DEFINE_ERROR(NotCausal);
CQD_DEFINE_ERROR(NoFullSupport);
CQD_DEFINE_ERROR(NotNormalized);
CQD_DEFINE_ERROR(ShapeMismatch);
CQD_DEFINE_ERROR(AxiomFailure);
CQD_DEFINE_ERROR(DimMismatch);
CQD_DEFINE_ERROR(Unsupported);
CQD_DEFINE_ERROR(UnknownName);
CQD_DEFINE_ERROR(SyntaxError);

#undef CQD_DEFINE_ERROR

}  // namespace cqd

#endif
