// Copyright 2026 the cqa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQA_ERROR_HPP
#define CQA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cqa {

/// Base class of every error raised by the library. The message always
/// starts with a stable tag ("CyclicAttackGraph: ...") so callers can match
/// on it without depending on C++ type identity.
class Error : public std::runtime_error {
public:
    Error(const std::string& tag, const std::string& detail)
        : std::runtime_error(tag + ": " + detail), tag_(tag) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& d) : Error("ParseError", d) {}
};

struct SelfJoinError : Error {
    explicit SelfJoinError(const std::string& d) : Error("SelfJoin", d) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& d) : Error("SchemaError", d) {}
};

struct SemiringDomainError : Error {
    explicit SemiringDomainError(const std::string& d) : Error("SemiringDomain", d) {}
};

struct UnknownSemiringError : Error {
    explicit UnknownSemiringError(const std::string& d) : Error("UnknownSemiring", d) {}
};

struct EmptyActiveDomainError : Error {
    explicit EmptyActiveDomainError(const std::string& d) : Error("EmptyActiveDomain", d) {}
};

struct UnboundVariableError : Error {
    explicit UnboundVariableError(const std::string& d) : Error("UnboundVariable", d) {}
};

struct RepairExplosionError : Error {
    explicit RepairExplosionError(const std::string& d) : Error("RepairExplosion", d) {}
};

struct CyclicAttackGraphError : Error {
    explicit CyclicAttackGraphError(const std::string& d) : Error("CyclicAttackGraph", d) {}
};

struct VectorGuardError : Error {
    explicit VectorGuardError(const std::string& d) : Error("VectorGuardNotDesugarable", d) {}
};

struct DomainOverflowError : Error {
    explicit DomainOverflowError(const std::string& d) : Error("DomainOverflow", d) {}
};

struct CompileError : Error {
    explicit CompileError(const std::string& d) : Error("CompileError", d) {}
};

struct IoError : Error {
    explicit IoError(const std::string& d) : Error("IoError", d) {}
};

} // namespace cqa

#endif
