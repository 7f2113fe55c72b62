// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dimalg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Errors that indicate a mathematical obstruction (a structure fails an
/// axiom or a precondition of a construction). The CLI maps these to exit
/// code 1; plain Error subclasses are operational errors mapped to exit 2.
class MathFailure : public Error {
public:
    explicit MathFailure(const std::string& what) : Error(what) {}
};

class VarTableMismatch : public Error {
public:
    explicit VarTableMismatch(const std::string& what) : Error(what) {}
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& what) : Error(what) {}
};

class InvertibilityViolation : public Error {
public:
    explicit InvertibilityViolation(const std::string& what) : Error(what) {}
};

/// Illegal cross-slice addition: the defining feature of partial addition.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class ModelMismatch : public Error {
public:
    explicit ModelMismatch(const std::string& what) : Error(what) {}
};

class NotAUnit : public Error {
public:
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class NameClash : public Error {
public:
    explicit NameClash(const std::string& what) : Error(what) {}
};

class NotCoisotropic : public MathFailure {
public:
    explicit NotCoisotropic(const std::string& what) : MathFailure(what) {}
};

class IdealizerViolation : public MathFailure {
public:
    explicit IdealizerViolation(const std::string& what) : MathFailure(what) {}
};

class IllDefined : public MathFailure {
public:
    explicit IllDefined(const std::string& what) : MathFailure(what) {}
};

class NotACasimir : public MathFailure {
public:
    explicit NotACasimir(const std::string& what) : MathFailure(what) {}
};

class DimensionIncompatible : public MathFailure {
public:
    explicit DimensionIncompatible(const std::string& what) : MathFailure(what) {}
};

class NonzeroBracketDimension : public MathFailure {
public:
    explicit NonzeroBracketDimension(const std::string& what) : MathFailure(what) {}
};

/// A constructed structure failed its own defining equations; indicates the
/// generator system handed to a product/reduction solver was inconsistent.
class ConstructionInconsistent : public MathFailure {
public:
    explicit ConstructionInconsistent(const std::string& what) : MathFailure(what) {}
};

} // namespace dimalg
