// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimalg/algebra_ops.hpp"
#include "dimalg/bracket.hpp"

namespace dimalg {

/// Positioned parse/validation diagnostic; line and column are 1-based.
struct ParseDiagnostic {
    int line = 0;
    int column = 0;
    std::string message;
    std::vector<std::string> expected; // candidate token kinds, may be empty

    std::string render() const;
};

enum class DeclKind { Model, Bracket, Element, Ideal, Reduction, Product };

/// One named block of a .dimalg document. Model/bracket/element/ideal blocks
/// carry their resolved semantic objects; reduction/product blocks carry the
/// names of their operands and are materialized on demand.
struct Declaration {
    DeclKind kind;
    std::string name;

    ModelPtr model;                       // Model (also set on Bracket: its model)
    std::optional<BracketSpec> bracket;   // Bracket
    std::optional<DimElement> element;    // Element
    std::optional<CoordIdeal> ideal;      // Ideal

    // Reduction: `reduction N of BRACKET by IDEAL survivors (x, y);`
    // Product:   `product N of A and B [casimirs CA CB];`
    std::string operand_a;
    std::string operand_b;
    std::string ideal_name;
    std::vector<std::string> survivors;
    std::string casimir_a;
    std::string casimir_b;

    bool operator==(const Declaration& rhs) const;
};

struct Document {
    std::vector<Declaration> declarations;

    const Declaration* find(const std::string& name) const;
    const Declaration& require(const std::string& name, DeclKind kind) const;

    /// Resolves a name to a bracket spec, materializing reduction and
    /// product declarations through algebra_ops when needed.
    BracketSpec materialize_bracket(const std::string& name) const;

    bool operator==(const Document& rhs) const;
};

struct ParseResult {
    std::optional<Document> document;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return document.has_value(); }
};

/// Parses `.dimalg` source (UTF-8, '#' line comments). Returns either a
/// fully resolved Document or at least one positioned diagnostic, never both.
ParseResult parse(std::string_view source);

/// Canonical text; parse(render(d)) == d on canonical documents.
std::string render(const Document& doc);

/// Renders a constructed bracket (with its model) as a parseable document.
Document document_for_bracket(const std::string& model_name,
                              const std::string& bracket_name,
                              const BracketSpec& spec);

} // namespace dimalg
