// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "dimalg/element.hpp"

namespace dimalg {

/// A poly-line bundle morphism between trivialized models, given by
/// contravariant data: a base map (substitution sending each target chart
/// variable to a source-chart polynomial), an assignment of source lines to
/// target lines (injective where defined), and one invertible transition
/// coefficient per assigned source line.
///
/// The factor is consumed through `pullback`, a dimensioned ring morphism
/// Sec(target)^⊙ -> Sec(source)^⊙ whose dimension map is the transpose of
/// the projected-addition matrix of `line_assign`.
class Factor {
public:
    Factor(ModelPtr source, ModelPtr target,
           std::vector<Poly> base_map,
           std::vector<std::optional<std::size_t>> line_assign,
           std::vector<Poly> transitions);

    static Factor identity(ModelPtr model);

    const ModelPtr& source() const { return source_; }
    const ModelPtr& target() const { return target_; }
    const std::vector<Poly>& base_map() const { return base_map_; }
    const std::vector<std::optional<std::size_t>>& line_assign() const { return line_assign_; }
    const std::vector<Poly>& transitions() const { return transitions_; }

    /// Dimension map of the pullback, Z^(target lines) -> Z^(source lines).
    DimMap dim_map() const;

private:
    ModelPtr source_;
    ModelPtr target_;
    std::vector<Poly> base_map_;                        // per target variable
    std::vector<std::optional<std::size_t>> line_assign_; // per source line
    std::vector<Poly> transitions_;                     // per source line (unit)
};

/// B*(s)(x) := B_x^{-1}(s(b(x))): base-map substitution of the coefficient
/// times transition units raised to the sign-correct powers dictated by the
/// element's dimension. A target line not reached by `line_assign` can only
/// be pulled back in dimension zero.
DimElement pullback(const Factor& f, const DimElement& a);

} // namespace dimalg
