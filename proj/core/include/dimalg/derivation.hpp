// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "dimalg/element.hpp"

namespace dimalg {

/// Finitely presented dimensioned derivation of a power ring, with definite
/// dimension shift d. Generator data: a symbol vector field X (action on
/// chart variables), one weight polynomial per line (action on units via
/// Delta(u_j) = g_j * u_j before scaling), and a scale element of dimension d
/// whose coefficient is a unit or zero. The action on arbitrary elements is
/// the Leibniz extension
///
///   Delta(p * u^n) = scale ⊙ (X[p] + p * sum_j n_j g_j) * u^n,
///
/// which also fixes the action on negative powers (the unique extension with
/// Delta(u ⊙ u^{-1}) = 0).
///
/// Internally the representation is normalized: the scale coefficient is
/// folded into the symbol and weights, so equality of derivations is
/// structural equality of (model, shift, symbol, weights).
class DimDerivation {
public:
    DimDerivation(ModelPtr model, DimVector shift,
                  std::vector<Poly> symbol, std::vector<Poly> line_weights,
                  const DimElement& scale);
    /// Shift-0 derivation with unit scale.
    DimDerivation(ModelPtr model, std::vector<Poly> symbol, std::vector<Poly> line_weights);

    static DimDerivation zero(ModelPtr model, DimVector shift);

    const ModelPtr& model() const { return model_; }
    const DimVector& shift() const { return shift_; }
    const std::vector<Poly>& symbol() const { return symbol_; }
    const std::vector<Poly>& line_weights() const { return weights_; }
    DimElement scale() const;

    bool is_zero() const;
    bool operator==(const DimDerivation& rhs) const;

    std::string render() const;

private:
    ModelPtr model_;
    DimVector shift_;
    std::vector<Poly> symbol_;  // per chart variable
    std::vector<Poly> weights_; // per line
};

/// Output dimension = dim(a) + shift; additive in a; Leibniz over ⊙.
DimElement apply(const DimDerivation& d, const DimElement& a);

/// [D,D'] := D∘D' − D'∘D; a derivation of shift d+d'.
DimDerivation commutator(const DimDerivation& d1, const DimDerivation& d2);

/// The unique shift-0 derivation restricting to (X, D) on the slices of
/// dimension 0 and e_j; reproduces (Δσ)(s) = X[σ(s)] − σ(Ds) on duals.
DimDerivation from_line_derivation(ModelPtr model, std::vector<Poly> symbol,
                                   std::vector<Poly> line_weights);

} // namespace dimalg
