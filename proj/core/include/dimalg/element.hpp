// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "dimalg/dims.hpp"
#include "dimalg/model.hpp"
#include "dimalg/poly.hpp"

namespace dimalg {

/// A single-slice inhabitant of the power dimensioned ring: the section
/// coeff * u1^n1 (.) ... (.) um^nm of the tensor power tagged by `dim`.
/// Zero carries its dimension; there is no mixed-dimension element, so
/// partial-addition violations are unrepresentable.
class DimElement {
public:
    DimElement(ModelPtr model, DimVector dim, Poly coeff);

    static DimElement zero(ModelPtr model, DimVector dim);
    static DimElement one(ModelPtr model);
    /// The multiplicative splitting n -> u^n of the dimension projection.
    static DimElement unit_power(ModelPtr model, DimVector dim);
    static DimElement from_poly(ModelPtr model, Poly coeff);

    const ModelPtr& model() const { return model_; }
    const DimVector& dim() const { return dim_; }
    const Poly& coeff() const { return coeff_; }

    bool is_zero() const { return coeff_.is_zero(); }

    DimElement operator-() const;
    DimElement scaled(const Rational& c) const;

    /// Cross-slice comparison is false, never an error.
    bool operator==(const DimElement& rhs) const;
    bool operator!=(const DimElement& rhs) const { return !(*this == rhs); }

    /// Canonical text "coeff * u1^n1 * ... @ [n1,...,nm]".
    std::string render() const;

private:
    ModelPtr model_;
    DimVector dim_;
    Poly coeff_;
};

/// Slice-wise partial addition; throws DimensionMismatch across slices.
DimElement dim_add(const DimElement& a, const DimElement& b);
DimElement dim_sub(const DimElement& a, const DimElement& b);

/// Total multiplication: coefficients multiply, dimensions add.
DimElement odot(const DimElement& a, const DimElement& b);

/// Exact inverse of a unit element; dimension negated. Throws NotAUnit.
DimElement invert(const DimElement& a);

/// Integer ⊙-power; negative powers require a unit coefficient.
DimElement odot_pow(const DimElement& a, std::int64_t n);

} // namespace dimalg
