// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "dimalg/element.hpp"

namespace dimalg {

/// Vanishing dimensioned ideal of a coordinate subspace: generated by a set
/// of ordinary chart variables. Membership is decidable by inspecting
/// monomials, and the canonical representative is the substitution to zero.
class CoordIdeal {
public:
    CoordIdeal(ModelPtr model, std::vector<std::string> vanishing_vars);

    const ModelPtr& model() const { return model_; }
    const std::vector<std::size_t>& vanishing_indices() const { return indices_; }
    std::vector<std::string> vanishing_names() const;
    bool vanishes(std::size_t var_index) const;

    bool operator==(const CoordIdeal& rhs) const;

private:
    ModelPtr model_;
    std::vector<std::size_t> indices_; // sorted
};

/// True iff every monomial of the coefficient contains a vanishing variable.
bool ideal_membership(const Poly& p, const CoordIdeal& ideal);
bool ideal_membership(const DimElement& a, const CoordIdeal& ideal);

/// Canonical representative modulo the ideal: vanishing variables set to 0.
/// The projection is a morphism of dimensioned rings.
Poly quotient_project(const Poly& p, const CoordIdeal& ideal);
DimElement quotient_project(const DimElement& a, const CoordIdeal& ideal);

} // namespace dimalg
