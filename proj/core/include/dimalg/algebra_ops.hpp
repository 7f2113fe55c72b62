// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "dimalg/bracket.hpp"
#include "dimalg/ideal.hpp"

namespace dimalg {

/// Data for coisotropic reduction N(I)/I: the coisotropic coordinate ideal
/// and the survivor variables of the reduced chart. Every remaining chart
/// variable is a collapsed fibre direction. The partition is supplied by the
/// caller and verified, not discovered.
struct ReductionData {
    CoordIdeal ideal;
    std::vector<std::string> survivors;

    ReductionData(CoordIdeal i, std::vector<std::string> s);
};

/// True iff {g,h} lies in I for all pairs of ideal generators; sufficient by
/// the Leibniz identity and absorbency of the ideal.
bool is_coisotrope(const BracketSpec& spec, const CoordIdeal& ideal);

/// Coisotropic reduction: the reduced bracket on the survivor chart, with
/// table entries quotient_project(evaluate(lift g, lift h)). Throws
/// NotCoisotropic, IdealizerViolation (with witness) or IllDefined.
BracketSpec reduce(const BracketSpec& spec, const ReductionData& reduction);

/// Chart model of a base product: both charts joined (names suffixed "_1"
/// and "_2"), plus, when requested, one invertible fibre coordinate t per
/// (left line, right line) pair.
class ProductModel {
public:
    ProductModel(ModelPtr left, ModelPtr right, bool with_t_vars);

    const ModelPtr& left() const { return left_; }
    const ModelPtr& right() const { return right_; }
    const ModelPtr& joined() const { return joined_; }
    bool has_t_vars() const { return with_t_; }

    /// Name of t_(l,r) in the joined chart.
    const std::string& t_name(std::size_t l, std::size_t r) const;

    /// Dimensioned ring inclusions of the two factors (dimension maps from
    /// tensor_dim_set with nothing identified).
    DimElement include_left(const DimElement& a) const;
    DimElement include_right(const DimElement& a) const;

    /// Renamed images of the factor polynomials in the joined chart.
    Poly include_left(const Poly& p) const;
    Poly include_right(const Poly& p) const;

    /// Left/right generators as generators of the joined model.
    GenId map_left(GenId g) const;
    GenId map_right(GenId g) const;

    /// The canonical invertible element T_(l,r) = t * u1_l^{-1} ⊙ u2_r of
    /// dimension (-e_l, e_r); the tautological identification of the pulled
    /// back lines over the base product.
    DimElement tautological(std::size_t l, std::size_t r) const;

private:
    ModelPtr left_;
    ModelPtr right_;
    ModelPtr joined_;
    bool with_t_;
    std::vector<std::vector<std::string>> t_names_; // [l][r]
};

/// Algebraic tensor product over the scalars of two dimensionless-bracket
/// specs (Prop. on heterogeneous products): joined chart without fibre
/// coordinates, cross brackets zero. Throws NonzeroBracketDimension.
BracketSpec tensor_heterogeneous(const BracketSpec& a, const BracketSpec& b);

/// Product of two single-line dimension-[-1] brackets on the base-product
/// chart: two lines, bracket dimension (-1,0), left generators bracket by A,
/// right generators transported through the t-twisted inclusion, cross
/// brackets zero; the induced {., t} entries are solved from these
/// conditions and checked for consistency.
BracketSpec product_jacobi(const BracketSpec& a, const BracketSpec& b);

/// Product of two dimension-0 brackets on the base-product chart, fibre
/// coordinates included; the dimensionless slice is an ordinary Poisson
/// bracket with both projections bracket-preserving.
BracketSpec product_poly_poisson(const BracketSpec& a, const BracketSpec& b);

/// Casimir-compensated product of two brackets of arbitrary homogeneous
/// dimensions: entries u_A ⊙ {.,.}_A and u_B ⊙ {.,.}_B on the base-product
/// chart, of total dimension 0. Each u must be a unit Casimir whose
/// dimension cancels the bracket dimension (its inverse is accepted too).
BracketSpec product_casimir(const BracketSpec& a, const DimElement& casimir_a,
                            const BracketSpec& b, const DimElement& casimir_b);

} // namespace dimalg
