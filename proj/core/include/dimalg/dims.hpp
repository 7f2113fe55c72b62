// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dimalg {

/// Element of the free abelian dimension group Z^m; component-wise addition
/// is the monoid operation.
using DimVector = std::vector<std::int64_t>;

DimVector dim_zero(std::size_t m);
DimVector dim_basis(std::size_t m, std::size_t i);
DimVector dim_sum(const DimVector& a, const DimVector& b);
DimVector dim_neg(const DimVector& a);
DimVector dim_scaled(const DimVector& a, std::int64_t k);
bool dim_is_zero(const DimVector& a);

/// Renders as a bracketed integer tuple, e.g. "[-1,0]".
std::string render_dim(const DimVector& d);

/// Additive homomorphism Z^source_m -> Z^target_n given by an integer matrix.
struct DimMap {
    std::size_t source_m = 0;
    std::size_t target_n = 0;
    /// target_n rows of source_m columns.
    std::vector<std::vector<std::int64_t>> matrix;

    static DimMap identity(std::size_t m);
    static DimMap zero(std::size_t target_n, std::size_t source_m);

    DimVector apply(const DimVector& v) const;
    bool operator==(const DimMap& other) const = default;
};

/// Matrix product f*g, i.e. apply g first. Throws ShapeMismatch.
DimMap compose(const DimMap& f, const DimMap& g);

/// The quotient dimension set D x^G E of a tensor product: coordinates of the
/// two factors listed in `identified` collapse to a common coordinate by
/// addition. With nothing identified (dimensionless scalars) the quotient is
/// the full product Z^(m+n).
struct TensorDimSet {
    std::size_t quotient_k = 0;
    DimMap left;  ///< Z^m -> Z^k
    DimMap right; ///< Z^n -> Z^k
};

TensorDimSet tensor_dim_set(std::size_t m, std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& identified);

} // namespace dimalg
