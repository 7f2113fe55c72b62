// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "dimalg/element.hpp"

namespace dimalg {

/// Default seed for every randomized verification sweep.
inline constexpr std::uint64_t kDefaultSeed = 1234567;

/// Deterministic sample source for property sweeps. Draws are reduced from
/// the raw mt19937_64 stream directly so output is identical across standard
/// library implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }
    /// Uniform-ish integer in [lo, hi] (inclusive).
    std::int64_t range(std::int64_t lo, std::int64_t hi);
    /// Small nonzero rational.
    Rational coefficient();

    /// Random polynomial: up to `max_terms` monomials of total degree at most
    /// `max_degree` (invertible variables draw exponents in [-2, 2]).
    Poly poly(const VarTablePtr& table, int max_degree, int max_terms);
    /// Single-monomial polynomial (possibly constant, never zero).
    Poly monomial(const VarTablePtr& table, int max_degree);

    DimVector dims(std::size_t m, std::int64_t lo, std::int64_t hi);

    DimElement element(const ModelPtr& model, int max_degree, int max_terms,
                       std::int64_t dim_lo = -2, std::int64_t dim_hi = 2);
    DimElement monomial_element(const ModelPtr& model, int max_degree,
                                std::int64_t dim_lo = -2, std::int64_t dim_hi = 2);

private:
    std::mt19937_64 rng_;
};

} // namespace dimalg
