// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/sampling.hpp"

namespace dimalg {

std::int64_t Sampler::range(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo)
        return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::coefficient() {
    std::int64_t num = range(-3, 3);
    if (num == 0)
        num = 1;
    std::int64_t den = range(1, 2);
    return Rational(num, den);
}

Poly Sampler::monomial(const VarTablePtr& table, int max_degree) {
    Exponents e(table->size(), 0);
    int budget = static_cast<int>(range(0, max_degree));
    for (std::size_t i = 0; i < table->size(); ++i) {
        if (table->is_invertible(i)) {
            e[i] = static_cast<std::int32_t>(range(-2, 2));
        } else {
            std::int32_t d = static_cast<std::int32_t>(range(0, budget));
            e[i] = d;
            budget -= d;
        }
    }
    return Poly::monomial(table, std::move(e), coefficient());
}

Poly Sampler::poly(const VarTablePtr& table, int max_degree, int max_terms) {
    Poly out = Poly::zero(table);
    std::int64_t n = range(1, max_terms);
    for (std::int64_t k = 0; k < n; ++k)
        out += monomial(table, max_degree);
    if (out.is_zero())
        out = Poly::constant(table, 1);
    return out;
}

DimVector Sampler::dims(std::size_t m, std::int64_t lo, std::int64_t hi) {
    DimVector d(m, 0);
    for (auto& x : d)
        x = range(lo, hi);
    return d;
}

DimElement Sampler::element(const ModelPtr& model, int max_degree, int max_terms,
                            std::int64_t dim_lo, std::int64_t dim_hi) {
    return DimElement(model, dims(model->line_count(), dim_lo, dim_hi),
                      poly(model->vars(), max_degree, max_terms));
}

DimElement Sampler::monomial_element(const ModelPtr& model, int max_degree,
                                     std::int64_t dim_lo, std::int64_t dim_hi) {
    return DimElement(model, dims(model->line_count(), dim_lo, dim_hi),
                      monomial(model->vars(), max_degree));
}

} // namespace dimalg
