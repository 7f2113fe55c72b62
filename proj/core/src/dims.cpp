// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/dims.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dimalg/errors.hpp"

namespace dimalg {

DimVector dim_zero(std::size_t m) {
    return DimVector(m, 0);
}

DimVector dim_basis(std::size_t m, std::size_t i) {
    DimVector d(m, 0);
    d.at(i) = 1;
    return d;
}

DimVector dim_sum(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size())
        throw ShapeMismatch("dimension vectors of different length");
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

DimVector dim_neg(const DimVector& a) {
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = -a[i];
    return out;
}

DimVector dim_scaled(const DimVector& a, std::int64_t k) {
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = k * a[i];
    return out;
}

bool dim_is_zero(const DimVector& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::string render_dim(const DimVector& d) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            os << ",";
        os << d[i];
    }
    os << "]";
    return os.str();
}

DimMap DimMap::identity(std::size_t m) {
    DimMap f{m, m, std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(m, 0))};
    for (std::size_t i = 0; i < m; ++i)
        f.matrix[i][i] = 1;
    return f;
}

DimMap DimMap::zero(std::size_t target_n, std::size_t source_m) {
    return DimMap{source_m, target_n,
                  std::vector<std::vector<std::int64_t>>(target_n,
                                                         std::vector<std::int64_t>(source_m, 0))};
}

DimVector DimMap::apply(const DimVector& v) const {
    if (v.size() != source_m)
        throw ShapeMismatch("DimMap applied to a vector of the wrong length");
    DimVector out(target_n, 0);
    for (std::size_t r = 0; r < target_n; ++r)
        out[r] = std::inner_product(v.begin(), v.end(), matrix[r].begin(), std::int64_t{0});
    return out;
}

DimMap compose(const DimMap& f, const DimMap& g) {
    if (f.source_m != g.target_n)
        throw ShapeMismatch("DimMap composition shape mismatch");
    DimMap out = DimMap::zero(f.target_n, g.source_m);
    for (std::size_t r = 0; r < f.target_n; ++r)
        for (std::size_t c = 0; c < g.source_m; ++c) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < f.source_m; ++k)
                acc += f.matrix[r][k] * g.matrix[k][c];
            out.matrix[r][c] = acc;
        }
    return out;
}

TensorDimSet tensor_dim_set(std::size_t m, std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& identified) {
    // Union-find over the m left coordinates followed by the n right ones.
    std::vector<std::size_t> parent(m + n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [l, r] : identified) {
        if (l >= m || r >= n)
            throw ShapeMismatch("identified coordinate out of range");
        parent[find(l)] = find(m + r);
    }
    std::vector<std::int64_t> cls(m + n, -1);
    std::size_t k = 0;
    for (std::size_t x = 0; x < m + n; ++x) {
        std::size_t root = find(x);
        if (cls[root] < 0)
            cls[root] = static_cast<std::int64_t>(k++);
        cls[x] = cls[root];
    }
    TensorDimSet out;
    out.quotient_k = k;
    out.left = DimMap::zero(k, m);
    out.right = DimMap::zero(k, n);
    for (std::size_t i = 0; i < m; ++i)
        out.left.matrix[static_cast<std::size_t>(cls[i])][i] = 1;
    for (std::size_t j = 0; j < n; ++j)
        out.right.matrix[static_cast<std::size_t>(cls[m + j])][j] = 1;
    return out;
}

} // namespace dimalg
