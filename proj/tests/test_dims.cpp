// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dimalg/dims.hpp"
#include "dimalg/errors.hpp"
#include "dimalg/sampling.hpp"

using namespace dimalg;

TEST_CASE("dim map composition") {
    DimMap f{2, 1, {{1, 1}}}; // projection-sum Z^2 -> Z
    CHECK(compose(DimMap::identity(1), f) == f);
    CHECK(compose(f, DimMap::identity(2)) == f);
    DimMap diag = DimMap::identity(2);
    CHECK(compose(f, diag) == f);
    DimMap z = DimMap::zero(3, 1);
    CHECK(compose(z, DimMap{2, 1, {{5, -7}}}) == DimMap::zero(3, 2));
    CHECK_THROWS_AS(compose(f, f), ShapeMismatch);
}

TEST_CASE("dim maps are additive homomorphisms") {
    Sampler s(3);
    DimMap f{3, 2, {{1, 0, -2}, {0, 4, 1}}};
    for (int k = 0; k < 100; ++k) {
        DimVector a = s.dims(3, -5, 5);
        DimVector b = s.dims(3, -5, 5);
        CHECK(f.apply(dim_sum(a, b)) == dim_sum(f.apply(a), f.apply(b)));
    }
    CHECK(f.apply(dim_zero(3)) == dim_zero(2));
}

TEST_CASE("tensor dimension set") {
    SUBCASE("no identification gives the full product") {
        TensorDimSet ts = tensor_dim_set(1, 1, {});
        CHECK(ts.quotient_k == 2);
        CHECK(ts.left.apply({3}) == DimVector{3, 0});
        CHECK(ts.right.apply({5}) == DimVector{0, 5});
    }
    SUBCASE("identified coordinates collapse by addition") {
        TensorDimSet ts = tensor_dim_set(1, 1, {{0, 0}});
        CHECK(ts.quotient_k == 1);
        CHECK(dim_sum(ts.left.apply({2}), ts.right.apply({3})) == DimVector{5});
    }
    SUBCASE("empty left factor") {
        TensorDimSet ts = tensor_dim_set(0, 2, {});
        CHECK(ts.quotient_k == 2);
        CHECK(ts.right.apply({1, -1}) == DimVector{1, -1});
    }
    SUBCASE("joint surjectivity") {
        TensorDimSet ts = tensor_dim_set(3, 2, {{0, 1}, {2, 0}});
        CHECK(ts.quotient_k == 3);
        std::vector<bool> hit(ts.quotient_k, false);
        for (std::size_t i = 0; i < 3; ++i) {
            DimVector im = ts.left.apply(dim_basis(3, i));
            for (std::size_t k = 0; k < im.size(); ++k)
                if (im[k] != 0)
                    hit[k] = true;
        }
        for (std::size_t j = 0; j < 2; ++j) {
            DimVector im = ts.right.apply(dim_basis(2, j));
            for (std::size_t k = 0; k < im.size(); ++k)
                if (im[k] != 0)
                    hit[k] = true;
        }
        for (bool h : hit)
            CHECK(h);
    }
}

TEST_CASE("dim rendering") {
    CHECK(render_dim(DimVector{-1, 0}) == "[-1,0]");
    CHECK(render_dim(DimVector{}) == "[]");
}
