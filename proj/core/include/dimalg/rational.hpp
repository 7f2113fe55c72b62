// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dimalg {

/// Exact arbitrary-precision rational scalar. No floating point is used
/// anywhere in the kernel.
using Rational = boost::multiprecision::cpp_rational;

/// Renders as "p" for integers and "p/q" otherwise (canonical lowest terms).
std::string to_string(const Rational& r);

} // namespace dimalg
