// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimalg/rational.hpp"
#include "dimalg/vartable.hpp"

namespace dimalg {

/// Dense exponent vector, one entry per variable of the owning table.
/// Negative exponents are legal only in invertible positions.
using Exponents = std::vector<std::int32_t>;

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent vector in table order. Deterministic equality and output depend
/// on every Poly keeping its term map keyed by this order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact multivariate polynomial over Q, Laurent in the invertible variables
/// of its table. Canonical form: no zero coefficients are ever stored, so
/// equal polynomials have identical term maps.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    static Poly zero(VarTablePtr table);
    static Poly constant(VarTablePtr table, Rational value);
    static Poly variable(VarTablePtr table, const std::string& name);
    static Poly variable(VarTablePtr table, std::size_t index);
    static Poly monomial(VarTablePtr table, Exponents exps, Rational coeff);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value if the polynomial is constant (zero included).
    std::optional<Rational> constant_value() const;
    /// Total degree of the leading term; 0 for the zero polynomial.
    std::int64_t degree() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly& operator+=(const Poly& rhs);

    Poly scaled(const Rational& c) const;
    /// Non-negative integer power.
    Poly pow(std::int64_t n) const;
    /// Integer power of a ring unit; negative exponents go through the
    /// exact inverse. Throws NotAUnit when required.
    Poly unit_pow(std::int64_t n) const;

    /// Formal partial derivative; the Laurent rule d(t^n) = n t^(n-1) applies.
    Poly diff(std::size_t var_index) const;
    Poly diff(const std::string& var_name) const;

    /// Same-table substitution, identity outside the map. Every image of an
    /// invertible variable must itself be a unit.
    Poly substitute(const std::map<std::size_t, Poly>& images) const;

    /// Full substitution into another chart: images[i] replaces variable i
    /// and lives on `out_table`. Realizes pull-backs of base maps.
    Poly substitute_into(const std::vector<Poly>& images, VarTablePtr out_table) const;

    /// True iff the polynomial is a nonzero rational times a monomial in
    /// invertible variables; fills `inverse` with the exact inverse then.
    bool is_unit(Poly* inverse = nullptr) const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Canonical text: grlex-descending terms, '^' powers, explicit '*'.
    std::string render() const;

private:
    Poly(VarTablePtr table, TermMap terms) : table_(std::move(table)), terms_(std::move(terms)) {}

    void insert_term(const Exponents& e, const Rational& c);
    void check_exponents(const Exponents& e) const;

    VarTablePtr table_;
    TermMap terms_;
};

/// Throws VarTableMismatch unless both polynomials live on matching tables.
void require_same_table(const Poly& a, const Poly& b, const char* op);

} // namespace dimalg
