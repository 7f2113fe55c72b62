// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dimalg/errors.hpp"

namespace dimalg {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_same_table(const Poly& a, const Poly& b, const char* op) {
    if (!same_table(a.table(), b.table()))
        throw VarTableMismatch(std::string("var-table mismatch in ") + op);
}

Poly Poly::zero(VarTablePtr table) {
    return Poly(std::move(table), {});
}

Poly Poly::constant(VarTablePtr table, Rational value) {
    Poly p = zero(std::move(table));
    if (value != 0)
        p.terms_.emplace(Exponents(p.table_->size(), 0), std::move(value));
    return p;
}

Poly Poly::variable(VarTablePtr table, const std::string& name) {
    std::size_t i = table->require(name);
    return variable(std::move(table), i);
}

Poly Poly::variable(VarTablePtr table, std::size_t index) {
    if (index >= table->size())
        throw UnknownVariable("variable index out of range");
    Exponents e(table->size(), 0);
    e[index] = 1;
    return monomial(std::move(table), std::move(e), 1);
}

Poly Poly::monomial(VarTablePtr table, Exponents exps, Rational coeff) {
    Poly p = zero(std::move(table));
    if (exps.size() != p.table_->size())
        throw VarTableMismatch("exponent vector length does not match table");
    p.check_exponents(exps);
    if (coeff != 0)
        p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

void Poly::check_exponents(const Exponents& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !table_->is_invertible(i))
            throw InvertibilityViolation("negative exponent on ordinary variable '" +
                                         table_->name(i) + "'");
}

bool Poly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

std::optional<Rational> Poly::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        return std::nullopt;
    return terms_.begin()->second;
}

std::int64_t Poly::degree() const {
    if (terms_.empty())
        return 0;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

void Poly::insert_term(const Exponents& e, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_table(*this, rhs, "add");
    Poly out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.insert_term(e, c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_table(*this, rhs, "add");
    for (const auto& [e, c] : rhs.terms_)
        insert_term(e, c);
    return *this;
}

Poly Poly::operator-(const Poly& rhs) const {
    return *this + (-rhs);
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_table(*this, rhs, "mul");
    Poly out = zero(table_);
    Exponents e(table_->size(), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    Poly out = zero(table_);
    if (c == 0)
        return out;
    for (const auto& [e, v] : terms_)
        out.terms_.emplace(e, v * c);
    return out;
}

Poly Poly::pow(std::int64_t n) const {
    if (n < 0)
        throw Error("Poly::pow requires a non-negative exponent; use unit_pow");
    Poly acc = constant(table_, 1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Poly Poly::unit_pow(std::int64_t n) const {
    if (n >= 0)
        return pow(n);
    Poly inv = zero(table_);
    if (!is_unit(&inv))
        throw NotAUnit("negative power of a non-unit polynomial: " + render());
    return inv.pow(-n);
}

Poly Poly::diff(std::size_t var_index) const {
    if (var_index >= table_->size())
        throw UnknownVariable("variable index out of range in diff");
    Poly out = zero(table_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0)
            continue;
        Exponents de = e;
        de[var_index] -= 1;
        out.insert_term(de, c * e[var_index]);
    }
    return out;
}

Poly Poly::diff(const std::string& var_name) const {
    return diff(table_->require(var_name));
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& images) const {
    std::vector<Poly> full;
    full.reserve(table_->size());
    for (std::size_t i = 0; i < table_->size(); ++i) {
        auto it = images.find(i);
        if (it == images.end()) {
            full.push_back(variable(table_, i));
        } else {
            require_same_table(*this, it->second, "substitute");
            full.push_back(it->second);
        }
    }
    return substitute_into(full, table_);
}

Poly Poly::substitute_into(const std::vector<Poly>& images, VarTablePtr out_table) const {
    if (images.size() != table_->size())
        throw VarTableMismatch("substitute requires one image per variable");
    std::vector<Poly> inverse_cache(table_->size(), Poly::zero(out_table));
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!same_table(images[i].table(), out_table))
            throw VarTableMismatch("substitution image lives on the wrong table");
        if (table_->is_invertible(i)) {
            Poly inv = Poly::zero(out_table);
            if (!images[i].is_unit(&inv))
                throw InvertibilityViolation("image of invertible variable '" + table_->name(i) +
                                             "' is not a unit: " + images[i].render());
            inverse_cache[i] = std::move(inv);
        }
    }
    Poly out = zero(out_table);
    for (const auto& [e, c] : terms_) {
        Poly term = constant(out_table, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            term = term * (e[i] > 0 ? images[i].pow(e[i]) : inverse_cache[i].pow(-e[i]));
        }
        out += term;
    }
    return out;
}

bool Poly::is_unit(Poly* inverse) const {
    if (terms_.size() != 1)
        return false;
    const auto& [e, c] = *terms_.begin();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !table_->is_invertible(i))
            return false;
    if (inverse) {
        Exponents ie(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            ie[i] = -e[i];
        *inverse = monomial(table_, std::move(ie), Rational(1) / c);
    }
    return true;
}

bool Poly::operator==(const Poly& rhs) const {
    return same_table(table_, rhs.table_) && terms_ == rhs.terms_;
}

namespace {

// One monomial without sign: "x^2*y" or "1", with |coeff| prefixed unless 1.
std::string render_term(const VarTable& vars, const Exponents& e, const Rational& abs_coeff) {
    std::ostringstream os;
    bool any_var = false;
    for (std::int32_t x : e)
        if (x != 0)
            any_var = true;
    bool wrote = false;
    if (abs_coeff != 1 || !any_var) {
        os << to_string(abs_coeff);
        wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (wrote)
            os << "*";
        os << vars.name(i);
        if (e[i] != 1)
            os << "^" << e[i];
        wrote = true;
    }
    return os.str();
}

} // namespace

std::string Poly::render() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Canonical order is grlex descending.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        bool negative = c < 0;
        if (first) {
            if (negative)
                os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << render_term(*table_, it->first, negative ? Rational(-c) : c);
    }
    return os.str();
}

} // namespace dimalg
