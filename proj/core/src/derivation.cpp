// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/derivation.hpp"

#include <sstream>

#include "dimalg/errors.hpp"

namespace dimalg {

DimDerivation::DimDerivation(ModelPtr model, DimVector shift,
                             std::vector<Poly> symbol, std::vector<Poly> line_weights,
                             const DimElement& scale)
    : model_(std::move(model)), shift_(std::move(shift)), symbol_(std::move(symbol)),
      weights_(std::move(line_weights)) {
    if (shift_.size() != model_->line_count())
        throw ShapeMismatch("derivation shift arity does not match the model");
    if (symbol_.size() != model_->vars()->size())
        throw ShapeMismatch("derivation symbol needs one entry per chart variable");
    if (weights_.size() != model_->line_count())
        throw ShapeMismatch("derivation needs one weight per line");
    for (const auto& p : symbol_)
        if (!same_table(p.table(), model_->vars()))
            throw VarTableMismatch("derivation symbol lives on the wrong chart");
    for (const auto& p : weights_)
        if (!same_table(p.table(), model_->vars()))
            throw VarTableMismatch("derivation weight lives on the wrong chart");
    require_same_model(scale.model(), model_, "derivation scale");
    if (scale.dim() != shift_)
        throw ShapeMismatch("derivation scale must live in the shift slice");

    // Normalize: fold the scale coefficient (a unit or zero) into the
    // generator data, so equality is structural.
    if (scale.is_zero()) {
        for (auto& p : symbol_)
            p = Poly::zero(model_->vars());
        for (auto& p : weights_)
            p = Poly::zero(model_->vars());
        return;
    }
    Poly inv = Poly::zero(model_->vars());
    if (!scale.coeff().is_unit(&inv))
        throw NotAUnit("derivation scale coefficient must be a unit or zero: " + scale.render());
    if (scale.coeff().constant_value().value_or(Rational(0)) == 1)
        return;
    for (auto& p : symbol_)
        p = p * scale.coeff();
    for (auto& p : weights_)
        p = p * scale.coeff();
}

DimDerivation::DimDerivation(ModelPtr model, std::vector<Poly> symbol,
                             std::vector<Poly> line_weights)
    : DimDerivation(model, dim_zero(model->line_count()), std::move(symbol),
                    std::move(line_weights),
                    DimElement::unit_power(model, dim_zero(model->line_count()))) {}

DimDerivation DimDerivation::zero(ModelPtr model, DimVector shift) {
    std::vector<Poly> sym(model->vars()->size(), Poly::zero(model->vars()));
    std::vector<Poly> w(model->line_count(), Poly::zero(model->vars()));
    DimElement scale = DimElement::zero(model, shift);
    return DimDerivation(model, std::move(shift), std::move(sym), std::move(w), scale);
}

DimElement DimDerivation::scale() const {
    return DimElement::unit_power(model_, shift_);
}

bool DimDerivation::is_zero() const {
    for (const auto& p : symbol_)
        if (!p.is_zero())
            return false;
    for (const auto& p : weights_)
        if (!p.is_zero())
            return false;
    return true;
}

bool DimDerivation::operator==(const DimDerivation& rhs) const {
    return same_model(model_, rhs.model_) && shift_ == rhs.shift_ && symbol_ == rhs.symbol_ &&
           weights_ == rhs.weights_;
}

std::string DimDerivation::render() const {
    std::ostringstream os;
    os << "derivation shift " << render_dim(shift_) << " {";
    bool first = true;
    for (std::size_t i = 0; i < symbol_.size(); ++i) {
        if (symbol_[i].is_zero())
            continue;
        os << (first ? " " : "; ") << model_->vars()->name(i) << " -> " << symbol_[i].render();
        first = false;
    }
    for (std::size_t l = 0; l < weights_.size(); ++l) {
        if (weights_[l].is_zero())
            continue;
        os << (first ? " " : "; ") << model_->line_name(l) << " -> (" << weights_[l].render()
           << ")*" << model_->line_name(l);
        first = false;
    }
    os << " }";
    return os.str();
}

DimElement apply(const DimDerivation& d, const DimElement& a) {
    require_same_model(d.model(), a.model(), "apply");
    const auto& vars = d.model()->vars();
    Poly coeff = Poly::zero(vars);
    for (std::size_t i = 0; i < vars->size(); ++i) {
        if (d.symbol()[i].is_zero())
            continue;
        coeff += a.coeff().diff(i) * d.symbol()[i];
    }
    Poly weight_sum = Poly::zero(vars);
    for (std::size_t l = 0; l < d.model()->line_count(); ++l) {
        if (a.dim()[l] == 0 || d.line_weights()[l].is_zero())
            continue;
        weight_sum += d.line_weights()[l].scaled(a.dim()[l]);
    }
    coeff += a.coeff() * weight_sum;
    return DimElement(a.model(), dim_sum(a.dim(), d.shift()), std::move(coeff));
}

DimDerivation commutator(const DimDerivation& d1, const DimDerivation& d2) {
    require_same_model(d1.model(), d2.model(), "commutator");
    const ModelPtr& model = d1.model();
    const auto& vars = model->vars();
    DimVector shift = dim_sum(d1.shift(), d2.shift());
    auto vf_apply = [&](const std::vector<Poly>& field, const Poly& p) {
        Poly out = Poly::zero(vars);
        for (std::size_t i = 0; i < vars->size(); ++i) {
            if (field[i].is_zero())
                continue;
            out += p.diff(i) * field[i];
        }
        return out;
    };
    // Writing the derivations as u^d ⊙ D with D of shift zero, the shift-zero
    // parts act on the other's unit power: D1(u^d2) = phi1 * u^d2 with
    // phi1 = sum_l d2_l g_l, and likewise phi2. The commutator closes on
    // generator data as
    //   symbol  = [X,Y] + phi1*Y - phi2*X
    //   weights = X[h] - Y[g] + phi1*h - phi2*g.
    Poly phi1 = Poly::zero(vars);
    Poly phi2 = Poly::zero(vars);
    for (std::size_t l = 0; l < model->line_count(); ++l) {
        if (d2.shift()[l] != 0)
            phi1 += d1.line_weights()[l].scaled(d2.shift()[l]);
        if (d1.shift()[l] != 0)
            phi2 += d2.line_weights()[l].scaled(d1.shift()[l]);
    }
    std::vector<Poly> symbol;
    symbol.reserve(vars->size());
    for (std::size_t i = 0; i < vars->size(); ++i)
        symbol.push_back(vf_apply(d1.symbol(), d2.symbol()[i]) -
                         vf_apply(d2.symbol(), d1.symbol()[i]) + phi1 * d2.symbol()[i] -
                         phi2 * d1.symbol()[i]);
    std::vector<Poly> weights;
    weights.reserve(model->line_count());
    for (std::size_t l = 0; l < model->line_count(); ++l)
        weights.push_back(vf_apply(d1.symbol(), d2.line_weights()[l]) -
                          vf_apply(d2.symbol(), d1.line_weights()[l]) +
                          phi1 * d2.line_weights()[l] - phi2 * d1.line_weights()[l]);
    return DimDerivation(model, std::move(shift), std::move(symbol), std::move(weights),
                         DimElement::unit_power(model, dim_sum(d1.shift(), d2.shift())));
}

DimDerivation from_line_derivation(ModelPtr model, std::vector<Poly> symbol,
                                   std::vector<Poly> line_weights) {
    return DimDerivation(std::move(model), std::move(symbol), std::move(line_weights));
}

} // namespace dimalg
