// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/element.hpp"

#include <sstream>

#include "dimalg/errors.hpp"

namespace dimalg {

DimElement::DimElement(ModelPtr model, DimVector dim, Poly coeff)
    : model_(std::move(model)), dim_(std::move(dim)), coeff_(std::move(coeff)) {
    if (dim_.size() != model_->line_count())
        throw ShapeMismatch("dimension tag arity does not match the model's line count");
    if (!same_table(coeff_.table(), model_->vars()))
        throw VarTableMismatch("coefficient lives on the wrong chart");
}

DimElement DimElement::zero(ModelPtr model, DimVector dim) {
    Poly z = Poly::zero(model->vars());
    return DimElement(std::move(model), std::move(dim), std::move(z));
}

DimElement DimElement::one(ModelPtr model) {
    Poly c = Poly::constant(model->vars(), 1);
    DimVector d = dim_zero(model->line_count());
    return DimElement(std::move(model), std::move(d), std::move(c));
}

DimElement DimElement::unit_power(ModelPtr model, DimVector dim) {
    Poly c = Poly::constant(model->vars(), 1);
    return DimElement(std::move(model), std::move(dim), std::move(c));
}

DimElement DimElement::from_poly(ModelPtr model, Poly coeff) {
    DimVector d = dim_zero(model->line_count());
    return DimElement(std::move(model), std::move(d), std::move(coeff));
}

DimElement DimElement::operator-() const {
    return DimElement(model_, dim_, -coeff_);
}

DimElement DimElement::scaled(const Rational& c) const {
    return DimElement(model_, dim_, coeff_.scaled(c));
}

bool DimElement::operator==(const DimElement& rhs) const {
    return same_model(model_, rhs.model_) && dim_ == rhs.dim_ && coeff_ == rhs.coeff_;
}

std::string DimElement::render() const {
    std::ostringstream os;
    bool have_units = !dim_is_zero(dim_);
    if (coeff_.is_zero()) {
        os << "0";
    } else if (!have_units) {
        os << coeff_.render();
    } else {
        auto cv = coeff_.constant_value();
        if (cv.has_value() && *cv == -1) {
            os << "-";
        } else if (!cv.has_value() || *cv != 1) {
            bool needs_parens = coeff_.terms().size() > 1;
            if (needs_parens)
                os << "(" << coeff_.render() << ")";
            else
                os << coeff_.render();
            os << "*";
        }
        bool first = true;
        for (std::size_t l = 0; l < dim_.size(); ++l) {
            if (dim_[l] == 0)
                continue;
            if (!first)
                os << "*";
            os << model_->line_name(l);
            if (dim_[l] != 1)
                os << "^" << dim_[l];
            first = false;
        }
    }
    os << " @ " << render_dim(dim_);
    return os.str();
}

DimElement dim_add(const DimElement& a, const DimElement& b) {
    require_same_model(a.model(), b.model(), "dim_add");
    if (a.dim() != b.dim())
        throw DimensionMismatch("cannot add across slices " + render_dim(a.dim()) + " and " +
                                render_dim(b.dim()));
    return DimElement(a.model(), a.dim(), a.coeff() + b.coeff());
}

DimElement dim_sub(const DimElement& a, const DimElement& b) {
    return dim_add(a, -b);
}

DimElement odot(const DimElement& a, const DimElement& b) {
    require_same_model(a.model(), b.model(), "odot");
    return DimElement(a.model(), dim_sum(a.dim(), b.dim()), a.coeff() * b.coeff());
}

DimElement invert(const DimElement& a) {
    Poly inv = Poly::zero(a.model()->vars());
    if (!a.coeff().is_unit(&inv))
        throw NotAUnit("element is not a unit: " + a.render());
    return DimElement(a.model(), dim_neg(a.dim()), std::move(inv));
}

DimElement odot_pow(const DimElement& a, std::int64_t n) {
    return DimElement(a.model(), dim_scaled(a.dim(), n), a.coeff().unit_pow(n));
}

} // namespace dimalg
