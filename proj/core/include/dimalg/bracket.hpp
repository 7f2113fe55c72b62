// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimalg/derivation.hpp"
#include "dimalg/element.hpp"
#include "dimalg/factor.hpp"
#include "dimalg/sampling.hpp"

namespace dimalg {

/// A generator of the power ring: a chart variable or a line unit.
struct GenId {
    bool is_line = false;
    std::size_t index = 0;

    auto operator<=>(const GenId&) const = default;
};

std::string gen_name(const ModelPtr& model, GenId g);
/// Dimension of the generator: 0 for variables, e_l for units.
DimVector gen_dim(const ModelPtr& model, GenId g);
/// The generator as a ring element.
DimElement gen_element(const ModelPtr& model, GenId g);
std::vector<GenId> generators(const ModelPtr& model);

/// Finite presentation of a dimensioned Poisson bracket of homogeneous
/// dimension k on the power ring of a model: bracket values on generator
/// pairs, extended to everything by bilinearity and the Leibniz identity.
/// Dimension bookkeeping: dim {g,h} = dim(g) + dim(h) + k.
class BracketSpec {
public:
    BracketSpec(ModelPtr model, DimVector bracket_dim);

    const ModelPtr& model() const { return model_; }
    const DimVector& bracket_dim() const { return bracket_dim_; }

    DimVector expected_entry_dim(GenId a, GenId b) const;

    /// Stores {a,b} = value (and {b,a} = -value). Rejects a == b with a
    /// nonzero value and dimension-tag mismatches.
    void set_entry(GenId a, GenId b, DimElement value);
    void set_entry(const std::string& a, const std::string& b, DimElement value);

    /// Signed lookup; entries never set are zero of the forced dimension.
    DimElement entry(GenId a, GenId b) const;

    /// Canonically ordered nonzero entries (a < b).
    const std::map<std::pair<GenId, GenId>, DimElement>& table() const { return table_; }

    GenId resolve_generator(const std::string& name) const;

    bool operator==(const BracketSpec& rhs) const;

private:
    ModelPtr model_;
    DimVector bracket_dim_;
    std::map<std::pair<GenId, GenId>, DimElement> table_;
};

/// Leibniz-extension evaluation by structural recursion on monomials: base
/// cases come from the table, one ⊙-factor is peeled at a time, and inverse
/// generators use the forced rule {P, v^{-1}} = -v^{-2} ⊙ {P, v}.
DimElement evaluate(const BracketSpec& spec, const DimElement& a, const DimElement& b);

/// Jacobi structure on a single-line model in a chosen trivialization: the
/// bivector components Lambda^{ij} (antisymmetric) and the symbol E = X_u of
/// the unit (the Reeb field of the trivialization).
struct JacobiData {
    ModelPtr model;
    std::vector<std::vector<Poly>> lambda; // n x n, antisymmetric
    std::vector<Poly> reeb;                // per chart variable

    JacobiData(ModelPtr m, std::vector<std::vector<Poly>> l, std::vector<Poly> e);

    /// Lambda(df, dg) = sum_ij Lambda^{ij} d_i f d_j g.
    Poly lambda_pairing(const Poly& f, const Poly& g) const;
    /// The vector field Lambda#(df), as its coefficient list.
    std::vector<Poly> lambda_sharp(const Poly& f) const;
    /// E[f].
    Poly reeb_apply(const Poly& f) const;
};

/// The dimensioned Poisson bracket of dimension [-1] induced by a Jacobi
/// structure: {x_i,x_j} = Lambda^{ij} u^{-1}, {u,x_i} = E[x_i], {u,u} = 0.
BracketSpec from_jacobi(const JacobiData& j);

/// Reads the symbols back off a single-line dimension-[-1] table; inverse of
/// from_jacobi. Empty for any other bracket shape.
std::optional<JacobiData> extract_jacobi(const BracketSpec& spec);

/// Closed form for the single-line bracket of P*u^p and Q*u^q:
///   (Lambda(dP,dQ) + p P E[Q] - q Q E[P]) * u^(p+q-1).
/// Independent of the Leibniz recursion; used as its cross-check.
DimElement jacobi_closed_form(const JacobiData& j, const Poly& p_coeff, std::int64_t p_pow,
                              const Poly& q_coeff, std::int64_t q_pow);

struct CheckResult {
    std::string name;
    std::int64_t count = 0;
    bool passed = true;
    std::string counterexample; // empty when passed
};

struct VerifyReport {
    bool passed = true;
    std::vector<CheckResult> checks;

    const std::string* first_counterexample() const;
    void add(CheckResult r);
};

/// Exact verification of the dimensioned Poisson axioms: homogeneity of the
/// table, antisymmetry and Leibniz on seeded random sweeps, and the Jacobi
/// identity on every generator triple plus random monomial triples. On a
/// bounded-degree table the generator sweep is conclusive; the randomized
/// layer is defense in depth.
VerifyReport verify_poisson(const BracketSpec& spec,
                            std::uint64_t seed = kDefaultSeed,
                            std::int64_t samples = 200);

/// Symbol-level verification of the four compatibility conditions of a
/// Jacobi structure in the trivialization; equivalent to verify_poisson on
/// from_jacobi(j), which is itself a tested fact.
VerifyReport verify_symbols(const JacobiData& j,
                            std::uint64_t seed = kDefaultSeed,
                            std::int64_t samples = 200);

/// True iff evaluate(c, g) = 0 for every generator g; sufficient by Leibniz.
bool is_casimir(const BracketSpec& spec, const DimElement& c);
/// As above, also reporting the first failing generator.
bool is_casimir(const BracketSpec& spec, const DimElement& c, std::string* witness);

/// The derivation {h, -}, of shift dim(h) + k.
DimDerivation hamiltonian_derivation(const BracketSpec& spec, const DimElement& h);

/// Checks that the pullback along f intertwines the generator brackets:
/// pullback(entry_target(g,h)) = evaluate_source(pullback g, pullback h).
bool intertwines_brackets(const Factor& f, const BracketSpec& source_spec,
                          const BracketSpec& target_spec, std::string* witness = nullptr);

} // namespace dimalg
