// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/dsl.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "dimalg/errors.hpp"

namespace dimalg {

std::string ParseDiagnostic::render() const {
    std::ostringstream os;
    os << line << ":" << column << ": " << message;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i)
                os << ", ";
            os << expected[i];
        }
        os << ")";
    }
    return os.str();
}

namespace {

enum class Tok {
    Ident,
    Int,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    At,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eq,
    End,
};

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::At: return "'@'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::Eq: return "'='";
    case Tok::End: return "end of file";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(std::string_view src, std::vector<ParseDiagnostic>& diags) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string text, int l, int c) {
        out.push_back(Token{k, std::move(text), l, c});
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n')
                ++i;
            continue;
        }
        int l = line, c = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string word;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                word.push_back(src[i]);
                ++i;
                ++col;
            }
            push(Tok::Ident, std::move(word), l, c);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                num.push_back(src[i]);
                ++i;
                ++col;
            }
            push(Tok::Int, std::move(num), l, c);
            continue;
        }
        Tok k;
        switch (ch) {
        case '{': k = Tok::LBrace; break;
        case '}': k = Tok::RBrace; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBracket; break;
        case ']': k = Tok::RBracket; break;
        case ',': k = Tok::Comma; break;
        case ';': k = Tok::Semi; break;
        case '@': k = Tok::At; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '/': k = Tok::Slash; break;
        case '=': k = Tok::Eq; break;
        default:
            diags.push_back(ParseDiagnostic{l, c, std::string("stray character '") + ch + "'", {}});
            ++i;
            ++col;
            continue;
        }
        push(k, std::string(1, ch), l, c);
        ++i;
        ++col;
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

// Thrown to unwind to the declaration level after a diagnostic is recorded.
struct ParserBail {};

class Parser {
public:
    explicit Parser(std::string_view source) {
        tokens_ = lex(source, diags_);
    }

    ParseResult run() {
        if (!diags_.empty())
            return ParseResult{std::nullopt, std::move(diags_)};
        while (!at(Tok::End)) {
            try {
                declaration();
            } catch (ParserBail&) {
                synchronize();
            }
        }
        if (!diags_.empty())
            return ParseResult{std::nullopt, std::move(diags_)};
        return ParseResult{std::move(doc_), {}};
    }

private:
    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
    std::vector<ParseDiagnostic> diags_;
    Document doc_;

    const Token& peek() const { return tokens_[idx_]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(const char* w) const { return at(Tok::Ident) && peek().text == w; }

    Token advance() { return tokens_[idx_ == tokens_.size() - 1 ? idx_ : idx_++]; }

    bool accept(Tok k) {
        if (!at(k))
            return false;
        advance();
        return true;
    }

    [[noreturn]] void fail(const Token& where, std::string message,
                           std::vector<std::string> expected = {}) {
        diags_.push_back(ParseDiagnostic{where.line, where.col, std::move(message),
                                         std::move(expected)});
        throw ParserBail{};
    }

    Token expect(Tok k) {
        if (!at(k))
            fail(peek(), "unexpected " + std::string(tok_name(peek().kind)) +
                             (peek().text.empty() ? "" : " '" + peek().text + "'"),
                 {tok_name(k)});
        return advance();
    }

    Token expect_word(const char* w) {
        if (!at_word(w))
            fail(peek(), "unexpected " + std::string(tok_name(peek().kind)) +
                             (peek().text.empty() ? "" : " '" + peek().text + "'"),
                 {std::string("'") + w + "'"});
        return advance();
    }

    void synchronize() {
        static const std::set<std::string> heads = {"model", "bracket",   "element",
                                                    "ideal", "reduction", "product"};
        while (!at(Tok::End)) {
            if (at(Tok::Ident) && heads.count(peek().text))
                return;
            advance();
        }
    }

    // --- document-level helpers -------------------------------------------

    void register_decl(Declaration decl, const Token& name_tok) {
        if (doc_.find(decl.name))
            fail(name_tok, "name '" + decl.name + "' is already declared");
        doc_.declarations.push_back(std::move(decl));
    }

    const Declaration& resolve(const std::string& name, DeclKind kind, const Token& where) {
        const Declaration* d = doc_.find(name);
        if (!d)
            fail(where, "unknown name '" + name + "'");
        if (d->kind != kind)
            fail(where, "'" + name + "' is not the right kind of declaration");
        return *d;
    }

    ModelPtr resolve_model(const Token& name_tok) {
        return resolve(name_tok.text, DeclKind::Model, name_tok).model;
    }

    void declaration() {
        if (at_word("model"))
            return model_decl();
        if (at_word("bracket"))
            return bracket_decl();
        if (at_word("element"))
            return element_decl();
        if (at_word("ideal"))
            return ideal_decl();
        if (at_word("reduction"))
            return reduction_decl();
        if (at_word("product"))
            return product_decl();
        fail(peek(), "expected a declaration",
             {"'model'", "'bracket'", "'element'", "'ideal'", "'reduction'", "'product'"});
    }

    std::vector<std::string> name_list_until_semi() {
        std::vector<std::string> names;
        while (at(Tok::Ident))
            names.push_back(advance().text);
        expect(Tok::Semi);
        return names;
    }

    void model_decl() {
        expect_word("model");
        Token name = expect(Tok::Ident);
        expect(Tok::LBrace);
        std::vector<std::string> ordinary, invertible, lines;
        while (!at(Tok::RBrace)) {
            if (at_word("vars")) {
                advance();
                ordinary = name_list_until_semi();
            } else if (at_word("invertible")) {
                advance();
                invertible = name_list_until_semi();
            } else if (at_word("lines")) {
                advance();
                lines = name_list_until_semi();
            } else {
                fail(peek(), "expected a model section", {"'vars'", "'invertible'", "'lines'"});
            }
        }
        expect(Tok::RBrace);
        Declaration d;
        d.kind = DeclKind::Model;
        d.name = name.text;
        try {
            d.model = make_model(ordinary, invertible, lines);
        } catch (const Error& e) {
            fail(name, e.what());
        }
        register_decl(std::move(d), name);
    }

    std::int64_t integer_literal() {
        bool neg = accept(Tok::Minus);
        Token t = expect(Tok::Int);
        std::int64_t v = std::stoll(t.text);
        return neg ? -v : v;
    }

    DimVector dim_tag() {
        expect(Tok::LBracket);
        DimVector d;
        if (!at(Tok::RBracket)) {
            d.push_back(integer_literal());
            while (accept(Tok::Comma))
                d.push_back(integer_literal());
        }
        expect(Tok::RBracket);
        return d;
    }

    // --- expressions --------------------------------------------------------

    // Expressions evaluate over an extended chart in which the line symbols
    // appear as extra invertible variables; the model's own table is a prefix.
    struct ExprContext {
        ModelPtr model;
        VarTablePtr ext;
    };

    ExprContext context_for(const ModelPtr& model) {
        std::vector<std::string> inv = model->vars()->invertible();
        for (const auto& l : model->lines())
            inv.push_back(l);
        return ExprContext{model, make_var_table(model->vars()->ordinary(), inv)};
    }

    Poly expr(const ExprContext& ctx) {
        Poly acc = term(ctx);
        while (at(Tok::Plus) || at(Tok::Minus)) {
            bool plus = advance().kind == Tok::Plus;
            Poly rhs = term(ctx);
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly term(const ExprContext& ctx) {
        Poly acc = factor(ctx);
        while (accept(Tok::Star))
            acc = acc * factor(ctx);
        return acc;
    }

    Poly factor(const ExprContext& ctx) {
        if (accept(Tok::Minus))
            return -factor(ctx);
        Poly base = atom(ctx);
        if (accept(Tok::Caret)) {
            Token where = peek();
            std::int64_t e = integer_literal();
            try {
                base = base.unit_pow(e);
            } catch (const Error& err) {
                fail(where, err.what());
            }
        }
        return base;
    }

    Poly atom(const ExprContext& ctx) {
        if (at(Tok::Int)) {
            Token num = advance();
            Rational value(boost::multiprecision::cpp_int(num.text));
            if (accept(Tok::Slash)) {
                Token den = expect(Tok::Int);
                boost::multiprecision::cpp_int d(den.text);
                if (d == 0)
                    fail(den, "zero denominator");
                value /= Rational(d);
            }
            return Poly::constant(ctx.ext, value);
        }
        if (at(Tok::Ident)) {
            Token sym = advance();
            auto i = ctx.ext->index_of(sym.text);
            if (!i)
                fail(sym, "unknown symbol '" + sym.text + "'");
            return Poly::variable(ctx.ext, *i);
        }
        if (accept(Tok::LParen)) {
            Poly inner = expr(ctx);
            expect(Tok::RParen);
            return inner;
        }
        fail(peek(), "expected an expression atom", {"number", "symbol", "'('"});
    }

    /// Splits an extended-chart polynomial into a model-chart coefficient and
    /// the uniform line-power vector of its terms.
    DimElement element_from_expr(const ExprContext& ctx, const Poly& ext_poly,
                                 const DimVector& tag, const Token& where) {
        const std::size_t nv = ctx.model->vars()->size();
        const std::size_t nl = ctx.model->line_count();
        if (tag.size() != nl)
            fail(where, "dimension tag arity " + std::to_string(tag.size()) +
                            " does not match the model's " + std::to_string(nl) + " lines");
        if (ext_poly.is_zero())
            return DimElement::zero(ctx.model, tag);
        bool first = true;
        DimVector lines(nl, 0);
        Poly coeff = Poly::zero(ctx.model->vars());
        for (const auto& [e, c] : ext_poly.terms()) {
            DimVector lp(nl, 0);
            for (std::size_t l = 0; l < nl; ++l)
                lp[l] = e[nv + l];
            if (first) {
                lines = lp;
                first = false;
            } else if (lp != lines) {
                fail(where, "expression mixes dimension slices " + render_dim(lines) + " and " +
                                render_dim(lp) + "; addition is only defined within a slice");
            }
            Exponents me(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nv));
            try {
                coeff += Poly::monomial(ctx.model->vars(), std::move(me), c);
            } catch (const Error& err) {
                fail(where, err.what());
            }
        }
        if (lines != tag)
            fail(where, "expression lives in slice " + render_dim(lines) + " but is tagged " +
                            render_dim(tag));
        return DimElement(ctx.model, tag, std::move(coeff));
    }

    // --- declarations --------------------------------------------------------

    void bracket_decl() {
        expect_word("bracket");
        Token name = expect(Tok::Ident);
        expect_word("on");
        Token model_name = expect(Tok::Ident);
        ModelPtr model = resolve_model(model_name);
        expect_word("dim");
        Token dim_tok = peek();
        DimVector k = dim_tag();
        if (k.size() != model->line_count())
            fail(dim_tok, "bracket dimension arity does not match the model's lines");
        ExprContext ctx = context_for(model);
        BracketSpec spec(model, k);
        expect(Tok::LBrace);
        while (!at(Tok::RBrace)) {
            Token entry_tok = expect(Tok::LBrace);
            Token ga = expect(Tok::Ident);
            expect(Tok::Comma);
            Token gb = expect(Tok::Ident);
            expect(Tok::RBrace);
            expect(Tok::Eq);
            Poly value = expr(ctx);
            expect(Tok::At);
            Token tag_tok = peek();
            DimVector tag = dim_tag();
            expect(Tok::Semi);
            DimElement elem = element_from_expr(ctx, value, tag, tag_tok);
            try {
                spec.set_entry(ga.text, gb.text, std::move(elem));
            } catch (const Error& e) {
                fail(entry_tok, e.what());
            }
        }
        expect(Tok::RBrace);
        Declaration d;
        d.kind = DeclKind::Bracket;
        d.name = name.text;
        d.model = model;
        d.operand_a = model_name.text; // model name, for rendering
        d.bracket = std::move(spec);
        register_decl(std::move(d), name);
    }

    void element_decl() {
        expect_word("element");
        Token name = expect(Tok::Ident);
        expect_word("on");
        Token model_name = expect(Tok::Ident);
        ModelPtr model = resolve_model(model_name);
        expect(Tok::Eq);
        ExprContext ctx = context_for(model);
        Poly value = expr(ctx);
        expect(Tok::At);
        Token tag_tok = peek();
        DimVector tag = dim_tag();
        expect(Tok::Semi);
        Declaration d;
        d.kind = DeclKind::Element;
        d.name = name.text;
        d.model = model;
        d.operand_a = model_name.text;
        d.element = element_from_expr(ctx, value, tag, tag_tok);
        register_decl(std::move(d), name);
    }

    void ideal_decl() {
        expect_word("ideal");
        Token name = expect(Tok::Ident);
        expect_word("on");
        Token model_name = expect(Tok::Ident);
        ModelPtr model = resolve_model(model_name);
        expect(Tok::Eq);
        expect(Tok::LParen);
        std::vector<std::string> vars;
        if (!at(Tok::RParen)) {
            vars.push_back(expect(Tok::Ident).text);
            while (accept(Tok::Comma))
                vars.push_back(expect(Tok::Ident).text);
        }
        expect(Tok::RParen);
        expect(Tok::Semi);
        Declaration d;
        d.kind = DeclKind::Ideal;
        d.name = name.text;
        d.model = model;
        d.operand_a = model_name.text;
        try {
            d.ideal = CoordIdeal(model, vars);
        } catch (const Error& e) {
            fail(name, e.what());
        }
        register_decl(std::move(d), name);
    }

    void reduction_decl() {
        expect_word("reduction");
        Token name = expect(Tok::Ident);
        expect_word("of");
        Token bracket_name = expect(Tok::Ident);
        const Declaration& br = resolve(bracket_name.text, DeclKind::Bracket, bracket_name);
        expect_word("by");
        Token ideal_name = expect(Tok::Ident);
        const Declaration& id = resolve(ideal_name.text, DeclKind::Ideal, ideal_name);
        if (!same_model(br.model, id.model))
            fail(ideal_name, "ideal '" + ideal_name.text + "' lives on a different model");
        expect_word("survivors");
        expect(Tok::LParen);
        std::vector<std::string> survivors;
        if (!at(Tok::RParen)) {
            survivors.push_back(expect(Tok::Ident).text);
            while (accept(Tok::Comma))
                survivors.push_back(expect(Tok::Ident).text);
        }
        expect(Tok::RParen);
        expect(Tok::Semi);
        try {
            ReductionData probe(*id.ideal, survivors); // validates the partition
        } catch (const Error& e) {
            fail(name, e.what());
        }
        Declaration d;
        d.kind = DeclKind::Reduction;
        d.name = name.text;
        d.operand_a = bracket_name.text;
        d.ideal_name = ideal_name.text;
        d.survivors = std::move(survivors);
        register_decl(std::move(d), name);
    }

    void product_decl() {
        expect_word("product");
        Token name = expect(Tok::Ident);
        expect_word("of");
        Token a = expect(Tok::Ident);
        resolve(a.text, DeclKind::Bracket, a);
        expect_word("and");
        Token b = expect(Tok::Ident);
        resolve(b.text, DeclKind::Bracket, b);
        Declaration d;
        d.kind = DeclKind::Product;
        d.name = name.text;
        d.operand_a = a.text;
        d.operand_b = b.text;
        if (at_word("casimirs")) {
            advance();
            Token ca = expect(Tok::Ident);
            const Declaration& ca_decl = resolve(ca.text, DeclKind::Element, ca);
            Token cb = expect(Tok::Ident);
            const Declaration& cb_decl = resolve(cb.text, DeclKind::Element, cb);
            const Declaration& da = resolve(a.text, DeclKind::Bracket, a);
            const Declaration& db = resolve(b.text, DeclKind::Bracket, b);
            if (!same_model(ca_decl.element->model(), da.model))
                fail(ca, "Casimir '" + ca.text + "' lives on a different model");
            if (!same_model(cb_decl.element->model(), db.model))
                fail(cb, "Casimir '" + cb.text + "' lives on a different model");
            d.casimir_a = ca.text;
            d.casimir_b = cb.text;
        }
        expect(Tok::Semi);
        register_decl(std::move(d), name);
    }
};

} // namespace

const Declaration* Document::find(const std::string& name) const {
    for (const auto& d : declarations)
        if (d.name == name)
            return &d;
    return nullptr;
}

const Declaration& Document::require(const std::string& name, DeclKind kind) const {
    const Declaration* d = find(name);
    if (!d)
        throw UnknownVariable("no declaration named '" + name + "'");
    if (d->kind != kind)
        throw Error("declaration '" + name + "' has the wrong kind");
    return *d;
}

BracketSpec Document::materialize_bracket(const std::string& name) const {
    const Declaration* d = find(name);
    if (!d)
        throw UnknownVariable("no declaration named '" + name + "'");
    switch (d->kind) {
    case DeclKind::Bracket:
        return *d->bracket;
    case DeclKind::Reduction: {
        BracketSpec base = materialize_bracket(d->operand_a);
        const Declaration& id = require(d->ideal_name, DeclKind::Ideal);
        return reduce(base, ReductionData(*id.ideal, d->survivors));
    }
    case DeclKind::Product: {
        BracketSpec a = materialize_bracket(d->operand_a);
        BracketSpec b = materialize_bracket(d->operand_b);
        if (!d->casimir_a.empty()) {
            const Declaration& ca = require(d->casimir_a, DeclKind::Element);
            const Declaration& cb = require(d->casimir_b, DeclKind::Element);
            return product_casimir(a, *ca.element, b, *cb.element);
        }
        if (dim_is_zero(a.bracket_dim()) && dim_is_zero(b.bracket_dim()))
            return product_poly_poisson(a, b);
        if (a.bracket_dim() == DimVector{-1} && b.bracket_dim() == DimVector{-1})
            return product_jacobi(a, b);
        throw DimensionIncompatible(
            "product requires two dimension-0 brackets, two dimension-[-1] Jacobi brackets, "
            "or explicit Casimirs");
    }
    default:
        throw Error("declaration '" + name + "' is not bracket-like");
    }
}

bool Declaration::operator==(const Declaration& rhs) const {
    if (kind != rhs.kind || name != rhs.name)
        return false;
    if (!same_model(model, rhs.model))
        return false;
    if (bracket.has_value() != rhs.bracket.has_value() ||
        (bracket && !(*bracket == *rhs.bracket)))
        return false;
    if (element.has_value() != rhs.element.has_value() ||
        (element && !(*element == *rhs.element)))
        return false;
    if (ideal.has_value() != rhs.ideal.has_value() || (ideal && !(*ideal == *rhs.ideal)))
        return false;
    return operand_a == rhs.operand_a && operand_b == rhs.operand_b &&
           ideal_name == rhs.ideal_name && survivors == rhs.survivors &&
           casimir_a == rhs.casimir_a && casimir_b == rhs.casimir_b;
}

bool Document::operator==(const Document& rhs) const {
    return declarations == rhs.declarations;
}

ParseResult parse(std::string_view source) {
    return Parser(source).run();
}

namespace {

void render_name_list(std::ostringstream& os, const char* head,
                      const std::vector<std::string>& names) {
    if (names.empty())
        return;
    os << "  " << head;
    for (const auto& n : names)
        os << " " << n;
    os << ";\n";
}

void render_decl(std::ostringstream& os, const Declaration& d) {
    switch (d.kind) {
    case DeclKind::Model: {
        os << "model " << d.name << " {\n";
        render_name_list(os, "vars", d.model->vars()->ordinary());
        render_name_list(os, "invertible", d.model->vars()->invertible());
        render_name_list(os, "lines", d.model->lines());
        os << "}\n";
        break;
    }
    case DeclKind::Bracket: {
        os << "bracket " << d.name << " on " << d.operand_a << " dim "
           << render_dim(d.bracket->bracket_dim()) << " {\n";
        for (const auto& [key, value] : d.bracket->table())
            os << "  {" << gen_name(d.model, key.first) << "," << gen_name(d.model, key.second)
               << "} = " << value.render() << ";\n";
        os << "}\n";
        break;
    }
    case DeclKind::Element:
        os << "element " << d.name << " on " << d.operand_a << " = " << d.element->render()
           << ";\n";
        break;
    case DeclKind::Ideal: {
        os << "ideal " << d.name << " on " << d.operand_a << " = (";
        auto names = d.ideal->vanishing_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            os << (i ? ", " : "") << names[i];
        os << ");\n";
        break;
    }
    case DeclKind::Reduction: {
        os << "reduction " << d.name << " of " << d.operand_a << " by " << d.ideal_name
           << " survivors (";
        for (std::size_t i = 0; i < d.survivors.size(); ++i)
            os << (i ? ", " : "") << d.survivors[i];
        os << ");\n";
        break;
    }
    case DeclKind::Product:
        os << "product " << d.name << " of " << d.operand_a << " and " << d.operand_b;
        if (!d.casimir_a.empty())
            os << " casimirs " << d.casimir_a << " " << d.casimir_b;
        os << ";\n";
        break;
    }
}

} // namespace

std::string render(const Document& doc) {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : doc.declarations) {
        if (!first)
            os << "\n";
        first = false;
        render_decl(os, d);
    }
    return os.str();
}

Document document_for_bracket(const std::string& model_name, const std::string& bracket_name,
                              const BracketSpec& spec) {
    Document doc;
    Declaration m;
    m.kind = DeclKind::Model;
    m.name = model_name;
    m.model = spec.model();
    doc.declarations.push_back(std::move(m));
    Declaration b;
    b.kind = DeclKind::Bracket;
    b.name = bracket_name;
    b.model = spec.model();
    b.operand_a = model_name;
    b.bracket = spec;
    doc.declarations.push_back(std::move(b));
    return doc;
}

} // namespace dimalg
