#include "pgr/parse.hpp"

#include <cctype>

namespace pgr {

namespace {

struct Token {
    enum Kind { ident, number, lparen, rparen, comma, amp, arrow, lambda, dot, end } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    Token expect(Token::Kind k, const char* what) {
        if (tok_.kind != k) fail(std::string("expected ") + what);
        return take();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::string found = tok_.kind == Token::end ? "end of input" : "'" + tok_.text + "'";
        throw ParseError(msg + ", found " + found, tok_.line, tok_.column);
    }

private:
    void bump() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void advance() {
        while (i_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
                bump();
            } else if (s_[i_] == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') bump();
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.column = col_;
        tok_.text.clear();
        if (i_ >= s_.size()) {
            tok_.kind = Token::end;
            return;
        }
        char c = s_[i_];
        auto single = [&](Token::Kind k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            bump();
        };
        switch (c) {
            case '(': return single(Token::lparen);
            case ')': return single(Token::rparen);
            case ',': return single(Token::comma);
            case '&': return single(Token::amp);
            case '.': return single(Token::dot);
            case '\\': return single(Token::lambda);
            default: break;
        }
        if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
            tok_.kind = Token::arrow;
            tok_.text = "->";
            bump();
            bump();
            return;
        }
        if (s_.substr(i_, 2) == "\xce\xbb") {  // UTF-8 lambda
            tok_.kind = Token::lambda;
            tok_.text = "\xce\xbb";
            i_ += 2;
            ++col_;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::number;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                tok_.text += s_[i_];
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::ident;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\'')) {
                tok_.text += s_[i_];
                bump();
            }
            return;
        }
        tok_.text = std::string(1, c);
        throw ParseError("unexpected character '" + tok_.text + "'", line_, col_);
    }

    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::end, {}, 1, 1};
};

FormulaPtr formula(Lexer& lx);

FormulaPtr formula_atom(Lexer& lx) {
    if (lx.peek().kind == Token::lparen) {
        lx.take();
        FormulaPtr f = formula(lx);
        lx.expect(Token::rparen, "')'");
        return f;
    }
    return Formula::atom(lx.expect(Token::ident, "a formula").text);
}

FormulaPtr formula_conj(Lexer& lx) {
    FormulaPtr f = formula_atom(lx);
    while (lx.peek().kind == Token::amp) {
        lx.take();
        f = Formula::conj(f, formula_atom(lx));
    }
    return f;
}

FormulaPtr formula(Lexer& lx) {
    FormulaPtr f = formula_conj(lx);
    if (lx.peek().kind == Token::arrow) {
        lx.take();
        return Formula::impl(f, formula(lx));
    }
    return f;
}

std::size_t number(Lexer& lx) {
    Token t = lx.expect(Token::number, "a position");
    try {
        return std::stoul(t.text);
    } catch (const std::exception&) {
        throw ParseError("position out of range", t.line, t.column);
    }
}

ProofPtr proof(Lexer& lx) {
    if (lx.peek().kind != Token::ident) lx.fail("expected a proof rule");
    Token head = lx.take();
    const std::string& r = head.text;
    lx.expect(Token::lparen, "'('");
    auto comma = [&] { lx.expect(Token::comma, "','"); };
    ProofPtr out;
    if (r == "ax") {
        out = Proof::ax(formula(lx));
    } else if (r == "ex" || r == "c") {
        std::size_t i = number(lx);
        comma();
        ProofPtr p = proof(lx);
        out = r == "ex" ? Proof::ex(i, p) : Proof::contract(i, p);
    } else if (r == "w") {
        FormulaPtr f = formula(lx);
        comma();
        out = Proof::weaken(f, proof(lx));
    } else if (r == "andI" || r == "impE") {
        ProofPtr p = proof(lx);
        comma();
        ProofPtr q = proof(lx);
        out = r == "andI" ? Proof::and_intro(p, q) : Proof::imp_elim(p, q);
    } else if (r == "andE1") {
        out = Proof::and_elim1(proof(lx));
    } else if (r == "andE2") {
        out = Proof::and_elim2(proof(lx));
    } else if (r == "impI") {
        out = Proof::imp_intro(proof(lx));
    } else {
        throw ParseError("unknown proof rule '" + r + "'", head.line, head.column);
    }
    lx.expect(Token::rparen, "')'");
    return out;
}

TermPtr term(Lexer& lx);

TermPtr abstraction(Lexer& lx) {
    lx.take();
    std::vector<std::string> binders;
    binders.push_back(lx.expect(Token::ident, "a variable").text);
    while (lx.peek().kind == Token::ident) binders.push_back(lx.take().text);
    lx.expect(Token::dot, "'.'");
    TermPtr body = term(lx);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::abs(*it, body);
    return body;
}

TermPtr term_atom(Lexer& lx) {
    if (lx.peek().kind == Token::lparen) {
        lx.take();
        TermPtr t = term(lx);
        lx.expect(Token::rparen, "')'");
        return t;
    }
    return Term::var(lx.expect(Token::ident, "a term").text);
}

TermPtr term(Lexer& lx) {
    if (lx.peek().kind == Token::lambda) return abstraction(lx);
    TermPtr t = term_atom(lx);
    for (;;) {
        auto k = lx.peek().kind;
        if (k == Token::ident || k == Token::lparen) {
            t = Term::app(t, term_atom(lx));
        } else if (k == Token::lambda) {
            return Term::app(t, abstraction(lx));
        } else {
            return t;
        }
    }
}

template <class T, class F>
T whole(std::string_view text, F f) {
    Lexer lx(text);
    T out = f(lx);
    if (lx.peek().kind != Token::end) lx.fail("expected end of input");
    return out;
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return whole<FormulaPtr>(text, formula); }

ProofPtr parse_proof(std::string_view text) { return whole<ProofPtr>(text, proof); }

TermPtr parse_term(std::string_view text, bool check) {
    TermPtr t = whole<TermPtr>(text, term);
    if (check) check_linear(t);
    return t;
}

}  // namespace pgr
