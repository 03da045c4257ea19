#include "legreuel/parser.hpp"

#include <algorithm>
#include <cctype>

namespace legreuel {

namespace {

enum class Tok { ident, number, lparen, rparen, lbrack, rbrack, comma, semi,
                 assign, plus, minus, star, caret, slash, end };

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Span at{line_, col_};
            if (pos_ >= src_.size()) {
                out.push_back({Tok::end, "", at});
                break;
            }
            char c = src_[pos_];
            if (std::isalpha((unsigned char)c) || c == '_') {
                std::string s;
                while (pos_ < src_.size() &&
                       (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
                    s += take();
                out.push_back({Tok::ident, std::move(s), at});
            } else if (std::isdigit((unsigned char)c)) {
                std::string s;
                while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
                    s += take();
                out.push_back({Tok::number, std::move(s), at});
            } else {
                Tok k;
                switch (c) {
                    case '(': k = Tok::lparen; break;
                    case ')': k = Tok::rparen; break;
                    case '[': k = Tok::lbrack; break;
                    case ']': k = Tok::rbrack; break;
                    case ',': k = Tok::comma; break;
                    case ';': k = Tok::semi; break;
                    case '=': k = Tok::assign; break;
                    case '+': k = Tok::plus; break;
                    case '-': k = Tok::minus; break;
                    case '*': k = Tok::star; break;
                    case '^': k = Tok::caret; break;
                    case '/': k = Tok::slash; break;
                    default:
                        throw Error(ErrorKind::parse_error,
                                    std::string("unexpected character '") + c + "'", at);
                }
                take();
                out.push_back({k, std::string(1, c), at});
            }
        }
        return out;
    }

private:
    char take() {
        char c = src_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; }
        else ++col_;
        return c;
    }
    void skip_space() {
        for (;;) {
            while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) take();
            if (pos_ < src_.size() && src_[pos_] == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
                continue;
            }
            break;
        }
    }
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(Lexer(src).run()) {}

    Script script() {
        Script s;
        while (!at(Tok::end)) statement(s);
        return s;
    }

    Polynomial single_expr(const RingPtr& ring) {
        Script s;
        s.ring = ring;
        Polynomial p = expr(s);
        expect(Tok::end, "end of input");
        return p;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    bool at(Tok k) const { return cur().kind == k; }
    Token advance() { return toks_[i_++]; }
    Token expect(Tok k, const char* what) {
        if (!at(k))
            throw Error(ErrorKind::parse_error,
                        std::string("expected ") + what + ", found '" +
                            (cur().kind == Tok::end ? "end of input" : cur().text) + "'",
                        cur().span);
        return advance();
    }

    void need_ring(const Script& s, const Span& where) {
        if (!s.ring)
            throw Error(ErrorKind::parse_error, "no ring declared yet", where);
    }

    void statement(Script& s) {
        const Token& t = cur();
        if (t.kind != Tok::ident)
            throw Error(ErrorKind::parse_error, "expected a statement", t.span);
        if (t.text == "ring") return ring_decl(s);
        if (t.text == "poly") return poly_decl(s);
        if (t.text == "ideal") return ideal_decl(s);
        if (t.text == "matrix") return matrix_decl(s);
        return command(s);
    }

    void ring_decl(Script& s) {
        Token kw = advance();
        if (s.ring)
            throw Error(ErrorKind::parse_error, "ring already declared", kw.span);
        expect(Tok::lparen, "'('");
        std::vector<std::string> names;
        for (;;) {
            Token v = expect(Tok::ident, "variable name");
            names.push_back(v.text);
            if (at(Tok::comma)) { advance(); continue; }
            break;
        }
        expect(Tok::rparen, "')'");
        Token kind = expect(Tok::ident, "'local' or 'global'");
        MonomialOrder ord = MonomialOrder::global((int)names.size());
        if (kind.text == "local") ord = MonomialOrder::local((int)names.size());
        else if (kind.text != "global")
            throw Error(ErrorKind::parse_error, "expected 'local' or 'global'", kind.span);
        expect(Tok::semi, "';'");
        try {
            s.ring = make_ring(std::move(names), std::move(ord));
        } catch (const Error& e) {
            throw Error(ErrorKind::parse_error, e.what(), kw.span);
        }
    }

    void check_fresh(const Script& s, const Token& name) {
        if (s.ring && s.ring->var_index(name.text) >= 0)
            throw Error(ErrorKind::parse_error,
                        "name collides with a ring variable: " + name.text, name.span);
        if (s.polys.count(name.text) || s.ideals.count(name.text) || s.matrices.count(name.text))
            throw Error(ErrorKind::parse_error, "name already declared: " + name.text,
                        name.span);
    }

    void poly_decl(Script& s) {
        Token kw = advance();
        need_ring(s, kw.span);
        Token name = expect(Tok::ident, "name");
        check_fresh(s, name);
        expect(Tok::assign, "'='");
        Polynomial p = expr(s);
        expect(Tok::semi, "';'");
        s.polys.emplace(name.text, std::move(p));
    }

    void ideal_decl(Script& s) {
        Token kw = advance();
        need_ring(s, kw.span);
        Token name = expect(Tok::ident, "name");
        check_fresh(s, name);
        expect(Tok::assign, "'='");
        std::vector<Polynomial> gens;
        for (;;) {
            gens.push_back(expr(s));
            if (at(Tok::comma)) { advance(); continue; }
            break;
        }
        expect(Tok::semi, "';'");
        s.ideals.emplace(name.text, Ideal(s.ring, std::move(gens)));
    }

    void matrix_decl(Script& s) {
        Token kw = advance();
        need_ring(s, kw.span);
        Token name = expect(Tok::ident, "name");
        check_fresh(s, name);
        expect(Tok::lbrack, "'['");
        Token rt = expect(Tok::number, "row count");
        expect(Tok::rbrack, "']'");
        expect(Tok::lbrack, "'['");
        Token ct = expect(Tok::number, "column count");
        expect(Tok::rbrack, "']'");
        if (rt.text.size() > 3 || ct.text.size() > 3)
            throw Error(ErrorKind::parse_error, "matrix dimensions out of range", rt.span);
        long rows = std::stol(rt.text), cols = std::stol(ct.text);
        if (rows <= 0 || cols <= 0 || rows > 64 || cols > 64)
            throw Error(ErrorKind::parse_error, "matrix dimensions out of range", rt.span);
        expect(Tok::assign, "'='");
        std::vector<Polynomial> entries;
        for (;;) {
            entries.push_back(expr(s));
            if (at(Tok::comma)) { advance(); continue; }
            break;
        }
        Token fin = expect(Tok::semi, "';'");
        if ((long)entries.size() != rows * cols)
            throw Error(ErrorKind::parse_error,
                        "matrix needs " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries.size()),
                        fin.span);
        PolyMatrix m(s.ring, (int)rows, (int)cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c)
                m.at((int)r, (int)c) = std::move(entries[(size_t)(r * cols + c)]);
        s.matrices.emplace(name.text, std::move(m));
    }

    void command(Script& s) {
        Token name = advance();
        need_ring(s, name.span);
        Command cmd;
        cmd.name = name.text;
        cmd.span = name.span;
        expect(Tok::lparen, "'('");
        if (!at(Tok::rparen)) {
            for (;;) {
                cmd.args.push_back(argument(s));
                if (at(Tok::comma)) { advance(); continue; }
                break;
            }
        }
        expect(Tok::rparen, "')'");
        expect(Tok::semi, "';'");
        s.commands.push_back(std::move(cmd));
    }

    CmdArg argument(Script& s) {
        CmdArg a;
        a.span = cur().span;
        size_t start = i_;
        // bare identifier naming a declared object
        if (at(Tok::ident)) {
            const std::string& n = cur().text;
            Tok next = toks_[i_ + 1].kind;
            if (next == Tok::comma || next == Tok::rparen) {
                if (s.ideals.count(n) || s.matrices.count(n) || s.polys.count(n)) {
                    a.name = n;
                    a.text = n;
                    advance();
                    if (s.polys.count(n)) a.value = s.polys.at(n);
                    return a;
                }
                if (!s.ring || s.ring->var_index(n) < 0)
                    throw Error(ErrorKind::parse_error, "unknown name: " + n, cur().span);
                // a ring variable falls through as a polynomial expression
            }
        }
        Polynomial p = expr(s);
        a.value = p;
        for (size_t k = start; k < i_; ++k)
            a.text += (k > start ? " " : "") + toks_[k].text;
        if (p.is_constant()) {
            Rational c = p.constant_term();
            if (c.is_integer() && c.numerator().fits_slong_p())
                a.integer = c.numerator().get_si();
        }
        return a;
    }

    Polynomial expr(Script& s) {
        bool neg = false;
        if (at(Tok::minus)) { advance(); neg = true; }
        else if (at(Tok::plus)) advance();
        Polynomial acc = term(s);
        if (neg) acc = -acc;
        while (at(Tok::plus) || at(Tok::minus)) {
            bool sub = advance().kind == Tok::minus;
            Polynomial t = term(s);
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term(Script& s) {
        Polynomial acc = factor(s);
        while (at(Tok::star)) {
            advance();
            acc = acc * factor(s);
        }
        return acc;
    }

    Polynomial factor(Script& s) {
        Polynomial base = atom(s);
        if (at(Tok::caret)) {
            Token c = advance();
            if (!at(Tok::number))
                throw Error(ErrorKind::parse_error,
                            "exponent must be a non-negative integer", cur().span);
            Token e = advance();
            if (e.text.size() > 3)
                throw Error(ErrorKind::parse_error, "exponent too large", e.span);
            long v = std::stol(e.text);
            if (v > 512)
                throw Error(ErrorKind::parse_error, "exponent too large", e.span);
            (void)c;
            base = base.pow((int)v);
        }
        return base;
    }

    Polynomial atom(Script& s) {
        const Token& t = cur();
        if (t.kind == Tok::number) {
            Token n = advance();
            // integer or rational literal p/q
            if (at(Tok::slash)) {
                advance();
                Token d = expect(Tok::number, "denominator");
                if (d.text.find_first_not_of('0') == std::string::npos)
                    throw Error(ErrorKind::parse_error, "zero denominator", d.span);
                return Polynomial::constant(s.ring,
                                            Rational::from_string(n.text + "/" + d.text));
            }
            return Polynomial::constant(s.ring, Rational::from_string(n.text));
        }
        if (t.kind == Tok::ident) {
            Token n = advance();
            int vi = s.ring->var_index(n.text);
            if (vi >= 0) return Polynomial::variable(s.ring, vi);
            auto it = s.polys.find(n.text);
            if (it != s.polys.end()) return it->second;
            throw Error(ErrorKind::parse_error, "unknown name: " + n.text, n.span);
        }
        if (t.kind == Tok::lparen) {
            advance();
            Polynomial p = expr(s);
            expect(Tok::rparen, "')'");
            return p;
        }
        if (t.kind == Tok::minus) {
            advance();
            return -factor(s);
        }
        throw Error(ErrorKind::parse_error,
                    std::string("expected a polynomial, found '") +
                        (t.kind == Tok::end ? "end of input" : t.text) + "'",
                    t.span);
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

} // namespace

const Polynomial& Script::poly(const std::string& name) const {
    auto it = polys.find(name);
    if (it == polys.end())
        fail(ErrorKind::structural_error, "no polynomial named '" + name + "'");
    return it->second;
}

const Ideal& Script::ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end())
        fail(ErrorKind::structural_error, "no ideal named '" + name + "'");
    return it->second;
}

const PolyMatrix& Script::matrix(const std::string& name) const {
    auto it = matrices.find(name);
    if (it == matrices.end())
        fail(ErrorKind::structural_error, "no matrix named '" + name + "'");
    return it->second;
}

Script parse_script(const std::string& text) { return Parser(text).script(); }

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text).single_expr(ring);
}

std::vector<std::string> sorted_generator_strings(const Ideal& I) {
    std::vector<const Polynomial*> ps;
    for (const Polynomial& g : I.gens()) ps.push_back(&g);
    const MonomialOrder& ord = I.ring()->order();
    std::vector<std::string> out;
    std::stable_sort(ps.begin(), ps.end(), [&](const Polynomial* a, const Polynomial* b) {
        int c = ord.compare(a->leading_monomial(), b->leading_monomial());
        if (c != 0) return c > 0;
        if (a->term_count() != b->term_count()) return a->term_count() < b->term_count();
        return a->to_string() < b->to_string();
    });
    for (const Polynomial* p : ps) out.push_back(p->to_string());
    return out;
}

} // namespace legreuel
