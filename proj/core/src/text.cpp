#include "sl2a/text.hpp"

#include <cctype>
#include <sstream>

namespace sl2a {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw SyntaxError(std::string("expected '") + c + "'", pos);
    }
    bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !ident_start(s[pos]))
            throw SyntaxError("expected identifier", pos);
        while (pos < s.size() &&
               (ident_start(s[pos]) || std::isdigit(static_cast<unsigned char>(s[pos]))))
            ++pos;
        return s.substr(start, pos - start);
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected integer", pos);
        return Int(s.substr(start, pos - start));
    }
    bool at_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
};

struct ExprParser {
    Lexer& lx;
    const Rs& rs;

    RingElem parse() {
        RingElem e = additive();
        if (!lx.eof()) throw SyntaxError("trailing input", lx.pos);
        return e;
    }

    RingElem additive() {
        RingElem acc = multiplicative();
        while (true) {
            if (lx.accept('+'))
                acc = acc + multiplicative();
            else if (lx.accept('-'))
                acc = acc - multiplicative();
            else
                return acc;
        }
    }

    RingElem multiplicative() {
        RingElem acc = unary();
        while (true) {
            if (lx.accept('*'))
                acc = acc * unary();
            else if (lx.accept('/'))
                acc = acc / unary();
            else
                return acc;
        }
    }

    RingElem unary() {
        bool neg = false;
        while (true) {
            if (lx.accept('-'))
                neg = !neg;
            else if (lx.accept('+'))
                ;
            else
                break;
        }
        RingElem e = power();
        return neg ? -e : e;
    }

    RingElem power() {
        RingElem base = primary();
        while (lx.accept('^')) {
            if (!lx.at_digit())
                throw SyntaxError("exponent must be a nonnegative integer literal "
                                  "(write inverses as divisions)",
                                  lx.pos);
            Int e = lx.integer();
            if (e > 1u << 20) throw SyntaxError("exponent too large", lx.pos);
            base = elem_pow(base, static_cast<long long>(e));
        }
        return base;
    }

    RingElem primary() {
        if (lx.accept('(')) {
            RingElem e = additive();
            lx.expect(')');
            return e;
        }
        if (lx.at_digit()) return elem_int(rs, lx.integer());
        size_t at = lx.pos;
        std::string name = lx.ident();
        int v = var_index(*rs, name);
        if (v < 0) throw UnknownVariable("unknown variable '" + name + "' at byte " +
                                         std::to_string(at));
        return elem_var(rs, v);
    }
};

RingElem parse_subexpr(Lexer& lx, const Rs& rs) {
    ExprParser p{lx, rs};
    return p.additive();
}

} // namespace

Rs parse_ring_spec(const std::string& text) {
    Lexer lx{text};
    std::string base = lx.ident();
    Base b;
    long long q = 0;
    if (base == "Z") {
        b = Base::Integers;
    } else if (base.size() > 1 && base[0] == 'F') {
        b = Base::Prime;
        for (size_t i = 1; i < base.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(base[i])))
                throw SyntaxError("bad base '" + base + "'", lx.pos);
        q = std::stoll(base.substr(1));
        if (!is_prime_integer(Int(q)))
            throw UnsupportedBase("F_q base requires q prime, got q=" + std::to_string(q));
    } else {
        throw SyntaxError("base must be Z or F<q>, got '" + base + "'", lx.pos);
    }
    std::vector<std::string> vars;
    if (lx.accept('[')) {
        do {
            std::string v = lx.ident();
            if (v == "loc") throw SyntaxError("'loc' is reserved", lx.pos);
            for (const auto& w : vars)
                if (w == v) throw SyntaxError("duplicate variable '" + v + "'", lx.pos);
            vars.push_back(v);
        } while (lx.accept(','));
        lx.expect(']');
    }
    Rs plain = make_ring(b, q, vars);
    std::vector<Poly> inverted;
    if (!lx.eof()) {
        size_t at = lx.pos;
        std::string kw = lx.ident();
        if (kw != "loc") throw SyntaxError("expected 'loc'", at);
        lx.expect('(');
        do {
            RingElem e = parse_subexpr(lx, plain);
            if (e.is_zero()) throw ZeroInverted("inverted element is zero");
            auto p = in_unlocalized(e);
            if (!p)
                throw SyntaxError("inverted element must be a polynomial", lx.pos);
            inverted.push_back(*p);
        } while (lx.accept(','));
        lx.expect(')');
    }
    if (!lx.eof()) throw SyntaxError("trailing input", lx.pos);
    return make_ring(b, q, vars, inverted);
}

RingElem parse_elem(const std::string& text, const Rs& rs) {
    Lexer lx{text};
    ExprParser p{lx, rs};
    return p.parse();
}

Mat2 parse_matrix(const std::string& text, const Rs& rs) {
    Lexer lx{text};
    lx.expect('[');
    lx.expect('[');
    RingElem a11 = parse_subexpr(lx, rs);
    lx.expect(',');
    RingElem a12 = parse_subexpr(lx, rs);
    lx.expect(']');
    lx.expect(',');
    lx.expect('[');
    RingElem a21 = parse_subexpr(lx, rs);
    lx.expect(',');
    RingElem a22 = parse_subexpr(lx, rs);
    lx.expect(']');
    lx.expect(']');
    if (!lx.eof()) throw SyntaxError("trailing input", lx.pos);
    return Mat2{a11, a12, a21, a22};
}

TreeVertex parse_vertex(const std::string& text, const Rs& rs) {
    Lexer lx{text};
    lx.expect('(');
    bool neg = lx.accept('-');
    Int n = lx.integer();
    lx.expect(',');
    RingElem u = parse_subexpr(lx, rs);
    lx.expect(')');
    if (!lx.eof()) throw SyntaxError("trailing input", lx.pos);
    long long nn = static_cast<long long>(n);
    return TreeVertex{neg ? -nn : nn, u};
}

std::string format_poly(const RingSpec& rs, const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms) {
        Int c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> parts;
        bool all_zero = true;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            all_zero = false;
            if (t.mono[i] == 1)
                parts.push_back(rs.vars[i]);
            else
                parts.push_back(rs.vars[i] + "^" + std::to_string(t.mono[i]));
        }
        if (c != 1 || all_zero) {
            os << c.str();
            if (!all_zero) os << "*";
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

std::string format_elem(const RingElem& e) {
    const RingSpec& rs = *e.rs;
    Poly one = poly_one(rs);
    if (poly_eq(e.den, one)) return format_poly(rs, e.num);
    auto wrap_num = [&](const Poly& p) {
        std::string s = format_poly(rs, p);
        return p.terms.size() == 1 ? s : "(" + s + ")";
    };
    auto wrap_den = [&](const Poly& p) {
        std::string s = format_poly(rs, p);
        // a bare denominator must be a single factor: / and * share precedence
        if (p.terms.size() == 1 && s.find('*') == std::string::npos && s[0] != '-') return s;
        return "(" + s + ")";
    };
    return wrap_num(e.num) + "/" + wrap_den(e.den);
}

std::string format_matrix(const Mat2& m) {
    return "[[" + format_elem(m.a11) + ", " + format_elem(m.a12) + "], [" +
           format_elem(m.a21) + ", " + format_elem(m.a22) + "]]";
}

std::string format_ring_spec(const RingSpec& rs) {
    std::ostringstream os;
    if (rs.base == Base::Integers)
        os << "Z";
    else
        os << "F" << rs.prime_q;
    if (!rs.vars.empty()) {
        os << "[";
        for (size_t i = 0; i < rs.vars.size(); ++i) {
            if (i) os << ",";
            os << rs.vars[i];
        }
        os << "]";
    }
    if (!rs.inverted.empty()) {
        os << " loc(";
        for (size_t i = 0; i < rs.inverted.size(); ++i) {
            if (i) os << ",";
            os << format_poly(rs, rs.inverted[i]);
        }
        os << ")";
    }
    return os.str();
}

std::string format_vertex(const TreeVertex& w) {
    return "(" + std::to_string(w.n) + ", " + format_elem(w.u) + ")";
}

std::string format_side(SideClass c) {
    switch (c) {
    case SideClass::InU: return "InU";
    case SideClass::InAOnly: return "InAOnly";
    case SideClass::InBOnly: return "InBOnly";
    case SideClass::Neither: return "Neither";
    }
    return "?";
}

std::string format_word(const AmalgamWord& w) {
    std::ostringstream os;
    for (const auto& [side, m] : w.factors)
        os << (side == Side::A ? "A: " : "B: ") << format_matrix(m) << "\n";
    os << "U: " << format_matrix(w.trailing) << "\n";
    return os.str();
}

std::string dot_neighborhood(const TreeVertex& center, int radius, const Valuation& v) {
    if (radius < 0 || radius > 4) throw Error("radius must be between 0 and 4");
    std::vector<TreeVertex> verts{center};
    std::vector<std::pair<size_t, size_t>> edges;
    size_t frontier_begin = 0;
    for (int r = 0; r < radius; ++r) {
        size_t frontier_end = verts.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            NeighborList nb = neighbors(verts[i], v, 2);
            for (const auto& w : nb.list) {
                size_t found = verts.size();
                for (size_t j = 0; j < verts.size(); ++j) {
                    if (vertex_eq(verts[j], w, v)) {
                        found = j;
                        break;
                    }
                }
                if (found == verts.size()) verts.push_back(w);
                bool dup = false;
                for (auto& [a, b] : edges)
                    if ((a == i && b == found) || (a == found && b == i)) dup = true;
                if (!dup) edges.emplace_back(i, found);
            }
        }
        frontier_begin = frontier_end;
    }
    std::ostringstream os;
    os << "graph bt_tree {\n";
    for (size_t i = 0; i < verts.size(); ++i)
        os << "  v" << i << " [label=\"" << format_vertex(verts[i]) << "\"];\n";
    for (auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace sl2a
