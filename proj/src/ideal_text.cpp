#include "rrc/ideal_text.hpp"

#include <algorithm>
#include <cctype>

namespace rrc {

namespace {

struct Scanner {
    explicit Scanner(const std::string& text) : s(text) {}

    const std::string& s;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }

    char advance() {
        char c = s[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    bool at_ident() const {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string ident() {
        if (!at_ident()) fail("expected an identifier");
        std::string out;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                out.push_back(advance());
            else
                break;
        }
        return out;
    }

    long long uint_value(const char* what) {
        if (peek() == '-') fail(std::string("negative ") + what + " not allowed");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(advance());
        if (digits.size() > 9) fail(std::string(what) + " too large");
        return std::stoll(digits);
    }

    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected '") + c + "' " + what);
        advance();
    }
};

bool valid_var_name(const std::string& n) {
    if (n.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_') return false;
    for (char c : n)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

std::vector<std::string> parse_var_list(const std::string& text) {
    std::vector<std::string> names;
    Scanner sc(text);
    while (true) {
        sc.skip_ws();
        if (!sc.at_ident()) sc.fail("expected a variable name");
        names.push_back(sc.ident());
        if (!valid_var_name(names.back())) sc.fail("invalid variable name");
        if (std::count(names.begin(), names.end(), names.back()) > 1)
            sc.fail("duplicate variable name '" + names.back() + "'");
        sc.skip_ws();
        if (sc.eof()) break;
        sc.expect(',', "between variable names");
    }
    return names;
}

MonomialIdeal parse_poly_ideal(const std::vector<std::string>& vars, const std::string& text) {
    const int n = static_cast<int>(vars.size());
    Scanner sc(text);
    std::vector<ExpVec> gens;

    auto parse_factor_into = [&](ExpVec& e) {
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            int fl = sc.line, fc = sc.col;
            long long v = sc.uint_value("numeric factor");
            if (v != 1) throw ParseError("numeric factor must be 1", fl, fc);
            return;
        }
        int vl = sc.line, vc = sc.col;
        std::string name = sc.ident();
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", vl, vc);
        long long exp = 1;
        if (sc.peek() == '^') {
            sc.advance();
            exp = sc.uint_value("exponent");
        }
        e[static_cast<std::size_t>(it - vars.begin())] += exp;
    };

    while (true) {
        sc.skip_ws();
        if (!sc.at_ident() && !std::isdigit(static_cast<unsigned char>(sc.peek())))
            sc.fail(gens.empty() ? "empty generator list" : "expected a generator");
        ExpVec e(static_cast<std::size_t>(n), 0);
        parse_factor_into(e);
        while (true) {
            std::size_t save_pos = sc.pos;
            int save_line = sc.line, save_col = sc.col;
            sc.skip_ws();
            if (sc.peek() == '*') {
                sc.advance();
                sc.skip_ws();
                parse_factor_into(e);
            } else if (sc.at_ident() || std::isdigit(static_cast<unsigned char>(sc.peek()))) {
                parse_factor_into(e);  // juxtaposition
            } else {
                sc.pos = save_pos;
                sc.line = save_line;
                sc.col = save_col;
                break;
            }
        }
        gens.push_back(std::move(e));
        sc.skip_ws();
        if (sc.eof()) break;
        sc.expect(',', "between generators");
    }
    return MonomialIdeal::make(n, std::move(gens));
}

ValueGroup parse_group(const std::string& text) {
    Scanner sc(text);
    sc.skip_ws();
    if (sc.ident() != "lex") sc.fail("expected 'lex(...)'");
    sc.skip_ws();
    sc.expect('(', "after 'lex'");
    std::vector<Component> comps;
    while (true) {
        sc.skip_ws();
        int cl = sc.line, cc = sc.col;
        std::string name = sc.ident();
        if (name == "Z")
            comps.push_back(Component::discrete);
        else if (name == "Q")
            comps.push_back(Component::dense);
        else
            throw ParseError("component must be Z or Q", cl, cc);
        sc.skip_ws();
        if (sc.peek() == ',') {
            sc.advance();
            continue;
        }
        sc.expect(')', "to close the component list");
        break;
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after group");
    return ValueGroup(std::move(comps));
}

namespace {

Rational parse_rational(Scanner& sc) {
    int rl = sc.line, rc = sc.col;
    std::string tok;
    if (sc.peek() == '-' || sc.peek() == '+') tok.push_back(sc.advance());
    while (!sc.eof() &&
           (std::isdigit(static_cast<unsigned char>(sc.peek())) || sc.peek() == '/'))
        tok.push_back(sc.advance());
    try {
        return Rational::parse(tok);
    } catch (const std::invalid_argument&) {
        throw ParseError("expected a rational number", rl, rc);
    }
}

}  // namespace

CutIdeal parse_cut(const ValueGroup& g, const std::string& text) {
    Scanner sc(text);
    sc.skip_ws();
    int kl = sc.line, kc = sc.col;
    std::string kw = sc.ident();
    CutKind kind;
    if (kw == "ge")
        kind = CutKind::ge;
    else if (kw == "gt")
        kind = CutKind::gt;
    else
        throw ParseError("cut must start with 'ge' or 'gt'", kl, kc);

    sc.skip_ws();
    int ml = sc.line, mc = sc.col;
    if (sc.ident() != "m") throw ParseError("expected 'm=<int>'", ml, mc);
    sc.expect('=', "after 'm'");
    long long m = sc.uint_value("prefix length");
    if (m < 1 || m > g.rank())
        throw ParseError("prefix length out of range for this group", ml, mc);

    sc.skip_ws();
    int rl = sc.line, rc = sc.col;
    if (sc.ident() != "rho") throw ParseError("expected 'rho=<q1,...,qm>'", rl, rc);
    sc.expect('=', "after 'rho'");
    std::vector<Rational> rho;
    while (true) {
        sc.skip_ws();
        rho.push_back(parse_rational(sc));
        sc.skip_ws();
        if (sc.peek() == ',') {
            sc.advance();
            continue;
        }
        break;
    }
    if (static_cast<long long>(rho.size()) != m)
        throw ParseError("rho must list exactly m entries", rl, rc);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after cut");
    return CutIdeal::make(g, kind, static_cast<int>(m), std::move(rho));
}

std::string format_monomial(const std::vector<std::string>& vars, const ExpVec& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_poly_ideal(const std::vector<std::string>& vars, const MonomialIdeal& i) {
    std::string out;
    for (const auto& g : i.gens()) {
        if (!out.empty()) out += ", ";
        out += format_monomial(vars, g);
    }
    return out;
}

std::string format_fractional(const std::vector<std::string>& vars,
                              const FractionalMonomialIdeal& f) {
    if (total_degree(f.denominator()) == 0) return format_poly_ideal(vars, f.numerator());
    return "(" + format_poly_ideal(vars, f.numerator()) + ") / " +
           format_monomial(vars, f.denominator());
}

std::string format_group(const ValueGroup& g) {
    std::string out = "lex(";
    for (int j = 1; j <= g.rank(); ++j) {
        if (j > 1) out += ",";
        out += g.component(j) == Component::discrete ? "Z" : "Q";
    }
    return out + ")";
}

std::string format_cut(const CutIdeal& c) {
    std::string out = c.kind() == CutKind::ge ? "ge" : "gt";
    out += " m=" + std::to_string(c.prefix_len()) + " rho=";
    for (int j = 0; j < c.prefix_len(); ++j) {
        if (j > 0) out += ",";
        out += c.rho()[static_cast<std::size_t>(j)].str();
    }
    return out;
}

std::vector<std::string> default_var_names(int n) {
    static const char* small[] = {"x", "y", "z"};
    std::vector<std::string> names;
    if (n <= 3) {
        for (int i = 0; i < n; ++i) names.emplace_back(small[i]);
    } else {
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    return names;
}

std::string replay_poly(const std::vector<std::string>& vars, const MonomialIdeal& i) {
    std::string vs;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (k) vs += ",";
        vs += vars[k];
    }
    return "--vars " + vs + " --ideal \"" + format_poly_ideal(vars, i) + "\"";
}

std::string replay_val(const CutIdeal& c) {
    return "--group \"" + format_group(c.group()) + "\" --ideal \"" + format_cut(c) + "\"";
}

}  // namespace rrc
