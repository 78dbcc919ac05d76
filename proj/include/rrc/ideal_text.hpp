#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rrc/cut_ideal.hpp"
#include "rrc/fractional_ideal.hpp"
#include "rrc/monomial_ideal.hpp"

namespace rrc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line),
          col(col),
          message(msg) {}
    int line;
    int col;
    std::string message;
};

// "x,y" -> {"x","y"}; names must be distinct identifiers.
std::vector<std::string> parse_var_list(const std::string& text);

// Grammar: ideal := gen (',' gen)*; gen := factor (('*'|ws) factor)*;
// factor := var ('^' uint)? | '1'. Juxtaposition multiplies.
MonomialIdeal parse_poly_ideal(const std::vector<std::string>& vars, const std::string& text);

// lex(C1,...,Ck) with Ci in {Z, Q}.
ValueGroup parse_group(const std::string& text);

// ge m=<int> rho=<q1,...,qm> / gt ...; canonicalized on construction.
CutIdeal parse_cut(const ValueGroup& g, const std::string& text);

std::string format_monomial(const std::vector<std::string>& vars, const ExpVec& e);
std::string format_poly_ideal(const std::vector<std::string>& vars, const MonomialIdeal& i);
std::string format_fractional(const std::vector<std::string>& vars,
                              const FractionalMonomialIdeal& f);
std::string format_group(const ValueGroup& g);
std::string format_cut(const CutIdeal& c);

// x,y,z for small ranks, x1..xn beyond.
std::vector<std::string> default_var_names(int n);

// Replayable command-line fragments for counterexample reports.
std::string replay_poly(const std::vector<std::string>& vars, const MonomialIdeal& i);
std::string replay_val(const CutIdeal& c);

}  // namespace rrc
