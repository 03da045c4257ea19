#ifndef LEGREUEL_PARSER_HPP
#define LEGREUEL_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legreuel/matrix.hpp"
#include "legreuel/stdbasis.hpp"

namespace legreuel {

// Command argument as written, plus whatever it evaluated to. A bare
// identifier names a declared object; anything else must evaluate as a
// polynomial expression over the active ring.
struct CmdArg {
    std::string text;
    Span span;
    std::optional<std::string> name;
    std::optional<Polynomial> value;
    std::optional<long> integer;
};

struct Command {
    std::string name;
    Span span;
    std::vector<CmdArg> args;
};

// Result of parsing a script: one ring, named objects, command statements in
// order. Declarations are evaluated during parsing, so use-before-declare
// fails with a positioned error.
struct Script {
    RingPtr ring;
    std::map<std::string, Polynomial> polys;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, PolyMatrix> matrices;
    std::vector<Command> commands;

    const Polynomial& poly(const std::string& name) const;
    const Ideal& ideal(const std::string& name) const;
    const PolyMatrix& matrix(const std::string& name) const;
    bool has_poly(const std::string& name) const { return polys.count(name) > 0; }
    bool has_ideal(const std::string& name) const { return ideals.count(name) > 0; }
    bool has_matrix(const std::string& name) const { return matrices.count(name) > 0; }
};

Script parse_script(const std::string& text);

// standalone polynomial expression over a given ring
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// generators printed canonically: leading monomials descending, then term
// count, then text
std::vector<std::string> sorted_generator_strings(const Ideal& I);

} // namespace legreuel

#endif
