#pragma once

#include <string>

#include "forgetcnf/atoms.hpp"
#include "forgetcnf/theory.hpp"

namespace forgetcnf {

struct InputDocument {
    enum class Kind { Cnf, Dnf };
    enum class Format { NamedText, Dimacs };

    Kind kind = Kind::Cnf;
    Format format = Format::NamedText;
    CnfTheory cnf;
    DnfTheory dnf;  // used when kind == Dnf
    AtomTable atoms;
    std::vector<std::string> warnings;
};

// One clause (or term) per line, whitespace-separated literals; '-' or '~'
// negation prefix, '#' comments, `_|_` for the empty clause. Tautologous
// lines are dropped with a warning; a contradictory term is a parse error.
InputDocument parse_named_text(const std::string& text, bool dnf = false);

// Standard DIMACS CNF. Atom i is named "x<i>". A clause-count mismatch is a
// warning; an out-of-range or missing literal is an error.
InputDocument parse_dimacs(const std::string& text);

std::string emit_named_text(const CnfTheory& sigma, const AtomTable& atoms);
std::string emit_named_text(const DnfTheory& delta, const AtomTable& atoms);
std::string emit_dimacs(const CnfTheory& sigma, const AtomTable& atoms);

}  // namespace forgetcnf
