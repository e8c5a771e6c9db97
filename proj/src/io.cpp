#include "forgetcnf/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "forgetcnf/errors.hpp"

namespace forgetcnf {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

Literal parse_literal(const Token& tok, int lineno, AtomTable& atoms) {
    std::string_view s = tok.text;
    bool positive = true;
    if (!s.empty() && (s[0] == '-' || s[0] == '~')) {
        positive = false;
        s.remove_prefix(1);
    }
    if (s.empty() || !is_ident_start(s[0]) ||
        !std::all_of(s.begin() + 1, s.end(), is_ident_char)) {
        throw parse_error(lineno, tok.column, "malformed literal '" + tok.text + "'");
    }
    return {atoms.intern(std::string(s)), positive};
}

}  // namespace

InputDocument parse_named_text(const std::string& text, bool dnf) {
    InputDocument doc;
    doc.kind = dnf ? InputDocument::Kind::Dnf : InputDocument::Kind::Cnf;
    doc.format = InputDocument::Format::NamedText;

    std::vector<Clause> clauses;
    std::vector<Term> terms;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize_line(line);
        if (tokens.empty() || tokens.front().text.starts_with('#')) continue;
        if (tokens.size() == 1 && tokens.front().text == "_|_") {
            if (dnf) {
                terms.push_back(Term());
            } else {
                clauses.push_back(Clause());
            }
            continue;
        }
        std::vector<Literal> lits;
        for (const Token& tok : tokens) {
            lits.push_back(parse_literal(tok, lineno, doc.atoms));
        }
        if (dnf) {
            auto t = Term::normalize(lits);
            if (!t) {
                throw parse_error(lineno, 1,
                                  "term contains a complementary literal pair");
            }
            terms.push_back(std::move(*t));
        } else {
            auto c = Clause::normalize(lits);
            if (!c) {
                doc.warnings.push_back("line " + std::to_string(lineno) +
                                       ": tautologous clause dropped");
                continue;
            }
            clauses.push_back(std::move(*c));
        }
    }
    doc.cnf = CnfTheory(std::move(clauses));
    doc.dnf = DnfTheory(std::move(terms));
    return doc;
}

InputDocument parse_dimacs(const std::string& text) {
    InputDocument doc;
    doc.format = InputDocument::Format::Dimacs;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long nvars = -1, nclauses = -1;
    std::vector<Clause> clauses;
    std::vector<Literal> current;
    bool clause_open = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize_line(line);
        if (tokens.empty() || tokens.front().text == "c") continue;
        if (tokens.front().text == "p") {
            if (tokens.size() != 4 || tokens[1].text != "cnf") {
                throw parse_error(lineno, 1, "malformed problem header");
            }
            try {
                nvars = std::stol(tokens[2].text);
                nclauses = std::stol(tokens[3].text);
            } catch (const std::exception&) {
                throw parse_error(lineno, 1, "malformed problem header");
            }
            continue;
        }
        if (nvars < 0) {
            throw parse_error(lineno, tokens.front().column,
                              "clause before the 'p cnf' header");
        }
        for (const Token& tok : tokens) {
            long value;
            auto [ptr, ec] = std::from_chars(
                tok.text.data(), tok.text.data() + tok.text.size(), value);
            if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
                throw parse_error(lineno, tok.column,
                                  "malformed literal '" + tok.text + "'");
            }
            if (value == 0) {
                if (current.empty() && !clause_open) {
                    throw parse_error(lineno, tok.column, "zero-length clause");
                }
                auto c = Clause::normalize(current);
                if (!c) {
                    doc.warnings.push_back("line " + std::to_string(lineno) +
                                           ": tautologous clause dropped");
                } else {
                    clauses.push_back(std::move(*c));
                }
                current.clear();
                clause_open = false;
                continue;
            }
            long var = value < 0 ? -value : value;
            if (var > nvars) {
                throw parse_error(lineno, tok.column,
                                  "literal index " + std::to_string(var) +
                                      " exceeds the declared " +
                                      std::to_string(nvars) + " variables");
            }
            AtomId a = doc.atoms.intern("x" + std::to_string(var));
            current.push_back({a, value > 0});
            clause_open = true;
        }
    }
    if (clause_open) {
        throw parse_error(lineno, 1, "unterminated clause at end of input");
    }
    long parsed = static_cast<long>(clauses.size()) +
                  static_cast<long>(doc.warnings.size());
    if (nclauses >= 0 && parsed != nclauses) {
        doc.warnings.push_back("declared " + std::to_string(nclauses) +
                               " clauses but parsed " + std::to_string(parsed));
    }
    doc.cnf = CnfTheory(std::move(clauses));
    return doc;
}

namespace {

std::string literal_text(const Literal& l, const AtomTable& atoms) {
    return (l.positive ? "" : "-") + atoms.name(l.atom);
}

template <class Part>
std::string emit_lines(const std::vector<Part>& parts, const AtomTable& atoms) {
    std::string out;
    for (const Part& part : parts) {
        if (part.empty()) {
            out += "_|_";
        } else {
            bool first = true;
            for (const Literal& l : part.literals()) {
                if (!first) out += ' ';
                out += literal_text(l, atoms);
                first = false;
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string emit_named_text(const CnfTheory& sigma, const AtomTable& atoms) {
    return emit_lines(sigma.clauses(), atoms);
}

std::string emit_named_text(const DnfTheory& delta, const AtomTable& atoms) {
    return emit_lines(delta.terms(), atoms);
}

std::string emit_dimacs(const CnfTheory& sigma, const AtomTable& atoms) {
    // Keep "x<i>" names from a DIMACS source when present, otherwise number
    // the signature in canonical order.
    auto sig = sigma.signature();
    std::vector<long> ids(sig.size(), 0);
    bool native = true;
    long maxvar = 0;
    for (size_t i = 0; i < sig.size(); ++i) {
        const std::string& name = atoms.name(sig[i]);
        long value = 0;
        if (name.size() > 1 && name[0] == 'x') {
            auto [ptr, ec] = std::from_chars(name.data() + 1,
                                             name.data() + name.size(), value);
            if (ec != std::errc() || ptr != name.data() + name.size() || value <= 0)
                native = false;
        } else {
            native = false;
        }
        ids[i] = value;
    }
    if (!native) {
        for (size_t i = 0; i < sig.size(); ++i) ids[i] = static_cast<long>(i) + 1;
    }
    for (long id : ids) maxvar = std::max(maxvar, id);

    std::string out = "p cnf " + std::to_string(maxvar) + " " +
                      std::to_string(sigma.size()) + "\n";
    for (const Clause& c : sigma.clauses()) {
        for (const Literal& l : c.literals()) {
            auto it = std::lower_bound(sig.begin(), sig.end(), l.atom);
            long id = ids[static_cast<size_t>(it - sig.begin())];
            out += (l.positive ? "" : "-") + std::to_string(id) + " ";
        }
        out += "0\n";
    }
    return out;
}

}  // namespace forgetcnf
