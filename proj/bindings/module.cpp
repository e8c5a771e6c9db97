#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "forgetcnf/errors.hpp"
#include "forgetcnf/fragments.hpp"
#include "forgetcnf/forgetting.hpp"
#include "forgetcnf/io.hpp"
#include "forgetcnf/reasoning.hpp"
#include "forgetcnf/resolution.hpp"
#include "forgetcnf/sat.hpp"

namespace py = pybind11;
using namespace forgetcnf;

namespace {

// The Python surface works on the named-text format: one clause (or term)
// per line, '-' negation, '#' comments, `_|_` for the empty clause.

InputDocument parse(const std::string& text, bool dnf = false) {
    return parse_named_text(text, dnf);
}

std::vector<AtomId> intern_all(const std::vector<std::string>& names,
                               AtomTable& atoms) {
    std::vector<AtomId> out;
    for (const std::string& n : names) out.push_back(atoms.intern(n));
    return out;
}

std::vector<std::string> atom_names(const std::vector<AtomId>& ids,
                                    const AtomTable& atoms) {
    std::vector<std::string> out;
    for (AtomId a : ids) out.push_back(atoms.name(a));
    return out;
}

std::string py_forget(const std::string& text,
                      const std::vector<std::string>& atoms, bool dnf,
                      bool prune_entailed, bool minimize,
                      std::optional<std::vector<std::string>> order) {
    InputDocument doc = parse(text, dnf);
    std::vector<AtomId> v = intern_all(atoms, doc.atoms);
    if (dnf) return emit_named_text(forget_dnf(doc.dnf, v), doc.atoms);
    ForgetOptions opts;
    opts.prune_entailed = prune_entailed;
    opts.minimize_subsumed = minimize;
    if (order) opts.atom_order = intern_all(*order, doc.atoms);
    return emit_named_text(forget_cnf(doc.cnf, v, opts), doc.atoms);
}

std::string py_prime_implicates(const std::string& text) {
    InputDocument doc = parse(text);
    return emit_named_text(prime_implicates(doc.cnf), doc.atoms);
}

std::string py_prime_implicants(const std::string& text) {
    InputDocument doc = parse(text);
    return emit_named_text(prime_implicants(doc.cnf), doc.atoms);
}

py::dict py_classify(const std::string& text, int max_atoms) {
    InputDocument doc = parse(text);
    FragmentReport r = classify(doc.cnf, max_atoms);
    py::dict out;
    out["horn"] = r.horn;
    out["krom"] = r.krom;
    out["renamable_horn"] =
        r.renamable_horn
            ? py::object(py::cast(atom_names(*r.renamable_horn, doc.atoms)))
            : py::object(py::none());
    if (r.q_horn) {
        py::dict qh;
        qh["renaming"] = atom_names(r.q_horn->renaming, doc.atoms);
        qh["q"] = atom_names(r.q_horn->partition.q, doc.atoms);
        qh["h"] = atom_names(r.q_horn->partition.h, doc.atoms);
        out["q_horn"] = qh;
    } else {
        out["q_horn"] = py::none();
    }
    out["double_horn"] = r.double_horn ? py::object(py::cast(*r.double_horn))
                                       : py::object(py::none());
    return out;
}

py::dict py_sat(const std::string& text) {
    InputDocument doc = parse(text);
    SatResult r = dpll_sat(doc.cnf);
    py::dict out;
    out["satisfiable"] = r.satisfiable;
    out["model"] = r.model
                       ? py::object(py::cast(atom_names(r.model->atoms(), doc.atoms)))
                       : py::object(py::none());
    return out;
}

bool py_entails(const std::string& text, const std::string& clause_line) {
    InputDocument lhs = parse(text);
    // Re-intern the clause over the lhs table so names line up.
    InputDocument probe = parse(clause_line);
    std::vector<Literal> lits;
    for (const Clause& c : probe.cnf.clauses())
        for (const Literal& l : c.literals())
            lits.push_back({lhs.atoms.intern(probe.atoms.name(l.atom)), l.positive});
    auto c = Clause::normalize(lits);
    if (!c) return true;
    return entails(lhs.cnf, *c);
}

py::dict verdict_dict(const Verdict& v, const AtomTable& atoms) {
    py::dict out;
    out["answer"] = v.answer;
    out["countermodel"] =
        v.countermodel
            ? py::object(py::cast(atom_names(v.countermodel->atoms(), atoms)))
            : py::object(py::none());
    if (v.witness_clause) {
        std::vector<std::string> lits;
        for (const Literal& l : v.witness_clause->literals())
            lits.push_back((l.positive ? "" : "-") + atoms.name(l.atom));
        out["witness_clause"] = lits;
    } else {
        out["witness_clause"] = py::none();
    }
    return out;
}

TaskKind task_from_name(const std::string& name) {
    if (name == "var-ind") return TaskKind::VAR_IND;
    if (name == "var-weak") return TaskKind::VAR_WEAK;
    if (name == "var-strong") return TaskKind::VAR_STRONG;
    if (name == "var-match") return TaskKind::VAR_MATCH;
    if (name == "var-ent") return TaskKind::VAR_ENT;
    if (name == "var-eq") return TaskKind::VAR_EQ;
    throw precondition_error("unknown task '" + name + "'");
}

py::dict py_decide(const std::string& task, const std::string& pi_text,
                   std::optional<std::string> sigma_text,
                   const std::vector<std::string>& atoms) {
    InputDocument doc = parse(pi_text);
    std::optional<CnfTheory> sigma;
    if (sigma_text) {
        InputDocument second = parse(*sigma_text);
        std::vector<Clause> clauses;
        for (const Clause& c : second.cnf.clauses()) {
            std::vector<Literal> lits;
            for (const Literal& l : c.literals())
                lits.push_back({doc.atoms.intern(second.atoms.name(l.atom)),
                                l.positive});
            clauses.push_back(*Clause::normalize(lits));
        }
        sigma = CnfTheory(std::move(clauses));
    }
    std::vector<AtomId> v = intern_all(atoms, doc.atoms);
    return verdict_dict(decide(task_from_name(task), doc.cnf, sigma, v),
                        doc.atoms);
}

std::string py_snc(const std::string& text, const std::string& target,
                   const std::vector<std::string>& over) {
    InputDocument doc = parse(text);
    AtomId q = doc.atoms.intern(target);
    return emit_named_text(snc(doc.cnf, q, intern_all(over, doc.atoms)),
                           doc.atoms);
}

std::string py_wsc(const std::string& text, const std::string& target,
                   const std::vector<std::string>& over) {
    InputDocument doc = parse(text);
    AtomId q = doc.atoms.intern(target);
    return emit_named_text(wsc(doc.cnf, q, intern_all(over, doc.atoms)),
                           doc.atoms);
}

py::dict py_defines(const std::string& text, const std::string& target,
                    const std::vector<std::string>& over) {
    InputDocument doc = parse(text);
    DefinabilityResult r =
        defines(doc.cnf, doc.atoms.intern(target), intern_all(over, doc.atoms));
    py::dict out;
    out["defines"] = r.defines;
    out["countermodel"] =
        r.countermodel
            ? py::object(py::cast(atom_names(r.countermodel->atoms(), doc.atoms)))
            : py::object(py::none());
    out["strongest"] = r.strongest
                           ? py::object(py::cast(emit_named_text(*r.strongest, doc.atoms)))
                           : py::object(py::none());
    out["weakest"] = r.weakest
                         ? py::object(py::cast(emit_named_text(*r.weakest, doc.atoms)))
                         : py::object(py::none());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "variable forgetting and fragment analysis for CNF theories";

    py::register_exception<precondition_error>(m, "PreconditionError",
                                               PyExc_ValueError);
    py::register_exception<resource_limit_error>(m, "ResourceLimitError",
                                                 PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    m.def("forget", &py_forget, py::arg("theory"), py::arg("atoms"),
          py::arg("dnf") = false, py::arg("prune_entailed") = false,
          py::arg("minimize") = false, py::arg("order") = py::none(),
          "Forget a set of atoms from a named-text theory.");
    m.def("prime_implicates", &py_prime_implicates, py::arg("theory"));
    m.def("prime_implicants", &py_prime_implicants, py::arg("theory"));
    m.def("classify", &py_classify, py::arg("theory"),
          py::arg("max_atoms") = kDefaultModelAtomLimit);
    m.def("sat", &py_sat, py::arg("theory"));
    m.def("entails", &py_entails, py::arg("theory"), py::arg("clause"));
    m.def("decide", &py_decide, py::arg("task"), py::arg("pi"),
          py::arg("sigma") = py::none(), py::arg("atoms") = std::vector<std::string>{});
    m.def("snc", &py_snc, py::arg("theory"), py::arg("target"), py::arg("over"));
    m.def("wsc", &py_wsc, py::arg("theory"), py::arg("target"), py::arg("over"));
    m.def("defines", &py_defines, py::arg("theory"), py::arg("target"),
          py::arg("over"));
}
