#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "forgetcnf/errors.hpp"
#include "forgetcnf/fragments.hpp"
#include "forgetcnf/forgetting.hpp"
#include "forgetcnf/io.hpp"
#include "forgetcnf/reasoning.hpp"
#include "forgetcnf/resolution.hpp"
#include "json.hpp"

namespace {

using namespace forgetcnf;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// DIMACS is recognized by its "p cnf <vars> <clauses>" header anywhere in the
// input; named-text lines can legitimately start with atoms named p or c.
bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    bool after_p = false, after_cnf = false;
    while (in >> word) {
        if (word == "p") {
            after_p = true;
            after_cnf = false;
        } else if (after_p && word == "cnf") {
            after_cnf = true;
            after_p = false;
        } else if (after_cnf) {
            return !word.empty() &&
                   std::all_of(word.begin(), word.end(),
                               [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        } else {
            after_p = false;
        }
    }
    return false;
}

InputDocument load(const std::string& path, bool dnf) {
    std::string text = read_input(path);
    InputDocument doc = looks_like_dimacs(text) ? parse_dimacs(text)
                                                : parse_named_text(text, dnf);
    for (const std::string& w : doc.warnings) {
        std::cerr << "warning: " << path << ": " << w << "\n";
    }
    return doc;
}

std::vector<AtomId> intern_atom_list(const std::string& csv, AtomTable& atoms) {
    std::vector<AtomId> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(atoms.intern(item));
    }
    return out;
}

json theory_json(const CnfTheory& sigma, const AtomTable& atoms) {
    json clauses = json::array();
    for (const Clause& c : sigma.clauses()) {
        json lits = json::array();
        for (const Literal& l : c.literals()) {
            lits.push_back((l.positive ? "" : "-") + atoms.name(l.atom));
        }
        clauses.push_back(lits);
    }
    return json{{"clauses", clauses}};
}

json dnf_json(const DnfTheory& delta, const AtomTable& atoms) {
    json terms = json::array();
    for (const Term& t : delta.terms()) {
        json lits = json::array();
        for (const Literal& l : t.literals()) {
            lits.push_back((l.positive ? "" : "-") + atoms.name(l.atom));
        }
        terms.push_back(lits);
    }
    return json{{"terms", terms}};
}

json atom_list_json(const std::vector<AtomId>& ids, const AtomTable& atoms) {
    json out = json::array();
    for (AtomId a : ids) out.push_back(atoms.name(a));
    return out;
}

std::string atom_list_text(const std::vector<AtomId>& ids, const AtomTable& atoms) {
    std::string out;
    for (AtomId a : ids) {
        if (!out.empty()) out += ' ';
        out += atoms.name(a);
    }
    return out.empty() ? "(none)" : out;
}

void print_theory(const CnfTheory& sigma, const InputDocument& doc,
                  const std::string& format) {
    if (format == "json") {
        std::cout << theory_json(sigma, doc.atoms).dump() << "\n";
    } else if (doc.format == InputDocument::Format::Dimacs) {
        std::cout << emit_dimacs(sigma, doc.atoms);
    } else {
        std::cout << emit_named_text(sigma, doc.atoms);
    }
}

void print_dnf(const DnfTheory& delta, const InputDocument& doc,
               const std::string& format) {
    if (format == "json") {
        std::cout << dnf_json(delta, doc.atoms).dump() << "\n";
    } else {
        std::cout << emit_named_text(delta, doc.atoms);
    }
}

json certificate_json(const Verdict& v, const AtomTable& atoms) {
    if (v.answer) return nullptr;
    json cert = json::object();
    if (v.countermodel) {
        cert["countermodel"] = atom_list_json(v.countermodel->atoms(), atoms);
    }
    if (v.witness_clause) {
        json lits = json::array();
        for (const Literal& l : v.witness_clause->literals()) {
            lits.push_back((l.positive ? "" : "-") + atoms.name(l.atom));
        }
        cert["witness_clause"] = lits;
    }
    return cert;
}

int print_verdict(const Verdict& v, const AtomTable& atoms,
                  const std::string& format) {
    if (format == "json") {
        std::cout << json{{"answer", v.answer},
                          {"certificate", certificate_json(v, atoms)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "answer: " << (v.answer ? "true" : "false") << "\n";
        if (v.countermodel) {
            std::cout << "countermodel: "
                      << atom_list_text(v.countermodel->atoms(), atoms) << "\n";
        }
        if (v.witness_clause) {
            std::string clause;
            for (const Literal& l : v.witness_clause->literals()) {
                if (!clause.empty()) clause += ' ';
                clause += (l.positive ? "" : "-") + atoms.name(l.atom);
            }
            std::cout << "witness clause: " << (clause.empty() ? "_|_" : clause)
                      << "\n";
        }
    }
    return v.answer ? kExitTrue : kExitFalse;
}

std::optional<TaskKind> task_from_name(const std::string& name) {
    if (name == "var-ind") return TaskKind::VAR_IND;
    if (name == "var-weak") return TaskKind::VAR_WEAK;
    if (name == "var-strong") return TaskKind::VAR_STRONG;
    if (name == "var-match") return TaskKind::VAR_MATCH;
    if (name == "var-ent") return TaskKind::VAR_ENT;
    if (name == "var-eq") return TaskKind::VAR_EQ;
    return std::nullopt;
}

struct Options {
    std::vector<std::string> paths;
    std::string forget_csv;
    std::string task;
    std::string target;
    std::string over_csv;
    std::string format = "text";
    bool dnf = false;
    bool prune_entailed = false;
    bool minimize = false;
    int max_atoms = kDefaultModelAtomLimit;
};

int run_classify(const Options& opt) {
    InputDocument doc = load(opt.paths.at(0), false);
    FragmentReport report = classify(doc.cnf, opt.max_atoms);
    if (opt.format == "json") {
        json j{{"horn", report.horn}, {"krom", report.krom}};
        j["renamable_horn"] =
            report.renamable_horn
                ? json(atom_list_json(*report.renamable_horn, doc.atoms))
                : json(nullptr);
        if (report.q_horn) {
            j["q_horn"] = json{
                {"renaming", atom_list_json(report.q_horn->renaming, doc.atoms)},
                {"q", atom_list_json(report.q_horn->partition.q, doc.atoms)},
                {"h", atom_list_json(report.q_horn->partition.h, doc.atoms)}};
        } else {
            j["q_horn"] = nullptr;
        }
        j["double_horn"] =
            report.double_horn ? json(*report.double_horn) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "horn: " << (report.horn ? "yes" : "no") << "\n";
        std::cout << "krom: " << (report.krom ? "yes" : "no") << "\n";
        if (report.renamable_horn) {
            std::cout << "renamable horn: yes, renaming "
                      << atom_list_text(*report.renamable_horn, doc.atoms) << "\n";
        } else {
            std::cout << "renamable horn: no\n";
        }
        if (report.q_horn) {
            std::cout << "q-horn: yes, renaming "
                      << atom_list_text(report.q_horn->renaming, doc.atoms)
                      << ", Q " << atom_list_text(report.q_horn->partition.q, doc.atoms)
                      << ", H " << atom_list_text(report.q_horn->partition.h, doc.atoms)
                      << "\n";
        } else {
            std::cout << "q-horn: no\n";
        }
        if (report.double_horn) {
            std::cout << "double horn: " << (*report.double_horn ? "yes" : "no")
                      << "\n";
        } else {
            std::cout << "double horn: skipped (model guard)\n";
        }
    }
    return kExitTrue;
}

int run_forget(const Options& opt) {
    InputDocument doc = load(opt.paths.at(0), opt.dnf);
    std::vector<AtomId> v = intern_atom_list(opt.forget_csv, doc.atoms);
    if (doc.kind == InputDocument::Kind::Dnf) {
        print_dnf(forget_dnf(doc.dnf, v), doc, opt.format);
    } else {
        ForgetOptions fo;
        fo.prune_entailed = opt.prune_entailed;
        fo.minimize_subsumed = opt.minimize;
        // The -f list doubles as the unfold order.
        if (!v.empty()) fo.atom_order = v;
        print_theory(forget_cnf(doc.cnf, v, fo), doc, opt.format);
    }
    return kExitTrue;
}

int run_pi(const Options& opt) {
    InputDocument doc = load(opt.paths.at(0), false);
    print_theory(prime_implicates(doc.cnf), doc, opt.format);
    return kExitTrue;
}

int run_ip(const Options& opt) {
    InputDocument doc = load(opt.paths.at(0), false);
    print_dnf(prime_implicants(doc.cnf), doc, opt.format);
    return kExitTrue;
}

int run_check(const Options& opt) {
    auto task = task_from_name(opt.task);
    if (!task) {
        std::cerr << "error: unknown or missing --task\n";
        return kExitUsage;
    }
    bool single = *task == TaskKind::VAR_IND;
    if (opt.paths.size() != (single ? 1u : 2u)) {
        std::cerr << "error: task needs " << (single ? 1 : 2)
                  << " theory file(s)\n";
        return kExitUsage;
    }
    InputDocument doc = load(opt.paths.at(0), false);
    std::optional<CnfTheory> sigma;
    if (!single) {
        // Parse the second theory over the same atom table.
        std::string text = read_input(opt.paths.at(1));
        InputDocument second = looks_like_dimacs(text)
                                   ? parse_dimacs(text)
                                   : parse_named_text(text, false);
        std::vector<Clause> clauses;
        for (const Clause& c : second.cnf.clauses()) {
            std::vector<Literal> lits;
            for (const Literal& l : c.literals()) {
                lits.push_back({doc.atoms.intern(second.atoms.name(l.atom)),
                                l.positive});
            }
            clauses.push_back(*Clause::normalize(lits));
        }
        sigma = CnfTheory(std::move(clauses));
    }
    std::vector<AtomId> v = intern_atom_list(opt.forget_csv, doc.atoms);
    ForgetOptions fo;
    fo.prune_entailed = opt.prune_entailed;
    fo.minimize_subsumed = opt.minimize;
    Verdict verdict = decide(*task, doc.cnf, sigma, v, fo);
    return print_verdict(verdict, doc.atoms, opt.format);
}

int run_snc(const Options& opt) {
    InputDocument doc = load(opt.paths.at(0), false);
    if (opt.target.empty()) {
        std::cerr << "error: --target is required\n";
        return kExitUsage;
    }
    AtomId q = doc.atoms.intern(opt.target);
    std::vector<AtomId> v = intern_atom_list(opt.over_csv, doc.atoms);
    print_theory(snc(doc.cnf, q, v), doc, opt.format);
    return kExitTrue;
}

int run_wsc(const Options& opt) {
    InputDocument doc = load(opt.paths.at(0), false);
    if (opt.target.empty()) {
        std::cerr << "error: --target is required\n";
        return kExitUsage;
    }
    AtomId q = doc.atoms.intern(opt.target);
    std::vector<AtomId> v = intern_atom_list(opt.over_csv, doc.atoms);
    print_dnf(wsc(doc.cnf, q, v), doc, opt.format);
    return kExitTrue;
}

int run_define(const Options& opt) {
    InputDocument doc = load(opt.paths.at(0), false);
    if (opt.target.empty()) {
        std::cerr << "error: --target is required\n";
        return kExitUsage;
    }
    AtomId p = doc.atoms.intern(opt.target);
    std::vector<AtomId> x = intern_atom_list(opt.over_csv, doc.atoms);
    DefinabilityResult r = defines(doc.cnf, p, x);
    if (opt.format == "json") {
        json j{{"answer", r.defines}};
        j["certificate"] =
            r.countermodel
                ? json{{"countermodel",
                        atom_list_json(r.countermodel->atoms(), doc.atoms)}}
                : json(nullptr);
        j["strongest"] =
            r.strongest ? theory_json(*r.strongest, doc.atoms) : json(nullptr);
        j["weakest"] = r.weakest ? dnf_json(*r.weakest, doc.atoms) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "answer: " << (r.defines ? "true" : "false") << "\n";
        if (r.countermodel) {
            std::cout << "countermodel: "
                      << atom_list_text(r.countermodel->atoms(), doc.atoms) << "\n";
        }
        if (r.strongest) {
            std::cout << "strongest definition:\n"
                      << emit_named_text(*r.strongest, doc.atoms);
        }
        if (r.weakest) {
            std::cout << "weakest definition (dnf):\n"
                      << emit_named_text(*r.weakest, doc.atoms);
        }
    }
    return r.defines ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forgetcnf: variable forgetting and fragment analysis for CNF theories"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, int max_paths) {
        sub->add_option("paths", opt.paths, "theory file(s), '-' for stdin")
            ->expected(1, max_paths);
        sub->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-atoms", opt.max_atoms, "model enumeration guard");
    };

    auto* classify_cmd = app.add_subcommand("classify", "fragment classification");
    add_common(classify_cmd, 1);

    auto* forget_cmd = app.add_subcommand("forget", "forget a set of atoms");
    add_common(forget_cmd, 1);
    forget_cmd->add_option("-f,--forget", opt.forget_csv, "atoms to forget (comma-separated)");
    forget_cmd->add_flag("--dnf", opt.dnf, "input is a DNF theory");
    forget_cmd->add_flag("--prune-entailed", opt.prune_entailed,
                         "drop resolvents already entailed");
    forget_cmd->add_flag("--minimize", opt.minimize, "subsumption-minimize the result");

    auto* pi_cmd = app.add_subcommand("pi", "prime implicates");
    add_common(pi_cmd, 1);

    auto* ip_cmd = app.add_subcommand("ip", "prime implicants");
    add_common(ip_cmd, 1);

    auto* check_cmd = app.add_subcommand("check", "knowledge-evolution decision problems");
    add_common(check_cmd, 2);
    check_cmd->add_option("-f,--forget", opt.forget_csv, "atoms to forget");
    check_cmd->add_option("--task", opt.task,
                          "var-eq|var-ind|var-weak|var-strong|var-match|var-ent");
    check_cmd->add_flag("--prune-entailed", opt.prune_entailed,
                        "drop resolvents already entailed");
    check_cmd->add_flag("--minimize", opt.minimize, "subsumption-minimize intermediates");

    auto* snc_cmd = app.add_subcommand("snc", "strongest necessary condition");
    add_common(snc_cmd, 1);
    snc_cmd->add_option("--target", opt.target, "target atom");
    snc_cmd->add_option("--over", opt.over_csv, "condition vocabulary");

    auto* wsc_cmd = app.add_subcommand("wsc", "weakest sufficient condition");
    add_common(wsc_cmd, 1);
    wsc_cmd->add_option("--target", opt.target, "target atom");
    wsc_cmd->add_option("--over", opt.over_csv, "condition vocabulary");

    auto* define_cmd = app.add_subcommand("define", "definability of an atom");
    add_common(define_cmd, 1);
    define_cmd->add_option("--target", opt.target, "atom to define");
    define_cmd->add_option("--over", opt.over_csv, "defining vocabulary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(opt);
        if (forget_cmd->parsed()) return run_forget(opt);
        if (pi_cmd->parsed()) return run_pi(opt);
        if (ip_cmd->parsed()) return run_ip(opt);
        if (check_cmd->parsed()) return run_check(opt);
        if (snc_cmd->parsed()) return run_snc(opt);
        if (wsc_cmd->parsed()) return run_wsc(opt);
        if (define_cmd->parsed()) return run_define(opt);
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
