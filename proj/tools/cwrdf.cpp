#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwrdf/checker.hpp"
#include "cwrdf/errors.hpp"
#include "cwrdf/recognition.hpp"
#include "cwrdf/rdfs.hpp"
#include "cwrdf/sparql.hpp"
#include "cwrdf/turtle.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace cwrdf;

struct RunConfig {
    std::vector<std::string> dataPaths, ontologyPaths, constraintPaths;
    std::string closure = "rdfs";
    bool explicitDomainsRanges = false;
    std::string format = "text";
    std::string out;
    bool bruteForce = false;
    unsigned long long budget = 1u << 20;
    size_t witnessCap = 100;
    bool strict = false;
};

ClosureProfile profileFor(const std::string& name) {
    if (name == "none") return ClosureProfile::none();
    if (name == "rdf") return ClosureProfile::rdf();
    return ClosureProfile::rdfs();
}

// Blank node labels are file-scoped: merging several files prefixes each
// file's labels so they cannot collide.
Graph loadGraphs(const std::vector<std::string>& paths) {
    if (paths.size() == 1) return parse_turtle_file(paths[0]);
    Graph merged;
    for (size_t i = 0; i < paths.size(); ++i) {
        Graph g = parse_turtle_file(paths[i]);
        std::string prefix = "f" + std::to_string(i) + ".";
        for (const Triple& t : g) {
            Term s = t.subject, o = t.object;
            if (s.isBlank()) s = Term::blank(prefix + s.value);
            if (o.isBlank()) o = Term::blank(prefix + o.value);
            merged.insert(Triple(std::move(s), t.predicate, std::move(o)));
        }
    }
    return merged;
}

AxiomSet loadConstraints(const std::vector<std::string>& paths) {
    AxiomSet all;
    for (const std::string& p : paths) {
        AxiomSet one = parse_constraints_file(p);
        for (Axiom& a : one.axioms) all.axioms.push_back(std::move(a));
        all.definitionCandidates.insert(one.definitionCandidates.begin(),
                                        one.definitionCandidates.end());
    }
    return all;
}

std::ostream& openOut(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw Error("cannot write to " + cfg.out);
    return file;
}

json reportToJson(const ValidationReport& r) {
    json j;
    j["overall"] = r.overall;
    j["axioms"] = json::array();
    for (const AxiomResult& a : r.axioms) {
        json ja;
        ja["index"] = a.index;
        ja["source"] = a.source;
        ja["verdict"] = a.verdict == Verdict::SATISFIED ? "SATISFIED" : "VIOLATED";
        ja["witnesses"] = json::array();
        for (const Witness& w : a.witnesses)
            ja["witnesses"].push_back({{"node", w.node}, {"detail", w.detail}});
        ja["witnessCount"] = a.witnessCount;
        j["axioms"].push_back(std::move(ja));
    }
    j["recognition"] = json::object();
    for (const auto& [c, members] : r.recognition) {
        json m = json::array();
        for (const Term& t : members) m.push_back(to_string(t));
        j["recognition"][c.value] = std::move(m);
    }
    j["method"] = r.method;
    j["closure"] = r.closure;
    return j;
}

void printTextReport(std::ostream& out, const ValidationReport& r) {
    for (const AxiomResult& a : r.axioms) {
        out << (a.verdict == Verdict::SATISFIED ? "SATISFIED" : "VIOLATED ")
            << "  [" << a.index << "] " << a.source << "\n";
        for (const Witness& w : a.witnesses)
            out << "    witness " << w.node << ": " << w.detail << "\n";
        if (a.witnessCount > a.witnesses.size())
            out << "    ... " << a.witnessCount << " witnesses total\n";
    }
    for (const auto& [c, members] : r.recognition) {
        out << "extension " << to_string(c) << " = {";
        for (size_t i = 0; i < members.size(); ++i)
            out << (i ? ", " : "") << to_string(members[i]);
        out << "}\n";
    }
    out << "overall: " << (r.overall ? "SATISFIED" : "VIOLATED") << "\n";
}

int runValidate(const RunConfig& cfg) {
    DatatypeRegistry reg = DatatypeRegistry::defaults();
    Graph data = loadGraphs(cfg.dataPaths);
    Graph ontology =
        cfg.ontologyPaths.empty() ? Graph{} : loadGraphs(cfg.ontologyPaths);

    AxiomSet axioms;
    if (cfg.explicitDomainsRanges) {
        // Validate that domain/range types are stated, not inferred: strip
        // the schema's domain/range triples and check them as constraints.
        auto [stripped, removed] = strip_domain_range(ontology);
        ontology = std::move(stripped);
        axioms = domain_range_to_constraints(removed, reg);
    } else {
        axioms = loadConstraints(cfg.constraintPaths);
    }

    CheckOptions options;
    options.witnessCap = cfg.witnessCap;
    ValidationReport report =
        validate(data, ontology, std::move(axioms), profileFor(cfg.closure), reg,
                 options);

    std::ofstream file;
    std::ostream& out = openOut(cfg, file);
    if (cfg.format == "json")
        out << reportToJson(report).dump(2) << "\n";
    else
        printTextReport(out, report);
    return report.overall ? 0 : 1;
}

int runRecognize(const RunConfig& cfg) {
    DatatypeRegistry reg = DatatypeRegistry::defaults();
    Graph data = loadGraphs(cfg.dataPaths);
    Graph ontology =
        cfg.ontologyPaths.empty() ? Graph{} : loadGraphs(cfg.ontologyPaths);
    AxiomSet axioms = loadConstraints(cfg.constraintPaths);

    Graph closed = closure(graph_union(data, ontology), profileFor(cfg.closure));
    Interpretation interp = canonical_interpretation(closed, reg);
    new_vocabulary(axioms, interp.vocab(), reg);

    std::map<Term, std::vector<Term>> extensions;
    std::string method;
    bool modelFound = true;
    if (cfg.bruteForce) {
        std::vector<ExtensionState> models =
            brute_force_maximal(interp, axioms, cfg.budget);
        method = "BRUTE_FORCE";
        if (models.empty()) {
            modelFound = false;
        } else {
            for (const Term& c : axioms.definedClasses) {
                NodeSet ext = models.front().assignments.at(c);
                for (size_t m = 1; m < models.size(); ++m)
                    ext = ns_intersect(ext, models[m].assignments.at(c));
                for (NodeId n : ext) extensions[c].push_back(interp.term(n));
            }
        }
    } else {
        RecognitionResult rec = recognize_fixpoint(interp, axioms);
        method = rec.methodString();
        modelFound = rec.modelFound;
        for (const auto& [c, ext] : rec.extensions)
            for (NodeId n : ext) extensions[c].push_back(interp.term(n));
    }

    std::ofstream file;
    std::ostream& out = openOut(cfg, file);
    if (cfg.format == "json") {
        json j;
        j["recognition"] = json::object();
        for (const auto& [c, members] : extensions) {
            json m = json::array();
            for (const Term& t : members) m.push_back(to_string(t));
            j["recognition"][c.value] = std::move(m);
        }
        j["method"] = method;
        j["closure"] = profileFor(cfg.closure).nameString();
        j["modelFound"] = modelFound;
        out << j.dump(2) << "\n";
    } else {
        if (!modelFound && extensions.empty())
            out << "no extended canonical model exists\n";
        for (const auto& [c, members] : extensions) {
            out << to_string(c) << ":";
            for (const Term& t : members) out << " " << to_string(t);
            out << "\n";
        }
        if (!modelFound) out << "model: not found\n";
    }
    return modelFound ? 0 : 1;
}

int runEmit(const RunConfig& cfg) {
    DatatypeRegistry reg = DatatypeRegistry::defaults();
    Graph data = loadGraphs(cfg.dataPaths);
    Graph ontology =
        cfg.ontologyPaths.empty() ? Graph{} : loadGraphs(cfg.ontologyPaths);
    AxiomSet axioms = loadConstraints(cfg.constraintPaths);

    Graph closed = closure(graph_union(data, ontology), profileFor(cfg.closure));
    Interpretation interp = canonical_interpretation(closed, reg);
    new_vocabulary(axioms, interp.vocab(), reg);

    std::vector<CompiledQuery> queries = compile_set(axioms);

    json manifest = json::array();
    bool anyUnsupported = false;
    for (const CompiledQuery& q : queries) {
        json jq;
        jq["axiomIndex"] = q.axiomIndex;
        jq["source"] = q.source;
        if (q.coverage == CompiledQuery::Coverage::FULL) {
            jq["sparql"] = q.queryText;
        } else {
            jq["unsupported"] = q.reason;
            anyUnsupported = true;
        }
        manifest.push_back(std::move(jq));
    }

    if (cfg.out.empty()) {
        std::cout << manifest.dump(2) << "\n";
    } else {
        std::string dir = cfg.out;
        std::ofstream mf(dir + "/manifest.json");
        if (!mf) throw Error("cannot write to " + dir + "/manifest.json");
        mf << manifest.dump(2) << "\n";
        for (const CompiledQuery& q : queries) {
            if (q.coverage != CompiledQuery::Coverage::FULL) continue;
            std::string path = dir + "/query_" + std::to_string(q.axiomIndex) + ".rq";
            std::ofstream qf(path);
            if (!qf) throw Error("cannot write to " + path);
            qf << q.queryText;
        }
    }
    return cfg.strict && anyUnsupported ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-world RDF validation, recognition, and SPARQL emission"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto addCommon = [&cfg](CLI::App* cmd, bool constraintsRequired) {
        cmd->add_option("--data", cfg.dataPaths, "Turtle data file(s)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--ontology", cfg.ontologyPaths, "Turtle ontology file(s)")
            ->check(CLI::ExistingFile);
        auto* c = cmd->add_option("--constraints", cfg.constraintPaths,
                                  "constraint file(s)")
                      ->check(CLI::ExistingFile);
        if (constraintsRequired) c->required();
        cmd->add_option("--closure", cfg.closure, "entailment profile")
            ->check(CLI::IsMember({"none", "rdf", "rdfs"}));
        cmd->add_option("--format", cfg.format, "report format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", cfg.out, "output file/directory");
    };

    CLI::App* validateCmd = app.add_subcommand("validate", "check constraints");
    addCommon(validateCmd, false);
    validateCmd->add_flag("--explicit-domains-ranges", cfg.explicitDomainsRanges,
                          "check the ontology's domain/range statements as "
                          "constraints against the stripped ontology");
    validateCmd->add_option("--witness-cap", cfg.witnessCap,
                            "max witnesses reported per axiom");

    CLI::App* recognizeCmd =
        app.add_subcommand("recognize", "compute closed-world extensions");
    addCommon(recognizeCmd, true);
    recognizeCmd->add_flag("--brute-force", cfg.bruteForce,
                           "enumerate maximal extension models");
    recognizeCmd->add_option("--budget", cfg.budget,
                             "assignment budget for --brute-force");

    CLI::App* emitCmd = app.add_subcommand("emit", "compile SPARQL queries");
    addCommon(emitCmd, true);
    emitCmd->add_flag("--strict", cfg.strict,
                      "fail when any axiom is unsupported");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validateCmd->parsed()) {
            if (!cfg.explicitDomainsRanges && cfg.constraintPaths.empty())
                throw Error("validate needs --constraints (or "
                            "--explicit-domains-ranges)");
            return runValidate(cfg);
        }
        if (recognizeCmd->parsed()) return runRecognize(cfg);
        return runEmit(cfg);
    } catch (const NonMonotoneDefinitionError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: rerun `recognize` with --brute-force to enumerate "
                     "maximal models within a budget\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
