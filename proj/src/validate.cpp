#include "cwrdf/checker.hpp"
#include "cwrdf/errors.hpp"
#include "cwrdf/recognition.hpp"

namespace cwrdf {

ValidationReport validate(const Graph& data, const Graph& ontology,
                          AxiomSet constraints, const ClosureProfile& profile,
                          const DatatypeRegistry& reg, const CheckOptions& options) {
    Graph closed = closure(graph_union(data, ontology), profile);
    Interpretation interp = canonical_interpretation(closed, reg);
    new_vocabulary(constraints, interp.vocab(), reg);

    ValidationReport report;
    report.closure = profile.nameString();

    std::map<Term, NodeSet> assignments;
    if (!constraints.definedClasses.empty()) {
        RecognitionResult rec = recognize_fixpoint(interp, constraints);
        assignments = std::move(rec.extensions);
        report.method = rec.methodString();
        report.modelFound = rec.modelFound;
        for (const auto& [c, ext] : assignments) {
            std::vector<Term>& members = report.recognition[c];
            for (NodeId n : ext) members.push_back(interp.term(n));
        }
    }

    EvalContext ctx(interp, assignments.empty() ? nullptr : &assignments);
    ValidationReport checked = check_axioms(ctx, constraints, options);
    report.axioms = std::move(checked.axioms);
    report.overall = checked.overall && report.modelFound;
    return report;
}

} // namespace cwrdf
