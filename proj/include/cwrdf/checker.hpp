#ifndef CWRDF_CHECKER_HPP
#define CWRDF_CHECKER_HPP

#include <map>
#include <string>
#include <vector>

#include "cwrdf/constraints.hpp"
#include "cwrdf/interpretation.hpp"
#include "cwrdf/rdfs.hpp"

namespace cwrdf {

enum class Verdict { SATISFIED, VIOLATED };

struct Witness {
    enum class Kind {
        IndividualNotInClass, PairNotInProperty, MembershipFailed, DifferentFailed
    };
    Kind kind = Kind::IndividualNotInClass;
    NodeId subject = 0;
    std::string node;   // rendered term of the subject
    std::string detail;
};

struct AxiomResult {
    size_t index = 0;
    std::string source;
    Verdict verdict = Verdict::SATISFIED;
    std::vector<Witness> witnesses; // capped
    size_t witnessCount = 0;        // uncapped
};

struct CheckOptions {
    size_t witnessCap = 100;
};

struct ValidationReport {
    bool overall = true;
    std::vector<AxiomResult> axioms;
    std::map<Term, std::vector<Term>> recognition; // defined class -> members
    std::string method;                  // "FIXPOINT" | "BRUTE_FORCE" | ""
    std::string closure;                 // profile name
    bool modelFound = true;
};

// Evaluates class/property expressions over a frozen interpretation plus an
// optional assignment for defined classes, memoizing per printed expression.
// Not is complement relative to Δ_I; DatatypeRef is meaningful only as an
// All/Some filler or a cardinality qualifier.
class EvalContext {
public:
    explicit EvalContext(const Interpretation& i,
                         const std::map<Term, NodeSet>* defined = nullptr)
        : interp_(i), defined_(defined) {}

    const NodeSet& evalClass(const ClassExpr& c);
    const PairSet& evalProp(const PropExpr& p);

    const Interpretation& interp() const { return interp_; }
    const std::map<Term, NodeSet>* defined() const { return defined_; }

    // True iff filler o belongs to filler/qualifier expression f.
    bool fillerQualifies(const Object& o, const ClassExpr& f);

private:
    const Interpretation& interp_;
    const std::map<Term, NodeSet>* defined_;
    std::map<std::string, NodeSet> classCache_;
    std::map<std::string, PairSet> propCache_;

    NodeSet computeClass(const ClassExpr& c);
    PairSet computeProp(const PropExpr& p);
};

AxiomResult check_axiom(EvalContext& ctx, const Axiom& a,
                        const CheckOptions& options = {});

// Checks all axioms; recognition/method/closure fields are left for callers.
ValidationReport check_axioms(EvalContext& ctx, const AxiomSet& axioms,
                              const CheckOptions& options = {});

// Full pipeline: union, closure, canonical interpretation, new-vocabulary
// binding, fixpoint recognition of defined classes, then axiom checking.
// Throws NonMonotoneDefinitionError for non-monotone recursive definitions.
ValidationReport validate(const Graph& data, const Graph& ontology,
                          AxiomSet constraints, const ClosureProfile& profile,
                          const DatatypeRegistry& reg,
                          const CheckOptions& options = {});

} // namespace cwrdf

#endif
