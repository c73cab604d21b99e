#ifndef CWRDF_RECOGNITION_HPP
#define CWRDF_RECOGNITION_HPP

#include <map>
#include <vector>

#include "cwrdf/constraints.hpp"
#include "cwrdf/interpretation.hpp"

namespace cwrdf {

// An extension of the base interpretation: same domain, properties, and
// individuals; only the defined classes get extensions.
struct ExtensionState {
    const Interpretation* base = nullptr;
    std::map<Term, NodeSet> assignments; // keys = defined classes
};

struct RecognitionResult {
    enum class Method { FIXPOINT, BRUTE_FORCE };

    std::map<Term, NodeSet> extensions;
    bool modelFound = true;
    Method method = Method::FIXPOINT;

    const char* methodString() const {
        return method == Method::FIXPOINT ? "FIXPOINT" : "BRUTE_FORCE";
    }
};

// Greatest-fixpoint recognition. Defined classes start at Δ_I and violators
// are removed iteratively; strongly connected definition groups are
// processed in dependency order. Requires every recursive defined class to
// be MONOTONE (NonMonotoneDefinitionError otherwise). modelFound is false
// when the resulting assignment still violates some axiom.
RecognitionResult recognize_fixpoint(const Interpretation& i, const AxiomSet& axioms);

// Enumerates every assignment of the defined classes to subsets of Δ_I and
// returns the maximal (componentwise-⊆) extended canonical models. Empty
// result means no model exists. Throws BudgetExceededError when
// 2^(|Δ_I|·|defined|) exceeds `limit`.
std::vector<ExtensionState> brute_force_maximal(const Interpretation& i,
                                                const AxiomSet& axioms,
                                                unsigned long long limit = 1u << 20);

// Intersection of c's extension over all maximal extension models: fixpoint
// when the definitions allow it, brute force otherwise. Throws
// NoModelExistsError when there is no extended canonical model.
NodeSet closed_world_extension(const Interpretation& i, const AxiomSet& axioms,
                               const Term& c,
                               unsigned long long bruteForceLimit = 1u << 20);

} // namespace cwrdf

#endif
