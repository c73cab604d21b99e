#include "cwrdf/recognition.hpp"

#include <algorithm>
#include <functional>

#include "cwrdf/checker.hpp"
#include "cwrdf/errors.hpp"

namespace cwrdf {

namespace {

// Defined classes occurring anywhere in a class expression.
void collectDefined(const ClassExpr& c, const std::set<Term>& defined,
                    std::set<Term>& out) {
    switch (c.kind) {
    case ClassExpr::Kind::Named:
        if (defined.count(c.name)) out.insert(c.name);
        break;
    case ClassExpr::Kind::Thing:
    case ClassExpr::Kind::Nominal:
    case ClassExpr::Kind::DatatypeRef:
        break;
    case ClassExpr::Kind::And:
    case ClassExpr::Kind::Or:
    case ClassExpr::Kind::Not:
        for (const auto& a : c.args) collectDefined(*a, defined, out);
        break;
    case ClassExpr::Kind::All:
    case ClassExpr::Kind::Some:
        collectDefined(*c.args[0], defined, out);
        [[fallthrough]];
    case ClassExpr::Kind::Min:
    case ClassExpr::Kind::Max:
    case ClassExpr::Kind::Exact:
        if (c.qualifier) collectDefined(*c.qualifier, defined, out);
        if (c.prop) {
            std::function<void(const PropExpr&)> walkProp = [&](const PropExpr& p) {
                if (p.kind == PropExpr::Kind::Restrict)
                    collectDefined(*p.dom, defined, out);
                if (p.left) walkProp(*p.left);
                if (p.right) walkProp(*p.right);
            };
            walkProp(*c.prop);
        }
        break;
    }
}

struct Definitions {
    // Defined class -> rhs expressions of its definition axioms.
    std::map<Term, std::vector<const ClassExpr*>> defs;
    // Direct dependencies among defined classes.
    std::map<Term, std::set<Term>> deps;
    std::vector<Term> classes; // sorted

    explicit Definitions(const AxiomSet& axioms) {
        if (!axioms.bound)
            throw Error("recognition requires new_vocabulary to have run");
        classes.assign(axioms.definedClasses.begin(), axioms.definedClasses.end());
        for (const Term& c : classes) { defs[c]; deps[c]; }
        for (const Axiom& a : axioms.axioms) {
            if (a.kind != Axiom::Kind::SubClass && a.kind != Axiom::Kind::EquivClass)
                continue;
            if (a.lhs->kind != ClassExpr::Kind::Named) continue;
            if (!axioms.definedClasses.count(a.lhs->name)) continue;
            defs[a.lhs->name].push_back(a.rhs.get());
            collectDefined(*a.rhs, axioms.definedClasses, deps[a.lhs->name]);
        }
    }

    // SCCs of the dependency graph, dependencies-first (Tarjan emission order).
    std::vector<std::vector<Term>> sccs() const {
        std::map<Term, int> index, low;
        std::vector<Term> stack;
        std::map<Term, bool> onStack;
        std::vector<std::vector<Term>> out;
        int counter = 0;
        std::function<void(const Term&)> strongconnect = [&](const Term& v) {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            onStack[v] = true;
            for (const Term& w : deps.at(v)) {
                if (!index.count(w)) {
                    strongconnect(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (onStack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
            if (low[v] == index[v]) {
                std::vector<Term> scc;
                for (;;) {
                    Term w = stack.back();
                    stack.pop_back();
                    onStack[w] = false;
                    scc.push_back(w);
                    if (w == v) break;
                }
                std::sort(scc.begin(), scc.end());
                out.push_back(std::move(scc));
            }
        };
        for (const Term& c : classes)
            if (!index.count(c)) strongconnect(c);
        return out;
    }

    bool recursive(const std::vector<Term>& scc) const {
        if (scc.size() > 1) return true;
        return deps.at(scc[0]).count(scc[0]) != 0;
    }
};

bool allSatisfied(const Interpretation& i, const AxiomSet& axioms,
                  const std::map<Term, NodeSet>& assignments) {
    EvalContext ctx(i, &assignments);
    CheckOptions opts;
    opts.witnessCap = 0;
    for (const Axiom& a : axioms.axioms)
        if (check_axiom(ctx, a, opts).verdict != Verdict::SATISFIED) return false;
    return true;
}

} // namespace

RecognitionResult recognize_fixpoint(const Interpretation& i, const AxiomSet& axioms) {
    Definitions d(axioms);
    auto mono = monotonicity_check(axioms);
    for (const auto& [c, m] : mono)
        if (m == Monotonicity::NON_MONOTONE) throw NonMonotoneDefinitionError(c.value);

    NodeSet full(i.domainSize());
    for (NodeId n = 0; n < full.size(); ++n) full[n] = n;

    std::map<Term, NodeSet> assignments;
    for (const Term& c : d.classes) assignments[c] = full;

    for (const std::vector<Term>& scc : d.sccs()) {
        bool iterate = d.recursive(scc);
        // One Jacobi sweep; repeated to fixpoint for recursive groups.
        for (;;) {
            EvalContext ctx(i, &assignments);
            std::map<Term, NodeSet> next;
            for (const Term& c : scc) {
                NodeSet v = iterate ? assignments[c] : full;
                for (const ClassExpr* e : d.defs.at(c))
                    v = ns_intersect(v, ctx.evalClass(*e));
                next[c] = std::move(v);
            }
            bool changed = false;
            for (auto& [c, v] : next) {
                if (assignments[c] != v) changed = true;
                assignments[c] = std::move(v);
            }
            if (!iterate || !changed) break;
        }
    }

    RecognitionResult result;
    result.method = RecognitionResult::Method::FIXPOINT;
    result.extensions = assignments;
    result.modelFound = allSatisfied(i, axioms, assignments);
    return result;
}

std::vector<ExtensionState> brute_force_maximal(const Interpretation& i,
                                                const AxiomSet& axioms,
                                                unsigned long long limit) {
    Definitions d(axioms); // validates binding
    const size_t n = i.domainSize();
    const size_t k = d.classes.size();
    const size_t bits = n * k;
    if (bits >= 64 || (1ull << bits) > limit)
        throw BudgetExceededError(n, k, limit);

    std::vector<std::map<Term, NodeSet>> models;
    for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
        std::map<Term, NodeSet> assignments;
        size_t bit = 0;
        for (const Term& c : d.classes) {
            NodeSet& s = assignments[c];
            for (NodeId x = 0; x < n; ++x, ++bit)
                if (mask & (1ull << bit)) s.push_back(x);
        }
        if (allSatisfied(i, axioms, assignments)) models.push_back(std::move(assignments));
    }

    auto dominated = [&](const std::map<Term, NodeSet>& a,
                         const std::map<Term, NodeSet>& b) {
        // a ≤ b componentwise and a ≠ b
        if (a == b) return false;
        for (const auto& [c, ext] : a)
            if (!ns_subset(ext, b.at(c))) return false;
        return true;
    };

    std::vector<ExtensionState> out;
    for (const auto& m : models) {
        bool maximal = true;
        for (const auto& other : models)
            if (dominated(m, other)) { maximal = false; break; }
        if (maximal) out.push_back({&i, m});
    }
    return out;
}

NodeSet closed_world_extension(const Interpretation& i, const AxiomSet& axioms,
                               const Term& c, unsigned long long bruteForceLimit) {
    if (!axioms.definedClasses.count(c))
        throw Error("not a defined class: " + to_string(c));
    auto mono = monotonicity_check(axioms);
    bool allMonotone = true;
    for (const auto& [cls, m] : mono)
        if (m == Monotonicity::NON_MONOTONE) allMonotone = false;
    if (allMonotone) {
        RecognitionResult r = recognize_fixpoint(i, axioms);
        if (!r.modelFound) throw NoModelExistsError();
        return r.extensions.at(c);
    }
    std::vector<ExtensionState> models = brute_force_maximal(i, axioms, bruteForceLimit);
    if (models.empty()) throw NoModelExistsError();
    NodeSet r = models.front().assignments.at(c);
    for (size_t m = 1; m < models.size(); ++m)
        r = ns_intersect(r, models[m].assignments.at(c));
    return r;
}

} // namespace cwrdf
