#include "cwrdf/checker.hpp"

#include <algorithm>
#include <set>

#include "cwrdf/errors.hpp"

namespace cwrdf {

namespace {

NodeSet fullDomain(const Interpretation& i) {
    NodeSet all(i.domainSize());
    for (NodeId n = 0; n < all.size(); ++n) all[n] = n;
    return all;
}

void sortUnique(PairSet& ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

} // namespace

bool EvalContext::fillerQualifies(const Object& o, const ClassExpr& f) {
    if (f.kind == ClassExpr::Kind::DatatypeRef)
        return o.literal &&
               interp_.registry().get(f.name.value).valueSpaceContains(o.value);
    return !o.literal && ns_contains(evalClass(f), o.node);
}

const NodeSet& EvalContext::evalClass(const ClassExpr& c) {
    std::string key = to_string(c);
    auto it = classCache_.find(key);
    if (it != classCache_.end()) return it->second;
    NodeSet result = computeClass(c);
    return classCache_.emplace(std::move(key), std::move(result)).first->second;
}

const PairSet& EvalContext::evalProp(const PropExpr& p) {
    if (p.kind == PropExpr::Kind::Named) return interp_.propExtension(p.name);
    std::string key = to_string(p);
    auto it = propCache_.find(key);
    if (it != propCache_.end()) return it->second;
    PairSet result = computeProp(p);
    return propCache_.emplace(std::move(key), std::move(result)).first->second;
}

NodeSet EvalContext::computeClass(const ClassExpr& c) {
    switch (c.kind) {
    case ClassExpr::Kind::Named: {
        if (defined_) {
            auto it = defined_->find(c.name);
            if (it != defined_->end()) return it->second;
        }
        return interp_.classExtension(c.name);
    }
    case ClassExpr::Kind::Thing:
        return fullDomain(interp_);
    case ClassExpr::Kind::Nominal: {
        NodeSet r;
        for (const Term& t : c.individuals) {
            auto id = interp_.idOf(t);
            if (!id) throw NewIndividualError(to_string(t));
            ns_insert(r, *id);
        }
        return r;
    }
    case ClassExpr::Kind::DatatypeRef:
        throw UnsupportedDataComplementError(
            to_string(c) + " used as a class over the infinite data domain");
    case ClassExpr::Kind::And: {
        NodeSet r = evalClass(*c.args[0]);
        for (size_t i = 1; i < c.args.size(); ++i)
            r = ns_intersect(r, evalClass(*c.args[i]));
        return r;
    }
    case ClassExpr::Kind::Or: {
        NodeSet r = evalClass(*c.args[0]);
        for (size_t i = 1; i < c.args.size(); ++i)
            r = ns_union(r, evalClass(*c.args[i]));
        return r;
    }
    case ClassExpr::Kind::Not:
        return ns_difference(fullDomain(interp_), evalClass(*c.args[0]));
    case ClassExpr::Kind::All: {
        // Universally quantified: subjects without fillers pass vacuously.
        NodeSet violators;
        for (const auto& [s, o] : evalProp(*c.prop))
            if (!fillerQualifies(o, *c.args[0])) ns_insert(violators, s);
        return ns_difference(fullDomain(interp_), violators);
    }
    case ClassExpr::Kind::Some: {
        NodeSet r;
        for (const auto& [s, o] : evalProp(*c.prop))
            if (fillerQualifies(o, *c.args[0])) ns_insert(r, s);
        return r;
    }
    case ClassExpr::Kind::Min:
    case ClassExpr::Kind::Max:
    case ClassExpr::Kind::Exact: {
        // Distinct qualifying fillers per subject; literal fillers are
        // distinct at the value level.
        std::vector<size_t> counts(interp_.domainSize(), 0);
        for (const auto& [s, o] : evalProp(*c.prop))
            if (!c.qualifier || fillerQualifies(o, *c.qualifier)) ++counts[s];
        NodeSet r;
        for (NodeId n = 0; n < counts.size(); ++n) {
            bool in = c.kind == ClassExpr::Kind::Min   ? counts[n] >= c.card
                      : c.kind == ClassExpr::Kind::Max ? counts[n] <= c.card
                                                       : counts[n] == c.card;
            if (in) r.push_back(n);
        }
        return r;
    }
    }
    return {};
}

PairSet EvalContext::computeProp(const PropExpr& p) {
    switch (p.kind) {
    case PropExpr::Kind::Named:
        return interp_.propExtension(p.name);
    case PropExpr::Kind::Inv: {
        PairSet r;
        for (const auto& [s, o] : evalProp(*p.left))
            if (!o.literal) r.emplace_back(o.node, Object::individual(s));
        sortUnique(r);
        return r;
    }
    case PropExpr::Kind::Chain: {
        const PairSet& right = evalProp(*p.right);
        std::map<NodeId, std::vector<Object>> bySubject;
        for (const auto& [s, o] : right) bySubject[s].push_back(o);
        PairSet r;
        for (const auto& [s, o] : evalProp(*p.left)) {
            if (o.literal) continue;
            auto it = bySubject.find(o.node);
            if (it == bySubject.end()) continue;
            for (const Object& z : it->second) r.emplace_back(s, z);
        }
        sortUnique(r);
        return r;
    }
    case PropExpr::Kind::Restrict: {
        const NodeSet& dom = evalClass(*p.dom);
        PairSet r;
        for (const auto& pair : evalProp(*p.left))
            if (ns_contains(dom, pair.first)) r.push_back(pair);
        return r;
    }
    }
    return {};
}

namespace {

std::string nodeText(const Interpretation& i, NodeId n) {
    return to_string(i.term(n));
}

std::string objectText(const Interpretation& i, const Object& o) {
    return o.literal ? to_string(o.value.toLiteral()) : nodeText(i, o.node);
}

void addWitness(std::vector<Witness>& out, std::set<std::pair<NodeId, std::string>>& seen,
                const Interpretation& i, Witness::Kind kind, NodeId subject,
                std::string detail) {
    if (!seen.emplace(subject, detail).second) return;
    out.push_back({kind, subject, nodeText(i, subject), std::move(detail)});
}

// Members of lhs missing from rhs, as witnesses. When the violated rhs is a
// universal restriction, the offending fillers themselves are the useful
// diagnostic (e.g. a range violation points at the out-of-range object).
std::vector<Witness> inclusionWitnesses(EvalContext& ctx, const NodeSet& missing,
                                        const ClassExpr& rhs,
                                        const std::string& rhsText) {
    const Interpretation& interp = ctx.interp();
    std::vector<Witness> out;
    std::set<std::pair<NodeId, std::string>> seen;
    if (rhs.kind == ClassExpr::Kind::All) {
        const std::string propText = to_string(*rhs.prop);
        const std::string fillerText = to_string(*rhs.args[0]);
        for (const auto& [s, o] : ctx.evalProp(*rhs.prop)) {
            if (!ns_contains(missing, s)) continue;
            if (ctx.fillerQualifies(o, *rhs.args[0])) continue;
            if (o.literal)
                addWitness(out, seen, interp, Witness::Kind::IndividualNotInClass, s,
                           "has " + propText + " filler " + objectText(interp, o) +
                               " outside " + fillerText);
            else if (seen.insert({o.node, propText}).second)
                out.push_back({Witness::Kind::IndividualNotInClass, o.node,
                               nodeText(interp, o.node),
                               "filler of " + propText + " at " +
                                   nodeText(interp, s) + " is not in " +
                                   fillerText});
        }
        if (!out.empty()) return out;
    }
    for (NodeId n : missing)
        addWitness(out, seen, interp, Witness::Kind::IndividualNotInClass, n,
                   "not in " + rhsText);
    return out;
}

} // namespace

AxiomResult check_axiom(EvalContext& ctx, const Axiom& a, const CheckOptions& options) {
    const Interpretation& interp = ctx.interp();
    AxiomResult result;
    result.source = a.source.empty() ? to_string(a) : a.source;
    std::vector<Witness> witnesses;

    switch (a.kind) {
    case Axiom::Kind::SubClass:
    case Axiom::Kind::EquivClass: {
        const NodeSet& lhs = ctx.evalClass(*a.lhs);
        const NodeSet& rhs = ctx.evalClass(*a.rhs);
        NodeSet missing = ns_difference(lhs, rhs);
        witnesses = inclusionWitnesses(ctx, missing, *a.rhs, to_string(*a.rhs));
        if (a.kind == Axiom::Kind::EquivClass) {
            NodeSet extra = ns_difference(rhs, lhs);
            std::vector<Witness> back =
                inclusionWitnesses(ctx, extra, *a.lhs, to_string(*a.lhs));
            witnesses.insert(witnesses.end(), back.begin(), back.end());
        }
        break;
    }
    case Axiom::Kind::SubProp: {
        const PairSet lhs = ctx.evalProp(*a.plhs);
        const PairSet& rhs = ctx.evalProp(*a.prhs);
        const std::string rhsText = to_string(*a.prhs);
        for (const auto& pair : lhs) {
            if (std::binary_search(rhs.begin(), rhs.end(), pair)) continue;
            witnesses.push_back({Witness::Kind::PairNotInProperty, pair.first,
                                 nodeText(interp, pair.first),
                                 "(" + nodeText(interp, pair.first) + ", " +
                                     objectText(interp, pair.second) +
                                     ") not in " + rhsText});
        }
        break;
    }
    case Axiom::Kind::Member: {
        auto id = interp.idOf(a.individual);
        if (!id) throw NewIndividualError(to_string(a.individual));
        if (!ns_contains(ctx.evalClass(*a.rhs), *id))
            witnesses.push_back({Witness::Kind::MembershipFailed, *id,
                                 nodeText(interp, *id),
                                 "not in " + to_string(*a.rhs)});
        break;
    }
    case Axiom::Kind::Different: {
        // Identity individual mapping: syntactically distinct nodes always
        // denote distinct elements, but the axiom is still evaluated.
        std::vector<NodeId> ids;
        for (const Term& t : a.individuals) {
            auto id = interp.idOf(t);
            if (!id) throw NewIndividualError(to_string(t));
            ids.push_back(*id);
        }
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j)
                if (ids[i] == ids[j])
                    witnesses.push_back({Witness::Kind::DifferentFailed, ids[i],
                                         nodeText(interp, ids[i]),
                                         to_string(a.individuals[i]) + " and " +
                                             to_string(a.individuals[j]) +
                                             " denote the same element"});
        break;
    }
    }

    result.witnessCount = witnesses.size();
    result.verdict = witnesses.empty() ? Verdict::SATISFIED : Verdict::VIOLATED;
    if (witnesses.size() > options.witnessCap) witnesses.resize(options.witnessCap);
    result.witnesses = std::move(witnesses);
    return result;
}

ValidationReport check_axioms(EvalContext& ctx, const AxiomSet& axioms,
                              const CheckOptions& options) {
    ValidationReport report;
    for (size_t i = 0; i < axioms.axioms.size(); ++i) {
        AxiomResult r = check_axiom(ctx, axioms.axioms[i], options);
        r.index = i;
        if (r.verdict == Verdict::VIOLATED) report.overall = false;
        report.axioms.push_back(std::move(r));
    }
    return report;
}

} // namespace cwrdf
