#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdio>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cwrdf/checker.hpp"
#include "cwrdf/errors.hpp"
#include "cwrdf/constraints.hpp"
#include "cwrdf/interpretation.hpp"
#include "cwrdf/rdf.hpp"

namespace testsupport {

using namespace cwrdf;

// ---- subprocess helper -------------------------------------------------

struct CommandResult {
    int exitCode = -1;
    std::string output; // stdout and stderr interleaved
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exitCode = WEXITSTATUS(status);
    return r;
}

// ---- random graph / constraint generators ------------------------------

inline Term ind(int i) { return Term::iri("http://t.example/i" + std::to_string(i)); }
inline Term prop(int i) { return Term::iri("http://t.example/p" + std::to_string(i)); }
inline Term cls(int i) { return Term::iri("http://t.example/C" + std::to_string(i)); }
inline Term defcls(int i) { return Term::iri("http://t.example/D" + std::to_string(i)); }

// Node-and-type-only graph: individuals, typed memberships, property edges.
inline Graph random_graph(std::mt19937& rng, int nInd, int nProps, int nClasses,
                          int nEdges, bool withLiterals = false) {
    Graph g;
    std::uniform_int_distribution<int> di(0, nInd - 1);
    std::uniform_int_distribution<int> dp(0, nProps - 1);
    std::uniform_int_distribution<int> dc(0, nClasses - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int i = 0; i < nInd; ++i)
        if (nClasses > 0 && coin(rng) != 0)
            g.insert({ind(i), Term::iri(iris::rdf_type), cls(dc(rng))});
    for (int e = 0; e < nEdges; ++e) {
        Term o = ind(di(rng));
        if (withLiterals && coin(rng) == 0) {
            switch (coin(rng)) {
            case 0: o = Term::literal(std::to_string(di(rng)), iris::xsd_integer); break;
            case 1: o = Term::literal("0" + std::to_string(di(rng)), iris::xsd_integer); break;
            case 2: o = Term::literal("s" + std::to_string(di(rng)), iris::xsd_string); break;
            default: o = Term::literal(std::to_string(di(rng)) + ".5", iris::xsd_decimal); break;
            }
        }
        g.insert({ind(di(rng)), prop(dp(rng)), o});
    }
    if (g.empty()) g.insert({ind(0), Term::iri(iris::rdf_type), cls(0)});
    return g;
}

// Random class expression over the generated vocabulary. Depth-bounded;
// avoids DatatypeRef outside filler position and avoids defined classes.
inline ClassExprPtr random_class_expr(std::mt19937& rng, int nProps, int nClasses,
                                      int nInd, int depth, bool allowLiterals) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 10 : 2);
    std::uniform_int_distribution<int> dp(0, nProps - 1);
    std::uniform_int_distribution<int> dc(0, nClasses - 1);
    std::uniform_int_distribution<int> di(0, nInd - 1);
    std::uniform_int_distribution<int> dn(0, 2);
    auto sub = [&] {
        return random_class_expr(rng, nProps, nClasses, nInd, depth - 1, allowLiterals);
    };
    auto filler = [&]() -> ClassExprPtr {
        if (allowLiterals && dn(rng) == 0) {
            static const char* dts[] = {"string", "integer", "decimal"};
            return ClassExpr::datatypeRef(Term::iri(iris::xsd_ns + dts[dn(rng)]));
        }
        return sub();
    };
    auto rprop = [&]() -> PropExprPtr {
        PropExprPtr p = PropExpr::named(prop(dp(rng)));
        switch (dn(rng)) {
        case 0: return PropExpr::inverse(p);
        case 1: return PropExpr::restrict_(p, sub());
        default: return p;
        }
    };
    switch (pick(rng)) {
    case 0: return ClassExpr::thing();
    case 1: {
        std::vector<Term> xs;
        int k = dn(rng);
        for (int i = 0; i < k; ++i) xs.push_back(ind(di(rng)));
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return ClassExpr::nominal(std::move(xs));
    }
    case 2: return ClassExpr::namedClass(cls(dc(rng)));
    case 3: return ClassExpr::and_({sub(), sub()});
    case 4: return ClassExpr::or_({sub(), sub()});
    case 5: return ClassExpr::not_(sub());
    case 6: return ClassExpr::all(rprop(), filler());
    case 7: return ClassExpr::some(rprop(), filler());
    case 8: return ClassExpr::min(dn(rng), rprop(), dn(rng) ? filler() : nullptr);
    case 9: return ClassExpr::max(dn(rng), rprop(), dn(rng) ? filler() : nullptr);
    default: return ClassExpr::exact(dn(rng), rprop(), dn(rng) ? filler() : nullptr);
    }
}

// Random monotone class expression mentioning defined classes positively.
inline ClassExprPtr random_monotone_expr(std::mt19937& rng, int nProps, int nClasses,
                                         int nDefined, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 2);
    std::uniform_int_distribution<int> dp(0, nProps - 1);
    std::uniform_int_distribution<int> dc(0, nClasses - 1);
    std::uniform_int_distribution<int> dd(0, nDefined - 1);
    std::uniform_int_distribution<int> dn(1, 2);
    auto sub = [&] { return random_monotone_expr(rng, nProps, nClasses, nDefined, depth - 1); };
    switch (pick(rng)) {
    case 0: return ClassExpr::thing();
    case 1: return ClassExpr::namedClass(cls(dc(rng)));
    case 2: return ClassExpr::namedClass(defcls(dd(rng)));
    case 3: return ClassExpr::and_({sub(), sub()});
    case 4: return ClassExpr::or_({sub(), sub()});
    case 5: return ClassExpr::all(PropExpr::named(prop(dp(rng))), sub());
    case 6: return ClassExpr::some(PropExpr::named(prop(dp(rng))), sub());
    default: return ClassExpr::min(dn(rng), PropExpr::named(prop(dp(rng))), sub());
    }
}

// ---- independent checker oracle ----------------------------------------
//
// Membership-test recursion straight from the set-theoretic definitions,
// sharing no evaluation code with EvalContext.

class NaiveOracle {
public:
    explicit NaiveOracle(const Interpretation& i) : interp_(i) {}

    bool inClass(const ClassExpr& c, NodeId n) const {
        switch (c.kind) {
        case ClassExpr::Kind::Named: {
            if (interp_.hasClass(c.name)) {
                const NodeSet& ext = interp_.classExtension(c.name);
                return std::find(ext.begin(), ext.end(), n) != ext.end();
            }
            throw UnboundClassNameError(c.name.value);
        }
        case ClassExpr::Kind::Thing: return true;
        case ClassExpr::Kind::Nominal: {
            bool found = false;
            for (const Term& t : c.individuals) {
                std::optional<NodeId> id = interp_.idOf(t);
                if (!id) throw NewIndividualError(to_string(t));
                if (*id == n) found = true;
            }
            return found;
        }
        case ClassExpr::Kind::DatatypeRef:
            throw UnsupportedDataComplementError(c.name.value);
        case ClassExpr::Kind::And:
            for (const auto& a : c.args) if (!inClass(*a, n)) return false;
            return true;
        case ClassExpr::Kind::Or:
            for (const auto& a : c.args) if (inClass(*a, n)) return true;
            return false;
        case ClassExpr::Kind::Not:
            return !inClass(*c.args[0], n);
        case ClassExpr::Kind::All:
            for (const auto& [s, o] : pairs(*c.prop))
                if (s == n && !qualifies(o, *c.args[0])) return false;
            return true;
        case ClassExpr::Kind::Some:
            for (const auto& [s, o] : pairs(*c.prop))
                if (s == n && qualifies(o, *c.args[0])) return true;
            return false;
        case ClassExpr::Kind::Min:
            return countFillers(c, n) >= c.card;
        case ClassExpr::Kind::Max:
            return countFillers(c, n) <= c.card;
        case ClassExpr::Kind::Exact:
            return countFillers(c, n) == c.card;
        }
        return false;
    }

    std::set<std::pair<NodeId, Object>> pairs(const PropExpr& p) const {
        std::set<std::pair<NodeId, Object>> out;
        switch (p.kind) {
        case PropExpr::Kind::Named: {
            if (!interp_.hasProperty(p.name))
                throw UnboundPropertyNameError(p.name.value);
            const PairSet& ext = interp_.propExtension(p.name);
            out.insert(ext.begin(), ext.end());
            break;
        }
        case PropExpr::Kind::Inv:
            for (const auto& [s, o] : pairs(*p.left))
                if (!o.literal) out.insert({o.node, Object::individual(s)});
            break;
        case PropExpr::Kind::Chain:
            for (const auto& [s, o] : pairs(*p.left)) {
                if (o.literal) continue;
                for (const auto& [s2, o2] : pairs(*p.right))
                    if (s2 == o.node) out.insert({s, o2});
            }
            break;
        case PropExpr::Kind::Restrict:
            for (const auto& [s, o] : pairs(*p.left))
                if (inClass(*p.dom, s)) out.insert({s, o});
            break;
        }
        return out;
    }

    bool qualifies(const Object& o, const ClassExpr& f) const {
        if (f.kind == ClassExpr::Kind::DatatypeRef) {
            return o.literal &&
                   interp_.registry().get(f.name.value).valueSpaceContains(o.value);
        }
        return !o.literal && inClass(f, o.node);
    }

    size_t countFillers(const ClassExpr& c, NodeId n) const {
        std::set<Object> distinct;
        for (const auto& [s, o] : pairs(*c.prop)) {
            if (s != n) continue;
            if (c.qualifier && !qualifies(o, *c.qualifier)) continue;
            distinct.insert(o);
        }
        return distinct.size();
    }

    // Truth of an axiom by direct quantification over the domain.
    bool holds(const Axiom& a) const {
        switch (a.kind) {
        case Axiom::Kind::SubClass:
            for (NodeId n = 0; n < interp_.domainSize(); ++n)
                if (inClass(*a.lhs, n) && !inClass(*a.rhs, n)) return false;
            return true;
        case Axiom::Kind::EquivClass:
            for (NodeId n = 0; n < interp_.domainSize(); ++n)
                if (inClass(*a.lhs, n) != inClass(*a.rhs, n)) return false;
            return true;
        case Axiom::Kind::SubProp: {
            auto rhs = pairs(*a.prhs);
            for (const auto& pr : pairs(*a.plhs))
                if (!rhs.count(pr)) return false;
            return true;
        }
        case Axiom::Kind::Member: {
            auto id = interp_.idOf(a.individual);
            if (!id) throw NewIndividualError(to_string(a.individual));
            return inClass(*a.rhs, *id);
        }
        case Axiom::Kind::Different: {
            std::set<NodeId> seen;
            for (const Term& t : a.individuals) {
                auto id = interp_.idOf(t);
                if (!id) throw NewIndividualError(to_string(t));
                if (!seen.insert(*id).second) return false;
            }
            return true;
        }
        }
        return true;
    }

private:
    const Interpretation& interp_;
};

} // namespace testsupport

#endif
