#include "cwrdf/sparql.hpp"

#include <sstream>

#include "cwrdf/errors.hpp"

namespace cwrdf {

namespace {

// Internal: aborts compilation of one axiom with an UNSUPPORTED reason.
struct Unsupported {
    std::string reason;
};

std::string termRef(const Term& t) {
    return to_string(t);
}

// Datatypes whose value space the given reference covers, as a SPARQL
// IN-list over the canonical datatypes of the normalized graph. xsd:decimal
// shares its value space with xsd:integer (integral decimals normalize to
// xsd:integer).
std::string datatypeInList(const std::string& iri) {
    if (iri == iris::xsd_decimal)
        return "(<" + iris::xsd_decimal + ">, <" + iris::xsd_integer + ">)";
    return "(<" + iri + ">)";
}

class Compiler {
public:
    explicit Compiler(const std::set<Term>& defined) : defined_(defined) {}

    std::string subClassViolation(const ClassExpr& lhs, const ClassExpr& rhs) {
        std::ostringstream q;
        q << "SELECT DISTINCT ?x WHERE {\n"
          << classPattern(lhs, "?x")
          << "FILTER NOT EXISTS {\n"
          << classPattern(rhs, "?x") << "}\n}\n";
        return q.str();
    }

    std::string equivViolation(const ClassExpr& lhs, const ClassExpr& rhs) {
        std::ostringstream q;
        q << "SELECT DISTINCT ?x WHERE {\n{\n"
          << classPattern(lhs, "?x")
          << "FILTER NOT EXISTS {\n" << classPattern(rhs, "?x") << "}\n"
          << "} UNION {\n"
          << classPattern(rhs, "?x")
          << "FILTER NOT EXISTS {\n" << classPattern(lhs, "?x") << "}\n"
          << "}\n}\n";
        return q.str();
    }

    std::string subPropViolation(const PropExpr& lhs, const PropExpr& rhs) {
        std::ostringstream q;
        q << "SELECT DISTINCT ?x ?y WHERE {\n"
          << propPattern(lhs, "?x", "?y")
          << "FILTER NOT EXISTS {\n"
          << propPattern(rhs, "?x", "?y") << "}\n}\n";
        return q.str();
    }

    std::string memberViolation(const Term& individual, const ClassExpr& c) {
        std::ostringstream q;
        q << "SELECT DISTINCT ?x WHERE {\nVALUES ?x { " << termRef(individual)
          << " }\nFILTER NOT EXISTS {\n" << classPattern(c, "?x") << "}\n}\n";
        return q.str();
    }

private:
    const std::set<Term>& defined_;
    int counter_ = 0;

    std::string fresh() { return "?v" + std::to_string(counter_++); }

    std::string thingPattern(const std::string& var) {
        // Δ_I = subjects ∪ predicates ∪ non-literal objects.
        std::string a = fresh(), b = fresh();
        return "{ " + var + " " + a + " " + b + " . } UNION { " + a + " " + var +
               " " + b + " . } UNION { " + a + " " + b + " " + var +
               " . FILTER(!isLiteral(" + var + ")) }\n";
    }

    // Group elements binding `var` to the members of `c`.
    std::string classPattern(const ClassExpr& c, const std::string& var) {
        switch (c.kind) {
        case ClassExpr::Kind::Named: {
            if (defined_.count(c.name))
                throw DefinedClassInAxiomError(c.name.value);
            return var + " <" + iris::rdf_type + "> " + termRef(c.name) + " .\n";
        }
        case ClassExpr::Kind::Thing:
            return thingPattern(var);
        case ClassExpr::Kind::Nominal: {
            std::string s = "VALUES " + var + " {";
            for (const Term& t : c.individuals) s += " " + termRef(t);
            return s + " }\n";
        }
        case ClassExpr::Kind::DatatypeRef:
            throw Unsupported{"datatype reference outside a filler/qualifier "
                              "position (would range over the data domain)"};
        case ClassExpr::Kind::And: {
            std::string s;
            for (const auto& a : c.args) s += classPattern(*a, var);
            return s;
        }
        case ClassExpr::Kind::Or: {
            std::string s;
            for (size_t i = 0; i < c.args.size(); ++i) {
                if (i) s += " UNION ";
                s += "{\n" + classPattern(*c.args[i], var) + "}";
            }
            return s + "\n";
        }
        case ClassExpr::Kind::Not:
            return thingPattern(var) + "FILTER NOT EXISTS {\n" +
                   classPattern(*c.args[0], var) + "}\n";
        case ClassExpr::Kind::Some: {
            std::string y = fresh();
            return propPattern(*c.prop, var, y) + fillerPattern(*c.args[0], y);
        }
        case ClassExpr::Kind::All: {
            std::string y = fresh();
            return thingPattern(var) + "FILTER NOT EXISTS {\n" +
                   propPattern(*c.prop, var, y) +
                   counterexamplePattern(*c.args[0], y) + "}\n";
        }
        case ClassExpr::Kind::Min:
            return minPattern(c.card, *c.prop, c.qualifier.get(), var);
        case ClassExpr::Kind::Max:
            return thingPattern(var) + "FILTER NOT EXISTS {\n" +
                   minPattern(c.card + 1, *c.prop, c.qualifier.get(), var) + "}\n";
        case ClassExpr::Kind::Exact: {
            std::string s = c.card == 0
                                ? thingPattern(var)
                                : minPattern(c.card, *c.prop, c.qualifier.get(), var);
            return s + "FILTER NOT EXISTS {\n" +
                   minPattern(c.card + 1, *c.prop, c.qualifier.get(), var) + "}\n";
        }
        }
        return {};
    }

    // Elements making filler `y` qualify for `f` (Some and Min/Max/Exact).
    std::string fillerPattern(const ClassExpr& f, const std::string& y) {
        if (f.kind == ClassExpr::Kind::DatatypeRef)
            return "FILTER(isLiteral(" + y + ") && datatype(" + y + ") IN " +
                   datatypeInList(f.name.value) + ")\n";
        if (f.kind == ClassExpr::Kind::Thing)
            return "FILTER(!isLiteral(" + y + "))\n";
        return classPattern(f, y);
    }

    // Elements making filler `y` a counterexample for All(p, f).
    std::string counterexamplePattern(const ClassExpr& f, const std::string& y) {
        if (f.kind == ClassExpr::Kind::DatatypeRef)
            return "FILTER(!isLiteral(" + y + ") || !(datatype(" + y + ") IN " +
                   datatypeInList(f.name.value) + "))\n";
        if (f.kind == ClassExpr::Kind::Thing)
            return "FILTER(isLiteral(" + y + "))\n";
        return "FILTER NOT EXISTS {\n" + classPattern(f, y) + "}\n";
    }

    std::string minPattern(unsigned n, const PropExpr& p, const ClassExpr* q,
                           const std::string& var) {
        if (n == 0) return thingPattern(var);
        std::string y = fresh();
        std::string body = propPattern(p, var, y);
        if (q) body += fillerPattern(*q, y);
        return "{ SELECT " + var + " WHERE {\n" + body + "} GROUP BY " + var +
               " HAVING (COUNT(DISTINCT " + y + ") >= " + std::to_string(n) +
               ") }\n";
    }

    // Elements binding (s, o) to the pairs of `p`.
    std::string propPattern(const PropExpr& p, const std::string& s,
                            const std::string& o) {
        switch (p.kind) {
        case PropExpr::Kind::Named:
            return s + " " + termRef(p.name) + " " + o + " .\n";
        case PropExpr::Kind::Inv:
            // The inverse keeps only pairs whose first component is an
            // individual.
            return propPattern(*p.left, o, s) + "FILTER(!isLiteral(" + s + "))\n";
        case PropExpr::Kind::Chain: {
            std::string mid = fresh();
            return propPattern(*p.left, s, mid) + "FILTER(!isLiteral(" + mid +
                   "))\n" + propPattern(*p.right, mid, o);
        }
        case PropExpr::Kind::Restrict:
            return propPattern(*p.left, s, o) + classPattern(*p.dom, s);
        }
        return {};
    }
};

} // namespace

CompiledQuery compile_axiom(const Axiom& a, const std::set<Term>& definedClasses) {
    CompiledQuery out;
    out.source = a.source.empty() ? to_string(a) : a.source;
    Compiler c(definedClasses);
    try {
        switch (a.kind) {
        case Axiom::Kind::SubClass:
            out.queryText = c.subClassViolation(*a.lhs, *a.rhs);
            break;
        case Axiom::Kind::EquivClass:
            out.queryText = c.equivViolation(*a.lhs, *a.rhs);
            break;
        case Axiom::Kind::SubProp:
            out.queryText = c.subPropViolation(*a.plhs, *a.prhs);
            break;
        case Axiom::Kind::Member:
            out.queryText = c.memberViolation(a.individual, *a.rhs);
            break;
        case Axiom::Kind::Different:
            // Distinct nodes denote distinct elements under the identity
            // mapping; the axiom can never be violated.
            out.queryText = "SELECT ?x WHERE {\nVALUES ?x { }\n}\n";
            break;
        }
    } catch (const Unsupported& u) {
        out.coverage = CompiledQuery::Coverage::UNSUPPORTED;
        out.reason = u.reason;
        out.queryText.clear();
    }
    return out;
}

std::vector<CompiledQuery> compile_set(const AxiomSet& axioms) {
    std::vector<CompiledQuery> out;
    for (size_t i = 0; i < axioms.axioms.size(); ++i) {
        CompiledQuery q;
        try {
            q = compile_axiom(axioms.axioms[i], axioms.definedClasses);
        } catch (const DefinedClassInAxiomError&) {
            q.source = axioms.axioms[i].source;
            q.coverage = CompiledQuery::Coverage::UNSUPPORTED;
            q.reason = "defined class";
        }
        q.axiomIndex = i;
        out.push_back(std::move(q));
    }
    return out;
}

Graph normalize_for_query(const Graph& g, const DatatypeRegistry& reg) {
    Graph out;
    for (const Triple& t : g) {
        Term o = t.object;
        if (o.isLiteral() && reg.has(o.datatype)) {
            auto v = reg.get(o.datatype).valueOf(o.value);
            if (v) o = v->toLiteral();
        }
        out.insert(Triple(t.subject, t.predicate, std::move(o)));
    }
    return out;
}

} // namespace cwrdf
