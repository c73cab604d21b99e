#include "cwrdf/rdfs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cwrdf {

namespace {

struct RuleSet {
    bool rdf1 = false, rdfs2 = false, rdfs3 = false, rdfs5 = false;
    bool rdfs7 = false, rdfs9 = false, rdfs11 = false;
    bool scpRefl = false, spoRefl = false;

    explicit RuleSet(const ClosureProfile& p) {
        for (const std::string& r : p.rules) {
            if (r == "rdf1") rdf1 = true;
            else if (r == "rdfs2") rdfs2 = true;
            else if (r == "rdfs3") rdfs3 = true;
            else if (r == "rdfs5") rdfs5 = true;
            else if (r == "rdfs7") rdfs7 = true;
            else if (r == "rdfs9") rdfs9 = true;
            else if (r == "rdfs11") rdfs11 = true;
            else if (r == "scp-refl") scpRefl = true;
            else if (r == "spo-refl") spoRefl = true;
        }
    }
};

// Semi-naive forward chaining: every inserted triple is matched once against
// the rule premises, with schema triples (domain/range/sub*) re-activating
// the data triples they govern.
class ClosureEngine {
public:
    ClosureEngine(const Graph& g, const RuleSet& rules) : rules_(rules) {
        for (const Triple& t : g) add(t);
        run();
    }

    Graph result() && { return std::move(graph_); }

private:
    const RuleSet& rules_;
    Graph graph_;
    std::deque<Triple> work_;
    std::map<Term, std::vector<std::pair<Term, Term>>> byPredicate_;
    std::map<Term, std::set<Term>> subClass_, superClass_;   // edges both ways
    std::map<Term, std::set<Term>> subProp_, superProp_;
    std::map<Term, std::set<Term>> domain_, range_;
    std::map<Term, std::set<Term>> typesOf_;    // node -> classes
    std::map<Term, std::set<Term>> members_;    // class -> nodes

    void add(Triple t) {
        if (graph_.insert(t)) work_.push_back(std::move(t));
    }

    void run() {
        while (!work_.empty()) {
            Triple t = std::move(work_.front());
            work_.pop_front();
            process(t);
        }
    }

    void process(const Triple& t) {
        const Term& s = t.subject;
        const Term& p = t.predicate;
        const Term& o = t.object;

        byPredicate_[p].emplace_back(s, o);

        if (rules_.rdf1)
            add(Triple(p, Term::iri(iris::rdf_type), Term::iri(iris::rdf_Property)));
        if (rules_.spoRefl)
            add(Triple(p, Term::iri(iris::rdfs_subPropertyOf), p));

        // rdfs7: inherited statement through known super-properties.
        if (rules_.rdfs7) {
            auto it = superProp_.find(p);
            if (it != superProp_.end())
                for (const Term& q : it->second)
                    if (!(q == p)) add(Triple(s, q, o));
        }
        // rdfs2 / rdfs3 with known domain/range of p.
        if (rules_.rdfs2) {
            auto it = domain_.find(p);
            if (it != domain_.end())
                for (const Term& c : it->second)
                    add(Triple(s, Term::iri(iris::rdf_type), c));
        }
        if (rules_.rdfs3 && !o.isLiteral()) {
            auto it = range_.find(p);
            if (it != range_.end())
                for (const Term& c : it->second)
                    add(Triple(o, Term::iri(iris::rdf_type), c));
        }

        if (p.isIri() && p.value == iris::rdf_type) {
            typesOf_[s].insert(o);
            members_[o].insert(s);
            if (rules_.rdfs9) {
                auto it = superClass_.find(o);
                if (it != superClass_.end())
                    for (const Term& d : it->second)
                        add(Triple(s, p, d));
            }
            if (rules_.scpRefl && !o.isLiteral())
                add(Triple(o, Term::iri(iris::rdfs_subClassOf), o));
            if (rules_.scpRefl && o.isIri() && o.value == iris::rdfs_Class)
                add(Triple(s, Term::iri(iris::rdfs_subClassOf), s));
            if (rules_.spoRefl && o.isIri() && o.value == iris::rdf_Property)
                add(Triple(s, Term::iri(iris::rdfs_subPropertyOf), s));
        } else if (p.isIri() && p.value == iris::rdfs_subClassOf) {
            subClass_[o].insert(s);
            superClass_[s].insert(o);
            if (rules_.rdfs11) {
                for (const Term& d : superClass_[o]) add(Triple(s, p, d));
                for (const Term& b : subClass_[s]) add(Triple(b, p, o));
            }
            if (rules_.rdfs9)
                for (const Term& m : members_[s])
                    add(Triple(m, Term::iri(iris::rdf_type), o));
            if (rules_.scpRefl) {
                add(Triple(s, p, s));
                if (!o.isLiteral()) add(Triple(o, p, o));
            }
        } else if (p.isIri() && p.value == iris::rdfs_subPropertyOf) {
            subProp_[o].insert(s);
            superProp_[s].insert(o);
            if (rules_.rdfs5) {
                for (const Term& q : superProp_[o]) add(Triple(s, p, q));
                for (const Term& r : subProp_[s]) add(Triple(r, p, o));
            }
            if (rules_.rdfs7)
                for (const auto& [s2, o2] : byPredicate_[s])
                    if (o.isIri()) add(Triple(s2, o, o2));
            if (rules_.spoRefl) {
                add(Triple(s, p, s));
                if (!o.isLiteral()) add(Triple(o, p, o));
            }
        } else if (p.isIri() && p.value == iris::rdfs_domain) {
            domain_[s].insert(o);
            if (rules_.rdfs2)
                for (const auto& [s2, o2] : byPredicate_[s]) {
                    (void)o2;
                    add(Triple(s2, Term::iri(iris::rdf_type), o));
                }
        } else if (p.isIri() && p.value == iris::rdfs_range) {
            range_[s].insert(o);
            if (rules_.rdfs3)
                for (const auto& [s2, o2] : byPredicate_[s]) {
                    (void)s2;
                    if (!o2.isLiteral())
                        add(Triple(o2, Term::iri(iris::rdf_type), o));
                }
        }
    }
};

} // namespace

Graph closure(const Graph& g, const ClosureProfile& profile) {
    if (profile.rules.empty()) return g;
    RuleSet rules(profile);
    return ClosureEngine(g, rules).result();
}

std::pair<Graph, Graph> strip_domain_range(const Graph& ontology) {
    Graph stripped, removed;
    for (const Triple& t : ontology) {
        if (t.predicate.isIri() &&
            (t.predicate.value == iris::rdfs_domain ||
             t.predicate.value == iris::rdfs_range))
            removed.insert(t);
        else
            stripped.insert(t);
    }
    return {stripped, removed};
}

} // namespace cwrdf
