#include "cwrdf/interpretation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cwrdf/errors.hpp"

namespace cwrdf {

NodeSet ns_intersect(const NodeSet& a, const NodeSet& b) {
    NodeSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

NodeSet ns_union(const NodeSet& a, const NodeSet& b) {
    NodeSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

NodeSet ns_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool ns_contains(const NodeSet& s, NodeId x) {
    return std::binary_search(s.begin(), s.end(), x);
}

bool ns_subset(const NodeSet& a, const NodeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void ns_insert(NodeSet& s, NodeId x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) s.insert(it, x);
}

bool ns_erase(NodeSet& s, NodeId x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) return false;
    s.erase(it);
    return true;
}

std::optional<NodeId> Interpretation::idOf(const Term& t) const {
    auto it = ids_.find(t);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const NodeSet& Interpretation::classExtension(const Term& c) const {
    auto it = classExt_.find(c);
    if (it == classExt_.end()) throw UnboundClassNameError(to_string(c));
    return it->second;
}

const PairSet& Interpretation::propExtension(const Term& p) const {
    auto it = propExt_.find(p);
    if (it == propExt_.end()) throw UnboundPropertyNameError(to_string(p));
    return it->second.pairs;
}

const std::vector<Object>& Interpretation::successors(const Term& p, NodeId x) const {
    static const std::vector<Object> empty;
    auto it = propExt_.find(p);
    if (it == propExt_.end()) throw UnboundPropertyNameError(to_string(p));
    auto jt = it->second.bySubject.find(x);
    return jt == it->second.bySubject.end() ? empty : jt->second;
}

std::string Interpretation::objectText(const Object& o) const {
    return o.literal ? to_string(o.value.toLiteral()) : to_string(domain_[o.node]);
}

std::string Interpretation::dump() const {
    std::ostringstream out;
    out << "domain:";
    for (const Term& t : domain_) out << " " << to_string(t);
    out << "\n";
    for (const auto& [c, ext] : classExt_) {
        out << "class " << to_string(c) << " = {";
        for (size_t i = 0; i < ext.size(); ++i)
            out << (i ? ", " : "") << to_string(domain_[ext[i]]);
        out << "}\n";
    }
    for (const auto& [p, data] : propExt_) {
        out << "prop " << to_string(p) << " = {";
        for (size_t i = 0; i < data.pairs.size(); ++i) {
            const auto& [s, o] = data.pairs[i];
            out << (i ? ", " : "") << "(" << to_string(domain_[s]) << ", "
                << objectText(o) << ")";
        }
        out << "}\n";
    }
    return out.str();
}

Interpretation canonical_interpretation(const Graph& g, const DatatypeRegistry& reg) {
    if (g.empty()) throw EmptyGraphError();

    Vocabulary v = vocabulary(g);

    // Precondition: no triple states membership in a registered datatype.
    for (const Triple& t : g)
        if (t.predicate.isIri() && t.predicate.value == iris::rdf_type &&
            t.object.isIri() && reg.has(t.object.value))
            throw DatatypeMembershipError(to_string(t));

    Interpretation i;
    i.registry_ = &reg;
    i.vocab_ = v;

    // Δ_I = V_C ∪ V_P ∪ V_I, sorted for determinism; NodeId = index.
    std::set<Term> domain;
    for (const Term& t : v.classes)
        if (!t.isLiteral()) domain.insert(t);
    for (const Term& t : v.properties) domain.insert(t);
    for (const Term& t : v.individuals) domain.insert(t);
    if (domain.empty()) throw EmptyGraphError();
    i.domain_.assign(domain.begin(), domain.end());
    for (NodeId n = 0; n < i.domain_.size(); ++n) i.ids_[i.domain_[n]] = n;

    for (const Term& c : v.classes) i.classExt_[c];
    for (const Term& p : v.properties) i.propExt_[p];

    // Accumulate unsorted, then sort and deduplicate once per extension;
    // element-wise sorted insertion would be quadratic on large graphs.
    for (const Triple& t : g) {
        NodeId s = i.ids_.at(t.subject);
        if (t.predicate.value == iris::rdf_type && !t.object.isLiteral())
            i.classExt_.at(t.object).push_back(s);
        Object o = t.object.isLiteral()
                       ? Object::data(literal_value(t.object, reg))
                       : Object::individual(i.ids_.at(t.object));
        i.propExt_.at(t.predicate).pairs.emplace_back(s, std::move(o));
    }
    for (auto& [c, ext] : i.classExt_) {
        std::sort(ext.begin(), ext.end());
        ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
    }
    for (auto& [p, data] : i.propExt_) {
        std::sort(data.pairs.begin(), data.pairs.end());
        data.pairs.erase(std::unique(data.pairs.begin(), data.pairs.end()),
                         data.pairs.end());
        for (const auto& [s, o] : data.pairs) data.bySubject[s].push_back(o);
    }
    return i;
}

} // namespace cwrdf
