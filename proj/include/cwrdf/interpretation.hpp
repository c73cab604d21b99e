#ifndef CWRDF_INTERPRETATION_HPP
#define CWRDF_INTERPRETATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwrdf/datatypes.hpp"
#include "cwrdf/rdf.hpp"

namespace cwrdf {

using NodeId = uint32_t;

// Sorted, duplicate-free vector of node ids.
using NodeSet = std::vector<NodeId>;

NodeSet ns_intersect(const NodeSet& a, const NodeSet& b);
NodeSet ns_union(const NodeSet& a, const NodeSet& b);
NodeSet ns_difference(const NodeSet& a, const NodeSet& b);
bool ns_contains(const NodeSet& s, NodeId x);
bool ns_subset(const NodeSet& a, const NodeSet& b);
void ns_insert(NodeSet& s, NodeId x);
bool ns_erase(NodeSet& s, NodeId x);

// A property filler: a domain individual or a data value.
struct Object {
    bool literal = false;
    NodeId node = 0; // when !literal
    Value value;     // when literal

    static Object individual(NodeId n) { Object o; o.node = n; return o; }
    static Object data(Value v) { Object o; o.literal = true; o.value = std::move(v); return o; }

    friend bool operator==(const Object& a, const Object& b) {
        if (a.literal != b.literal) return false;
        return a.literal ? a.value == b.value : a.node == b.node;
    }
    friend bool operator<(const Object& a, const Object& b) {
        if (a.literal != b.literal) return a.literal < b.literal;
        return a.literal ? a.value < b.value : a.node < b.node;
    }
};

// Sorted, duplicate-free (value-level for literals) pair set.
using PairSet = std::vector<std::pair<NodeId, Object>>;

// The canonical DL interpretation of a graph: identity individual mapping
// over the finite domain Δ_I = V_C ∪ V_P ∪ V_I, class extensions from
// rdf:type triples, property extensions as predicate projections. The data
// domain Δ_D stays symbolic (value-space predicates only). Immutable after
// construction; defined-class extensions live outside (recognition).
class Interpretation {
public:
    size_t domainSize() const { return domain_.size(); }
    const std::vector<Term>& domain() const { return domain_; } // index = NodeId
    const Term& term(NodeId n) const { return domain_[n]; }
    std::optional<NodeId> idOf(const Term& t) const;

    bool hasClass(const Term& c) const { return classExt_.count(c) != 0; }
    // Throws UnboundClassNameError for terms outside V_C.
    const NodeSet& classExtension(const Term& c) const;

    bool hasProperty(const Term& p) const { return propExt_.count(p) != 0; }
    // Throws UnboundPropertyNameError for terms outside V_P.
    const PairSet& propExtension(const Term& p) const;
    // Fillers of `p` at subject x (empty when none).
    const std::vector<Object>& successors(const Term& p, NodeId x) const;

    const Vocabulary& vocab() const { return vocab_; }
    const DatatypeRegistry& registry() const { return *registry_; }

    // One sorted line per class/property extension, for golden-file tests.
    std::string dump() const;

    friend Interpretation canonical_interpretation(const Graph& g,
                                                   const DatatypeRegistry& reg);

private:
    struct PropData {
        PairSet pairs;
        std::map<NodeId, std::vector<Object>> bySubject;
    };

    std::vector<Term> domain_;    // sorted; NodeId is the index
    std::map<Term, NodeId> ids_;
    std::map<Term, NodeSet> classExt_;
    std::map<Term, PropData> propExt_;
    Vocabulary vocab_;
    const DatatypeRegistry* registry_ = nullptr;

    std::string objectText(const Object& o) const;
};

// Throws EmptyGraphError, DatatypeMembershipError, IllFormedLiteralError,
// UnknownDatatypeError. `reg` must outlive the result.
Interpretation canonical_interpretation(const Graph& g, const DatatypeRegistry& reg);

} // namespace cwrdf

#endif
