#include "cwrdf/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cwrdf/errors.hpp"

namespace cwrdf {

// ---------------------------------------------------------------------------
// Constructors

PropExprPtr PropExpr::named(Term t) {
    auto p = std::make_shared<PropExpr>();
    p->kind = Kind::Named;
    p->name = std::move(t);
    return p;
}
PropExprPtr PropExpr::inverse(PropExprPtr q) {
    auto p = std::make_shared<PropExpr>();
    p->kind = Kind::Inv;
    p->left = std::move(q);
    return p;
}
PropExprPtr PropExpr::chain(PropExprPtr a, PropExprPtr b) {
    auto p = std::make_shared<PropExpr>();
    p->kind = Kind::Chain;
    p->left = std::move(a);
    p->right = std::move(b);
    return p;
}
PropExprPtr PropExpr::restrict_(PropExprPtr q, ClassExprPtr dom) {
    auto p = std::make_shared<PropExpr>();
    p->kind = Kind::Restrict;
    p->left = std::move(q);
    p->dom = std::move(dom);
    return p;
}

static ClassExprPtr makeClass(ClassExpr::Kind k) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = k;
    return c;
}

ClassExprPtr ClassExpr::namedClass(Term t) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::Named;
    c->name = std::move(t);
    return c;
}
ClassExprPtr ClassExpr::thing() { return makeClass(Kind::Thing); }
ClassExprPtr ClassExpr::nominal(std::vector<Term> individuals) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::Nominal;
    c->individuals = std::move(individuals);
    return c;
}
ClassExprPtr ClassExpr::datatypeRef(Term iri) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::DatatypeRef;
    c->name = std::move(iri);
    return c;
}
ClassExprPtr ClassExpr::and_(std::vector<ClassExprPtr> args) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::And;
    c->args = std::move(args);
    return c;
}
ClassExprPtr ClassExpr::or_(std::vector<ClassExprPtr> args) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::Or;
    c->args = std::move(args);
    return c;
}
ClassExprPtr ClassExpr::not_(ClassExprPtr arg) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::Not;
    c->args = {std::move(arg)};
    return c;
}
ClassExprPtr ClassExpr::all(PropExprPtr p, ClassExprPtr arg) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::All;
    c->prop = std::move(p);
    c->args = {std::move(arg)};
    return c;
}
ClassExprPtr ClassExpr::some(PropExprPtr p, ClassExprPtr arg) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = Kind::Some;
    c->prop = std::move(p);
    c->args = {std::move(arg)};
    return c;
}
static ClassExprPtr makeCard(ClassExpr::Kind k, unsigned n, PropExprPtr p, ClassExprPtr q) {
    auto c = std::make_shared<ClassExpr>();
    c->kind = k;
    c->card = n;
    c->prop = std::move(p);
    c->qualifier = std::move(q);
    return c;
}
ClassExprPtr ClassExpr::min(unsigned n, PropExprPtr p, ClassExprPtr q) {
    return makeCard(Kind::Min, n, std::move(p), std::move(q));
}
ClassExprPtr ClassExpr::max(unsigned n, PropExprPtr p, ClassExprPtr q) {
    return makeCard(Kind::Max, n, std::move(p), std::move(q));
}
ClassExprPtr ClassExpr::exact(unsigned n, PropExprPtr p, ClassExprPtr q) {
    return makeCard(Kind::Exact, n, std::move(p), std::move(q));
}

// ---------------------------------------------------------------------------
// Printer

static std::string termText(const Term& t) {
    return to_string(t);
}

std::string to_string(const PropExpr& p) {
    switch (p.kind) {
    case PropExpr::Kind::Named: return termText(p.name);
    case PropExpr::Kind::Inv: return "Inv(" + to_string(*p.left) + ")";
    case PropExpr::Kind::Chain:
        return "Chain(" + to_string(*p.left) + ", " + to_string(*p.right) + ")";
    case PropExpr::Kind::Restrict:
        return "Restrict(" + to_string(*p.left) + ", " + to_string(*p.dom) + ")";
    }
    return {};
}

std::string to_string(const ClassExpr& c) {
    switch (c.kind) {
    case ClassExpr::Kind::Named: return termText(c.name);
    case ClassExpr::Kind::Thing: return "Thing";
    case ClassExpr::Kind::Nominal: {
        std::string s = "Nominal(";
        for (size_t i = 0; i < c.individuals.size(); ++i) {
            if (i) s += ", ";
            s += termText(c.individuals[i]);
        }
        return s + ")";
    }
    case ClassExpr::Kind::DatatypeRef: return "Datatype(" + termText(c.name) + ")";
    case ClassExpr::Kind::And:
    case ClassExpr::Kind::Or: {
        std::string s = c.kind == ClassExpr::Kind::And ? "And(" : "Or(";
        for (size_t i = 0; i < c.args.size(); ++i) {
            if (i) s += ", ";
            s += to_string(*c.args[i]);
        }
        return s + ")";
    }
    case ClassExpr::Kind::Not: return "Not(" + to_string(*c.args[0]) + ")";
    case ClassExpr::Kind::All:
        return "All(" + to_string(*c.prop) + ", " + to_string(*c.args[0]) + ")";
    case ClassExpr::Kind::Some:
        return "Some(" + to_string(*c.prop) + ", " + to_string(*c.args[0]) + ")";
    case ClassExpr::Kind::Min:
    case ClassExpr::Kind::Max:
    case ClassExpr::Kind::Exact: {
        std::string head = c.kind == ClassExpr::Kind::Min ? "Min("
                         : c.kind == ClassExpr::Kind::Max ? "Max(" : "Exact(";
        std::string s = head + std::to_string(c.card) + ", " + to_string(*c.prop);
        if (c.qualifier) s += ", " + to_string(*c.qualifier);
        return s + ")";
    }
    }
    return {};
}

std::string to_string(const Axiom& a) {
    switch (a.kind) {
    case Axiom::Kind::SubClass:
        return to_string(*a.lhs) + " SubClassOf " + to_string(*a.rhs);
    case Axiom::Kind::EquivClass:
        return to_string(*a.lhs) + " EquivalentTo " + to_string(*a.rhs);
    case Axiom::Kind::SubProp:
        return to_string(*a.plhs) + " SubPropertyOf " + to_string(*a.prhs);
    case Axiom::Kind::Member:
        return termText(a.individual) + " Type " + to_string(*a.rhs);
    case Axiom::Kind::Different: {
        std::string s = "Different(";
        for (size_t i = 0; i < a.individuals.size(); ++i) {
            if (i) s += ", ";
            s += termText(a.individuals[i]);
        }
        return s + ")";
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct DlcToken {
    enum Kind { Word, IriRef, Blank, Int, LParen, RParen, Comma } kind;
    std::string text;
    size_t column;
};

std::vector<DlcToken> tokenizeLine(const std::string& line, size_t lineNo,
                                   size_t* sourceEnd = nullptr) {
    std::vector<DlcToken> out;
    if (sourceEnd) *sourceEnd = line.size();
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
        size_t col = i + 1;
        if (c == '#') {
            if (sourceEnd) *sourceEnd = i;
            break;
        }
        if (c == '(') { out.push_back({DlcToken::LParen, "(", col}); ++i; continue; }
        if (c == ')') { out.push_back({DlcToken::RParen, ")", col}); ++i; continue; }
        if (c == ',') { out.push_back({DlcToken::Comma, ",", col}); ++i; continue; }
        if (c == '<') {
            size_t end = line.find('>', i + 1);
            if (end == std::string::npos)
                throw ParseError(lineNo, col, "unterminated IRI reference");
            out.push_back({DlcToken::IriRef, line.substr(i + 1, end - i - 1), col});
            i = end + 1;
            continue;
        }
        if (c == '_' && i + 1 < line.size() && line[i + 1] == ':') {
            size_t j = i + 2;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) ||
                    line[j] == '_' || line[j] == '-' || line[j] == '.'))
                ++j;
            out.push_back({DlcToken::Blank, line.substr(i + 2, j - i - 2), col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            out.push_back({DlcToken::Int, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) ||
                    line[j] == '_' || line[j] == '-' || line[j] == ':' ||
                    line[j] == '.' || line[j] == '%'))
                ++j;
            out.push_back({DlcToken::Word, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        throw ParseError(lineNo, col, std::string("unexpected character '") + c + "'");
    }
    return out;
}

bool isKeyword(const std::string& w) {
    static const std::set<std::string> kw = {
        "Prefix", "SubClassOf", "EquivalentTo", "SubPropertyOf", "Type",
        "Different", "Thing", "Nominal", "Datatype", "And", "Or", "Not",
        "All", "Some", "Min", "Max", "Exact", "Inv", "Chain", "Restrict"};
    return kw.count(w) != 0;
}

class LineParser {
public:
    LineParser(std::vector<DlcToken> tokens, size_t lineNo,
               const std::map<std::string, std::string>& prefixes)
        : tokens_(std::move(tokens)), lineNo_(lineNo), prefixes_(prefixes) {}

    Axiom parseAxiom() {
        Axiom a;
        if (peekWord("Different")) {
            ++pos_;
            expect(DlcToken::LParen, "'('");
            a.kind = Axiom::Kind::Different;
            a.individuals.push_back(parseTerm());
            while (accept(DlcToken::Comma)) a.individuals.push_back(parseTerm());
            expect(DlcToken::RParen, "')'");
            expectEnd();
            if (a.individuals.size() < 2)
                fail("Different needs at least two individuals");
            std::set<Term> uniq(a.individuals.begin(), a.individuals.end());
            if (uniq.size() != a.individuals.size())
                fail("Different lists a repeated individual");
            return a;
        }
        // Find the axiom keyword at depth 0 to pick the production.
        std::string kw = findAxiomKeyword();
        if (kw == "SubPropertyOf") {
            a.kind = Axiom::Kind::SubProp;
            a.plhs = parsePExpr();
            expectWord("SubPropertyOf");
            a.prhs = parsePExpr();
        } else if (kw == "Type") {
            a.kind = Axiom::Kind::Member;
            a.individual = parseTerm();
            expectWord("Type");
            a.rhs = parseCExpr();
        } else if (kw == "SubClassOf" || kw == "EquivalentTo") {
            a.kind = kw == "SubClassOf" ? Axiom::Kind::SubClass : Axiom::Kind::EquivClass;
            a.lhs = parseCExpr();
            expectWord(kw);
            a.rhs = parseCExpr();
        } else {
            fail("expected an axiom (SubClassOf, EquivalentTo, SubPropertyOf, "
                 "Type, or Different)");
        }
        expectEnd();
        return a;
    }

private:
    std::vector<DlcToken> tokens_;
    size_t pos_ = 0;
    size_t lineNo_;
    const std::map<std::string, std::string>& prefixes_;

    [[noreturn]] void fail(const std::string& msg) const {
        size_t col = pos_ < tokens_.size() ? tokens_[pos_].column : 1;
        throw ParseError(lineNo_, col, msg);
    }

    const DlcToken* peek() const {
        return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
    }
    bool peekWord(const std::string& w) const {
        const DlcToken* t = peek();
        return t && t->kind == DlcToken::Word && t->text == w;
    }
    bool accept(DlcToken::Kind k) {
        if (peek() && peek()->kind == k) { ++pos_; return true; }
        return false;
    }
    const DlcToken& expect(DlcToken::Kind k, const char* what) {
        if (!peek() || peek()->kind != k) fail(std::string("expected ") + what);
        return tokens_[pos_++];
    }
    void expectWord(const std::string& w) {
        if (!peekWord(w)) fail("expected '" + w + "'");
        ++pos_;
    }
    void expectEnd() {
        if (peek()) fail("unexpected trailing tokens");
    }

    std::string findAxiomKeyword() const {
        int depth = 0;
        for (size_t i = pos_; i < tokens_.size(); ++i) {
            const DlcToken& t = tokens_[i];
            if (t.kind == DlcToken::LParen) ++depth;
            else if (t.kind == DlcToken::RParen) --depth;
            else if (depth == 0 && t.kind == DlcToken::Word &&
                     (t.text == "SubClassOf" || t.text == "EquivalentTo" ||
                      t.text == "SubPropertyOf" || t.text == "Type"))
                return t.text;
        }
        return {};
    }

    Term parseTerm() {
        const DlcToken* t = peek();
        if (!t) fail("expected a term");
        if (t->kind == DlcToken::IriRef) { ++pos_; return Term::iri(t->text); }
        if (t->kind == DlcToken::Blank) { ++pos_; return Term::blank(t->text); }
        if (t->kind == DlcToken::Word && !isKeyword(t->text)) {
            ++pos_;
            return Term::iri(expandPrefixed(t->text));
        }
        fail("expected a term");
    }

    std::string expandPrefixed(const std::string& name) {
        size_t colon = name.find(':');
        if (colon == std::string::npos)
            fail("'" + name + "' is neither a keyword nor a prefixed name");
        auto it = prefixes_.find(name.substr(0, colon));
        if (it == prefixes_.end())
            fail("unresolved prefix '" + name.substr(0, colon) + ":'");
        return it->second + name.substr(colon + 1);
    }

    unsigned parseCard() {
        const DlcToken& t = expect(DlcToken::Int, "a non-negative integer");
        return static_cast<unsigned>(std::stoul(t.text));
    }

    bool nextIsCall() const {
        return pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].kind == DlcToken::LParen;
    }

    ClassExprPtr parseCExpr() {
        ClassExprPtr first = parseCPrimary();
        // Infix And sugar between bare class names.
        if (first->kind == ClassExpr::Kind::Named && peekWord("And") && !nextIsCall()) {
            std::vector<ClassExprPtr> parts{first};
            while (peekWord("And") && !nextIsCall()) {
                ++pos_;
                ClassExprPtr next = parseCPrimary();
                if (next->kind != ClassExpr::Kind::Named)
                    fail("infix And joins bare class names only; use And(...)");
                parts.push_back(next);
            }
            return ClassExpr::and_(std::move(parts));
        }
        return first;
    }

    ClassExprPtr parseCPrimary() {
        const DlcToken* t = peek();
        if (!t) fail("expected a class expression");
        if (t->kind == DlcToken::Word && isKeyword(t->text)) {
            const std::string kw = t->text;
            if (kw == "Thing") { ++pos_; return ClassExpr::thing(); }
            if (kw == "Nominal") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                std::vector<Term> inds;
                if (!(peek() && peek()->kind == DlcToken::RParen)) {
                    inds.push_back(parseTerm());
                    while (accept(DlcToken::Comma)) inds.push_back(parseTerm());
                }
                expect(DlcToken::RParen, "')'");
                return ClassExpr::nominal(std::move(inds));
            }
            if (kw == "Datatype") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                Term iri = parseTerm();
                expect(DlcToken::RParen, "')'");
                if (!iri.isIri()) fail("Datatype(...) takes an IRI");
                return ClassExpr::datatypeRef(std::move(iri));
            }
            if (kw == "And" || kw == "Or") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                std::vector<ClassExprPtr> args;
                args.push_back(parseCExpr());
                while (accept(DlcToken::Comma)) args.push_back(parseCExpr());
                expect(DlcToken::RParen, "')'");
                return kw == "And" ? ClassExpr::and_(std::move(args))
                                   : ClassExpr::or_(std::move(args));
            }
            if (kw == "Not") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                ClassExprPtr arg = parseCExpr();
                expect(DlcToken::RParen, "')'");
                return ClassExpr::not_(std::move(arg));
            }
            if (kw == "All" || kw == "Some") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                PropExprPtr p = parsePExpr();
                expect(DlcToken::Comma, "','");
                ClassExprPtr c = parseCExpr();
                expect(DlcToken::RParen, "')'");
                return kw == "All" ? ClassExpr::all(std::move(p), std::move(c))
                                   : ClassExpr::some(std::move(p), std::move(c));
            }
            if (kw == "Min" || kw == "Max" || kw == "Exact") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                unsigned n = parseCard();
                expect(DlcToken::Comma, "','");
                PropExprPtr p = parsePExpr();
                ClassExprPtr q;
                if (accept(DlcToken::Comma)) q = parseCExpr();
                expect(DlcToken::RParen, "')'");
                if (kw == "Min") return ClassExpr::min(n, std::move(p), std::move(q));
                if (kw == "Max") return ClassExpr::max(n, std::move(p), std::move(q));
                return ClassExpr::exact(n, std::move(p), std::move(q));
            }
            fail("unexpected keyword '" + kw + "' in class expression");
        }
        Term name = parseTerm();
        if (name.isBlank()) fail("a blank node is not a class expression");
        return ClassExpr::namedClass(std::move(name));
    }

    PropExprPtr parsePExpr() {
        const DlcToken* t = peek();
        if (!t) fail("expected a property expression");
        if (t->kind == DlcToken::Word && isKeyword(t->text)) {
            const std::string kw = t->text;
            if (kw == "Inv") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                PropExprPtr p = parsePExpr();
                expect(DlcToken::RParen, "')'");
                return PropExpr::inverse(std::move(p));
            }
            if (kw == "Chain") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                PropExprPtr a = parsePExpr();
                expect(DlcToken::Comma, "','");
                PropExprPtr b = parsePExpr();
                expect(DlcToken::RParen, "')'");
                return PropExpr::chain(std::move(a), std::move(b));
            }
            if (kw == "Restrict") {
                ++pos_;
                expect(DlcToken::LParen, "'('");
                PropExprPtr p = parsePExpr();
                expect(DlcToken::Comma, "','");
                ClassExprPtr c = parseCExpr();
                expect(DlcToken::RParen, "')'");
                return PropExpr::restrict_(std::move(p), std::move(c));
            }
            fail("unexpected keyword '" + kw + "' in property expression");
        }
        Term name = parseTerm();
        if (!name.isIri()) fail("property names must be IRIs");
        return PropExpr::named(std::move(name));
    }
};

// Bare class name on the lhs of a definition-shaped axiom.
const Term* bareLhsName(const Axiom& a) {
    if ((a.kind == Axiom::Kind::SubClass || a.kind == Axiom::Kind::EquivClass) &&
        a.lhs->kind == ClassExpr::Kind::Named)
        return &a.lhs->name;
    return nullptr;
}

} // namespace

AxiomSet parse_constraints(const std::string& text) {
    AxiomSet result;
    std::map<std::string, std::string> prefixes;
    std::set<Term> equivDefined;
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        size_t sourceEnd = line.size();
        std::vector<DlcToken> tokens = tokenizeLine(line, lineNo, &sourceEnd);
        if (tokens.empty()) continue;
        if (tokens[0].kind == DlcToken::Word && tokens[0].text == "Prefix") {
            if (tokens.size() != 3 || tokens[1].kind != DlcToken::Word ||
                tokens[1].text.back() != ':' || tokens[2].kind != DlcToken::IriRef)
                throw ParseError(lineNo, tokens[0].column,
                                 "expected: Prefix pfx: <iri>");
            std::string pfx = tokens[1].text;
            pfx.pop_back();
            prefixes[pfx] = tokens[2].text;
            continue;
        }
        LineParser parser(std::move(tokens), lineNo, prefixes);
        Axiom a = parser.parseAxiom();
        a.source = line.substr(0, sourceEnd);
        // Trim the source for reporting.
        size_t b = a.source.find_first_not_of(" \t");
        size_t e = a.source.find_last_not_of(" \t\r");
        a.source = b == std::string::npos ? "" : a.source.substr(b, e - b + 1);
        if (a.kind == Axiom::Kind::EquivClass) {
            if (const Term* name = bareLhsName(a)) {
                if (!equivDefined.insert(*name).second)
                    throw ParseError(lineNo, 1,
                                     "duplicate EquivalentTo definition for " +
                                         cwrdf::to_string(*name));
            }
        }
        if (const Term* name = bareLhsName(a))
            result.definitionCandidates.insert(*name);
        result.axioms.push_back(std::move(a));
    }
    return result;
}

AxiomSet parse_constraints_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_constraints(buf.str());
}

// ---------------------------------------------------------------------------
// New-vocabulary analysis

namespace {

struct NameCollector {
    std::set<Term> classes, properties, individuals;

    void walkClass(const ClassExpr& c) {
        switch (c.kind) {
        case ClassExpr::Kind::Named: classes.insert(c.name); break;
        case ClassExpr::Kind::Nominal:
            individuals.insert(c.individuals.begin(), c.individuals.end());
            break;
        case ClassExpr::Kind::Thing:
        case ClassExpr::Kind::DatatypeRef:
            break;
        case ClassExpr::Kind::And:
        case ClassExpr::Kind::Or:
        case ClassExpr::Kind::Not:
            for (const auto& a : c.args) walkClass(*a);
            break;
        case ClassExpr::Kind::All:
        case ClassExpr::Kind::Some:
            walkProp(*c.prop);
            walkClass(*c.args[0]);
            break;
        case ClassExpr::Kind::Min:
        case ClassExpr::Kind::Max:
        case ClassExpr::Kind::Exact:
            walkProp(*c.prop);
            if (c.qualifier) walkClass(*c.qualifier);
            break;
        }
    }

    void walkProp(const PropExpr& p) {
        switch (p.kind) {
        case PropExpr::Kind::Named: properties.insert(p.name); break;
        case PropExpr::Kind::Inv: walkProp(*p.left); break;
        case PropExpr::Kind::Chain: walkProp(*p.left); walkProp(*p.right); break;
        case PropExpr::Kind::Restrict: walkProp(*p.left); walkClass(*p.dom); break;
        }
    }

    void walkAxiom(const Axiom& a) {
        switch (a.kind) {
        case Axiom::Kind::SubClass:
        case Axiom::Kind::EquivClass:
            walkClass(*a.lhs);
            walkClass(*a.rhs);
            break;
        case Axiom::Kind::SubProp:
            walkProp(*a.plhs);
            walkProp(*a.prhs);
            break;
        case Axiom::Kind::Member:
            individuals.insert(a.individual);
            walkClass(*a.rhs);
            break;
        case Axiom::Kind::Different:
            individuals.insert(a.individuals.begin(), a.individuals.end());
            break;
        }
    }
};

} // namespace

std::set<Term> new_vocabulary(AxiomSet& axioms, const Vocabulary& v,
                              const DatatypeRegistry& registry) {
    NameCollector names;
    for (const Axiom& a : axioms.axioms) names.walkAxiom(a);

    for (const Term& p : names.properties)
        if (!v.properties.count(p)) throw NewPropertyError(p.value);
    for (const Term& i : names.individuals)
        if (!v.individuals.count(i)) throw NewIndividualError(cwrdf::to_string(i));

    std::set<Term> fresh;
    for (const Term& c : names.classes) {
        if (c.isIri() && registry.has(c.value))
            throw Error("class position uses registered datatype <" + c.value +
                        ">; write Datatype(<" + c.value + ">)");
        if (!v.classes.count(c)) fresh.insert(c);
    }
    axioms.definedClasses = fresh;
    axioms.bound = true;
    return fresh;
}

// ---------------------------------------------------------------------------
// Monotonicity analysis

namespace {

// Polarity bitmask. Flipping swaps the bits; Both stays Both.
constexpr unsigned POS = 1, NEG = 2;

unsigned flipMask(unsigned m) {
    unsigned r = 0;
    if (m & POS) r |= NEG;
    if (m & NEG) r |= POS;
    return r;
}

// Polarity of B seen through an occurrence of polarity m1 whose context has
// polarity m2.
unsigned composeMask(unsigned outer, unsigned inner) {
    unsigned r = 0;
    if (outer & POS) r |= inner;
    if (outer & NEG) r |= flipMask(inner);
    return r;
}

struct PolarityWalker {
    const std::set<Term>& defined;
    std::map<Term, unsigned> occ; // defined class -> polarity mask

    void record(const Term& t, unsigned m) {
        if (defined.count(t)) occ[t] |= m;
    }

    void walkClass(const ClassExpr& c, unsigned m) {
        switch (c.kind) {
        case ClassExpr::Kind::Named: record(c.name, m); break;
        case ClassExpr::Kind::Thing:
        case ClassExpr::Kind::Nominal:
        case ClassExpr::Kind::DatatypeRef:
            break;
        case ClassExpr::Kind::And:
        case ClassExpr::Kind::Or:
            for (const auto& a : c.args) walkClass(*a, m);
            break;
        case ClassExpr::Kind::Not:
            walkClass(*c.args[0], flipMask(m));
            break;
        case ClassExpr::Kind::All:
            // All is antitone in its property (a bigger property can only
            // remove members), monotone in its class argument.
            walkProp(*c.prop, flipMask(m));
            walkClass(*c.args[0], m);
            break;
        case ClassExpr::Kind::Some:
            walkProp(*c.prop, m);
            walkClass(*c.args[0], m);
            break;
        case ClassExpr::Kind::Min:
            walkProp(*c.prop, m);
            if (c.qualifier) walkClass(*c.qualifier, m);
            break;
        case ClassExpr::Kind::Max:
            walkProp(*c.prop, flipMask(m));
            if (c.qualifier) walkClass(*c.qualifier, flipMask(m));
            break;
        case ClassExpr::Kind::Exact:
            walkProp(*c.prop, POS | NEG);
            if (c.qualifier) walkClass(*c.qualifier, POS | NEG);
            break;
        }
    }

    void walkProp(const PropExpr& p, unsigned m) {
        switch (p.kind) {
        case PropExpr::Kind::Named: break;
        case PropExpr::Kind::Inv: walkProp(*p.left, m); break;
        case PropExpr::Kind::Chain: walkProp(*p.left, m); walkProp(*p.right, m); break;
        case PropExpr::Kind::Restrict:
            walkProp(*p.left, m);
            walkClass(*p.dom, m);
            break;
        }
    }
};

} // namespace

const char* to_string(Monotonicity m) {
    switch (m) {
    case Monotonicity::MONOTONE: return "MONOTONE";
    case Monotonicity::NON_MONOTONE: return "NON_MONOTONE";
    case Monotonicity::NON_RECURSIVE: return "NON_RECURSIVE";
    }
    return "";
}

std::map<Term, Monotonicity> monotonicity_check(const AxiomSet& axioms) {
    if (!axioms.bound)
        throw Error("monotonicity_check requires new_vocabulary to have run");

    // Direct occurrences per defined class, over all its definitions.
    std::map<Term, std::map<Term, unsigned>> direct;
    for (const Term& a : axioms.definedClasses) direct[a];
    for (const Axiom& ax : axioms.axioms) {
        if (ax.kind != Axiom::Kind::SubClass && ax.kind != Axiom::Kind::EquivClass)
            continue;
        if (ax.lhs->kind != ClassExpr::Kind::Named) continue;
        if (!axioms.definedClasses.count(ax.lhs->name)) continue;
        PolarityWalker w{axioms.definedClasses, {}};
        w.walkClass(*ax.rhs, POS);
        for (const auto& [b, m] : w.occ) direct[ax.lhs->name][b] |= m;
    }

    // Transitive occurrences: compose polarities along definition chains.
    std::map<Term, std::map<Term, unsigned>> trans = direct;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [a, occs] : trans) {
            std::map<Term, unsigned> add;
            for (const auto& [b, m1] : occs)
                for (const auto& [c, m2] : direct[b])
                    add[c] |= composeMask(m1, m2);
            for (const auto& [c, m] : add) {
                unsigned& slot = trans[a][c];
                if ((slot | m) != slot) { slot |= m; changed = true; }
            }
        }
    }

    std::map<Term, Monotonicity> result;
    for (const Term& a : axioms.definedClasses) {
        auto it = trans.find(a);
        bool recursive = it != trans.end() && it->second.count(a) != 0;
        if (!recursive) {
            result[a] = Monotonicity::NON_RECURSIVE;
            continue;
        }
        bool allPositive = true;
        for (const auto& [b, m] : it->second)
            if (m != POS) allPositive = false;
        result[a] = allPositive ? Monotonicity::MONOTONE : Monotonicity::NON_MONOTONE;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Domain/range translation

AxiomSet domain_range_to_constraints(const Graph& removed,
                                     const DatatypeRegistry& registry) {
    AxiomSet result;
    for (const Triple& t : removed) {
        if (!t.predicate.isIri())
            throw Error("not a domain/range triple: " + to_string(t));
        Axiom a;
        a.kind = Axiom::Kind::SubClass;
        PropExprPtr p = PropExpr::named(t.subject);
        if (t.predicate.value == iris::rdfs_domain) {
            a.lhs = ClassExpr::some(p, ClassExpr::thing());
            a.rhs = ClassExpr::namedClass(t.object);
        } else if (t.predicate.value == iris::rdfs_range) {
            ClassExprPtr filler =
                t.object.isIri() && registry.has(t.object.value)
                    ? ClassExpr::datatypeRef(t.object)
                    : ClassExpr::namedClass(t.object);
            a.lhs = ClassExpr::thing();
            a.rhs = ClassExpr::all(p, filler);
        } else {
            throw Error("not a domain/range triple: " + to_string(t));
        }
        a.source = to_string(a);
        if (const Term* name = bareLhsName(a)) result.definitionCandidates.insert(*name);
        result.axioms.push_back(std::move(a));
    }
    return result;
}

} // namespace cwrdf
