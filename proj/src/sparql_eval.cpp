#include "cwrdf/sparql_eval.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <set>

#include "cwrdf/errors.hpp"

namespace cwrdf {

namespace {

// ---------------------------------------------------------------------------
// Tokenizer

struct Token {
    enum Kind {
        Eof, Word, Var, TermTok, Integer,
        LBrace, RBrace, LParen, RParen, Comma, Dot,
        Bang, AndAnd, OrOr, Eq, Neq, Le, Ge, Lt, Gt
    };
    Kind kind = Eof;
    std::string text;  // Word/Var(without '?')/Integer
    Term term;         // TermTok
    size_t line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> all() {
        std::vector<Token> out;
        for (;;) {
            Token t = next();
            out.push_back(t);
            if (t.kind == Token::Eof) return out;
        }
    }

private:
    const std::string& s_;
    size_t i_ = 0, line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(line_, col_, msg);
    }

    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    char get() {
        char c = s_[i_++];
        if (c == '\n') { ++line_; col_ = 1; } else ++col_;
        return c;
    }

    Token make(Token::Kind k, std::string text = {}) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.line = line_;
        t.col = col_;
        return t;
    }

    Token next() {
        while (i_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[i_])))
            get();
        if (i_ >= s_.size()) return make(Token::Eof);
        char c = peek();
        switch (c) {
        case '{': get(); return make(Token::LBrace);
        case '}': get(); return make(Token::RBrace);
        case '(': get(); return make(Token::LParen);
        case ')': get(); return make(Token::RParen);
        case ',': get(); return make(Token::Comma);
        case '.': get(); return make(Token::Dot);
        case '=': get(); return make(Token::Eq);
        case '!':
            get();
            if (peek() == '=') { get(); return make(Token::Neq); }
            return make(Token::Bang);
        case '<':
            if (i_ + 1 < s_.size() && s_[i_ + 1] == '=') { get(); get(); return make(Token::Le); }
            // '<' starts an IRI when followed by a non-space IRI character.
            if (i_ + 1 < s_.size() && s_[i_ + 1] != ' ' && s_[i_ + 1] != '\0') {
                get();
                std::string iri;
                while (peek() != '>') {
                    if (i_ >= s_.size()) fail("unterminated IRI");
                    iri += get();
                }
                get();
                Token t = make(Token::TermTok);
                t.term = Term::iri(iri);
                return t;
            }
            get();
            return make(Token::Lt);
        case '>':
            get();
            if (peek() == '=') { get(); return make(Token::Ge); }
            return make(Token::Gt);
        case '&':
            get();
            if (peek() != '&') fail("expected '&&'");
            get();
            return make(Token::AndAnd);
        case '|':
            get();
            if (peek() != '|') fail("expected '||'");
            get();
            return make(Token::OrOr);
        case '?': {
            get();
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += get();
            if (name.empty()) fail("empty variable name");
            return make(Token::Var, name);
        }
        case '_': {
            get();
            if (peek() != ':') fail("expected blank node label");
            get();
            std::string label;
            while (std::isalnum(static_cast<unsigned char>(peek())) ||
                   peek() == '_' || peek() == '-')
                label += get();
            Token t = make(Token::TermTok);
            t.term = Term::blank(label);
            return t;
        }
        case '"': {
            get();
            std::string lex;
            while (peek() != '"') {
                if (i_ >= s_.size()) fail("unterminated string");
                char d = get();
                if (d == '\\') {
                    char e = get();
                    switch (e) {
                    case 'n': lex += '\n'; break;
                    case 't': lex += '\t'; break;
                    case 'r': lex += '\r'; break;
                    case '"': lex += '"'; break;
                    case '\\': lex += '\\'; break;
                    default: fail("unsupported escape");
                    }
                } else {
                    lex += d;
                }
            }
            get();
            std::string dt = iris::xsd_string;
            if (peek() == '^') {
                get();
                if (get() != '^' || get() != '<') fail("expected ^^<iri>");
                dt.clear();
                while (peek() != '>') {
                    if (i_ >= s_.size()) fail("unterminated IRI");
                    dt += get();
                }
                get();
            }
            Token t = make(Token::TermTok);
            t.term = Term::literal(lex, dt);
            return t;
        }
        default:
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
                return make(Token::Integer, num);
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string word;
                while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                    word += get();
                return make(Token::Word, word);
            }
            fail(std::string("unexpected character '") + c + "'");
        }
    }
};

// ---------------------------------------------------------------------------
// AST

struct Expr {
    enum Kind { Or, And, Not, Cmp, In, IsLiteral, DatatypeFn, Const, VarRef };
    Kind kind = Const;
    std::vector<Expr> args;
    Token::Kind cmpOp = Token::Eq; // Cmp
    bool negatedIn = false;        // In
    Term term;                     // Const
    std::string var;               // VarRef
};

struct QTerm {
    bool isVar = false;
    std::string var;
    Term term;
};

struct Group;

struct SubSelect {
    std::string projVar;
    std::shared_ptr<Group> where;
    bool hasHaving = false;
    std::string countVar;
    Token::Kind cmpOp = Token::Ge;
    long long bound = 0;
};

struct Element {
    enum Kind { TriplePat, Filter, NotExists, Exists, UnionPat, Values, Sub, Nested };
    Kind kind = TriplePat;
    QTerm s, p, o;                              // TriplePat
    Expr expr;                                  // Filter
    std::vector<std::shared_ptr<Group>> groups; // NotExists/Exists/UnionPat/Nested
    std::string var;                            // Values
    std::vector<Term> values;                   // Values
    SubSelect sub;                              // Sub
};

struct Group {
    std::vector<Element> elems;
};

struct Query {
    bool distinct = false;
    std::vector<std::string> projVars;
    Group where;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Query parseQuery() {
        expectWord("SELECT");
        Query q;
        if (peekWord("DISTINCT")) { q.distinct = true; ++pos_; }
        while (cur().kind == Token::Var) q.projVars.push_back(get().text);
        if (q.projVars.empty()) fail("expected projection variables");
        expectWord("WHERE");
        q.where = parseGroupBraced();
        if (cur().kind != Token::Eof) fail("trailing tokens after query");
        return q;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& get() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(cur().line, cur().col, msg);
    }

    bool peekWord(const std::string& w) const {
        return cur().kind == Token::Word && cur().text == w;
    }
    void expectWord(const std::string& w) {
        if (!peekWord(w)) fail("expected '" + w + "'");
        ++pos_;
    }
    void expect(Token::Kind k, const char* what) {
        if (cur().kind != k) fail(std::string("expected ") + what);
        ++pos_;
    }

    Group parseGroupBraced() {
        expect(Token::LBrace, "'{'");
        Group g = parseGroupBody();
        expect(Token::RBrace, "'}'");
        return g;
    }

    Group parseGroupBody() {
        Group g;
        while (cur().kind != Token::RBrace && cur().kind != Token::Eof)
            g.elems.push_back(parseElement());
        return g;
    }

    QTerm parseQTerm() {
        QTerm t;
        if (cur().kind == Token::Var) {
            t.isVar = true;
            t.var = get().text;
        } else if (cur().kind == Token::TermTok) {
            t.term = get().term;
        } else {
            fail("expected a variable or RDF term");
        }
        return t;
    }

    Element parseElement() {
        if (peekWord("FILTER")) {
            ++pos_;
            Element e;
            if (peekWord("NOT")) {
                ++pos_;
                expectWord("EXISTS");
                e.kind = Element::NotExists;
                e.groups.push_back(std::make_shared<Group>(parseGroupBraced()));
                return e;
            }
            if (peekWord("EXISTS")) {
                ++pos_;
                e.kind = Element::Exists;
                e.groups.push_back(std::make_shared<Group>(parseGroupBraced()));
                return e;
            }
            expect(Token::LParen, "'('");
            e.kind = Element::Filter;
            e.expr = parseExpr();
            expect(Token::RParen, "')'");
            return e;
        }
        if (peekWord("VALUES")) {
            ++pos_;
            Element e;
            e.kind = Element::Values;
            if (cur().kind != Token::Var) fail("expected variable after VALUES");
            e.var = get().text;
            expect(Token::LBrace, "'{'");
            while (cur().kind == Token::TermTok) e.values.push_back(get().term);
            expect(Token::RBrace, "'}'");
            return e;
        }
        if (cur().kind == Token::LBrace) {
            ++pos_;
            Element e;
            if (peekWord("SELECT")) {
                e.kind = Element::Sub;
                e.sub = parseSubSelect();
                expect(Token::RBrace, "'}'");
                return e;
            }
            auto first = std::make_shared<Group>(parseGroupBody());
            expect(Token::RBrace, "'}'");
            e.groups.push_back(std::move(first));
            if (peekWord("UNION")) {
                e.kind = Element::UnionPat;
                while (peekWord("UNION")) {
                    ++pos_;
                    e.groups.push_back(std::make_shared<Group>(parseGroupBraced()));
                }
            } else {
                e.kind = Element::Nested;
            }
            return e;
        }
        // Triple pattern.
        Element e;
        e.kind = Element::TriplePat;
        e.s = parseQTerm();
        e.p = parseQTerm();
        e.o = parseQTerm();
        expect(Token::Dot, "'.'");
        return e;
    }

    SubSelect parseSubSelect() {
        expectWord("SELECT");
        SubSelect s;
        if (cur().kind != Token::Var) fail("expected projection variable");
        s.projVar = get().text;
        expectWord("WHERE");
        s.where = std::make_shared<Group>(parseGroupBraced());
        if (peekWord("GROUP")) {
            ++pos_;
            expectWord("BY");
            if (cur().kind != Token::Var || cur().text != s.projVar)
                fail("GROUP BY variable must match the projection");
            ++pos_;
            expectWord("HAVING");
            expect(Token::LParen, "'('");
            expectWord("COUNT");
            expect(Token::LParen, "'('");
            expectWord("DISTINCT");
            if (cur().kind != Token::Var) fail("expected counted variable");
            s.countVar = get().text;
            expect(Token::RParen, "')'");
            switch (cur().kind) {
            case Token::Ge: case Token::Gt: case Token::Le:
            case Token::Lt: case Token::Eq:
                s.cmpOp = get().kind;
                break;
            default:
                fail("expected comparison operator");
            }
            if (cur().kind != Token::Integer) fail("expected integer bound");
            s.bound = std::stoll(get().text);
            expect(Token::RParen, "')'");
            s.hasHaving = true;
        }
        return s;
    }

    Expr parseExpr() { return parseOr(); }

    Expr parseOr() {
        Expr e = parseAnd();
        while (cur().kind == Token::OrOr) {
            ++pos_;
            Expr r;
            r.kind = Expr::Or;
            r.args = {std::move(e), parseAnd()};
            e = std::move(r);
        }
        return e;
    }

    Expr parseAnd() {
        Expr e = parseUnary();
        while (cur().kind == Token::AndAnd) {
            ++pos_;
            Expr r;
            r.kind = Expr::And;
            r.args = {std::move(e), parseUnary()};
            e = std::move(r);
        }
        return e;
    }

    Expr parseUnary() {
        if (cur().kind == Token::Bang) {
            ++pos_;
            Expr e;
            e.kind = Expr::Not;
            e.args = {parseUnary()};
            return e;
        }
        Expr lhs = parsePrimary();
        switch (cur().kind) {
        case Token::Eq: case Token::Neq: case Token::Le:
        case Token::Ge: case Token::Lt: case Token::Gt: {
            Expr e;
            e.kind = Expr::Cmp;
            e.cmpOp = get().kind;
            e.args = {std::move(lhs), parsePrimary()};
            return e;
        }
        default: break;
        }
        bool negated = false;
        if (peekWord("NOT")) {
            ++pos_;
            negated = true;
            if (!peekWord("IN")) fail("expected IN after NOT");
        }
        if (peekWord("IN")) {
            ++pos_;
            Expr e;
            e.kind = Expr::In;
            e.negatedIn = negated;
            e.args.push_back(std::move(lhs));
            expect(Token::LParen, "'('");
            if (cur().kind != Token::RParen) {
                e.args.push_back(parsePrimary());
                while (cur().kind == Token::Comma) {
                    ++pos_;
                    e.args.push_back(parsePrimary());
                }
            }
            expect(Token::RParen, "')'");
            return e;
        }
        if (negated) fail("expected IN after NOT");
        return lhs;
    }

    Expr parsePrimary() {
        if (cur().kind == Token::LParen) {
            ++pos_;
            Expr e = parseExpr();
            expect(Token::RParen, "')'");
            return e;
        }
        if (peekWord("isLiteral") || peekWord("datatype")) {
            Expr e;
            e.kind = cur().text == "isLiteral" ? Expr::IsLiteral : Expr::DatatypeFn;
            ++pos_;
            expect(Token::LParen, "'('");
            e.args = {parseExpr()};
            expect(Token::RParen, "')'");
            return e;
        }
        if (cur().kind == Token::Var) {
            Expr e;
            e.kind = Expr::VarRef;
            e.var = get().text;
            return e;
        }
        if (cur().kind == Token::TermTok) {
            Expr e;
            e.kind = Expr::Const;
            e.term = get().term;
            return e;
        }
        if (cur().kind == Token::Integer) {
            Expr e;
            e.kind = Expr::Const;
            e.term = Term::literal(get().text, iris::xsd_integer);
            return e;
        }
        fail("expected an expression");
    }
};

// ---------------------------------------------------------------------------
// Evaluation

class Evaluator {
public:
    explicit Evaluator(const Graph& g) : g_(g) {}

    std::vector<Binding> run(const Query& q) {
        std::vector<Binding> rows = evalGroup(q.where, Binding{});
        std::set<Binding> seen;
        std::vector<Binding> out;
        for (const Binding& row : rows) {
            Binding projected;
            for (const std::string& v : q.projVars) {
                auto it = row.find(v);
                if (it != row.end()) projected[v] = it->second;
            }
            if (!q.distinct || seen.insert(projected).second)
                out.push_back(std::move(projected));
        }
        return out;
    }

private:
    const Graph& g_;

    std::vector<Binding> evalGroup(const Group& grp, const Binding& initial) {
        std::vector<Binding> rows{initial};
        for (const Element& e : grp.elems) rows = apply(e, rows);
        return rows;
    }

    static bool matchTerm(const QTerm& q, const Term& t, Binding& row) {
        if (!q.isVar) return q.term == t;
        auto it = row.find(q.var);
        if (it != row.end()) return it->second == t;
        row[q.var] = t;
        return true;
    }

    std::vector<Binding> apply(const Element& e, const std::vector<Binding>& rows) {
        std::vector<Binding> out;
        switch (e.kind) {
        case Element::TriplePat:
            for (const Binding& row : rows)
                for (const Triple& t : g_) {
                    Binding next = row;
                    if (matchTerm(e.s, t.subject, next) &&
                        matchTerm(e.p, t.predicate, next) &&
                        matchTerm(e.o, t.object, next))
                        out.push_back(std::move(next));
                }
            break;
        case Element::Filter:
            for (const Binding& row : rows)
                if (truthValue(e.expr, row)) out.push_back(row);
            break;
        case Element::NotExists:
        case Element::Exists:
            for (const Binding& row : rows) {
                bool any = !evalGroup(*e.groups[0], row).empty();
                if (any == (e.kind == Element::Exists)) out.push_back(row);
            }
            break;
        case Element::UnionPat:
            for (const Binding& row : rows)
                for (const auto& arm : e.groups) {
                    std::vector<Binding> r = evalGroup(*arm, row);
                    out.insert(out.end(), r.begin(), r.end());
                }
            break;
        case Element::Nested:
            for (const Binding& row : rows) {
                std::vector<Binding> r = evalGroup(*e.groups[0], row);
                out.insert(out.end(), r.begin(), r.end());
            }
            break;
        case Element::Values:
            for (const Binding& row : rows)
                for (const Term& t : e.values) {
                    Binding next = row;
                    QTerm q;
                    q.isVar = true;
                    q.var = e.var;
                    if (matchTerm(q, t, next)) out.push_back(std::move(next));
                }
            break;
        case Element::Sub:
            for (const Binding& row : rows)
                for (const Term& t : subResults(e.sub, row)) {
                    Binding next = row;
                    QTerm q;
                    q.isVar = true;
                    q.var = e.sub.projVar;
                    if (matchTerm(q, t, next)) out.push_back(std::move(next));
                }
            break;
        }
        return out;
    }

    // Values of the projection variable produced by a (possibly grouped)
    // subselect, evaluated with substitution of the outer binding.
    std::vector<Term> subResults(const SubSelect& s, const Binding& outer) {
        std::vector<Binding> rows = evalGroup(*s.where, outer);
        if (!s.hasHaving) {
            std::set<Term> distinct;
            for (const Binding& row : rows) {
                auto it = row.find(s.projVar);
                if (it != row.end()) distinct.insert(it->second);
            }
            return {distinct.begin(), distinct.end()};
        }
        std::map<Term, std::set<Term>> groups;
        for (const Binding& row : rows) {
            auto key = row.find(s.projVar);
            auto cnt = row.find(s.countVar);
            if (key == row.end() || cnt == row.end()) continue;
            groups[key->second].insert(cnt->second);
        }
        std::vector<Term> out;
        for (const auto& [key, vals] : groups) {
            long long n = static_cast<long long>(vals.size());
            bool keep = false;
            switch (s.cmpOp) {
            case Token::Ge: keep = n >= s.bound; break;
            case Token::Gt: keep = n > s.bound; break;
            case Token::Le: keep = n <= s.bound; break;
            case Token::Lt: keep = n < s.bound; break;
            default: keep = n == s.bound; break;
            }
            if (keep) out.push_back(key);
        }
        return out;
    }

    // Expression evaluation; errors (unbound variables, datatype of a
    // non-literal) poison the result, making the filter drop the row.
    std::optional<Term> evalExpr(const Expr& e, const Binding& row) {
        switch (e.kind) {
        case Expr::Const:
            return e.term;
        case Expr::VarRef: {
            auto it = row.find(e.var);
            if (it == row.end()) return std::nullopt;
            return it->second;
        }
        case Expr::IsLiteral: {
            auto v = evalExpr(e.args[0], row);
            if (!v) return std::nullopt;
            return boolTerm(v->isLiteral());
        }
        case Expr::DatatypeFn: {
            auto v = evalExpr(e.args[0], row);
            if (!v || !v->isLiteral()) return std::nullopt;
            return Term::iri(v->datatype);
        }
        case Expr::Not: {
            auto b = truthValue3(e.args[0], row);
            if (!b) return std::nullopt;
            return boolTerm(!*b);
        }
        case Expr::And: {
            auto a = truthValue3(e.args[0], row), b = truthValue3(e.args[1], row);
            if (a && !*a) return boolTerm(false);
            if (b && !*b) return boolTerm(false);
            if (!a || !b) return std::nullopt;
            return boolTerm(true);
        }
        case Expr::Or: {
            auto a = truthValue3(e.args[0], row), b = truthValue3(e.args[1], row);
            if (a && *a) return boolTerm(true);
            if (b && *b) return boolTerm(true);
            if (!a || !b) return std::nullopt;
            return boolTerm(false);
        }
        case Expr::Cmp: {
            auto a = evalExpr(e.args[0], row), b = evalExpr(e.args[1], row);
            if (!a || !b) return std::nullopt;
            bool eq = *a == *b;
            switch (e.cmpOp) {
            case Token::Eq: return boolTerm(eq);
            case Token::Neq: return boolTerm(!eq);
            default: return std::nullopt; // ordering comparisons unsupported
            }
        }
        case Expr::In: {
            auto a = evalExpr(e.args[0], row);
            if (!a) return std::nullopt;
            bool found = false;
            for (size_t i = 1; i < e.args.size(); ++i) {
                auto b = evalExpr(e.args[i], row);
                if (b && *a == *b) found = true;
            }
            return boolTerm(e.negatedIn ? !found : found);
        }
        }
        return std::nullopt;
    }

    static Term boolTerm(bool b) {
        return Term::literal(b ? "true" : "false", iris::xsd_boolean);
    }

    std::optional<bool> truthValue3(const Expr& e, const Binding& row) {
        auto v = evalExpr(e, row);
        if (!v) return std::nullopt;
        if (v->isLiteral() && v->datatype == iris::xsd_boolean)
            return v->value == "true" || v->value == "1";
        return std::nullopt;
    }

    bool truthValue(const Expr& e, const Binding& row) {
        auto b = truthValue3(e, row);
        return b && *b;
    }
};

} // namespace

std::vector<Binding> eval_query(const std::string& queryText, const Graph& g) {
    Parser parser(Lexer(queryText).all());
    Query q = parser.parseQuery();
    return Evaluator(g).run(q);
}

} // namespace cwrdf
