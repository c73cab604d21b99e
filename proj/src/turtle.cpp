#include "cwrdf/turtle.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cwrdf/errors.hpp"

namespace cwrdf {

namespace {

bool isAbsoluteIri(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

std::string resolveRelative(const std::string& ref, const std::string& base) {
    if (ref.empty()) return base;
    if (ref[0] == '#') {
        size_t hash = base.find('#');
        return (hash == std::string::npos ? base : base.substr(0, hash)) + ref;
    }
    size_t scheme = base.find(':');
    if (ref.rfind("//", 0) == 0)
        return base.substr(0, scheme + 1) + ref;
    // Locate the start of the path (after an authority, if any).
    size_t pathStart = scheme + 1;
    if (base.compare(pathStart, 2, "//") == 0) {
        pathStart = base.find('/', pathStart + 2);
        if (pathStart == std::string::npos) pathStart = base.size();
    }
    if (ref[0] == '/')
        return base.substr(0, pathStart) + ref;
    size_t lastSlash = base.find_last_of('/');
    if (lastSlash != std::string::npos && lastSlash >= pathStart)
        return base.substr(0, lastSlash + 1) + ref;
    if (!base.empty() && (base.back() == '#' || base.back() == ':'))
        return base + ref;
    return base + "/" + ref;
}

class Lexer {
public:
    enum Token {
        Eof, Dot, Comma, Semicolon, IriRef, Name, BlankLabel, String,
        Integer, Decimal, Double, TypeMarker, LangTag, PrefixDirective,
        BaseDirective
    };

    explicit Lexer(std::istream& in) : in_(in) {}

    size_t line() const { return tokenLine_; }
    size_t column() const { return tokenColumn_; }
    const std::string& text() const { return text_; }

    Token next() {
        if (pending_) {
            Token t = *pending_;
            pending_.reset();
            text_ = pendingText_;
            return t;
        }
        skipWhitespace();
        tokenLine_ = line_;
        tokenColumn_ = column_;
        text_.clear();
        int c = get();
        if (c == EOF) return Eof;
        switch (c) {
        case '.': return Dot;
        case ',': return Comma;
        case ';': return Semicolon;
        case '[': case ']':
            fail("anonymous blank nodes '[ ]' are not supported by this Turtle subset");
        case '(': case ')':
            fail("collections '( ... )' are not supported by this Turtle subset");
        case '<':
            if (peek() == '<')
                fail("quoted triples '<< ... >>' are not supported by this Turtle subset");
            return lexIriRef();
        case '"': return lexString();
        case '@': return lexAt();
        case '^':
            if (get() != '^') fail("expected '^^'");
            return TypeMarker;
        case '_':
            if (peek() != ':') fail("expected ':' after '_' in blank node label");
            get();
            return lexBlankLabel();
        default:
            if (c == '+' || c == '-' || std::isdigit(c)) return lexNumber(static_cast<char>(c));
            if (isNameStart(c)) return lexName(static_cast<char>(c));
            fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        return Eof; // unreachable
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tokenLine_, tokenColumn_, msg);
    }

private:
    std::istream& in_;
    size_t line_ = 1, column_ = 0;
    size_t tokenLine_ = 1, tokenColumn_ = 1;
    std::string text_;
    std::optional<Token> pending_;
    std::string pendingText_;

    int get() {
        int c = in_.get();
        if (c == '\n') { ++line_; column_ = 0; }
        else if (c != EOF) ++column_;
        return c;
    }
    int peek() { return in_.peek(); }

    void skipWhitespace() {
        while (true) {
            int c = peek();
            if (c == '#') {
                while (c != EOF && c != '\n') c = get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                return;
            }
        }
    }

    static bool isNameStart(int c) {
        return std::isalpha(c) || c == ':';
    }
    static bool isNameChar(int c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == ':' || c == '%';
    }

    Token lexIriRef() {
        while (true) {
            int c = get();
            if (c == EOF || c == '\n') fail("unterminated IRI reference");
            if (c == '>') return IriRef;
            text_ += static_cast<char>(c);
        }
    }

    Token lexString() {
        if (peek() == '"') {
            get();
            if (peek() == '"')
                fail("long (triple-quoted) strings are not supported by this Turtle subset");
            return String; // empty string
        }
        while (true) {
            int c = get();
            if (c == EOF || c == '\n') fail("unterminated string literal");
            if (c == '"') return String;
            if (c == '\\') {
                int e = get();
                switch (e) {
                case 't': text_ += '\t'; break;
                case 'n': text_ += '\n'; break;
                case 'r': text_ += '\r'; break;
                case '"': text_ += '"'; break;
                case '\\': text_ += '\\'; break;
                case 'u': case 'U': {
                    int len = e == 'u' ? 4 : 8;
                    unsigned long cp = 0;
                    for (int i = 0; i < len; ++i) {
                        int h = get();
                        if (!std::isxdigit(h)) fail("bad unicode escape");
                        cp = cp * 16 + static_cast<unsigned long>(
                            std::isdigit(h) ? h - '0' : std::tolower(h) - 'a' + 10);
                    }
                    appendUtf8(cp);
                    break;
                }
                default: fail("unsupported escape sequence");
                }
            } else {
                text_ += static_cast<char>(c);
            }
        }
    }

    void appendUtf8(unsigned long cp) {
        if (cp < 0x80) text_ += static_cast<char>(cp);
        else if (cp < 0x800) {
            text_ += static_cast<char>(0xC0 | (cp >> 6));
            text_ += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            text_ += static_cast<char>(0xE0 | (cp >> 12));
            text_ += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            text_ += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            text_ += static_cast<char>(0xF0 | (cp >> 18));
            text_ += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            text_ += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            text_ += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    Token lexAt() {
        std::string word;
        while (std::isalpha(peek()) || peek() == '-') word += static_cast<char>(get());
        if (word == "prefix") return PrefixDirective;
        if (word == "base") return BaseDirective;
        // Anything else is a language tag following a string literal.
        if (word.empty()) fail("expected directive or language tag after '@'");
        text_ = word;
        return LangTag;
    }

    Token lexBlankLabel() {
        while (std::isalnum(peek()) || peek() == '_' || peek() == '-' || peek() == '.') {
            if (peek() == '.' ) {
                // A dot ends the label unless followed by a label character.
                get();
                int n = peek();
                if (std::isalnum(n) || n == '_' || n == '-') { text_ += '.'; continue; }
                stash(Dot);
                return BlankLabel;
            }
            text_ += static_cast<char>(get());
        }
        if (text_.empty()) fail("empty blank node label");
        return BlankLabel;
    }

    Token lexNumber(char first) {
        text_ += first;
        bool seenDot = false, seenExp = false;
        while (true) {
            int c = peek();
            if (std::isdigit(c)) { text_ += static_cast<char>(get()); continue; }
            if (c == '.' && !seenDot && !seenExp) {
                get();
                if (!std::isdigit(peek())) { stash(Dot); break; }
                seenDot = true;
                text_ += '.';
                continue;
            }
            if ((c == 'e' || c == 'E') && !seenExp) {
                seenExp = true;
                text_ += static_cast<char>(get());
                if (peek() == '+' || peek() == '-') text_ += static_cast<char>(get());
                continue;
            }
            break;
        }
        if (seenExp) return Double;
        if (seenDot) return Decimal;
        return Integer;
    }

    Token lexName(char first) {
        text_ += first;
        while (true) {
            int c = peek();
            if (c == '.') {
                get();
                int n = peek();
                if (std::isalnum(n) || n == '_' || n == '-' || n == '%') { text_ += '.'; continue; }
                stash(Dot);
                return Name;
            }
            if (!isNameChar(c)) break;
            text_ += static_cast<char>(get());
        }
        return Name;
    }

    void stash(Token t) {
        pending_ = t;
        pendingText_.clear();
    }
};

class Parser {
public:
    Parser(std::istream& in, std::optional<std::string> base)
        : lexer_(in), base_(std::move(base)) {}

    Graph parse() {
        Graph g;
        Lexer::Token t = nextToken();
        while (t != Lexer::Eof) {
            if (t == Lexer::PrefixDirective) {
                parsePrefix();
            } else if (t == Lexer::BaseDirective) {
                parseBase();
            } else {
                parseStatement(g, t);
            }
            t = nextToken();
        }
        return g;
    }

private:
    Lexer lexer_;
    std::optional<std::string> base_;
    std::map<std::string, std::string> prefixes_;

    void expect(Lexer::Token got, Lexer::Token want, const char* what) {
        if (got != want) lexer_.fail(std::string("expected ") + what);
    }

    void parsePrefix() {
        Lexer::Token t = nextToken();
        expect(t, Lexer::Name, "prefix name ending in ':'");
        std::string name = lexer_.text();
        if (name.empty() || name.back() != ':')
            lexer_.fail("prefix name must end in ':'");
        name.pop_back();
        t = nextToken();
        expect(t, Lexer::IriRef, "IRI reference");
        prefixes_[name] = resolve(lexer_.text());
        expect(nextToken(), Lexer::Dot, "'.' after @prefix directive");
    }

    void parseBase() {
        expect(nextToken(), Lexer::IriRef, "IRI reference");
        base_ = resolve(lexer_.text());
        expect(nextToken(), Lexer::Dot, "'.' after @base directive");
    }

    std::string resolve(const std::string& ref) {
        if (isAbsoluteIri(ref)) return ref;
        if (!base_)
            lexer_.fail("relative IRI <" + ref + "> with no base");
        return resolveRelative(ref, *base_);
    }

    std::string expandPrefixed(const std::string& name) {
        size_t colon = name.find(':');
        if (colon == std::string::npos)
            lexer_.fail("expected a prefixed name, found '" + name + "'");
        std::string pfx = name.substr(0, colon);
        auto it = prefixes_.find(pfx);
        if (it == prefixes_.end())
            lexer_.fail("unresolved prefix '" + pfx + ":'");
        return it->second + name.substr(colon + 1);
    }

    void parseStatement(Graph& g, Lexer::Token t) {
        Term subject = parseResource(t, "subject");
        // predicate-object list
        while (true) {
            Term predicate = parsePredicate(nextToken());
            // object list
            while (true) {
                Term object = parseObject(nextToken());
                g.insert(Triple(subject, predicate, object));
                Lexer::Token sep = nextToken();
                if (sep == Lexer::Comma) continue;
                if (sep == Lexer::Semicolon) {
                    Lexer::Token after = nextToken();
                    if (after == Lexer::Dot) return; // trailing ';'
                    predicate = parsePredicate(after);
                    continue;
                }
                expect(sep, Lexer::Dot, "'.', ',' or ';' after object");
                return;
            }
        }
    }

    Term parseResource(Lexer::Token t, const char* role) {
        switch (t) {
        case Lexer::IriRef: return Term::iri(resolve(lexer_.text()));
        case Lexer::Name: {
            std::string name = lexer_.text();
            if (name == "a" || name == "true" || name == "false")
                lexer_.fail(std::string("'") + name + "' cannot be used as " + role);
            return Term::iri(expandPrefixed(name));
        }
        case Lexer::BlankLabel: return Term::blank(lexer_.text());
        default:
            lexer_.fail(std::string("expected ") + role);
        }
    }

    Term parsePredicate(Lexer::Token t) {
        if (t == Lexer::Name && lexer_.text() == "a")
            return Term::iri(iris::rdf_type);
        Term p = parseResource(t, "predicate");
        if (!p.isIri()) lexer_.fail("predicate must be an IRI");
        return p;
    }

    Term parseObject(Lexer::Token t) {
        switch (t) {
        case Lexer::IriRef: case Lexer::BlankLabel:
            return parseResource(t, "object");
        case Lexer::Name: {
            std::string name = lexer_.text();
            if (name == "true" || name == "false")
                return Term::literal(name, iris::xsd_boolean);
            return Term::iri(expandPrefixed(name));
        }
        case Lexer::String: {
            std::string lexical = lexer_.text();
            // Peek for ^^datatype or @lang.
            Lexer::Token nxt = nextToken();
            if (nxt == Lexer::TypeMarker) {
                Lexer::Token dt = nextToken();
                if (dt == Lexer::IriRef)
                    return Term::literal(lexical, resolve(lexer_.text()));
                expect(dt, Lexer::Name, "datatype IRI after '^^'");
                return Term::literal(lexical, expandPrefixed(lexer_.text()));
            }
            if (nxt == Lexer::LangTag)
                return Term::literal(lexical + "@" + lexer_.text(), iris::rdf_langString);
            pushedBack_ = nxt;
            return Term::literal(lexical, iris::xsd_string);
        }
        case Lexer::Integer: return Term::literal(lexer_.text(), iris::xsd_integer);
        case Lexer::Decimal: return Term::literal(lexer_.text(), iris::xsd_decimal);
        case Lexer::Double: return Term::literal(lexer_.text(), iris::xsd_double);
        default:
            lexer_.fail("expected object");
        }
    }

    // One-token pushback used after plain string literals; the lexer's text
    // for the pushed token is still current when it is re-delivered.
    std::optional<Lexer::Token> pushedBack_;

    Lexer::Token nextToken() {
        if (pushedBack_) {
            Lexer::Token t = *pushedBack_;
            pushedBack_.reset();
            return t;
        }
        return lexer_.next();
    }
};

} // namespace

Graph parse_turtle(std::istream& in, const std::optional<std::string>& baseIri) {
    Parser p(in, baseIri);
    return p.parse();
}

Graph parse_turtle(const std::string& text, const std::optional<std::string>& baseIri) {
    std::istringstream in(text);
    return parse_turtle(in, baseIri);
}

Graph parse_turtle_file(const std::string& path, const std::optional<std::string>& baseIri) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return parse_turtle(in, baseIri);
}

} // namespace cwrdf
