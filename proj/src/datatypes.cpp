#include "cwrdf/datatypes.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "cwrdf/errors.hpp"

namespace cwrdf {

bool operator==(const Value& a, const Value& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Value::Kind::String:
    case Value::Kind::LangString: return a.str == b.str;
    case Value::Kind::Boolean: return a.boolean == b.boolean;
    case Value::Kind::Double: return a.dbl == b.dbl;
    case Value::Kind::Numeric: return a.num == b.num;
    }
    return false;
}

bool operator<(const Value& a, const Value& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    switch (a.kind) {
    case Value::Kind::String:
    case Value::Kind::LangString: return a.str < b.str;
    case Value::Kind::Boolean: return a.boolean < b.boolean;
    case Value::Kind::Double: return a.dbl < b.dbl;
    case Value::Kind::Numeric: return a.num < b.num;
    }
    return false;
}

std::string Value::canonicalLexical() const {
    switch (kind) {
    case Kind::String:
    case Kind::LangString:
        return str;
    case Kind::Boolean:
        return boolean ? "true" : "false";
    case Kind::Double: {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17G", dbl);
        return buf;
    }
    case Kind::Numeric: {
        using boost::multiprecision::cpp_int;
        cpp_int n = boost::multiprecision::numerator(num);
        cpp_int d = boost::multiprecision::denominator(num);
        if (d == 1) return n.str();
        // Decimal lexicals only produce denominators with factors 2 and 5,
        // so some 10^k is divisible by d. Scale to an integer with k
        // fractional digits.
        cpp_int pow10 = 1;
        int digits = 0;
        while (pow10 % d != 0) {
            pow10 *= 10;
            ++digits;
        }
        cpp_int scaled = n * (pow10 / d);
        bool neg = scaled < 0;
        std::string s = cpp_int(boost::multiprecision::abs(scaled)).str();
        while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
        s.insert(s.end() - digits, '.');
        return (neg ? "-" : "") + s;
    }
    }
    return {};
}

std::string Value::canonicalDatatype() const {
    switch (kind) {
    case Kind::String: return iris::xsd_string;
    case Kind::LangString: return iris::rdf_langString;
    case Kind::Boolean: return iris::xsd_boolean;
    case Kind::Double: return iris::xsd_double;
    case Kind::Numeric: return isIntegral() ? iris::xsd_integer : iris::xsd_decimal;
    }
    return {};
}

namespace {

// cpp_int's string constructor reads leading zeros as octal; always build
// from a stripped decimal digit string.
boost::multiprecision::cpp_int digitsToInt(const std::string& digits, bool neg) {
    size_t nz = digits.find_first_not_of('0');
    boost::multiprecision::cpp_int v =
        nz == std::string::npos ? 0 : boost::multiprecision::cpp_int(digits.substr(nz));
    return neg ? -v : v;
}

std::optional<Rational> parseInteger(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) return std::nullopt;
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
    return Rational(digitsToInt(s.substr(i), neg));
}

std::optional<Rational> parseDecimal(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    std::string digits;
    int scale = 0;
    bool dot = false, any = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (dot) return std::nullopt;
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (dot) ++scale;
            any = true;
        } else {
            return std::nullopt;
        }
    }
    if (!any) return std::nullopt;
    boost::multiprecision::cpp_int n = digitsToInt(digits, neg);
    boost::multiprecision::cpp_int d = 1;
    for (int k = 0; k < scale; ++k) d *= 10;
    return Rational(n, d);
}

std::optional<double> parseDouble(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "INF") return HUGE_VAL;
    if (s == "-INF") return -HUGE_VAL;
    if (s == "NaN") return std::nan("");
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + s.size()) return std::nullopt;
    return v;
}

} // namespace

DatatypeRegistry DatatypeRegistry::defaults() {
    DatatypeRegistry reg;
    reg.add({iris::xsd_string,
             [](const std::string& s) -> std::optional<Value> { return Value::string(s); },
             [](const Value& v) { return v.kind == Value::Kind::String; }});
    reg.add({iris::rdf_langString,
             [](const std::string& s) -> std::optional<Value> {
                 if (s.find('@') == std::string::npos) return std::nullopt;
                 return Value::langString(s);
             },
             [](const Value& v) { return v.kind == Value::Kind::LangString; }});
    reg.add({iris::xsd_boolean,
             [](const std::string& s) -> std::optional<Value> {
                 if (s == "true" || s == "1") return Value::boolean_(true);
                 if (s == "false" || s == "0") return Value::boolean_(false);
                 return std::nullopt;
             },
             [](const Value& v) { return v.kind == Value::Kind::Boolean; }});
    reg.add({iris::xsd_integer,
             [](const std::string& s) -> std::optional<Value> {
                 auto r = parseInteger(s);
                 if (!r) return std::nullopt;
                 return Value::numeric(*r);
             },
             [](const Value& v) { return v.isIntegral(); }});
    reg.add({iris::xsd_decimal,
             [](const std::string& s) -> std::optional<Value> {
                 auto r = parseDecimal(s);
                 if (!r) return std::nullopt;
                 return Value::numeric(*r);
             },
             [](const Value& v) { return v.kind == Value::Kind::Numeric; }});
    reg.add({iris::xsd_double,
             [](const std::string& s) -> std::optional<Value> {
                 auto r = parseDouble(s);
                 if (!r) return std::nullopt;
                 return Value::double_(*r);
             },
             [](const Value& v) { return v.kind == Value::Kind::Double; }});
    return reg;
}

void DatatypeRegistry::add(Datatype d) {
    datatypes_[d.iri] = std::move(d);
}

const Datatype& DatatypeRegistry::get(const std::string& iri) const {
    auto it = datatypes_.find(iri);
    if (it == datatypes_.end()) throw UnknownDatatypeError(iri);
    return it->second;
}

Value literal_value(const Term& literal, const DatatypeRegistry& registry) {
    const Datatype& dt = registry.get(literal.datatype);
    auto v = dt.valueOf(literal.value);
    if (!v) throw IllFormedLiteralError(literal.value, literal.datatype);
    return *v;
}

} // namespace cwrdf
