#include "chaincodes/literals.hpp"

#include <cctype>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::int64_t parse_int(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw Error(ErrorKind::Parse, "expected a number at position " + std::to_string(pos) + " in '" + s + "'");
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
    return v;
}

std::int64_t parse_exponent(const std::string& s, std::size_t& pos) {
    if (pos < s.size() && s[pos] == '^') {
        ++pos;
        return parse_int(s, pos);
    }
    return 1;
}

/// Splits at top-level '+' / '-' into signed terms.
std::vector<std::pair<bool, std::string>> split_terms(const std::string& s) {
    std::vector<std::pair<bool, std::string>> out;
    int depth = 0;
    bool negative = false;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            if (!cur.empty()) out.emplace_back(negative, cur);
            else if (c == '+' && !out.empty()) throw Error(ErrorKind::Parse, "empty term in '" + s + "'");
            cur.clear();
            negative = c == '-';
            continue;
        }
        cur += c;
    }
    if (depth != 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in '" + s + "'");
    if (cur.empty()) throw Error(ErrorKind::Parse, "dangling sign in '" + s + "'");
    out.emplace_back(negative, cur);
    return out;
}

Elem parse_word(const std::string& s, std::size_t pos, const FiniteGroup& G) {
    Elem acc = FiniteGroup::identity();
    const bool cyclic = G.family() == GroupFamily::Cyclic;
    const bool dihedral = G.family() == GroupFamily::Dihedral;
    const std::size_t n = G.family_param();
    while (pos < s.size()) {
        if (s[pos] == '*') {
            ++pos;
            continue;
        }
        const char sym = s[pos++];
        const std::int64_t k = parse_exponent(s, pos);
        Elem gen;
        if (cyclic && sym == 'x')
            gen = n > 1 ? 1 : 0;
        else if (dihedral && sym == 'r')
            gen = n > 1 ? 1 : 0;
        else if (dihedral && sym == 's')
            gen = static_cast<Elem>(n);
        else
            throw Error(ErrorKind::Parse, std::string("unknown generator '") + sym + "' for group " + G.spec());
        for (std::int64_t i = 0; i < k; ++i) acc = G.mul(acc, gen);
    }
    return acc;
}

/// Parses "c1 w1 + c2 w2 - ..." where each coefficient is optional (defaults to `one`).
template <typename T, typename ParseCoef, typename AddTerm>
void parse_sum(const std::string& raw, const FiniteGroup& G, const T& one, const ParseCoef& coefficient,
               const AddTerm& add, bool u_coefficients = false) {
    const std::string s = strip(raw);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty element literal");
    for (const auto& [negative, term] : split_terms(s)) {
        std::size_t pos = 0;
        T coef = one;
        const bool has_coef = term[0] == '(' || std::isdigit(static_cast<unsigned char>(term[0])) ||
                              (u_coefficients && term[0] == 'u');
        if (has_coef) coef = coefficient(term, pos);
        if (pos < term.size() && term[pos] == '*') ++pos;
        add(negative, coef, parse_word(term, pos, G));
    }
}

}  // namespace

std::string element_name(const FiniteGroup& G, Elem g) {
    auto power = [](const std::string& sym, std::size_t k) {
        if (k == 0) return std::string{};
        return k == 1 ? sym : sym + "^" + std::to_string(k);
    };
    switch (G.family()) {
    case GroupFamily::Cyclic:
        return g == 0 ? "1" : power("x", g);
    case GroupFamily::Dihedral: {
        const std::size_t n = G.family_param();
        if (g == 0) return "1";
        return power("r", g % n) + (g >= n ? "s" : "");
    }
    case GroupFamily::Table: break;
    }
    return "g" + std::to_string(g);
}

FAlgebraElement parse_element(const std::string& text, const GroupPtr& group, Coeff p) {
    const std::string s = strip(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw Error(ErrorKind::Parse, "unterminated coefficient list");
        std::vector<Coeff> c;
        std::size_t pos = 1;
        while (pos < s.size() - 1) {
            c.push_back(static_cast<Coeff>(parse_int(s, pos) % p));
            if (s[pos] == ',') ++pos;
        }
        return FAlgebraElement(group, p, std::move(c));
    }
    std::vector<Coeff> c(group->order(), 0);
    auto coefficient = [](const std::string& t, std::size_t& pos) { return parse_int(t, pos); };
    parse_sum(s, *group, std::int64_t{1}, coefficient, [&](bool negative, std::int64_t coef, Elem g) {
        const auto m = static_cast<std::int64_t>(p);
        std::int64_t v = coef % m;
        if (negative) v = (m - v) % m;
        c[g] = static_cast<Coeff>((c[g] + v) % m);
    });
    return FAlgebraElement(group, p, std::move(c));
}

Scalar parse_scalar(const std::string& text, const ChainRing& ring) {
    std::string s = strip(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
    Scalar acc = 0;
    for (const auto& [negative, term] : split_terms(s)) {
        std::size_t pos = 0;
        std::int64_t coef = 1;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) coef = parse_int(term, pos);
        Scalar value = ring.from_int(coef);
        if (pos < term.size()) {
            if (term[pos] != 'u' || ring.is_integer()) throw Error(ErrorKind::Parse, "bad scalar '" + text + "'");
            ++pos;
            const auto k = parse_exponent(term, pos);
            value = ring.mul(value, ring.pi_pow(static_cast<unsigned>(k)));
        }
        if (pos != term.size()) throw Error(ErrorKind::Parse, "bad scalar '" + text + "'");
        acc = negative ? ring.sub(acc, value) : ring.add(acc, value);
    }
    return acc;
}

RAlgebraElement parse_r_element(const std::string& text, const GroupPtr& group, const RingPtr& ring) {
    const std::string s = strip(text);
    std::vector<Scalar> c(group->order(), 0);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw Error(ErrorKind::Parse, "unterminated coefficient list");
        std::vector<std::string> items(1);
        int depth = 0;
        for (std::size_t i = 1; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (s[i] == ',' && depth == 0) items.emplace_back();
            else items.back() += s[i];
        }
        if (items.size() != group->order()) throw Error(ErrorKind::Parse, "coefficient list length must equal |G|");
        for (std::size_t g = 0; g < items.size(); ++g) c[g] = parse_scalar(items[g], *ring);
        return RAlgebraElement(group, ring, std::move(c));
    }
    auto coefficient = [&](const std::string& t, std::size_t& pos) {
        std::size_t end = pos;
        if (t[pos] == '(') {
            end = t.find(')', pos);
            if (end == std::string::npos) throw Error(ErrorKind::Parse, "unterminated coefficient");
            ++end;
        } else {
            while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
            if (end < t.size() && t[end] == 'u') {
                ++end;
                if (end < t.size() && t[end] == '^') ++end;
                while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
            }
        }
        const Scalar v = parse_scalar(t.substr(pos, end - pos), *ring);
        pos = end;
        return v;
    };
    parse_sum(s, *group, ring->one(), coefficient, [&](bool negative, Scalar coef, Elem g) {
        c[g] = negative ? ring->sub(c[g], coef) : ring->add(c[g], coef);
    }, !ring->is_integer());
    return RAlgebraElement(group, ring, std::move(c));
}

namespace {

std::string join_terms(const std::vector<std::pair<std::string, Elem>>& terms, const FiniteGroup& G) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [coef, g] : terms) {
        if (!out.empty()) out += "+";
        const std::string name = element_name(G, g);
        if (name == "1") out += coef;
        else if (coef == "1") out += name;
        else out += coef + name;
    }
    return out;
}

}  // namespace

std::string format_element(const FAlgebraElement& e) {
    std::vector<std::pair<std::string, Elem>> terms;
    for (Elem g = 0; g < e.size(); ++g)
        if (e[g]) terms.emplace_back(std::to_string(e[g]), g);
    return join_terms(terms, e.group());
}

std::string format_element(const RAlgebraElement& e) {
    std::vector<std::pair<std::string, Elem>> terms;
    for (Elem g = 0; g < e.size(); ++g) {
        if (!e[g]) continue;
        std::string c = e.ring().to_text(e[g]);
        if (c.find('+') != std::string::npos || (c.find('u') != std::string::npos && g != 0)) c = "(" + c + ")";
        terms.emplace_back(c, g);
    }
    return join_terms(terms, e.group());
}

}  // namespace chaincodes
