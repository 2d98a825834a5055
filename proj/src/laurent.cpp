#include "sw4/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

namespace sw4 {

namespace {

void require_same_var(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.var() != q.var()) {
        throw invariant_error("variable-label mismatch: '" + p.var() + "' vs '" +
                              q.var() + "'");
    }
}

}  // namespace

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::constant(Int c, std::string var) {
    return monomial(std::move(c), 0, std::move(var));
}

LaurentPoly LaurentPoly::monomial(Int c, int exp, std::string var) {
    LaurentPoly p(std::move(var));
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Int>>& terms,
                                    std::string var) {
    LaurentPoly p(std::move(var));
    for (const auto& [e, c] : terms) p.terms_[e] += c;
    p.prune();
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw invariant_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw invariant_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_var(p, q);
    LaurentPoly r = p;
    for (const auto& [e, c] : q.terms_) r.terms_[e] += c;
    r.prune();
    return r;
}

LaurentPoly neg(const LaurentPoly& p) {
    LaurentPoly r = p;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) { return add(p, neg(q)); }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_var(p, q);
    LaurentPoly r(p.var());
    for (const auto& [e1, c1] : p.terms_)
        for (const auto& [e2, c2] : q.terms_) r.terms_[e1 + e2] += c1 * c2;
    r.prune();
    return r;
}

LaurentPoly substitute_power(const LaurentPoly& p, int m, std::string new_label) {
    if (m <= 0) throw precondition_error("substitute_power requires m >= 1");
    LaurentPoly r(std::move(new_label));
    for (const auto& [e, c] : p.terms_) r.terms_[e * m] = c;
    return r;
}

Int eval_at_one(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

std::optional<int> symmetry_parity(const LaurentPoly& p) {
    bool plus = true, minus = true;
    for (const auto& [e, c] : p.terms()) {
        if (e == 0) continue;
        const Int mirror = p.coeff(-e);
        if (mirror != c) plus = false;
        if (mirror != -c) minus = false;
    }
    if (plus) return +1;
    if (minus) return -1;
    return std::nullopt;
}

SymmetricForm to_symmetric(const LaurentPoly& p, int parity_sign) {
    if (parity_sign != 1 && parity_sign != -1)
        throw precondition_error("parity sign must be +1 or -1");
    SymmetricForm f;
    f.parity_sign = parity_sign;
    f.var = p.var();
    f.a0 = p.coeff(0);
    for (const auto& [e, c] : p.terms()) {
        const int n = e < 0 ? -e : e;
        if (n == 0) continue;
        if (p.coeff(-n) != parity_sign * p.coeff(n))
            throw symmetry_error("symmetry violation at exponent n=" + std::to_string(n),
                                 n);
        if (e > 0) f.pairs.emplace_back(e, c);
    }
    return f;
}

LaurentPoly SymmetricForm::expand() const {
    std::vector<std::pair<int, Int>> terms;
    terms.emplace_back(0, a0);
    for (const auto& [n, an] : pairs) {
        if (n <= 0) throw invariant_error("symmetric-form exponent must be positive");
        terms.emplace_back(n, an);
        terms.emplace_back(-n, parity_sign > 0 ? an : -an);
    }
    return LaurentPoly::from_terms(terms, var);
}

std::pair<int, Int> degree_and_top(const LaurentPoly& p) {
    if (p.is_zero()) throw invariant_error("degree of the zero polynomial is undefined");
    if (!symmetry_parity(p))
        throw invariant_error("degree_and_top requires a symmetric polynomial");
    const int d = p.max_exp();
    return {d, p.coeff(d)};
}

bool is_monic(const LaurentPoly& p) {
    const auto [d, ad] = degree_and_top(p);
    (void)d;
    return ad == 1 || ad == -1;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_var(p, q);
    if (q.is_zero()) throw invariant_error("division by the zero polynomial");
    if (p.is_zero()) return LaurentPoly(p.var());

    // Shift both to ordinary polynomials with constant term at index 0.
    const int plo = p.min_exp(), phi = p.max_exp();
    const int qlo = q.min_exp(), qhi = q.max_exp();
    std::vector<Int> a(static_cast<size_t>(phi - plo) + 1), b(static_cast<size_t>(qhi - qlo) + 1);
    for (const auto& [e, c] : p.terms()) a[static_cast<size_t>(e - plo)] = c;
    for (const auto& [e, c] : q.terms()) b[static_cast<size_t>(e - qlo)] = c;

    if (a.size() < b.size()) throw invariant_error("inexact Laurent division (degree)");
    std::vector<Int> quot(a.size() - b.size() + 1);
    const Int& lead = b.back();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        const Int& top = a[static_cast<size_t>(i) + b.size() - 1];
        if (top % lead != 0)
            throw invariant_error("inexact Laurent division (leading coefficient)");
        const Int f = top / lead;
        quot[static_cast<size_t>(i)] = f;
        if (f != 0)
            for (size_t j = 0; j < b.size(); ++j) a[static_cast<size_t>(i) + j] -= f * b[j];
    }
    for (const Int& c : a)
        if (c != 0) throw invariant_error("inexact Laurent division (remainder)");

    std::vector<std::pair<int, Int>> terms;
    for (size_t i = 0; i < quot.size(); ++i)
        if (quot[i] != 0) terms.emplace_back(static_cast<int>(i) + plo - qlo, quot[i]);
    return LaurentPoly::from_terms(terms, p.var());
}

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        const Int& c = it->second;
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool show_mag = (mag != 1) || (e == 0);
        if (show_mag) out << mag;
        if (e != 0) {
            if (show_mag) out << "*";
            out << p.var();
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly parse_text(const std::string& text, const std::string& var) {
    if (var.empty()) throw parse_error("empty variable label");
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&](bool sign_allowed) -> Int {
        size_t start = i;
        if (sign_allowed && i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw parse_error("expected integer at position " + std::to_string(start));
        return Int(text.substr(start, i - start));
    };

    std::vector<std::pair<int, Int>> terms;
    skip_ws();
    if (i == text.size()) throw parse_error("empty polynomial text");
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!terms.empty()) {
            throw parse_error("expected '+' or '-' at position " + std::to_string(i));
        }
        Int mag = 1;
        bool saw_mag = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mag = parse_int(false);
            saw_mag = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exp = 0;
        bool saw_var = false;
        if (text.compare(i, var.size(), var) == 0) {
            i += var.size();
            saw_var = true;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                const Int e = parse_int(true);
                if (e < std::numeric_limits<int>::min() || e > std::numeric_limits<int>::max())
                    throw parse_error("exponent out of range");
                exp = static_cast<int>(e);
            }
        }
        if (!saw_mag && !saw_var)
            throw parse_error("expected term at position " + std::to_string(i));
        terms.emplace_back(exp, sign > 0 ? mag : Int(-mag));
        skip_ws();
    }
    LaurentPoly p = LaurentPoly::from_terms(terms, var);
    if (p.is_zero() && !(terms.size() == 1 && terms[0].second == 0))
        return p;  // cancellation is legal, just unusual
    return p;
}

nlohmann::json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    throw parse_error("expected integer or decimal string");
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(nlohmann::json::array({it->first, int_to_json(it->second)}));
    return nlohmann::json{{"var", p.var()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("var") || !j.contains("terms"))
        throw parse_error("polynomial JSON must have 'var' and 'terms'");
    std::vector<std::pair<int, Int>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw parse_error("bad term in polynomial JSON");
        terms.emplace_back(t[0].get<int>(), int_from_json(t[1]));
    }
    return LaurentPoly::from_terms(terms, j.at("var").get<std::string>());
}

}  // namespace sw4
