#ifndef SW4_LAURENT_HPP
#define SW4_LAURENT_HPP

// Exact integer Laurent polynomials in one formal variable.
//
// These are the carriers for symmetrized Alexander polynomials and for
// Seiberg-Witten invariants written multiplicatively (t = exp(2[T]) and
// friends).  Every value is immutable after construction and every
// operation is a pure function, so values move freely between threads.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sw4/core.hpp"

namespace sw4 {

class LaurentPoly {
public:
    // exponent -> coefficient; zero coefficients are never stored.
    using TermMap = std::map<int, Int>;

    // The zero polynomial in the given formal variable.
    explicit LaurentPoly(std::string var = "t") : var_(std::move(var)) {}

    static LaurentPoly constant(Int c, std::string var = "t");
    static LaurentPoly monomial(Int c, int exp, std::string var = "t");
    static LaurentPoly from_terms(const std::vector<std::pair<int, Int>>& terms,
                                  std::string var = "t");

    const std::string& var() const { return var_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(int exp) const;
    int min_exp() const;  // errors on the zero polynomial
    int max_exp() const;

    bool operator==(const LaurentPoly& rhs) const = default;

private:
    TermMap terms_;
    std::string var_;

    void prune();
    friend LaurentPoly add(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly neg(const LaurentPoly&);
    friend LaurentPoly mul(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly substitute_power(const LaurentPoly&, int, std::string);
};

// a0 + sum a_n (t^n + parity_sign * t^-n), the shape in which symmetric
// Seiberg-Witten polynomials and Alexander polynomials are written.
struct SymmetricForm {
    Int a0;
    std::vector<std::pair<int, Int>> pairs;  // (n > 0, a_n != 0), ascending n
    int parity_sign = +1;                    // the factor (-1)^{(e+sign)/4}
    std::string var = "t";

    LaurentPoly expand() const;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly neg(const LaurentPoly& p);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p) { return neg(p); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

// Replaces every exponent k by m*k and renames the variable; this is the
// exponent rescaling between conventions like exp(2[T]) and exp([T]).
LaurentPoly substitute_power(const LaurentPoly& p, int m, std::string new_label);

// Sum of all coefficients, i.e. the value at t = 1.
Int eval_at_one(const LaurentPoly& p);

// +1 or -1 when coeff(-n) == parity * coeff(n) for all n > 0 (+1 wins when
// both hold); nullopt when the polynomial has no symmetry.
std::optional<int> symmetry_parity(const LaurentPoly& p);

// Extraction inverse to SymmetricForm::expand; throws symmetry_error naming
// the first offending exponent.
SymmetricForm to_symmetric(const LaurentPoly& p, int parity_sign);

// (d, a_d): the top exponent of a nonzero symmetric polynomial and its
// coefficient.
std::pair<int, Int> degree_and_top(const LaurentPoly& p);

// |a_d| == 1.  Requires a nonzero symmetric polynomial.
bool is_monic(const LaurentPoly& p);

// Exact quotient p / q; throws invariant_error when the division leaves a
// remainder (a nonzero remainder always signals a bug or invalid input,
// never something to round away).
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

// Canonical text form, exponents descending: "2*t - 3 + 2*t^-1".
std::string to_text(const LaurentPoly& p);
// Parses the canonical text form back; `var` names the variable symbol to
// expect (it may be any opaque label, e.g. "exp(2[T])").
LaurentPoly parse_text(const std::string& text, const std::string& var);

// {"var": label, "terms": [[exp, coeff], ...]} with exponents descending.
// Coefficients that fit in 64 bits are numbers, larger ones decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

}  // namespace sw4

#endif
