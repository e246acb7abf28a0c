#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qmb {

using Int = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1]: a finite map exponent -> nonzero integer coefficient.
/// The map never stores a zero coefficient, so equality is plain map equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Int constant);                   // NOLINT(google-explicit-constructor)
    LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}
    LaurentPoly(int constant) : LaurentPoly(Int(constant)) {}

    /// c * q^e
    static LaurentPoly term(Int coeff, int exponent);
    /// q^e
    static LaurentPoly q_power(int exponent);
    /// (-q)^e = (-1)^e q^e
    static LaurentPoly neg_q_power(int exponent);
    /// q^-1 - q
    static LaurentPoly q_inv_minus_q();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Sum of all coefficients (specialization q = 1).
    Int eval_at_one() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    /// Canonical text form, terms in increasing exponent order,
    /// e.g. "-2*q^-1 + 3 + q^2". Zero prints as "0".
    std::string to_string() const;
    /// LaTeX rendering with braced exponents, e.g. "q^{-2} - 2 + q^{2}".
    std::string to_latex() const;

    /// Parse the canonical text form. Throws std::invalid_argument on bad input.
    static LaurentPoly parse(const std::string& text);

    /// JSON form: array of [exponent, coefficient-as-decimal-string] pairs
    /// sorted by exponent.
    std::string to_json() const;
    static LaurentPoly from_json_text(const std::string& json);

    const std::map<int, Int>& terms() const { return terms_; }

    /// True when the polynomial is a single term c*q^e; fills c and e.
    bool single_term(Int& coeff, int& exponent) const;

private:
    std::map<int, Int> terms_;
    void add_term(int exponent, const Int& coeff);
    friend class LaurentPolyBuilder;
};

class LaurentPolyBuilder {
public:
    void add(int exponent, const Int& coeff) { poly_.add_term(exponent, coeff); }
    LaurentPoly take() { return std::move(poly_); }

private:
    LaurentPoly poly_;
};

}  // namespace qmb
