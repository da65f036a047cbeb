#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookforest {

using Coeff = boost::multiprecision::cpp_int;

/// Exponent pair of t^t_exp q^q_exp; ordered by (t, q).
struct Monomial {
    std::uint32_t t_exp = 0;
    std::uint32_t q_exp = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/**
 * Exact sparse polynomial in t and q with arbitrary-precision integer
 * coefficients. Zero coefficients are never stored, so equality is
 * structural. A polynomial with no t is a univariate q-polynomial.
 */
class BiPoly {
public:
    using Terms = std::map<Monomial, Coeff>;

    BiPoly() = default;
    BiPoly(long long constant);  // NOLINT(google-explicit-constructor): integers embed as constants

    static BiPoly monomial(std::uint32_t t_exp, std::uint32_t q_exp, const Coeff& c = 1);
    static BiPoly q_power(std::uint32_t k) { return monomial(0, k); }
    static BiPoly t() { return monomial(1, 0); }
    static BiPoly q() { return monomial(0, 1); }

    void add_term(std::uint32_t t_exp, std::uint32_t q_exp, const Coeff& c);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Coeff coeff(std::uint32_t t_exp, std::uint32_t q_exp) const;
    [[nodiscard]] std::uint32_t t_degree() const;
    [[nodiscard]] std::uint32_t q_degree() const;
    [[nodiscard]] bool is_univariate() const { return t_degree() == 0; }
    /// Sum of all coefficients (value at t = q = 1).
    [[nodiscard]] Coeff total() const;

    BiPoly& operator+=(const BiPoly& other);
    BiPoly& operator-=(const BiPoly& other);
    BiPoly& operator*=(const BiPoly& other);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a) { return a.scaled(-1); }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    [[nodiscard]] BiPoly scaled(const Coeff& factor) const;

private:
    Terms terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// Human form, terms sorted by (t-exp, q-exp): "1 + 2*q + t*q^3".
std::string to_string(const BiPoly& poly);

/// [m] = 1 + q + ... + q^{m-1}; throws std::invalid_argument for m < 1.
BiPoly q_number(long long m);
/// [m]! = [1][2]...[m], [0]! = 1.
BiPoly q_factorial(long long m);

/// q -> q^2, t untouched.
BiPoly subst_q_squared(const BiPoly& poly);
/// t -> value for value in {-1, 0, 1}; the result is univariate.
BiPoly eval_t(const BiPoly& poly, int value);
/// t^a q^b -> q^(2b - a): the substitution q -> q^2, t -> q^{-1}.
/// Throws std::domain_error if a term would get a negative exponent.
BiPoly fold_t_inverse_q_squared(const BiPoly& poly);

/// Exact division by a univariate divisor, t-slice by t-slice.
/// Throws std::domain_error if the remainder is nonzero or division is not exact over Z.
BiPoly divide_exact(const BiPoly& numerator, const BiPoly& divisor);

/// Counts monomials during an enumeration; cheaper than adding BiPoly terms one by one.
class MonomialTally {
public:
    void add(std::int64_t t_exp, std::int64_t q_exp);
    void merge(const MonomialTally& other);
    [[nodiscard]] BiPoly to_poly() const;

private:
    std::map<Monomial, std::uint64_t> counts_;
};

/**
 * Truncated power series in q (coefficients may still carry t):
 * only terms with q-exponent <= degree are meaningful and retained.
 */
class Series {
public:
    Series(BiPoly poly, std::uint32_t degree);

    [[nodiscard]] const BiPoly& poly() const { return poly_; }
    [[nodiscard]] std::uint32_t degree() const { return degree_; }

    /// Both operands must share a truncation degree.
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

private:
    BiPoly poly_;
    std::uint32_t degree_;
};

/// Drops q-exponents above degree.
BiPoly truncate(const BiPoly& poly, std::uint32_t degree);

/// 1 / (1 - q^h) to degree; throws std::invalid_argument for h < 1.
Series geometric_series(long long h, std::uint32_t degree);

}  // namespace hookforest
