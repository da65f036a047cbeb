#include "hookforest/qpoly.hpp"

#include <stdexcept>

namespace hookforest {

BiPoly::BiPoly(long long constant) {
    if (constant != 0) terms_.emplace(Monomial{0, 0}, Coeff(constant));
}

BiPoly BiPoly::monomial(std::uint32_t t_exp, std::uint32_t q_exp, const Coeff& c) {
    BiPoly out;
    out.add_term(t_exp, q_exp, c);
    return out;
}

void BiPoly::add_term(std::uint32_t t_exp, std::uint32_t q_exp, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{t_exp, q_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Coeff BiPoly::coeff(std::uint32_t t_exp, std::uint32_t q_exp) const {
    auto it = terms_.find(Monomial{t_exp, q_exp});
    return it == terms_.end() ? Coeff(0) : it->second;
}

std::uint32_t BiPoly::t_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.t_exp; }

std::uint32_t BiPoly::q_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.q_exp);
    return d;
}

Coeff BiPoly::total() const {
    Coeff sum = 0;
    for (const auto& [m, c] : terms_) sum += c;
    return sum;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m.t_exp, m.q_exp, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m.t_exp, m.q_exp, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) { return *this = *this * other; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.t_exp + mb.t_exp, ma.q_exp + mb.q_exp, ca * cb);
    return out;
}

BiPoly BiPoly::scaled(const Coeff& factor) const {
    BiPoly out;
    if (factor == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
    return out;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
    BiPoly out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

std::string to_string(const BiPoly& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : poly.terms()) {
        const bool negative = c < 0;
        const Coeff magnitude = negative ? Coeff(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string vars;
        auto append_var = [&](const char* name, std::uint32_t e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        append_var("t", m.t_exp);
        append_var("q", m.q_exp);

        if (vars.empty()) {
            out += magnitude.str();
        } else if (magnitude == 1) {
            out += vars;
        } else {
            out += magnitude.str() + "*" + vars;
        }
    }
    return out;
}

BiPoly q_number(long long m) {
    if (m < 1) throw std::invalid_argument("q-number requires m >= 1");
    BiPoly out;
    for (long long k = 0; k < m; ++k) out.add_term(0, static_cast<std::uint32_t>(k), 1);
    return out;
}

BiPoly q_factorial(long long m) {
    if (m < 0) throw std::invalid_argument("q-factorial requires m >= 0");
    BiPoly out = 1;
    for (long long k = 2; k <= m; ++k) out *= q_number(k);
    return out;
}

BiPoly subst_q_squared(const BiPoly& poly) {
    BiPoly out;
    for (const auto& [m, c] : poly.terms()) out.add_term(m.t_exp, 2 * m.q_exp, c);
    return out;
}

BiPoly eval_t(const BiPoly& poly, int value) {
    if (value < -1 || value > 1) throw std::invalid_argument("eval_t supports t in {-1, 0, 1}");
    BiPoly out;
    for (const auto& [m, c] : poly.terms()) {
        if (m.t_exp == 0) {
            out.add_term(0, m.q_exp, c);
        } else if (value == 1) {
            out.add_term(0, m.q_exp, c);
        } else if (value == -1) {
            out.add_term(0, m.q_exp, m.t_exp % 2 == 0 ? c : Coeff(-c));
        }
    }
    return out;
}

BiPoly fold_t_inverse_q_squared(const BiPoly& poly) {
    BiPoly out;
    for (const auto& [m, c] : poly.terms()) {
        const std::int64_t e = 2 * static_cast<std::int64_t>(m.q_exp) - static_cast<std::int64_t>(m.t_exp);
        if (e < 0) throw std::domain_error("q -> q^2, t -> 1/q produces a negative exponent");
        out.add_term(0, static_cast<std::uint32_t>(e), c);
    }
    return out;
}

namespace {

// Dense univariate coefficient vector (index = q-exponent) of a t-slice.
std::vector<Coeff> dense_slice(const BiPoly& poly, std::uint32_t t_exp) {
    std::vector<Coeff> out;
    for (const auto& [m, c] : poly.terms()) {
        if (m.t_exp != t_exp) continue;
        if (out.size() <= m.q_exp) out.resize(m.q_exp + 1);
        out[m.q_exp] = c;
    }
    return out;
}

}  // namespace

BiPoly divide_exact(const BiPoly& numerator, const BiPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (!divisor.is_univariate()) throw std::domain_error("divisor must not involve t");
    const std::vector<Coeff> d = dense_slice(divisor, 0);
    const std::size_t dd = d.size() - 1;
    const Coeff& lead = d.back();

    BiPoly quotient;
    std::vector<std::uint32_t> t_exps;
    for (const auto& [m, c] : numerator.terms())
        if (t_exps.empty() || t_exps.back() != m.t_exp) t_exps.push_back(m.t_exp);

    for (std::uint32_t te : t_exps) {
        std::vector<Coeff> rem = dense_slice(numerator, te);
        if (rem.size() < d.size()) throw std::domain_error("polynomial division leaves a remainder");
        for (std::size_t k = rem.size() - 1; k + 1 >= d.size(); --k) {
            if (rem[k] != 0) {
                if (rem[k] % lead != 0) throw std::domain_error("polynomial division is not exact over Z");
                const Coeff factor = rem[k] / lead;
                const std::size_t shift = k - dd;
                quotient.add_term(te, static_cast<std::uint32_t>(shift), factor);
                for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= factor * d[j];
            }
            if (k == dd) break;
        }
        for (const Coeff& c : rem)
            if (c != 0) throw std::domain_error("polynomial division leaves a remainder");
    }
    return quotient;
}

void MonomialTally::add(std::int64_t t_exp, std::int64_t q_exp) {
    if (t_exp < 0 || q_exp < 0) throw std::domain_error("negative exponent in tally");
    ++counts_[Monomial{static_cast<std::uint32_t>(t_exp), static_cast<std::uint32_t>(q_exp)}];
}

void MonomialTally::merge(const MonomialTally& other) {
    for (const auto& [m, c] : other.counts_) counts_[m] += c;
}

BiPoly MonomialTally::to_poly() const {
    BiPoly out;
    for (const auto& [m, c] : counts_) out.add_term(m.t_exp, m.q_exp, Coeff(c));
    return out;
}

BiPoly truncate(const BiPoly& poly, std::uint32_t degree) {
    BiPoly out;
    for (const auto& [m, c] : poly.terms())
        if (m.q_exp <= degree) out.add_term(m.t_exp, m.q_exp, c);
    return out;
}

Series::Series(BiPoly poly, std::uint32_t degree) : poly_(truncate(poly, degree)), degree_(degree) {}

Series operator+(const Series& a, const Series& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("series truncation degrees differ");
    return Series(a.poly_ + b.poly_, a.degree_);
}

Series operator*(const Series& a, const Series& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("series truncation degrees differ");
    BiPoly out;
    for (const auto& [ma, ca] : a.poly_.terms())
        for (const auto& [mb, cb] : b.poly_.terms())
            if (ma.q_exp + mb.q_exp <= a.degree_) out.add_term(ma.t_exp + mb.t_exp, ma.q_exp + mb.q_exp, ca * cb);
    return Series(std::move(out), a.degree_);
}

Series geometric_series(long long h, std::uint32_t degree) {
    if (h < 1) throw std::invalid_argument("geometric series requires h >= 1");
    BiPoly out;
    for (std::uint64_t k = 0; k <= degree; k += static_cast<std::uint64_t>(h))
        out.add_term(0, static_cast<std::uint32_t>(k), 1);
    return Series(std::move(out), degree);
}

}  // namespace hookforest
