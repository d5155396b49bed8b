#include "wp/polynomial.hpp"

#include <stdexcept>

namespace wp {

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const mpz_class& s) {
    std::vector<mpz_class> out(a.c_);
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = Polynomial::one();
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

mpz_class Polynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero()) return Polynomial();
    std::vector<mpz_class> out(c_.size() + size_t(k), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i + size_t(k)] = c_[i];
    return Polynomial(std::move(out));
}

std::string Polynomial::text() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += c_[i].get_str();
    }
    return out;
}

Polynomial compose_shifted(const Polynomial& p, const Polynomial& q) {
    if (q.coef(0) != 1) throw std::invalid_argument("compose_shifted requires q(0) == 1");
    // r = q - 1 has zero constant term and non-negative coefficients
    std::vector<mpz_class> rc(q.coeffs());
    if (!rc.empty()) rc[0] = 0;
    Polynomial r(std::move(rc));
    Polynomial acc;  // Horner on p with argument r
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * r;
        acc += Polynomial({1}) * p.coef(k);
    }
    return acc;
}

Polynomial join_polynomial(const Polynomial& p, const Polynomial& q) {
    if (p.coef(0) != 1 || q.coef(0) != 1)
        throw std::invalid_argument("join_polynomial requires graph polynomials (constant term 1)");
    std::vector<mpz_class> out(p.coeffs());
    const auto& qc = q.coeffs();
    if (qc.size() > out.size()) out.resize(qc.size(), 0);
    for (size_t i = 1; i < qc.size(); ++i) out[i] += qc[i];
    return Polynomial(std::move(out));
}

LogConcavityResult is_log_concave(const Polynomial& p) {
    for (int k = 1; k < p.degree(); ++k) {
        if (p.coef(k) * p.coef(k) < p.coef(k - 1) * p.coef(k + 1)) return {false, k};
    }
    return {true, -1};
}

UnimodalityResult is_unimodal(const Polynomial& p) {
    const int d = p.degree();
    if (d < 0) return {true, -1};
    int mode = 0;
    for (int k = 1; k <= d; ++k)
        if (p.coef(k) > p.coef(mode)) mode = k;
    for (int k = 1; k <= mode; ++k)
        if (p.coef(k) < p.coef(k - 1)) return {false, -1};
    for (int k = mode + 1; k <= d; ++k)
        if (p.coef(k) > p.coef(k - 1)) return {false, -1};
    return {true, mode};
}

bool top_coefficient_bound_holds(const Polynomial& p, int n) {
    const int alpha = p.degree();
    if (alpha < 1) throw std::invalid_argument("top_coefficient_bound_holds requires degree >= 1");
    return alpha * p.coef(alpha) <= n * p.coef(alpha - 1);
}

bool quasireg_coefficient_bounds_hold(const Polynomial& p, int n, const Rational& lambda) {
    // multiply through by den: den (k+1) s_{k+1} <= (n den - (num+den) k) s_k
    for (int k = 0; k < p.degree(); ++k) {
        long long rhs_factor = lambda.den * (long long)n - (lambda.num + lambda.den) * (long long)k;
        mpz_class lhs = p.coef(k + 1) * (lambda.den * (long long)(k + 1));
        if (rhs_factor < 0) {
            if (lhs > 0) return false;
        } else {
            if (lhs > p.coef(k) * rhs_factor) return false;
        }
    }
    return true;
}

bool wp_coefficient_bounds_hold(const Polynomial& p, int alpha, int p_level) {
    for (int k = 1; k <= alpha - 1; ++k) {
        mpz_class lhs = p.coef(k) * ((long long)p_level * (alpha - k));
        mpz_class rhs = p.coef(k + 1) * (long long)(k + 1);
        if (lhs > rhs) return false;
    }
    return true;
}

IntervalCase log_concavity_interval(long n, long alpha, long p) {
    if (n < 1 || alpha < 1 || p < 1)
        throw std::invalid_argument("log_concavity_interval requires n, alpha, p >= 1");
    const long d = n - p * alpha;
    // n <= p alpha + 2 sqrt(p alpha + p)  <=>  d <= 0 or d^2 <= 4(p alpha + p)
    const bool below_root = d <= 0 || d * d <= 4 * (p * alpha + p);

    if (alpha * alpha <= 4 * p * (alpha + 1) && (p + 1) * alpha <= n && below_root)
        return IntervalCase::CaseA;

    if (alpha * (alpha - 1) <= p * (alpha + 1) && !below_root) {
        // n <= ((alpha^2+1) p + (alpha-1)^2) / (alpha-1); vacuous for alpha == 1
        if (alpha == 1 || n * (alpha - 1) <= (alpha * alpha + 1) * p + (alpha - 1) * (alpha - 1))
            return IntervalCase::CaseB;
    }
    return IntervalCase::Outside;
}

}  // namespace wp
