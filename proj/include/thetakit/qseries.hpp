#ifndef THETAKIT_QSERIES_HPP
#define THETAKIT_QSERIES_HPP

#include "thetakit/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace thetakit {

// Exact truncated formal power series in the nome q with exponents on the
// lattice (1/d)*Z, nonnegative exponents only. A stored index e represents
// the exponent e/d. Coefficients at index >= trunc are unknown (discarded),
// and truncation is propagated pessimistically through arithmetic.
class QSeries {
  public:
    using Index = long long;
    using CoeffMap = std::map<Index, Rational>;

    QSeries(unsigned denom, Index trunc) : denom_(denom), trunc_(trunc) {
        if (denom == 0) throw std::invalid_argument("QSeries: denom must be positive");
        if (trunc < 0) throw std::invalid_argument("QSeries: trunc must be nonnegative");
    }

    unsigned denom() const { return denom_; }
    Index trunc() const { return trunc_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    // Lowest stored exponent index; trunc for the (effectively) zero series.
    Index ord() const { return coeffs_.empty() ? trunc_ : coeffs_.begin()->first; }

    Rational coeff(Index e) const {
        if (e >= trunc_)
            throw std::out_of_range("QSeries::coeff: index " + std::to_string(e) +
                                    " beyond truncation " + std::to_string(trunc_));
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set_coeff(Index e, const Rational& c) {
        if (e < 0) throw std::invalid_argument("QSeries: negative exponent");
        if (e >= trunc_) return;  // beyond the window, discard
        if (c == 0)
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }

    void add_coeff(Index e, const Rational& c) {
        if (e < 0) throw std::invalid_argument("QSeries: negative exponent");
        if (e >= trunc_) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        require_same_lattice(a, b);
        QSeries r(a.denom_, std::min(a.trunc_, b.trunc_));
        for (const auto& [e, c] : a.coeffs_) r.add_coeff(e, c);
        for (const auto& [e, c] : b.coeffs_) r.add_coeff(e, c);
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        require_same_lattice(a, b);
        QSeries r(a.denom_, std::min(a.trunc_, b.trunc_));
        for (const auto& [e, c] : a.coeffs_) r.add_coeff(e, c);
        for (const auto& [e, c] : b.coeffs_) r.add_coeff(e, -c);
        return r;
    }

    // Full convolution up to the propagated truncation:
    // trunc(a*b) = min(trunc a + ord b, trunc b + ord a).
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        require_same_lattice(a, b);
        const Index t = std::min(a.trunc_ + b.ord(), b.trunc_ + a.ord());
        QSeries r(a.denom_, t);
        for (const auto& [ea, ca] : a.coeffs_) {
            if (ea + b.ord() >= t) break;
            for (const auto& [eb, cb] : b.coeffs_) {
                if (ea + eb >= t) break;
                r.add_coeff(ea + eb, ca * cb);
            }
        }
        return r;
    }

    friend QSeries operator*(const Rational& s, const QSeries& a) {
        QSeries r(a.denom_, a.trunc_);
        if (s == 0) return r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = s * c;
        return r;
    }
    friend QSeries operator*(const QSeries& a, const Rational& s) { return s * a; }

    // Multiply by the monomial q^{shift/d}.
    QSeries shifted(Index shift) const {
        if (shift < 0) throw std::invalid_argument("QSeries::shifted: negative shift");
        QSeries r(denom_, trunc_ + shift);
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + shift] = c;
        return r;
    }

    // Same series on a finer lattice; d_new must be a multiple of denom.
    QSeries relattice(unsigned d_new) const {
        if (d_new == 0 || d_new % denom_ != 0)
            throw std::invalid_argument("relattice: " + std::to_string(d_new) +
                                        " is not a multiple of " + std::to_string(denom_));
        const Index f = d_new / denom_;
        QSeries r(d_new, trunc_ * f);
        for (const auto& [e, c] : coeffs_) r.coeffs_[e * f] = c;
        return r;
    }

    // q -> q^k on the same lattice.
    QSeries substitute_power(unsigned k) const {
        if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
        QSeries r(denom_, trunc_ * static_cast<Index>(k));
        for (const auto& [e, c] : coeffs_) r.coeffs_[e * static_cast<Index>(k)] = c;
        return r;
    }

    bool same_coefficients(const QSeries& o) const {
        return denom_ == o.denom_ && coeffs_ == o.coeffs_;
    }

  private:
    static void require_same_lattice(const QSeries& a, const QSeries& b) {
        if (a.denom_ != b.denom_)
            throw std::invalid_argument("QSeries lattice mismatch: d=" + std::to_string(a.denom_) +
                                        " vs d=" + std::to_string(b.denom_));
    }

    unsigned denom_;
    Index trunc_;
    CoeffMap coeffs_;
};

inline QSeries qs_one(unsigned denom, QSeries::Index trunc) {
    QSeries r(denom, trunc);
    r.set_coeff(0, 1);
    return r;
}

// Phi_nu(q) = sum_{n>=1} n^nu q^n / (1 - q^n) = sum_{m>=1} sigma_nu(m) q^m,
// expanded with a divisor-sum sieve. Lattice d = 1.
inline QSeries phi_series(unsigned nu, QSeries::Index trunc) {
    QSeries r(1, trunc);
    for (QSeries::Index n = 1; n < trunc; ++n) {
        const Int nk = int_pow(Int(n), nu);
        for (QSeries::Index m = n; m < trunc; m += n) r.add_coeff(m, Rational(nk));
    }
    return r;
}

// Ramanujan's P, Q, R.
inline QSeries eisenstein_P(QSeries::Index trunc) {
    return qs_one(1, trunc) + Rational(-24) * phi_series(1, trunc);
}
inline QSeries eisenstein_Q(QSeries::Index trunc) {
    return qs_one(1, trunc) + Rational(240) * phi_series(3, trunc);
}
inline QSeries eisenstein_R(QSeries::Index trunc) {
    return qs_one(1, trunc) + Rational(-504) * phi_series(5, trunc);
}

// eta(tau)^3 = q^{1/8} prod_{n>=1} (1-q^n)^3, expanded by multiplying the
// product out. Lattice d = 8; trunc is a lattice index (exponent*8).
inline QSeries eta_cubed_product(QSeries::Index trunc) {
    const QSeries::Index nq = (trunc + 7) / 8;  // needed q-power window
    QSeries prod = qs_one(1, nq);
    for (QSeries::Index n = 1; n < nq; ++n) {
        QSeries factor = qs_one(1, nq);
        factor.set_coeff(n, -1);
        prod = prod * factor;
    }
    QSeries cube = prod * prod * prod;
    QSeries r(8, trunc);
    for (const auto& [e, c] : cube.coeffs()) r.set_coeff(e * 8 + 1, c);
    return r;
}

// S_3(m) = sum_{a = 1 mod 4} a^m q^{a^2/8}, a running over
// ..., -7, -3, 1, 5, 9, ... Lattice d = 8 (exponent index a^2).
inline QSeries s3_direct(unsigned m, QSeries::Index trunc) {
    if (m % 2 == 0) throw std::invalid_argument("s3_direct: m must be odd");
    QSeries r(8, trunc);
    for (long long a = 1;; a += 4) {
        if (a * a >= trunc) break;
        r.add_coeff(a * a, Rational(int_pow(Int(a), m)));
    }
    for (long long a = -3;; a -= 4) {
        if (a * a >= trunc) break;
        r.add_coeff(a * a, Rational(int_pow(Int(a), m)));
    }
    return r;
}

// d^order/dz^order theta_4(z, q) at z = 0, from the cosine series:
// order 0 gives 1 + 2 sum (-1)^n q^{n^2}; order 2v gives
// 2 (-1)^v sum_{n>=1} (-1)^n (2n)^{2v} q^{n^2}. Lattice d = 1.
inline QSeries theta4_deriv_direct(unsigned order, QSeries::Index trunc) {
    if (order % 2 != 0)
        throw std::invalid_argument("theta4_deriv_direct: odd-order derivatives vanish identically");
    const unsigned nu = order / 2;
    QSeries r(1, trunc);
    if (nu == 0) r.set_coeff(0, 1);
    const int outer = (nu % 2 == 0) ? 2 : -2;
    for (long long n = 1; n * n < trunc; ++n) {
        Int term = (nu == 0) ? Int(1) : int_pow(Int(2 * n), 2 * nu);
        if (n % 2 != 0) term = -term;
        r.add_coeff(n * n, Rational(outer * term));
    }
    return r;
}

}  // namespace thetakit

#endif  // THETAKIT_QSERIES_HPP
