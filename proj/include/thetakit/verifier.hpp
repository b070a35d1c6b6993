#ifndef THETAKIT_VERIFIER_HPP
#define THETAKIT_VERIFIER_HPP

#include "thetakit/theta1.hpp"
#include "thetakit/theta4.hpp"

#include <optional>
#include <string>

namespace thetakit {

enum class VerifyTarget { Theta1, Theta4, Phi, Eisenstein };

inline const char* to_string(VerifyTarget t) {
    switch (t) {
        case VerifyTarget::Theta1: return "theta1";
        case VerifyTarget::Theta4: return "theta4";
        case VerifyTarget::Phi: return "phi";
        case VerifyTarget::Eisenstein: return "eisenstein";
    }
    return "?";
}

struct Mismatch {
    QSeries::Index index = 0;  // lattice index; exponent = index/denom
    unsigned denom = 1;
    Rational lhs;
    Rational rhs;
};

struct VerificationReport {
    VerifyTarget target = VerifyTarget::Theta1;
    unsigned order = 0;          // derivative order / series index, per target
    QSeries::Index window = 0;   // number of verified lattice coefficient slots
    std::optional<Mismatch> first_mismatch;

    bool match() const { return !first_mismatch.has_value(); }
};

namespace detail {

// Substitute the level-1 series at q and the level-2 series at q^2 into a
// polynomial, on the d = 1 lattice, accurate through q^{trunc-1}.
inline QSeries substitute_series(const GradedPoly& poly, QSeries::Index trunc) {
    const QSeries gen1[3] = {eisenstein_P(trunc), eisenstein_Q(trunc), eisenstein_R(trunc)};
    QSeries out(1, trunc);
    for (const auto& [e, c] : poly.terms()) {
        QSeries term = qs_one(1, trunc);
        for (int g = 0; g < 3; ++g)
            for (unsigned i = 0; i < e[g]; ++i) term = term * gen1[g];
        for (int g = 0; g < 3; ++g)
            for (unsigned i = 0; i < e[g + 3]; ++i) term = term * gen1[g].substitute_power(2);
        out = out + c * term;
    }
    return out;
}

inline void require_window(const QSeries& s, QSeries::Index window, const char* side) {
    if (s.trunc() < window)
        throw std::runtime_error(std::string("verification window ") + std::to_string(window) +
                                 " exceeds available truncation " + std::to_string(s.trunc()) +
                                 " on the " + side + " side");
}

inline VerificationReport compare(VerifyTarget target, unsigned order, const QSeries& lhs,
                                  const QSeries& rhs, QSeries::Index window) {
    if (window < 1) throw std::invalid_argument("verification window must be >= 1");
    require_window(lhs, window, "lhs");
    require_window(rhs, window, "rhs");
    VerificationReport rep;
    rep.target = target;
    rep.order = order;
    rep.window = window;
    for (QSeries::Index e = 0; e < window; ++e) {
        const Rational a = lhs.coeff(e), b = rhs.coeff(e);
        if (a != b) {
            rep.first_mismatch = Mismatch{e, lhs.denom(), a, b};
            break;
        }
    }
    return rep;
}

}  // namespace detail

// Check an arbitrary candidate polynomial against the lacunary S_3 sum:
// S_3(2 nu + 1) ?= eta^3 * poly(P, Q, R), compared over the first `window`
// d = 8 lattice coefficients. The two sides share no series construction:
// the left is the sparse quadratic-exponent sum, the right the eta product
// times divisor-sum Eisenstein expansions.
inline VerificationReport verify_theta1_against(const GradedPoly& poly, unsigned nu,
                                                QSeries::Index window) {
    const QSeries lhs = s3_direct(2 * nu + 1, window);
    const QSeries eta3 = eta_cubed_product(window);
    const QSeries::Index poly_trunc = (window + 7) / 8 + 1;
    const QSeries rhs = eta3 * detail::substitute_series(poly, poly_trunc).relattice(8);
    return detail::compare(VerifyTarget::Theta1, 2 * nu + 1, lhs, rhs, window);
}

inline VerificationReport verify_theta1(unsigned nu, QSeries::Index window) {
    return verify_theta1_against(s3_coeff_poly(nu), nu, window);
}

// theta4^{(2 nu)}(0) ?= theta4(0) * ratio_poly, both sides on d = 1.
inline VerificationReport verify_theta4_against(const GradedPoly& ratio_poly, unsigned nu,
                                                QSeries::Index window) {
    const QSeries lhs = theta4_deriv_direct(2 * nu, window);
    const QSeries rhs = theta4_deriv_direct(0, window) * detail::substitute_series(ratio_poly, window);
    return detail::compare(VerifyTarget::Theta4, 2 * nu, lhs, rhs, window);
}

inline VerificationReport verify_theta4(unsigned nu, QSeries::Index window) {
    if (nu < 1) throw std::invalid_argument("verify_theta4: nu must be >= 1");
    return verify_theta4_against(theta4_ratio_poly(nu), nu, window);
}

inline VerificationReport verify_phi(unsigned odd_k, QSeries::Index window) {
    if (odd_k % 2 == 0) throw std::invalid_argument("verify_phi: index must be odd");
    const QSeries lhs = phi_series(odd_k, window);
    const QSeries rhs = detail::substitute_series(phi_poly(odd_k), window);
    return detail::compare(VerifyTarget::Phi, odd_k, lhs, rhs, window);
}

inline VerificationReport verify_eisenstein(unsigned two_n, QSeries::Index window) {
    if (two_n % 2 != 0 || two_n < 2)
        throw std::invalid_argument("verify_eisenstein: weight must be even and >= 2");
    const QSeries lhs = eisenstein_series(two_n, window);
    const QSeries rhs = detail::substitute_series(eisenstein_poly(two_n), window);
    return detail::compare(VerifyTarget::Eisenstein, two_n, lhs, rhs, window);
}

}  // namespace thetakit

#endif  // THETAKIT_VERIFIER_HPP
