#ifndef THETAKIT_THETA1_HPP
#define THETAKIT_THETA1_HPP

#include "thetakit/eisenstein.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace thetakit {

// Closed form for the odd theta-1 derivative at the origin:
// theta1^{(2 nu + 1)}(0) = sign_factor * eta^3 * coeff_poly(P, Q, R).
struct Theta1ClosedForm {
    unsigned nu = 0;
    int sign_factor = 2;          // 2 * (-1)^nu
    const char* prefactor = "eta_cubed";
    GradedPoly coeff_poly;
};

// The coefficient polynomial c_nu with S_3(2 nu + 1) = eta^3 * c_nu(P,Q,R).
// Recurrence (c_0 = 1):
//   c_nu = ((2nu+1)/(2nu)) * [ sum_{k=1}^{nu} (B_{2k} 4^k / (2k)) C(2nu, 2k-1) c_{nu-k}
//                              - 2 sum_{l=1}^{nu} C(2nu, 2l-1) 4^l Phi_{2l-1} c_{nu-l} ]
// with Phi_{2l-1} the closed-form polynomial in P, Q, R. Memoized.
inline GradedPoly s3_coeff_poly(unsigned nu) {
    static std::map<unsigned, GradedPoly> cache{{0u, GradedPoly::constant(1)}};
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(nu);
        if (it != cache.end()) return it->second;
    }

    // Fill bottom-up so recursion depth stays flat.
    for (unsigned v = 1; v <= nu; ++v) {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (cache.count(v)) continue;
        }
        GradedPoly bracket;
        for (unsigned k = 1; k <= v; ++k) {
            const Rational coef =
                bernoulli(2 * k) * Rational(int_pow(2, 2 * k)) / Rational(2 * k) * Rational(binomial(2 * v, 2 * k - 1));
            bracket += coef * s3_coeff_poly(v - k);
        }
        for (unsigned l = 1; l <= v; ++l) {
            const Rational coef = Rational(-2) * Rational(binomial(2 * v, 2 * l - 1)) * Rational(int_pow(2, 2 * l));
            bracket += coef * (phi_poly(2 * l - 1) * s3_coeff_poly(v - l));
        }
        GradedPoly cv = (Rational(2 * v + 1) / Rational(2 * v)) * bracket;
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(v, std::move(cv));
    }

    std::lock_guard<std::mutex> lock(mu);
    return cache.at(nu);
}

inline Theta1ClosedForm theta1_closed_form(unsigned nu) {
    Theta1ClosedForm f;
    f.nu = nu;
    f.sign_factor = (nu % 2 == 0) ? 2 : -2;
    f.coeff_poly = s3_coeff_poly(nu);
    return f;
}

// The b_{ijk} of S_3(2m+1) = eta^3 sum_{i+2j+3k=m} b_{ijk} P^i Q^j R^k.
inline std::map<std::tuple<unsigned, unsigned, unsigned>, Rational> b_coefficients(unsigned nu) {
    std::map<std::tuple<unsigned, unsigned, unsigned>, Rational> out;
    const GradedPoly poly = s3_coeff_poly(nu);
    for (const auto& [e, c] : poly.terms())
        out[{e[0], e[1], e[2]}] = c;
    return out;
}

}  // namespace thetakit

#endif  // THETAKIT_THETA1_HPP
