#ifndef THETAKIT_EISENSTEIN_HPP
#define THETAKIT_EISENSTEIN_HPP

#include "thetakit/graded_poly.hpp"
#include "thetakit/qseries.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace thetakit {

// E_{2n} as a q-series: E_{2n} = 1 - (4n/B_{2n}) Phi_{2n-1}. Valid for all
// even weights >= 2 (weight 2 gives P).
inline QSeries eisenstein_series(unsigned two_n, QSeries::Index trunc) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("eisenstein_series: weight must be even and >= 2");
    const Rational factor = Rational(2 * two_n) / bernoulli(two_n);
    return qs_one(1, trunc) - factor * phi_series(two_n - 1, trunc);
}

namespace detail {

// Monomials Q^a R^b of modular weight 2n (4a + 6b = 2n), a descending.
inline std::vector<Exponents> qr_monomials(unsigned two_n) {
    std::vector<Exponents> out;
    const unsigned n = two_n / 2;
    for (unsigned b = 0; 3 * b <= n; ++b) {
        const unsigned rest = n - 3 * b;
        if (rest % 2 != 0) continue;
        out.push_back(Exponents{0, rest / 2, b, 0, 0, 0});
    }
    // a descending == b ascending already; keep insertion order but sort for
    // determinism under the canonical term order.
    return out;
}

// Exact Gaussian elimination. Throws if the system is singular or, with the
// extra validation rows appended, inconsistent.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                         std::vector<Rational> rhs) {
    const size_t m = rhs.size();
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) throw std::runtime_error("ansatz linear system is singular");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col] / a[col][col];
            for (size_t c2 = col; c2 < m; ++c2) a[row][c2] -= f * a[col][c2];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(m);
    for (size_t i = 0; i < m; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

}  // namespace detail

// Number of surplus q-coefficients checked after the ansatz solve.
inline constexpr unsigned kAnsatzValidationMargin = 10;

// The unique isobaric polynomial in Q, R (P for weight 2) whose q-expansion
// equals E_{2n}. Backed by an exact linear solve against the series data,
// then validated on surplus coefficients. Memoized.
inline GradedPoly eisenstein_poly(unsigned two_n) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("eisenstein_poly: weight must be even and >= 2");
    static std::map<unsigned, GradedPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(two_n);
        if (it != cache.end()) return it->second;
    }

    GradedPoly result;
    if (two_n == 2) {
        result = GradedPoly::generator(0);
    } else if (two_n == 4) {
        result = GradedPoly::generator(1);
    } else if (two_n == 6) {
        result = GradedPoly::generator(2);
    } else {
        const auto monos = detail::qr_monomials(two_n);
        const size_t m = monos.size();
        const QSeries::Index window = static_cast<QSeries::Index>(m) + kAnsatzValidationMargin;
        const QSeries qs = eisenstein_Q(window);
        const QSeries rs = eisenstein_R(window);
        const QSeries target = eisenstein_series(two_n, window);

        std::vector<QSeries> cols;
        cols.reserve(m);
        for (const auto& e : monos) {
            QSeries s = qs_one(1, window);
            for (unsigned i = 0; i < e[1]; ++i) s = s * qs;
            for (unsigned i = 0; i < e[2]; ++i) s = s * rs;
            cols.push_back(std::move(s));
        }

        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
        std::vector<Rational> rhs(m);
        for (size_t row = 0; row < m; ++row) {
            for (size_t col = 0; col < m; ++col) a[row][col] = cols[col].coeff(static_cast<QSeries::Index>(row));
            rhs[row] = target.coeff(static_cast<QSeries::Index>(row));
        }
        const auto x = detail::solve_exact(std::move(a), std::move(rhs));

        // Surplus validation: the solved polynomial must keep matching past
        // the coefficients used in the solve.
        for (QSeries::Index row = static_cast<QSeries::Index>(m); row < window; ++row) {
            Rational acc = 0;
            for (size_t col = 0; col < m; ++col) acc += x[col] * cols[col].coeff(row);
            if (acc != target.coeff(row))
                throw std::runtime_error("eisenstein_poly: surplus coefficient validation failed at q^" +
                                         std::to_string(row));
        }

        for (size_t col = 0; col < m; ++col) result.add_term(monos[col], x[col]);
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(two_n, result);
    return result;
}

// Phi_{2n-1} as a polynomial: (B_{2n}/(4n)) (1 - E_{2n}). Weight 2 gives
// the familiar (1 - P)/24.
inline GradedPoly phi_poly(unsigned odd_k) {
    if (odd_k % 2 == 0) throw std::invalid_argument("phi_poly: index must be odd");
    const unsigned two_n = odd_k + 1;
    const Rational factor = bernoulli(two_n) / Rational(2 * two_n);
    return factor * (GradedPoly::constant(1) - eisenstein_poly(two_n));
}

// Experimental backend: the classical S_{1,2n} recursion evaluated
// literally, reading S_{1,2n} = ((-1)^{n-1} B_{2n}/(4n)) E_{2n}. Returns
// the implied weight-(n+2) polynomial for even n > 4. Lower weights are
// taken from the trusted ansatz backend, so a test comparing the result
// with eisenstein_poly(n+2) isolates the recursion step itself.
inline GradedPoly eisenstein_recursion_eq20(unsigned n) {
    if (n % 2 != 0 || n <= 4)
        throw std::invalid_argument("eisenstein_recursion_eq20: n must be even and > 4");

    auto s1 = [](unsigned weight) -> GradedPoly {
        const unsigned half = weight / 2;
        Rational c = bernoulli(weight) / Rational(2 * weight);
        if (half % 2 == 0) c = -c;  // (-1)^{half-1}
        return c * eisenstein_poly(weight);
    };

    GradedPoly rhs = Rational(-20) * Rational(binomial(n - 2, 2)) * (s1(4) * s1(n - 2));
    const unsigned kmax = (n - 2) / 4;
    for (unsigned k = 1; k <= kmax; ++k) {
        const long long nn = n;
        const Rational bracket = Rational((nn + 3 - 5 * (long long)k) * (nn - 8 - 5 * (long long)k) -
                                          5 * ((long long)k - 2) * ((long long)k + 3));
        Rational c = Rational(binomial(n - 2, 2 * k)) * bracket;
        if (k == kmax && (n - 2) % 4 == 0) c /= 2;  // the primed-sum rule
        rhs += c * (s1(2 * k + 2) * s1(n - 2 * k));
    }

    const Rational lhs_coeff = Rational(-(long long)(n + 2) * (n + 3)) / Rational(2 * (long long)n * (n - 1));
    GradedPoly s1_next = (Rational(1) / lhs_coeff) * rhs;

    const unsigned weight = n + 2;
    Rational conv = bernoulli(weight) / Rational(2 * weight);
    if ((weight / 2) % 2 == 0) conv = -conv;
    return (Rational(1) / conv) * s1_next;
}

}  // namespace thetakit

#endif  // THETAKIT_EISENSTEIN_HPP
