#ifndef THETAKIT_RATIONAL_HPP
#define THETAKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetakit {

// Exact arbitrary-precision scalars. All arithmetic in this library is done
// over the rationals; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical form "num/den", lowest terms, sign on the numerator.
inline std::string rat_to_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "num/den" or a bare integer "n".
inline Rational rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("rational denominator must be positive: " + s);
    return Rational(num, den);
}

// C(n, k) with the out-of-range convention C(n, k) = 0 for k < 0 or k > n.
inline Int binomial(unsigned n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n)
        return 0;
    unsigned uk = static_cast<unsigned>(k);
    if (uk > n - uk)
        uk = n - uk;
    Int result = 1;
    for (unsigned i = 1; i <= uk; ++i) {
        result *= n - uk + i;
        result /= i;
    }
    return result;
}

// Bernoulli numbers, convention B_1 = -1/2, via the defining recurrence
// sum_{k=0}^{n} C(n+1, k) B_k = 0. Memoized; exact.
inline Rational bernoulli(unsigned n) {
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * table[k];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[n];
}

// One Faa di Bruno partition term: multiplicities (m_1, ..., m_n) with
// sum j*m_j = n.
struct MultiplicityVector {
    unsigned n = 0;
    std::vector<unsigned> m;  // m[j-1] = m_j, length n

    unsigned total_parts() const {
        unsigned t = 0;
        for (unsigned mj : m) t += mj;
        return t;
    }
};

// Every nonnegative tuple (m_1, ..., m_n) with sum j*m_j = n, each exactly
// once, in lexicographic order on (m_1, ..., m_n). The count is the
// partition number p(n).
inline std::vector<MultiplicityVector> partition_multiplicities(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("partition_multiplicities requires n >= 1");
    // Choose m_1 from 0 upward, then m_2, etc., so the output is
    // lexicographic on (m_1, ..., m_n).
    std::vector<MultiplicityVector> result;
    std::vector<unsigned> cur(n, 0);
    auto enumerate = [&](auto&& self, unsigned j, unsigned remaining) -> void {
        if (j == n) {
            if (remaining % n == 0) {
                cur[n - 1] = remaining / n;
                result.push_back({n, cur});
                cur[n - 1] = 0;
            }
            return;
        }
        for (unsigned mj = 0; mj * j <= remaining; ++mj) {
            cur[j - 1] = mj;
            self(self, j + 1, remaining - mj * j);
        }
        cur[j - 1] = 0;
    };
    enumerate(enumerate, 1, n);
    return result;
}

// n^k for nonnegative k, over cpp_int.
inline Int int_pow(const Int& base, unsigned k) {
    Int r = 1, b = base;
    unsigned e = k;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace thetakit

#endif  // THETAKIT_RATIONAL_HPP
