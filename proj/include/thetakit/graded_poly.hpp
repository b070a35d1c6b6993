#ifndef THETAKIT_GRADED_POLY_HPP
#define THETAKIT_GRADED_POLY_HPP

#include "thetakit/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace thetakit {

// Exponent tuple for the six generators (P, Q, R, P2, Q2, R2).
// Bare P, Q, R are the level-q Eisenstein series; P2, Q2, R2 the same
// series at q^2. Modular weights: P-type 2, Q-type 4, R-type 6.
using Exponents = std::array<unsigned, 6>;

inline constexpr std::array<const char*, 6> kGeneratorNames = {"P", "Q", "R", "P2", "Q2", "R2"};
inline constexpr std::array<unsigned, 6> kGeneratorWeights = {2, 4, 6, 2, 4, 6};

inline unsigned monomial_weight(const Exponents& e) {
    unsigned w = 0;
    for (int i = 0; i < 6; ++i) w += kGeneratorWeights[i] * e[i];
    return w;
}

// Canonical term order: higher weight first, then lexicographically larger
// exponent tuple first (P > Q > R > P2 > Q2 > R2).
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const unsigned wa = monomial_weight(a), wb = monomial_weight(b);
        if (wa != wb) return wa > wb;
        return a > b;
    }
};

// Weight of a polynomial: a uniform weight when isobaric, otherwise mixed.
struct Weight {
    enum Kind { Zero, Uniform, Mixed } kind = Zero;
    unsigned value = 0;  // meaningful only for Uniform

    bool operator==(const Weight&) const = default;
};

inline Weight weight_zero() { return {Weight::Zero, 0}; }
inline Weight weight_uniform(unsigned w) { return {Weight::Uniform, w}; }
inline Weight weight_mixed() { return {Weight::Mixed, 0}; }

// Sparse multivariate polynomial over the six generators with exact
// rational coefficients. Zero coefficients are never stored.
class GradedPoly {
  public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    GradedPoly() = default;

    static GradedPoly constant(const Rational& c) {
        GradedPoly p;
        if (c != 0) p.terms_[Exponents{}] = c;
        return p;
    }

    // Single generator by index (0..5).
    static GradedPoly generator(unsigned idx) {
        GradedPoly p;
        Exponents e{};
        e.at(idx) = 1;
        p.terms_[e] = 1;
        return p;
    }

    static GradedPoly monomial(const Exponents& e, const Rational& c) {
        GradedPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator-(const GradedPoly& a) {
        GradedPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        GradedPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int i = 0; i < 6; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    friend GradedPoly operator*(const Rational& s, const GradedPoly& a) {
        GradedPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = s * c;
        return r;
    }
    friend GradedPoly operator*(const GradedPoly& a, const Rational& s) { return s * a; }

    GradedPoly pow(unsigned k) const {
        GradedPoly r = constant(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }

    Weight weight() const {
        if (terms_.empty()) return weight_zero();
        std::optional<unsigned> w;
        for (const auto& [e, c] : terms_) {
            const unsigned mw = monomial_weight(e);
            if (!w)
                w = mw;
            else if (*w != mw)
                return weight_mixed();
        }
        return weight_uniform(*w);
    }

    // Substitute 1 for every generator. The q -> 0 normalization check:
    // theta1 coefficient polynomials evaluate to 1, theta4 ratio and Phi
    // polynomials to 0.
    Rational evaluate_all_ones() const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) acc += c;
        return acc;
    }

    // Swap the level-q generators with the level-q^2 ones.
    GradedPoly swap_levels() const {
        GradedPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_[Exponents{e[3], e[4], e[5], e[0], e[1], e[2]}] = c;
        return r;
    }

    // Rename (P,Q,R) -> (P2,Q2,R2); only valid for level-1-only polynomials.
    GradedPoly to_level2() const {
        GradedPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[3] || e[4] || e[5])
                throw std::invalid_argument("to_level2: polynomial already has level-2 generators");
            r.terms_[Exponents{0, 0, 0, e[0], e[1], e[2]}] = c;
        }
        return r;
    }

  private:
    TermMap terms_;
};

namespace detail {

inline std::string render_monomial(const Exponents& e, bool latex) {
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += latex ? " " : "*";
        if (latex && i >= 3) {
            // P2 -> P_2 etc.
            s += std::string(1, kGeneratorNames[i][0]) + "_2";
        } else {
            s += kGeneratorNames[i];
        }
        if (e[i] > 1) s += (latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]));
    }
    return s;
}

}  // namespace detail

// Plain-text rendering: "5/3*P^2 - 2/3*Q", terms in canonical order.
inline std::string render_human(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string coeff = rat_den(a) == 1 ? rat_num(a).str() : rat_num(a).str() + "/" + rat_den(a).str();
        const std::string mono = detail::render_monomial(e, false);
        if (mono.empty())
            out += coeff;
        else if (a == 1)
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

// LaTeX rendering: the common denominator is factored out, matching the
// tabular style of the closed forms, e.g. "\frac{1}{3}(5P^{2} - 2Q)".
inline std::string render_latex(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    Int lcm = 1;
    for (const auto& [e, c] : p.terms())
        lcm = boost::multiprecision::lcm(lcm, rat_den(c));
    std::string body;
    for (const auto& [e, c] : p.terms()) {
        const Rational scaled = c * Rational(lcm);
        Int n = rat_num(scaled);  // integral after scaling
        const bool neg = n < 0;
        if (neg) n = -n;
        if (body.empty())
            body += neg ? "-" : "";
        else
            body += neg ? " - " : " + ";
        const std::string mono = detail::render_monomial(e, true);
        if (mono.empty())
            body += n.str();
        else if (n == 1)
            body += mono;
        else
            body += n.str() + mono;
    }
    if (lcm == 1) {
        if (p.terms().size() == 1) return body;
        return "(" + body + ")";
    }
    return "\\frac{1}{" + lcm.str() + "}(" + body + ")";
}

}  // namespace thetakit

#endif  // THETAKIT_GRADED_POLY_HPP
