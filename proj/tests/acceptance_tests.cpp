// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance here is exact (zero tolerance) except the stated
// runtime budgets.

#include "thetakit/thetakit.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace thetakit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& description, double budget_seconds,
                   const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail << " [runtime " << elapsed << "s exceeds budget " << budget_seconds << "s]";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << description << " ("
              << elapsed << "s)";
    if (!ok && !detail.str().empty()) std::cout << " -- " << detail.str();
    std::cout << "\n";
    if (!ok) ++failures;
}

GradedPoly pqr(long long den,
               std::initializer_list<std::pair<std::array<unsigned, 3>, long long>> terms) {
    return pqr_poly(den, terms);
}

}  // namespace

int main() {
    run_criterion(1, "golden theta1 coefficient polynomials (exact equality)", 1.0, [](std::ostream& why) {
        struct Golden {
            unsigned nu;
            GradedPoly poly;
        };
        const Golden goldens[] = {
            {0, GradedPoly::constant(1)},
            {1, pqr(1, {{{1, 0, 0}, 1}})},
            {2, pqr(3, {{{2, 0, 0}, 5}, {{0, 1, 0}, -2}})},
            {3, pqr(9, {{{3, 0, 0}, 35}, {{1, 1, 0}, -42}, {{0, 0, 1}, 16}})},
            {5, pqr(9, {{{5, 0, 0}, 385},
                        {{3, 1, 0}, -1540},
                        {{1, 2, 0}, -660},
                        {{2, 0, 1}, 1760},
                        {{0, 1, 1}, 64}})},
            {6, pqr(27, {{{6, 0, 0}, 5005},
                         {{4, 1, 0}, -30030},
                         {{2, 2, 0}, -25740},
                         {{0, 3, 0}, 552},
                         {{3, 0, 1}, 45760},
                         {{1, 1, 1}, 4992},
                         {{0, 0, 2}, -512}})},
            {7, pqr(27, {{{7, 0, 0}, 25025},
                         {{5, 1, 0}, -210210},
                         {{3, 2, 0}, -300300},
                         {{1, 3, 0}, 19320},
                         {{4, 0, 1}, 400400},
                         {{2, 1, 1}, 87360},
                         {{0, 2, 1}, -3648},
                         {{1, 0, 2}, -17920}})},
        };
        for (const auto& g : goldens) {
            if (s3_coeff_poly(g.nu) != g.poly) {
                why << "nu=" << g.nu << " got " << render_human(s3_coeff_poly(g.nu));
                return false;
            }
        }
        return true;
    });

    run_criterion(2, "documented S_3(9) erratum (corrected /3 matches, printed /9 refuted)", 5.0,
                  [](std::ostream& why) {
                      const GradedPoly corrected =
                          pqr(3, {{{4, 0, 0}, 35}, {{2, 1, 0}, -84}, {{0, 2, 0}, -12}, {{1, 0, 1}, 64}});
                      if (s3_coeff_poly(4) != corrected) {
                          why << "computed nu=4 polynomial is not the corrected form";
                          return false;
                      }
                      if (!verify_theta1(4, 200).match()) {
                          why << "corrected form fails the oracle";
                          return false;
                      }
                      const auto rep = verify_theta1_against(printed_s3_9_poly(), 4, 200);
                      if (rep.match() || !rep.first_mismatch) {
                          why << "printed /9 variant unexpectedly verified";
                          return false;
                      }
                      const auto& m = *rep.first_mismatch;
                      if (m.index != 1 || m.lhs != 1 || m.rhs != Rational(1, 3)) {
                          why << "mismatch not at q^{1/8} with 1 vs 1/3";
                          return false;
                      }
                      return true;
                  });

    run_criterion(3, "golden Phi table (Phi_7..Phi_17 exact + oracle at window 60)", 2.0,
                  [](std::ostream& why) {
                      const std::pair<unsigned, GradedPoly> goldens[] = {
                          {7, pqr(480, {{{0, 2, 0}, 1}, {{0, 0, 0}, -1}})},
                          {9, pqr(264, {{{0, 0, 0}, 1}, {{0, 1, 1}, -1}})},
                          {11, pqr(65520, {{{0, 0, 0}, -691}, {{0, 3, 0}, 441}, {{0, 0, 2}, 250}})},
                          {13, pqr(24, {{{0, 0, 0}, 1}, {{0, 2, 1}, -1}})},
                          {15, pqr(16320, {{{0, 0, 0}, -3617}, {{0, 4, 0}, 1617}, {{0, 1, 2}, 2000}})},
                          {17, pqr(28728, {{{0, 0, 0}, 43867}, {{0, 3, 1}, -38367}, {{0, 0, 3}, -5500}})},
                      };
                      for (const auto& [k, poly] : goldens) {
                          if (phi_poly(k) != poly) {
                              why << "Phi_" << k << " differs from the published table";
                              return false;
                          }
                          if (!verify_phi(k, 60).match()) {
                              why << "Phi_" << k << " fails the oracle";
                              return false;
                          }
                      }
                      return true;
                  });

    run_criterion(4, "golden theta4 ratio polynomials (nu=1..4 exact + oracle at window 100)", 5.0,
                  [](std::ostream& why) {
                      // spot-check the published forms via exact reconstruction
                      GradedPoly r1;
                      r1.add_term(Exponents{0, 0, 0, 1, 0, 0}, Rational(1, 3));
                      r1.add_term(Exponents{1, 0, 0, 0, 0, 0}, Rational(-1, 3));
                      if (theta4_ratio_poly(1) != r1) {
                          why << "nu=1 ratio polynomial wrong";
                          return false;
                      }
                      const GradedPoly diff =
                          GradedPoly::generator(0) - GradedPoly::generator(3);  // P - P2
                      const GradedPoly r2_expected =
                          Rational(1, 15) * (Rational(5) * diff * diff - Rational(2) * GradedPoly::generator(1) +
                                             Rational(2) * GradedPoly::generator(4));
                      if (theta4_ratio_poly(2) != r2_expected) {
                          why << "nu=2 ratio polynomial wrong";
                          return false;
                      }
                      // nu=3 and nu=4 forms are pinned exactly in the unit suite;
                      // here confirm the oracle for all four.
                      for (unsigned nu = 1; nu <= 4; ++nu) {
                          if (theta4_ratio_poly(nu).weight() != weight_uniform(2 * nu)) {
                              why << "nu=" << nu << " is not isobaric of weight " << 2 * nu;
                              return false;
                          }
                          if (!verify_theta4(nu, 100).match()) {
                              why << "nu=" << nu << " fails the oracle";
                              return false;
                          }
                      }
                      return true;
                  });

    run_criterion(5, "oracle sweep (theta1 nu<=10 at 200, theta4 nu<=8 at 100)", 120.0,
                  [](std::ostream& why) {
                      for (unsigned nu = 0; nu <= 10; ++nu)
                          if (!verify_theta1(nu, 200).match()) {
                              why << "theta1 nu=" << nu;
                              return false;
                          }
                      for (unsigned nu = 1; nu <= 8; ++nu)
                          if (!verify_theta4(nu, 100).match()) {
                              why << "theta4 nu=" << nu;
                              return false;
                          }
                      return true;
                  });

    run_criterion(6, "property suite (grading, normalization, Bell count, consistency, eta^3 identity)",
                  60.0, [](std::ostream& why) {
                      for (unsigned nu = 0; nu <= 10; ++nu) {
                          const GradedPoly c = s3_coeff_poly(nu);
                          if (nu > 0 && c.weight() != weight_uniform(2 * nu)) {
                              why << "theta1 weight nu=" << nu;
                              return false;
                          }
                          if (c.evaluate_all_ones() != 1) {
                              why << "theta1 normalization nu=" << nu;
                              return false;
                          }
                      }
                      for (unsigned nu = 1; nu <= 8; ++nu) {
                          const GradedPoly r = theta4_ratio_poly(nu);
                          if (r.weight() != weight_uniform(2 * nu) || r.evaluate_all_ones() != 0) {
                              why << "theta4 grading/normalization nu=" << nu;
                              return false;
                          }
                      }
                      for (unsigned k = 1; k <= 17; k += 2)
                          if (phi_poly(k).evaluate_all_ones() != 0) {
                              why << "Phi_" << k << " normalization";
                              return false;
                          }
                      // Bell term count = p(nu), against the pentagonal recurrence
                      std::vector<long long> p(13, 0);
                      p[0] = 1;
                      for (unsigned m = 1; m <= 12; ++m)
                          for (long long k = 1;; ++k) {
                              const long long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
                              if (g1 > (long long)m) break;
                              const long long sign = (k % 2 == 1) ? 1 : -1;
                              p[m] += sign * p[m - g1];
                              if (g2 <= (long long)m) p[m] += sign * p[m - g2];
                          }
                      for (unsigned nu = 1; nu <= 12; ++nu)
                          if ((long long)partition_multiplicities(nu).size() != p[nu]) {
                              why << "Bell term count nu=" << nu;
                              return false;
                          }
                      for (unsigned nu = 1; nu <= 8; ++nu)
                          if (faa_di_bruno_log_relation(nu) != log_theta4_deriv_poly(nu)) {
                              why << "Faa di Bruno consistency nu=" << nu;
                              return false;
                          }
                      if (!eta_cubed_product(200).same_coefficients(s3_direct(1, 200))) {
                          why << "eta^3 product vs lacunary sum";
                          return false;
                      }
                      return true;
                  });

    run_criterion(7, "Eisenstein ansatz solver (weights 8..24 nonsingular, validated, normalized)",
                  10.0, [](std::ostream& why) {
                      for (unsigned w = 8; w <= 24; w += 2) {
                          GradedPoly e;
                          try {
                              e = eisenstein_poly(w);  // throws on singular or failed
                                                       // surplus validation
                          } catch (const std::exception& ex) {
                              why << "weight " << w << ": " << ex.what();
                              return false;
                          }
                          if (e.evaluate_all_ones() != 1) {
                              why << "weight " << w << " all-ones != 1";
                              return false;
                          }
                      }
                      return true;
                  });

    run_criterion(8, "sign-experiment regression (uncorrected log-derivative sign is refuted)", 10.0,
                  [](std::ostream& why) {
                      const auto rep =
                          verify_theta4_against(theta4_ratio_poly(2, /*corrected_sign=*/false), 2, 100);
                      if (rep.match()) {
                          why << "wrong-sign variant unexpectedly verified";
                          return false;
                      }
                      if (!verify_theta4(2, 100).match()) {
                          why << "corrected variant fails";
                          return false;
                      }
                      return true;
                  });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
