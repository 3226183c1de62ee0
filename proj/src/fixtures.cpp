#include "bellgauge/fixtures.hpp"

#include <cmath>

#include "bellgauge/bell.hpp"

namespace bellgauge {

ComplexMatrix4 rho1_matrix() {
  ComplexMatrix4 m;
  m(1, 1) = 0.549027;
  m(1, 2) = 0.125;
  m(2, 1) = 0.125;
  m(2, 2) = 0.449798;
  m(3, 3) = 0.001175;
  return m;
}

ComplexMatrix4 rho2_matrix() {
  ComplexMatrix4 m;
  m(1, 1) = 0.632864;
  m(1, 2) = 0.125;
  m(2, 1) = 0.125;
  m(2, 2) = 0.317431;
  m(3, 3) = 0.049708;
  return m;
}

DensityMatrix rho1() { return validate(rho1_matrix(), TracePolicy::strict); }

DensityMatrix rho2() { return validate(rho2_matrix(), TracePolicy::renormalize); }

double santos_threshold() { return 1.0 / std::sqrt(2.0) - 0.25; }

std::vector<PaperCheck> run_paper_checks(double perturb) {
  ComplexMatrix4 m1 = rho1_matrix();
  if (perturb != 0.0) {
    m1(1, 1) += perturb;
    m1(2, 2) -= perturb;
  }
  const DensityMatrix state1 = validate(m1, TracePolicy::strict);
  const DensityMatrix state2 = rho2();

  const double s1 = linear_entropy(state1).linear_entropy;
  const double s2 = linear_entropy(state2).linear_entropy;
  const double b1 = chsh_max(state1).chsh_max;
  const double b2 = chsh_max(state2).chsh_max;
  const double threshold = santos_threshold();

  std::vector<PaperCheck> checks;
  auto numeric = [&checks](const std::string& name, double expected, double actual, double tol) {
    checks.push_back(PaperCheck{name, false, expected, actual, tol,
                                std::abs(actual - expected) <= tol});
  };
  auto flag = [&checks](const std::string& name, bool actual) {
    checks.push_back(PaperCheck{name, true, 1.0, actual ? 1.0 : 0.0, 0.0, actual});
  };

  numeric("linear-entropy-rho1", 0.465, s1, 5e-4);
  numeric("linear-entropy-rho2", 0.465, s2, 5e-4);
  numeric("chsh-max-rho1", 2.05699, b1, 1e-4);
  numeric("chsh-max-rho2", 1.86929, b2, 1e-4);
  flag("entropies-at-or-above-threshold", s1 >= threshold && s2 >= threshold);
  flag("rho1-violates-rho2-does-not", b1 > 2.0 && b2 <= 2.0);
  return checks;
}

bool all_checks_pass(const std::vector<PaperCheck>& checks) {
  for (const PaperCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace bellgauge
