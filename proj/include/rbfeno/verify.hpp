#ifndef RBFENO_VERIFY_HPP_
#define RBFENO_VERIFY_HPP_

#include <string>
#include <vector>

namespace rbfeno {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Closed forms of the centered k = 2 coefficient for the two bases, in
/// their own eta variables.
long double mq_exact_coefficient(long double eta);
long double gaussian_exact_coefficient(long double eta);

PropertyResult check_polynomial_limit();
PropertyResult check_consistency_sums();
PropertyResult check_eta_vanishing();
PropertyResult check_mq_closed_form();
PropertyResult check_gaussian_equivalence();
PropertyResult check_weno_partition();
PropertyResult check_conservation();
PropertyResult check_rk3_order();

std::vector<PropertyResult> run_property_suites();

}  // namespace rbfeno

#endif  // RBFENO_VERIFY_HPP_
