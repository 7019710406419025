#pragma once

#include "thhcheck/report.hpp"

namespace thhcheck::bcy {

/// Path components of the undercategory 1 | mu_2 restricted to pairs
/// (n_1, n_2) with n_i <= max_n. Objects are ((n_1, n_2), h: 1 -> n_1 |_| n_2);
/// a morphism is a pair (f_1, f_2) with (f_1 |_| f_2) o h = h'.
/// Throws std::invalid_argument for max_n < 1.
int comma_components_mu2(int max_n);

/// For N = 1..max_n: the component count is 2 and every morphism preserves
/// which block h(1) lies in. `value` holds the count at max_n.
Report verify_comma_components(int max_n);

}  // namespace thhcheck::bcy
