#ifndef EXFORGE_SNF_HPP
#define EXFORGE_SNF_HPP

#include <vector>
#include <gmpxx.h>

namespace exf {

using ZMat = std::vector<std::vector<mpz_class>>;

struct SNFResult {
  std::vector<mpz_class> diag;  // d_1 | d_2 | ... (nonnegative, zeros last)
  ZMat left;                    // U with U*A*V = D
  ZMat right;                   // V
};

/// Smith normal form over Z. `a` is m x n (rows of length n). When
/// `want_left` is false the U accumulator is skipped (it can be huge for
/// relation matrices with many rows); V is always produced since the
/// universal-group remap needs it.
SNFResult smith_normal_form(ZMat a, bool want_left = true);

}  // namespace exf

#endif
