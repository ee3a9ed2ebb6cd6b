#include "exforge/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace exf {

namespace {

ZMat identity_mat(size_t n) {
  ZMat m(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SNFResult smith_normal_form(ZMat a, bool want_left) {
  size_t m = a.size();
  size_t n = m ? a[0].size() : 0;
  SNFResult res;
  res.right = identity_mat(n);
  if (want_left) res.left = identity_mat(m);

  auto row_addmul = [&](size_t dst, size_t src, const mpz_class& f) {
    for (size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    if (want_left)
      for (size_t j = 0; j < m; ++j) res.left[dst][j] += f * res.left[src][j];
  };
  auto col_addmul = [&](size_t dst, size_t src, const mpz_class& f) {
    for (size_t i = 0; i < m; ++i) a[i][dst] += f * a[i][src];
    for (size_t i = 0; i < n; ++i) res.right[i][dst] += f * res.right[i][src];
  };
  auto row_swap = [&](size_t r1, size_t r2) {
    std::swap(a[r1], a[r2]);
    if (want_left) std::swap(res.left[r1], res.left[r2]);
  };
  auto col_swap = [&](size_t c1, size_t c2) {
    for (size_t i = 0; i < m; ++i) std::swap(a[i][c1], a[i][c2]);
    for (size_t i = 0; i < n; ++i) std::swap(res.right[i][c1], res.right[i][c2]);
  };
  auto row_negate = [&](size_t r) {
    for (size_t j = 0; j < n; ++j) a[r][j] = -a[r][j];
    if (want_left)
      for (size_t j = 0; j < m; ++j) res.left[r][j] = -res.left[r][j];
  };

  size_t t = 0;
  size_t bound = std::min(m, n);
  while (t < bound) {
    // locate minimal nonzero |entry| in the trailing submatrix
    size_t pi = t, pj = t;
    bool found = false;
    mpz_class best;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        mpz_class v = abs(a[i][j]);
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (a[t][t] < 0) row_negate(t);

    bool dirty = false;
    for (size_t i = t + 1; i < m; ++i) {
      if (a[i][t] == 0) continue;
      mpz_class q = a[i][t] / a[t][t];  // truncated division is fine, loop repeats
      row_addmul(i, t, -q);
      if (a[i][t] != 0) dirty = true;
    }
    for (size_t j = t + 1; j < n; ++j) {
      if (a[t][j] == 0) continue;
      mpz_class q = a[t][j] / a[t][t];
      col_addmul(j, t, -q);
      if (a[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // remainders left; re-pick pivot

    // pivot must divide every entry of the remaining block
    bool divides_all = true;
    for (size_t i = t + 1; i < m && divides_all; ++i)
      for (size_t j = t + 1; j < n; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          row_addmul(t, i, 1);  // pull the offending row up and restart
          divides_all = false;
          break;
        }
      }
    if (!divides_all) continue;
    ++t;
  }

  res.diag.assign(bound, 0);
  for (size_t i = 0; i < bound; ++i) res.diag[i] = a[i][i];
  return res;
}

}  // namespace exf
