#include "rootobs/smith.hpp"

#include <atomic>

namespace rootobs {

namespace {
std::atomic<bool> g_snf_fault{false};
}

void set_snf_fault_injection(bool enabled) { g_snf_fault.store(enabled); }

std::vector<Int> SmithDecomposition::diagonal() const {
  int r = std::min(d.rows(), d.cols());
  std::vector<Int> out(r);
  for (int i = 0; i < r; ++i) out[i] = d(i, i);
  return out;
}

int SmithDecomposition::rank() const {
  int r = 0;
  for (const Int& x : diagonal())
    if (x != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntMat& a) {
  const int m = a.rows(), n = a.cols();
  SmithDecomposition s{IntMat::identity(m), IntMat::identity(n), a};
  IntMat& d = s.d;
  IntMat& u = s.u;
  IntMat& v = s.v;

  const int r = std::min(m, n);
  for (int k = 0; k < r; ++k) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in d[k.., k..],
      // ties broken by lowest row then lowest column index.
      int pi = -1, pj = -1;
      Int best;
      for (int i = k; i < m; ++i)
        for (int j = k; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Int av = abs(d(i, j));
          if (pi < 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done;  // remaining block is zero

      if (pi != k) { d.swap_rows(k, pi); u.swap_rows(k, pi); }
      if (pj != k) { d.swap_cols(k, pj); v.swap_cols(k, pj); }

      bool clean = true;
      for (int i = k + 1; i < m; ++i) {
        if (d(i, k) == 0) continue;
        Int q = d(i, k) / d(k, k);  // truncated: remainder has |r| < |pivot|
        d.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        if (d(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (d(k, j) == 0) continue;
        Int q = d(k, j) / d(k, k);
        d.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders exist; reselect pivot

      // Pivot must divide every remaining entry for the chain to hold.
      int vi = -1;
      for (int i = k + 1; i < m && vi < 0; ++i)
        for (int j = k + 1; j < n; ++j)
          if (d(i, j) % d(k, k) != 0) { vi = i; break; }
      if (vi >= 0) {
        d.add_row_multiple(k, vi, 1);
        u.add_row_multiple(k, vi, 1);
        continue;
      }
      break;
    }
    if (d(k, k) < 0) { d.negate_row(k); u.negate_row(k); }
  }
done:
  if (g_snf_fault.load() && r > 0) d(0, 0) += 1;  // deliberately breaks u*a*v == d
  return s;
}

IntMat unimodular_inverse(const IntMat& u) {
  return u.to_rational().inverse().to_integer();
}

IntMat column_hnf(const IntMat& a) {
  // Row-reduce the transpose, then transpose back.
  IntMat t = a.transpose();  // rows are the generating vectors
  const int m = t.rows(), n = t.cols();
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    for (;;) {
      int p = -1;
      Int best;
      for (int i = r; i < m; ++i) {
        if (t(i, c) == 0) continue;
        Int av = abs(t(i, c));
        if (p < 0 || av < best) { best = av; p = i; }
      }
      if (p < 0) break;  // column has no pivot among remaining rows
      t.swap_rows(r, p);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (t(i, c) == 0) continue;
        Int q = t(i, c) / t(r, c);
        t.add_row_multiple(i, r, -q);
        if (t(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (t(r, c) == 0) continue;
    if (t(r, c) < 0) t.negate_row(r);
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(t(i, c), t(r, c));
      t.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  std::vector<int> keep(r);
  for (int i = 0; i < r; ++i) keep[i] = i;
  return t.select_rows(keep).transpose();
}

IntMat kernel_basis(const IntMat& a) {
  SmithDecomposition s = smith_normal_form(a);
  const int mn = std::min(a.rows(), a.cols());
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols(); ++j)
    if (j >= mn || s.d(j, j) == 0) free_cols.push_back(j);
  return column_hnf(s.v.select_columns(free_cols));
}

IntMat saturation(const IntMat& sub, int ambient_rank) {
  if (sub.rows() != ambient_rank) throw input_error("saturation: column length must equal ambient rank");
  SmithDecomposition s = smith_normal_form(sub);
  const int mn = std::min(sub.rows(), sub.cols());
  std::vector<int> pivots;
  for (int i = 0; i < mn; ++i)
    if (s.d(i, i) != 0) pivots.push_back(i);
  // span(sub) = u^-1 * diag * Z^k, so its rational span meets Z^n in u^-1 of
  // the pivot coordinate subspace.
  IntMat uinv = unimodular_inverse(s.u);
  return column_hnf(uinv.select_columns(pivots));
}

std::optional<std::vector<Int>> solve(const IntMat& a, const std::vector<Int>& b) {
  if (int(b.size()) != a.rows()) throw input_error("solve: rhs length must equal row count");
  SmithDecomposition s = smith_normal_form(a);
  std::vector<Int> y = s.u * b;
  std::vector<Int> x(a.cols());
  const int mn = std::min(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    if (i < mn && s.d(i, i) != 0) {
      if (y[i] % s.d(i, i) != 0) return std::nullopt;
      x[i] = y[i] / s.d(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * x;
}

std::optional<IntMat> solve_columns(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw input_error("solve_columns: row mismatch");
  IntMat x(a.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto xj = solve(a, b.column(j));
    if (!xj) return std::nullopt;
    x.set_column(j, *xj);
  }
  return x;
}

bool in_column_span(const IntMat& span, const std::vector<Int>& x) {
  return solve(span, x).has_value();
}

IntMat preimage_lattice_mod(const IntMat& a, const Int& m) {
  if (m <= 0) throw input_error("preimage_lattice_mod: modulus must be positive");
  // Solutions of a*x = m*y. The projection (x, y) -> x is injective on the
  // kernel, so the x-blocks of a kernel basis form a basis.
  const int r = a.rows(), n = a.cols();
  IntMat block = a.hcat(IntMat::identity(r));
  for (int i = 0; i < r; ++i) block(i, n + i) = -m;
  IntMat k = kernel_basis(block);
  std::vector<int> top(n);
  for (int i = 0; i < n; ++i) top[i] = i;
  return column_hnf(k.select_rows(top));
}

}  // namespace rootobs
