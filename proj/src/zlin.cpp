#include "toricmcm/zlin.hpp"

#include "toricmcm/errors.hpp"

namespace toricmcm {

namespace {

size_t ncols(const ZMat& m) { return m.empty() ? 0 : m[0].size(); }

void row_axpy(ZVec& r, const ZVec& s, const ZZ& c) {
  for (size_t j = 0; j < r.size(); ++j) r[j] += c * s[j];
}

// Reduce rows to echelon form over Z using gcd combinations (HNF, row style).
void echelonize(ZMat& m) {
  size_t rows = m.size(), cols = ncols(m);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // eliminate column c below row r by gcd chaining
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      while (m[i][c] != 0) {
        ZZ q = m[r][c] / m[i][c];  // truncated division
        row_axpy(m[r], m[i], -q);
        std::swap(m[r], m[i]);
      }
    }
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    // reduce entries above the pivot
    for (size_t i = 0; i < r; ++i) {
      ZZ q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0) row_axpy(m[i], m[r], -q);
    }
    ++r;
  }
  m.resize(r);
}

}  // namespace

ZMat hnf_rows(ZMat rows) {
  echelonize(rows);
  return rows;
}

int zrank(const ZMat& rows) {
  ZMat m = rows;
  echelonize(m);
  return int(m.size());
}

ZZ lattice_index_in_ambient(const ZMat& basis_rows) {
  ZMat h = hnf_rows(basis_rows);
  size_t n = ncols(basis_rows);
  if (h.size() != n)
    throw InfiniteIndexError("lattice is not of full rank in its ambient");
  ZZ det = 1;
  // HNF pivots sit on a staircase; full rank square means diagonal pivots
  for (size_t i = 0; i < n; ++i) det *= h[i][i];
  if (det < 0) det = -det;
  return det;
}

bool in_lattice(const ZMat& basis_rows, const ZVec& v) {
  ZMat h = hnf_rows(basis_rows);
  ZVec r = v;
  size_t cols = r.size();
  size_t i = 0;
  for (size_t c = 0; c < cols; ++c) {
    if (i < h.size() && h[i][c] != 0) {
      ZZ q;
      mpz_fdiv_q(q.get_mpz_t(), r[c].get_mpz_t(), h[i][c].get_mpz_t());
      ZZ rem = r[c] - q * h[i][c];
      if (rem != 0) return false;
      for (size_t j = 0; j < cols; ++j) r[j] -= q * h[i][j];
      ++i;
    }
    if (r[c] != 0) return false;
  }
  return true;
}

LinearSolveResult solve_integer(const ZMat& A, const ZVec& b) {
  size_t m = A.size();
  size_t n = m == 0 ? 0 : A[0].size();
  // rows of work: (column_i(A) | e_i); echelonize in the first m coordinates
  ZMat work(n, ZVec(m + n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) work[i][j] = A[j][i];
    work[i][m + i] = 1;
  }
  // partial echelon: only pivot within the first m columns
  size_t r = 0;
  for (size_t c = 0; c < m && r < n; ++c) {
    size_t piv = n;
    for (size_t i = r; i < n; ++i)
      if (work[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    std::swap(work[r], work[piv]);
    for (size_t i = r + 1; i < n; ++i) {
      while (work[i][c] != 0) {
        ZZ q = work[r][c] / work[i][c];
        row_axpy(work[r], work[i], -q);
        std::swap(work[r], work[i]);
      }
    }
    if (work[r][c] < 0)
      for (auto& x : work[r]) x = -x;
    for (size_t i = 0; i < r; ++i) {
      ZZ q;
      mpz_fdiv_q(q.get_mpz_t(), work[i][c].get_mpz_t(),
                 work[r][c].get_mpz_t());
      if (q != 0) row_axpy(work[i], work[r], -q);
    }
    ++r;
  }
  LinearSolveResult res;
  for (size_t i = r; i < n; ++i)
    res.kernel.push_back(ZVec(work[i].begin() + m, work[i].end()));
  // forward-substitute b against the echelon rows
  ZVec rem = b;
  ZVec x(n, 0);
  bool ok = true;
  size_t row = 0;
  for (size_t c = 0; c < m && row < r; ++c) {
    if (work[row][c] == 0) continue;
    ZZ q = rem[c] / work[row][c];
    if (rem[c] % work[row][c] != 0) {
      ok = false;
      break;
    }
    for (size_t j = 0; j < m; ++j) rem[j] -= q * work[row][j];
    for (size_t j = 0; j < n; ++j) x[j] += q * work[row][m + j];
    ++row;
  }
  if (ok)
    for (size_t j = 0; j < m; ++j)
      if (rem[j] != 0) ok = false;
  if (ok && m > 0) res.particular = x;
  if (ok && m == 0) res.particular = ZVec(n, 0);
  return res;
}

ZMat integer_kernel(const ZMat& A) {
  ZVec zero(A.size(), 0);
  return solve_integer(A, zero).kernel;
}

ModSolveResult solve_mod(const ZMat& A, const ZVec& b, const ZZ& M) {
  size_t m = A.size();
  size_t n = m == 0 ? 0 : A[0].size();
  // Smith normal form with transforms: U * A * V = D
  ZMat D = A;
  ZMat U(m, ZVec(m, 0)), V(n, ZVec(n, 0));
  for (size_t i = 0; i < m; ++i) U[i][i] = 1;
  for (size_t i = 0; i < n; ++i) V[i][i] = 1;

  auto col_axpy = [&](ZMat& mat, size_t dst, size_t src, const ZZ& c) {
    for (size_t i = 0; i < mat.size(); ++i) mat[i][dst] += c * mat[i][src];
  };
  auto col_swap = [&](ZMat& mat, size_t a, size_t bcol) {
    for (size_t i = 0; i < mat.size(); ++i) std::swap(mat[i][a], mat[i][bcol]);
  };

  size_t t = 0;
  while (t < m && t < n) {
    // find a nonzero pivot
    size_t pi = m, pj = n;
    for (size_t i = t; i < m && pi == m; ++i)
      for (size_t j = t; j < n; ++j)
        if (D[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m) break;
    std::swap(D[t], D[pi]);
    std::swap(U[t], U[pi]);
    col_swap(D, t, pj);
    col_swap(V, t, pj);
    // plain eliminations when the pivot divides (they leave the pivot row
    // and column intact); swap-reductions otherwise, which strictly shrink
    // the pivot, so the repeat terminates
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = t + 1; i < m; ++i) {
        while (D[i][t] != 0) {
          if (D[i][t] % D[t][t] == 0) {
            ZZ q = D[i][t] / D[t][t];
            row_axpy(D[i], D[t], -q);
            row_axpy(U[i], U[t], -q);
          } else {
            ZZ q = D[t][t] / D[i][t];
            row_axpy(D[t], D[i], -q);
            row_axpy(U[t], U[i], -q);
            std::swap(D[t], D[i]);
            std::swap(U[t], U[i]);
            again = true;
          }
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        while (D[t][j] != 0) {
          if (D[t][j] % D[t][t] == 0) {
            ZZ q = D[t][j] / D[t][t];
            col_axpy(D, j, t, -q);
            col_axpy(V, j, t, -q);
          } else {
            ZZ q = D[t][t] / D[t][j];
            col_axpy(D, t, j, -q);
            col_axpy(V, t, j, -q);
            col_swap(D, t, j);
            col_swap(V, t, j);
            again = true;
          }
        }
      }
    }
    if (D[t][t] < 0) {
      // flip column t of D together with column t of V
      for (size_t i = 0; i < m; ++i) D[i][t] = -D[i][t];
      for (size_t i = 0; i < n; ++i) V[i][t] = -V[i][t];
    }
    ++t;
  }

  // solve D y == U b (mod M), x = V y
  ZVec ub(m, 0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) ub[i] += U[i][j] * b[j];
    mpz_mod(ub[i].get_mpz_t(), ub[i].get_mpz_t(), M.get_mpz_t());
  }
  ModSolveResult out;
  ZVec y(n, 0);
  bool ok = true;
  for (size_t i = 0; i < std::max(m, n); ++i) {
    ZZ d = (i < m && i < n) ? D[i][i] : ZZ(0);
    ZZ rhs = (i < m) ? ub[i] : ZZ(0);
    if (d == 0) {
      if (i < m && rhs != 0) {  // ub entries are reduced into [0, M)
        ok = false;
        break;
      }
      continue;  // free coordinate, take 0
    }
    if (i >= n) break;
    ZZ g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t());
    if (rhs % g != 0) {
      ok = false;
      break;
    }
    // d*y == rhs (mod M): y = (rhs/g) * inv(d/g) mod (M/g)
    ZZ dg = d / g, rg = rhs / g, Mg = M / g;
    ZZ inv;
    if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), Mg.get_mpz_t()) == 0) {
      ok = false;
      break;
    }
    y[i] = (rg * inv) % Mg;
    if (y[i] < 0) y[i] += Mg;
  }
  if (ok) {
    ZVec x(n, 0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) x[i] += V[i][j] * y[j];
      mpz_mod(x[i].get_mpz_t(), x[i].get_mpz_t(), M.get_mpz_t());
    }
    out.particular = x;
  }
  // homogeneous generators: columns of V for indices with d == 0 plus
  // (M/gcd(d,M)) multiples of the others
  for (size_t i = 0; i < n; ++i) {
    ZZ d = (i < m) ? D[i][i] : ZZ(0);
    ZZ mult;
    if (d == 0) {
      mult = 1;
    } else {
      ZZ g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t());
      mult = M / g;
      if (mult == M) continue;  // only trivial multiples
    }
    ZVec col(n, 0);
    for (size_t r2 = 0; r2 < n; ++r2) {
      col[r2] = (V[r2][i] * mult) % M;
      if (col[r2] < 0) col[r2] += M;
    }
    out.homogeneous.push_back(col);
  }
  return out;
}

}  // namespace toricmcm
