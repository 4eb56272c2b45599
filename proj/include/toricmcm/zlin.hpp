#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace toricmcm {

using ZZ = mpz_class;
using ZVec = std::vector<ZZ>;
using ZMat = std::vector<ZVec>;  // row-major

inline ZZ zz(long long v) { return ZZ(static_cast<long>(v)); }

/// Exact integer lattice routines (Hermite/Smith style), used for group
/// hulls, lattice indices, toric kernel lattices and discrete-log systems.

/// Hermite normal form of the lattice spanned by the rows; returns the
/// nonzero rows (a canonical basis, pivots positive, entries above pivots
/// reduced).
ZMat hnf_rows(ZMat rows);

int zrank(const ZMat& rows);

/// For a full-rank lattice in Z^n given by basis rows (r rows, r == n),
/// the index [Z^n : L] = |det|. Throws if not full rank square after HNF.
ZZ lattice_index_in_ambient(const ZMat& basis_rows);

/// Is v in the lattice spanned by the rows?
bool in_lattice(const ZMat& basis_rows, const ZVec& v);

struct LinearSolveResult {
  std::optional<ZVec> particular;  // one x with A x = b, if solvable over Z
  ZMat kernel;                     // basis of { x : A x = 0 }
};

/// Solve A x = b over the integers (A is m x n, b length m).
LinearSolveResult solve_integer(const ZMat& A, const ZVec& b);

/// Basis of the integer kernel of A.
ZMat integer_kernel(const ZMat& A);

struct ModSolveResult {
  std::optional<ZVec> particular;  // one x with A x == b (mod M)
  ZMat homogeneous;                // generators of solutions of A x == 0 (mod M)
};

/// Solve A x == b (mod M) via Smith normal form with transforms.
ModSolveResult solve_mod(const ZMat& A, const ZVec& b, const ZZ& M);

}  // namespace toricmcm
