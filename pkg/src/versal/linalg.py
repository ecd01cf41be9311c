"""Dense complex linear-algebra kernels shared by every other module.

Matrices are plain 2-D ``numpy`` arrays of ``complex128``.  :func:`as_matrix`
is the single validation gate (shape and finiteness), so downstream code can
assume clean inputs.  Everything here is a pure function of its arguments and
safe to share across threads.
"""

from __future__ import annotations

import warnings

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .errors import NoConvergence, SingularMatrix

# Relative pivot threshold below which a dense solve is declared singular.
SINGULAR_TOL = 1e-14

# Default relative cutoff for numerical-rank decisions.
RANK_TOL = 1e-10

# Hard cap on the dense eigensolver; everything in this package is desk scale.
MAX_EIGEN_ORDER = 32


def as_matrix(values):
    """Coerce ``values`` to a 2-D ``complex128`` matrix.

    Accepts anything ``numpy.asarray`` does; 1-D input becomes a row vector.
    Rejects empty shapes and non-finite entries.
    """
    m = np.atleast_2d(np.asarray(values, dtype=complex))
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got an array of ndim={m.ndim}")
    if m.size == 0:
        raise ValueError("matrix must have at least one row and one column")
    if not np.all(np.isfinite(m.real) & np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


def frobenius_norm(m):
    """Square root of the sum of squared entry moduli."""
    return float(np.linalg.norm(as_matrix(m)))


def solve_linear(a, b):
    """Solve ``a @ x = b`` by row-pivoted LU elimination.

    Parameters
    ----------
    a : array_like, square
    b : array_like with ``b.shape[0] == a.shape[0]`` (multiple right-hand
        sides are solved column-wise)

    Raises
    ------
    SingularMatrix
        If any pivot modulus falls below ``SINGULAR_TOL * ||a||_F``.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"coefficient matrix must be square, got {a.shape}")
    if b.shape[0] != a.shape[0]:
        raise ValueError(f"right-hand side has {b.shape[0]} rows, expected {a.shape[0]}")
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        raise SingularMatrix("coefficient matrix is zero")
    with warnings.catch_warnings():
        # the explicit pivot check below supersedes scipy's singularity warning
        warnings.simplefilter("ignore")
        lu, piv = lu_factor(a, check_finite=False)
    smallest = float(np.abs(np.diagonal(lu)).min())
    if smallest < SINGULAR_TOL * scale:
        raise SingularMatrix(
            f"pivot modulus {smallest:.3e} below {SINGULAR_TOL:g}*||a||_F = "
            f"{SINGULAR_TOL * scale:.3e}")
    return lu_solve((lu, piv), b, check_finite=False)


def min_norm_least_squares(a, b, rcond=RANK_TOL):
    """Minimum-norm least-squares solution of ``a @ x = b``.

    Among all ``x`` minimizing ``||a @ x - b||_F`` returns the one of minimal
    Frobenius norm (the pseudoinverse solution).  Rank decisions use the
    relative cutoff ``rcond``; rank-deficient and underdetermined systems are
    the expected case and never raise.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if b.shape[0] != a.shape[0]:
        raise ValueError(f"right-hand side has {b.shape[0]} rows, expected {a.shape[0]}")
    x, *_ = np.linalg.lstsq(a, b, rcond=rcond)
    return x


def numerical_rank(m, tol=RANK_TOL):
    """Number of singular values exceeding ``tol`` times the largest one."""
    m = as_matrix(m)
    if tol < 0:
        raise ValueError("rank tolerance must be nonnegative")
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def eigenvalues(m):
    """All eigenvalues of a square matrix, with multiplicity.

    Backed by a dense QR iteration; accepts orders up to
    ``MAX_EIGEN_ORDER``.  Order of the returned values is not specified.

    Raises
    ------
    NoConvergence
        If the underlying iteration fails to converge.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"eigenvalues need a square matrix, got {m.shape}")
    if m.shape[0] > MAX_EIGEN_ORDER:
        raise ValueError(f"matrix order {m.shape[0]} exceeds cap {MAX_EIGEN_ORDER}")
    try:
        return np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
