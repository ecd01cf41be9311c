"""Shared test helpers: structure enumeration, oracles, random generators."""

import itertools

import numpy as np

from versal import SegreStructure

# Fixed eigenvalue pool, already in lexicographic (real, imag) order.
EIGENVALUE_POOL = (0.0 + 0.0j, 1.0 + 0.0j, 2.0 + 1.0j)


def partitions(n):
    """All descending integer partitions of ``n``."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail
    yield from rec(n, n)


def compositions(total, count):
    """Ordered tuples of ``count`` positive integers summing to ``total``."""
    if count == 1:
        yield (total,)
        return
    for head in range(1, total - count + 2):
        for tail in compositions(total - head, count - 1):
            yield (head,) + tail


def structures_of_size(total, pool=EIGENVALUE_POOL):
    """Every Segre structure of size ``total`` over prefixes of the pool."""
    for count in range(1, min(len(pool), total) + 1):
        for sizes in compositions(total, count):
            per_eig = [list(partitions(part)) for part in sizes]
            for combo in itertools.product(*per_eig):
                yield SegreStructure(list(zip(pool[:count], combo)))


def leverrier_charpoly(a):
    """Characteristic polynomial coefficients [c_0, ..., c_{n-1}], monic x^n.

    Independent trace-recursion oracle; no eigenvalue or elimination code.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = 1.0
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + coeffs[n - k + 1] * np.eye(n)
        coeffs[n - k] = -np.trace(a @ m) / k
    return coeffs[:n]


def eigen_match_distance(u, v):
    """Greedy pairing distance between two equal-size eigenvalue multisets."""
    u = list(u)
    v = list(v)
    assert len(u) == len(v)
    worst = 0.0
    for x in u:
        j = min(range(len(v)), key=lambda i: abs(v[i] - x))
        worst = max(worst, abs(v.pop(j) - x))
    return worst


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex(rng, n, n))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def conditioned_matrix(rng, n, cond):
    """Random matrix with singular values log-spaced over a ratio of ``cond``."""
    s = np.geomspace(1.0, cond, n) / np.sqrt(cond)
    return (random_unitary(rng, n) * s) @ random_unitary(rng, n)


def partition_multiset(structure):
    return tuple(sorted(structure.partitions()))


def structures_close(a, b, eig_tol=1e-6):
    """Same partitions in the same order, eigenvalues within ``eig_tol``."""
    if len(a.blocks) != len(b.blocks):
        return False
    return all(sa == sb and abs(ea - eb) <= eig_tol
               for (ea, sa), (eb, sb) in zip(a.blocks, b.blocks))
