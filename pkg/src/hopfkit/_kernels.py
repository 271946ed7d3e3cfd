"""Dense mod-p kernels: the hot loops of the prime-field lane.

Row reduction is the hot kernel: it is sequential with data-dependent
pivoting, which numpy cannot vectorize across columns, so ``rref_mod``
has a numba ``@njit`` version and a pure-numpy twin.  The numpy lane is
selected by setting ``HOPFKIT_NO_NUMBA=1`` in the environment (or
automatically when numba is unavailable).

Matrix products and Kronecker products stay on numpy in both lanes: the
direct int64 product is exact below the overflow bound and faster than
an njit loop there, and even the blocked variant for large primes beats
the naive loop (see ``benchmarks/bench_kernels.py``, which keeps the
njit product around as the measured-and-rejected alternative).

All kernels are exact for primes below 2**31; larger primes are handled
by the object-dtype lane in :mod:`hopfkit.fields` and never reach this
module.
"""

from __future__ import annotations

import os

import numpy as np

#: primes below this bound fit the int64 lane without overflow
SMALL_PRIME_BOUND = 1 << 31

_DISABLED = os.environ.get("HOPFKIT_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError("numba disabled by HOPFKIT_NO_NUMBA")
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# products: numpy in both lanes


def np_matmul_mod(a, b, p):
    """Exact (a @ b) % p on int64 arrays with entries in [0, p)."""
    n = a.shape[1]
    if n == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if n * (p - 1) * (p - 1) < (1 << 62):
        return (a @ b) % p
    # block the contraction so partial sums stay inside int64
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    step = max(1, (1 << 62) // ((p - 1) * (p - 1)))
    for k in range(0, n, step):
        out = (out + a[:, k : k + step] @ b[k : k + step, :]) % p
    return out


def np_kron_mod(a, b, p):
    # kron never accumulates: entry products stay below p**2
    return np.kron(a, b) % p


matmul_mod = np_matmul_mod
kron_mod = np_kron_mod


# ---------------------------------------------------------------------------
# row reduction: the flag-selected kernel pair


def np_rref_mod(a, p):
    """Reduced row echelon form mod p.

    Returns ``(r, pivots)`` where ``r`` is fully reduced (pivot entries 1,
    pivot columns otherwise 0) and ``pivots`` lists pivot column indices.
    Pivot choice is the first nonzero entry in column order, so the output
    is deterministic.
    """
    r = (np.asarray(a, dtype=np.int64) % p).copy()
    m, n = r.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        hits = np.nonzero(r[row:, col])[0]
        if hits.size == 0:
            continue
        piv = row + int(hits[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = (r[row] * pow(int(r[row, col]), p - 2, p)) % p
        factors = r[:, col].copy()
        factors[row] = 0
        r = (r - np.outer(factors, r[row])) % p
        pivots.append(col)
        row += 1
    return r, np.array(pivots, dtype=np.int64)


if HAS_NUMBA:

    @njit(cache=True)
    def _nb_powmod(x, e, p):
        acc = 1
        base = x % p
        while e > 0:
            if e & 1:
                acc = (acc * base) % p
            base = (base * base) % p
            e >>= 1
        return acc

    @njit(cache=True)
    def _nb_rref_mod(a, p):
        r = a % p
        m, n = r.shape
        pivots = np.empty(min(m, n), dtype=np.int64)
        row = 0
        for col in range(n):
            if row >= m:
                break
            piv = -1
            for i in range(row, m):
                if r[i, col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != row:
                for j in range(n):
                    tmp = r[row, j]
                    r[row, j] = r[piv, j]
                    r[piv, j] = tmp
            inv = _nb_powmod(r[row, col], p - 2, p)
            for j in range(n):
                r[row, j] = (r[row, j] * inv) % p
            for i in range(m):
                if i == row:
                    continue
                f = r[i, col]
                if f == 0:
                    continue
                for j in range(n):
                    r[i, j] = (r[i, j] - f * r[row, j]) % p
            pivots[row] = col
            row += 1
        return r, pivots[:row].copy()

    @njit(cache=True)
    def _nb_matmul_mod(a, b, p):
        """Reference loop kept for the benchmark: numpy wins in practice."""
        m, n = a.shape
        k = b.shape[1]
        out = np.zeros((m, k), dtype=np.int64)
        for i in range(m):
            for j in range(k):
                acc = 0
                for t in range(n):
                    acc = (acc + a[i, t] * b[t, j]) % p
                out[i, j] = acc
        return out

    def rref_mod(a, p):
        r, piv = _nb_rref_mod(np.ascontiguousarray(np.asarray(a, dtype=np.int64)), p)
        return r, piv

else:
    rref_mod = np_rref_mod
