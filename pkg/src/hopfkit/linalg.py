"""Dense exact linear algebra over a :class:`hopfkit.fields.Field`.

Conventions, fixed once and used everywhere:

* matrices act on coordinate columns; the matrix of a linear map has one
  column per source basis vector;
* ``rref`` picks the first nonzero entry in column order as pivot, so
  every canonical form is reproducible bit for bit;
* :class:`Subspace` stores its basis as the reduced row echelon form of
  any spanning set, hence two subspaces are equal as sets iff their
  stored bases are identical entrywise;
* ``solve`` returns the representative with all free variables set to 0,
  and ``None`` when the system is inconsistent;
* the basis of a tensor product V (x) W is ordered (i, j) -> i*dim(W)+j,
  matching ``numpy.kron``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _kernels
from .errors import DimensionError
from .fields import Field, PrimeField


def matmul(f: Field, a, b):
    return f.matmul(a, b)


def kron(f: Field, a, b):
    return f.kron(a, b)


def rref(f: Field, a):
    """Reduced row echelon form. Returns ``(r, pivots)`` with sorted pivots."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise DimensionError(f"rref expects a matrix, got shape {a.shape}")
    if isinstance(f, PrimeField) and f.small:
        r, piv = _kernels.rref_mod(a, f.p)
        return r, tuple(int(c) for c in piv)
    return _rref_object(f, a)


def _rref_object(f: Field, a):
    r = f.zeros(a.shape)
    r[...] = a
    if isinstance(f, PrimeField):
        r = r % f.p
    m, n = r.shape
    pivots = []
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
            r[[row, piv]] = r[[piv, row]]
        r[row] = r[row] * f.inv(r[row, col])
        if isinstance(f, PrimeField):
            r[row] = r[row] % f.p
        for i in range(m):
            if i != row and r[i, col] != 0:
                r[i] = r[i] - r[i, col] * r[row]
                if isinstance(f, PrimeField):
                    r[i] = r[i] % f.p
        pivots.append(col)
        row += 1
    return r, tuple(pivots)


def rank(f: Field, a) -> int:
    return len(rref(f, a)[1])


def is_zero_matrix(a) -> bool:
    a = np.asarray(a)
    if a.size == 0:
        return True
    return bool(np.all(a == 0))


def first_nonzero_column(a):
    """Index of the first column holding a nonzero entry, or None."""
    a = np.asarray(a)
    for j in range(a.shape[1]):
        if not is_zero_matrix(a[:, j]):
            return j
    return None


@dataclass(eq=False)
class Subspace:
    """A subspace of F^ambient in canonical (rref-basis) form."""

    field: Field
    ambient: int
    basis: np.ndarray  # dim x ambient, reduced row echelon form
    pivots: tuple = dc_field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def reduce(self, v):
        """Residual of v after eliminating the pivot coordinates; 0 iff v is a member."""
        v = np.asarray(v)
        modp = isinstance(self.field, PrimeField)
        out = self.field.zeros(self.ambient)
        out[...] = v
        if modp:
            out = out % self.field.p
        for t, c in enumerate(self.pivots):
            if out[c] != 0:
                out = out - out[c] * self.basis[t]
                if modp:
                    out = out % self.field.p
        return out

    def contains(self, v) -> bool:
        return is_zero_matrix(self.reduce(v))

    def contains_subspace(self, other) -> bool:
        return all(self.contains(other.basis[t]) for t in range(other.dim))

    def coordinates(self, v):
        """Coordinates in the canonical basis; None if v is not a member."""
        if not self.contains(v):
            return None
        return np.asarray(v)[list(self.pivots)].copy()

    def complement_indices(self) -> tuple:
        """Non-pivot coordinates: representatives of the quotient basis."""
        pivset = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in pivset)


def subspace_from_rows(f: Field, ambient: int, rows) -> Subspace:
    """Canonicalize a spanning set given as rows (any iterable of vectors)."""
    rows = [np.asarray(r) for r in rows]
    if not rows:
        return Subspace(f, ambient, f.zeros((0, ambient)), ())
    m = f.zeros((len(rows), ambient))
    for t, r in enumerate(rows):
        if r.shape != (ambient,):
            raise DimensionError(f"row of shape {r.shape} in ambient {ambient}")
        m[t] = r
    r, piv = rref(f, m)
    basis = r[: len(piv)].copy()
    basis.flags.writeable = False
    return Subspace(f, ambient, basis, piv)


def zero_subspace(f: Field, ambient: int) -> Subspace:
    return Subspace(f, ambient, f.zeros((0, ambient)), ())


def full_subspace(f: Field, ambient: int) -> Subspace:
    return Subspace(f, ambient, f.eye(ambient), tuple(range(ambient)))


def kernel(f: Field, a) -> Subspace:
    """Right null space {v | a v = 0} in canonical form."""
    a = np.asarray(a)
    m, n = a.shape
    r, piv = rref(f, a)
    free = [c for c in range(n) if c not in set(piv)]
    rows = []
    for c in free:
        v = f.zeros(n)
        v[c] = f.one
        for t, pc in enumerate(piv):
            v[pc] = -r[t, c]
        if isinstance(f, PrimeField):
            v = v % f.p
        rows.append(v)
    return subspace_from_rows(f, n, rows)


def image(f: Field, a) -> Subspace:
    """Column span in canonical form."""
    a = np.asarray(a)
    return subspace_from_rows(f, a.shape[0], [a[:, j] for j in range(a.shape[1])])


def row_space(f: Field, a) -> Subspace:
    a = np.asarray(a)
    return subspace_from_rows(f, a.shape[1], [a[i] for i in range(a.shape[0])])


def solve(f: Field, a, b):
    """One solution of a x = b with free variables 0, or None."""
    x = solve_matrix(f, a, np.asarray(b).reshape(-1, 1))
    return None if x is None else x[:, 0]


def solve_matrix(f: Field, a, b):
    """Solve a X = b columnwise; None if any column is inconsistent."""
    a = np.asarray(a)
    b = np.asarray(b)
    m, n = a.shape
    if b.shape[0] != m:
        raise DimensionError(f"solve: {a.shape} vs {b.shape}")
    aug = f.zeros((m, n + b.shape[1]))
    aug[:, :n] = a
    aug[:, n:] = b
    r, piv = rref(f, aug)
    if any(c >= n for c in piv):
        return None
    x = f.zeros((n, b.shape[1]))
    for t, c in enumerate(piv):
        x[c] = r[t, n:]
    return x


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_pair(u, v)
    rows = [u.basis[t] for t in range(u.dim)] + [v.basis[t] for t in range(v.dim)]
    return subspace_from_rows(u.field, u.ambient, rows)


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    """U cap V via the kernel of the stacked system [U^T | -V^T]."""
    _check_pair(u, v)
    f = u.field
    if u.dim == 0 or v.dim == 0:
        return zero_subspace(f, u.ambient)
    stacked = f.zeros((u.ambient, u.dim + v.dim))
    stacked[:, : u.dim] = u.basis.T
    stacked[:, u.dim :] = -v.basis.T if not isinstance(f, PrimeField) else (-v.basis.T) % f.p
    ker = kernel(f, stacked)
    rows = [matmul(f, u.basis.T, ker.basis[t, : u.dim]) for t in range(ker.dim)]
    return subspace_from_rows(f, u.ambient, rows)


def _check_pair(u: Subspace, v: Subspace):
    u.field.require_same(v.field)
    if u.ambient != v.ambient:
        raise DimensionError(f"ambient mismatch: {u.ambient} vs {v.ambient}")


# ---------------------------------------------------------------------------
# permutation helpers for tensor legs
#
# A permutation matrix P with P e_src = e_{dst[src]} composes by indexing:
# columns of M o P are M[:, dst];  rows of P o M are M at inverse positions.


def swap_permutation(d: int, e: int) -> np.ndarray:
    """dst indices of the flip V (x) W -> W (x) V, (i,j) |-> (j,i)."""
    dst = np.empty(d * e, dtype=np.int64)
    for i in range(d):
        for j in range(e):
            dst[i * e + j] = j * d + i
    return dst


def middle_swap_permutation(d: int) -> np.ndarray:
    """dst indices of id (x) flip (x) id on B4: (i,j,k,l) |-> (i,k,j,l)."""
    dst = np.empty(d ** 4, dtype=np.int64)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    src = ((i * d + j) * d + k) * d + l
                    dst[src] = ((i * d + k) * d + j) * d + l
    return dst


def permute_vector(v, dst):
    """Apply the permutation: out[dst[s]] = v[s]."""
    out = np.empty_like(v)
    out[dst] = v
    return out
