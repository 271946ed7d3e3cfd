"""Exact scalar fields: arbitrary-precision rationals and GF(p).

Matrices over the rationals are numpy object arrays holding ``gmpy2.mpq``
values (``fractions.Fraction`` when gmpy2 is unavailable); matrices over
GF(p) with p < 2**31 are int64 arrays with entries in [0, p) routed
through the kernels in :mod:`hopfkit._kernels`.  Larger primes fall back
to object arrays of Python ints, still exact.

All arithmetic is exact; there is no tolerance anywhere in the package.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import FieldMismatchError, HopfkitError

try:
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _RAT


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 2**61 bound we allow."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the two scalar fields."""

    name: str
    characteristic: int

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name

    def require_same(self, other):
        if self != other:
            raise FieldMismatchError(f"mixed scalar fields: {self} vs {other}")

    # -- array constructors ------------------------------------------------

    def array(self, data):
        """Build a matrix/vector from nested ints, pairs or scalars."""
        a = np.asarray(data, dtype=object)
        out = np.empty(a.shape, dtype=self.dtype)
        flat_in = a.reshape(-1)
        flat_out = out.reshape(-1)
        for t in range(flat_in.size):
            flat_out[t] = self.scalar(flat_in[t])
        return out

    def zeros(self, shape):
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out[...] = self.zero
            return out
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out


class RationalField(Field):
    dtype = object
    name = "Q"
    characteristic = 0

    def __init__(self):
        self.zero = _RAT(0)
        self.one = _RAT(1)

    def scalar(self, x):
        if isinstance(x, (tuple, list)):
            num, den = x
            return _RAT(int(num), int(den))
        return _RAT(x)

    def from_pair(self, num, den):
        if den == 0:
            raise HopfkitError("zero denominator")
        return _RAT(int(num), int(den))

    def inv(self, x):
        return self.one / x

    def scalar_pair(self, x):
        q = _RAT(x)
        return int(q.numerator), int(q.denominator)

    def format_scalar(self, x):
        num, den = self.scalar_pair(x)
        return str(num) if den == 1 else f"{num}/{den}"

    def matmul(self, a, b):
        return np.dot(a, b)

    def kron(self, a, b):
        return np.kron(a, b)


class PrimeField(Field):
    characteristic: int

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise HopfkitError(f"{p} is not prime")
        if p >= (1 << 61):
            raise HopfkitError(f"prime {p} out of supported range (< 2**61)")
        self.p = p
        self.name = f"F{p}"
        self.characteristic = p
        self.small = p < _kernels.SMALL_PRIME_BOUND
        self.dtype = np.int64 if self.small else object
        self.zero = np.int64(0) if self.small else 0
        self.one = np.int64(1) if self.small else 1

    def scalar(self, x):
        if isinstance(x, (tuple, list)):
            num, den = x
            return self.from_pair(num, den)
        v = int(x) % self.p
        return np.int64(v) if self.small else v

    def from_pair(self, num, den):
        if den == 0:
            raise HopfkitError("zero denominator")
        d = int(den) % self.p
        if d == 0:
            raise HopfkitError(f"denominator {den} is zero in F{self.p}")
        v = (int(num) * pow(d, self.p - 2, self.p)) % self.p
        return np.int64(v) if self.small else v

    def inv(self, x):
        v = int(x) % self.p
        if v == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        r = pow(v, self.p - 2, self.p)
        return np.int64(r) if self.small else r

    def scalar_pair(self, x):
        return int(x) % self.p, 1

    def format_scalar(self, x):
        return str(int(x) % self.p)

    def matmul(self, a, b):
        if not self.small:
            return np.dot(a, b) % self.p
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.ndim == 2 and b.ndim == 2:
            return _kernels.matmul_mod(a, b, self.p)
        if a.ndim == 2 and b.ndim == 1:
            return _kernels.matmul_mod(a, b.reshape(-1, 1), self.p).reshape(-1)
        if a.ndim == 1 and b.ndim == 2:
            return _kernels.matmul_mod(a.reshape(1, -1), b, self.p).reshape(-1)
        return _kernels.matmul_mod(a.reshape(1, -1), b.reshape(-1, 1), self.p)[0, 0]

    def kron(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.small and a.ndim == 2 and b.ndim == 2:
            return _kernels.kron_mod(
                np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64), self.p
            )
        # kron never accumulates: entry products stay below p**2
        return np.kron(a, b) % self.p


QQ = RationalField()


def parse_field(tag: str) -> Field:
    """Parse a field tag: ``"Q"`` or ``"F<p>"`` with p prime."""
    tag = tag.strip()
    if tag == "Q":
        return QQ
    if tag.startswith("F") and tag[1:].isdigit():
        return PrimeField(int(tag[1:]))
    raise HopfkitError(f"unknown field tag {tag!r} (expected Q or F<p>)")
