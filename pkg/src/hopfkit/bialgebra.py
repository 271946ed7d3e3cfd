"""Bialgebras given by structure constants, axiom checks, derived bialgebras.

A bialgebra of dimension d over an exact field stores

* ``mult[i, j, :]``   coordinates of e_i e_j,
* ``comult[k, i, j]`` coefficient of e_i (x) e_j in Delta(e_k),
* ``unit``            coordinates of 1,
* ``counit``          the covector (eps(e_0), ..., eps(e_{d-1})).

Derived matrices follow the column convention of :mod:`hopfkit.linalg`:
``mult_mat`` is d x d^2 (column i*d+j holds e_i e_j) and ``comult_mat``
is d^2 x d.  Every check in this module is an exact structure-constant
identity; a failed check always comes with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DimensionError,
    InvariantViolation,
    PreconditionError,
    VerificationError,
)
from .fields import Field, PrimeField
from .linalg import (
    Subspace,
    is_zero_matrix,
    kernel,
    kron,
    matmul,
    subspace_from_rows,
)


@dataclass(eq=False)
class Bialgebra:
    field: Field
    dim: int
    mult: np.ndarray
    comult: np.ndarray
    unit: np.ndarray
    counit: np.ndarray
    labels: tuple

    @cached_property
    def mult_mat(self):
        d = self.dim
        return self.mult.reshape(d * d, d).T.copy()

    @cached_property
    def comult_mat(self):
        d = self.dim
        return self.comult.reshape(d, d * d).T.copy()

    @cached_property
    def unit_col(self):
        return self.unit.reshape(self.dim, 1).copy()

    @cached_property
    def counit_row(self):
        return self.counit.reshape(1, self.dim).copy()

    @cached_property
    def conv_unit(self):
        """Matrix of u o eps, the unit of the convolution algebra."""
        return matmul(self.field, self.unit_col, self.counit_row)

    def basis_vector(self, k):
        v = self.field.zeros(self.dim)
        v[k] = self.field.one
        return v

    def prod(self, u, v):
        """Product of two coordinate vectors."""
        f = self.field
        modp = isinstance(f, PrimeField)
        out = f.zeros(self.dim)
        for i in np.nonzero(u != 0)[0]:
            for j in np.nonzero(v != 0)[0]:
                c = u[i] * v[j]
                if modp:
                    c = c % f.p
                out = out + c * self.mult[i, j]
                if modp:
                    out = out % f.p
        return out

    def prod2(self, u, v):
        """Componentwise product on B (x) B: (a(x)b)(c(x)e) = ac (x) be."""
        f = self.field
        modp = isinstance(f, PrimeField)
        d = self.dim
        out = f.zeros(d * d)
        for s in np.nonzero(u != 0)[0]:
            i, j = divmod(int(s), d)
            for t in np.nonzero(v != 0)[0]:
                k, l = divmod(int(t), d)
                c = u[s] * v[t]
                if modp:
                    c = c % f.p
                out = out + c * f.kron(self.mult[i, k], self.mult[j, l])
                if modp:
                    out = out % f.p
        return out

    def prod2op(self, u, v):
        """Product on B (x) B^op: (a(x)b)(c(x)e) = ac (x) eb."""
        f = self.field
        modp = isinstance(f, PrimeField)
        d = self.dim
        out = f.zeros(d * d)
        for s in np.nonzero(u != 0)[0]:
            i, j = divmod(int(s), d)
            for t in np.nonzero(v != 0)[0]:
                k, l = divmod(int(t), d)
                c = u[s] * v[t]
                if modp:
                    c = c % f.p
                out = out + c * f.kron(self.mult[i, k], self.mult[l, j])
                if modp:
                    out = out % f.p
        return out

    def delta(self, v):
        return matmul(self.field, self.comult_mat, v)

    def eps(self, v):
        return matmul(self.field, self.counit_row, v.reshape(-1, 1))[0, 0]

    def is_cocommutative(self) -> bool:
        return bool(np.all(self.comult == self.comult.transpose(0, 2, 1)))

    def is_commutative(self) -> bool:
        return bool(np.all(self.mult == self.mult.transpose(1, 0, 2)))


def make_bialgebra(field, mult, comult, unit, counit, labels=None) -> Bialgebra:
    """Coerce raw structure constants into an (unverified) Bialgebra."""
    mult = field.array(mult)
    comult = field.array(comult)
    unit = field.array(unit)
    counit = field.array(counit)
    d = unit.shape[0]
    if mult.shape != (d, d, d) or comult.shape != (d, d, d):
        raise DimensionError(
            f"structure tensors have shapes {mult.shape}, {comult.shape}; expected ({d},{d},{d})"
        )
    if counit.shape != (d,):
        raise DimensionError("counit length does not match dimension")
    if labels is None:
        labels = tuple(f"e{i}" for i in range(d))
    if len(labels) != d:
        raise DimensionError("label count does not match dimension")
    for a in (mult, comult, unit, counit):
        a.flags.writeable = False
    return Bialgebra(field, d, mult, comult, unit, counit, tuple(labels))


def trivial_bialgebra(field) -> Bialgebra:
    """The ground field as a one-dimensional bialgebra."""
    return make_bialgebra(field, [[[1]]], [[[1]]], [1], [1], labels=("1",))


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class AxiomCheck:
    name: str
    ok: bool
    witness: tuple | None  # (index tuple, residual vector)


@dataclass
class AxiomReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def first_failure(self):
        bad = self.failures()
        return bad[0] if bad else None


def _diff_witness(diff, d, legs):
    """First nonzero column of a difference matrix as (indices, residual)."""
    diff = np.asarray(diff)
    for col in range(diff.shape[1]):
        if not is_zero_matrix(diff[:, col]):
            idx = []
            c = col
            for _ in range(legs - 1):
                idx.append(c % d)
                c //= d
            idx.append(c)
            return tuple(reversed(idx)), diff[:, col].copy()
    return None


def verify_axioms(b: Bialgebra) -> AxiomReport:
    """Exhaustively check the five bialgebra axiom families."""
    f = b.field
    d = b.dim
    eye = f.eye(d)
    checks = []

    def record(name, diff, legs):
        w = _diff_witness(diff, d, legs)
        checks.append(AxiomCheck(name, w is None, w))

    m, cm = b.mult_mat, b.comult_mat
    assoc = matmul(f, m, kron(f, m, eye)) - matmul(f, m, kron(f, eye, m))
    record("associativity", _mod(f, assoc), 3)

    lu = matmul(f, m, kron(f, b.unit_col, eye)) - eye
    ru = matmul(f, m, kron(f, eye, b.unit_col)) - eye
    record("left_unit", _mod(f, lu), 1)
    record("right_unit", _mod(f, ru), 1)

    coassoc = matmul(f, kron(f, cm, eye), cm) - matmul(f, kron(f, eye, cm), cm)
    record("coassociativity", _mod(f, coassoc), 1)

    lc = matmul(f, kron(f, b.counit_row, eye), cm) - eye
    rc = matmul(f, kron(f, eye, b.counit_row), cm) - eye
    record("left_counit", _mod(f, lc), 1)
    record("right_counit", _mod(f, rc), 1)

    # Delta(pq) = Delta(p) Delta(q) in B (x) B, column by column
    compat = f.zeros((d * d, d * d))
    dm = matmul(f, cm, m)
    for p in range(d):
        for q in range(d):
            rhs = b.prod2(b.comult_mat[:, p], b.comult_mat[:, q])
            compat[:, p * d + q] = dm[:, p * d + q] - rhs
    record("comult_is_algebra_map", _mod(f, compat), 2)

    ceps = matmul(f, b.counit_row, m) - kron(f, b.counit_row, b.counit_row)
    record("counit_is_algebra_map", _mod(f, ceps), 2)

    d1 = matmul(f, cm, b.unit_col) - kron(f, b.unit_col, b.unit_col)
    record("comult_of_unit", _mod(f, d1), 1)
    e1 = matmul(f, b.counit_row, b.unit_col) - f.eye(1)
    record("counit_of_unit", _mod(f, e1), 1)

    return AxiomReport(checks)


def _mod(f, a):
    return a % f.p if isinstance(f, PrimeField) else a


def assert_valid(b: Bialgebra) -> Bialgebra:
    report = verify_axioms(b)
    if not report.ok:
        bad = report.first_failure()
        raise VerificationError(
            f"bialgebra axiom {bad.name!r} fails at index {bad.witness[0]}",
            witness=bad,
        )
    return b


# ---------------------------------------------------------------------------
# derived bialgebras


def op_bialgebra(b: Bialgebra) -> Bialgebra:
    """Opposite multiplication, same comultiplication."""
    return make_bialgebra(
        b.field, b.mult.transpose(1, 0, 2).copy(), b.comult.copy(), b.unit.copy(),
        b.counit.copy(), b.labels,
    )


def cop_bialgebra(b: Bialgebra) -> Bialgebra:
    """Same multiplication, swapped comultiplication legs."""
    return make_bialgebra(
        b.field, b.mult.copy(), b.comult.transpose(0, 2, 1).copy(), b.unit.copy(),
        b.counit.copy(), b.labels,
    )


def dual_bialgebra(b: Bialgebra) -> Bialgebra:
    """Dual in the dual basis: multiplication and comultiplication transpose."""
    return make_bialgebra(
        b.field,
        b.comult.transpose(1, 2, 0).copy(),
        b.mult.transpose(2, 0, 1).copy(),
        b.counit.copy(),
        b.unit.copy(),
        tuple(f"{l}'" for l in b.labels),
    )


def tensor_bialgebra(a: Bialgebra, b: Bialgebra) -> Bialgebra:
    """Componentwise structure on A (x) B with the middle-swap comultiplication."""
    a.field.require_same(b.field)
    f = a.field
    da, db = a.dim, b.dim
    D = da * db
    mt = f.zeros((D, D, D))
    ct = f.zeros((D, D, D))
    for i in range(da):
        for k in range(da):
            av = a.mult[i, k]
            for j in range(db):
                for l in range(db):
                    mt[i * db + j, k * db + l] = f.kron(av, b.mult[j, l])
    for k in range(da):
        dk = a.comult[k]
        for l in range(db):
            ct[k * db + l] = f.kron(dk, b.comult[l])
    labels = tuple(f"{la}*{lb}" for la in a.labels for lb in b.labels)
    return make_bialgebra(
        f, mt, ct, f.kron(a.unit, b.unit), f.kron(a.counit, b.counit), labels
    )


# ---------------------------------------------------------------------------
# ideals, coideals, quotients, substructures


def augmentation_ideal(b: Bialgebra) -> Subspace:
    """ker(counit); requires a nonzero counit."""
    if is_zero_matrix(b.counit):
        raise PreconditionError("zero counit: not a bialgebra")
    return kernel(b.field, b.counit_row)


def left_multiples(b: Bialgebra, v: Subspace):
    """Spanning vectors of B . V."""
    rows = []
    for t in range(v.dim):
        w = v.basis[t]
        for i in range(b.dim):
            rows.append(b.prod(b.basis_vector(i), w))
    return rows


def right_multiples(b: Bialgebra, v: Subspace):
    rows = []
    for t in range(v.dim):
        w = v.basis[t]
        for i in range(b.dim):
            rows.append(b.prod(w, b.basis_vector(i)))
    return rows


def ideal_closure(b: Bialgebra, v: Subspace, sidedness: str = "two_sided") -> Subspace:
    """Least ideal of the requested sidedness containing v."""
    if v.ambient != b.dim:
        raise DimensionError("subspace does not live inside the bialgebra")
    cur = v
    while True:
        rows = [cur.basis[t] for t in range(cur.dim)]
        if sidedness in ("left", "two_sided"):
            rows += left_multiples(b, cur)
        if sidedness in ("right", "two_sided"):
            rows += right_multiples(b, cur)
        nxt = subspace_from_rows(b.field, b.dim, rows)
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt


def is_ideal(b: Bialgebra, v: Subspace, sidedness: str = "two_sided") -> bool:
    return ideal_closure(b, v, sidedness) == v


def is_coideal(b: Bialgebra, v: Subspace) -> bool:
    """eps(V) = 0 and Delta(V) inside V (x) B + B (x) V."""
    if v.ambient != b.dim:
        raise DimensionError("subspace does not live inside the bialgebra")
    if v.dim == 0:
        return True
    f = b.field
    for t in range(v.dim):
        if b.eps(v.basis[t]) != 0:
            return False
    eye = f.eye(b.dim)
    mixed = subspace_from_rows(
        f,
        b.dim * b.dim,
        list(kron(f, v.basis, eye)) + list(kron(f, eye, v.basis)),
    )
    return all(mixed.contains(b.delta(v.basis[t])) for t in range(v.dim))


def _quotient_projection(b: Bialgebra, sub: Subspace):
    """Projection matrix onto complement coordinates and its section."""
    f = b.field
    comp = sub.complement_indices()
    q = len(comp)
    proj = f.zeros((q, b.dim))
    for k in range(b.dim):
        red = sub.reduce(b.basis_vector(k))
        proj[:, k] = red[list(comp)]
    reps = f.zeros((b.dim, q))
    for t, c in enumerate(comp):
        reps[c, t] = f.one
    return proj, reps, comp


@dataclass
class BialgebraMorphism:
    source: Bialgebra
    target: Bialgebra
    matrix: np.ndarray
    algebra_map: bool
    coalgebra_map: bool

    @property
    def is_bialgebra_map(self) -> bool:
        return self.algebra_map and self.coalgebra_map


def morphism_check(f_mat, a: Bialgebra, b: Bialgebra) -> BialgebraMorphism:
    """Exact commuting-square checks for a candidate morphism a -> b."""
    a.field.require_same(b.field)
    fld = a.field
    f_mat = np.asarray(f_mat)
    if f_mat.shape != (b.dim, a.dim):
        raise DimensionError(f"morphism matrix {f_mat.shape}, expected {(b.dim, a.dim)}")
    ff = kron(fld, f_mat, f_mat)
    alg = is_zero_matrix(
        _mod(fld, matmul(fld, f_mat, a.mult_mat) - matmul(fld, b.mult_mat, ff))
    ) and is_zero_matrix(_mod(fld, matmul(fld, f_mat, a.unit_col) - b.unit_col))
    coalg = is_zero_matrix(
        _mod(fld, matmul(fld, b.comult_mat, f_mat) - matmul(fld, ff, a.comult_mat))
    ) and is_zero_matrix(_mod(fld, matmul(fld, b.counit_row, f_mat) - a.counit_row))
    return BialgebraMorphism(a, b, f_mat, alg, coalg)


def quotient_by_biideal(b: Bialgebra, ideal: Subspace):
    """Quotient bialgebra and its verified projection.

    The subspace must be a two-sided ideal and a coideal; both properties
    are verified here rather than trusted.
    """
    if not is_ideal(b, ideal, "two_sided"):
        raise PreconditionError("quotient_by_biideal: subspace is not a two-sided ideal")
    if not is_coideal(b, ideal):
        raise PreconditionError("quotient_by_biideal: subspace is not a coideal")
    f = b.field
    proj, reps, comp = _quotient_projection(b, ideal)
    q = len(comp)
    mult = f.zeros((q, q, q))
    for s in range(q):
        for t in range(q):
            mult[s, t] = matmul(f, proj, b.mult[comp[s], comp[t]])
    comult = f.zeros((q, q, q))
    modp = isinstance(f, PrimeField)
    for t in range(q):
        dk = b.comult[comp[t]]
        acc = f.zeros((q, q))
        for i in np.nonzero(np.any(dk != 0, axis=1))[0]:
            for j in np.nonzero(dk[i] != 0)[0]:
                term = np.outer(proj[:, i], proj[:, j])
                if modp:
                    term = term % f.p
                acc = acc + dk[i, j] * term
                if modp:
                    acc = acc % f.p
        comult[t] = acc
    unit = matmul(f, proj, b.unit)
    counit = b.counit[list(comp)].copy()
    labels = tuple(b.labels[c] for c in comp)
    quo = make_bialgebra(f, mult, comult, unit, counit, labels)
    report = verify_axioms(quo)
    if not report.ok:
        raise InvariantViolation(
            f"quotient by a verified bi-ideal failed axiom {report.first_failure().name}"
        )
    mor = morphism_check(proj, b, quo)
    if not mor.is_bialgebra_map:
        raise InvariantViolation("quotient projection is not a bialgebra map")
    return quo, mor


def sub_bialgebra(b: Bialgebra, w: Subspace):
    """Sub-bialgebra on a subspace, with its verified inclusion.

    Requires: unit inside w, w closed under multiplication, and
    Delta(w) inside w (x) w.  Each failure names a witness.
    """
    if w.ambient != b.dim:
        raise DimensionError("subspace does not live inside the bialgebra")
    f = b.field
    if not w.contains(b.unit):
        raise PreconditionError("sub_bialgebra: unit not contained in subspace")
    k = w.dim
    pivots = list(w.pivots)
    products = {}
    for s in range(k):
        for t in range(k):
            p = b.prod(w.basis[s], w.basis[t])
            if not w.contains(p):
                raise PreconditionError(
                    f"sub_bialgebra: product of basis vectors {s},{t} leaves the subspace"
                )
            products[s, t] = p
    ww = subspace_from_rows(
        f, b.dim * b.dim,
        [kron(f, w.basis[s], w.basis[t]) for s in range(k) for t in range(k)],
    )
    for t in range(k):
        if not ww.contains(b.delta(w.basis[t])):
            raise PreconditionError(
                f"sub_bialgebra: comultiplication of basis vector {t} leaves w (x) w"
            )
    mult = f.zeros((k, k, k))
    for (s, t), p in products.items():
        mult[s, t] = p[pivots]
    comult = f.zeros((k, k, k))
    for t in range(k):
        dv = b.delta(w.basis[t]).reshape(b.dim, b.dim)
        comult[t] = dv[np.ix_(pivots, pivots)]
    unit = b.unit[pivots].copy()
    counit = f.zeros(k)
    for t in range(k):
        counit[t] = b.eps(w.basis[t])
    labels = []
    for t in range(k):
        row = w.basis[t]
        nz = np.nonzero(row != 0)[0]
        if len(nz) == 1 and row[nz[0]] == f.one:
            labels.append(b.labels[nz[0]])
        else:
            labels.append(f"v{t}")
    sub = make_bialgebra(f, mult, comult, unit, counit, tuple(labels))
    report = verify_axioms(sub)
    if not report.ok:
        raise InvariantViolation(
            f"sub-bialgebra on a closed subspace failed axiom {report.first_failure().name}"
        )
    mor = morphism_check(w.basis.T.copy(), sub, b)
    if not mor.is_bialgebra_map:
        raise InvariantViolation("sub-bialgebra inclusion is not a bialgebra map")
    return sub, mor


# ---------------------------------------------------------------------------
# distinguished elements


def primitives(b: Bialgebra) -> Subspace:
    """Solution space of Delta(z) = z (x) 1 + 1 (x) z."""
    f = b.field
    eye = f.eye(b.dim)
    op = b.comult_mat - kron(f, eye, b.unit_col) - kron(f, b.unit_col, eye)
    return kernel(f, _mod(f, op))


def is_grouplike(b: Bialgebra, v) -> bool:
    """Delta(v) = v (x) v and eps(v) = 1, exactly."""
    v = np.asarray(v)
    if not is_zero_matrix(_mod(b.field, b.delta(v) - kron(b.field, v, v))):
        return False
    return b.eps(v) == b.field.one


def grouplike_scan(b: Bialgebra, candidates):
    """Filter a candidate list through is_grouplike (no enumeration)."""
    return [v for v in candidates if is_grouplike(b, v)]
