"""The quotient B (/) B, the coinvariant subspace B (#) B, and the maps
i_B: b |-> class(b (x) 1) and p_B: sum x (x) y |-> x eps(y).

B (/) B is the quotient of B (x) B by the subspace spanned by all
(a (x) b) Delta(h) with h in the augmentation ideal; it carries the
coalgebra structure Delta(x/y) = (x1/y2) (x) (x2/y1).  B (#) B is the
kernel of gamma(x (x) y) = x1 (x) y1 (x) x2 y2 - x (x) y (x) 1 and is an
algebra under (u#v)(x#y) = ux # yv.  Every structural claim used later
is verified at construction time; failures raise ConstructionError
because a verified bialgebra cannot trigger them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bialgebra import Bialgebra, _mod, augmentation_ideal
from .convolution import antipode_shape_check, conv, conv_unit
from .errors import ConstructionError, InvariantViolation
from .linalg import (
    Subspace,
    image,
    is_zero_matrix,
    kernel,
    kron,
    matmul,
    rank,
    solve_matrix,
    subspace_from_rows,
)


def _nonzero_pairs(row_matrix):
    """Nonzero (i, j, value) triples of a d x d coefficient matrix."""
    idx = np.argwhere(row_matrix != 0)
    return [(int(i), int(j), row_matrix[i, j]) for i, j in idx]


@dataclass(eq=False)
class OslashSpace:
    source: Bialgebra
    dim: int                 # dimension of the quotient
    relations: Subspace      # (B (x) B) Delta(B+), the annihilated subspace
    proj: np.ndarray         # dim x d^2, the projection pi
    reps: np.ndarray         # d^2 x dim, standard-basis representatives
    comult: np.ndarray       # dim^2 x dim quotient comultiplication
    counit: np.ndarray       # 1 x dim
    i_matrix: np.ndarray     # dim x d
    ker_i: Subspace
    surjective: bool
    injective: bool

    def act(self, ab_vec, class_vec):
        """Left action of B (x) B on the quotient: (a(x)b).(x/y) = ax/by."""
        b = self.source
        rep = matmul(b.field, self.reps, class_vec)
        return matmul(b.field, self.proj, b.prod2(ab_vec, rep))


def _quotient_data(b: Bialgebra, relations: Subspace):
    """Projection and section for B (x) B modulo a relation subspace."""
    f = b.field
    d2 = b.dim * b.dim
    comp = relations.complement_indices()
    q = len(comp)
    proj = f.zeros((q, d2))
    for c in range(d2):
        e = f.zeros(d2)
        e[c] = f.one
        proj[:, c] = relations.reduce(e)[list(comp)]
    reps = f.zeros((d2, q))
    for t, c in enumerate(comp):
        reps[c, t] = f.one
    return proj, reps, comp


def oslash_relations(b: Bialgebra) -> Subspace:
    """The subspace (B (x) B) Delta(B+) of B (x) B."""
    f = b.field
    d = b.dim
    bplus = augmentation_ideal(b)
    gens = []
    for t in range(bplus.dim):
        dh = b.delta(bplus.basis[t])
        for s in range(d * d):
            u = f.zeros(d * d)
            u[s] = f.one
            gens.append(b.prod2(u, dh))
    return subspace_from_rows(f, d * d, gens)


def build_oslash(b: Bialgebra) -> OslashSpace:
    f = b.field
    d = b.dim
    relations = oslash_relations(b)
    proj, reps, comp = _quotient_data(b, relations)
    q = len(comp)

    # pi annihilates exactly the relation subspace
    if relations.dim + q != d * d:
        raise ConstructionError("projection rank does not complement the relations")
    for t in range(relations.dim):
        if not is_zero_matrix(matmul(f, proj, relations.basis[t])):
            raise ConstructionError("projection fails to annihilate a relation")

    # quotient comultiplication Delta(x/y) = (x1/y2) (x) (x2/y1), built on
    # all of B (x) B so well-definedness can be checked against relations
    full = f.zeros((q * q, d * d))
    for i in range(d):
        di = _nonzero_pairs(b.comult[i])
        for j in range(d):
            dj = _nonzero_pairs(b.comult[j])
            col = f.zeros(q * q)
            for a, bb, ci in di:
                for c, e, cj in dj:
                    coef = _mod(f, ci * cj)
                    col = _mod(
                        f,
                        col + coef * kron(f, proj[:, a * d + e], proj[:, bb * d + c]),
                    )
            full[:, i * d + j] = col
    for t in range(relations.dim):
        if not is_zero_matrix(matmul(f, full, relations.basis[t])):
            raise ConstructionError("quotient comultiplication is not well defined")
    comult_q = matmul(f, full, reps)

    counit2 = kron(f, b.counit_row, b.counit_row)
    for t in range(relations.dim):
        if matmul(f, counit2, relations.basis[t].reshape(-1, 1))[0, 0] != 0:
            raise ConstructionError("quotient counit is not well defined")
    counit_q = matmul(f, counit2, reps)

    # coalgebra axioms on the quotient
    eye_q = f.eye(q)
    coassoc = matmul(f, kron(f, comult_q, eye_q), comult_q) - matmul(
        f, kron(f, eye_q, comult_q), comult_q
    )
    lcounit = matmul(f, kron(f, counit_q, eye_q), comult_q) - eye_q
    rcounit = matmul(f, kron(f, eye_q, counit_q), comult_q) - eye_q
    for name, diff in (
        ("coassociativity", coassoc),
        ("left counit", lcounit),
        ("right counit", rcounit),
    ):
        if not is_zero_matrix(_mod(f, diff)):
            raise ConstructionError(f"quotient coalgebra fails {name}")

    # the left B (x) B action descends: relations absorb left multiplication
    for t in range(relations.dim):
        w = relations.basis[t]
        for s in range(d * d):
            u = f.zeros(d * d)
            u[s] = f.one
            if not is_zero_matrix(matmul(f, proj, b.prod2(u, w))):
                raise ConstructionError("left action does not descend to the quotient")

    emb1 = kron(f, f.eye(d), b.unit_col)  # b |-> b (x) 1
    i_matrix = matmul(f, proj, emb1)
    ker_i = kernel(f, i_matrix)
    r = rank(f, i_matrix)
    return OslashSpace(
        source=b,
        dim=q,
        relations=relations,
        proj=proj,
        reps=reps,
        comult=comult_q,
        counit=counit_q,
        i_matrix=i_matrix,
        ker_i=ker_i,
        surjective=(r == q),
        injective=(r == b.dim),
    )


@dataclass(eq=False)
class BoxslashSpace:
    source: Bialgebra
    dim: int               # dimension of ker(gamma)
    space: Subspace        # the coinvariant subspace of B (x) B
    include: np.ndarray    # d^2 x dim inclusion
    mult: np.ndarray       # dim x dim x dim structure constants
    unit_coords: np.ndarray
    p_matrix: np.ndarray   # d x dim
    im_p: Subspace
    injective: bool
    surjective: bool


def gamma_matrix(b: Bialgebra):
    """Matrix of gamma(x (x) y) = x1 (x) y1 (x) x2 y2 - x (x) y (x) 1."""
    f = b.field
    d = b.dim
    g = f.zeros((d ** 3, d * d))
    for i in range(d):
        di = _nonzero_pairs(b.comult[i])
        for j in range(d):
            dj = _nonzero_pairs(b.comult[j])
            col = f.zeros(d ** 3)
            for a, bb, ci in di:
                for c, e, cj in dj:
                    coef = _mod(f, ci * cj)
                    base = (a * d + c) * d
                    col[base : base + d] = _mod(
                        f, col[base : base + d] + coef * b.mult[bb, e]
                    )
            base = (i * d + j) * d
            col[base : base + d] = _mod(f, col[base : base + d] - b.unit)
            g[:, i * d + j] = col
    return g


def build_boxslash(b: Bialgebra) -> BoxslashSpace:
    f = b.field
    d = b.dim
    w = kernel(f, gamma_matrix(b))
    s = w.dim
    include = w.basis.T.copy()

    unit_coords = w.coordinates(kron(f, b.unit, b.unit))
    if unit_coords is None:
        raise ConstructionError("1 (x) 1 does not lie in the coinvariant subspace")

    mult = f.zeros((s, s, s))
    for s1 in range(s):
        for s2 in range(s):
            p = b.prod2op(w.basis[s1], w.basis[s2])
            coords = w.coordinates(p)
            if coords is None:
                raise ConstructionError(
                    f"product of coinvariants {s1},{s2} leaves the subspace"
                )
            mult[s1, s2] = coords

    # associativity and unitality of the induced algebra
    mult_mat = mult.reshape(s * s, s).T.copy()
    eye_s = f.eye(s)
    assoc = matmul(f, mult_mat, kron(f, mult_mat, eye_s)) - matmul(
        f, mult_mat, kron(f, eye_s, mult_mat)
    )
    if not is_zero_matrix(_mod(f, assoc)):
        raise ConstructionError("coinvariant algebra is not associative")
    ucol = unit_coords.reshape(s, 1)
    if not (
        is_zero_matrix(_mod(f, matmul(f, mult_mat, kron(f, ucol, eye_s)) - eye_s))
        and is_zero_matrix(_mod(f, matmul(f, mult_mat, kron(f, eye_s, ucol)) - eye_s))
    ):
        raise ConstructionError("coinvariant algebra is not unital")

    # every coinvariant multiplies to its counit multiple of 1
    counit2 = kron(f, b.counit_row, b.counit_row)
    mw = matmul(f, b.mult_mat, include)
    ew = matmul(f, counit2, include)
    expected = matmul(f, b.unit_col, ew)
    if not is_zero_matrix(_mod(f, mw - expected)):
        raise ConstructionError("a coinvariant violates x^i y_i = eps(x^i)eps(y_i) 1")

    p2 = kron(f, f.eye(d), b.counit_row)  # x (x) y |-> x eps(y)
    p_matrix = matmul(f, p2, include)
    im_p = image(f, p_matrix)
    r = rank(f, p_matrix)
    return BoxslashSpace(
        source=b,
        dim=s,
        space=w,
        include=include,
        mult=mult,
        unit_coords=unit_coords,
        p_matrix=p_matrix,
        im_p=im_p,
        injective=(r == s),
        surjective=(r == b.dim),
    )


# ---------------------------------------------------------------------------
# witnesses and diagnostics


def S_witness(b: Bialgebra, osl: OslashSpace | None = None):
    """An endomorphism with S(y) (x) 1 = 1 (x) y in the quotient.

    Built from the deterministic section of i_B; requires i_B surjective,
    which holds for every verified finite-dimensional bialgebra.
    """
    f = b.field
    osl = osl or build_oslash(b)
    if not osl.surjective:
        raise InvariantViolation("i_B not surjective on a finite-dimensional bialgebra")
    section = solve_matrix(f, osl.i_matrix, f.eye(osl.dim))
    emb2 = kron(f, b.unit_col, f.eye(b.dim))  # y |-> 1 (x) y
    one_oslash = matmul(f, osl.proj, emb2)
    s = matmul(f, section, one_oslash)
    if not is_zero_matrix(_mod(f, matmul(f, osl.i_matrix, s) - one_oslash)):
        raise ConstructionError("section witness fails i_B(S(y)) = class(1 (x) y)")
    return s


def T_witness(b: Bialgebra, box: BoxslashSpace | None = None):
    """An endomorphism with T(x^i) eps(y_i) = eps(x^i) y_i on coinvariants.

    Built from the deterministic retraction of p_B; requires p_B injective.
    """
    f = b.field
    box = box or build_boxslash(b)
    if not box.injective:
        raise InvariantViolation("p_B not injective on a finite-dimensional bialgebra")
    retraction_t = solve_matrix(f, box.p_matrix.T.copy(), f.eye(box.dim))
    retraction = retraction_t.T.copy()  # box.dim x d with retraction @ p = id
    pleft = kron(f, b.counit_row, f.eye(b.dim))  # x (x) y |-> eps(x) y
    t = matmul(f, pleft, matmul(f, box.include, retraction))
    lhs = matmul(f, t, box.p_matrix)
    rhs = matmul(f, pleft, box.include)
    if not is_zero_matrix(_mod(f, lhs - rhs)):
        raise ConstructionError("retraction witness fails T(x^i)eps(y_i) = eps(x^i)y_i")
    return t


def can_matrix(b: Bialgebra):
    """Matrix of can(x (x) y) = x y1 (x) y2."""
    f = b.field
    d = b.dim
    out = f.zeros((d * d, d * d))
    for j in range(d):
        dj = _nonzero_pairs(b.comult[j])
        for i in range(d):
            col = f.zeros(d * d)
            for a, bb, cj in dj:
                col = _mod(f, col + cj * kron(f, b.mult[i, a], _basis(f, d, bb)))
            out[:, i * d + j] = col
    return out


def can_prime_matrix(b: Bialgebra):
    """Matrix of can'(x (x) y) = x1 (x) x2 y."""
    f = b.field
    d = b.dim
    out = f.zeros((d * d, d * d))
    for i in range(d):
        di = _nonzero_pairs(b.comult[i])
        for j in range(d):
            col = f.zeros(d * d)
            for a, bb, ci in di:
                col = _mod(f, col + ci * kron(f, _basis(f, d, a), b.mult[bb, j]))
            out[:, i * d + j] = col
    return out


def _basis(f, d, k):
    v = f.zeros(d)
    v[k] = f.one
    return v


@dataclass
class FrobeniusReport:
    i_bijective: bool
    p_bijective: bool
    right_antipode: np.ndarray | None
    anti_algebra: bool | None
    anti_coalgebra: bool | None
    consistent: bool
    can_surjective: bool
    can_injective: bool
    can_prime_surjective: bool
    can_prime_injective: bool


def frobenius_report(
    b: Bialgebra,
    osl: OslashSpace | None = None,
    box: BoxslashSpace | None = None,
) -> FrobeniusReport:
    """Equivalence diagnostics: i_B bijective, p_B bijective, and the
    existence of an anti-bialgebra right antipode must agree.

    When i_B is bijective, S^r(y) = i_B^{-1}(class(1 (x) y)) is extracted
    and checked to be a right antipode and an anti-bialgebra map; those
    checks are theorem-backed, so a failure raises InvariantViolation.
    """
    f = b.field
    osl = osl or build_oslash(b)
    box = box or build_boxslash(b)
    i_bij = osl.surjective and osl.injective
    p_bij = box.injective and box.surjective
    sr = None
    anti_alg = anti_coalg = None
    if i_bij:
        emb2 = kron(f, b.unit_col, f.eye(b.dim))
        sr = solve_matrix(f, osl.i_matrix, matmul(f, osl.proj, emb2))
        if sr is None:
            raise InvariantViolation("bijective i_B with unsolvable inversion")
        if not is_zero_matrix(_mod(f, conv(b, f.eye(b.dim), sr) - conv_unit(b))):
            raise InvariantViolation("extracted S^r is not a right antipode")
        shape = antipode_shape_check(b, sr)
        anti_alg = shape["anti_algebra"]
        anti_coalg = shape["anti_coalgebra"]
        if not (anti_alg and anti_coalg):
            raise InvariantViolation("extracted S^r is not an anti-bialgebra map")
    has_good_antipode = sr is not None
    cm = can_matrix(b)
    cpm = can_prime_matrix(b)
    rc = rank(f, cm)
    rcp = rank(f, cpm)
    return FrobeniusReport(
        i_bijective=i_bij,
        p_bijective=p_bij,
        right_antipode=sr,
        anti_algebra=anti_alg,
        anti_coalgebra=anti_coalg,
        consistent=(i_bij == p_bij == has_good_antipode),
        can_surjective=(rc == b.dim * b.dim),
        can_injective=(rc == b.dim * b.dim),
        can_prime_surjective=(rcp == b.dim * b.dim),
        can_prime_injective=(rcp == b.dim * b.dim),
    )
