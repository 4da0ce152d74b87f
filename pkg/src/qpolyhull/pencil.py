"""The two-parameter family lam*X + mu*L and its quadratic Gram pencil.

With structure matrices G0 (trace Gram of the basis), G1 (mixed terms) and
G2 (Gram of L), the Gram matrix of lam*X + mu*L for base-field parameters is
lam^2 G0 + lam*mu G1 + mu^2 G2.  Its determinant along the monic section
(rho, 1) is a polynomial Delta(rho) of degree at most 2m whose zero set cuts
out the non-LCD locus inside the bijective part of the projective line.

Delta is recovered exactly by evaluating the determinant at 2m+1 distinct
nodes and interpolating.  Nodes come from GF(q) when q is big enough, from
GF(q^m) otherwise (the coefficients are still base-field and are verified to
be), and for the two tiny prime-field corners (q^m < 2m+1 forces r = 1) from
an auxiliary prime tower GF(p^e) in which GF(p)-constants embed as-is.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DegenerateInput, NotApplicable, TowerMismatch
from .field import Basis, FieldTower, build_tower
from .gram import gram_of_operator
from .linops import QPoly
from .matrix import FqMatrix


# -- small dense polynomial helpers over a field-ops provider ----------------


def poly_eval(ops, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = ops.add(ops.mul(acc, x), c)
    return acc


def poly_trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


def _mul_linear(ops, poly, c):
    """poly * (X + c)."""
    out = [0] * (len(poly) + 1)
    for k, a in enumerate(poly):
        out[k + 1] = ops.add(out[k + 1], a)
        out[k] = ops.add(out[k], ops.mul(c, a))
    return out


def lagrange_interpolate(ops, xs, ys):
    """Dense coefficients (ascending) of the unique poly of degree < len(xs)."""
    n = len(xs)
    coeffs = [0] * n
    for i in range(n):
        if ys[i] == 0:
            continue
        num = [1]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            num = _mul_linear(ops, num, ops.neg(xs[j]))
            denom = ops.mul(denom, ops.sub(xs[i], xs[j]))
        scale = ops.mul(ys[i], ops.inv(denom))
        for k, c in enumerate(num):
            coeffs[k] = ops.add(coeffs[k], ops.mul(scale, c))
    return coeffs


@dataclass(frozen=True)
class PencilData:
    tower: FieldTower
    basis: Basis
    L: QPoly
    g0: FqMatrix
    g1: FqMatrix
    g2: FqMatrix
    delta_coeffs: tuple[int, ...]   # ascending, GF(q) encodings, trimmed
    delta_roots: tuple[int, ...]    # roots inside GF(q), ascending
    det_g0: int

    @property
    def delta_degree(self) -> int:
        return len(self.delta_coeffs) - 1


def is_self_adjoint(L: QPoly) -> bool:
    return L.adjoint() == L


def build_pencil(L: QPoly, basis: Basis) -> PencilData:
    """Structure matrices of the family lam*X + mu*L plus its discriminant."""
    if not L.tower.same_as(basis.tower):
        raise TowerMismatch("operator and basis from different towers")
    t = L.tower
    fq = t.subfield(1)
    m = t.m
    e = basis.elements
    images = [L(x) for x in e]
    g0_rows = [[t.trace_rel(t.mul(e[i], e[j]), 1) for j in range(m)]
               for i in range(m)]
    g1_rows = [[t.add(t.trace_rel(t.mul(e[i], images[j]), 1),
                      t.trace_rel(t.mul(images[i], e[j]), 1))
                for j in range(m)] for i in range(m)]
    g2_rows = [[t.trace_rel(t.mul(images[i], images[j]), 1) for j in range(m)]
               for i in range(m)]
    g0 = FqMatrix(fq, g0_rows)
    g1 = FqMatrix(fq, g1_rows)
    g2 = FqMatrix(fq, g2_rows)
    coeffs = _interpolated_discriminant(t, g0, g1, g2)
    roots = tuple(rho for rho in fq.elements
                  if poly_eval(t, coeffs, rho) == 0)
    det_g0 = g0.det()
    if det_g0 != 0:
        if len(coeffs) - 1 != 2 * m or coeffs[-1] != det_g0:
            raise ConsistencyError("invertible G0 must give deg Delta = 2m "
                                   "with leading coefficient det G0")
    return PencilData(tower=t, basis=basis, L=L, g0=g0, g1=g1, g2=g2,
                      delta_coeffs=coeffs, delta_roots=roots, det_g0=det_g0)


def _interpolated_discriminant(t: FieldTower, g0, g1, g2) -> tuple[int, ...]:
    m = t.m
    npts = 2 * m + 1

    def det_at(ops, rho, lift):
        rows = []
        rho2 = ops.mul(rho, rho)
        for r0, r1, r2 in zip(g0.rows, g1.rows, g2.rows):
            rows.append([ops.add(ops.add(ops.mul(rho2, lift(a)),
                                         ops.mul(rho, lift(b))), lift(c))
                         for a, b, c in zip(r0, r1, r2)])
        return FqMatrix(ops, rows, validate=False).det()

    if t.q >= npts:
        ops = t
        nodes = list(t.subfield(1).elements[:npts])
        lift = unlift = lambda x: x
    elif t.order >= npts:
        ops = t
        nodes = list(range(npts))
        lift = unlift = lambda x: x
    else:
        # q^m < 2m+1 only happens for tiny prime-field towers (r = 1), where
        # Gram entries are GF(p)-constants and embed into GF(p^e) unchanged.
        if t.r != 1:
            raise ConsistencyError("tiny-field fallback reached with r > 1")
        aux_deg = 1
        while t.p ** aux_deg < npts:
            aux_deg += 1
        ops = build_tower(t.p, 1, aux_deg)
        nodes = list(range(npts))
        lift = unlift = lambda x: x

    ys = [det_at(ops, x, lift) for x in nodes]
    raw = lagrange_interpolate(ops, nodes, ys)
    coeffs = poly_trim([unlift(c) for c in raw])
    fq = t.subfield(1)
    for c in coeffs:
        if not fq.contains(c):
            raise ConsistencyError(
                "interpolated discriminant has a coefficient outside GF(q)")
    if len(coeffs) - 1 > 2 * m:
        raise ConsistencyError("discriminant degree exceeds 2m")
    return coeffs if coeffs else (0,)


def gram_at(pencil: PencilData, lam: int, mu: int) -> FqMatrix:
    """lam^2 G0 + lam*mu G1 + mu^2 G2 for base-field (lam, mu) != (0, 0)."""
    t = pencil.tower
    fq = t.subfield(1)
    if lam == 0 and mu == 0:
        raise DegenerateInput("(0, 0) is outside the parameter space")
    for v in (lam, mu):
        if not fq.contains(v):
            raise DegenerateInput(
                "quadratic pencil form requires base-field parameters; use "
                "gram_of_operator for top-field coefficients")
    acc = pencil.g0.scale(t.mul(lam, lam))
    if mu != 0:
        acc = acc + pencil.g1.scale(t.mul(lam, mu))
        acc = acc + pencil.g2.scale(t.mul(mu, mu))
    return acc


def gram_tilde(pencil: PencilData, rho: int) -> FqMatrix:
    """The monic-section value rho^2 G0 + rho G1 + G2."""
    return gram_at(pencil, rho, 1)


def discriminant_poly(pencil: PencilData) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(coefficients ascending, roots in GF(q)) of det(rho^2 G0 + rho G1 + G2)."""
    return pencil.delta_coeffs, pencil.delta_roots


@dataclass(frozen=True)
class Char2Reduction:
    g0: FqMatrix
    g2: FqMatrix
    delta_coeffs: tuple[int, ...]   # ascending; odd-degree slots are zero


def char2_reduction(pencil: PencilData) -> Char2Reduction:
    """In characteristic 2 with self-adjoint L the mixed block vanishes, the
    pencil collapses to lam^2 G0 + mu^2 G2 and Delta is even in rho."""
    t = pencil.tower
    if t.p != 2:
        raise NotApplicable("requires characteristic 2")
    if not is_self_adjoint(pencil.L):
        raise NotApplicable("requires a self-adjoint twisting operator")
    if not pencil.g1.is_zero():
        raise ConsistencyError("G1 must vanish for a self-adjoint L in char 2")
    for i in range(1, len(pencil.delta_coeffs), 2):
        if pencil.delta_coeffs[i] != 0:
            raise ConsistencyError("Delta must be a polynomial in rho^2")
    return Char2Reduction(g0=pencil.g0, g2=pencil.g2,
                          delta_coeffs=pencil.delta_coeffs)


def family_operator(pencil: PencilData, lam: int, mu: int) -> QPoly:
    """The operator lam*X + mu*L as a q-polynomial."""
    return QPoly.x(pencil.tower).scale(lam) + pencil.L.scale(mu)


def pencil_consistency_check(pencil: PencilData, lam: int, mu: int) -> bool:
    """gram_at must match the direct Gram of lam*X + mu*L (trust but verify)."""
    direct = gram_of_operator(family_operator(pencil, lam, mu), pencil.basis)
    return gram_at(pencil, lam, mu) == direct
