"""Rank-distance codes <X, F_1, ..., F_k> over GF(q^m) under the Delsarte
coefficient pairing.

The code is a top-field span, so duality reduces to the GF(q^m)-bilinear
pairing sum(f_l g_l) on coefficient vectors.  Because X contributes the
block <X, X> = 1 and every other generator has zero constant term, the hull
is governed entirely by the k x k Gram matrix M of the nontrivial
generators: dim Hull = k - rank(M), with all linear algebra over GF(q^m).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DependentGenerators, TowerMismatch
from .field import FieldTower
from .linops import QPoly
from .matrix import FqMatrix, kernel_basis, row_space_basis


def delsarte_pair(f: QPoly, g: QPoly) -> int:
    """Coefficientwise inner product sum(f_l * g_l) in GF(q^m)."""
    if not f.tower.same_as(g.tower):
        raise TowerMismatch("q-polynomials from different towers")
    t = f.tower
    acc = 0
    for a, b in zip(f.coeffs, g.coeffs):
        acc = t.add(acc, t.mul(a, b))
    return acc


@dataclass(frozen=True)
class RdCode:
    """<X, F_1, ..., F_k> with every F_j constant-term free.

    `independent` records whether {X, F_1, ..., F_k} is linearly independent
    over GF(q^m); hull computations refuse dependent generator sets.
    """

    tower: FieldTower
    generators: tuple[QPoly, ...]
    independent: bool = dc_field(init=False)

    def __post_init__(self):
        for g in self.generators:
            if not g.tower.same_as(self.tower):
                raise TowerMismatch("generator from a different tower")
            if g.coeffs[0] != 0:
                raise ValueError("generators must have zero constant term")
        rows = [QPoly.x(self.tower).coeffs] + [g.coeffs for g in self.generators]
        rank = len(row_space_basis(self.tower, [list(r) for r in rows]))
        object.__setattr__(self, "independent", rank == len(rows))

    @property
    def k(self) -> int:
        return len(self.generators)

    def all_generators(self) -> list[QPoly]:
        return [QPoly.x(self.tower)] + list(self.generators)


@dataclass(frozen=True)
class RdHullReport:
    M: FqMatrix
    rank_M: int
    hull_dim: int
    is_lcd: bool
    generators_self_orthogonal: bool
    hull_basis: tuple[QPoly, ...]
    # When M = 0 the span <F_1..F_k> is self-orthogonal; whether it is
    # self-dual depends on an ambient-dimension convention this package does
    # not fix, so it is only ever flagged, never asserted.
    self_dual_unverified: bool

    @property
    def ebit_count(self) -> int:
        return self.hull_dim


def generator_gram(code: RdCode) -> FqMatrix:
    """The k x k matrix M[j][j'] = sum_l (F_j)_l (F_j')_l over GF(q^m)."""
    if not code.independent:
        raise DependentGenerators("generators are dependent over GF(q^m)")
    t = code.tower
    rows = [[delsarte_pair(f, g) for g in code.generators]
            for f in code.generators]
    return FqMatrix(t, rows)


def rd_hull(code: RdCode) -> RdHullReport:
    """Hull of the code from the generator Gram matrix.

    Kernel vectors (alpha_1..alpha_k) of M lift to hull elements
    sum(alpha_j F_j); the X-coordinate is forced to zero by the pairing
    <X, X> = 1, which is also why the code is never self-orthogonal as a
    whole (and never self-dual)."""
    m_mat = generator_gram(code)
    t = code.tower
    kern = m_mat.kernel_basis()
    hull_polys = []
    for vec in kern:
        acc = QPoly.zero(t)
        for a, g in zip(vec, code.generators):
            if a != 0:
                acc = acc + g.scale(a)
        # normalize: first nonzero kernel coordinate is already 1 from rref
        hull_polys.append(acc)
    rank_m = code.k - len(kern)
    self_orth = m_mat.is_zero()
    return RdHullReport(
        M=m_mat,
        rank_M=rank_m,
        hull_dim=len(kern),
        is_lcd=(len(kern) == 0),
        generators_self_orthogonal=self_orth,
        hull_basis=tuple(hull_polys),
        self_dual_unverified=self_orth,
    )


def common_kernel(tower: FieldTower, generators) -> list[int]:
    """F_q-basis of the intersection of ker(h) over the given q-polynomials.

    The common kernel of a generating set equals the common kernel of its
    span, so this decides degeneracy of the generated code."""
    pb = tower.power_basis
    fq = tower.subfield(1)
    rows = []
    for g in generators:
        cols = [pb.coords(g(e)) for e in pb.elements]
        rows.extend([cols[j][i] for j in range(tower.m)] for i in range(tower.m))
    if not rows:
        return [pb.from_coords(v)
                for v in FqMatrix.identity(fq, tower.m).rows]
    return [pb.from_coords(v) for v in kernel_basis(fq, rows)]


def is_degenerate(code_or_generators, tower: FieldTower | None = None):
    """(degenerate?, common-kernel basis).  Accepts an RdCode (whose implicit
    X makes it automatically non-degenerate) or a bare generator list."""
    if isinstance(code_or_generators, RdCode):
        tower = code_or_generators.tower
        gens = code_or_generators.all_generators()
    else:
        if tower is None:
            raise ValueError("tower required with a bare generator list")
        gens = list(code_or_generators)
    ker = common_kernel(tower, gens)
    return (len(ker) > 0, ker)
