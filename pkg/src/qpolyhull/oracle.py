"""Brute-force ground truth at small field sizes.

Everything here is deliberately naive: duals by solving the trace-orthogonality
system, intersections by stacked constraints, hulls straight from the
definition C & C-dual.  The fast closed-form routes elsewhere in the package
are required (by tests) to agree with these answers exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import SizeCapExceeded, TowerMismatch
from .field import FieldTower
from .matrix import FqMatrix, intersect_row_spaces, kernel_basis, row_space_basis

ORACLE_CAP = 2 ** 12      # linear-solve oracle
ENUM_CAP = 2 ** 8         # set-enumeration second tier


@dataclass(frozen=True)
class SubspaceFq:
    """An F_q-subspace of GF(q^m), stored as reduced coordinate rows in the
    tower's power basis (so equality of subspaces is row equality)."""

    tower: FieldTower
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_elements(cls, tower, elems) -> "SubspaceFq":
        pb = tower.power_basis
        fq = tower.subfield(1)
        rows = row_space_basis(fq, [pb.coords(x) for x in elems])
        return cls(tower, tuple(rows))

    @classmethod
    def from_rows(cls, tower, rows) -> "SubspaceFq":
        fq = tower.subfield(1)
        return cls(tower, tuple(row_space_basis(fq, list(rows))))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_elements(self) -> list[int]:
        pb = self.tower.power_basis
        return [pb.from_coords(r) for r in self.rows]

    def contains(self, x: int) -> bool:
        fq = self.tower.subfield(1)
        pb = self.tower.power_basis
        stacked = list(self.rows) + [pb.coords(x)]
        return len(row_space_basis(fq, stacked)) == self.dim

    def enumerate_elements(self) -> list[int]:
        """All q^dim members (only sensible under the enumeration cap)."""
        t = self.tower
        if t.q ** self.dim > ENUM_CAP:
            raise SizeCapExceeded("subspace too large to enumerate")
        fq = t.subfield(1)
        pb = t.power_basis
        out = []
        for coeffs in product(fq.elements, repeat=self.dim):
            v = [0] * t.m
            for c, row in zip(coeffs, self.rows):
                if c != 0:
                    v = [t.add(a, t.mul(c, b)) for a, b in zip(v, row)]
            out.append(pb.from_coords(v))
        return sorted(set(out))


def trace_dual(S: SubspaceFq) -> SubspaceFq:
    """{y : Tr(x*y) = 0 for all x in S}, by solving over F_q."""
    t = S.tower
    if t.order > ORACLE_CAP:
        raise SizeCapExceeded(f"oracle capped at {ORACLE_CAP} elements")
    pb = t.power_basis
    fq = t.subfield(1)
    basis_elems = S.basis_elements()
    if not basis_elems:
        return SubspaceFq.from_rows(
            t, FqMatrix.identity(fq, t.m).rows)
    # unknown y = sum c_j e_j; one linear constraint per subspace basis vector
    a = [[t.trace_rel(t.mul(b, e), 1) for e in pb.elements] for b in basis_elems]
    ker = kernel_basis(fq, a)
    dual = SubspaceFq.from_rows(t, ker)
    if S.dim + dual.dim != t.m:
        raise AssertionError("trace form degenerate? dim law violated")
    return dual


def trace_dual_enumerated(S: SubspaceFq) -> list[int]:
    """Second-tier dual by scanning every field element (tiny fields only)."""
    t = S.tower
    if t.order > ENUM_CAP:
        raise SizeCapExceeded(f"enumeration dual capped at {ENUM_CAP} elements")
    members = S.enumerate_elements()
    return sorted(y for y in t.elements()
                  if all(t.trace_rel(t.mul(x, y), 1) == 0 for x in members))


def intersect(S1: SubspaceFq, S2: SubspaceFq) -> SubspaceFq:
    if not S1.tower.same_as(S2.tower):
        raise TowerMismatch("subspaces from different towers")
    t = S1.tower
    fq = t.subfield(1)
    rows = intersect_row_spaces(fq, list(S1.rows), list(S2.rows), t.m)
    return SubspaceFq.from_rows(t, rows)


def hull_by_definition(S: SubspaceFq) -> int:
    """dim(S & S-dual) -- the definition, with no shortcuts."""
    return intersect(S, trace_dual(S)).dim


def operator_image(tower: FieldTower, L) -> SubspaceFq:
    """im L as a subspace (L is a QPoly or any callable on elements)."""
    pb = tower.power_basis
    return SubspaceFq.from_elements(tower, [L(e) for e in pb.elements])


def operator_kernel(tower: FieldTower, L) -> SubspaceFq:
    """ker L via the operator matrix over F_q."""
    pb = tower.power_basis
    fq = tower.subfield(1)
    cols = [pb.coords(L(e)) for e in pb.elements]
    rows = [[cols[j][i] for j in range(tower.m)] for i in range(tower.m)]
    return SubspaceFq.from_rows(tower, kernel_basis(fq, rows))


def adjoint_route_hull(tower: FieldTower, L) -> int:
    """dim(im L & ker L~): the intersection description of the hull."""
    from .linops import qpoly_adjoint  # deferred: avoid import cycle
    return intersect(operator_image(tower, L),
                     operator_kernel(tower, qpoly_adjoint(L))).dim


def delsarte_full_system_hull(code) -> int:
    """Hull dimension of a rank-distance code from the full (k+1) x (k+1)
    pairing system, with no block-structure shortcut."""
    from .rdhull import delsarte_pair  # deferred: avoid import cycle
    gens = code.all_generators()
    t = code.tower
    mat = [[delsarte_pair(f, g) for g in gens] for f in gens]
    return len(kernel_basis(t, mat))
