"""q-polynomials as F_q-linear operators on GF(q^m).

A q-polynomial sum(a_i X^(q^i)) is stored as a coefficient tuple of length
exactly m (reduced mod X^(q^m) - X), so Ore composition needs no degree
bookkeeping: exponents twist mod m and coefficients pick up Frobenius powers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TowerMismatch
from .field import Basis, FieldTower
from .matrix import FqMatrix, row_space_basis


@dataclass(frozen=True)
class QPoly:
    tower: FieldTower
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.tower.m:
            raise ValueError(
                f"need exactly m = {self.tower.m} coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            if not self.tower.contains(c):
                raise ValueError(f"{c!r} is not an element of the tower")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_coeffs(cls, tower, coeffs) -> "QPoly":
        cs = list(coeffs)
        if len(cs) > tower.m:
            raise ValueError("too many coefficients; reduce mod X^(q^m) - X first")
        cs += [0] * (tower.m - len(cs))
        return cls(tower, tuple(int(c) for c in cs))

    @classmethod
    def x(cls, tower) -> "QPoly":
        return cls.from_coeffs(tower, [1])

    @classmethod
    def zero(cls, tower) -> "QPoly":
        return cls.from_coeffs(tower, [])

    @classmethod
    def monomial(cls, tower, i, c=1) -> "QPoly":
        cs = [0] * tower.m
        cs[i % tower.m] = c
        return cls(tower, tuple(cs))

    @classmethod
    def frobenius_family(cls, tower, k, lam, mu) -> "QPoly":
        """lam * X + mu * X^(q^k), the two-parameter twist family."""
        if not 1 <= k <= tower.m - 1:
            raise ValueError(f"twist exponent k must be in 1..{tower.m - 1}")
        cs = [0] * tower.m
        cs[0] = lam
        cs[k] = tower.add(cs[k], mu)
        return cls(tower, tuple(cs))

    # -- algebra ---------------------------------------------------------------

    def __call__(self, x: int) -> int:
        t = self.tower
        acc = 0
        for i, a in enumerate(self.coeffs):
            if a != 0:
                acc = t.add(acc, t.mul(a, t.frobenius_pow(x, i)))
        return acc

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        self._check(other)
        t = self.tower
        return QPoly(t, tuple(t.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: int) -> "QPoly":
        t = self.tower
        return QPoly(t, tuple(t.mul(c, a) for a in self.coeffs))

    def compose(self, other: "QPoly") -> "QPoly":
        """Ore composition self(other(x)), reduced mod X^(q^m) - X."""
        self._check(other)
        t = self.tower
        m = t.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[(i + j) % m] = t.add(out[(i + j) % m],
                                         t.mul(a, t.frobenius_pow(b, i)))
        return QPoly(t, tuple(out))

    def adjoint(self) -> "QPoly":
        """The trace-form adjoint: coefficient a_i moves to slot m-i with a
        Frobenius power q^(m-i), so that Tr(L(x) y) = Tr(x L~(y)) for all x, y."""
        t = self.tower
        m = t.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            j = (m - i) % m
            out[j] = t.add(out[j], t.frobenius_pow(a, m - i))
        return QPoly(t, tuple(out))

    def _check(self, other: "QPoly"):
        if not self.tower.same_as(other.tower):
            raise TowerMismatch("q-polynomials from different towers")

    def __repr__(self):
        t = self.tower
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            head = "X" if i == 0 else f"X^q^{i}"
            terms.append(head if c == 1 else f"({t.format_element(c)})*{head}")
        return "QPoly(" + (" + ".join(terms) if terms else "0") + ")"


# ---------------------------------------------------------------------------
# Operator-level functions
# ---------------------------------------------------------------------------


def qpoly_eval(L: QPoly, x: int) -> int:
    return L(x)


def qpoly_compose(L1: QPoly, L2: QPoly) -> QPoly:
    return L1.compose(L2)


def qpoly_adjoint(L: QPoly) -> QPoly:
    return L.adjoint()


def op_matrix(L: QPoly, basis: Basis) -> FqMatrix:
    """m x m matrix of L over F_q in `basis`: column j holds coords(L(e_j))."""
    if not L.tower.same_as(basis.tower):
        raise TowerMismatch("operator and basis from different towers")
    t = L.tower
    cols = [basis.coords(L(e)) for e in basis.elements]
    rows = [[cols[j][i] for j in range(t.m)] for i in range(t.m)]
    return FqMatrix(t.subfield(1), rows)


def op_rank(L: QPoly, basis: Basis | None = None) -> int:
    """F_q-dimension of the image of L (the q-rank)."""
    basis = basis or L.tower.power_basis
    return op_matrix(L, basis).rank()


def op_kernel_basis(L: QPoly, basis: Basis | None = None) -> list[int]:
    """F_q-basis of ker L, as field elements (deterministic order)."""
    basis = basis or L.tower.power_basis
    vecs = op_matrix(L, basis).kernel_basis()
    return [basis.from_coords(v) for v in vecs]


def op_image_basis(L: QPoly, basis: Basis | None = None) -> list[int]:
    """F_q-basis of im L: the first basis-element images that grow the rank."""
    basis = basis or L.tower.power_basis
    fq = L.tower.subfield(1)
    chosen: list[int] = []
    chosen_coords: list[tuple[int, ...]] = []
    for e in basis.elements:
        x = L(e)
        cand = chosen_coords + [basis.coords(x)]
        if len(row_space_basis(fq, cand)) > len(chosen_coords):
            chosen.append(x)
            chosen_coords.append(basis.coords(x))
    return chosen
