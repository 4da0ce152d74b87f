"""Gram matrices of operators and the hull-rank machinery.

For an operator Phi on GF(q^m) and a basis {e_1..e_m}, the Gram matrix
G[s][t] = Tr(Phi(e_s) Phi(e_t)) records the pullback of the trace form to the
domain, and

    dim Hull(im Phi)  =  rank(Phi) - rank(G)

over F_q.  Entries live in the embedded GF(q) and all ranks here are
GF(q)-ranks; the FqMatrix constructor rejects entries outside the subfield,
which is what keeps field-of-definition bugs from slipping through.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInput, TowerMismatch
from .field import Basis
from .linops import QPoly, op_matrix, op_rank
from .matrix import FqMatrix, intersect_row_spaces, kernel_basis, row_space_basis


@dataclass(frozen=True)
class HullReport:
    """Per-operator hull record; ebit_count is the entanglement cost of the
    associated quantum code (it equals the hull dimension)."""

    rank_operator: int
    rank_gram: int
    hull_dim: int
    classification: str        # "LCD" | "self-orthogonal" | "intermediate"

    @property
    def ebit_count(self) -> int:
        return self.hull_dim

    @property
    def is_lcd(self) -> bool:
        return self.classification == "LCD"


def _classify(rank_operator: int, rank_gram: int) -> str:
    hull = rank_operator - rank_gram
    if hull == 0:
        return "LCD"
    if rank_gram == 0:
        return "self-orthogonal"
    return "intermediate"


def gram_of_operator(phi: QPoly, basis: Basis) -> FqMatrix:
    """The m x m Gram matrix Tr(phi(e_s) phi(e_t)) over the embedded GF(q).

    Valid for any coefficient field of phi: the trace always lands in GF(q).
    """
    if not phi.tower.same_as(basis.tower):
        raise TowerMismatch("operator and basis from different towers")
    t = phi.tower
    images = [phi(e) for e in basis.elements]
    m = t.m
    rows = [[0] * m for _ in range(m)]
    for s in range(m):
        for u in range(s, m):
            v = t.trace_rel(t.mul(images[s], images[u]), 1)
            rows[s][u] = v
            rows[u][s] = v
    return FqMatrix(t.subfield(1), rows)


def structure_matrices(generators: list[QPoly], basis: Basis) -> list[list[FqMatrix]]:
    """All pairwise Gram blocks Gamma[i][j][s][t] = Tr(F_i(e_s) F_j(e_t)).

    For coefficient vectors over GF(q), the Gram matrix of sum(alpha_i F_i)
    is the quadratic form sum(alpha_i alpha_j Gamma[i][j]); over the top
    field that expansion is not valid and gram_of_operator must be used.
    """
    t = basis.tower
    for g in generators:
        if not g.tower.same_as(t):
            raise TowerMismatch("generator from a different tower")
    images = [[g(e) for e in basis.elements] for g in generators]
    fq = t.subfield(1)
    m = t.m
    out = []
    for i in range(len(generators)):
        row = []
        for j in range(len(generators)):
            rows = [[t.trace_rel(t.mul(images[i][s], images[j][u]), 1)
                     for u in range(m)] for s in range(m)]
            row.append(FqMatrix(fq, rows))
        out.append(row)
    return out


def gram_from_structure(gammas, alphas, fq) -> FqMatrix:
    """sum(alpha_i alpha_j Gamma_ij) for alphas over GF(q) (validated)."""
    for a in alphas:
        if not fq.contains(a):
            raise DegenerateInput(
                "quadratic expansion only holds for base-field coefficients")
    first = gammas[0][0]
    acc = FqMatrix.zeros(first.field, first.nrows, first.ncols)
    for i, ai in enumerate(alphas):
        if ai == 0:
            continue
        for j, aj in enumerate(alphas):
            if aj == 0:
                continue
            acc = acc + gammas[i][j].scale(acc.field.mul(ai, aj))
    return acc


def hull_dim(phi: QPoly, basis: Basis) -> HullReport:
    """Hull of the image code of phi, by the rank difference."""
    if phi.is_zero():
        raise DegenerateInput("zero operator has no parameter-space class")
    r_phi = op_rank(phi, basis)
    r_g = gram_of_operator(phi, basis).rank()
    return HullReport(rank_operator=r_phi, rank_gram=r_g,
                      hull_dim=r_phi - r_g,
                      classification=_classify(r_phi, r_g))


def universal_null_space(gammas) -> list[tuple[int, ...]]:
    """Basis of the intersection of the kernels of every structure block.

    Vectors in this space lie in ker G(alpha) for every parameter choice, so
    its dimension is a parameter-free floor under every hull dimension.
    Computed by iterated pairwise intersection (tests cross-check against a
    single stacked-kernel solve)."""
    fq = gammas[0][0].field
    m = gammas[0][0].ncols
    current = [tuple(r) for r in FqMatrix.identity(fq, m).rows]
    for row_blocks in gammas:
        for g in row_blocks:
            ker = kernel_basis(fq, g.rows)
            current = intersect_row_spaces(fq, current, ker, m)
            if not current:
                return []
    return current


def canonical_orbit_rep(tower, alphas: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical representative of the F_q*-orbit of a nonzero parameter
    vector over GF(q^m): scale so the first nonzero coordinate has the
    smallest element encoding among the q-1 scalings."""
    if all(a == 0 for a in alphas):
        raise DegenerateInput("zero parameter vector")
    fq = tower.subfield(1)
    lead = next(a for a in alphas if a != 0)
    best = None
    best_t = None
    for t_ in fq.elements:
        if t_ == 0:
            continue
        scaled = tower.mul(t_, lead)
        if best is None or scaled < best:
            best = scaled
            best_t = t_
    return tuple(tower.mul(best_t, a) for a in alphas)
