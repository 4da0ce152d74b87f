"""Dense exact linear algebra over a designated field in the tower.

Two layers:

* prime-field helpers on numpy integer matrices (mod-p Gauss elimination),
  used by the coordinate machinery in `field`;
* FqMatrix, a small exact matrix over any object exposing the field protocol
  (zero/one/add/sub/mul/inv/neg, optionally contains) -- a FieldTower for
  GF(q^m) work or a SubfieldView for GF(q)-rank computations.  Pivoting is
  deterministic (topmost row, leftmost column) so kernels and reduced forms
  are reproducible.
"""

from __future__ import annotations

import numpy as np


# ---------------------------------------------------------------------------
# Prime field GF(p), numpy representation
# ---------------------------------------------------------------------------


def pmat_rank(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        piv = None
        for rr in range(rank, rows):
            if a[rr, col] % p:
                piv = rr
                break
        if piv is None:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), -1, p)) % p
        for rr in range(rows):
            if rr != rank and a[rr, col]:
                a[rr] = (a[rr] - a[rr, col] * a[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def pmat_inv(mat: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over GF(p); ValueError if singular."""
    a = np.array(mat, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        piv = None
        for rr in range(col, n):
            if aug[rr, col] % p:
                piv = rr
                break
        if piv is None:
            raise ValueError("singular matrix over GF(p)")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] = (aug[col] * pow(int(aug[col, col]), -1, p)) % p
        for rr in range(n):
            if rr != col and aug[rr, col]:
                aug[rr] = (aug[rr] - aug[rr, col] * aug[col]) % p
    return aug[:, n:] % p


# ---------------------------------------------------------------------------
# Matrices over a tower field / subfield view
# ---------------------------------------------------------------------------


class FqMatrix:
    """Exact matrix with entries in a designated field of the tower.

    Entries are element encodings (ints); `field` supplies the arithmetic.
    Constructing a matrix whose entries are not members of `field` is an
    error: this is the guard that keeps GF(q)-rank computations from silently
    mixing in top-field values.
    """

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, validate: bool = True):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")
        if validate and hasattr(field, "contains"):
            for r in self.rows:
                for x in r:
                    if not field.contains(x):
                        raise ValueError(
                            f"entry {x!r} is not an element of {field!r}")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[0] * ncols for _ in range(nrows)], validate=False)

    @classmethod
    def identity(cls, field, n):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        return cls(field, rows, validate=False)

    # -- basics ---------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, FqMatrix) and self.rows == other.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.nrows) for j in range(i))

    def transpose(self) -> "FqMatrix":
        return FqMatrix(self.field,
                        [[self.rows[i][j] for i in range(self.nrows)]
                         for j in range(self.ncols)], validate=False)

    def scale(self, c) -> "FqMatrix":
        f = self.field
        return FqMatrix(f, [[f.mul(c, x) for x in r] for r in self.rows],
                        validate=False)

    def __add__(self, other) -> "FqMatrix":
        f = self.field
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return FqMatrix(f, [[f.add(a, b) for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.rows, other.rows)],
                        validate=False)

    def mul_vec(self, v):
        f = self.field
        out = []
        for r in self.rows:
            acc = 0
            for a, b in zip(r, v):
                acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    # -- elimination ----------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot_columns)."""
        f = self.field
        a = [list(r) for r in self.rows]
        pivots = []
        rank = 0
        for col in range(self.ncols):
            piv = None
            for rr in range(rank, self.nrows):
                if a[rr][col] != 0:
                    piv = rr
                    break
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            inv = f.inv(a[rank][col])
            a[rank] = [f.mul(inv, x) for x in a[rank]]
            for rr in range(self.nrows):
                if rr != rank and a[rr][col] != 0:
                    c = a[rr][col]
                    a[rr] = [f.sub(x, f.mul(c, y)) for x, y in zip(a[rr], a[rank])]
            pivots.append(col)
            rank += 1
            if rank == self.nrows:
                break
        return a, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        f = self.field
        a = [list(r) for r in self.rows]
        n = self.nrows
        det = 1
        for col in range(n):
            piv = None
            for rr in range(col, n):
                if a[rr][col] != 0:
                    piv = rr
                    break
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = f.neg(det)
            det = f.mul(det, a[col][col])
            inv = f.inv(a[col][col])
            for rr in range(col + 1, n):
                if a[rr][col] != 0:
                    c = f.mul(a[rr][col], inv)
                    a[rr] = [f.sub(x, f.mul(c, y)) for x, y in zip(a[rr], a[col])]
        return det

    def kernel_basis(self):
        """Basis of the right null space {v : A v = 0}, deterministic order.

        Each vector is normalized so its first nonzero entry is 1 (it is, by
        construction: the free coordinate carries a 1)."""
        f = self.field
        rr, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for row_idx, pc in enumerate(pivots):
                v[pc] = f.neg(rr[row_idx][fc])
            basis.append(tuple(v))
        return basis


# ---------------------------------------------------------------------------
# Row-space utilities shared by the oracle and the hull computations
# ---------------------------------------------------------------------------


def row_space_basis(field, rows):
    """Independent spanning rows (nonzero rows of the reduced form)."""
    if not rows:
        return []
    rr, pivots = FqMatrix(field, rows, validate=False).rref()
    return [tuple(rr[i]) for i in range(len(pivots))]


def kernel_basis(field, rows):
    if not rows:
        return []
    return FqMatrix(field, rows, validate=False).kernel_basis()


def annihilator_basis(field, rows, ncols):
    """Basis of {v : r . v = 0 for every row r} under the standard dot form."""
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(ncols))
                for i in range(ncols)]
    return FqMatrix(field, rows, validate=False).kernel_basis()


def intersect_row_spaces(field, rows1, rows2, ncols):
    """Basis of rowspace(rows1) & rowspace(rows2).

    Membership in the second space is tested against its annihilator under
    the standard dot product (double annihilation holds over a field)."""
    b1 = row_space_basis(field, rows1)
    if not b1:
        return []
    ann2 = annihilator_basis(field, rows2, ncols)
    if not ann2:
        return b1
    # constraints on coefficients a with v = sum a_i b1_i
    cons = []
    for w in ann2:
        row = []
        for v in b1:
            acc = 0
            for x, y in zip(w, v):
                acc = field.add(acc, field.mul(x, y))
            row.append(acc)
        cons.append(row)
    coeff_kernel = kernel_basis(field, cons)
    out = []
    for a in coeff_kernel:
        v = [0] * ncols
        for ai, bi in zip(a, b1):
            if ai != 0:
                v = [field.add(x, field.mul(ai, y)) for x, y in zip(v, bi)]
        out.append(tuple(v))
    return row_space_basis(field, out)
