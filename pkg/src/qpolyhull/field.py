"""Exact arithmetic for the field tower GF(p) < GF(q) < GF(q^m).

Elements of GF(q^m) = GF(p^(r*m)) are plain Python ints: the base-p digits of
the integer are the coefficients of the element in the polynomial basis
{1, x, x^2, ...} of GF(p)[x] / (modulus).  The modulus is the
lexicographically smallest primitive polynomial of degree r*m over GF(p)
(smallest integer encoding of the non-leading coefficients), so the residue
class of x is itself a generator of the multiplicative group and every tower
is reproducible from (p, r, m) alone.

Multiplication, inversion and powering go through discrete-log tables built
once at construction; addition is digit arithmetic (XOR in characteristic 2).
Subfields GF(q^s) for s | m are identified inside the big field as the fixed
points of x -> x^(q^s), never as separate element types.
"""

from __future__ import annotations

import math
import re
from array import array

import numpy as np

from .errors import (
    ConsistencyError,
    NotADivisor,
    NotPrime,
    ParseError,
    SizeCapExceeded,
    TowerMismatch,
)
from .matrix import pmat_inv

DEFAULT_SIZE_CAP = 2 ** 24


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for f in range(2, math.isqrt(n) + 1):
        if n % f == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs stay below 2^24 here)."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# GF(p)[x] helpers used only for modulus selection.  Polynomials are tuples of
# ints (ascending degree, no trailing zeros except the zero polynomial ()).
# ---------------------------------------------------------------------------


def _ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        if a[i] == 0:
            continue
        c = (a[i] * inv_lead) % p
        for j in range(df + 1):
            a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a)


def _pmulmod(a, b, f, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(base, e, f, p):
    result = (1,)
    base = _pmod(base, f, p)
    while e > 0:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        inv_lead = pow(b[-1], -1, p)
        monic = tuple((c * inv_lead) % p for c in b)
        a, b = b, _pmod(a, monic, p)
    return a


def _is_irreducible(f, p, n):
    x = (0, 1)
    if _ppowmod(x, p ** n, f, p) != x:
        return False
    for ell in factorize(n):
        xq = _ppowmod(x, p ** (n // ell), f, p)
        diff = _ptrim([(a - b) % p for a, b in
                       zip(list(xq) + [0] * n, list(x) + [0] * n)])
        if len(_pgcd(diff, f, p)) > 1:
            return False
    return True


def _x_is_primitive(f, p, n, group_factors):
    order = p ** n - 1
    x = (0, 1)
    if _ppowmod(x, order, f, p) != (1,):
        return False
    for ell in group_factors:
        if _ppowmod(x, order // ell, f, p) == (1,):
            return False
    return True


def smallest_primitive_modulus(p: int, n: int) -> tuple[int, ...]:
    """Monic primitive polynomial of degree n over GF(p) with the smallest
    integer encoding of its non-leading coefficients."""
    if n == 1:
        # f = x + c: the class of x is -c, which must generate GF(p)*.
        for c in range(1, p):
            g = (-c) % p
            if all(pow(g, (p - 1) // ell, p) != 1 for ell in factorize(p - 1)) or p == 2:
                return (c, 1)
        raise ConsistencyError("no primitive root found")
    group_factors = list(factorize(p ** n - 1))
    for low in range(p ** n):
        if low % p == 0:
            continue  # zero constant term: divisible by x
        digits = []
        v = low
        for _ in range(n):
            v, d = divmod(v, p)
            digits.append(d)
        f = tuple(digits) + (1,)
        if not _is_irreducible(f, p, n):
            continue
        if _x_is_primitive(f, p, n, group_factors):
            return f
    raise ConsistencyError(f"no primitive polynomial of degree {n} over GF({p})")


# ---------------------------------------------------------------------------
# The tower itself
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?a(?:\^(\d+))?$")


class FieldTower:
    """The chain GF(p) < GF(q = p^r) < GF(q^m), with exact arithmetic.

    Immutable after construction; all operations are pure functions of their
    arguments, so a tower can be shared freely across threads.
    """

    def __init__(self, p: int, r: int, m: int, size_cap: int = DEFAULT_SIZE_CAP):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"p = {p} is not prime")
        if r < 1 or m < 1:
            raise ValueError("r and m must be positive integers")
        self.p = p
        self.r = r
        self.m = m
        self.n = r * m
        self.q = p ** r
        self.order = p ** self.n
        if self.order > size_cap:
            raise SizeCapExceeded(
                f"GF({p}^{self.n}) has {self.order} elements, above cap {size_cap}")
        self.modulus = smallest_primitive_modulus(p, self.n)
        self._build_log_tables()
        self.generator = int(self.exp[1 % max(self.order - 1, 1)])
        # q^e mod (order-1), for Frobenius powers x -> x^(q^e)
        self._qpow = [pow(self.q, e, max(self.order - 1, 1)) for e in range(self.m)]
        self._subfields: dict[int, SubfieldView] = {}
        self._power_basis = None
        self._normal_basis = None

    # -- construction ------------------------------------------------------

    def _build_log_tables(self):
        p, n, order = self.p, self.n, self.order
        exp = array("q", bytes(8 * max(order - 1, 1)))
        log = array("q", bytes(8 * order))
        if p == 2:
            f_enc = sum(c << i for i, c in enumerate(self.modulus))
            top = 1 << n
            e = 1
            for i in range(order - 1):
                exp[i] = e
                log[e] = i
                e <<= 1
                if e & top:
                    e ^= f_enc
        else:
            powers = [p ** i for i in range(n)]
            f_low = self.modulus[:n]
            coeffs = [0] * n
            coeffs[0] = 1
            e = 1
            for i in range(order - 1):
                exp[i] = e
                log[e] = i
                d = coeffs[n - 1]
                nxt = [(-d * f_low[0]) % p]
                for j in range(1, n):
                    nxt.append((coeffs[j - 1] - d * f_low[j]) % p)
                coeffs = nxt
                e = sum(c * powers[j] for j, c in enumerate(coeffs))
        if e != 1:
            raise ConsistencyError("modulus is not primitive (table cycle broken)")
        self.exp = exp
        self.log = log

    # -- element arithmetic -------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.order

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, res, pw = self.p, 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            res += ((da + db) % p) * pw
            pw *= p
        return res

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self.mul(a, self.p - 1)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.order - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.exp[-self.log[a] % (self.order - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_int(self, x: int, e: int) -> int:
        """x ** e with e any integer (0 ** 0 is taken as 1)."""
        if x == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 has no negative powers")
        return int(self.exp[(self.log[x] * e) % (self.order - 1)])

    def frobenius_pow(self, x: int, e: int) -> int:
        """x ** (q ** (e mod m)), the e-th power of the Frobenius over GF(q)."""
        if x == 0:
            return 0
        return int(self.exp[(self.log[x] * self._qpow[e % self.m]) % (self.order - 1)])

    def trace_rel(self, x: int, s: int) -> int:
        """Relative trace from GF(q^m) down to GF(q^s):  sum of x^(q^(s*i))."""
        if self.m % s != 0:
            raise NotADivisor(f"s = {s} does not divide m = {self.m}")
        acc = x
        y = x
        for _ in range(self.m // s - 1):
            y = self.frobenius_pow(y, s)
            acc = self.add(acc, y)
        return acc

    def elements(self) -> range:
        return range(self.order)

    def multiplicative_order(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n1 = self.order - 1
        return n1 // math.gcd(int(self.log[x]), n1)

    # -- digits / coordinates ----------------------------------------------

    def p_digits(self, x: int) -> list[int]:
        p, n = self.p, self.n
        if p == 2:
            return [(x >> i) & 1 for i in range(n)]
        out = []
        for _ in range(n):
            x, d = divmod(x, p)
            out.append(d)
        return out

    def from_p_digits(self, digits) -> int:
        p, res, pw = self.p, 0, 1
        for d in digits:
            res += int(d % p) * pw
            pw *= p
        return res

    # -- subfields -----------------------------------------------------------

    def subfield(self, s: int) -> "SubfieldView":
        if self.m % s != 0:
            raise NotADivisor(f"s = {s} does not divide m = {self.m}")
        view = self._subfields.get(s)
        if view is None:
            qs = self.q ** s
            if s == self.m:
                elems = tuple(range(self.order))
            else:
                step = (self.order - 1) // (qs - 1)
                elems = tuple(sorted({0} | {int(self.exp[j * step]) for j in range(qs - 1)}))
            view = SubfieldView(self, s, elems)
            self._subfields[s] = view
        return view

    @property
    def subfield_table(self) -> dict[int, tuple[int, ...]]:
        return {s: self.subfield(s).elements for s in divisors(self.m)}

    # -- bases ---------------------------------------------------------------

    @property
    def power_basis(self) -> "Basis":
        """Default basis {1, g, ..., g^(m-1)} of GF(q^m) over GF(q)."""
        if self._power_basis is None:
            elems = tuple(self.pow_int(self.generator, i) for i in range(self.m))
            self._power_basis = Basis(self, elems)
        return self._power_basis

    @property
    def normal_basis(self) -> "Basis":
        if self._normal_basis is None:
            self._normal_basis = find_normal_element(self)
        return self._normal_basis

    # -- rendering / parsing -------------------------------------------------

    def format_element(self, x: int) -> str:
        """Polynomial rendering in the generator symbol a, e.g. 'a^5+a^4+a^2+1'."""
        if not self.contains(x):
            raise ValueError(f"{x!r} is not an element encoding")
        if x == 0:
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.p_digits(x)))):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("a" if c == 1 else f"{c}*a")
            else:
                terms.append(f"a^{i}" if c == 1 else f"{c}*a^{i}")
        return "+".join(terms)

    def parse_element(self, text: str) -> int:
        """Inverse of format_element; also accepts pure powers such as 'a^17'."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ParseError("empty element string")
        if s == "0":
            return 0
        acc = 0
        for term in s.split("+"):
            if not term:
                raise ParseError(f"bad element syntax: {text!r}")
            if term.isdigit():
                acc = self.add(acc, int(term) % self.p)
                continue
            mt = _TERM_RE.match(term)
            if not mt:
                raise ParseError(f"bad term {term!r} in {text!r}")
            c = int(mt.group(1)) % self.p if mt.group(1) else 1
            e = int(mt.group(2)) if mt.group(2) else 1
            acc = self.add(acc, self.mul(c, self.pow_int(self.generator, e)))
        return acc

    # -- misc ----------------------------------------------------------------

    def same_as(self, other: "FieldTower") -> bool:
        return (self.p, self.r, self.m, self.modulus) == \
               (other.p, other.r, other.m, other.modulus)

    def __repr__(self):
        return f"FieldTower(p={self.p}, r={self.r}, m={self.m}, q={self.q}, order={self.order})"


class SubfieldView:
    """GF(q^s) sitting inside the tower: same element encodings, same
    arithmetic, plus membership validation and a canonical element order."""

    def __init__(self, tower: FieldTower, s: int, elements: tuple[int, ...]):
        self.tower = tower
        self.s = s
        self.order = tower.q ** s
        self.elements = elements
        self._set = frozenset(elements)

    zero = 0
    one = 1

    def contains(self, x) -> bool:
        return x in self._set

    def __contains__(self, x) -> bool:
        return x in self._set

    def add(self, a, b):
        return self.tower.add(a, b)

    def sub(self, a, b):
        return self.tower.sub(a, b)

    def neg(self, a):
        return self.tower.neg(a)

    def mul(self, a, b):
        return self.tower.mul(a, b)

    def inv(self, a):
        return self.tower.inv(a)

    def div(self, a, b):
        return self.tower.div(a, b)

    def pow_int(self, x, e):
        return self.tower.pow_int(x, e)

    def __repr__(self):
        return f"SubfieldView(GF({self.tower.q}^{self.s}) in {self.tower!r})"


class Basis:
    """An F_q-basis of GF(q^m), with exact coordinate extraction.

    Coordinates are solved through the (r*m) x (r*m) GF(p) matrix whose
    columns are the GF(p)-digit vectors of e_i * W^j, where W generates the
    embedded copy of GF(q).  The matrix is inverted once at construction;
    a singular matrix means the claimed basis is dependent over F_q.
    """

    def __init__(self, tower: FieldTower, elements: tuple[int, ...],
                 is_normal: bool = False, normal_element: int | None = None):
        if len(elements) != tower.m:
            raise ValueError(f"basis needs {tower.m} elements, got {len(elements)}")
        for e in elements:
            if not tower.contains(e):
                raise ValueError(f"{e!r} is not an element of the tower")
        self.tower = tower
        self.elements = tuple(int(e) for e in elements)
        self.is_normal = is_normal
        self.normal_element = normal_element

        p, r, n = tower.p, tower.r, tower.n
        if r > 1:
            step = (tower.order - 1) // (tower.q - 1)
            w = int(tower.exp[step])
            self._wpows = tuple(tower.pow_int(w, j) for j in range(r))
        else:
            self._wpows = (1,)
        cols = []
        for e in self.elements:
            for wj in self._wpows:
                cols.append(tower.p_digits(tower.mul(e, wj)))
        mat = np.array(cols, dtype=np.int64).T % p
        try:
            self._inv = pmat_inv(mat, p)
        except ValueError:
            raise ValueError("elements are not linearly independent over F_q") from None

    def coords(self, x: int) -> tuple[int, ...]:
        """F_q-coordinates of x in this basis, as embedded GF(q) encodings."""
        t = self.tower
        y = (self._inv @ np.array(t.p_digits(x), dtype=np.int64)) % t.p
        r = t.r
        out = []
        for i in range(t.m):
            c = 0
            for j in range(r):
                d = int(y[i * r + j])
                if d:
                    c = t.add(c, t.mul(d, self._wpows[j]))
            out.append(c)
        return tuple(out)

    def from_coords(self, cs) -> int:
        t = self.tower
        acc = 0
        for c, e in zip(cs, self.elements):
            acc = t.add(acc, t.mul(c, e))
        return acc

    def __eq__(self, other):
        return (isinstance(other, Basis) and self.tower.same_as(other.tower)
                and self.elements == other.elements)

    def __repr__(self):
        kind = "normal" if self.is_normal else "basis"
        return f"Basis({kind}, {[self.tower.format_element(e) for e in self.elements]})"


# ---------------------------------------------------------------------------
# Module-level operations (the tower methods are the primary surface; these
# exist for call sites that read better functional-style)
# ---------------------------------------------------------------------------

_tower_cache: dict[tuple[int, int, int], FieldTower] = {}


def build_tower(p: int, r: int, m: int, size_cap: int = DEFAULT_SIZE_CAP) -> FieldTower:
    """Construct (or fetch the cached) tower GF(p) < GF(p^r) < GF(p^(r*m))."""
    key = (p, r, m)
    tower = _tower_cache.get(key)
    if tower is None or tower.order > size_cap:
        tower = FieldTower(p, r, m, size_cap=size_cap)
        _tower_cache[key] = tower
    return tower


def frobenius_pow(tower: FieldTower, x: int, e: int) -> int:
    return tower.frobenius_pow(x, e)


def trace_rel(tower: FieldTower, x: int, s: int) -> int:
    return tower.trace_rel(x, s)


def find_normal_element(tower: FieldTower) -> Basis:
    """Smallest element (in encoding order) whose Frobenius conjugates form a
    basis; returns the full normal basis."""
    m = tower.m
    for beta in range(1, tower.order):
        if tower.trace_rel(beta, 1) == 0:
            continue  # conjugates sum to zero: dependent
        conj = tuple(tower.frobenius_pow(beta, i) for i in range(m))
        try:
            return Basis(tower, conj, is_normal=True, normal_element=beta)
        except ValueError:
            continue
    raise ConsistencyError("no normal element found (cannot happen)")


def check_same_tower(a: FieldTower, b: FieldTower) -> None:
    if not a.same_as(b):
        raise TowerMismatch(f"{a!r} vs {b!r}")
