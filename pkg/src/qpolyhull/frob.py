"""The Frobenius twist family  lam*x + mu*x^(q^k)  over GF(q^m).

Everything about this family is controlled by d = gcd(k, m): kernels are
F_{q^d}-lines cut out by a norm-type condition on -lam/mu, the adjoint is the
twist by q^(m-k) with scalar mu^(q^(m-k)), and the hull is the intersection
im(phi) & ker(phi-adjoint).  The two bijectivity indicators eps1/eps2 decide
the hull outright except when both maps are singular, where the dimension
delta is pinned between 0 and d and hits d exactly on the trace-isotropy
locus Tr_{q^m -> q^d}(x0^2) = 0 of the adjoint kernel line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ConsistencyError,
    DegenerateInput,
    NotApplicable,
    NotNormalBasis,
    PreconditionFailed,
)
from .field import Basis, FieldTower
from .gram import gram_of_operator, hull_dim as gram_hull_dim
from .linops import QPoly
from .matrix import FqMatrix
from .oracle import intersect, operator_image, operator_kernel
from .pencil import PencilData, build_pencil, gram_tilde, poly_eval


@dataclass(frozen=True)
class FrobParams:
    tower: FieldTower
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        m = self.tower.m
        if not 1 <= self.k <= m - 1:
            raise ValueError(f"twist exponent k must be in 1..{m - 1}")
        if self.lam == 0 and self.mu == 0:
            raise DegenerateInput("(0, 0) is outside the parameter space")
        for v in (self.lam, self.mu):
            if not self.tower.contains(v):
                raise ValueError(f"{v!r} is not an element of the tower")

    @property
    def d(self) -> int:
        return math.gcd(self.k, self.tower.m)

    def operator(self) -> QPoly:
        return QPoly.frobenius_family(self.tower, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class FrobHullReport:
    eps1: int
    eps2: int
    case: str                  # "00" | "01" | "10" | "11"
    d: int
    dim_code: int              # m - eps1 * d  (= rank of the operator)
    hull_dim: int
    classification: str
    delta: int | None          # intersection dimension, reported in case 11
    isotropic: bool | None     # kernel line of the adjoint totally isotropic?
    adjoint_kernel_generator: int | None

    @property
    def rank_operator(self) -> int:
        return self.dim_code

    @property
    def ebit_count(self) -> int:
        return self.hull_dim

    @property
    def is_lcd(self) -> bool:
        return self.hull_dim == 0


def _norm_exponent(tower: FieldTower, d: int) -> int:
    return (tower.order - 1) // (tower.q ** d - 1)


def frob_kernel_dim(params: FrobParams) -> tuple[int, list[int]]:
    """Kernel of lam*x + mu*x^(q^k): dimension (0 or d) and an F_q-basis.

    A nonzero kernel element solves x^(q^k - 1) = -lam/mu, whose solvability
    is the index-(q^d - 1) norm condition; the solution set is then a single
    coset of F_{q^d}^*, recovered here by discrete logs."""
    t = params.tower
    if params.mu == 0:
        return 0, []   # scalar map, bijective
    d = params.d
    rho = t.div(params.lam, params.mu)
    target = t.neg(rho)
    nexp = _norm_exponent(t, d)
    if t.pow_int(target, nexp) != 1:
        return 0, []
    # solve g^(s * (q^k - 1)) = target for s
    big = t.order - 1
    a = t.q ** params.k - 1
    g_ = math.gcd(a, big)
    tlog = int(t.log[target])
    if tlog % g_ != 0:
        raise ConsistencyError("norm condition held but dlog is unsolvable")
    s0 = (tlog // g_) * pow(a // g_, -1, big // g_) % (big // g_)
    x0 = int(t.exp[s0])
    if params.operator()(x0) != 0:
        raise ConsistencyError("computed kernel generator is not in the kernel")
    # F_q-basis of the F_{q^d}-line through x0
    if d == 1:
        line = [x0]
    else:
        step = big // (t.q ** d - 1)
        w = int(t.exp[step])
        line = [t.mul(x0, t.pow_int(w, j)) for j in range(d)]
    return d, line


def frob_adjoint(params: FrobParams) -> QPoly:
    """lam*y + mu^(q^(m-k)) * y^(q^(m-k)), the trace-form adjoint."""
    t = params.tower
    return QPoly.frobenius_family(
        t, t.m - params.k, params.lam, t.frobenius_pow(params.mu, t.m - params.k))


def adjoint_params(params: FrobParams) -> FrobParams:
    t = params.tower
    return FrobParams(t, t.m - params.k, params.lam,
                      t.frobenius_pow(params.mu, t.m - params.k))


def eps_indicators(params: FrobParams) -> tuple[int, int]:
    """(eps1, eps2): 1 exactly when phi (resp. its adjoint) is non-bijective.

    eps2 is evaluated from its normalized-scalar formula and independently
    re-derived from the kernel condition of the literal adjoint; disagreement
    is an internal error, never a fallback."""
    t = params.tower
    if params.mu == 0:
        raise DegenerateInput("indicators need mu != 0 (mu = 0 is bijective)")
    d = params.d
    nexp = _norm_exponent(t, d)
    rho = t.div(params.lam, params.mu)
    e1 = 1 if t.pow_int(t.neg(rho), nexp) == 1 else 0
    scal = t.pow_int(params.mu, t.q ** (t.m - params.k) - 1)
    e2 = 1 if t.pow_int(t.neg(t.mul(scal, rho)), nexp) == 1 else 0
    # independent route: bijectivity of the adjoint itself
    adj = adjoint_params(params)
    adj_ratio = t.div(adj.lam, adj.mu)
    e2_direct = 1 if t.pow_int(t.neg(adj_ratio), nexp) == 1 else 0
    if e2 != e2_direct:
        raise ConsistencyError("eps2 formula disagrees with the adjoint kernel")
    return e1, e2


def isotropy_check(tower: FieldTower, x0: int, d: int) -> bool:
    """True iff the F_{q^d}-line through x0 is totally isotropic for the
    trace form, i.e. Tr down to GF(q^d) of x0^2 vanishes."""
    if x0 == 0:
        raise DegenerateInput("x0 must be nonzero")
    return tower.trace_rel(tower.mul(x0, x0), d) == 0


def hull_frob(params: FrobParams) -> FrobHullReport:
    """Hull of the image code at (lam, mu), always by explicit subspace
    intersection, with the four-case indicator table enforced as a guard."""
    t = params.tower
    d = params.d
    m = t.m
    phi = params.operator()
    if params.mu == 0:
        # scalar multiple of the identity: bijective, LCD
        return FrobHullReport(eps1=0, eps2=0, case="00", d=d, dim_code=m,
                              hull_dim=0, classification="LCD", delta=None,
                              isotropic=None, adjoint_kernel_generator=None)
    e1, e2 = eps_indicators(params)
    case = f"{e1}{e2}"
    dim_code = m - e1 * d
    delta = intersect(operator_image(t, phi),
                      operator_kernel(t, frob_adjoint(params))).dim
    expected = {"00": 0, "01": d, "10": 0}.get(case)
    if expected is not None and delta != expected:
        raise ConsistencyError(
            f"case {case} must give hull {expected}, got {delta}")
    isotropic = None
    x0 = None
    if e2 == 1:
        kdim, kbasis = frob_kernel_dim(adjoint_params(params))
        if kdim != d:
            raise ConsistencyError("eps2 = 1 but adjoint kernel is trivial")
        x0 = kbasis[0]
    if case == "11":
        if not 0 <= delta <= d:
            raise ConsistencyError("residual-case hull must lie in [0, d]")
        isotropic = isotropy_check(t, x0, d)
        if (delta == d) != isotropic:
            raise ConsistencyError(
                "delta = d must coincide with the trace-isotropy criterion")
    if delta == 0:
        cls = "LCD"
    elif delta == dim_code:
        cls = "self-orthogonal"
    else:
        cls = "intermediate"
    return FrobHullReport(eps1=e1, eps2=e2, case=case, d=d, dim_code=dim_code,
                          hull_dim=delta, classification=cls,
                          delta=delta if case == "11" else None,
                          isotropic=isotropic,
                          adjoint_kernel_generator=x0)


def circulant_structure(tower: FieldTower, k: int, basis: Basis):
    """(omega, G0, G1, G2) in a normal basis, where omega_j = Tr(beta^(1+q^j)).

    All three structure matrices are circulants in omega because the twist
    only shifts the conjugate basis; G2 equals G0 (the twist is a trace
    isometry), and both facts are asserted against direct Gram computation."""
    if not basis.is_normal:
        raise NotNormalBasis("circulant structure needs a normal basis")
    t = tower
    m = t.m
    beta = basis.normal_element
    omega = tuple(t.trace_rel(t.mul(beta, t.frobenius_pow(beta, j)), 1)
                  for j in range(m))
    fq = t.subfield(1)
    g0 = FqMatrix(fq, [[omega[(j - i) % m] for j in range(m)] for i in range(m)])
    g1 = FqMatrix(fq, [[t.add(omega[(j + k - i) % m], omega[(i + k - j) % m])
                        for j in range(m)] for i in range(m)])
    g2 = FqMatrix(fq, [[omega[(j - i) % m] for j in range(m)] for i in range(m)])
    direct_g0 = gram_of_operator(QPoly.x(t), basis)
    direct_g2 = gram_of_operator(QPoly.monomial(t, k), basis)
    if g0 != direct_g0 or g2 != direct_g2:
        raise ConsistencyError("circulant forms disagree with direct Grams")
    return omega, g0, g1, g2


def frequency_multiplicity(k: int, m: int, j: int) -> int:
    """#{t in 0..m-1 : k t = j or k t = -j (mod m)}.

    Nonzero only when gcd(k, m) divides j, in which case it is d when
    2j = 0 (mod m) (the two congruences coincide) and 2d otherwise."""
    count = sum(1 for t_ in range(m)
                if (k * t_ - j) % m == 0 or (k * t_ + j) % m == 0)
    d = math.gcd(k, m)
    if count:
        expected = d if (2 * j) % m == 0 else 2 * d
        if count != expected:
            raise ConsistencyError("congruence count broke the d/2d dichotomy")
    return count


def nu_at_root(tower: FieldTower, k: int, rho0: int) -> int:
    """Frequency multiplicity at a base-field root rho0 of the discriminant,
    from zeta = -rho0 alone: d if zeta^2 = 1, else 2d.

    (zeta = -rho0 must be an (m/d)-th root of unity, which is exactly the
    root condition; the 2j = 0 (mod m) dichotomy is zeta^2 = 1.)"""
    t = tower
    if math.gcd(t.m, t.p) != 1:
        raise NotApplicable("spectral route needs gcd(m, char) = 1")
    d = math.gcd(k, t.m)
    zeta = t.neg(rho0)
    if zeta == 0 or t.pow_int(zeta, t.m // d) != 1:
        raise PreconditionFailed(f"{rho0} is not a root of the discriminant")
    return d if t.pow_int(zeta, 2) == 1 else 2 * d


def stratum_hull_at_root(tower: FieldTower, k: int, rho0: int,
                         basis: Basis | None = None,
                         pencil: PencilData | None = None) -> int:
    """Hull dimension at a bijective base-field root of the discriminant.

    Raises PreconditionFailed off the root set or where the operator is
    singular (singular points belong to hull_frob).  The value, when the
    preconditions hold, is the frequency multiplicity, cross-checked against
    the kernel of the pencil value and against the rank-difference route."""
    t = tower
    if math.gcd(t.m, t.p) != 1:
        raise NotApplicable("spectral route needs gcd(m, char) = 1")
    if not t.subfield(1).contains(rho0):
        raise PreconditionFailed("rho0 must lie in the base field")
    if basis is None:
        basis = t.normal_basis
    if pencil is None:
        pencil = build_pencil(QPoly.monomial(t, k), basis)
    if poly_eval(t, pencil.delta_coeffs, rho0) != 0:
        raise PreconditionFailed(f"Delta({t.format_element(rho0)}) != 0")
    params = FrobParams(t, k, rho0, 1)
    kdim, _ = frob_kernel_dim(params)
    if kdim != 0:
        raise PreconditionFailed(
            "operator is singular at this root; use hull_frob instead")
    nu = nu_at_root(t, k, rho0)
    defect = t.m - gram_tilde(pencil, rho0).rank()
    if defect != nu:
        raise ConsistencyError("frequency multiplicity != pencil kernel dim")
    report = gram_hull_dim(params.operator(), basis)
    if report.hull_dim != nu:
        raise ConsistencyError("stratum value disagrees with the rank route")
    return nu
