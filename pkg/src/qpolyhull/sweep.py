"""Strata spectra over projective parameter lines, and ebit reports.

A sweep walks P^1 as (1:0) followed by (rho:1) in element-encoding order,
evaluates the hull at every point (closed-form route for the Frobenius
family, adjoint-intersection route for a general twisting operator), and
tallies the strata S_h.  Points are labeled with the polynomial rendering of
rho so tables diff cleanly across runs.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import DegenerateInput, SizeCapExceeded
from .field import FieldTower
from .frob import FrobParams, hull_frob
from .linops import QPoly, qpoly_adjoint
from .oracle import intersect, operator_image, operator_kernel

DEFAULT_SWEEP_CAP = 2 ** 16


@dataclass(frozen=True)
class PointRecord:
    label: str                  # "inf" or the rendering of rho
    hull: int
    ebits: int
    dim_code: int
    classification: str
    case: str | None = None     # Frobenius family only
    eps1: int | None = None
    eps2: int | None = None
    isotropic: bool | None = None


@dataclass(frozen=True)
class StrataTable:
    p: int
    r: int
    m: int
    q: int
    family: tuple                  # ("frobenius", k) or ("pencil", coeff strings)
    parameter_field: str           # "base" | "top"
    total: int
    counts: tuple[tuple[int, int], ...]   # ((hull_dim, count), ...) ascending
    lcd_density: Fraction
    points: tuple[PointRecord, ...] | None = None

    def count(self, h: int) -> int:
        return dict(self.counts).get(h, 0)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        d = {
            "schema": 1,
            "kind": "strata_table",
            "p": self.p, "r": self.r, "m": self.m, "q": self.q,
            "family": list(self.family),
            "parameter_field": self.parameter_field,
            "total": self.total,
            "counts": {str(h): c for h, c in self.counts},
            "lcd_density": f"{self.lcd_density.numerator}/{self.lcd_density.denominator}",
            "lcd_density_float": float(self.lcd_density),
        }
        if self.points is not None:
            d["points"] = [asdict(pt) for pt in self.points]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json_dict(cls, d: dict) -> "StrataTable":
        if d.get("schema") != 1 or d.get("kind") != "strata_table":
            raise ValueError("not a schema-1 strata table")
        num, den = d["lcd_density"].split("/")
        points = None
        if "points" in d:
            points = tuple(PointRecord(**pt) for pt in d["points"])
        fam = d["family"]
        family = (fam[0], *[tuple(x) if isinstance(x, list) else x for x in fam[1:]])
        return cls(p=d["p"], r=d["r"], m=d["m"], q=d["q"],
                   family=family,
                   parameter_field=d["parameter_field"],
                   total=d["total"],
                   counts=tuple(sorted((int(h), c) for h, c in d["counts"].items())),
                   lcd_density=Fraction(int(num), int(den)),
                   points=points)

    @classmethod
    def from_json(cls, text: str) -> "StrataTable":
        return cls.from_json_dict(json.loads(text))

    def to_csv(self) -> str:
        lines = [
            "# schema=1",
            f"# p={self.p} r={self.r} m={self.m} q={self.q}",
            f"# family={','.join(str(x) for x in self.family)}",
            f"# parameter_field={self.parameter_field}",
            f"# total={self.total}",
            f"# lcd_density={self.lcd_density.numerator}/{self.lcd_density.denominator}",
            "hull_dim,count",
        ]
        lines += [f"{h},{c}" for h, c in self.counts]
        if self.points is not None:
            lines.append("")
            lines.append("point,hull,ebits,dim_code,classification,case,eps1,eps2,isotropic")
            for pt in self.points:
                lines.append(",".join("" if v is None else str(v) for v in (
                    pt.label, pt.hull, pt.ebits, pt.dim_code, pt.classification,
                    pt.case, pt.eps1, pt.eps2, pt.isotropic)))
        return "\n".join(lines) + "\n"


def _projective_points(tower: FieldTower, parameter_field: str, cap: int):
    if parameter_field == "base":
        params = tower.subfield(1).elements
    elif parameter_field == "top":
        params = tower.elements()
    else:
        raise ValueError("parameter_field must be 'base' or 'top'")
    total = len(params) + 1
    if total > cap:
        raise SizeCapExceeded(f"sweep of {total} points exceeds cap {cap}")
    yield "inf", 1, 0
    for rho in params:
        yield tower.format_element(rho), rho, 1


def _general_point_record(tower, L, label, lam, mu) -> PointRecord:
    phi = QPoly.x(tower).scale(lam) + L.scale(mu)
    if phi.is_zero():
        raise DegenerateInput(
            f"operator vanishes at ({label}); dependent family")
    image = operator_image(tower, phi)
    hull = intersect(image, operator_kernel(tower, qpoly_adjoint(phi))).dim
    rank = image.dim
    if hull == 0:
        cls = "LCD"
    elif hull == rank:
        cls = "self-orthogonal"
    else:
        cls = "intermediate"
    return PointRecord(label=label, hull=hull, ebits=hull, dim_code=rank,
                       classification=cls)


def sweep_p1(tower: FieldTower, k: int | None = None, L: QPoly | None = None,
             parameter_field: str = "top", cap: int = DEFAULT_SWEEP_CAP,
             keep_points: bool = True) -> StrataTable:
    """Hull stratum table over P^1 of the chosen parameter field.

    Exactly one of `k` (Frobenius twist) or `L` (general twisting operator)
    must be given."""
    if (k is None) == (L is None):
        raise ValueError("give exactly one of k or L")
    counts: Counter[int] = Counter()
    points: list[PointRecord] = []
    for label, lam, mu in _projective_points(tower, parameter_field, cap):
        if k is not None:
            rep = hull_frob(FrobParams(tower, k, lam, mu))
            pt = PointRecord(label=label, hull=rep.hull_dim,
                             ebits=rep.ebit_count, dim_code=rep.dim_code,
                             classification=rep.classification,
                             case=rep.case, eps1=rep.eps1, eps2=rep.eps2,
                             isotropic=rep.isotropic)
        else:
            pt = _general_point_record(tower, L, label, lam, mu)
        counts[pt.hull] += 1
        if keep_points:
            points.append(pt)
    total = sum(counts.values())
    family = ("frobenius", k) if k is not None else \
        ("pencil", tuple(tower.format_element(c) for c in L.coeffs))
    return StrataTable(
        p=tower.p, r=tower.r, m=tower.m, q=tower.q,
        family=family, parameter_field=parameter_field, total=total,
        counts=tuple(sorted(counts.items())),
        lcd_density=Fraction(counts.get(0, 0), total),
        points=tuple(points) if keep_points else None)


def spectrum_affine(tower: FieldTower, k: int,
                    cap: int = DEFAULT_SWEEP_CAP) -> dict[int, int]:
    """N_delta over the punctured affine plane of base-field parameters:
    counts of (lam, mu) in F_q^2 - {0} by hull dimension."""
    fq = tower.subfield(1).elements
    if len(fq) ** 2 - 1 > cap:
        raise SizeCapExceeded("affine spectrum exceeds cap")
    counts: Counter[int] = Counter()
    for lam in fq:
        for mu in fq:
            if lam == 0 and mu == 0:
                continue
            counts[hull_frob(FrobParams(tower, k, lam, mu)).hull_dim] += 1
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class EbitStratum:
    ebits: int
    count: int
    fraction: Fraction
    cases: tuple[tuple[str, int], ...] | None   # Frobenius case breakdown


@dataclass(frozen=True)
class EbitReport:
    """Entanglement-cost view of a strata table: a hull-dimension-h code
    costs exactly h pre-shared pairs, so the LCD stratum is the zero-cost
    locus and, for the Frobenius family, the positive strata decompose by
    bijectivity case with values of the form d or 2d."""
    total: int
    zero_cost_count: int
    zero_cost_fraction: Fraction
    strata: tuple[EbitStratum, ...]
    d: int | None                      # gcd(k, m) when Frobenius

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "ebit_report",
            "total": self.total,
            "zero_cost_count": self.zero_cost_count,
            "zero_cost_fraction":
                f"{self.zero_cost_fraction.numerator}/{self.zero_cost_fraction.denominator}",
            "d": self.d,
            "strata": [{
                "ebits": s.ebits, "count": s.count,
                "fraction": f"{s.fraction.numerator}/{s.fraction.denominator}",
                "cases": dict(s.cases) if s.cases is not None else None,
            } for s in self.strata],
        }


def ebit_report(table: StrataTable, tower: FieldTower | None = None) -> EbitReport:
    import math
    d = None
    if table.family[0] == "frobenius":
        d = math.gcd(table.family[1], table.m)
    strata = []
    for h, c in table.counts:
        cases = None
        if table.points is not None and table.family[0] == "frobenius":
            breakdown: Counter[str] = Counter()
            for pt in table.points:
                if pt.hull == h and pt.case is not None:
                    breakdown[pt.case] += 1
            cases = tuple(sorted(breakdown.items()))
        strata.append(EbitStratum(ebits=h, count=c,
                                  fraction=Fraction(c, table.total),
                                  cases=cases))
    return EbitReport(total=table.total,
                      zero_cost_count=table.count(0),
                      zero_cost_fraction=table.lcd_density,
                      strata=tuple(strata), d=d)
