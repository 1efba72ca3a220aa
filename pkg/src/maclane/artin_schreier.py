"""Classification of x^p - x - a over F_p(t) with the t-adic valuation.

The class of the extension is decided by the values w = v(F(b)) as the
witness b ranges over improving approximations:

  w > 0          split: p branches, all unramified and trivial on residues
  w = 0          inert: the residual y^p - y + r is irreducible over F_p
  w < 0, p ∤ w   ramified: e = p, the root has value w/p
  w < 0, p | w   improvable: b' = b + t^(w/p) * eta strictly increases w

When improvement never stops within the budget the report is honest about
it: the polynomial may generate a defect extension or just need more rounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .base import INF, BaseField, InvariantError, format_value
from .poly import Polynomial
from . import ffield
from .ffield import FFPoly, FiniteField


class ASCase(enum.Enum):
    SplitP = "split-p"
    InertP = "inert-p"
    RamifiedP = "ramified-p"
    NoMaxWithinBudget = "no-max-within-budget"


@dataclass(frozen=True)
class ASReport:
    case: ASCase
    p: int
    a: object                   # BaseElem
    witness: object             # BaseElem, final b
    w: object                   # final value v(F(b))
    e: int
    f: int
    g: int
    defect: int
    improvements: int
    trace: tuple                # ((b, w), ...) with strictly increasing w
    residual: str | None        # inert case: the irreducible residual
    split_factors: tuple | None # split case: linear residual factors

    def to_json(self):
        return {
            "case": self.case.value,
            "p": self.p,
            "a": str(self.a),
            "witness": str(self.witness),
            "w": format_value(self.w),
            "e": self.e,
            "f": self.f,
            "g": self.g,
            "defect": self.defect,
            "improvements": self.improvements,
            "trace": [[str(b), format_value(w)] for b, w in self.trace],
            "residual": self.residual,
            "split_factors": list(self.split_factors) if self.split_factors is not None else None,
        }


def artin_schreier_polynomial(base: BaseField, a) -> Polynomial:
    if base.kind != "Fpt":
        raise ValueError("Artin-Schreier classification needs a rational function field")
    x = Polynomial.x(base)
    return x ** base.p - x - Polynomial.constant(base._own(a))


def split_residual(p: int):
    """The residual y^p - y at a split witness, and its linear factors."""
    gfp = FiniteField.of(p, 1)
    fbar = FFPoly.y(gfp) ** p - FFPoly.y(gfp)
    _, factors = ffield.ff_factor(fbar)
    return fbar, factors


def improve_witness(base: BaseField, a, b):
    """One improvement step at w = v(F(b)) < 0 divisible by p.

    Returns b + t^(w/p) * eta with eta^p = -res(F(b) / t^w); the new value of
    F is strictly larger than w.
    """
    F = artin_schreier_polynomial(base, a)
    b = base._own(b)
    w = base.valuation(F(b))
    if w is INF or w >= 0:
        raise ValueError("improvement applies only to negative values")
    wi = int(w)
    if wi % base.p:
        raise ValueError("value prime to p admits no improvement (ramified case)")
    c = base.uniformizer() ** (wi // base.p)
    r = base.residue(F(b) * base.uniformizer() ** (-wi))
    gfp = FiniteField.of(base.p, 1)
    eta = ffield.pth_root(gfp.from_int(-r))
    return b + c * base.from_int(eta.coeffs[0] if eta.coeffs else 0)


def classify(base: BaseField, a, budget: int = 16) -> ASReport:
    """Classify x^p - x - a by iterating valuation checks on witnesses."""
    if base.kind != "Fpt":
        raise ValueError("Artin-Schreier classification needs a rational function field")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    p = base.p
    a = base._own(a)
    F = artin_schreier_polynomial(base, a)
    b = base.zero()
    trace = []
    improvements = 0
    while True:
        w = base.valuation(F(b))
        if trace and w is not INF and not w > trace[-1][1]:
            raise InvariantError("witness improvement did not increase the value")
        trace.append((b, w))
        if w is INF:
            raise ValueError(f"reducible: F({b}) = 0")
        if w > 0:
            fbar, factors = split_residual(p)
            return ASReport(
                ASCase.SplitP, p, a, b, w, 1, 1, p, 1, improvements,
                tuple(trace), None, tuple(str(h) for h, _ in factors))
        if w == 0:
            r = base.residue(F(b))
            if r % p == 0:
                raise InvariantError("zero residue at value zero")
            gfp = FiniteField.of(p, 1)
            residual = FFPoly.y(gfp) ** p - FFPoly.y(gfp) + FFPoly.from_ints(gfp, [r])
            if not ffield.is_irreducible(residual):
                raise InvariantError("inert residual is reducible")
            return ASReport(
                ASCase.InertP, p, a, b, w, 1, p, 1, 1, improvements,
                tuple(trace), str(residual), None)
        wi = int(w)
        if wi % p:
            return ASReport(
                ASCase.RamifiedP, p, a, b, w, p, 1, 1, 1, improvements,
                tuple(trace), None, None)
        if improvements >= budget:
            return ASReport(
                ASCase.NoMaxWithinBudget, p, a, b, w, 1, 1, 1, p, improvements,
                tuple(trace), None, None)
        b = improve_witness(base, a, b)
        improvements += 1


def max_of_S(report: ASReport):
    """Maximum of S = {v(x - c) : c in K} for a root x, with its witness.

    Ramified and inert cases attain it at (w/p, b); the split case is
    unbounded above; a budget-limited report yields None.
    """
    if report.case is ASCase.SplitP:
        raise ValueError("S is unbounded above in the split case")
    if report.case is ASCase.NoMaxWithinBudget:
        return None
    return Fraction(int(report.w), report.p), report.witness
