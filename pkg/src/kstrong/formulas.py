"""Closed-form arc counts and bounds, evaluated exactly with Fractions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


class FormulaDomainError(ValueError):
    pass


def c2(m: int) -> int:
    """C(m, 2), zero for m < 2."""
    return comb(m, 2) if m >= 2 else 0


def sat_value(n: int, k: int) -> int:
    if k < 1 or n < k:
        raise FormulaDomainError(f"sat_value needs k >= 1 and n >= k, got n={n}, k={k}")
    return c2(n - k + 1) + (k - 1) * (2 * n - k)


def ktree_arc_count(n: int, k: int) -> int:
    """Arcs of any directed (k-1)-tree on n vertices, counted step by step."""
    if k < 1 or n < k:
        raise FormulaDomainError(f"ktree_arc_count needs k >= 1 and n >= k, got n={n}, k={k}")
    c = k - 1
    if c == 0:
        # T_0 has no base clique; the k=1 extremal family is the transitive tournament.
        return c2(n)
    arcs = c * (c - 1)
    for existing in range(c, n):
        arcs += 2 * c + (existing - c)
    return arcs


def du_arc_count(n: int, k: int) -> int:
    if k < 2 or n < 2 * (k - 1):
        raise FormulaDomainError(f"du_arc_count needs k >= 2 and n >= 2(k-1), got n={n}, k={k}")
    t, r = divmod(n, k - 1)
    m = n - k + 1
    parts = [k - 1] * (t - 1) + [r]
    return c2(k - 1) + 2 * (k - 1) * m + c2(m) + sum(c2(p) for p in parts)


def conjecture_value(n: int, k: int) -> Fraction:
    if k < 1 or n < k:
        raise FormulaDomainError(f"conjecture_value needs k >= 1 and n >= k, got n={n}, k={k}")
    return Fraction(3, 2) * (k - Fraction(4, 3)) * (n - k + 1) + c2(n)


def free_bound(n: int, k: int) -> Fraction:
    """Arc bound ``2 C(n,2) - ((n-k+1)^2 - 1)/3`` for k-strong-free digraphs."""
    if k < 2 or n < k:
        raise FormulaDomainError(f"free_bound needs k >= 2 and n >= k, got n={n}, k={k}")
    return 2 * c2(n) - Fraction((n - k + 1) ** 2 - 1, 3)


def refined_bound_applicable(n: int, k: int) -> bool:
    return k >= 2 and n >= 3 * (k - 1)


def refined_free_bound(n: int, k: int) -> Fraction:
    """Arc bound ``C(n-k+1, 2) + 17/6 (k-1)(n-k+1)``, valid for n >= 3(k-1)."""
    if not refined_bound_applicable(n, k):
        raise FormulaDomainError(f"refined_free_bound needs k >= 2 and n >= 3(k-1), got n={n}, k={k}")
    return c2(n - k + 1) + Fraction(17, 6) * (k - 1) * (n - k + 1)


def binom_identity_check(a: int, b: int) -> bool:
    if a < 1 or b < 1:
        raise FormulaDomainError("binom_identity_check needs a, b >= 1")
    return c2(a + b) == c2(a) + c2(b) + a * b


def floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def decimal_string(q: Fraction, places: int = 6) -> str:
    """Decimal rendering by integer arithmetic, trailing zeros trimmed."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    scale = 10**places
    scaled = (2 * q.numerator * scale + q.denominator) // (2 * q.denominator)
    whole, frac = divmod(scaled, scale)
    frac_s = str(frac).rjust(places, "0").rstrip("0")
    return f"{sign}{whole}" + (f".{frac_s}" if frac_s else "")


def rational_json(q: Fraction | None) -> dict | None:
    if q is None:
        return None
    return {"num": q.numerator, "den": q.denominator, "decimal": decimal_string(q)}


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    sat_value: int | None
    ktree_arcs: int | None
    du_arcs: int | None
    conjecture_value: Fraction | None
    free_bound: Fraction | None
    refined_free_bound: Fraction | None
    du_applicable: bool
    free_bound_applicable: bool
    refined_bound_applicable: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "sat_value": self.sat_value,
            "ktree_arcs": self.ktree_arcs,
            "du_arcs": self.du_arcs,
            "conjecture_value": rational_json(self.conjecture_value),
            "free_bound": rational_json(self.free_bound),
            "refined_free_bound": rational_json(self.refined_free_bound),
            "applicable": {
                "du": self.du_applicable,
                "free_bound": self.free_bound_applicable,
                "refined_free_bound": self.refined_bound_applicable,
            },
        }


def bounds_report(n: int, k: int) -> BoundsReport:
    if k < 1 or n < k:
        raise FormulaDomainError(f"bounds need k >= 1 and n >= k, got n={n}, k={k}")
    du_ok = k >= 2 and n >= 2 * (k - 1)
    free_ok = k >= 2
    refined_ok = refined_bound_applicable(n, k)
    return BoundsReport(
        n=n,
        k=k,
        sat_value=sat_value(n, k),
        ktree_arcs=ktree_arc_count(n, k),
        du_arcs=du_arc_count(n, k) if du_ok else None,
        conjecture_value=conjecture_value(n, k),
        free_bound=free_bound(n, k) if free_ok else None,
        refined_free_bound=refined_free_bound(n, k) if refined_ok else None,
        du_applicable=du_ok,
        free_bound_applicable=free_ok,
        refined_bound_applicable=refined_ok,
    )
