"""Cohomology of G(2,5) in the Schubert basis.

Classes are indexed by partitions (a1, a2) with 3 >= a1 >= a2 >= 0.  Products
use Pieri's rule for the special classes sigma_k = sigma_(k,0) and the
Giambelli determinant sigma_(a,b) = sigma_a sigma_b - sigma_(a+1) sigma_(b-1)
for everything else.  Partitions leaving the box vanish.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

__all__ = [
    "ArithmeticMismatch", "SchubertClass", "BOX", "sigma", "multiply", "pieri",
    "integrate", "incidence_decomposition", "dual", "PUSHFORWARD_H3",
]

ROWS, COLS = 2, 3
BOX = tuple((a, b) for a in range(COLS + 1) for b in range(a + 1) if b <= COLS)


class ArithmeticMismatch(AssertionError):
    pass


def _in_box(lam) -> bool:
    a, b = lam
    return COLS >= a >= b >= 0


def _label(lam) -> str:
    a, b = lam
    if lam == (0, 0):
        return "1"
    return f"s{a}" if b == 0 else f"s{a}{b}"


class SchubertClass:
    """An integer combination of Schubert classes; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        out = {}
        for lam, c in (coeffs or {}).items():
            lam = _key(lam)
            if c and _in_box(lam):
                out[lam] = out.get(lam, 0) + c
        self.coeffs = {k: v for k, v in sorted(out.items()) if v}

    def __add__(self, other):
        other = _coerce(other)
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            d[k] = d.get(k, 0) + v
        return SchubertClass(d)

    __radd__ = __add__

    def __neg__(self):
        return SchubertClass({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return SchubertClass({k: v * other for k, v in self.coeffs.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = sigma(0)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def degree_parts(self) -> dict:
        out = {}
        for (a, b), c in self.coeffs.items():
            out.setdefault(a + b, {})[(a, b)] = c
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in sorted(self.coeffs.items(), key=lambda kv: (-sum(kv[0]), kv[0])):
            lab = _label(lam)
            parts.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {_label(k): v for k, v in self.coeffs.items()}


def _key(lam):
    if isinstance(lam, int):
        return (lam, 0)
    lam = tuple(lam)
    if len(lam) == 1:
        return (lam[0], 0)
    if len(lam) > ROWS:
        if any(lam[ROWS:]):
            return (-1, -1)
        lam = lam[:ROWS]
    return lam


def _coerce(x) -> SchubertClass:
    if isinstance(x, SchubertClass):
        return x
    if isinstance(x, int):
        return SchubertClass({(0, 0): x})
    raise TypeError(f"cannot coerce {type(x).__name__}")


def sigma(a: int, b: int = 0) -> SchubertClass:
    """sigma_(a,b); sigma(2) and sigma(2, 0) are the same class."""
    return SchubertClass({(a, b): 1})


PUSHFORWARD_H3 = sigma(2)   # q_*(H^3) for the incidence correspondence


def pieri(k: int, lam) -> SchubertClass:
    """sigma_k * sigma_lam: add a horizontal strip of k boxes."""
    a1, a2 = lam
    out = {}
    if k == 0:
        return sigma(a1, a2)
    for c2 in range(a2, a1 + 1):
        c1 = a1 + a2 + k - c2
        if c1 >= a1 and c1 >= c2:
            out[(c1, c2)] = out.get((c1, c2), 0) + 1
    return SchubertClass(out)


def _special_product(x: SchubertClass, k: int) -> SchubertClass:
    if k < 0:
        return SchubertClass()
    out = SchubertClass()
    for lam, c in x.coeffs.items():
        out = out + pieri(k, lam) * c
    return out


def _times_basis(x: SchubertClass, lam) -> SchubertClass:
    a, b = lam
    if b == 0:
        return _special_product(x, a)
    # Giambelli for two rows
    return (_special_product(_special_product(x, a), b)
            - _special_product(_special_product(x, a + 1), b - 1))


def multiply(x: SchubertClass, y: SchubertClass) -> SchubertClass:
    x, y = _coerce(x), _coerce(y)
    out = SchubertClass()
    for lam, c in y.coeffs.items():
        out = out + _times_basis(x, lam) * c
    return out


def integrate(x: SchubertClass) -> int:
    """Degree: the coefficient of the point class sigma_33."""
    return _coerce(x).coeffs.get((COLS, COLS), 0)


def dual(lam) -> tuple:
    a, b = lam
    return (COLS - b, COLS - a)


@dataclass
class IncidenceTable:
    classes: dict
    expected: dict
    degrees: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.classes[k] == v for k, v in self.expected.items()) and \
            self.degrees.get("plucker") == 625 and self.degrees.get("threefold") == 250

    def to_json(self) -> dict:
        return {
            "classes": {k: v.to_json() for k, v in self.classes.items()},
            "expected": {k: v.to_json() for k, v in self.expected.items()},
            "degrees": dict(self.degrees),
            "holds": self.holds,
        }


def incidence_decomposition(strict: bool = True) -> IncidenceTable:
    """[I], its three excess components and the residual class of the surface."""
    s1 = sigma(1)
    I = s1 ** 4 * 5 ** 4
    I1 = sigma(3, 1) * 5
    I2 = sigma(2) * sigma(2) * 25
    I3 = s1 * s1 * sigma(2) * 125 - I2 * 3 - I1 * 15
    S = I - I1 * 50 - I2 * 15 - I3 * 10
    classes = {"I": I, "I1": I1, "I2": I2, "I3": I3, "S": S}
    expected = {
        "I": sigma(2, 2) * 1250 + sigma(3, 1) * 1875,
        "I3": sigma(3, 1) * 100 + sigma(2, 2) * 50,
        "S": sigma(2, 2) * 375 + sigma(3, 1) * 250,
    }
    degrees = {"plucker": integrate(s1 * s1 * S), "threefold": integrate(S * PUSHFORWARD_H3)}
    table = IncidenceTable(classes, expected, degrees)
    if strict and not table.holds:
        raise ArithmeticMismatch(str(table.to_json()))
    return table
