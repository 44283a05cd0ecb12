"""Exact arithmetic in Q(zeta_15), a single quintic radical extension of it,
and rigorous complex balls for numeric work.

Elements of Q(zeta_15) are stored as 8 integer numerators over one positive
common denominator, reduced modulo

    Phi_15(x) = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1.

The fifth root of unity used everywhere is ``MU = zeta^3`` and the cube root
of unity is ``XI = zeta^5``.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from numbers import Rational

import mpmath

__all__ = [
    "DivisionByZero", "MixedTower", "ZeroRadicand",
    "Cyclo", "Tower", "TowerElement", "ComplexApprox",
    "ZETA", "MU", "XI", "ONE", "ZERO",
    "radical_adjoin", "field_arith", "embed_complex", "mu_power", "xi_power",
    "to_json", "from_json", "as_field", "qdiv",
]

DEGREE = 8
# x^8 = x^7 - x^5 + x^4 - x^3 + x - 1
_PHI_TAIL = (-1, 1, 0, -1, 1, -1, 0, 1)
# Galois group of Q(zeta_15): exponents coprime to 15
UNITS = (1, 2, 4, 7, 8, 11, 13, 14)


class DivisionByZero(ZeroDivisionError):
    pass


class MixedTower(ValueError):
    """Operands live in incompatible radical extensions."""


class ZeroRadicand(ValueError):
    pass


def _reduce(c: list) -> list:
    # reduce a coefficient list of any length modulo Phi_15, in place, top down
    for d in range(len(c) - 1, DEGREE - 1, -1):
        top = c[d]
        if top:
            base = d - DEGREE
            for k in range(DEGREE):
                if _PHI_TAIL[k]:
                    c[base + k] += _PHI_TAIL[k] * top
        c[d] = 0
    del c[DEGREE:]
    while len(c) < DEGREE:
        c.append(0)
    return c


class Cyclo:
    """An element of Q(zeta_15) in the power basis 1, zeta, ..., zeta^7."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(0,) * DEGREE, den: int = 1, _normalized: bool = False):
        if _normalized:
            self.num = num
            self.den = den
            self._hash = None
            return
        num = list(num)
        if len(num) != DEGREE:
            num = _reduce(num + [0] * max(0, DEGREE - len(num)))
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num = [-x for x in num]
            den = -den
        g = den
        for x in num:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self.num = tuple(num)
        self.den = den
        self._hash = None

    # construction helpers
    @classmethod
    def from_rational(cls, q) -> "Cyclo":
        q = Fraction(q)
        return cls((q.numerator,) + (0,) * 7, q.denominator, _normalized=True)

    @classmethod
    def from_fractions(cls, coeffs) -> "Cyclo":
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls([int(c * den) for c in coeffs], den)

    @classmethod
    def zeta_power(cls, k: int) -> "Cyclo":
        return _ZETA_POWERS[k % 15]

    def coeffs(self) -> list:
        return [Fraction(x, self.den) for x in self.num]

    # predicates
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self):
        return any(self.num)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Cyclo):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return Cyclo.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, TowerElement):
            return NotImplemented
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return Cyclo([a + b for a, b in zip(self.num, o.num)], self.den)
        return Cyclo([a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                     self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(tuple(-x for x in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        if isinstance(other, TowerElement):
            return NotImplemented
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, TowerElement):
            return NotImplemented
        if isinstance(other, Cyclo):
            a, b = self.num, other.num
            prod = [0] * (2 * DEGREE - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            prod[i + j] += x * y
            return Cyclo(_reduce(prod), self.den * other.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        q = Fraction(other)
        return Cyclo([x * q.numerator for x in self.num], self.den * q.denominator)

    __rmul__ = __mul__

    def conjugate_by(self, k: int) -> "Cyclo":
        """Image under the automorphism zeta -> zeta^k (k coprime to 15)."""
        if math.gcd(k, 15) != 1:
            raise ValueError("k must be a unit mod 15")
        acc = [0] * DEGREE
        for i, x in enumerate(self.num):
            if x:
                p = _ZETA_POWERS[(i * k) % 15].num
                for j in range(DEGREE):
                    acc[j] += x * p[j]
        return Cyclo(acc, self.den)

    def norm(self) -> Fraction:
        acc = ONE
        for k in UNITS:
            acc = acc * self.conjugate_by(k)
        return acc.to_fraction()

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return Cyclo.from_rational(1 / self.to_fraction())
        others = ONE
        for k in UNITS[1:]:
            others = others * self.conjugate_by(k)
        n = (self * others).to_fraction()
        return others * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, TowerElement):
            return NotImplemented
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.den == other.den and self.num == other.num
        if isinstance(other, TowerElement):
            return other == self
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self.is_rational() and self.num[0] == q.numerator and self.den == q.denominator
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"Cyclo({self})"

    def __str__(self):
        parts = []
        for i, x in enumerate(self.num):
            if not x:
                continue
            c = Fraction(x, self.den)
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        s = " + ".join(parts).replace("+ -", "- ")
        return s


def _zeta_powers():
    out = []
    for k in range(15):
        c = [0] * max(DEGREE, k + 1)
        c[k] = 1
        out.append(Cyclo(tuple(_reduce(c)), 1, _normalized=True))
    return out


_ZETA_POWERS = _zeta_powers()
ZERO = Cyclo((0,) * DEGREE, 1, _normalized=True)
ONE = Cyclo((1,) + (0,) * 7, 1, _normalized=True)
ZETA = _ZETA_POWERS[1]
MU = _ZETA_POWERS[3]
XI = _ZETA_POWERS[5]


def mu_power(k: int) -> Cyclo:
    return _ZETA_POWERS[(3 * k) % 15]


def xi_power(k: int) -> Cyclo:
    return _ZETA_POWERS[(5 * k) % 15]


def qdiv(a, b):
    """Exact quotient; int/int stays rational instead of becoming a float."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise DivisionByZero("division by zero")
        q = Fraction(a, b)
        return q.numerator if q.denominator == 1 else q
    return a / b


def as_field(x):
    """Promote int/Fraction to Cyclo; leave field elements alone."""
    if isinstance(x, (Cyclo, TowerElement)):
        return x
    return Cyclo.from_rational(x)


# ----------------------------------------------------------------------------
# radical tower K[r]/(r^5 - c)


class Tower:
    """Descriptor of Q(zeta_15)[r]/(r^5 - c)."""

    __slots__ = ("radicand",)

    def __init__(self, radicand: Cyclo):
        radicand = as_field(radicand)
        if not isinstance(radicand, Cyclo):
            raise MixedTower("nested radicals are not supported")
        if radicand.is_zero():
            raise ZeroRadicand("radicand must be nonzero")
        self.radicand = radicand

    def __eq__(self, other):
        return isinstance(other, Tower) and self.radicand == other.radicand

    def __hash__(self):
        return hash(("tower", self.radicand))

    def __repr__(self):
        return f"Tower(r^5 = {self.radicand})"

    @property
    def r(self) -> "TowerElement":
        return TowerElement(self, (ZERO, ONE, ZERO, ZERO, ZERO))

    def element(self, coeffs) -> "TowerElement":
        coeffs = [as_field(c) for c in coeffs]
        coeffs += [ZERO] * (5 - len(coeffs))
        return TowerElement(self, coeffs)

    def lift(self, x) -> "TowerElement":
        if isinstance(x, TowerElement):
            if x.tower != self:
                raise MixedTower(f"{x.tower} vs {self}")
            return x
        return TowerElement(self, (as_field(x), ZERO, ZERO, ZERO, ZERO))

    def fifth_roots_of(self, q) -> list:
        """All fifth roots of ``q`` (a base-field element) lying in the tower.

        Searches the candidates s * r^k * mu^m with s a rational fifth root of
        q / c^k; complete for rational q and rational radicand, which is all
        that is needed here.
        """
        q = as_field(q)
        found = []
        c = self.radicand
        for k in range(5):
            ratio = q / (c ** k) if k else q
            s = _rational_fifth_root(ratio)
            if s is None:
                continue
            base = self.element([0] * k + [s])
            for m in range(5):
                cand = base * mu_power(m)
                if cand ** 5 == self.lift(q) and cand not in found:
                    found.append(cand)
        return found


def _rational_fifth_root(x: Cyclo):
    if not isinstance(x, Cyclo) or not x.is_rational():
        return None
    q = x.to_fraction()
    sign = -1 if q < 0 else 1
    n = _int_root5(abs(q.numerator))
    d = _int_root5(q.denominator)
    if n is None or d is None:
        return None
    return Fraction(sign * n, d)


def _int_root5(n: int):
    if n == 0:
        return 0
    r = round(n ** 0.2)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** 5 == n:
            return cand
    # large integers: integer Newton
    lo, hi = 0, 1 << (n.bit_length() // 5 + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** 5 < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** 5 == n else None


def radical_adjoin(c) -> Tower:
    """Return the tower in which r^5 = c exactly."""
    return Tower(as_field(c))


class TowerElement:
    """sum_k coeffs[k] r^k with coeffs in Q(zeta_15) and r^5 = tower.radicand."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: Tower, coeffs):
        self.tower = tower
        self.coeffs = tuple(coeffs)

    def _lift(self, other):
        if isinstance(other, TowerElement):
            if other.tower != self.tower:
                raise MixedTower(f"{self.tower} vs {other.tower}")
            return other
        if isinstance(other, (Cyclo, int, Fraction)):
            return self.tower.lift(other)
        return NotImplemented

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def in_base(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[1:])

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return TowerElement(self.tower, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return TowerElement(self.tower, [a * other for a in self.coeffs])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        prod = [ZERO] * 9
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(o.coeffs):
                if not y.is_zero():
                    prod[i + j] = prod[i + j] + x * y
        c = self.tower.radicand
        out = [prod[k] + (prod[k + 5] * c if k + 5 < 9 else ZERO) for k in range(5)]
        return TowerElement(self.tower, out)

    __rmul__ = __mul__

    def substitute_r(self, factor: Cyclo) -> "TowerElement":
        """Image under r -> factor * r (factor a fifth root of unity)."""
        out, p = [], ONE
        for a in self.coeffs:
            out.append(a * p)
            p = p * factor
        return TowerElement(self.tower, out)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.in_base():
            return self.tower.lift(self.coeffs[0].inverse())
        others = self.tower.lift(1)
        for k in range(1, 5):
            others = others * self.substitute_r(mu_power(k))
        n = self * others
        if not n.in_base():
            raise ArithmeticError("norm left the base field")
        return others * n.coeffs[0].inverse()

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.tower.lift(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, TowerElement):
            return self.tower == other.tower and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.in_base() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.in_base():
            return hash(self.coeffs[0])
        return hash((self.tower, self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
            terms.append(f"({c})" + ("*" + mono if mono else ""))
        return "TowerElement(" + (" + ".join(terms) or "0") + f"; {self.tower})"


def field_arith(a, b, op: str):
    """Dispatch helper: op in {'add', 'sub', 'mul', 'div'}."""
    a, b = as_field(a), as_field(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if (isinstance(b, Cyclo) and b.is_zero()) or (isinstance(b, TowerElement) and b.is_zero()):
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ----------------------------------------------------------------------------
# complex balls


class ComplexApprox:
    """A complex ball: midpoint ``mid`` (mpc) and rigorous radius ``rad``.

    Every operation rounds the midpoint to the working precision and adds a
    bound on that rounding to the radius, so the represented disc always
    contains the true value.
    """

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad=0, prec: int = 128):
        with mpmath.workprec(prec):
            if isinstance(mid, Fraction):
                # rounded quotient; one ulp joins the radius
                q = mpmath.mpf(mid.numerator) / mid.denominator
                self.mid = mpmath.mpc(q)
                self.rad = mpmath.mpf(rad) + abs(q) * mpmath.ldexp(1, 1 - prec)
            else:
                self.mid = mpmath.mpc(mid)
                self.rad = mpmath.mpf(rad)
        self.prec = prec

    @property
    def real(self):
        return self.mid.real

    @property
    def imag(self):
        return self.mid.imag

    @property
    def precision_bits(self):
        return self.prec

    @property
    def error_bound(self) -> float:
        return float(self.rad)

    def _ulp(self, z):
        # bound for one rounding of z at working precision (both components)
        return (abs(z.real) + abs(z.imag)) * mpmath.ldexp(1, 1 - self.prec)

    def _wrap(self, other):
        if isinstance(other, ComplexApprox):
            return other
        if isinstance(other, (Cyclo, TowerElement)):
            # principal embedding
            return embed_complex(other, 0, self.prec)
        return ComplexApprox(other, 0, self.prec)

    def __add__(self, other):
        o = self._wrap(other)
        with mpmath.workprec(self.prec):
            m = self.mid + o.mid
            r = self.rad + o.rad + self._ulp(m)
        return ComplexApprox(m, r, self.prec)

    __radd__ = __add__

    def __neg__(self):
        # negate at working precision; the ambient mpmath context may be coarser
        with mpmath.workprec(self.prec):
            m = -self.mid
        return ComplexApprox(m, self.rad, self.prec)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        with mpmath.workprec(self.prec):
            m = self.mid * o.mid
            r = (abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
                 + 2 * self._ulp(m))
        return ComplexApprox(m, r, self.prec)

    __rmul__ = __mul__

    def inverse(self):
        with mpmath.workprec(self.prec):
            a = abs(self.mid)
            if a <= self.rad:
                raise DivisionByZero("ball contains zero")
            m = 1 / self.mid
            # |1/z - 1/m| <= rad / (|m| (|m| - rad))
            r = self.rad / (a * (a - self.rad)) + 2 * self._ulp(m)
        return ComplexApprox(m, r, self.prec)

    def __truediv__(self, other):
        return self * self._wrap(other).inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ComplexApprox(1, 0, self.prec)
        for _ in range(n):
            result = result * self
        return result

    def abs_upper(self):
        with mpmath.workprec(self.prec):
            a = abs(self.mid)
            return a + self.rad + self._ulp(a)

    def contains_zero(self) -> bool:
        with mpmath.workprec(self.prec):
            return abs(self.mid) <= self.rad + self._ulp(abs(self.mid))

    def __repr__(self):
        with mpmath.workprec(self.prec):
            return f"ComplexApprox({mpmath.nstr(self.mid, 20)} +/- {mpmath.nstr(self.rad, 3)})"


def _zeta_root(k: int, prec: int) -> ComplexApprox:
    with mpmath.workprec(prec + 20):
        z = mpmath.expjpi(mpmath.mpf(2 * k) / 15)
    return ComplexApprox(z, mpmath.ldexp(1, -prec - 10), prec)


def _embed_cyclo(x: Cyclo, k: int, prec: int) -> ComplexApprox:
    z = _zeta_root(k, prec)
    acc = ComplexApprox(0, 0, prec)
    p = ComplexApprox(1, 0, prec)
    for i, c in enumerate(x.num):
        if c:
            acc = acc + p * c
        p = p * z
    return acc / x.den if x.den != 1 else acc


def embed_complex(x, embedding: int = 0, precision_bits: int = 128) -> ComplexApprox:
    """Rigorous complex enclosure of a field element.

    ``embedding`` selects zeta -> exp(2 pi i k / 15) with k = UNITS[embedding % 8]
    and, for tower elements, r -> principal fifth root of the embedded radicand
    times exp(2 pi i m / 5) with m = embedding // 8 (mod 5). Radii stay below
    2^(-precision_bits + 8) times the size of the value for moderate inputs.
    """
    prec = precision_bits
    k = UNITS[embedding % 8]
    if isinstance(x, (int, Fraction)):
        x = Cyclo.from_rational(x)
    if isinstance(x, Cyclo):
        return _embed_cyclo(x, k, prec)
    if isinstance(x, TowerElement):
        m = (embedding // 8) % 5
        c = _embed_cyclo(x.tower.radicand, k, prec + 20)
        with mpmath.workprec(prec + 40):
            root = mpmath.root(c.mid, 5) * mpmath.expjpi(mpmath.mpf(2 * m) / 5)
            # |d c^(1/5)| = |dc| / (5 |c|^(4/5)); the factor 2 covers the
            # second-order term since rad(c) is far below |c|
            rrad = 2 * c.rad / (5 * abs(c.mid) ** (mpmath.mpf(4) / 5)) + mpmath.ldexp(1, -prec - 10)
        r = ComplexApprox(root, rrad, prec)
        acc = ComplexApprox(0, 0, prec)
        p = ComplexApprox(1, 0, prec)
        for coeff in x.coeffs:
            if not coeff.is_zero():
                acc = acc + p * _embed_cyclo(coeff, k, prec)
            p = p * r
        return acc
    raise TypeError(f"cannot embed {type(x).__name__}")


# ----------------------------------------------------------------------------
# JSON


def _cyclo_json(x: Cyclo):
    return [[str(f.numerator), str(f.denominator)] for f in x.coeffs()]


def to_json(x) -> dict:
    """{"tower": null | radicand coeffs, "coeffs": [["num","den"], ...]}."""
    if isinstance(x, (int, Fraction)):
        x = Cyclo.from_rational(x)
    if isinstance(x, Cyclo):
        return {"tower": None, "coeffs": _cyclo_json(x)}
    if isinstance(x, TowerElement):
        return {"tower": {"radicand": _cyclo_json(x.tower.radicand)},
                "coeffs": [_cyclo_json(c) for c in x.coeffs]}
    raise TypeError(type(x).__name__)


def _cyclo_from(pairs) -> Cyclo:
    return Cyclo.from_fractions(Fraction(int(n), int(d)) for n, d in pairs)


def from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if obj.get("tower") is None:
        return _cyclo_from(obj["coeffs"])
    tower = Tower(_cyclo_from(obj["tower"]["radicand"]))
    return TowerElement(tower, [_cyclo_from(c) for c in obj["coeffs"]])
