"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a map from monomials to nonzero coefficients.  Monomials are
packed into a single Python int, 8 bits per variable, with the first
generator in the most significant byte; integer order on packed monomials is
then lexicographic order on exponent vectors.  Terms are printed in graded
lexicographic order (total degree first, ties broken lexicographically with
the generator order), highest first.

Generators are kept sorted by a natural key (``u2 < u10 < v0 < y3``), so two
polynomials built from the same names share a generator tuple and arithmetic
between them needs no repacking.

Coefficients may be ``int``, ``Fraction``, ``Cyclo`` or ``TowerElement``.
"""
from __future__ import annotations

import heapq
import itertools
import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

import mpmath

from .numbers import ComplexApprox, Cyclo, TowerElement, from_json as _field_from_json, to_json as _field_to_json

__all__ = [
    "SparsePoly", "UnknownVariable", "OutOfRange", "NotDivisible", "DegreeCapExceeded",
    "var", "variables", "const", "elementary_symmetric", "sigma_weighted",
    "vandermonde_delta", "g_poly", "G_poly", "vandermonde_matrix", "determinant",
    "natural_key", "DEGREE_CAP",
]

# scalars accepted as coefficients; balls are never pruned as zero
_SCALARS = (int, Fraction, Cyclo, TowerElement, ComplexApprox,
            float, complex, mpmath.mpf, mpmath.mpc)

BITS = 8
MASK = (1 << BITS) - 1
DEGREE_CAP = 64


class UnknownVariable(KeyError):
    pass


class OutOfRange(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class DegreeCapExceeded(OverflowError):
    pass


_KEY_RE = re.compile(r"(\d+)")


def natural_key(name: str):
    return tuple(int(p) if p.isdigit() else p for p in _KEY_RE.split(name))


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _unpack(m: int, n: int) -> tuple:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = m & MASK
        m >>= BITS
    return tuple(out)


def _pack(exps: Sequence[int]) -> int:
    m = 0
    for e in exps:
        if e < 0:
            raise ValueError("negative exponent")
        if e > DEGREE_CAP:
            raise DegreeCapExceeded(f"exponent {e} exceeds cap {DEGREE_CAP}")
        m = (m << BITS) | e
    return m


def _mdeg(m: int) -> int:
    d = 0
    while m:
        d += m & MASK
        m >>= BITS
    return d


class SparsePoly:
    __slots__ = ("gens", "terms", "_degs")

    def __init__(self, terms: Mapping[int, object] | None = None, gens: Sequence[str] = (),
                 _clean: bool = False):
        self.gens = tuple(gens)
        if terms is None:
            terms = {}
        if _clean:
            self.terms = terms
        else:
            self.terms = {m: _norm(c) for m, c in terms.items() if c}
        self._degs = None

    # -- construction -------------------------------------------------------
    @classmethod
    def from_dict(cls, d: Mapping[tuple, object], gens: Sequence[str]) -> "SparsePoly":
        """Build from {exponent tuple: coeff} with exponents aligned to ``gens``."""
        gens = tuple(gens)
        order = sorted(range(len(gens)), key=lambda i: natural_key(gens[i]))
        sgens = tuple(gens[i] for i in order)
        if len(set(sgens)) != len(sgens):
            raise ValueError("duplicate generator names")
        terms: dict = {}
        for exps, c in d.items():
            if len(exps) != len(gens):
                raise ValueError("exponent length does not match gens")
            m = _pack([exps[i] for i in order])
            terms[m] = terms.get(m, 0) + c
        return cls(terms, sgens)

    @classmethod
    def constant(cls, c, gens: Sequence[str] = ()) -> "SparsePoly":
        return cls({0: c}, tuple(sorted(gens, key=natural_key)))

    # -- generator alignment ------------------------------------------------
    def with_gens(self, gens: Sequence[str]) -> "SparsePoly":
        """Re-express over a superset ``gens`` (sorted by natural key)."""
        gens = tuple(gens)
        if gens == self.gens:
            return self
        pos = {g: i for i, g in enumerate(gens)}
        try:
            idx = [pos[g] for g in self.gens]
        except KeyError as exc:
            raise UnknownVariable(str(exc)) from None
        n_old, n_new = len(self.gens), len(gens)
        shifts = [BITS * (n_new - 1 - i) for i in idx]
        terms = {}
        for m, c in self.terms.items():
            e = _unpack(m, n_old)
            nm = 0
            for k, s in zip(e, shifts):
                if k:
                    nm |= k << s
            terms[nm] = c
        return SparsePoly(terms, gens, _clean=True)

    def _align(self, other: "SparsePoly"):
        if self.gens == other.gens:
            return self, other
        gens = tuple(sorted(set(self.gens) | set(other.gens), key=natural_key))
        return self.with_gens(gens), other.with_gens(gens)

    def _lift(self, other):
        if isinstance(other, SparsePoly):
            return self._align(other)
        if isinstance(other, _SCALARS):
            return self, SparsePoly({0: other} if other else {}, self.gens, _clean=True)
        return None

    def prune(self) -> "SparsePoly":
        """Drop generators that do not occur."""
        used = [False] * len(self.gens)
        n = len(self.gens)
        for m in self.terms:
            e = _unpack(m, n)
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        gens = tuple(g for g, u in zip(self.gens, used) if u)
        if len(gens) == n:
            return self
        keep = [i for i, u in enumerate(used) if u]
        terms = {}
        for m, c in self.terms.items():
            e = _unpack(m, n)
            terms[_pack([e[i] for i in keep])] = c
        return SparsePoly(terms, gens, _clean=True)

    # -- basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def monomial_count(self) -> int:
        return len(self.terms)

    def exponents(self):
        n = len(self.gens)
        for m, c in self.terms.items():
            yield _unpack(m, n), c

    def as_dict(self) -> dict:
        return dict(self.exponents())

    def degrees(self) -> tuple:
        """Per-generator degree."""
        if self._degs is None:
            n = len(self.gens)
            d = [0] * n
            for m in self.terms:
                e = _unpack(m, n)
                for i in range(n):
                    if e[i] > d[i]:
                        d[i] = e[i]
            self._degs = tuple(d)
        return self._degs

    def degree(self, name: str | None = None) -> int:
        if name is None:
            return self.total_degree()
        if name not in self.gens:
            return 0
        return self.degrees()[self.gens.index(name)]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(_mdeg(m) for m in self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def is_homogeneous(self) -> bool:
        return len({_mdeg(m) for m in self.terms}) <= 1

    def leading_term(self):
        m = max(self.terms, key=lambda k: (_mdeg(k), k))
        return m, self.terms[m]

    def coefficient(self, mono: Mapping[str, int]):
        for g in mono:
            if g not in self.gens and mono[g]:
                return 0
        m = _pack([mono.get(g, 0) for g in self.gens])
        return self.terms.get(m, 0)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if len(a.terms) < len(b.terms):
            a, b = b, a
        res = dict(a.terms)
        for m, c in b.terms.items():
            v = res.get(m)
            if v is None:
                res[m] = c
            else:
                v = v + c
                if v:
                    res[m] = _norm(v)
                else:
                    del res[m]
        return SparsePoly(res, a.gens, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({m: -c for m, c in self.terms.items()}, self.gens, _clean=True)

    def __sub__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def scale(self, c) -> "SparsePoly":
        if not c:
            return SparsePoly({}, self.gens, _clean=True)
        return SparsePoly({m: _norm(v * c) for m, v in self.terms.items()}, self.gens)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if not a.terms or not b.terms:
            return SparsePoly({}, a.gens, _clean=True)
        da, db = a.degrees(), b.degrees()
        for x, y in zip(da, db):
            if x + y > DEGREE_CAP:
                raise DegreeCapExceeded(f"product degree {x + y} exceeds cap {DEGREE_CAP}")
        if len(a.terms) < len(b.terms):
            a, b = b, a
        res: dict = {}
        get = res.get
        bitems = list(b.terms.items())
        for m1, c1 in a.terms.items():
            for m2, c2 in bitems:
                m = m1 + m2
                res[m] = get(m, 0) + c1 * c2
        return SparsePoly(res, a.gens)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly({0: 1}, self.gens, _clean=True)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1, 1) / other)
        if isinstance(other, (Cyclo, TowerElement)):
            return self.scale(other.inverse())
        if isinstance(other, SparsePoly):
            return self.exact_div(other)
        return NotImplemented

    def exact_div(self, other: "SparsePoly") -> "SparsePoly":
        """Quotient of an exact division, by leading-term peeling.

        The candidate quotient is multiplied back and compared; a nonzero
        remainder raises ``NotDivisible``.
        """
        a, b = self._align(other)
        if not b.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        n = len(a.gens)
        lm, lc = b.leading_term()
        lexp = _unpack(lm, n)
        inv = (Fraction(1) / lc) if isinstance(lc, (int, Fraction)) else lc.inverse()
        rem = dict(a.terms)
        heap = [(-_mdeg(m), -m) for m in rem]
        heapq.heapify(heap)
        quot: dict = {}
        bitems = list(b.terms.items())
        while rem:
            while True:
                _, negm = heapq.heappop(heap)
                m = -negm
                if m in rem:
                    break
            c = rem[m]
            e = _unpack(m, n)
            if any(x < y for x, y in zip(e, lexp)):
                raise NotDivisible("leading monomial not divisible")
            qm = m - lm
            qc = _norm(c * inv)
            quot[qm] = qc
            for m2, c2 in bitems:
                mm = qm + m2
                v = rem.get(mm)
                if v is None:
                    rem[mm] = _norm(-qc * c2)
                    heapq.heappush(heap, (-_mdeg(mm), -mm))
                else:
                    v = v - qc * c2
                    if v:
                        rem[mm] = _norm(v)
                    else:
                        del rem[mm]
        q = SparsePoly(quot, a.gens, _clean=True)
        if q * b != a:
            raise NotDivisible("multiply-back check failed")
        return q

    def divides(self, other: "SparsePoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisible:
            return False

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            a, b = self._align(other)
            return a.terms == b.terms
        if isinstance(other, (int, Fraction, Cyclo, TowerElement)):
            if not other:
                return not self.terms
            return len(self.terms) == 1 and self.terms.get(0, 0) == other
        return NotImplemented

    def __hash__(self):
        p = self.prune()
        return hash((p.gens, frozenset(p.terms.items())))

    # -- calculus and substitution -----------------------------------------
    def diff(self, name: str, order: int = 1) -> "SparsePoly":
        if name not in self.gens:
            return SparsePoly({}, self.gens, _clean=True)
        i = self.gens.index(name)
        shift = BITS * (len(self.gens) - 1 - i)
        one = 1 << shift
        p = self
        for _ in range(order):
            res = {}
            for m, c in p.terms.items():
                e = (m >> shift) & MASK
                if e:
                    res[m - one] = _norm(c * e)
            p = SparsePoly(res, self.gens, _clean=True)
        return p

    def substitute(self, mapping: Mapping[str, object]) -> "SparsePoly":
        """Simultaneous substitution of generators by polynomials or scalars."""
        for k in mapping:
            if not isinstance(k, str):
                raise TypeError("substitution keys are generator names")
        keys = [k for k in mapping if k in self.gens]
        if not keys:
            return self
        n = len(self.gens)
        idx = [self.gens.index(k) for k in keys]
        shifts = [BITS * (n - 1 - i) for i in idx]
        clear = 0
        for s in shifts:
            clear |= MASK << s
        groups: dict = {}
        for m, c in self.terms.items():
            key = tuple((m >> s) & MASK for s in shifts)
            rest = m & ~clear
            groups.setdefault(key, {})[rest] = c
        vals = [mapping[k] for k in keys]
        polys = [v for v in vals if isinstance(v, SparsePoly)]
        gens = set(self.gens)
        for v in polys:
            gens |= set(v.gens)
        gens = tuple(sorted(gens, key=natural_key))
        power_cache: dict = {}

        def power(j, e):
            key = (j, e)
            if key not in power_cache:
                v = vals[j]
                if isinstance(v, SparsePoly):
                    power_cache[key] = v.with_gens(gens) ** e
                else:
                    power_cache[key] = v ** e
            return power_cache[key]

        total = SparsePoly({}, gens, _clean=True)
        for key, rest_terms in groups.items():
            rest = SparsePoly(rest_terms, self.gens, _clean=True).with_gens(gens)
            scalar = 1
            factor = None
            for j, e in enumerate(key):
                if not e:
                    continue
                pw = power(j, e)
                if isinstance(pw, SparsePoly):
                    factor = pw if factor is None else factor * pw
                else:
                    scalar = scalar * pw
            term = rest.scale(scalar) if not (scalar == 1) else rest
            if factor is not None:
                term = term * factor
            total = total + term
        return total

    def evaluate(self, point: Mapping[str, object]):
        """Value at a point assigning every occurring generator."""
        p = self.substitute(point)
        p = p.prune()
        if not p.is_constant():
            missing = [g for g in p.gens]
            raise UnknownVariable(f"unassigned generators {missing}")
        return p.constant_term()

    def permute(self, mapping: Mapping[str, str]) -> "SparsePoly":
        """Rename generators simultaneously (a permutation or injective renaming)."""
        new = [mapping.get(g, g) for g in self.gens]
        if len(set(new)) != len(new):
            raise ValueError("renaming is not injective")
        return SparsePoly.from_dict(self.as_dict(), new)

    def is_symmetric(self, names: Sequence[str]) -> bool:
        names = list(names)
        for g in names:
            if g not in self.gens:
                # symmetric only if no listed variable occurs at all
                if any(self.degree(h) for h in names):
                    return False
                return True
        for a, b in zip(names, names[1:]):
            if self.permute({a: b, b: a}) != self:
                return False
        if len(names) > 2 and self.permute({names[0]: names[-1], names[-1]: names[0]}) != self:
            return False
        return True

    def coeffs_in(self, names: Sequence[str]) -> dict:
        """Split as sum of (monomial in ``names``) * (poly in the rest)."""
        n = len(self.gens)
        idx = [self.gens.index(x) if x in self.gens else None for x in names]
        shifts = [None if i is None else BITS * (n - 1 - i) for i in idx]
        clear = 0
        for s in shifts:
            if s is not None:
                clear |= MASK << s
        out: dict = {}
        for m, c in self.terms.items():
            key = tuple(0 if s is None else (m >> s) & MASK for s in shifts)
            out.setdefault(key, {})[m & ~clear] = c
        return {k: SparsePoly(v, self.gens, _clean=True) for k, v in out.items()}

    def map_coeffs(self, fn) -> "SparsePoly":
        return SparsePoly({m: fn(c) for m, c in self.terms.items()}, self.gens)

    # -- text and JSON ------------------------------------------------------
    def sorted_terms(self):
        n = len(self.gens)
        ms = sorted(self.terms, key=lambda k: (_mdeg(k), k), reverse=True)
        return [(_unpack(m, n), self.terms[m]) for m in ms]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k)
            cs = str(c) if isinstance(c, (int, Fraction)) else f"({c})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        s = str(self)
        if len(s) > 200:
            s = s[:200] + " ..."
        return f"SparsePoly({s})"

    def to_json(self) -> dict:
        return {
            "gens": list(self.gens),
            "terms": [[list(e), _field_to_json(c)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj) -> "SparsePoly":
        gens = obj["gens"]
        d = {}
        for e, c in obj["terms"]:
            v = _field_from_json(c)
            if isinstance(v, Cyclo) and v.is_rational():
                v = _norm(v.to_fraction())
            d[tuple(e)] = v
        return cls.from_dict(d, gens)


# ----------------------------------------------------------------------------
# constructors


def var(name: str) -> SparsePoly:
    return SparsePoly({1: 1}, (name,), _clean=True)


def variables(names: str | Iterable[str]) -> list:
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return [var(n) for n in names]


def const(c, gens: Sequence[str] = ()) -> SparsePoly:
    return SparsePoly.constant(c, gens)


def _as_polys(vars_) -> list:
    out = []
    for v in vars_:
        if isinstance(v, str):
            out.append(var(v))
        elif isinstance(v, SparsePoly):
            out.append(v)
        else:
            raise TypeError("variables are names or SparsePoly generators")
    return out


def _common_gens(polys) -> tuple:
    gens = set()
    for p in polys:
        gens |= set(p.gens)
    return tuple(sorted(gens, key=natural_key))


def elementary_symmetric(k: int, vars_: Sequence) -> SparsePoly:
    """s_k over exactly the listed variables, with s_0 = 1."""
    vs = _as_polys(vars_)
    if not 0 <= k <= len(vs):
        raise OutOfRange(f"k={k} outside 0..{len(vs)}")
    gens = _common_gens(vs)
    vs = [v.with_gens(gens) for v in vs]
    total = SparsePoly({}, gens, _clean=True)
    if k == 0:
        return SparsePoly({0: 1}, gens, _clean=True)
    terms = {}
    ms = [next(iter(v.terms)) for v in vs]
    for combo in itertools.combinations(ms, k):
        terms[sum(combo)] = 1
    total = SparsePoly(terms, gens, _clean=True)
    return total


def sigma_weighted(k: int, u: Sequence[str] = ("u0", "u1", "u2", "u3", "u4"),
                   y: Sequence[str] = ("y0", "y1", "y2", "y3", "y4")) -> SparsePoly:
    """sum_i u_i^k y_i^5."""
    if not 0 <= k <= 5:
        raise OutOfRange(f"k={k} outside 0..5")
    total = SparsePoly()
    for ui, yi in zip(u, y):
        total = total + var(ui) ** k * var(yi) ** 5
    return total


def vandermonde_delta(vars_: Sequence) -> SparsePoly:
    """prod_{j>k} (v_j - v_k) over the listed order."""
    vs = _as_polys(vars_)
    if len(vs) < 2:
        raise OutOfRange("need at least two variables")
    gens = _common_gens(vs)
    vs = [v.with_gens(gens) for v in vs]
    out = SparsePoly({0: 1}, gens, _clean=True)
    for j in range(len(vs)):
        for k in range(j):
            out = out * (vs[j] - vs[k])
    return out


def g_poly(vars_: Sequence) -> SparsePoly:
    """s_2^2 - 3 s_1 s_3 + 12 s_4 in four variables."""
    if len(vars_) != 4:
        raise OutOfRange("g takes exactly four variables")
    s1, s2, s3, s4 = (elementary_symmetric(k, vars_) for k in range(1, 5))
    return s2 * s2 - s1 * s3 * 3 + s4 * 12


def G_poly(vars_: Sequence = ("u0", "u1", "u2", "u3", "u4")) -> SparsePoly:
    """prod_j g(u^j), u^j meaning u with u_j omitted."""
    vars_ = list(vars_)
    out = None
    for j in range(len(vars_)):
        gj = g_poly(vars_[:j] + vars_[j + 1:])
        out = gj if out is None else out * gj
    return out


def vandermonde_matrix(vars_: Sequence) -> list:
    """Rows k = 0..n-1, columns l: entry v_l^k."""
    vs = _as_polys(vars_)
    gens = _common_gens(vs)
    vs = [v.with_gens(gens) for v in vs]
    return [[v ** k for v in vs] for k in range(len(vs))]


def determinant(matrix: Sequence[Sequence]) -> object:
    """Fraction-free Bareiss determinant of a square matrix.

    Entries may be SparsePolys or scalars; every division is exact.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_zero(x) -> bool:
    return not x


def _exact(num, den):
    if isinstance(den, int) and den == 1:
        return num
    if isinstance(num, SparsePoly):
        if isinstance(den, SparsePoly):
            if den.is_constant():
                return num / den.constant_term()
            return num.exact_div(den)
        return num / den
    if isinstance(den, SparsePoly):
        return SparsePoly.constant(num).exact_div(den)
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if r:
            return Fraction(num, den)
        return q
    return num / den


def binomial(n: int, k: int) -> int:
    return comb(n, k)
