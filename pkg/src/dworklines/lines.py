"""Points and lines of P^4, Pluecker coordinates, chart maps and the
phase/permutation symmetry group.

Coordinates may be any exact scalars (int, Fraction, Cyclo, TowerElement) or
SparsePolys when a whole family of lines is treated at once.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .numbers import Cyclo, from_json as field_from_json, mu_power, qdiv, to_json as field_to_json
from .polyring import SparsePoly, var

__all__ = [
    "DegenerateSpan", "BasePointOnHyperplane", "LineInHyperplane",
    "ProjPoint", "ProjLine", "SymmetryElement",
    "PAIRS", "plucker_embed", "plucker_quadrics", "parametrize_line", "psi_chart",
    "u_coordinates", "apply_symmetry", "act_on_plucker", "transform_parameter",
    "phase_group", "full_group", "stabilizer", "has_nontrivial_isotropy",
    "line_to_json", "line_from_json",
]

PAIRS = tuple(itertools.combinations(range(5), 2))
_PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}


class DegenerateSpan(ValueError):
    pass


class BasePointOnHyperplane(ValueError):
    pass


class LineInHyperplane(ValueError):
    pass


def _zero(x) -> bool:
    return not x


def _proportional(a: Sequence, b: Sequence) -> bool:
    """a and b equal up to a nonzero scalar (both assumed nonzero)."""
    if len(a) != len(b):
        return False
    k = next((i for i, x in enumerate(a) if not _zero(x)), None)
    if k is None or _zero(b[k]):
        return False
    ak, bk = a[k], b[k]
    return all(x * bk == y * ak for x, y in zip(a, b))


class ProjPoint:
    """A point of projective space; equality is up to a global scalar."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(coords)
        if all(_zero(c) for c in coords):
            raise DegenerateSpan("all coordinates vanish")
        self.coords = coords

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return _proportional(self.coords, other.coords)

    def __hash__(self):
        return hash(tuple(_zero(c) for c in self.coords))

    def scaled(self, lam) -> "ProjPoint":
        return ProjPoint([c * lam for c in self.coords])

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


class ProjLine:
    """A line of P^4 stored as an ordered spanning pair, Pluecker vector cached."""

    __slots__ = ("x", "y", "_plucker")

    def __init__(self, x, y):
        self.x = x if isinstance(x, ProjPoint) else ProjPoint(x)
        self.y = y if isinstance(y, ProjPoint) else ProjPoint(y)
        if len(self.x) != 5 or len(self.y) != 5:
            raise ValueError("lines live in P^4")
        self._plucker = None
        if all(_zero(p) for p in self.plucker):
            raise DegenerateSpan("spanning points are dependent")

    @property
    def span(self):
        return self.x, self.y

    @property
    def plucker(self) -> tuple:
        if self._plucker is None:
            x, y = self.x.coords, self.y.coords
            self._plucker = tuple(x[i] * y[j] - x[j] * y[i] for i, j in PAIRS)
        return self._plucker

    def p(self, i: int, j: int):
        if i == j:
            return 0
        if i < j:
            return self.plucker[_PAIR_INDEX[(i, j)]]
        return -self.plucker[_PAIR_INDEX[(j, i)]]

    def point(self, alpha, beta) -> ProjPoint:
        return ProjPoint([alpha * a + beta * b for a, b in zip(self.x, self.y)])

    def contains_point(self, z) -> bool:
        z = z.coords if isinstance(z, ProjPoint) else tuple(z)
        x, y = self.x.coords, self.y.coords
        # z lies on the line iff every 3x3 minor of (x; y; z) vanishes
        for i, j, k in itertools.combinations(range(5), 3):
            det = (x[i] * (y[j] * z[k] - y[k] * z[j])
                   - x[j] * (y[i] * z[k] - y[k] * z[i])
                   + x[k] * (y[i] * z[j] - y[j] * z[i]))
            if not _zero(det):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return _proportional(self.plucker, other.plucker)

    def __hash__(self):
        return hash(tuple(_zero(p) for p in self.plucker))

    def __repr__(self):
        return f"ProjLine({self.x!r}, {self.y!r})"


def plucker_embed(line: ProjLine) -> tuple:
    """The ten coordinates p_ij = x_i y_j - x_j y_i, i < j, in lexicographic order."""
    return line.plucker


def plucker_quadrics(p: Sequence) -> list:
    """The five quadrics cutting out G(2,5), evaluated at a Pluecker vector.

    For i<j<k<l: p_ij p_kl - p_ik p_jl + p_il p_jk.  The one on {0,1,2,3} is
    p01 p23 + p03 p12 + p02 p31 with p31 = -p13.
    """
    def P(i, j):
        return p[_PAIR_INDEX[(i, j)]]
    out = []
    for i, j, k, l in itertools.combinations(range(5), 4):
        out.append(P(i, j) * P(k, l) - P(i, k) * P(j, l) + P(i, l) * P(j, k))
    return out


def parametrize_line(line: ProjLine, alpha: str = "alpha", beta: str = "beta") -> list:
    """phi(alpha:beta) = alpha*x + beta*y as five SparsePolys of degree 1."""
    a, b = var(alpha), var(beta)
    return [a * xi + b * yi for xi, yi in zip(line.x, line.y)]


def _hyperplane_point(line: ProjLine, i: int, y: ProjPoint):
    # a second point of the line not proportional to y
    for w in (line.x, line.y):
        if not _proportional(w.coords, y.coords):
            break
    else:
        raise DegenerateSpan("could not find a second point")
    x = [y[i] * wk - w[i] * yk for wk, yk in zip(w, y)]
    if all(_zero(c) for c in x):
        raise LineInHyperplane(f"line lies in z_{i} = 0")
    return x


def u_coordinates(line: ProjLine, y, i: int = 0) -> tuple:
    """(x_j / y_j) where x is the intersection of the line with z_i = 0."""
    y = y if isinstance(y, ProjPoint) else ProjPoint(y)
    if not line.contains_point(y):
        raise ValueError("y is not on the line")
    if any(_zero(c) for c in y):
        raise BasePointOnHyperplane("some y_j vanishes")
    x = _hyperplane_point(line, i, y)
    return tuple(qdiv(xj, yj) for xj, yj in zip(x, y))


def psi_chart(i: int, line: ProjLine, y) -> ProjPoint:
    """The chart point (u_j)_{j != i} in P^3; u_i = 0 by construction."""
    u = u_coordinates(line, y, i)
    return ProjPoint([u[j] for j in range(5) if j != i])


# ----------------------------------------------------------------------------
# symmetries


@dataclass(frozen=True)
class SymmetryElement:
    """z_j -> mu^{e_j} z_{pi^-1(j)}; phases kept modulo a global phase (e_0 = 0).

    ``exponents`` are the e_j in Z/5 and ``perm`` is pi as a tuple with
    pi[k] the image of k.
    """

    exponents: tuple = (0, 0, 0, 0, 0)
    perm: tuple = (0, 1, 2, 3, 4)

    def __post_init__(self):
        e = tuple(int(x) % 5 for x in self.exponents)
        # normalize the global phase away; e_0 = 0 after shifting
        e = tuple((x - e[0]) % 5 for x in e)
        object.__setattr__(self, "exponents", e)
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != [0, 1, 2, 3, 4]:
            raise ValueError("perm must be a permutation of 0..4")

    @property
    def phases(self) -> tuple:
        return tuple(mu_power(e) for e in self.exponents)

    @property
    def product_exponent(self) -> int:
        return sum(self.exponents) % 5

    @property
    def product_phase(self) -> Cyclo:
        return mu_power(self.product_exponent)

    def inverse_perm(self) -> tuple:
        inv = [0] * 5
        for k, v in enumerate(self.perm):
            inv[v] = k
        return tuple(inv)

    def __mul__(self, other: "SymmetryElement") -> "SymmetryElement":
        pinv = self.inverse_perm()
        e = tuple(self.exponents[j] + other.exponents[pinv[j]] for j in range(5))
        perm = tuple(self.perm[other.perm[k]] for k in range(5))
        return SymmetryElement(e, perm)

    def is_identity(self) -> bool:
        return self.exponents == (0,) * 5 and self.perm == (0, 1, 2, 3, 4)

    def act_point(self, z: Sequence) -> list:
        pinv = self.inverse_perm()
        return [z[pinv[j]] * mu_power(self.exponents[j]) if self.exponents[j] else z[pinv[j]]
                for j in range(5)]


def apply_symmetry(g: SymmetryElement, line: ProjLine) -> ProjLine:
    return ProjLine(g.act_point(line.x.coords), g.act_point(line.y.coords))


def act_on_plucker(g: SymmetryElement, p: Sequence) -> tuple:
    """p'_ij = mu_i mu_j p_{pi^-1(i) pi^-1(j)} (antisymmetry respected)."""
    pinv = g.inverse_perm()
    out = []
    for i, j in PAIRS:
        a, b = pinv[i], pinv[j]
        v = p[_PAIR_INDEX[(a, b)]] if a < b else -p[_PAIR_INDEX[(b, a)]]
        e = (g.exponents[i] + g.exponents[j]) % 5
        out.append(v * mu_power(e) if e else v)
    return tuple(out)


def transform_parameter(g: SymmetryElement, t):
    """A_g carries X_t onto X_{t / mu} where mu is the product of the phases.

    Follows from F_t(A_g z) = F_{mu t}(z).
    """
    e = g.product_exponent
    return t * mu_power(-e) if e else t


def phase_group():
    """The 625 elements of the phase group (modulo global phase)."""
    for e in itertools.product(range(5), repeat=4):
        yield SymmetryElement((0,) + e)


def full_group(product_one: bool = False):
    """Phases times permutations: 5^4 * 120 elements (or the product-one part)."""
    for perm in itertools.permutations(range(5)):
        for e in itertools.product(range(5), repeat=4):
            if product_one and sum(e) % 5:
                continue
            yield SymmetryElement((0,) + e, perm)


def stabilizer(line: ProjLine, include_permutations: bool = False) -> list:
    """Brute-force stabilizer of a line (exact coordinates)."""
    p = line.plucker
    zero_pattern = tuple(_zero(x) for x in p)
    group = full_group() if include_permutations else phase_group()
    out = []
    for g in group:
        q = act_on_plucker(g, p)
        if tuple(_zero(x) for x in q) != zero_pattern:
            continue
        if _proportional(q, p):
            out.append(g)
    return out


def has_nontrivial_isotropy(line: ProjLine, include_permutations: bool = False) -> bool:
    return len(stabilizer(line, include_permutations)) > 1


def line_to_json(line: ProjLine) -> dict:
    def enc(c):
        if isinstance(c, SparsePoly):
            return c.to_json()
        return field_to_json(c)
    return {
        "span": [[enc(c) for c in line.x], [enc(c) for c in line.y]],
        "plucker": {f"p{i}{j}": enc(v) for (i, j), v in zip(PAIRS, line.plucker)},
    }


def line_from_json(obj) -> ProjLine:
    def dec(c):
        return field_from_json(c) if "tower" in c else SparsePoly.from_json(c)
    return ProjLine([dec(c) for c in obj["span"][0]], [dec(c) for c in obj["span"][1]])
