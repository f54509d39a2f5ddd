"""Paths as words in the elementary matrices ``E(a) = [[a, 1], [-1, 0]]``.

A word ``(c_1, ..., c_m)`` evaluates to ``sign * E(c_1) ... E(c_m)``.  Reading
the products of its right-hand factors, ``I``, ``E(c_m)``, ``E(c_{m-1})E(c_m)``
and so on, the first rows trace a path of length ``m`` from the first basis
vector; the second basis vector is the vertex "before" the start.  In the
standard basis ``(x, f_1)`` the full product has ``y`` as its first row.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

from .core import DistantGraphError, IVec2, NonUnimodular, ProjPoint, det2, point
from .transition import TR, TransitionData, transition


class BadSlope(DistantGraphError):
    pass


class Mat2(NamedTuple):
    m11: int
    m12: int
    m21: int
    m22: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self
        e, f, g, h = other
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def row1(self) -> tuple[int, int]:
        return self.m11, self.m12

    @property
    def row2(self) -> tuple[int, int]:
        return self.m21, self.m22


IDENTITY = Mat2(1, 0, 0, 1)


def e_matrix(a: int) -> Mat2:
    return Mat2(a, 1, -1, 0)


@dataclass(frozen=True)
class EWord:
    sign: int
    coeffs: tuple[int, ...]
    cf_index: int | None = None  # n of the continued fraction a standard word came from

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_dict(self) -> dict:
        return {"sign": self.sign, "coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def eval_word(w: EWord) -> Mat2:
    m = IDENTITY
    for c in w.coeffs:
        m = m @ e_matrix(c)
    return m if w.sign == 1 else -m


@dataclass(frozen=True)
class CFExpansion:
    d: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.d) - 1

    def value(self):
        from fractions import Fraction

        v = Fraction(self.d[-1])
        for digit in reversed(self.d[:-1]):
            v = digit + 1 / v
        return v


def cf_expand(p: int, q: int) -> CFExpansion:
    """Continued fraction of ``q/p >= 2`` whose last digit exceeds one (when n >= 1)."""
    if p < 1 or gcd(p, q) != 1:
        raise NonUnimodular(f"need p >= 1 and gcd(p, q) = 1, got ({p}, {q})")
    if q < 2 * p:
        raise BadSlope(f"slope {q}/{p} is below 2")
    d = []
    num, den = q, p
    while den:
        k, rem = divmod(num, den)
        d.append(k)
        num, den = den, rem
    if len(d) > 1 and d[-1] == 1:
        d.pop()
        d[-1] += 1
    return CFExpansion(tuple(d))


@dataclass(frozen=True)
class StandardBasis:
    u: IVec2
    v: IVec2
    coords: tuple[int, int]  # y = p*u + q*v with q/p >= 2

    def to_plane(self, s: int, t: int) -> IVec2:
        return self.u.scale(s) + self.v.scale(t)

    def from_plane(self, w) -> tuple[int, int]:
        d = det2(self.u, self.v)
        return det2(w, self.v) * d, det2(self.u, w) * d


def standard_basis(x, y, td: TransitionData | None = None) -> StandardBasis:
    """Basis ``(x, f_1)``, or ``(-x, e_1)`` when the slope of ``y`` lies in ``[1, 2)``.

    In both cases the second vector is the first vertex on the left side of
    the transition, so the standard path leaves ``x`` through it.
    """
    if td is None:
        td = transition(x, y)
    xv, yv = td.x_vec, td.y_vec
    f1 = td.f_vecs[0]
    if td.orientation == TR:
        u, v = xv, f1
    else:
        u, v = -xv, f1
    p, q = det2(yv, v) * det2(u, v), det2(u, yv) * det2(u, v)
    return StandardBasis(u, v, (p, q))


def standard_word(x, y, td: TransitionData | None = None) -> EWord:
    """The word of the standard path: ``E(+-d_n) ... E(d_1) E(-d_0) E(0)``.

    The k-th digit enters with sign ``(-1)**(k+1)``.
    """
    x, y = point(x), point(y)
    if td is None:
        td = transition(x, y)
    basis = standard_basis(x, y, td)
    p, q = basis.coords
    cf = cf_expand(p, q)
    coeffs = tuple((-1) ** (k + 1) * cf.d[k] for k in range(cf.n, -1, -1)) + (0,)
    w = EWord(1, coeffs, cf.n)
    row = eval_word(w).row1
    if row not in ((p, q), (-p, -q)):
        raise AssertionError(f"word {coeffs} does not carry the basis onto {y}")
    return w


def reduce_step(w: EWord, i: int) -> EWord:
    """Apply ``E(a)E(+-1)E(b) = +-E(a-+1)E(b-+1)`` at inner position ``i``."""
    c = w.coeffs
    s = c[i]
    if s not in (1, -1) or not 0 < i < len(c) - 1:
        raise ValueError(f"no reducible factor at position {i}")
    new = c[: i - 1] + (c[i - 1] - s, c[i + 1] - s) + c[i + 2 :]
    return EWord(w.sign * s, new, w.cf_index)


def reducible_positions(w: EWord) -> list[int]:
    return [i for i in range(1, len(w.coeffs) - 1) if w.coeffs[i] in (1, -1)]


def reduce_word(w: EWord) -> EWord:
    """Rewrite the leftmost inner +-1 factor until none is left."""
    while True:
        pos = reducible_positions(w)
        if not pos:
            return w
        w = reduce_step(w, pos[0])


def has_square_two_pattern(w: EWord) -> bool:
    """Whether some inner pair of factors is ``E(2)E(2)`` or ``E(-2)E(-2)``."""
    c = w.coeffs
    return any(c[i] == c[i + 1] and c[i] in (2, -2) for i in range(1, len(c) - 2))


def word_path(w: EWord, basis: StandardBasis) -> list[ProjPoint]:
    """Vertices of the path encoded by ``w``, mapped into the plane through ``basis``."""
    m = IDENTITY
    rows = [m.row1]
    for c in reversed(w.coeffs):
        m = e_matrix(c) @ m
        rows.append(m.row1)
    return [point(basis.to_plane(*row)) for row in rows]


def path_word(path: Sequence, basis: StandardBasis) -> EWord:
    """Inverse of :func:`word_path` for a path starting at the first basis vector."""
    coords = [basis.from_plane(v) for v in path]
    row1, row2 = coords[0], (0, 1)
    if row1 not in ((1, 0), (-1, 0)):
        raise ValueError("path must start at the first basis vector")
    if row1 == (-1, 0):
        row1 = (1, 0)
    coeffs = []
    for t in coords[1:]:
        for s in (1, -1):
            w = (s * t[0] - row2[0], s * t[1] - row2[1])
            if det2(w, row1) == 0:
                c = w[0] // row1[0] if row1[0] else w[1] // row1[1]
                break
        else:
            raise ValueError(f"{t} is not adjacent to the previous vertex")
        coeffs.append(c)
        row1, row2 = (c * row1[0] + row2[0], c * row1[1] + row2[1]), (-row1[0], -row1[1])
    return EWord(1, tuple(reversed(coeffs)))


def single_matrix_class(cf: CFExpansion) -> bool:
    """Whether a single matrix represents every shortest path."""
    d, n = cf.d, cf.n
    if d[n] > 2:
        return True
    if d[n] != 2:
        return False
    k = 0
    while n - 1 - k >= 0 and d[n - 1 - k] == 1:
        k += 1
    return k % 2 == 1 and n - k - 1 >= 0


def same_class(m: Mat2, n: Mat2) -> bool:
    """Equality in ``PGL(2, Z)``, i.e. up to an overall sign."""
    return m == n or m == -n


def shortest_path_matrices(x, y) -> list[Mat2]:
    """Matrices of the shortest paths, one per class up to sign."""
    x, y = point(x), point(y)
    td = transition(x, y)
    w = standard_word(x, y, td)
    a = eval_word(reduce_word(w))
    basis = standard_basis(x, y, td)
    cf = cf_expand(*basis.coords)
    if single_matrix_class(cf):
        return [a]
    lower = Mat2(1, 0, (-1) ** (cf.n + 1), 1)
    return [a, -(lower @ a)]


def mat_to_list(m: Mat2) -> list[int]:
    return list(m)
