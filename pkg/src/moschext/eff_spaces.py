"""Effective topological and metric structure lifted from X to X*.

Indices of X* neighbourhoods and of dense points follow the same tagging as
names: ``0`` for ``o``, ``2i+2`` for the i-th base item, ``2J(m,n)+1`` for a
product / pair.  The witnesses S*, H* and delta* are built by the same
inductive clauses, as restartable streams or as decision procedures.
"""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .mosch_core import O, BasePoint, MoschElem, Pair, is_basic, left, right
from .names import Name, pair_j, unpair_j
from .qenum import alpha_q

__all__ = [
    "EffTopSpace", "EffMetricSpace", "top_extend", "top_intersect_witness", "s_star_stream",
    "s_star_member", "neighbourhoods", "metric_extend", "metric_delta_extend",
    "metric_H_extend", "h_star_member", "cauchy_check", "density_witness",
    "discrete_top_space", "rational_line",
]


def _tag(i: int) -> str:
    if i == 0:
        return "o"
    return "pair" if i % 2 else "base"


# -- topology --------------------------------------------------------------

@dataclass(frozen=True)
class EffTopSpace:
    """``member(i, x)`` decides ``x in U_i``.

    ``s_member`` decides the intersection witness S (for desk instances) and
    ``s_stream(bound)`` lists the members of S with all components ``<= bound``.
    ``period`` says that ``U_i`` depends only on ``i mod period`` (if known).
    """

    member: Callable[[int, object], bool]
    s_member: Optional[Callable[[int, int, int], bool]] = None
    s_stream: Optional[Callable[[int], Iterable[tuple[int, int, int]]]] = None
    period: Optional[int] = None


def discrete_top_space() -> EffTopSpace:
    """X = {a, b} with ``U_i = [{a}, {b}, {a, b}][i mod 3]``."""
    sets = (frozenset("a"), frozenset("b"), frozenset("ab"))

    def member(i, x):
        return x in sets[i % 3]

    def s_member(i1, i2, i):
        return sets[i % 3] <= sets[i1 % 3] & sets[i2 % 3]

    def s_stream(bound):
        for i1, i2, i in itertools.product(range(bound + 1), repeat=3):
            if s_member(i1, i2, i):
                yield (i1, i2, i)

    return EffTopSpace(member, s_member, s_stream, period=3)


def top_extend(space: EffTopSpace) -> EffTopSpace:
    """``U*_0 = {o}``, ``U*_{2i+2} = U_i``, ``U*_{2J(m,n)+1} = U*_m x U*_n``."""
    def member(i: int, z: MoschElem) -> bool:
        tag = _tag(i)
        if tag == "o":
            return z is O
        if tag == "base":
            return isinstance(z, BasePoint) and space.member(i // 2 - 1, z.id)
        if not isinstance(z, Pair):
            return False
        m, n = unpair_j((i - 1) // 2)
        return member(m, z.left) and member(n, z.right)

    def s_member(i1, i2, i):
        return s_star_member(space, i1, i2, i)

    return EffTopSpace(member, s_member if space.s_member else None,
                       lambda bound: top_intersect_witness(space, bound))


def s_star_member(space: EffTopSpace, i1: int, i2: int, i: int) -> bool:
    """Decide ``(i1, i2, i) in S*`` by recursion on the clauses (needs ``space.s_member``)."""
    tags = {_tag(i1), _tag(i2), _tag(i)}
    if len(tags) != 1:
        return False
    tag = tags.pop()
    if tag == "o":
        return True
    if tag == "base":
        return space.s_member(i1 // 2 - 1, i2 // 2 - 1, i // 2 - 1)
    (m1, n1), (m2, n2), (m, n) = (unpair_j((j - 1) // 2) for j in (i1, i2, i))
    return s_star_member(space, m1, m2, m) and s_star_member(space, n1, n2, n)


def top_intersect_witness(space: EffTopSpace, bound: int,
                          base_limit: int = 8) -> Iterator[tuple[int, int, int]]:
    """Members of S* with all components ``<= bound``, generated by the clauses.

    Base triples are taken from S with base indices ``< base_limit``, so the
    output is the part of S* built from that finite piece of S.  Each member
    appears once.
    """
    found: set[tuple[int, int, int]] = set()
    order: list[tuple[int, int, int]] = []

    def add(t):
        if t not in found:
            found.add(t)
            order.append(t)

    add((0, 0, 0))
    for i1, i2, i in space.s_stream(min(base_limit - 1, (bound - 2) // 2)):
        t = (2 * i1 + 2, 2 * i2 + 2, 2 * i + 2)
        if max(t) <= bound:
            add(t)
    # closure under pair-combination.  Both halves of a pair index 2J(m,n)+1
    # satisfy (m+n)(m+n+1)/2 <= J(m,n), which bounds the candidates sharply
    half = (bound - 1) // 2

    def fits(m, n):
        return (m + n) * (m + n + 1) // 2 <= half

    pool = sorted((t for t in order if fits(max(t), 0)), key=lambda t: t[0])
    frontier = list(pool)
    while frontier:
        new = []
        keys = [t[0] for t in pool]
        for a in frontier:
            hi = bisect.bisect_right(keys, _max_partner(a[0], half))
            for b in pool[:hi]:
                if not (fits(a[1], b[1]) and fits(a[2], b[2])):
                    continue
                for x, y in ((a, b), (b, a)):
                    t = (2 * pair_j(x[0], y[0]) + 1, 2 * pair_j(x[1], y[1]) + 1,
                         2 * pair_j(x[2], y[2]) + 1)
                    if max(t) <= bound and t not in found:
                        add(t)
                        if fits(max(t), 0):
                            new.append(t)
        pool = sorted(pool + new, key=lambda t: t[0])
        frontier = new
    yield from order


def _max_partner(m: int, half: int) -> int:
    """Largest ``n`` with ``(m+n)(m+n+1)/2 <= half`` (``-1`` if none)."""
    s = (math.isqrt(8 * half + 1) - 1) // 2
    return s - m


def s_star_stream(space: EffTopSpace, base_limit: int = 8) -> Iterator[tuple[int, int, int]]:
    """S* in stages of doubling bound, without repeats; call again to restart."""
    seen = set()
    for s in itertools.count(1):
        for t in top_intersect_witness(space, 2 ** s, base_limit):
            if t not in seen:
                seen.add(t)
                yield t


def neighbourhoods(space: EffTopSpace, z: MoschElem, base_indices: Iterable[int]) -> list[int]:
    """Indices ``i`` with ``z in U*_i`` built from the given base indices, in increasing order."""
    base_indices = list(base_indices)

    def go(z):
        if z is O:
            return [0]
        if isinstance(z, BasePoint):
            return [2 * i + 2 for i in base_indices if space.member(i, z.id)]
        return [2 * pair_j(m, n) + 1 for m in go(z.left) for n in go(z.right)]

    return sorted(go(z))


# -- metric ----------------------------------------------------------------

@dataclass(frozen=True)
class EffMetricSpace:
    """``d`` is exact (rationals); ``alpha`` lists a dense set.

    ``delta(i, j, k)`` approximates ``d(alpha(i), alpha(j))`` within ``2**-k``;
    ``h_member`` decides ``d(alpha(i), alpha(j)) < (k+1)/(l+1)``.
    """

    d: Callable[[object, object], Fraction]
    alpha: Callable[[int], object]
    delta: Optional[Callable[[int, int, int], Fraction]] = None
    h_member: Optional[Callable[[int, int, int, int], bool]] = None


def rational_line() -> EffMetricSpace:
    """The rationals with ``|x - y|`` and the fixed enumeration of Q."""
    def d(x, y):
        return abs(Fraction(x) - Fraction(y))

    def delta(i, j, k):
        return d(alpha_q(i), alpha_q(j))

    def h_member(i, j, k, l):
        return d(alpha_q(i), alpha_q(j)) < Fraction(k + 1, l + 1)

    return EffMetricSpace(d, alpha_q, delta, h_member)


def metric_extend(space: EffMetricSpace) -> EffMetricSpace:
    def d_star(z: MoschElem, w: MoschElem) -> Fraction:
        zb, wb = is_basic(z), is_basic(w)
        if zb and wb:
            if z is O and w is O:
                return Fraction(0)
            if z is O or w is O:
                return Fraction(1)
            return min(Fraction(space.d(z.id, w.id)), Fraction(1))
        if zb or wb:
            return Fraction(1)
        return max(d_star(left(z), left(w)), d_star(right(z), right(w)))

    def alpha_star(i: int) -> MoschElem:
        tag = _tag(i)
        if tag == "o":
            return O
        if tag == "base":
            return BasePoint(space.alpha(i // 2 - 1))
        m, n = unpair_j((i - 1) // 2)
        return Pair(alpha_star(m), alpha_star(n))

    delta_star = metric_delta_extend(space.delta) if space.delta else None
    h = (lambda i, j, k, l: h_star_member(space.h_member, i, j, k, l)) if space.h_member else None
    return EffMetricSpace(d_star, alpha_star, delta_star, h)


def metric_delta_extend(delta: Callable[[int, int, int], Fraction],
                        clamp: bool = True) -> Callable[[int, int, int], Fraction]:
    """delta* by the inductive clauses.

    On two base indices the base approximation is clamped to 1, because the
    lifted distance is ``min(d, 1)``; without the clamp the accuracy bound
    fails whenever ``d > 1``.  ``clamp=False`` gives the unclamped variant.
    """
    def delta_star(i: int, j: int, k: int) -> Fraction:
        ti, tj = _tag(i), _tag(j)
        if ti == "base" and tj == "base":
            v = Fraction(delta(i // 2 - 1, j // 2 - 1, k))
            return min(v, Fraction(1)) if clamp else v
        if ti == "o" and tj == "o":
            return Fraction(0)
        if ti == "pair" and tj == "pair":
            m, n = unpair_j((i - 1) // 2)
            m2, n2 = unpair_j((j - 1) // 2)
            return max(delta_star(m, m2, k), delta_star(n, n2, k))
        return Fraction(1)

    return delta_star


def h_star_member(h_member: Callable[[int, int, int, int], bool],
                  i: int, j: int, k: int, l: int) -> bool:
    """Decide ``(i, j, k, l) in H*`` by recursion on the clauses."""
    if k > l:
        return True
    ti, tj = _tag(i), _tag(j)
    if ti != tj:
        return False
    if ti == "o":
        return True
    if ti == "base":
        return h_member(i // 2 - 1, j // 2 - 1, k, l)
    m, n = unpair_j((i - 1) // 2)
    m2, n2 = unpair_j((j - 1) // 2)
    return h_star_member(h_member, m, m2, k, l) and h_star_member(h_member, n, n2, k, l)


def metric_H_extend(h_stream: Callable[[int, int], Iterable[tuple[int, int, int, int]]],
                    bound: int, kl_bound: int) -> list[tuple[int, int, int, int]]:
    """Members of H* with ``i, j <= bound`` and ``k, l <= kl_bound``, generated by the clauses.

    ``h_stream(bound, kl_bound)`` must list the members of H in that box.
    """
    found: set[tuple[int, int, int, int]] = set()
    order: list[tuple[int, int, int, int]] = []

    def add(t):
        if t not in found:
            found.add(t)
            order.append(t)

    for k, l in itertools.product(range(kl_bound + 1), repeat=2):
        if k > l:
            for i, j in itertools.product(range(bound + 1), repeat=2):
                add((i, j, k, l))
        add((0, 0, k, l))
    for i, j, k, l in h_stream((bound - 2) // 2, kl_bound):
        if 2 * i + 2 <= bound and 2 * j + 2 <= bound:
            add((2 * i + 2, 2 * j + 2, k, l))
    # clause (iv): a pair index is larger than both halves, so one ascending
    # sweep over candidate pair indices sees its halves already decided
    for i, j in itertools.product(range(1, bound + 1, 2), repeat=2):
        m, n = unpair_j((i - 1) // 2)
        m2, n2 = unpair_j((j - 1) // 2)
        for k, l in itertools.product(range(kl_bound + 1), repeat=2):
            if (m, m2, k, l) in found and (n, n2, k, l) in found:
                add((i, j, k, l))
    return order


def cauchy_check(space: EffMetricSpace, p: Name, x, K: int) -> bool:
    """``d(alpha(p(k)), x) < 2**-k`` for every ``k <= K``."""
    return all(space.d(space.alpha(p(k)), x) < Fraction(1, 2 ** k) for k in range(K + 1))


def density_witness(space: EffMetricSpace, z: MoschElem, eps: Fraction,
                    base_search: int = 100000) -> int:
    """An index ``i`` with ``d*(alpha*(i), z) < eps``, built structurally.

    ``space`` is the base space; base points are matched by linear search of
    ``alpha`` up to ``base_search``.
    """
    if z is O:
        return 0
    if isinstance(z, BasePoint):
        for i in range(base_search):
            if space.d(space.alpha(i), z.id) < eps:
                return 2 * i + 2
        raise LookupError(f"no dense point within {eps} of {z} below {base_search}")
    return 2 * pair_j(density_witness(space, z.left, eps, base_search),
                      density_witness(space, z.right, eps, base_search)) + 1
