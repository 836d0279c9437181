"""Baire-space names and the inductive representation of X*.

A name is a total function N -> N.  Names of X* elements are built from
names of base points by three clauses:

* base point with name q    ->  k |-> 2 q(k) + 2       (all values even, >= 2)
* the atom o                ->  k |-> 0
* pair of names q, r        ->  k |-> 2 J(q(k), r(k)) + 1   (all values odd)

where J is Cantor pairing.  :func:`name_decode_shape` inverts the clauses
lazily, looking only at the indices it needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Optional

from .errors import FuelExhausted, MalformedName, QueryBudgetExceeded
from .mosch_core import O, BasePoint, MoschElem, Pair

__all__ = [
    "pair_j", "unpair_j", "PairCode", "CANTOR", "SWAPPED_CANTOR", "SZUDZIK",
    "Name", "constant_name", "name_of_atom", "name_inject_base", "name_pair",
    "name_decode_shape", "name_of_elem", "translate_pairing", "translate_name",
    "tag_class", "counted",
]


def pair_j(m: int, n: int) -> int:
    """Cantor pairing ``(m+n)(m+n+1)/2 + n``."""
    s = m + n
    return s * (s + 1) // 2 + n


def unpair_j(c: int) -> tuple[int, int]:
    w = (math.isqrt(8 * c + 1) - 1) // 2
    n = c - w * (w + 1) // 2
    return w - n, n


@dataclass(frozen=True)
class PairCode:
    """A computable bijection N^2 -> N with ``pair(m, n) >= max(m, n)``."""

    label: str
    pair: Callable[[int, int], int]
    unpair: Callable[[int], tuple[int, int]]


def _szudzik_pair(m: int, n: int) -> int:
    return n * n + m if m < n else m * m + m + n


def _szudzik_unpair(c: int) -> tuple[int, int]:
    s = math.isqrt(c)
    t = c - s * s
    return (t, s) if t < s else (s, t - s)


CANTOR = PairCode("cantor", pair_j, unpair_j)
SWAPPED_CANTOR = PairCode("cantor-swapped", lambda m, n: pair_j(n, m),
                          lambda c: unpair_j(c)[::-1])
SZUDZIK = PairCode("szudzik", _szudzik_pair, _szudzik_unpair)


class Name:
    """A lazily evaluated, memoized element of Baire space.

    ``query`` is deterministic.  The memo is not locked: two threads racing on
    the same index may both compute it, which is harmless because the
    underlying function is pure.

    ``provenance`` is informational only ("atom", "base", "paired", "opaque", ...).
    """

    __slots__ = ("_fn", "_memo", "provenance", "misses", "budget", "__weakref__")

    def __init__(self, fn: Callable[[int], int], provenance: str = "opaque",
                 budget: Optional[int] = None):
        self._fn = fn
        self._memo: dict[int, int] = {}
        self.provenance = provenance
        self.misses = 0
        self.budget = budget

    def query(self, k: int) -> int:
        try:
            return self._memo[k]
        except KeyError:
            pass
        if self.budget is not None and self.misses >= self.budget:
            raise QueryBudgetExceeded(f"more than {self.budget} distinct indices queried")
        self.misses += 1
        v = self._fn(k)
        if v < 0:
            raise ValueError(f"name value at {k} is negative: {v}")
        self._memo[k] = v
        return v

    __call__ = query

    def prefix(self, count: int) -> list[int]:
        return [self.query(k) for k in range(count)]

    @property
    def queried(self) -> frozenset[int]:
        return frozenset(self._memo)

    def __repr__(self):
        shown = ", ".join(str(self._memo[k]) for k in sorted(self._memo)[:6])
        return f"<Name {self.provenance} [{shown}{', ...' if len(self._memo) > 6 else ''}]>"


def counted(p: Name, budget: int) -> Name:
    """A view of ``p`` that refuses to touch more than ``budget`` distinct indices."""
    return Name(p.query, provenance=p.provenance, budget=budget)


def constant_name(c: int, provenance: str = "opaque") -> Name:
    return Name(lambda k: c, provenance)


def name_of_atom() -> Name:
    return constant_name(0, "atom")


def name_inject_base(q: Name) -> Name:
    return Name(lambda k: 2 * q(k) + 2, "base")


def name_pair(q: Name, r: Name, code: PairCode = CANTOR) -> Name:
    return Name(lambda k: 2 * code.pair(q(k), r(k)) + 1, "paired")


def tag_class(v: int) -> str:
    if v == 0:
        return "atom"
    return "pair" if v % 2 else "base"


def _base_sub(p: Name) -> Name:
    return Name(lambda k: (p(k) - 2) // 2, "opaque")


def _pair_subs(p: Name, code: PairCode) -> tuple[Name, Name]:
    halves = Name(lambda k: (p(k) - 1) // 2)
    return (Name(lambda k: code.unpair(halves(k))[0]),
            Name(lambda k: code.unpair(halves(k))[1]))


def name_decode_shape(p: Name, depth_fuel: int = 64, probe: int = 4,
                      base: Optional[Callable[[Name], Hashable]] = None,
                      code: PairCode = CANTOR) -> MoschElem:
    """Read the element named by ``p``.

    The tag of every node is taken from index 0 and checked against indices
    ``0 .. probe-1``; a disagreement raises :class:`MalformedName`.  Base
    sub-names are handed to ``base`` to obtain the point identifier; without
    a decoder the identifier is the sub-name itself.
    """
    def go(q: Name, fuel: int) -> MoschElem:
        if fuel < 0:
            raise FuelExhausted("name_decode_shape", depth_fuel)
        tag = tag_class(q(0))
        for k in range(1, probe):
            if tag_class(q(k)) != tag:
                raise MalformedName(
                    f"index {k} has tag {tag_class(q(k))} but index 0 has tag {tag}")
        if tag == "atom":
            return O
        if tag == "base":
            sub = _base_sub(q)
            return BasePoint(base(sub) if base is not None else sub)
        a, b = _pair_subs(q, code)
        return Pair(go(a, fuel - 1), go(b, fuel - 1))

    return go(p, depth_fuel)


def name_of_elem(z: MoschElem, base_name: Callable[[Hashable], Name],
                 code: PairCode = CANTOR) -> Name:
    """Build a name of ``z`` by structural recursion over the three clauses."""
    if isinstance(z, Pair):
        return name_pair(name_of_elem(z.left, base_name, code),
                         name_of_elem(z.right, base_name, code), code)
    if z is O:
        return name_of_atom()
    return name_inject_base(base_name(z.id))


def translate_pairing(h_target: PairCode, h_source: PairCode) -> Callable[[int], int]:
    """The bijection h turning names built with ``h_source`` into ``h_target`` names.

    ``h(2l) = 2l`` and ``h(2 J'(m,n) + 1) = 2 J(h(m), h(n)) + 1``.  The recursion
    is well founded because ``J'(m,n) >= max(m,n)``.
    """
    @lru_cache(maxsize=None)
    def h(c: int) -> int:
        if c % 2 == 0:
            return c
        m, n = h_source.unpair((c - 1) // 2)
        return 2 * h_target.pair(h(m), h(n)) + 1

    return h


def translate_name(p: Name, h: Callable[[int], int]) -> Name:
    return Name(lambda k: h(p(k)), p.provenance)
