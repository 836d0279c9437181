"""Name-level realizers for functions on X*.

A :class:`Realizer` turns a name of ``z`` into a name of ``phi(z)`` (single
valued) or of some member of ``phi(z)`` (multi valued).  The constructors
below mirror the combinatory operations, so every term has a realizer built
by :func:`compile_realizer` from realizers of its base symbols.

Output names are lazy: nothing is queried from the input until an output
index is requested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .combinatory import DEFAULT_FUEL
from .errors import FuelExhausted, UnknownSymbol
from .names import (Name, constant_name, name_of_atom, pair_j, unpair_j)
from .terms import Comp, Iter, Pi, Prim, Sigma, Sym, Term

__all__ = [
    "Realizer", "rz_identity", "rz_const", "rz_left", "rz_right",
    "rz_inject_base", "rz_project_base", "nat_code_value", "rz_nat_to_star",
    "rz_star_to_nat", "rz_compose", "rz_pi", "rz_sigma", "rz_iter",
    "rz_pointwise", "compile_realizer", "IterLog",
]


@dataclass(frozen=True)
class Realizer:
    fn: Callable[[Name], Name]
    label: str = "?"
    space: str = "s1"

    def apply(self, p: Name) -> Name:
        return self.fn(p)

    __call__ = apply

    def __repr__(self):
        return f"<Realizer {self.label}>"


def rz_pointwise(g: Callable[[int], int], label: str) -> Realizer:
    """``gamma(p)(k) = g(p(k))``: queries exactly index ``k`` of the input."""
    return Realizer(lambda p: Name(lambda k: g(p(k)), label), label)


rz_identity = Realizer(lambda p: p, "I")


def rz_const(c: Name, label: Optional[str] = None) -> Realizer:
    return Realizer(lambda p: c, label or f"const {c!r}")


def _g_side(v: int, side: int) -> int:
    if v == 0:
        return 0
    if v % 2 == 0:
        return 1                      # base point: projection gives (o,o)
    return unpair_j((v - 1) // 2)[side]


def rz_left() -> Realizer:
    return rz_pointwise(lambda v: _g_side(v, 0), "L")


def rz_right() -> Realizer:
    return rz_pointwise(lambda v: _g_side(v, 1), "R")


def rz_inject_base() -> Realizer:
    return rz_pointwise(lambda v: 2 * v + 2, "inject")


def rz_project_base() -> Realizer:
    return rz_pointwise(lambda v: max(v // 2 - 1, 0), "project")


def nat_code_value(n: int) -> int:
    """The constant value of the name of ``n*``: ``f(0)=0``, ``f(n+1)=2J(0,f(n))+1``."""
    v = 0
    for _ in range(n):
        v = 2 * pair_j(0, v) + 1
    return v


def rz_nat_to_star(n: int) -> Name:
    return constant_name(nat_code_value(n), "nat")


def rz_star_to_nat(p: Name, fuel: int = DEFAULT_FUEL) -> int:
    """``mu n [f(n) = p(0)]``.

    ``f`` is strictly increasing, so once ``f(n)`` overshoots the search can
    never succeed; that is reported as exhausted fuel, like any other
    diverging search.
    """
    target = p(0)
    v = 0
    for n in range(fuel + 1):
        if v == target:
            return n
        if v > target:
            break
        v = 2 * pair_j(0, v) + 1
    raise FuelExhausted(f"no n with f(n) = {target}", n)


def rz_compose(g1: Realizer, g2: Realizer) -> Realizer:
    """Realizer of ``phi1 . phi2`` from realizers of ``phi1`` and ``phi2``."""
    return Realizer(lambda p: g1(g2(p)), f"{g1.label}.{g2.label}", g1.space)


def rz_pi(g1: Realizer, g2: Realizer) -> Realizer:
    def fn(p):
        a, b = g1(p), g2(p)
        return Name(lambda k: 2 * pair_j(a(k), b(k)) + 1, "paired")
    return Realizer(fn, f"pi({g1.label},{g2.label})", g1.space)


class _Deferred:
    """A name whose underlying name is chosen on first query."""

    def __init__(self, choose: Callable[[], Name]):
        self._choose = choose
        self._target: Optional[Name] = None

    def target(self) -> Name:
        if self._target is None:
            self._target = self._choose()
        return self._target

    def __call__(self, k: int) -> int:
        return self.target()(k)


def rz_sigma(g1: Realizer, g2: Realizer, g3: Realizer) -> Realizer:
    """Branch on the parity of ``g1(p)(0)``: odd tags a pair, take ``g2``."""
    def fn(p):
        d = _Deferred(lambda: g2(p) if g1(p)(0) % 2 == 1 else g3(p))
        return Name(d, "sigma")
    return Realizer(fn, f"sigma({g1.label},{g2.label},{g3.label})", g1.space)


@dataclass
class IterLog:
    """Collects the loop counts found by iteration realizers."""

    counts: list[tuple[str, int]] = field(default_factory=list)

    def __call__(self, label: str, n: int):
        self.counts.append((label, n))

    def total(self, label: Optional[str] = None) -> int:
        return sum(n for lab, n in self.counts if label is None or lab == label)


def rz_iter(g1: Realizer, g2: Realizer, fuel: int = DEFAULT_FUEL,
            log: Optional[Callable[[str, int], None]] = None, label: Optional[str] = None) -> Realizer:
    """``n = mu i [g2(g1^i(p))(0) even]``, output ``g1^n(p)``.

    The iterates are kept, so the search builds each one once.  Before an
    output index ``k`` is read, index ``k`` of every iterate is filled in
    ascending order; this keeps the recursion depth independent of ``n``.
    """
    label = label or f"iter({g1.label},{g2.label})"

    def fn(p):
        iterates: list[Name] = []
        warmed: set[int] = set()

        def search() -> Name:
            q = p
            for i in range(fuel + 1):
                iterates.append(q)
                if g2(q)(0) % 2 == 0:
                    if log is not None:
                        log(label, i)
                    return q
                q = g1(q)
            raise FuelExhausted(label, fuel)

        d = _Deferred(search)

        def query(k: int) -> int:
            target = d.target()
            if k not in warmed:
                for q in iterates:
                    q(k)
                warmed.add(k)
            return target(k)

        return Name(query, "iter")

    return Realizer(fn, label, g1.space)


def compile_realizer(t: Term, registry: Mapping[str, Realizer], space: str = "s1",
                     fuel: int = DEFAULT_FUEL,
                     log: Optional[Callable[[str, int], None]] = None) -> Realizer:
    """Assemble the realizer of a term from realizers of its symbols.

    The same construction serves both spaces: in ``s2`` mode the output names
    a member of the value set rather than the value itself.
    """
    zero, one = name_of_atom(), constant_name(1, "paired")
    prims = {"I": rz_identity, "L": rz_left(), "R": rz_right(),
             "T": rz_const(one, "T"), "F": rz_const(zero, "F")}

    def go(t: Term) -> Realizer:
        if isinstance(t, Prim):
            return prims[t.name]
        if isinstance(t, Sym):
            if t.name not in registry:
                raise UnknownSymbol(t.name)
            return registry[t.name]
        if isinstance(t, Comp):
            return rz_compose(go(t.outer), go(t.inner))
        if isinstance(t, Pi):
            return rz_pi(go(t.left), go(t.right))
        if isinstance(t, Sigma):
            return rz_sigma(go(t.test), go(t.then), go(t.orelse))
        if isinstance(t, Iter):
            return rz_iter(go(t.step), go(t.test), fuel, log, label=str(t))
        raise TypeError(f"not a term: {t!r}")

    r = go(t)
    return Realizer(r.fn, str(t), space)
