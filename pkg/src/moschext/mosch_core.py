"""The Moschovakis extension X* of a base set X.

Elements are finite binary trees whose leaves are the atom ``o`` or base
points of X.  Base points carry an opaque hashable identifier, so nothing in
this module depends on what X actually is.

Finite sequences and natural numbers are coded inside X*::

    []            -> o
    [z0, z1, ...] -> (z0, code of [z1, ...])
    n             -> code of the n-term sequence of o's

so 0, 1, 2 are coded by ``o``, ``(o,o)``, ``(o,(o,o))``.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Sequence

from .errors import NotANatCode

__all__ = [
    "MoschElem", "Atom", "BasePoint", "Pair", "O",
    "make_pair", "left", "right", "is_basic", "is_pair",
    "nat_to_code", "code_to_nat", "encode_seq", "decode_seq",
    "depth", "universe", "base_points_of",
]


class MoschElem:
    """Common base of the three constructors.  Instances are immutable."""

    __slots__ = ("_hash", "_depth", "_nat")

    def __setattr__(self, key, value):
        raise AttributeError("MoschElem is immutable")

    def __reduce__(self):
        raise TypeError("pickling MoschElem is not supported")

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"


class Atom(MoschElem):
    """The fresh element ``o``; use the singleton :data:`O`."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            inst = object.__new__(cls)
            object.__setattr__(inst, "_hash", hash(("o",)))
            object.__setattr__(inst, "_depth", 0)
            object.__setattr__(inst, "_nat", 0)
            cls._instance = inst
        return cls._instance

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "o"


O = Atom()


class BasePoint(MoschElem):
    __slots__ = ("id",)

    def __init__(self, id: Hashable):
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "_hash", hash(("x", id)))
        object.__setattr__(self, "_depth", 0)
        object.__setattr__(self, "_nat", None)

    def __eq__(self, other):
        return isinstance(other, BasePoint) and self.id == other.id

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"`{self.id}`"


class Pair(MoschElem):
    __slots__ = ("left", "right")

    def __init__(self, left: MoschElem, right: MoschElem):
        if not isinstance(left, MoschElem) or not isinstance(right, MoschElem):
            raise TypeError("Pair components must be MoschElem instances")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "_hash", hash((left._hash, right._hash)))
        object.__setattr__(self, "_depth", 1 + max(left._depth, right._depth))
        nat = right._nat + 1 if left is O and right._nat is not None else None
        object.__setattr__(self, "_nat", nat)

    def __eq__(self, other):
        # iterative so that long nat codes do not hit the recursion limit
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            a_pair, b_pair = isinstance(a, Pair), isinstance(b, Pair)
            if a_pair != b_pair:
                return False
            if not a_pair:
                if not a.__eq__(b) is True:
                    return False
                continue
            if a._hash != b._hash or a._depth != b._depth:
                return False
            stack.append((a.right, b.right))
            stack.append((a.left, b.left))
        return True

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self._nat is not None and self._nat >= 2:
            return f"#{self._nat}"
        return f"({self.left},{self.right})"


def make_pair(u: MoschElem, v: MoschElem) -> Pair:
    return Pair(u, v)


def left(z: MoschElem) -> MoschElem:
    """Total left projection: ``o -> o``, base point -> ``(o,o)``."""
    if isinstance(z, Pair):
        return z.left
    if z is O:
        return O
    return _OO


def right(z: MoschElem) -> MoschElem:
    if isinstance(z, Pair):
        return z.right
    if z is O:
        return O
    return _OO


_OO = Pair(O, O)


def is_basic(z: MoschElem) -> bool:
    """True for ``o`` and for base points, false for pairs."""
    return not isinstance(z, Pair)


def is_pair(z: MoschElem) -> bool:
    return isinstance(z, Pair)


def depth(z: MoschElem) -> int:
    """Edge depth: basic elements have depth 0 and ``nat_to_code(n)`` depth n."""
    return z._depth


def nat_to_code(n: int) -> MoschElem:
    if n < 0:
        raise ValueError("natural number expected")
    z = O
    for _ in range(n):
        z = Pair(O, z)
    return z


def code_to_nat(z: MoschElem) -> int:
    if z._nat is None:
        raise NotANatCode(f"{z} is not the code of a natural number")
    return z._nat


def encode_seq(items: Iterable[MoschElem]) -> MoschElem:
    z = O
    for item in reversed(list(items)):
        z = Pair(item, z)
    return z


def decode_seq(z: MoschElem) -> list[MoschElem]:
    """Inverse of :func:`encode_seq` on sequence codes (walks ``right`` until ``o``)."""
    out = []
    while isinstance(z, Pair):
        out.append(z.left)
        z = z.right
    if z is not O:
        raise ValueError(f"{z} does not terminate a sequence code")
    return out


def universe(base: Sequence[Hashable], max_depth: int) -> list[MoschElem]:
    """All elements of X* over the given base ids with edge depth <= ``max_depth``.

    Ordered by depth, then by construction order; deterministic.
    """
    layers: list[list[MoschElem]] = [[O] + [BasePoint(b) for b in base]]
    everything = list(layers[0])
    for _ in range(max_depth):
        shallower = everything
        new_layer = [Pair(u, v) for u in shallower for v in shallower
                     if max(u._depth, v._depth) == len(layers) - 1]
        layers.append(new_layer)
        everything = shallower + new_layer
    return everything


def base_points_of(z: MoschElem) -> Iterator[BasePoint]:
    stack = [z]
    while stack:
        u = stack.pop()
        if isinstance(u, Pair):
            stack.append(u.right)
            stack.append(u.left)
        elif isinstance(u, BasePoint):
            yield u
