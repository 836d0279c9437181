"""A two-point discrete base space X = {a, b} with a parity representation.

A name ``q`` of a base point names ``a`` when all its values are even and
``b`` when all are odd.  Many different names denote the same point, which
lets tests feed realizers names that are not the canonical ones.
"""

from __future__ import annotations

from typing import Hashable

from .combinatory import Pfn1, beta_both
from .errors import MalformedName
from .mosch_core import O, BasePoint, MoschElem, Pair
from .names import CANTOR, Name, PairCode, name_decode_shape, name_of_elem
from .realizers import Realizer, rz_const, rz_identity, rz_pi, rz_pointwise

__all__ = [
    "BASE_IDS", "base_name", "elem_name", "decode", "swap_fn", "succ_fn",
    "denotational_registry", "realizer_registry",
]

BASE_IDS = ("a", "b")


def base_name(ident: Hashable, salt: int = 0) -> Name:
    """A name of base point ``a`` or ``b``; ``salt`` varies the non-parity bits."""
    parity = BASE_IDS.index(ident)
    return Name(lambda k: 2 * ((salt * 31 + k * 17 + salt * k) % 11) + parity, "base-rho")


def _decode_base(q: Name, probe: int = 4) -> str:
    parity = q(0) % 2
    for k in range(1, probe):
        if q(k) % 2 != parity:
            raise MalformedName(f"base name mixes parities at index {k}")
    return BASE_IDS[parity]


def elem_name(z: MoschElem, salt: int = 0, code: PairCode = CANTOR) -> Name:
    return name_of_elem(z, lambda ident: base_name(ident, salt), code)


def decode(p: Name, depth_fuel: int = 64, code: PairCode = CANTOR) -> MoschElem:
    return name_decode_shape(p, depth_fuel, base=_decode_base, code=code)


def _swap(z: MoschElem) -> MoschElem:
    if isinstance(z, BasePoint):
        return BasePoint("b" if z.id == "a" else "a")
    return z


swap_fn = Pfn1(_swap, "swap")
succ_fn = Pfn1(lambda z: Pair(O, z), "s")


def _swap_code(v: int) -> int:
    if v >= 2 and v % 2 == 0:
        return 2 * ((v // 2 - 1) ^ 1) + 2
    return v


def denotational_registry(space: str = "s1") -> dict:
    """Base symbols: ``swap`` (a <-> b), ``s`` (z -> (o, z)) and in ``s2`` also ``b``."""
    reg = {"swap": swap_fn, "s": succ_fn}
    if space == "s2":
        reg["b"] = beta_both()
    return reg


def realizer_registry(space: str = "s1", beta_choice: int = 1) -> dict[str, Realizer]:
    """Realizers of :func:`denotational_registry`.

    ``b`` is realized by a constant name of ``o`` (``beta_choice=0``) or of
    ``(o,o)`` (``beta_choice=1``); both are members of its value set.
    """
    reg = {
        "swap": rz_pointwise(_swap_code, "swap"),
        "s": rz_pi(rz_const(Name(lambda k: 0, "atom")), rz_identity),
    }
    if space == "s2":
        reg["b"] = rz_const(Name(lambda k: beta_choice, "beta"), "b")
    for r in reg.values():
        object.__setattr__(r, "space", space)
    return reg
