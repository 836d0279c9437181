"""Denotational evaluators for the two iterative combinatory spaces over X*.

``S1``: partial single-valued maps X* -> X*, multiplied by composition and
ordered by extension.

``S2``: partial maps from X* to nonempty *finite* subsets of X*, multiplied
by the weak composition (``z`` is in the domain of ``phi psi`` only when all
of ``psi(z)`` lies in the domain of ``phi``) and ordered by "larger domain,
smaller values".

Functions are plain callables wrapped in :class:`Pfn1` / :class:`Mfn2`;
applying one outside its domain raises :class:`~moschext.errors.Undefined`.
Everything that may loop takes explicit ``fuel`` and raises
:class:`~moschext.errors.FuelExhausted` rather than hanging.
"""

from __future__ import annotations

import os
from collections import deque
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import (Diverges, FuelExhausted, RegularityViolation, Undefined,
                     UnknownSymbol)
from .mosch_core import O, MoschElem, Pair, is_basic, left, right
from .terms import Comp, Iter, Pi, Prim, Sigma, Sym, Term

__all__ = [
    "DEFAULT_FUEL", "Pfn1", "Mfn2", "S1", "S2", "Space", "space_by_name",
    "s1_constants", "s1_const", "s1_compose", "s1_pi", "s1_sigma", "s1_iter",
    "s2_constants", "s2_const", "s2_compose", "s2_pi", "s2_sigma", "s2_iter",
    "embed", "compile_term", "eval_term", "lfp_system",
    "T_HAT", "F_HAT", "reduct_sigma", "reduct_sigma_printed", "identity_by_iteration",
    "lll_iter_term", "pair_of_lll_iter_term", "mirror_system", "mirror_term",
    "branching_terms", "kappa_system", "beta_both",
]

DEFAULT_FUEL = int(os.environ.get("MOSCHEXT_FUEL", "10000"))

Trace = Optional[Callable[..., None]]


class Pfn1:
    """A partial function X* -> X*."""

    __slots__ = ("fn", "label")

    def __init__(self, fn: Callable[[MoschElem], MoschElem], label: str = "?"):
        self.fn = fn
        self.label = label

    def __call__(self, z: MoschElem) -> MoschElem:
        return self.fn(z)

    @classmethod
    def from_table(cls, table: Mapping[MoschElem, MoschElem], label: str = "table") -> "Pfn1":
        table = dict(table)

        def fn(z):
            try:
                return table[z]
            except KeyError:
                raise Undefined(z, label) from None

        return cls(fn, label)

    def __repr__(self):
        return f"<Pfn1 {self.label}>"


class Mfn2:
    """A partial function from X* to nonempty finite subsets of X*."""

    __slots__ = ("fn", "label")

    def __init__(self, fn: Callable[[MoschElem], frozenset], label: str = "?"):
        self.fn = fn
        self.label = label

    def __call__(self, z: MoschElem) -> frozenset:
        out = self.fn(z)
        assert out, f"{self.label} produced an empty value set at {z}"
        return out

    @classmethod
    def from_table(cls, table: Mapping[MoschElem, Iterable[MoschElem]],
                   label: str = "table") -> "Mfn2":
        table = {z: frozenset(vs) for z, vs in table.items()}
        if any(not vs for vs in table.values()):
            raise ValueError("Mfn2 values must be nonempty")

        def fn(z):
            try:
                return table[z]
            except KeyError:
                raise Undefined(z, label) from None

        return cls(fn, label)

    def __repr__(self):
        return f"<Mfn2 {self.label}>"


_OO = Pair(O, O)


# -- single-valued space ---------------------------------------------------

def s1_const(c: MoschElem, label: Optional[str] = None) -> Pfn1:
    return Pfn1(lambda z: c, label or f"const {c}")


I1 = Pfn1(lambda z: z, "I")
L1 = Pfn1(left, "L")
R1 = Pfn1(right, "R")
T1 = s1_const(_OO, "T")
F1 = s1_const(O, "F")


def s1_constants() -> dict[str, Pfn1]:
    return {"I": I1, "L": L1, "R": R1, "T": T1, "F": F1}


def s1_compose(phi: Pfn1, psi: Pfn1) -> Pfn1:
    """``phi . psi``: apply ``psi`` first."""
    return Pfn1(lambda z: phi(psi(z)), f"{phi.label}.{psi.label}")


def s1_pi(phi: Pfn1, psi: Pfn1) -> Pfn1:
    return Pfn1(lambda z: Pair(phi(z), psi(z)), f"pi({phi.label},{psi.label})")


def s1_sigma(chi: Pfn1, phi: Pfn1, psi: Pfn1) -> Pfn1:
    def fn(z):
        return psi(z) if is_basic(chi(z)) else phi(z)
    return Pfn1(fn, f"sigma({chi.label},{phi.label},{psi.label})")


def s1_iter(sigma: Pfn1, chi: Pfn1, fuel: int = DEFAULT_FUEL,
            trace: Trace = None, detect_cycles: bool = True) -> Pfn1:
    """The while loop ``u := z; while chi(u) is a pair: u := sigma(u)``.

    A repeated state is reported as :class:`Diverges`; running past ``fuel``
    steps raises :class:`FuelExhausted`.  ``trace(u, control_value)`` is called
    once per control test.
    """
    def fn(z):
        u = z
        seen = set() if detect_cycles else None
        steps = 0
        while True:
            c = chi(u)
            if trace is not None:
                trace(u, c)
            if is_basic(c):
                return u
            if seen is not None:
                if u in seen:
                    raise Diverges(z, f"state {u} repeats")
                seen.add(u)
            steps += 1
            if steps > fuel:
                raise FuelExhausted(z, steps - 1)
            u = sigma(u)

    return Pfn1(fn, f"iter({sigma.label},{chi.label})")


# -- multi-valued space ----------------------------------------------------

def embed(theta: Pfn1) -> Mfn2:
    """Singleton-valued counterpart of a single-valued function."""
    return Mfn2(lambda z: frozenset((theta(z),)), f"~{theta.label}")


def s2_const(c: MoschElem, label: Optional[str] = None) -> Mfn2:
    return embed(s1_const(c, label))


I2, L2, R2, T2, F2 = (embed(f) for f in (I1, L1, R1, T1, F1))
for _f, _n in zip((I2, L2, R2, T2, F2), "ILRTF"):
    _f.label = _n


def s2_constants() -> dict[str, Mfn2]:
    return {"I": I2, "L": L2, "R": R2, "T": T2, "F": F2}


def s2_compose(phi: Mfn2, psi: Mfn2) -> Mfn2:
    def fn(z):
        out = set()
        for u in psi(z):
            out |= phi(u)
        return frozenset(out)
    return Mfn2(fn, f"{phi.label}.{psi.label}")


def s2_pi(phi: Mfn2, psi: Mfn2) -> Mfn2:
    def fn(z):
        us, vs = phi(z), psi(z)
        return frozenset(Pair(u, v) for u in us for v in vs)
    return Mfn2(fn, f"pi({phi.label},{psi.label})")


def _split(values: frozenset) -> tuple[bool, bool]:
    has_pair = has_basic = False
    for v in values:
        if is_basic(v):
            has_basic = True
        else:
            has_pair = True
    return has_pair, has_basic


def s2_sigma(chi: Mfn2, phi: Mfn2, psi: Mfn2) -> Mfn2:
    """Branch on whether ``chi(z)`` contains pairs and/or basic elements.

    Both applicable branches must be defined; the value is their union.
    """
    def fn(z):
        has_pair, has_basic = _split(chi(z))
        out = set()
        if has_pair:
            out |= phi(z)
        if has_basic:
            out |= psi(z)
        return frozenset(out)
    return Mfn2(fn, f"sigma({chi.label},{phi.label},{psi.label})")


def s2_iter(sigma: Mfn2, chi: Mfn2, fuel: int = DEFAULT_FUEL, trace: Trace = None) -> Mfn2:
    """Iteration of ``sigma`` controlled by ``chi`` via the tree of paths from ``z``.

    The tree is explored breadth first.  A child equal to one of its own
    ancestors witnesses an infinite path and is not expanded.  The verdict
    does not depend on exploration order:

    * more than ``fuel`` tree nodes            -> FuelExhausted
    * some node breaks regularity              -> RegularityViolation
    * some path revisits an ancestor           -> Diverges
    * otherwise the value is every node ``v`` with a basic element in ``chi(v)``.

    ``trace(depth, u, chi_value)`` is called for every explored node.
    """
    def fn(z):
        nodes: list[tuple[MoschElem, int]] = []
        queue = deque([(z, -1, 0)])
        values = set()
        violation = None
        cyclic = None
        while queue:
            u, parent, dep = queue.popleft()
            nodes.append((u, parent))
            if len(nodes) > fuel:
                raise FuelExhausted(z, len(nodes) - 1)
            here = len(nodes) - 1
            try:
                cu = chi(u)
            except Undefined:
                violation = violation or u
                if trace is not None:
                    trace(dep, u, None)
                continue
            if trace is not None:
                trace(dep, u, cu)
            has_pair, has_basic = _split(cu)
            if has_basic:
                values.add(u)
            if not has_pair:
                continue
            try:
                succ = sigma(u)
            except Undefined:
                violation = violation or u
                continue
            # sorted only for a reproducible trace; str is costly on deep states
            for w in (sorted(succ, key=str) if trace is not None else succ):
                if _on_branch(nodes, here, w):
                    cyclic = cyclic or w
                else:
                    queue.append((w, here, dep + 1))
        if violation is not None:
            raise RegularityViolation(z, f"at node {violation}")
        if cyclic is not None:
            raise Diverges(z, f"path revisits {cyclic}")
        return frozenset(values)

    return Mfn2(fn, f"iter({sigma.label},{chi.label})")


def _on_branch(nodes, idx, w) -> bool:
    while idx >= 0:
        u, idx = nodes[idx]
        if u == w:
            return True
    return False


# -- spaces as namespaces --------------------------------------------------

Fn = Union[Pfn1, Mfn2]


class Space:
    """Operations of one combinatory space, for code generic over S1/S2."""

    name: str

    def graph(self, f: Fn, points: Iterable[MoschElem]) -> dict:
        """``{z: f(z)}`` over the defined points; FuelExhausted propagates."""
        out = {}
        for z in points:
            try:
                out[z] = f(z)
            except Undefined:
                pass
        return out


class _S1(Space):
    name = "s1"
    I, L, R, T, F = I1, L1, R1, T1, F1
    fn_type = Pfn1
    const = staticmethod(s1_const)
    compose = staticmethod(s1_compose)
    pi = staticmethod(s1_pi)
    sigma = staticmethod(s1_sigma)
    iterate = staticmethod(s1_iter)
    constants = staticmethod(s1_constants)

    @staticmethod
    def lift(f: Fn) -> Pfn1:
        if not isinstance(f, Pfn1):
            raise TypeError(f"{f!r} is not single-valued")
        return f

    def from_table(self, table, label="table") -> Pfn1:
        return Pfn1.from_table(table, label)

    def geq(self, phi: Pfn1, psi: Pfn1, points) -> bool:
        """``phi >= psi`` on ``points``: ``phi`` extends ``psi``."""
        gphi, gpsi = self.graph(phi, points), self.graph(psi, points)
        return all(z in gphi and gphi[z] == v for z, v in gpsi.items())


class _S2(Space):
    name = "s2"
    I, L, R, T, F = I2, L2, R2, T2, F2
    fn_type = Mfn2
    const = staticmethod(s2_const)
    compose = staticmethod(s2_compose)
    pi = staticmethod(s2_pi)
    sigma = staticmethod(s2_sigma)
    iterate = staticmethod(s2_iter)
    constants = staticmethod(s2_constants)

    @staticmethod
    def lift(f: Fn) -> Mfn2:
        return embed(f) if isinstance(f, Pfn1) else f

    def from_table(self, table, label="table") -> Mfn2:
        return Mfn2.from_table(table, label)

    def geq(self, phi: Mfn2, psi: Mfn2, points) -> bool:
        """``phi >= psi``: larger domain, value subsets on the domain of ``psi``."""
        gphi, gpsi = self.graph(phi, points), self.graph(psi, points)
        return all(z in gphi and gphi[z] <= vs for z, vs in gpsi.items())


S1 = _S1()
S2 = _S2()


def space_by_name(name: str) -> Space:
    try:
        return {"s1": S1, "s2": S2}[name.lower()]
    except KeyError:
        raise ValueError(f"unknown space {name!r}") from None


# -- terms -----------------------------------------------------------------

def compile_term(t: Term, registry: Mapping[str, Fn], space: Space = S1,
                 fuel: int = DEFAULT_FUEL, trace: Trace = None) -> Fn:
    """Turn a term into a function of ``space``.  Symbols resolve eagerly."""
    def go(t):
        if isinstance(t, Prim):
            return getattr(space, t.name)
        if isinstance(t, Sym):
            if t.name not in registry:
                raise UnknownSymbol(t.name)
            return space.lift(registry[t.name])
        if isinstance(t, Comp):
            return space.compose(go(t.outer), go(t.inner))
        if isinstance(t, Pi):
            return space.pi(go(t.left), go(t.right))
        if isinstance(t, Sigma):
            return space.sigma(go(t.test), go(t.then), go(t.orelse))
        if isinstance(t, Iter):
            return space.iterate(go(t.step), go(t.test), fuel, trace)
        raise TypeError(f"not a term: {t!r}")

    return go(t)


def eval_term(t: Term, registry: Mapping[str, Fn], space: Space, z: MoschElem,
              fuel: int = DEFAULT_FUEL, trace: Trace = None):
    return compile_term(t, registry, space, fuel, trace)(z)


def lfp_system(terms: Sequence[Term], holes: Sequence[str], registry: Mapping[str, Fn],
               space: Space, carrier: Sequence[MoschElem], fuel: int = DEFAULT_FUEL) -> list[Fn]:
    """Least solution of ``theta_r >= Gamma_r(theta_1..theta_l)`` on a finite carrier.

    Each ``terms[r]`` is a term in which the symbols ``holes`` stand for the
    unknowns.  Kleene iteration starts from the everywhere-undefined tuple;
    approximants are tables on ``carrier`` (undefined elsewhere).  Returns
    table-backed functions at which every inequality holds as an equality.
    """
    if len(terms) != len(holes):
        raise ValueError("one term per unknown expected")
    carrier = list(carrier)
    tables: list[dict] = [dict() for _ in holes]
    for _ in range(fuel):
        current = [space.from_table(tab, h) for tab, h in zip(tables, holes)]
        reg = dict(registry)
        reg.update(zip(holes, current))
        new = [space.graph(compile_term(t, reg, space, fuel), carrier) for t in terms]
        for old_f, new_tab in zip(current, new):
            assert space.geq(space.from_table(new_tab), old_f, carrier), \
                "Kleene chain is not increasing: the system is not monotone"
        if new == tables:
            return current
        tables = new
    raise FuelExhausted("lfp_system", fuel)


# -- derived terms ---------------------------------------------------------

T_HAT = Pi(Prim("T"), Prim("I"))
F_HAT = Pi(Prim("F"), Prim("I"))


def _c(*ts: Term) -> Term:
    out = ts[-1]
    for t in reversed(ts[:-1]):
        out = Comp(t, out)
    return out


def reduct_sigma(chi: Term, phi: Term, psi: Term) -> Term:
    """A term without ``sigma`` denoting ``sigma(chi, phi, psi)``.

    ``R[F^ psi R, L] R[F^2 phi R^2, L] pi(chi, T^)`` where ``T^ = pi(T, I)`` and
    ``F^ = pi(F, I)``.  The first loop peels one ``T``-tag and runs ``phi``;
    an ``o`` test leaves the tag for the second loop, which runs ``psi``.
    """
    R_, L_ = Prim("R"), Prim("L")
    first = Iter(_c(F_HAT, F_HAT, phi, R_, R_), L_)
    second = Iter(_c(F_HAT, psi, R_), L_)
    return _c(R_, second, R_, first, Pi(chi, T_HAT))


def reduct_sigma_printed(chi: Term, phi: Term, psi: Term) -> Term:
    """``R[T^ phi R, L] R[T^2 psi R^2, L] pi(chi, F^)`` read literally.

    Denotes ``sigma`` only in the older convention where ``T`` is constantly
    ``o`` and the first branch is taken on basic tests.  See :func:`reduct_sigma`.
    """
    R_, L_ = Prim("R"), Prim("L")
    first = Iter(_c(T_HAT, T_HAT, psi, R_, R_), L_)
    second = Iter(_c(T_HAT, phi, R_), L_)
    return _c(R_, second, R_, first, Pi(chi, F_HAT))


def identity_by_iteration(step: Term) -> Term:
    """``iter(step, F)``, which equals ``I`` whatever ``step`` is."""
    return Iter(step, Prim("F"))


def lll_iter_term() -> Term:
    """``L.L.L.iter(L, L)``; it denotes the constant ``o``, i.e. ``F``."""
    L_ = Prim("L")
    return _c(L_, L_, L_, Iter(L_, L_))


def pair_of_lll_iter_term() -> Term:
    """``pi(t, t)`` for ``t = L.L.L.iter(L, L)``; it denotes ``T``."""
    t = lll_iter_term()
    return Pi(t, t)


def mirror_system(hole: str = "t") -> Term:
    """``sigma(I, pi(t.R, t.L), I)``: its least solution reverses every tree."""
    t = Sym(hole)
    return Sigma(Prim("I"), Pi(Comp(t, Prim("R")), Comp(t, Prim("L"))), Prim("I"))


def mirror_term() -> Term:
    """An iteration term for the mirror function.

    The loop state is ``(todo, done)`` where ``todo`` is a stack of
    instructions (``(o, z)``: mirror ``z``; ``o``: combine the top two results)
    and ``done`` is a stack of finished subtrees.
    """
    I_, L_, R_, F_ = Prim("I"), Prim("L"), Prim("R"), Prim("F")
    top = _c(L_, L_)                   # first instruction
    arg = _c(R_, L_, L_)               # z inside a visit instruction
    rest = _c(R_, L_)                  # remaining instructions
    done = R_
    leaf = Pi(rest, Pi(arg, done))
    expand = Pi(Pi(Pi(F_, _c(R_, arg)),
                   Pi(Pi(F_, _c(L_, arg)), Pi(F_, rest))),
                done)
    combine = Pi(rest, Pi(Pi(_c(L_, R_, done), _c(L_, done)), _c(R_, R_, done)))
    step = Sigma(top, Sigma(arg, expand, leaf), combine)
    init = Pi(Pi(Pi(F_, I_), F_), F_)
    return _c(L_, R_, Iter(step, L_), init)


def branching_terms(beta: str = "b") -> tuple[Term, Term]:
    """``(sigma, chi)`` of the branching example with ``beta`` constantly ``{o, (o,o)}``."""
    b = Sym(beta)
    return (Sigma(b, Prim("L"), Prim("R")), Sigma(Prim("I"), b, Prim("I")))


def kappa_system(hole: str = "t", beta: str = "b") -> Term:
    """A recursive description of the branching iteration.

    ``t = sigma(I, sigma(b, I, sigma(b, t.L, t.R)), I)``: basic arguments are
    returned, pairs contribute themselves and both subtrees.
    """
    t, b = Sym(hole), Sym(beta)
    return Sigma(Prim("I"),
                 Sigma(b, Prim("I"), Sigma(b, Comp(t, Prim("L")), Comp(t, Prim("R")))),
                 Prim("I"))


def beta_both() -> Mfn2:
    """The constant multi-valued function ``z -> {o, (o,o)}``."""
    both = frozenset((O, _OO))
    return Mfn2(lambda z: both, "beta")
