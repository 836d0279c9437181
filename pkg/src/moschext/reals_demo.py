"""Exact real recursion through the realizer pipeline, with X = R.

Reals carry Cauchy names over a fixed enumeration of Q: ``p`` names ``x``
when ``|alpha_rho(p(k)) - x| < 2**-k`` for all ``k``.  Inside R* a real is
a base point, so its R*-name is the injected ``2 p(k) + 2``.

A recursion ``phi(x) = alpha(x)`` on one side of ``c`` and
``beta(x, phi(x + 1))`` on the other is compiled into a single iteration
term (see :func:`rec_term`) and evaluated by the generic realizer compiler.
Base functions are interval evaluators over rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Callable, Optional

from .combinatory import DEFAULT_FUEL
from .errors import DomainViolation, FuelExhausted, JoinMismatch
from .names import Name, constant_name, unpair_j
from .qenum import alpha_q, index_of_q
from .realizers import IterLog, Realizer, compile_realizer, rz_inject_base
from .terms import Comp, Iter, Pi, Prim, Sigma, Sym, Term, comp

__all__ = [
    "alpha_rho", "index_of_rational", "parse_rational", "Interval", "Domain", "IntervalFn",
    "real_name_of_rational", "approx", "interval_realizer", "shift_realizer",
    "soft_test_realizer", "strict_test_realizer", "rec_term", "rec1_eval", "rec2_eval",
    "rec2_loop_bound", "join_functions", "demo_alpha", "demo_beta", "demo_alpha1", "closed_form",
    "RecResult",
]

alpha_rho = alpha_q
index_of_rational = index_of_q


def parse_rational(text: str) -> Fraction:
    """``p/q`` or a decimal literal, converted exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational literal: {text!r}") from e


# -- intervals -------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        x = Fraction(x)
        return cls(x, x)

    @classmethod
    def around(cls, x, r) -> "Interval":
        return cls(Fraction(x) - r, Fraction(x) + r)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other):
        other = _iv(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_iv(other))

    def __rsub__(self, other):
        return _iv(other) - self

    def __mul__(self, other):
        other = _iv(other)
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def sq(self) -> "Interval":
        lo, hi = abs(self.lo), abs(self.hi)
        if self.lo <= 0 <= self.hi:
            return Interval(Fraction(0), max(lo, hi) ** 2)
        return Interval(min(lo, hi) ** 2, max(lo, hi) ** 2)

    def vmax(self, other) -> "Interval":
        other = _iv(other)
        return Interval(max(self.lo, other.lo), max(self.hi, other.hi))

    def vmin(self, other) -> "Interval":
        other = _iv(other)
        return Interval(min(self.lo, other.lo), min(self.hi, other.hi))

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def _iv(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


@dataclass(frozen=True)
class Domain:
    """An interval of R with optional infinite ends and open/closed flags."""

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    lo_closed: bool = False
    hi_closed: bool = False

    def contains(self, x) -> bool:
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def classify(self, iv: Interval) -> Optional[bool]:
        """True if ``iv`` lies inside, False if disjoint, None if it straddles a boundary."""
        if self.contains(iv.lo) and self.contains(iv.hi):
            return True
        if self.hi is not None and (iv.lo > self.hi or (iv.lo == self.hi and not self.hi_closed)):
            return False
        if self.lo is not None and (iv.hi < self.lo or (iv.hi == self.lo and not self.lo_closed)):
            return False
        return None

    def __str__(self):
        lo = "(-inf" if self.lo is None else ("[" if self.lo_closed else "(") + str(self.lo)
        hi = "+inf)" if self.hi is None else str(self.hi) + ("]" if self.hi_closed else ")")
        return f"{lo}, {hi}"


REALS = Domain()


@dataclass(frozen=True)
class IntervalFn:
    """An interval extension of a real function: enclosures in, enclosure out."""

    fn: Callable[..., Interval]
    domains: tuple[Domain, ...]
    label: str = "?"

    @property
    def arity(self) -> int:
        return len(self.domains)

    def __call__(self, *args) -> Interval:
        ivs = [_iv(a) for a in args]
        for iv, dom in zip(ivs, self.domains):
            if dom.classify(iv) is not True:
                raise DomainViolation(f"{self.label}: argument {iv.lo}..{iv.hi} not inside {dom}")
        return self.fn(*ivs)


# -- names of reals ----------------------------------------------------------

def real_name_of_rational(q) -> Name:
    return constant_name(index_of_rational(Fraction(q)), "real")


def approx(p: Name, k: int) -> Fraction:
    return alpha_rho(p(k))


def _emit(r: Fraction) -> int:
    return index_of_rational(r)


def _base_index(v: int) -> int:
    return v // 2 - 1


def _arg_names(p: Name, arity: int) -> list[Callable[[int], int]]:
    """Cauchy sub-names of the base points inside an R*-name of arity 1 or 2."""
    if arity == 1:
        return [lambda j: _base_index(p(j))]
    return [lambda j: _base_index(unpair_j((p(j) - 1) // 2)[0]),
            lambda j: _base_index(unpair_j((p(j) - 1) // 2)[1])]


def interval_realizer(f: IntervalFn, fuel: int = 256) -> Realizer:
    """Realizer of a real function on R*-names of its (injected) arguments.

    Output index ``k``: refine the input precision ``j = k+2, k+3, ...`` until
    the enclosure of the value is narrower than ``2**-(k+1)``, then round its
    midpoint to the grid ``2**-(k+2)``.  The emitted rational is within
    ``2**-(k+2) + 2**-(k+3) < 2**-k`` of the true value.
    """
    def fn(p: Name) -> Name:
        args = _arg_names(p, f.arity)

        def query(k: int) -> int:
            target = Fraction(1, 2 ** (k + 1))
            for j in range(k + 2, k + 2 + fuel):
                r = Fraction(1, 2 ** j)
                ivs = [Interval.around(alpha_rho(a(j)), r) for a in args]
                where = [dom.classify(iv) for iv, dom in zip(ivs, f.domains)]
                if False in where:
                    raise DomainViolation(f"{f.label}: argument outside {f.domains}")
                if None in where:
                    continue
                out = f.fn(*ivs)
                if out.width < target:
                    scale = 2 ** (k + 2)
                    return 2 * _emit(Fraction(round(out.mid * scale), scale)) + 2
            raise FuelExhausted(f"{f.label} at output index {k}", fuel)

        return Name(query, "real")

    return Realizer(fn, f.label)


def shift_realizer(delta=1) -> Realizer:
    """``x -> x + delta`` exactly on each approximation."""
    delta = Fraction(delta)

    def fn(p):
        return Name(lambda k: 2 * _emit(alpha_rho(_base_index(p(k))) + delta) + 2, "real")
    return Realizer(fn, f"shift({delta})")


def _decided(decide: Callable[[], int], label: str) -> Name:
    box: list[int] = []

    def query(k):
        if not box:
            box.append(decide())
        return box[0]

    return Name(query, label)


def strict_test_realizer(c, fuel: int = 64) -> Realizer:
    """``(o,o)`` if ``x > c``, ``o`` if ``x < c``; exhausts fuel near ``x = c``."""
    c = Fraction(c)

    def fn(p):
        def decide():
            for j in range(fuel + 1):
                a, r = alpha_rho(_base_index(p(j))), Fraction(1, 2 ** j)
                if a - r >= c:
                    return 1
                if a + r <= c:
                    return 0
            raise FuelExhausted(f"comparison with {c}", fuel)
        return _decided(decide, "test")

    return Realizer(fn, f"strict<{c}>")


def soft_test_realizer(c, prefer: str = "high", fuel: int = 64) -> Realizer:
    """A member of ``{(o,o)}``, ``{o,(o,o)}`` or ``{o}`` as ``x >= c+1``, ``c < x < c+1``, ``x <= c``.

    The two open targets ``(c, +inf)`` and ``(-inf, c+1)`` cover R, so the
    search always ends.  ``prefer`` picks the answer tried first when the
    enclosure fits both.
    """
    c = Fraction(c)
    if prefer not in ("high", "low"):
        raise ValueError("prefer must be 'high' or 'low'")

    def fn(p):
        def decide():
            for j in range(fuel + 1):
                a, r = alpha_rho(_base_index(p(j))), Fraction(1, 2 ** j)
                high, low = a - r >= c, a + r <= c + 1
                if high and (prefer == "high" or not low):
                    return 1
                if low:
                    return 0
            raise FuelExhausted(f"soft comparison with {c}", fuel)
        return _decided(decide, "test")

    return Realizer(fn, f"soft<{c},{prefer}>", "s2")


# -- the recursion term ------------------------------------------------------

L_, R_, I_, T_, F_ = (Prim(n) for n in "LRITF")


def rec_term(alpha: str = "alpha", beta: str = "beta", sigma: str = "sigma",
             chi: str = "chi") -> tuple[Term, Term]:
    """The iteration term for ``phi`` and its first loop (whose count is ``n``).

    The state ``(x_cur, (m*, x0))`` steps ``x_cur`` up while ``chi`` says
    "below"; then ``v = alpha(x_n)`` and ``v := beta(x0 + m - 1, v)`` for
    ``m = n, ..., 1``.  ``x0 + m - 1`` is recomputed from ``x0`` by an inner
    loop, so names never nest more than a constant depth.
    """
    a, b, s, x = Sym(alpha), Sym(beta), Sym(sigma), Sym(chi)
    init = Pi(I_, Pi(F_, I_))
    step1 = Pi(Comp(s, L_), Pi(Pi(F_, comp(L_, R_)), comp(R_, R_)))
    loop1 = Iter(step1, Sigma(Comp(x, L_), F_, T_))
    mid = Pi(Comp(a, L_), R_)
    power = Comp(R_, Iter(Pi(comp(R_, L_), Comp(s, R_)), L_))
    counter, start = comp(R_, L_, R_), comp(R_, R_)
    step2 = Pi(comp(b, Pi(comp(power, Pi(counter, start)), L_)), Pi(counter, start))
    loop2 = Iter(step2, comp(L_, R_))
    return comp(L_, loop2, mid, loop1, init), loop1


@dataclass
class RecResult:
    value: Fraction
    loops: int
    name: Name


def _run(term, loop1, registry, x, prec, fuel, space) -> RecResult:
    log = IterLog()
    rz = compile_realizer(term, registry, space, fuel, log)
    xname = x if isinstance(x, Name) else real_name_of_rational(x)
    out = rz(rz_inject_base()(xname))
    v = alpha_rho(_base_index(out(prec)))
    return RecResult(v, log.total(str(loop1)), out)


def rec1_eval(alpha: IntervalFn, beta: IntervalFn, c, x, prec: int = 20,
              fuel: int = DEFAULT_FUEL) -> RecResult:
    """``phi(x)`` within ``2**-prec`` for the single-valued recursion with a strict test at ``c``.

    ``x`` must avoid ``c, c-1, c-2, ...`` (where the strict test never decides).
    """
    term, loop1 = rec_term()
    reg = {"alpha": interval_realizer(alpha), "beta": interval_realizer(beta),
           "sigma": shift_realizer(1), "chi": strict_test_realizer(c)}
    return _run(term, loop1, reg, x, prec, fuel, "s1")


def rec2_eval(alpha: IntervalFn, beta: IntervalFn, c, x, prec: int = 20,
              fuel: int = DEFAULT_FUEL, prefer: str = "high") -> RecResult:
    """``phi(x)`` within ``2**-prec`` for the multi-valued recursion with a soft test at ``c``.

    Needs ``alpha(x) = beta(x, alpha(x+1))`` on ``[c, c+1)``; then every
    admissible answer of the soft test yields the same value.
    """
    term, loop1 = rec_term()
    reg = {"alpha": interval_realizer(alpha), "beta": interval_realizer(beta),
           "sigma": shift_realizer(1), "chi": soft_test_realizer(c, prefer)}
    return _run(term, loop1, reg, x, prec, fuel, "s2")


def rec2_loop_bound(c, x) -> int:
    return max(0, ceil(Fraction(c) + 1 - Fraction(x)))


# -- join ------------------------------------------------------------------

def join_functions(alpha: IntervalFn, alpha1: IntervalFn, c, tol=Fraction(1, 2 ** 40)) -> IntervalFn:
    """The common extension of ``alpha`` on ``[c, inf)`` and ``alpha1`` on ``[c-1, c]``.

    ``alpha(max(x, c)) + alpha1(min(x, c)) - alpha(c)``; raises
    :class:`JoinMismatch` unless the two agree at ``c`` within ``tol``.
    """
    c = Fraction(c)
    ac, a1c = alpha(c), alpha1(c)
    if abs(ac.mid - a1c.mid) > tol + (ac.width + a1c.width) / 2:
        raise JoinMismatch(f"alpha({c}) = {ac.mid} but alpha1({c}) = {a1c.mid}")

    def fn(x: Interval) -> Interval:
        return alpha.fn(x.vmax(c)) + alpha1.fn(x.vmin(c)) - ac

    return IntervalFn(fn, (Domain(c - 1, None, lo_closed=True),), f"join({alpha.label},{alpha1.label})")


# -- the documented instance -------------------------------------------------

def closed_form(x) -> Fraction:
    x = Fraction(x)
    return (x - x * x) / 2


def demo_alpha(c=0, closed: bool = True) -> IntervalFn:
    """``(x - x^2)/2`` on ``[c, inf)`` (or ``(c, inf)`` with ``closed=False``)."""
    return IntervalFn(lambda x: (x - x.sq()) * Fraction(1, 2),
                      (Domain(Fraction(c), None, lo_closed=closed),), "alpha")


def demo_beta(hi=None, closed: bool = False) -> IntervalFn:
    """``x + y`` with ``x`` below ``hi`` (unbounded when ``hi`` is None)."""
    dom = Domain(None, None if hi is None else Fraction(hi), hi_closed=closed)
    return IntervalFn(lambda x, y: x + y, (dom, REALS), "beta")


def demo_alpha1(c=0) -> IntervalFn:
    """``beta(x, alpha(x + 1)) = x + (x+1 - (x+1)^2)/2`` on ``[c-1, c]``."""
    def fn(x):
        y = x + 1
        return x + (y - y.sq()) * Fraction(1, 2)
    c = Fraction(c)
    return IntervalFn(fn, (Domain(c - 1, c, True, True),), "alpha1")
