import itertools
from fractions import Fraction

import pytest

from moschext.eff_spaces import (cauchy_check, density_witness, discrete_top_space,
                                 h_star_member, metric_delta_extend, metric_extend,
                                 metric_H_extend, neighbourhoods, rational_line, s_star_member,
                                 s_star_stream, top_extend, top_intersect_witness)
from moschext.mosch_core import O, BasePoint, Pair
from moschext.names import pair_j
from moschext.qenum import alpha_q, index_of_q
from moschext.reals_demo import real_name_of_rational

A, B = BasePoint("a"), BasePoint("b")
X = discrete_top_space()
Xs = top_extend(X)


def _pair_index(m, n):
    return 2 * pair_j(m, n) + 1


def test_extended_open_sets():
    assert Xs.member(0, O) and not Xs.member(0, A)
    # base index 2i+2 is U_i: U_0 = {a}, U_1 = {b}, U_2 = {a, b}
    assert Xs.member(2, A) and not Xs.member(2, B)
    assert Xs.member(6, A) and Xs.member(6, B)
    i = _pair_index(2, 0)
    assert Xs.member(i, Pair(A, O)) and not Xs.member(i, Pair(B, O)) and not Xs.member(i, A)


def test_s_star_clauses():
    assert s_star_member(X, 0, 0, 0)
    assert s_star_member(X, 6, 2, 2)            # {a,b} & {a} contains {a}
    assert not s_star_member(X, 2, 4, 2)        # {a} & {b} is empty
    assert not s_star_member(X, 0, 2, 2)        # mixed tags
    p = _pair_index
    assert s_star_member(X, p(6, 0), p(2, 0), p(2, 0))
    assert not s_star_member(X, p(6, 0), p(2, 0), p(4, 0))


def test_closure_matches_brute_force():
    bound = 45
    got = list(top_intersect_witness(X, bound, base_limit=bound))
    assert len(got) == len(set(got))
    want = {t for t in itertools.product(range(bound + 1), repeat=3) if s_star_member(X, *t)}
    assert set(got) == want


def test_stream_has_no_repeats_and_is_sound():
    seen = set()
    for t in itertools.islice(s_star_stream(X), 3000):
        assert t not in seen and s_star_member(X, *t)
        seen.add(t)


def test_neighbourhoods():
    nb = neighbourhoods(X, Pair(A, O), range(3))
    assert nb == sorted([_pair_index(2, 0), _pair_index(6, 0)])


M = rational_line()
Ms = metric_extend(M)


def test_lifted_distance():
    q = lambda x: BasePoint(Fraction(x))
    assert Ms.d(O, O) == 0
    assert Ms.d(O, q(0)) == 1 and Ms.d(O, Pair(O, O)) == 1
    assert Ms.d(q(0), q("1/3")) == Fraction(1, 3)
    assert Ms.d(q(0), q(5)) == 1
    assert Ms.d(Pair(q(0), O), Pair(q("1/2"), O)) == Fraction(1, 2)
    assert Ms.d(Pair(q(0), q(1)), Pair(q("1/4"), q("1/2"))) == Fraction(1, 2)


def test_lifted_dense_sequence():
    assert Ms.alpha(0) is O
    assert Ms.alpha(2 * index_of_q(Fraction(3, 7)) + 2) == BasePoint(Fraction(3, 7))
    assert Ms.alpha(_pair_index(0, 0)) == Pair(O, O)


def test_delta_needs_the_clamp():
    i, j = 2 * index_of_q(0) + 2, 2 * index_of_q(5) + 2
    assert Ms.delta(i, j, 3) == 1 == Ms.d(Ms.alpha(i), Ms.alpha(j))
    raw = metric_delta_extend(M.delta, clamp=False)
    assert raw(i, j, 3) == 5


def test_h_star_box_matches_exact_comparison():
    box, kl = 24, 4

    def h_box(b, kb):
        return ((i, j, k, l) for i in range(b + 1) for j in range(b + 1)
                for k in range(kb + 1) for l in range(kb + 1) if M.h_member(i, j, k, l))

    got = set(metric_H_extend(h_box, box, kl))
    for t in itertools.product(range(box + 1), range(box + 1), range(kl + 1), range(kl + 1)):
        i, j, k, l = t
        exact = Ms.d(Ms.alpha(i), Ms.alpha(j)) < Fraction(k + 1, l + 1)
        assert (t in got) == exact == h_star_member(M.h_member, *t)


def test_cauchy_names():
    x = Fraction(-7, 3)
    p = real_name_of_rational(x)
    assert cauchy_check(M, p, x, 30)
    assert not cauchy_check(M, p, x + Fraction(1, 2 ** 10), 30)


@pytest.mark.parametrize("eps", [Fraction(1, 2), Fraction(1, 100)])
def test_density_witness(eps):
    z = Pair(BasePoint(Fraction(1, 3)), Pair(O, BasePoint(Fraction(-2))))
    i = density_witness(M, z, eps)
    assert Ms.d(Ms.alpha(i), z) < eps


def test_rational_enumeration():
    assert alpha_q(0) == 0
    for q in (Fraction(0), Fraction(-5, 2), Fraction(7, 3), Fraction(1, 100)):
        assert alpha_q(index_of_q(q)) == q
    assert {alpha_q(i) for i in range(200)} >= {Fraction(n, d) for n in range(-3, 4) for d in (1, 2)}
