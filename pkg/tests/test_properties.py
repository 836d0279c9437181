from fractions import Fraction

from hypothesis import given, settings, strategies as st

from moschext.discrete import decode, elem_name
from moschext.eff_spaces import metric_extend, rational_line
from moschext.mosch_core import O, BasePoint, Pair
from moschext.names import SZUDZIK, pair_j, unpair_j
from moschext.qenum import alpha_q, index_of_q, unzigzag, zigzag

nat = st.integers(min_value=0, max_value=10 ** 12)


@given(nat, nat)
def test_cantor_round_trip(m, n):
    assert unpair_j(pair_j(m, n)) == (m, n)
    assert pair_j(m, n) >= max(m, n)


@given(nat)
def test_szudzik_round_trip(c):
    assert SZUDZIK.pair(*SZUDZIK.unpair(c)) == c


@given(st.integers(-10 ** 9, 10 ** 9))
def test_zigzag(a):
    assert unzigzag(zigzag(a)) == a


@given(st.fractions(max_denominator=10 ** 6))
def test_rational_index(q):
    assert alpha_q(index_of_q(q)) == q


discrete = st.recursive(st.sampled_from([O, BasePoint("a"), BasePoint("b")]),
                        lambda sub: st.builds(Pair, sub, sub), max_leaves=16)


@given(discrete, st.integers(0, 1000))
def test_every_salted_name_decodes(z, salt):
    assert decode(elem_name(z, salt)) == z


real_points = st.recursive(
    st.one_of(st.just(O), st.builds(BasePoint, st.fractions(-5, 5, max_denominator=50))),
    lambda sub: st.builds(Pair, sub, sub), max_leaves=8)
Ms = metric_extend(rational_line())


@settings(max_examples=300)
@given(real_points, real_points, real_points)
def test_lifted_metric_axioms(x, y, z):
    d = Ms.d
    assert d(x, y) == d(y, x)
    assert (d(x, y) == 0) == (x == y)
    assert 0 <= d(x, y) <= 1
    assert d(x, z) <= d(x, y) + d(y, z)


@given(nat, nat, st.integers(0, 14))
def test_delta_star_accuracy(i, j, k):
    i, j = i % 5000, j % 5000
    err = abs(Ms.delta(i, j, k) - Ms.d(Ms.alpha(i), Ms.alpha(j)))
    assert err < Fraction(1, 2 ** k)
