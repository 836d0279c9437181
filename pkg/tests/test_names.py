import pytest

from moschext.errors import MalformedName, QueryBudgetExceeded
from moschext.mosch_core import O, BasePoint, Pair, nat_to_code, universe
from moschext.names import (CANTOR, SWAPPED_CANTOR, SZUDZIK, Name, constant_name, counted,
                            name_decode_shape, name_of_elem, pair_j, translate_name,
                            translate_pairing, unpair_j)


def test_cantor_values():
    assert pair_j(0, 0) == 0
    assert pair_j(1, 2) == 8
    assert [pair_j(m, n) for m, n in [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]] == [2, 1, 5, 4, 3]


def test_cantor_is_a_bijection_on_a_prefix():
    seen = {pair_j(m, n) for m in range(60) for n in range(60 - m)}
    assert seen == set(range(60 * 61 // 2))
    for c in range(5000):
        assert pair_j(*unpair_j(c)) == c


def test_cantor_inequalities():
    for m in range(40):
        for n in range(40):
            assert pair_j(m, n) >= max(m, n)


@pytest.mark.parametrize("code", [CANTOR, SWAPPED_CANTOR, SZUDZIK])
def test_pairings_are_inverse(code):
    for c in range(3000):
        assert code.pair(*code.unpair(c)) == c


def test_memo_and_misses():
    calls = []
    p = Name(lambda k: calls.append(k) or k * k)
    assert p.prefix(4) == [0, 1, 4, 9]
    assert p(2) == 4
    assert calls == [0, 1, 2, 3]
    assert p.misses == 4 and p.queried == {0, 1, 2, 3}


def test_budget():
    p = counted(constant_name(5), 3)
    p.prefix(3)
    p(1)
    with pytest.raises(QueryBudgetExceeded):
        p(3)


def _base(ident):
    return constant_name({"a": 0, "b": 1}[ident])


def test_names_of_small_elements():
    assert name_of_elem(O, _base).prefix(3) == [0, 0, 0]
    assert name_of_elem(Pair(O, O), _base).prefix(3) == [1, 1, 1]
    assert name_of_elem(BasePoint("b"), _base).prefix(2) == [4, 4]
    # (o,(o,o)) is named by 2J(0,1)+1 = 5
    assert name_of_elem(nat_to_code(2), _base)(0) == 5


def test_decode_round_trip():
    for z in universe(("a", "b"), 2):
        p = name_of_elem(z, _base)
        got = name_decode_shape(p, base=lambda q: "ab"[q(0)])
        assert got == z


def test_decode_rejects_mixed_tags():
    p = Name(lambda k: 0 if k == 0 else 2)
    with pytest.raises(MalformedName):
        name_decode_shape(p)


def test_translation_between_pairings():
    h = translate_pairing(CANTOR, SZUDZIK)
    for z in universe(("a", "b"), 2):
        src = name_of_elem(z, _base, SZUDZIK)
        assert translate_name(src, h).prefix(3) == name_of_elem(z, _base, CANTOR).prefix(3)
