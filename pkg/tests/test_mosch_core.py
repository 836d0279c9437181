import pytest

from moschext.errors import NotANatCode
from moschext.mosch_core import (O, Atom, BasePoint, Pair, base_points_of, code_to_nat, decode_seq,
                                 depth, encode_seq, is_basic, is_pair, left, nat_to_code, right,
                                 universe)

A, B = BasePoint("a"), BasePoint("b")
OO = Pair(O, O)


def test_atom_is_a_singleton():
    assert Atom() is O
    assert is_basic(O) and not is_pair(O)


def test_structural_equality_and_hash():
    assert Pair(A, Pair(O, B)) == Pair(BasePoint("a"), Pair(O, BasePoint("b")))
    assert hash(Pair(A, O)) == hash(Pair(BasePoint("a"), O))
    assert Pair(A, O) != Pair(O, A)
    assert Pair(O, O) != O
    assert O != Pair(O, O)


def test_projections():
    z = Pair(A, Pair(O, B))
    assert left(z) == A and right(z) == Pair(O, B)
    assert left(O) is O and right(O) is O
    for u in (A, B):
        assert left(u) == OO and right(u) == OO


def test_nat_codes():
    assert nat_to_code(0) is O
    assert nat_to_code(1) == OO
    assert nat_to_code(2) == Pair(O, Pair(O, O))
    assert depth(nat_to_code(7)) == 7
    for n in range(30):
        assert code_to_nat(nat_to_code(n)) == n


def test_code_to_nat_rejects_other_elements():
    for z in (A, Pair(A, O), Pair(OO, O)):
        with pytest.raises(NotANatCode):
            code_to_nat(z)


def test_long_nat_codes_do_not_recurse():
    z = nat_to_code(50000)
    assert z == nat_to_code(50000)
    assert code_to_nat(z) == 50000


def test_sequences_round_trip():
    items = [A, O, Pair(B, O)]
    assert decode_seq(encode_seq(items)) == items
    assert decode_seq(encode_seq([])) == []


def test_universe_sizes():
    # n(0) = |X| + 1 and n(d+1) = n(0) + n(d)^2
    sizes = [3]
    for _ in range(3):
        sizes.append(3 + sizes[-1] ** 2)
    for d, want in enumerate(sizes):
        U = universe(("a", "b"), d)
        assert len(U) == want == len(set(U))
    assert sizes[2:] == [147, 21612]


def test_base_points_of():
    assert sorted(p.id for p in base_points_of(Pair(A, Pair(B, A)))) == ["a", "a", "b"]


def test_string_forms():
    assert str(Pair(A, Pair(O, nat_to_code(2)))) == "(`a`,#3)"
    assert str(OO) == "(o,o)"
