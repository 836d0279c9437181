import random

from moschext.checks import Report, iteration_oracle, random_mfn2, random_pfn1, run_suite
from moschext.combinatory import Mfn2, Pfn1, s1_iter, s2_iter
from moschext.mosch_core import O, BasePoint, Pair

A = BasePoint("a")
OO = Pair(O, O)


def test_oracle_on_hand_made_cases():
    step = Mfn2.from_table({OO: [O]})
    chi = Mfn2.from_table({OO: [O, OO], O: [O]})
    assert iteration_oracle(step, chi, OO, multi=True) == ("value", frozenset({OO, O}))
    loop = Mfn2.from_table({O: [O]})
    assert iteration_oracle(loop, Mfn2.from_table({O: [OO]}), O, True)[0] == "undefined"
    f = Pfn1.from_table({OO: O})
    c = Pfn1.from_table({OO: OO, O: O})
    assert iteration_oracle(f, c, OO, multi=False) == ("value", O)


def test_oracle_agrees_with_evaluators(U1):
    rng = random.Random(4)
    for _ in range(40):
        s, c = random_mfn2(rng, U1, max_size=2), random_mfn2(rng, U1, max_size=2)
        it = s2_iter(s, c)
        for z in U1:
            kind, val = iteration_oracle(s, c, z, True)
            if kind == "value":
                assert it(z) == val
        s1, c1 = random_pfn1(rng, U1), random_pfn1(rng, U1)
        it1 = s1_iter(s1, c1)
        for z in U1:
            kind, val = iteration_oracle(s1, c1, z, False)
            if kind == "value":
                assert it1(z) == val


def test_small_suites_pass():
    for name, cases in (("axioms", 10), ("reduct", 5), ("iteration", 5), ("embed", 10),
                        ("realizers", 40), ("metric", 50)):
        rep = run_suite(name, cases, seed=3)
        assert rep.ok, rep.lines()
        assert rep.total > 0


def test_report_records_failures():
    r = Report("x")
    r.record("p", True)
    r.record("p", False, lambda: "boom")
    assert not r.ok and r.counts == {"p": [1, 1]} and r.failures == ["p: boom"]
