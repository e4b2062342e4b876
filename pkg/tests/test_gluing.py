from math import comb

import pytest

from frobenius_gluing.frobenius import poincare_table
from frobenius_gluing.gluing import (Decomposition, enumerate_decompositions, predicted_betti,
                                     predicted_poincare_table, verify_gluing)
from frobenius_gluing.homology import BettiVector
from frobenius_gluing.linalg import GF2, QQ, FieldChoice
from frobenius_gluing.monoid import Free, Glued, GluedElement, adjoin_root, numerical_semigroup
from oracles import brute_free_decompositions

d = BettiVector.delta
N = Free(1)
GM = Glued(N, N, (3,), (2,))
S23 = numerical_semigroup(2, 3)


def test_decompositions_of_rho():
    decs = enumerate_decompositions(GM, GM.rho)
    assert set(decs) == {Decomposition(1, (0,), (0,)), Decomposition(0, (3,), (0,)),
                         Decomposition(0, (0,), (2,))}


def test_decompositions_without_rho():
    lam = GluedElement(0, (2,), (1,))
    assert enumerate_decompositions(GM, lam) == [Decomposition(0, (2,), (1,))]
    assert len(enumerate_decompositions(GM, GM.multiple(2, GM.rho))) == 6


@pytest.mark.parametrize("a,b", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_decomposition_count_against_brute_force(a, b):
    G = Glued(N, N, (b,), (a,))
    bound = 36
    for lam in G.elements_up_to(bound):
        (x1,), (x2,) = G.expand(lam)
        brute = brute_free_decompositions(a, b, (x1, x2), bound)
        ours = sorted((e, l1[0], l2[0]) for e, l1, l2 in enumerate_decompositions(G, lam))
        assert ours == brute
        assert len(ours) == comb(lam.n + 2, 2)


def test_predicted_examples():
    assert predicted_betti(GM, GM.rho) == d(2)
    assert predicted_betti(GM, GluedElement(0, (1,), (0,))) == d(1)
    eight = GM.normalize((4,), (0,))
    assert GM.degree(eight) == 8
    assert predicted_betti(GM, eight) == d(3)


def test_predicted_table_matches_two_generator_table():
    P = predicted_poincare_table(GM, 9)
    direct = poincare_table(S23, 9)
    as_int = {(GM.degree(lam),): b for lam, b in P.entries.items()}
    assert as_int == direct.entries


def test_below_rho_is_a_plain_product():
    P = predicted_poincare_table(GM, 5)
    assert all(lam.n == 0 for lam in P.entries)


@pytest.mark.parametrize("how", ["series", "pointwise"])
def test_predicted_tables_agree_with_direct(how):
    A = adjoin_root(S23, (6,), 2)
    assert predicted_poincare_table(A, 24, how=how).entries == poincare_table(A, 24).entries


@pytest.mark.parametrize("field", [QQ, GF2, FieldChoice(3)])
def test_verify_gluing_small(field):
    r = verify_gluing(GM, 24, field)
    assert r.ok and r.exit_code == 0
    assert r.summary()["checked"] == len(GM.elements_up_to(24))
    assert r.first_failure() is None
    assert "OK" in r.to_text()


def test_verify_gluing_bound_zero():
    r = verify_gluing(GM, 0)
    assert [c.element for c in r.checks] == [GM.zero()]
    assert r.ok


def test_verify_gluing_reports_mismatch():
    r = verify_gluing(GM, 8)
    # corrupt one prediction and check the report shape
    r.checks[3].predicted = d(7)
    assert r.exit_code == 1 and len(r.mismatches) == 1
    fail = r.first_failure()
    assert fail["predicted"] == {7: 1}
    assert set(fail["interval"]) == {"elements", "covers"}
    assert r.to_json()["summary"]["mismatched"] == 1


def test_verify_gluing_records_resource_errors():
    r = verify_gluing(GM, 16, method="chains", max_simplices=50)
    assert not r.ok and r.exit_code == 2
    assert r.errors and all("simplices" in c.error for c in r.errors)
    # elements below the cap are still checked
    assert r.summary()["matched"] == len(r.checks) - len(r.errors) > 0
    assert "error at" in r.to_text()


def test_verify_gluing_with_workers():
    A = adjoin_root(S23, (6,), 2)
    assert verify_gluing(A, 20, method="chains", jobs=2).to_json() == \
        verify_gluing(A, 20, method="chains").to_json()
