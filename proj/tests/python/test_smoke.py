"""Smoke tests for the txyz extension module.

Counts are cross-checked against pure-Python big-integer arithmetic, which
keeps the expected values independent of the C++ code under test.
"""

import pytest

import txyz


def test_universe_basics():
    u = txyz.Universe(4, 3, 2)
    assert (u.n, u.m, u.k) == (4, 3, 2)
    assert u.case_tag == txyz.CaseTag.PROPER
    assert u.z_points() == [0, 1]
    assert u.y_minus_z() == [2]
    assert u.x_minus_y() == [3]
    assert txyz.Universe(3, 3, 3).case_tag == txyz.CaseTag.FULL
    with pytest.raises(ValueError):
        txyz.Universe(2, 3, 1)


def test_transformation_roundtrip():
    t = txyz.Transformation.parse("0,0,2")
    assert t.images == [0, 0, 2]
    assert str(t) == "0,0,2"
    assert t[2] == 2
    assert txyz.Transformation([0, 0, 2]) == t
    assert txyz.compose(t, t) == t
    a = txyz.Transformation.parse("0,0,1")
    assert txyz.compose(a, a) == txyz.Transformation.parse("0,0,0")


def test_images_and_kernels():
    t = txyz.Transformation.parse("0,0,2")
    assert txyz.image_of(t, [0, 1, 2]).points == [0, 2]
    assert txyz.kernel_of(t).blocks == [[0, 1], [2]]
    assert txyz.agree_on(t, txyz.Transformation.parse("0,0,1"), [0, 1])


def test_membership_and_enumeration():
    u = txyz.Universe(3, 2, 1)
    assert txyz.is_member(u, txyz.Transformation.parse("0,0,2"))
    assert not txyz.is_member(u, txyz.Transformation.parse("0,1,0"))
    members = txyz.members(u)
    assert [str(t) for t in members] == ["0,0,0", "0,0,1", "0,0,2"]
    assert list(txyz.ElementStream(u)) == members
    assert len(txyz.members(txyz.Universe(4, 3, 2))) == 32
    assert len(txyz.members(txyz.Universe(4, 3, 2), stratum=2)) == 24
    assert txyz.random_member(u, 7) == txyz.random_member(u, 7)


def test_counts_match_python_arithmetic():
    for n in range(1, 7):
        for m in range(1, n + 1):
            for k in range(1, m + 1):
                u = txyz.Universe(n, m, k)
                assert txyz.order(u) == k**m * n ** (n - m)
    big = txyz.Universe(50, 30, 20)
    assert txyz.order(big) == 20**30 * 50**20
    assert txyz.order_stratum(txyz.Universe(4, 3, 2), 2) == 24
    assert txyz.regular_count(txyz.Universe(4, 3, 2)) == 16
    assert txyz.idempotent_count(txyz.Universe(4, 3, 2)) == 10
    assert txyz.binomial(60, 30) == 118264581564861424
    assert txyz.stirling2(10, 4) == 34105
    assert txyz.stirling2(10, 4) == txyz.stirling2_by_formula(10, 4)


def test_structure():
    u = txyz.Universe(3, 2, 1)
    a = txyz.Transformation.parse("0,0,2")
    assert txyz.is_regular_element(u, a)
    b = txyz.quasi_inverse(u, a)
    assert txyz.compose(txyz.compose(a, b), a) == a
    with pytest.raises(txyz.NotRegularError):
        txyz.quasi_inverse(u, txyz.Transformation.parse("0,0,1"))
    with pytest.raises(txyz.NotMemberError):
        txyz.is_regular_element(u, txyz.Transformation.parse("0,1,0"))

    assert not txyz.is_regular_semigroup(u)
    w = txyz.nonregular_witness(u)
    assert w == txyz.Transformation.parse("0,0,1")
    assert not txyz.is_regular_element(u, w)

    assert txyz.is_idempotent(u, a)
    e = txyz.idempotent_with_kernel(u, txyz.KernelPartition(3, [[0, 1], [2]]))
    assert e == a
    missing = txyz.idempotent_with_kernel(
        txyz.Universe(4, 3, 2), txyz.KernelPartition(4, [[0, 1], [2], [3]])
    )
    assert missing is None


def test_relations_and_abundance():
    u = txyz.Universe(3, 2, 1)
    a = txyz.Transformation.parse("0,0,1")
    b = txyz.Transformation.parse("0,0,2")
    assert txyz.rstar_related(u, a, b)
    assert txyz.rstar_oracle(u, a, b)
    assert not txyz.lstar_related(u, a, b)
    assert not txyz.lstar_oracle(u, a, b)
    assert txyz.lambda_related(u, txyz.Transformation.parse("0,0,0"), b)

    classes = txyz.relation_classes(u, txyz.RelationKind.RSTAR)
    assert [[str(t) for t in cls] for cls in classes.classes] == [
        ["0,0,0"],
        ["0,0,1", "0,0,2"],
    ]

    verdict = txyz.abundance(u, empirical=True)
    assert (verdict.left, verdict.right) == (False, True)
    assert verdict.witness_kind == txyz.RelationKind.LSTAR
    assert [str(t) for t in verdict.witness_class] == ["0,0,1"]

    neither = txyz.abundance(txyz.Universe(4, 3, 2))
    assert (neither.left, neither.right) == (False, False)
    full = txyz.abundance(txyz.Universe(3, 3, 3))
    assert (full.left, full.right) == (True, True)


def test_verification_harness():
    report = txyz.verify_counts(3)
    assert report.overall
    assert report.suite == "counts"
    assert any(
        c.check == "order" and c.expected == "3" and c.passed for c in report.cells
    )
    assert txyz.verify_relations(3).overall
    assert txyz.verify_regularity(3).overall
    assert txyz.verify_abundance(3).overall
    assert '"overall": true' in report.to_json()
