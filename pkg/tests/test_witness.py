import random

import pytest

from yagita.cyclo import CycNum, zeta
from yagita.exactmat import CycMatrix, closure, det, identity
from yagita.ringspec import (
    Cyclotomic,
    QuadraticOrder,
    RationalIntegers,
    SubCyclotomicFixedField,
    UnsupportedFieldError,
)
from yagita.witness import (
    WitnessError,
    blow_up,
    blow_up_matrix,
    build_e2m_integer,
    build_extraspecial_monomial,
    build_g1,
    build_g2,
    build_q8,
    galois_rep,
    parse_kind,
    regular_rep_zeta,
    sl_pad,
    verify_embedding,
    witness_menu,
)

Z = RationalIntegers()


def test_regular_rep_zeta_small():
    assert regular_rep_zeta(2) == CycMatrix([[-1]])
    assert regular_rep_zeta(3) == CycMatrix([[0, -1], [1, -1]])
    m5 = regular_rep_zeta(5)
    assert m5.size == 4
    assert all(m5[i, 3] == -1 for i in range(4))
    assert m5[1, 0] == 1 and m5[0, 0] == 0


def test_regular_rep_realizes_multiplication_by_zeta():
    # the matrix must satisfy the minimal polynomial of zeta_p
    for p in (3, 5, 7):
        m = regular_rep_zeta(p)
        acc = identity(p - 1)
        total = acc
        for _ in range(p - 1):
            acc = acc * m
            total_rows = [
                [x + y for x, y in zip(r1, r2)] for r1, r2 in zip(total.rows, acc.rows)
            ]
            total = CycMatrix(total_rows)
        zero = CycMatrix([[0] * (p - 1) for _ in range(p - 1)])
        assert total == zero  # 1 + M + ... + M^(p-1) = 0


def test_galois_rep_small():
    assert galois_rep(3, 1) == identity(2)
    assert galois_rep(3, 2) == CycMatrix([[1, -1], [0, -1]])


@pytest.mark.parametrize("p,g", [(3, 2), (5, 2), (5, 3), (7, 3), (7, 5)])
def test_galois_conjugation_relation(p, g):
    a = regular_rep_zeta(p)
    s = galois_rep(p, g)
    s_inv = s ** (-1)
    assert s * a * s_inv == a**g


def test_build_g1_over_z():
    w = build_g1(3, 2, Z)
    assert w.dimension == 2 and w.expected_order == 6
    vw = verify_embedding(w)
    assert vw.ok and vw.order == 6
    w54 = build_g1(5, 4, Z)
    assert w54.dimension == 4
    assert verify_embedding(w54).order == 20


def test_build_g1_monomial():
    w = build_g1(5, 2, Cyclotomic(5))
    assert w.dimension == 2
    vw = verify_embedding(w)
    assert vw.ok and vw.order == 10


def test_build_g1_sl_membership_parity():
    # determinant of the order-m generator: +1 exactly when m is odd or
    # (p-1)/m is even, for the Galois model over Z
    for p, m, expect_sl in [(5, 2, True), (5, 4, False), (7, 3, True), (7, 2, False), (13, 4, False), (13, 6, True)]:
        w = build_g1(p, m, Z)
        assert w.claims_sl == expect_sl
        assert det(w.generators[0]) == 1  # order-p generator always lands in SL
    w = build_g1(5, 2, Z)
    assert all(det(m) == 1 for m in closure(w.generators))


def test_build_g1_unsupported_ring():
    with pytest.raises(UnsupportedFieldError):
        build_g1(5, 2, QuadraticOrder(5))  # l = 2: no integral model here
    with pytest.raises(UnsupportedFieldError):
        build_g1(7, 3, SubCyclotomicFixedField(7, 2))
    with pytest.raises(WitnessError):
        build_g1(5, 3, Z)  # 3 does not divide 4
    with pytest.raises(WitnessError):
        build_g1(2, 2, Z)


def test_sl_pad():
    w = build_g1(3, 2, Z)
    padded = sl_pad(w)
    assert padded.dimension == 3 and padded.claims_sl and padded.padded
    vw = verify_embedding(padded)
    assert vw.ok and vw.order == 6  # closure order preserved
    d8 = build_e2m_integer(1)
    p8 = sl_pad(d8)
    assert p8.dimension == 3
    assert verify_embedding(p8).order == 8


def test_build_g2():
    w = build_g2(5, 2, Cyclotomic(20))
    assert w.dimension == 2 and w.expected_order == 20 and w.claims_sl
    assert verify_embedding(w).ok
    w2 = build_g2(5, 4, Cyclotomic(40))
    assert w2.dimension == 4 and verify_embedding(w2).order == 40
    # det(mu * B) = mu^n det(B) = (-1)(-1) = 1
    assert det(w.generators[1]) == 1
    assert det(w2.generators[1]) == 1


def test_build_g2_requires_root_of_minus_one():
    with pytest.raises(WitnessError):
        build_g2(5, 2, Cyclotomic(5))  # mu_10 has no square root of -1
    with pytest.raises(WitnessError):
        build_g2(5, 2, Z)
    with pytest.raises(WitnessError):
        build_g2(5, 3, Cyclotomic(20))  # m must be even


def test_extraspecial_monomial():
    w = build_extraspecial_monomial(3, 1)
    assert w.dimension == 3 and w.expected_order == 27 and w.claims_sl
    vw = verify_embedding(w)
    assert vw.ok and vw.order == 27
    assert all(det(m) == 1 for m in vw.elements)
    # the center is exactly the scalar matrices zeta^k I
    scalars = [zeta(3, k) * identity(3, 3) for k in range(3)]
    central = [m for m in vw.elements if all(g * m == m * g for g in w.generators)]
    assert len(central) == 3
    for m in central:
        assert any(m == s for s in scalars)
    # monomial commutation Z X = zeta X Z
    x, z = w.generators[0], w.generators[1]
    assert z * x == zeta(3) * (x * z)


def test_blow_up_of_extraspecial():
    w = blow_up(build_extraspecial_monomial(3, 1))
    assert w.dimension == 6 and w.ring == Z
    vw = verify_embedding(w)
    assert vw.ok and vw.order == 27
    assert all(det(m) == 1 for m in vw.elements)
    assert all(x.conductor == 1 for g in w.generators for row in g.rows for x in row)


def test_blow_up_matrix_is_multiplicative():
    rng = random.Random(3)
    for _ in range(8):
        a = CycMatrix(
            [[zeta(3, rng.randrange(3)) * rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]
        )
        b = CycMatrix(
            [[zeta(3, rng.randrange(3)) * rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]
        )
        assert blow_up_matrix(a * b, 3) == blow_up_matrix(a, 3) * blow_up_matrix(b, 3)
    assert blow_up_matrix(identity(2, 3), 3) == identity(4)


def test_blow_up_multiplicative_on_witness_generators():
    w = build_extraspecial_monomial(3, 1)
    gens = [g.embed(3) for g in w.generators]
    for a in gens:
        for b in gens:
            assert blow_up_matrix(a * b, 3) == blow_up_matrix(a, 3) * blow_up_matrix(b, 3)


def test_blow_up_rejects_denominators():
    m = CycMatrix([[CycNum(3, (1, 0), 2)]])
    with pytest.raises(WitnessError):
        blow_up_matrix(m, 3)


def test_e2m_integer():
    d8 = build_e2m_integer(1)
    vw = verify_embedding(d8)
    assert vw.ok and vw.order == 8 and not d8.claims_sl
    dets = sorted(str(det(g)) for g in d8.generators)
    assert dets == ["-1", "1"]  # the reflection has determinant -1

    e22 = build_e2m_integer(2)
    vw2 = verify_embedding(e22)
    assert vw2.ok and vw2.order == 32 and e22.claims_sl
    assert all(det(m) == 1 for m in vw2.elements)


def test_q8():
    w = build_q8()
    vw = verify_embedding(w)
    assert vw.ok and vw.order == 8
    a, b = w.generators
    # i * j = k in the quaternion presentation
    i4 = zeta(4)
    k_mat = CycMatrix([[0, -i4], [-i4, 0]])
    assert a * b == k_mat
    minus_eye = -1 * identity(2)
    assert (minus_eye * minus_eye) == identity(2)
    assert all(det(m) == 1 for m in vw.elements)


def test_witness_menu_contents():
    menu = witness_menu(3, 2, Z)
    kinds = [str(e.embedding.kind) for e in menu]
    assert "G1(3,2)" in kinds

    menu2 = witness_menu(2, 4, Z)
    kinds2 = [str(e.embedding.kind) for e in menu2]
    assert "E(2,2)" in kinds2 and "D8" in kinds2

    assert witness_menu(5, 3, Z) == []


def test_witness_menu_sl_flags():
    menu = witness_menu(5, 4, Z)
    by_kind = {(str(e.embedding.kind), e.embedding.padded): e for e in menu}
    assert by_kind[("G1(5,2)", False)].in_sl  # (p-1)/m even: already in SL
    assert not by_kind[("G1(5,4)", False)].in_sl  # det -1, pad does not fit n=4
    assert ("G1(5,4)", True) not in by_kind

    menu5 = witness_menu(5, 5, Z)
    padded = [e for e in menu5 if e.embedding.padded]
    assert any(str(e.embedding.kind) == "G1(5,4)" for e in padded)
    assert all(e.in_sl and not e.in_gl for e in padded)


def test_witness_menu_q8_needs_i():
    kinds_z = [str(e.embedding.kind) for e in witness_menu(2, 2, Z)]
    assert "Q8" not in kinds_z
    kinds_zi = [str(e.embedding.kind) for e in witness_menu(2, 2, Cyclotomic(4))]
    assert "Q8" in kinds_zi


def test_witness_menu_monomial_over_cyclotomic():
    menu = witness_menu(3, 3, Cyclotomic(3))
    kinds = [str(e.embedding.kind) for e in menu]
    assert "E(3,1)" in kinds and "G1(3,2)" in kinds
    e31 = next(e.embedding for e in menu if str(e.embedding.kind) == "E(3,1)")
    assert e31.dimension == 3  # monomial form, not the blown-up integral form


def test_witness_expected_yagita_values():
    assert build_g1(5, 4, Z).expected_yagita == 8
    assert build_extraspecial_monomial(3, 1).expected_yagita == 6
    assert build_q8().expected_yagita == 4
    assert build_e2m_integer(1).expected_yagita == 4
    assert build_e2m_integer(2).expected_yagita == 8


def test_parse_kind():
    assert str(parse_kind("g1:3:2")) == "G1(3,2)"
    assert str(parse_kind("e:2:3")) == "E(2,3)"
    assert str(parse_kind("q8")) == "Q8"
    with pytest.raises(WitnessError):
        parse_kind("g3:3:2")


def test_verified_witness_faithfulness_battery():
    cases = [
        build_g1(3, 2, Z),
        build_g1(7, 3, Z),
        build_g2(5, 2, Cyclotomic(20)),
        build_extraspecial_monomial(5, 1),
        build_e2m_integer(2),
        build_q8(),
    ]
    for w in cases:
        vw = verify_embedding(w)
        assert vw.ok, f"{w} failed: {vw.summary()}"
        assert vw.order == w.expected_order
