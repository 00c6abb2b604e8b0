import pytest

from conftest import CORPUS
from leibnizkit.algebra import Algebra, check_left_leibniz, is_lie, leibniz_kernel
from leibnizkit.errors import (
    CharacteristicError,
    DimTooSmall,
    NotAnisotropic,
    NotStrong,
    ParseError,
    RootExists,
    SigmaZero,
)
from leibnizkit.latticescan import check_property_IorSI, nilpotent_radical, verify_declared_radical
from leibnizkit.scalars import GF, QQ, Answer, function_field
from leibnizkit.zoo import (
    RECIPES,
    ZooRecipe,
    build_B_family,
    build_cyclic_dim2,
    build_example_3_8,
    build_example_3_10,
    build_heisenberg,
    build_strong_extraspecial,
    build_theorem_A,
    build_theorem_C,
    square_form_isotropic_vector,
)

F2t = function_field(2, "t")
t = F2t.gen()


def test_cyclic():
    a = build_cyclic_dim2(GF(2))
    assert leibniz_kernel(a) == a.span("a2")
    assert not is_lie(build_cyclic_dim2(QQ))


def test_theorem_A():
    a = build_theorem_A(GF(5), 3, 2)
    assert nilpotent_radical(a) == a.span("a1", "a2", "a3")
    with pytest.raises(SigmaZero):
        build_theorem_A(GF(3), 2, 0)
    with pytest.raises(DimTooSmall):
        build_theorem_A(GF(3), 1, 1)


def test_example_3_10_gates():
    for eta in GF(2).elements():
        with pytest.raises(RootExists):
            build_example_3_10(GF(2), eta)
    with pytest.raises(RootExists):
        build_example_3_10(F2t, t * t)
    with pytest.raises(CharacteristicError):
        build_example_3_10(GF(3), 1)


def test_theorem_C():
    assert build_theorem_C(F2t, t, 0, 0) == build_example_3_10(F2t, t)
    c = build_theorem_C(F2t, t, 1, 1)
    assert check_left_leibniz(c) == []
    with pytest.raises(RootExists):
        build_theorem_C(GF(2), 1, 0, 0)
    # lambda != mu: X^2 + X + t is rootless, but the identity fails
    assert check_left_leibniz(build_theorem_C(F2t, t, 1, 0))


def test_example_3_8():
    a = build_example_3_8(F2t, t, t)
    assert not is_lie(a)
    assert len(check_left_leibniz(a)) == 4
    with pytest.raises(RootExists):
        build_example_3_8(GF(2), 1, 1)
    s = build_example_3_8(F2t, t, t, "symmetric")
    rep = verify_declared_radical(s, s.span("z", "a", "b"))
    assert rep.details["nilpotent ideal"] == "yes"


def test_example_3_8_symmetric_has_neither_subalgebra():
    # [b+v, b+v] = (t + t) z = 0, so span{b+v+z} is a line whose idealizer contains z
    s = build_example_3_8(F2t, t, t, "symmetric")
    from leibnizkit.latticescan import ScanBudget

    r = check_property_IorSI(s, ScanBudget.for_field(F2t, 1))
    assert not r.holds
    assert r.counterexample.space.encode() == "1,0,1,1"


def test_heisenberg():
    assert leibniz_kernel(build_heisenberg(QQ)).dim == 0
    a = build_heisenberg(GF(3))
    assert nilpotent_radical(a).is_full()


def test_strong_extraspecial():
    a = build_strong_extraspecial(GF(3), 2, [1, 1])
    assert a.dim == 3
    with pytest.raises(NotStrong) as exc:
        build_strong_extraspecial(GF(2), 2, [1, 1])
    assert exc.value.witness == (GF(2).one, GF(2).one, GF(2).zero)
    build_strong_extraspecial(F2t, 2, [1, t])
    with pytest.raises(NotStrong):
        build_strong_extraspecial(F2t, 3, [1, t, t + 1])
    ans, alpha = square_form_isotropic_vector(QQ, [QQ(1), QQ(-4)])
    assert ans is Answer.YES and alpha[0] ** 2 - 4 * alpha[1] ** 2 == QQ.zero
    assert square_form_isotropic_vector(QQ, [QQ(1), QQ(1)])[0] is Answer.NO


def test_B_family():
    b2 = build_B_family(GF(3), "b2", [1, 1])
    assert b2.is_leibniz
    with pytest.raises(NotAnisotropic):
        build_B_family(GF(5), "b2", [1, 1])
    b1 = build_B_family(F2t, "b1", [1, t], eta=t)
    assert b1.is_leibniz
    mismatched = build_B_family(F2t, "b1", [1, t], eta=t, xi=[1, 0], right_xi=[0, 0])
    assert not mismatched.is_leibniz
    with pytest.raises(CharacteristicError):
        build_B_family(GF(3), "b1", [1, 1], eta=1)


def test_recipes_and_round_trip():
    assert set(RECIPES) >= {"cyclic2", "theorem-a", "example-3-10", "example-3-8", "heisenberg", "extraspecial"}
    a = ZooRecipe("theorem-a", GF(3), {"m": "2", "sigma": "1"}).build()
    assert a == build_theorem_A(GF(3), 2, 1)
    assert Algebra.loads(a.dumps()).dumps() == a.dumps()
    with pytest.raises(ParseError):
        ZooRecipe("example-3-10", F2t, {}).build()
    with pytest.raises(ParseError):
        ZooRecipe("heisenberg", GF(2), {"bogus": "1"}).build()


@pytest.mark.parametrize(
    "path,builder",
    [
        ("example310.json", lambda: build_example_3_10(F2t, t)),
        ("heis2.json", lambda: build_heisenberg(GF(2))),
        ("theoremA_gf3.json", lambda: build_theorem_A(GF(3), 2, 1)),
        ("extraspecial_gf3.json", lambda: build_strong_extraspecial(GF(3), 2, [1, 1])),
    ],
)
def test_corpus_matches_builders(path, builder):
    assert (CORPUS / path).read_text() == builder().dumps()
