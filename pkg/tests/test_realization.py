import json

import pytest

from koszulhecke.coxeter import CoxeterMatrix, type_A
from koszulhecke.fields import QQ, FieldError, FieldSpec
from koszulhecke.realization import (
    Realization,
    RealizationError,
    builtin,
    from_cartan,
    load_realization,
    parse_realization,
    sl2,
    sl3,
)


def _matpow(h, word, k):
    from koszulhecke.realization import _matmul

    m = h._identity()
    for _ in range(k):
        for s in word:
            m = _matmul(m, h.action_v(s))
    return m


@pytest.mark.parametrize("name", ["SL2", "SL3", "B2", "G2", "A1~"])
@pytest.mark.parametrize("field", ["Q", "F3", "F5"])
def test_builtins_validate(name, field):
    h = builtin(name, field)
    rep = h.validate()
    assert rep.ok, str(rep)
    assert rep.status("balanced") == "not checked"
    for s in range(h.rank):
        assert h.cartan_entry(s, s) == h.field(2)


def test_sl2_reflection():
    h = sl2()
    assert h.reflect_v(0, h.coroots[0]) == tuple(-x for x in h.coroots[0])
    assert h.reflect_vdual(0, h.roots[0]) == tuple(-x for x in h.roots[0])


def test_sl3_braid_order_on_v():
    h = sl3()
    assert _matpow(h, [0, 1], 3) == h._identity()
    assert _matpow(h, [0, 1], 1) != h._identity()


def test_sl3_over_f3():
    h = sl3("F3")
    assert h.validate().ok
    # both coroots coincide in characteristic 3
    assert h.coroots[0] == h.coroots[1]


def test_pairing_failure():
    h = Realization(QQ, CoxeterMatrix(((1,),)), [[1]], [[1]], validate=False)
    assert h.validate().status("pairing") == "fail"
    with pytest.raises(RealizationError):
        Realization(QQ, CoxeterMatrix(((1,),)), [[1]], [[1]])


def test_coxeter_relation_failure():
    h = from_cartan(type_A(2), [[2, 0], [-1, 2]], validate=False)
    rep = h.validate()
    assert rep.status("Coxeter relations") == "fail"
    assert rep.status("pairing") == "pass"


def test_demazure_surjectivity_failure():
    h = Realization(QQ, CoxeterMatrix(((1, 2), (2, 1))), [[1, 0], [0, 0]], [[2, 0], [0, 0]], validate=False)
    assert h.validate().status("Demazure surjectivity") == "fail"


def test_char_two_rejected():
    with pytest.raises(FieldError):
        sl2("F2")


def test_dual():
    for h in (sl2(), sl3(), builtin("B2"), sl3("F5")):
        assert h.dual().dual() == h
        cm, dm = h.cartan_matrix(), h.dual().cartan_matrix()
        assert dm == tuple(zip(*cm))


def test_self_duality():
    assert sl2().is_isomorphic(sl2().dual())
    assert sl2("F3").is_isomorphic(sl2("F3").dual())
    assert sl3().is_isomorphic(sl3().dual())
    # B2 and its dual differ by which root is long
    assert not builtin("B2").is_isomorphic(builtin("B2").dual())
    # in characteristic 3 the SL3 coroots coincide while the roots do not
    assert not sl3("F3").is_isomorphic(sl3("F3").dual())


def test_isomorphism_witness():
    h = sl2()
    g = h.isomorphism_to(h.dual())
    d = h.dual()
    x = h.coroots[0]
    gx = tuple(sum(g[i][j] * x[j] for j in range(h.dim)) for i in range(h.dim))
    assert gx == d.coroots[0]


def test_files(tmp_path):
    y = tmp_path / "b2.yaml"
    y.write_text("rank: 2\ncoxeter_matrix: [[1, 4], [4, 1]]\ncartan_matrix: [[2, -1], [-2, 2]]\nfield: F5\n")
    h = load_realization(y)
    assert h.field == FieldSpec(5) and h.rank == 2
    assert h.cartan_matrix() == builtin("B2", "F5").cartan_matrix()
    j = tmp_path / "sl2.json"
    j.write_text(json.dumps({"rank": 1, "coxeter_matrix": [[1]], "roots": [[1]], "coroots": [[2]]}))
    assert load_realization(j, "F3").field == FieldSpec(3)
    assert parse_realization(h.to_dict()) == h


@pytest.mark.parametrize("data", [
    {"rank": 2, "coxeter_matrix": [[1, 3], [3, 1]]},
    {"rank": 1, "coxeter_matrix": [[1, 3], [3, 1]], "cartan_matrix": [[2]]},
    {"rank": 1, "coxeter_matrix": [[1]], "cartan_matrix": [[2.5]]},
    {"coxeter_matrix": [[1]]},
    [1, 2],
])
def test_bad_files(data):
    with pytest.raises(RealizationError):
        parse_realization(data)


def test_unknown_builtin():
    with pytest.raises(RealizationError):
        builtin("E8")
