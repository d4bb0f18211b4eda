import json

import pytest

from koszulhecke.catalog import ENTRIES, CatalogError, build, entry, verify, verify_all
from koszulhecke.fields import FieldError
from koszulhecke.monodromic import FMComplex, LMComplex, single_flips, using
from koszulhecke.realization import RealizationError, builtin, sl2

# entries whose checks reproduce displayed objects verbatim
DISPLAY_ENTRIES = ["LM-sl2", "LM-sl3-F", "LM-sl3-cone-map", "mu-Ts", "mu-sl3-F", "mu-no-lift",
                   "FM-unit", "FM-tilt-s", "homotopy-FM-unit", "homotopy-FM-tilt-s", "poly-forcing"]


def test_ids_stable():
    assert list(ENTRIES) == [
        "Ts", "Ts-as-complex", "Tid", "dot-morphisms", "LM-sl2", "LM-sl3-F", "LM-sl3-cone-map",
        "LM-sl3-no-lift", "mu-Ts", "mu-sl3-F", "mu-no-lift", "FM-unit", "FM-tilt-s",
        "homotopy-FM-unit", "homotopy-FM-tilt-s", "koszul-resolution", "split-BsBs", "poly-forcing",
    ]


@pytest.mark.parametrize("field", ["Q", "F3", "F5"])
def test_verify_all(field):
    reports = verify_all((field,))
    bad = [r.render() for r in reports if not r.ok]
    assert not bad, "\n".join(bad)


def test_ts_as_complex_fails_as_expected():
    rep = verify("Ts-as-complex")
    assert not rep.ok
    assert not entry("Ts-as-complex").expect_pass
    assert any(c.residual == "alpha_s * id" for c in rep.checks)


def test_builders():
    assert isinstance(build("FM-unit", sl2()), FMComplex)
    assert isinstance(build("LM-sl3-F", builtin("SL3")), LMComplex)


def test_wrong_realization():
    with pytest.raises(RealizationError):
        build("LM-sl3-F", sl2())
    with pytest.raises(RealizationError):
        verify("mu-sl3-F", h=sl2())


def test_unknown_entry():
    with pytest.raises(CatalogError):
        entry("nope")
    with pytest.raises(KeyError):
        verify("nope")


def test_characteristic_two_rejected():
    with pytest.raises((FieldError, RealizationError)):
        verify("FM-unit", "F2")


def test_report_json_schema():
    rep = verify("FM-tilt-s", "F3")
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) == {"item", "checks", "convention"}
    assert data["convention"] == "koszul-std-v1"
    assert all({"name", "status"} <= set(c) for c in data["checks"])
    assert all(c["status"] == "pass" for c in data["checks"])


def test_entries_on_other_realizations():
    # generic constructions also run for the other color and other types
    assert verify("FM-tilt-s", h=builtin("SL3")).ok
    assert verify("FM-unit", h=builtin("B2")).ok
    assert verify("poly-forcing", h=builtin("G2")).ok
    assert verify("split-BsBs", h=builtin("B2", "F5")).ok


def test_each_single_flip_breaks_a_display():
    for conv in single_flips():
        with using(conv):
            failing = [i for i in DISPLAY_ENTRIES if not verify(i).ok]
        assert failing, conv.identifier
