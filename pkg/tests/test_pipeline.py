import json
from pathlib import Path

import pytest

from hopfforge.pipeline import certificate_hash, pipeline_taft
from hopfforge.reptheory import FusionRing, fusion_closed_form

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def taft_cert():
    return pipeline_taft(3, 1, seed=1)


def test_taft_certificate(taft_cert):
    cert, ctx = taft_cert
    assert cert["ok"]
    assert cert["dims"] == {"H": 9, "D": 81, "quotient": 27}
    assert cert["factorizable"] and cert["rank"]["f"] == 27
    assert cert["ribbon"]["status"] == "found"
    assert cert["ribbon"]["a_is_g_power"] == 2 and cert["ribbon"]["beta_is_alpha_power_m"]
    assert cert["semisimple"] is False
    assert cert["z"] == {"group_like": True, "central": True, "order": 3}
    assert cert["star"] == "absent"


def test_certificate_reproducible_and_hashed(taft_cert):
    cert, _ = taft_cert
    again, _ = pipeline_taft(3, 1, seed=1)
    assert json.dumps(again, sort_keys=True) == json.dumps(cert, sort_keys=True)
    assert cert["certificate_sha256"] == certificate_hash(cert)
    assert "time" not in json.dumps(cert)


def test_golden_certificate(taft_cert):
    golden = json.loads((GOLDEN / "taft_3_1_certificate.json").read_text())
    assert taft_cert[0] == golden


def test_golden_fusion_table():
    golden = FusionRing.from_json(json.loads((GOLDEN / "fusion_7_3_2.json").read_text()))
    assert fusion_closed_form(7, 3, 2) == golden


def test_taft_5_1():
    cert, _ = pipeline_taft(5, 1, seed=1, ribbon=False)
    assert cert["dims"]["quotient"] == 125
    assert cert["factorizable"]
