import json
from pathlib import Path

import pytest

import gqc4

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def test_factor_xn1_multiplies_back():
    prod = gqc4.QuadPoly("1")
    for f in gqc4.factor_xn1(7):
        prod = prod * f
    assert prod == gqc4.QuadPoly("x^7-1")
    assert [str(f) for f in gqc4.factor_xn1(7)] == [str(f) for f in gqc4.factor_xn1(7)]


def test_hensel_and_gcd():
    lift = gqc4.hensel_lift("x^3+x+1", 7)
    _, r = gqc4.poly_divmod(gqc4.QuadPoly("x^7-1"), lift)
    assert r.degree == -1
    assert gqc4.gcd4(gqc4.QuadPoly("x^3-1"), gqc4.QuadPoly("x-1")) == gqc4.QuadPoly("x-1")


def test_code_basics():
    c = gqc4.Code([3], [["x^2+x+1"]])
    assert c.type() == (1, 0)
    assert c.min_lee_distance() == 3
    assert c.is_linear_image()
    assert len(c.codewords()) == 4
    assert c.contains(["2x^2+2x+2"])
    assert not c.contains(["1"])
    d = c.dual()
    assert sum(2 * k1 + k2 for k1, k2 in [c.type(), d.type()]) == 2 * 3


def test_load_fixture_and_verify():
    code = gqc4.Code.load(str(FIXTURES / "two_block_3_7.json"))
    assert code.lengths == [3, 7]
    assert all(c["status"] != "fail" for c in gqc4.verify((FIXTURES / "two_block_3_7.json").read_text()))
    bad = gqc4.verify((FIXTURES / "corrupted.json").read_text())
    assert any(c["status"] == "fail" for c in bad)


def test_errors():
    with pytest.raises(gqc4.ParseError):
        gqc4.QuadPoly("x^^2")
    with pytest.raises(gqc4.ParseError):
        gqc4.Code.from_json('{"block_lengths": [3')
    with pytest.raises(gqc4.Error):
        gqc4.Code([3], []).min_lee_distance()


def test_gray():
    assert gqc4.gray_map([0, 1, 2, 3]) == [0, 0, 1, 1, 0, 1, 1, 0]
    assert gqc4.lee_weight([1, 2, 3]) == 4


def test_search_diagonal_r3():
    rows = gqc4.search([3], all=True)
    assert len(rows) == 9
    assert any(r["k1"] == 1 and r["k2"] == 0 and r["dL"] == 3 for r in rows)
    csv1 = gqc4.search([3, 3], format="csv", workers=1)
    csv4 = gqc4.search([3, 3], format="csv", workers=4)
    assert csv1 == csv4


def test_closed_form_status():
    c = gqc4.Code.load(str(FIXTURES / "diagonal_3_3.json"))
    cf = c.dual_closed_form()
    assert cf["status"] in {"applied", "hypothesis_violated", "inapplicable"}
    json.dumps(cf)
