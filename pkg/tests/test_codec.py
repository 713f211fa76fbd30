import json

import pytest

from core.arith.gauss import I, ONE, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.catalog.registry import CatalogRegistry
from core.errors import TaucertError
from core.schemas.codec import (
    egf_equation_from_payload,
    egf_equation_to_payload,
    gauss_from_wire,
    gauss_to_wire,
    load_payload,
    parse_payload,
    ratfun_from_payload,
    ratfun_to_payload,
    series_from_payload,
    tau_equation_from_payload,
    tau_equation_to_payload,
    terms_to_wire,
    xpoly_from_wire,
    xpoly_to_wire,
)
from core.schemas.enums import ErrorCode
from core.schemas.messages import EgfEquationPayload, RatFunPayload, SeriesPayload, TauEquationPayload
from core.services.egf_compiler import PARAM_VAR, compile_equation


def test_gauss_wire_forms():
    assert gauss_from_wire(["1/2", "-3"]) == GaussRat.parse("1/2-3i")
    assert gauss_from_wire("i") == I
    assert gauss_to_wire(GaussRat(2, -1)) == ["2", "-1"]


def test_xpoly_wire_forms():
    x = Poly.gen(PARAM_VAR)
    assert xpoly_from_wire("x") == x
    assert xpoly_from_wire(["1", "0", "1"]) == x * x + 1
    assert xpoly_from_wire(["5"]) == GaussRat(5)
    assert xpoly_to_wire(x + 1) == ["1", "1"]
    assert xpoly_to_wire(GaussRat(0)) == []


def test_ratfun_payload():
    f = RatFun.from_lists([1, 2], [3, 0, 1])
    assert ratfun_from_payload(ratfun_to_payload(f)) == f
    with pytest.raises(TaucertError) as exc:
        ratfun_from_payload(RatFunPayload(num=[["1", "0"]], den=[]))
    assert exc.value.code is ErrorCode.INVALID_INPUT


def test_series_payload_order():
    assert series_from_payload(SeriesPayload(coeffs=["1", "i"])).order == 2
    assert series_from_payload(SeriesPayload(order=2, coeffs=["1", "1", "2"])).order == 2


@pytest.mark.parametrize("order", [4, 5])
def test_series_payload_needs_a_coefficient_per_order(order):
    with pytest.raises(TaucertError) as exc:
        series_from_payload(SeriesPayload(order=order, coeffs=["1", "1", "2"]))
    assert exc.value.code is ErrorCode.INVALID_INPUT


def test_symbolic_terms_print_as_polynomials():
    s = CatalogRegistry.get_entry("bell-touchard").build_ogf({"x": "symbolic"}, 3)
    assert terms_to_wire(s)[:2] == ["1", "x"]


def test_tau_equation_payload_keeps_alpha():
    eq = CatalogRegistry.get_entry("alternating").equation({})
    payload = tau_equation_to_payload(eq, GaussRat(2))
    back, alpha = tau_equation_from_payload(TauEquationPayload.model_validate_json(payload.model_dump_json()))
    assert alpha == GaussRat(2)
    assert back == eq


def test_egf_payload_accepts_the_lambda_alias():
    text = json.dumps({"lambda": "1", "lhs": [{"i": 0, "u_poly": ["0", "-1"]}, {"i": 1, "u_poly": ["1"]}], "init": ["1"]})
    egf = egf_equation_from_payload(parse_payload(text, EgfEquationPayload))
    t = RatFun.gen()
    compiled = compile_equation(egf)
    assert compiled.coeffs == (-t, RatFun.const(ONE))
    dumped = egf_equation_to_payload(egf).model_dump(by_alias=True)
    assert dumped["lambda"] == ["1", "0"]


def test_egf_payload_with_a_symbolic_rate():
    text = json.dumps({"lhs": [{"i": 0, "u_poly": ["-1", "1"]}], "rhs": [{"m": 1, "rate": "x", "coeff": "1"}]})
    egf = egf_equation_from_payload(parse_payload(text, EgfEquationPayload))
    assert egf.is_symbolic()
    assert egf_equation_to_payload(egf).rhs[0].rate == "x"


def test_egf_payload_needs_lhs_terms():
    with pytest.raises(TaucertError):
        egf_equation_from_payload(EgfEquationPayload(lhs=[]))


def test_malformed_json_is_invalid_input():
    with pytest.raises(TaucertError) as exc:
        parse_payload("{not json", SeriesPayload)
    assert exc.value.code is ErrorCode.INVALID_INPUT
    with pytest.raises(TaucertError):
        parse_payload(json.dumps({"rhs": {}}), TauEquationPayload)


def test_load_payload(tmp_path):
    path = tmp_path / "series.json"
    path.write_text(json.dumps({"coeffs": ["1", "1", "2"]}), encoding="utf-8")
    assert load_payload(path, SeriesPayload).coeffs == ["1", "1", "2"]
    with pytest.raises(TaucertError) as exc:
        load_payload(tmp_path / "missing.json", SeriesPayload)
    assert exc.value.code is ErrorCode.INVALID_INPUT
