from fractions import Fraction

import pytest

from core.arith.gauss import ONE, GaussRat
from core.catalog.fam_appell import check_bernoulli_substitution
from core.catalog.registry import CatalogRegistry
from core.config import settings
from core.errors import SingularParameterError, TaucertError, UnknownEntryError
from core.schemas.enums import ErrorCode, ResidualStatus

ENTRY_NAMES = [entry.name for entry in CatalogRegistry.list_entries()]


def _bell_triangle(n):
    row, out = [1], [1]
    while len(out) < n:
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out


def _akiyama_tanigawa(n):
    out = []
    row = [Fraction(1, m + 1) for m in range(n)]
    for k in range(n):
        out.append(row[0])
        row = [(j + 1) * (row[j] - row[j + 1]) for j in range(len(row) - 1)]
    return out


def test_registry_lists_sixteen_sorted_entries():
    assert len(ENTRY_NAMES) == 16
    assert ENTRY_NAMES == sorted(ENTRY_NAMES)
    assert {"bell-touchard", "tangent", "graph-a060311", "toscano"} <= set(ENTRY_NAMES)


def test_unknown_entry():
    with pytest.raises(UnknownEntryError) as exc:
        CatalogRegistry.get_entry("no-such-family")
    assert exc.value.code is ErrorCode.UNKNOWN_ENTRY


@pytest.mark.parametrize("name", ENTRY_NAMES)
def test_reference_prefixes(name):
    for ref, ok in CatalogRegistry.get_entry(name).reference_check():
        assert ok, ref.source


@pytest.mark.parametrize("name", ENTRY_NAMES)
def test_stored_equation_holds_at_default_parameters(name):
    entry = CatalogRegistry.get_entry(name)
    for params in entry.default_params or ({},):
        assert entry.verify(params, settings.SYMBOLIC_VERIFY_ORDER).status is ResidualStatus.EXACT


def test_bell_numbers_against_the_bell_triangle():
    ogf = CatalogRegistry.get_entry("bell-touchard").build_ogf({"x": 1}, 25)
    assert list(ogf.coeffs) == [GaussRat(b) for b in _bell_triangle(25)]


def test_bernoulli_numbers_against_akiyama_tanigawa():
    ogf = CatalogRegistry.get_entry("bernoulli-numbers").build_ogf({}, 20)
    want = _akiyama_tanigawa(20)
    # the recurrence yields B_1 = +1/2
    assert ogf.coeffs[1] == GaussRat(Fraction(-1, 2))
    for n in range(20):
        if n != 1:
            assert ogf.coeffs[n] == GaussRat(want[n]), n


@pytest.mark.parametrize(
    "name,params",
    [
        ("fubini", {"x": -1}),
        ("carlitz", {"x": 1, "gamma": 1}),
        ("carlitz", {"x": 1, "gamma": 0}),
        ("apostol-bernoulli", {"x": 1, "gamma": 0}),
    ],
)
def test_singular_parameters_are_refused(name, params):
    with pytest.raises(SingularParameterError):
        CatalogRegistry.get_entry(name).build_ogf(params, 8)


def test_singular_loci_report():
    assert CatalogRegistry.get_entry("fubini").singular_loci().singular == (GaussRat(-1),)
    assert CatalogRegistry.get_entry("bell-touchard").singular_loci().singular == ()
    assert CatalogRegistry.get_entry("carlitz").singular_loci(2).gamma_singular == (GaussRat(0), ONE)


def test_parameter_validation():
    bell = CatalogRegistry.get_entry("bell-touchard")
    with pytest.raises(TaucertError) as exc:
        bell.resolve({"x": 1, "gamma": 2})
    assert exc.value.code is ErrorCode.INVALID_INPUT
    with pytest.raises(TaucertError):
        bell.resolve({})
    with pytest.raises(TaucertError):
        CatalogRegistry.get_entry("toscano").resolve({"x": 1, "gamma": "symbolic"})


def test_toscano_reduces_to_bell():
    toscano = CatalogRegistry.get_entry("toscano")
    bell = CatalogRegistry.get_entry("bell-touchard")
    assert toscano.build_ogf({"x": -1, "gamma": 0}, 16) == bell.build_ogf({"x": 1}, 16)


def test_symbolic_bernoulli_is_exact():
    bernoulli = CatalogRegistry.get_entry("bernoulli")
    assert bernoulli.build_ogf({"x": "symbolic"}, 8).is_symbolic()
    assert bernoulli.verify({"x": "symbolic"}, 12).status is ResidualStatus.EXACT
    assert check_bernoulli_substitution(12).status is ResidualStatus.EXACT


def test_equation_needs_a_specialized_x():
    with pytest.raises(TaucertError) as exc:
        CatalogRegistry.get_entry("bernoulli").equation({"x": "symbolic"})
    assert exc.value.code is ErrorCode.INVALID_INPUT


def test_metadata():
    tangent = CatalogRegistry.get_entry("tangent").metadata()
    assert tangent["beta"] == "2i"
    assert tangent["parameters"] == []
    graph = CatalogRegistry.get_entry("graph-a060311").metadata()
    assert graph["order"] == 2
    toscano = CatalogRegistry.get_entry("toscano").metadata()
    assert toscano["parameters"] == ["x", "gamma"]
    assert toscano["symbolic_x"] is True
