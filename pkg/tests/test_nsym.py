from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsymkit.compositions import compositions, complement, reverse, transpose
from nsymkit.nsym import (
    BASES,
    NSymElem,
    Series,
    apply_involution,
    convert,
    e,
    expansion,
    h,
    mul,
    phi,
    psi,
    r,
    ribbon_decomposition,
    series_exp,
    unit,
    verify_series,
)

from strategies import coefficient_maps, of_size

TAG = {"R": "r", "H": "h", "E": "e", "Psi": "psi", "Phi": "phi"}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("frm", BASES)
@pytest.mark.parametrize("to", BASES)
def test_conversions_match_frozen_oracle(derived, frm, to, n):
    want = derived["nsym"][f"{TAG[frm]}>{TAG[to]}>{n}"]
    cs = compositions(n)
    got = [[NSymElem.basis_vector(frm, a).to(to)[b] for b in cs] for a in cs]
    assert got == want


def test_worked_conversions():
    assert str(psi(3).to("h")) == "3 h[3] - 2 h[1,2] - h[2,1] + h[1,1,1]"
    assert str(h(2).to("r")) == "r[2]"
    assert str(h(1, 1).to("r")) == "r[2] + r[1,1]"
    assert str(phi(2).to("r")) == "r[2] - r[1,1]"
    assert str(phi(3).to("r")) == "r[3] - 1/2 r[1,2] - 1/2 r[2,1] + r[1,1,1]"
    assert str(psi(2).to("r")) == "r[2] - r[1,1]"
    assert str(e(2).to("h")) == "-h[2] + h[1,1]"


def test_expansion_identity_and_caching():
    assert expansion("R", "R", (2, 1)) == {(2, 1): 1}
    assert expansion("Psi", "Phi", (3,)) is expansion("Psi", "Phi", (3,))


@given(st.integers(1, 5).flatmap(coefficient_maps), st.sampled_from(BASES), st.sampled_from(BASES))
def test_conversion_is_linear_and_invertible(coeffs, frm, to):
    x = NSymElem(frm, coeffs)
    y = convert(x, to)
    assert y.basis == to and convert(y, frm).coeffs == x.coeffs
    assert convert(x.scale(3), to) == y.scale(3)


def test_ribbon_decomposition():
    d = ribbon_decomposition((1, 2), (3,))
    assert d.blocks == ((1, 2),) and d.psr == -1 and d.phr == Fraction(-1, 2)
    assert ribbon_decomposition((2, 1, 1), (3, 1)).psr == 0


def test_products():
    assert mul(r(1), r(1)) == r(2) + r(1, 1)
    assert mul(r(2), r(1)) == r(3) + r(2, 1)
    assert mul(h(2), h(1)).coeffs == {(2, 1): 1}
    assert h(2) * e(1) == mul(h(2), e(1).to("H"))
    assert mul(unit(), r(2)) == r(2)


@given(of_size(3), of_size(2), st.sampled_from(BASES), st.sampled_from(BASES))
def test_product_is_basis_independent(a, b, x, y):
    X, Y = NSymElem.basis_vector(x, a), NSymElem.basis_vector(y, b)
    assert mul(X, Y) == mul(X.to("R"), Y.to("R")) == mul(X.to("H"), Y.to("H"))


@given(of_size(2), of_size(2), of_size(1))
def test_product_is_associative(a, b, c):
    A, B, C = r(*a), r(*b), r(*c)
    assert mul(mul(A, B), C) == mul(A, mul(B, C))


@pytest.mark.parametrize("kind,f", [("rho", reverse), ("psi", complement), ("omega", transpose)])
def test_involutions_on_ribbons(kind, f):
    for a in compositions(4):
        assert apply_involution(r(*a), kind) == r(*f(a))
        assert r(*a).involution(kind).involution(kind) == r(*a)


def test_involutions_on_generators():
    # omega swaps h and e on ribbons of length one
    assert h(3).involution("psi") == e(3)
    assert e(2, 1).involution("psi") == h(2, 1)
    with pytest.raises(ValueError):
        h(1).involution("sigma")


def test_series_identities_small():
    rep = verify_series(5)
    assert rep.passed
    assert {c.name for c in rep.checks} >= {"H(t) = exp(phi(t))", "d/dt H(t) = H(t) psi'(t)"}
    with pytest.raises(ValueError):
        verify_series(0)


def test_series_helpers():
    s = Series([unit(), r(1)], 2)
    assert (s * s)[2] == r(2) + r(1, 1)
    assert s.derivative()[0] == r(1)
    with pytest.raises(ValueError):
        series_exp(s)
