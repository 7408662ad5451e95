import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclejoin import poly2
from cyclejoin.poly2 import Poly2
from oracles import gauss_count, irreducible_by_trial, order_by_stepping, pmod, pmul

X = 0b10
masks = st.integers(min_value=1, max_value=(1 << 20) - 1)
moduli = st.integers(min_value=2, max_value=(1 << 14) - 1)


def test_parse_and_print_round_trip():
    assert poly2.parse("0x13") == 0x13
    assert poly2.parse("x^4+x+1") == 0x13
    assert poly2.parse("0b10011") == 19
    assert poly2.to_human(0x13) == "x^4+x+1"
    assert str(Poly2.parse("x^4 + x^3 + x^2 + x + 1")) == "x^4+x^3+x^2+x+1"
    with pytest.raises(ValueError):
        poly2.parse("x^4+y")


def test_poly2_fields():
    p = Poly2(0x13)
    assert p.degree == 4
    assert p.coeffs == (1, 1, 0, 0, 1)
    assert Poly2(0).degree is None
    with pytest.raises(ValueError):
        Poly2(1 << 64)


def test_mul_mod_small_cases():
    # x*x = x+1 mod x^2+x+1 and x^3*x = x+1 mod x^4+x+1
    assert poly2.mul_mod(X, X, 0x7) == 0b11
    assert poly2.mul_mod(0b1000, X, 0x13) == 0b11
    with pytest.raises(ZeroDivisionError, match="zero modulus"):
        poly2.mul_mod(3, 3, 0)


def test_power_reduction_consistency():
    # x^14 = x^4 mod p since x^5 = 1 for p = x^4+x^3+x^2+x+1
    p = 0x1F
    assert poly2.pow_mod(X, 14, p) == poly2.pow_mod(X, 4, p)
    x7 = poly2.pow_mod(X, 7, p)
    assert poly2.mul_mod(x7, x7, p) == pmod(pmul(x7, x7), p)


@given(masks, masks, moduli)
def test_mul_mod_matches_schoolbook(a, b, m):
    r = poly2.mul_mod(a, b, m)
    assert r == pmod(pmul(a, b), m)
    assert r.bit_length() < m.bit_length()


@given(masks, moduli)
def test_divmod_reconstructs(a, b):
    q, r = poly2.divmod2(a, b)
    assert pmul(q, b) ^ r == a
    assert r.bit_length() < b.bit_length()


def test_gcd_cases():
    f = 0x13
    assert poly2.gcd(f, f) == f
    assert poly2.gcd(0x13, 0x1F) == 1
    assert poly2.gcd(0b110, X) == X
    with pytest.raises(ValueError):
        poly2.gcd(0, 0)


@given(masks, masks, masks)
def test_gcd_divides_and_is_common(a, b, c):
    g = poly2.gcd(pmul(a, c), pmul(b, c))
    assert pmod(pmul(a, c), g) == 0 and pmod(pmul(b, c), g) == 0
    assert pmod(g, c) == 0


def test_irreducibility_known():
    assert poly2.is_irreducible(0x13)
    assert poly2.is_irreducible(0x1F)
    assert not poly2.is_irreducible(0b101)
    with pytest.raises(ValueError, match="constant polynomial"):
        poly2.is_irreducible(1)


@pytest.mark.parametrize("k", range(2, 13))
def test_irreducibility_matches_trial_division(k):
    for g in range(1 << k, 1 << (k + 1)):
        assert poly2.is_irreducible(g) == irreducible_by_trial(g), hex(g)


@pytest.mark.parametrize("n", range(1, 13))
def test_irreducible_count_matches_gauss_formula(n):
    assert sum(1 for _ in poly2.irreducibles(n)) == gauss_count(n)


@pytest.mark.parametrize("g,e", [(0x1F, 5), (0x13, 15), (0x7, 3)])
def test_order_known(g, e):
    assert poly2.poly_order(g) == e


@pytest.mark.parametrize("k", [3, 4, 6, 8, 9, 10, 12])
def test_order_by_factorisation_matches_stepping(k):
    for g in poly2.irreducibles(k):
        if g == X:
            continue
        e = poly2.poly_order(g)
        assert e == order_by_stepping(g)
        assert ((1 << k) - 1) % e == 0


@pytest.mark.parametrize("k", [14, 16])
def test_order_minimality_large_degree(k):
    for g in list(poly2.irreducibles(k))[:25]:
        e = poly2.poly_order(g)
        assert poly2.pow_mod(X, e, g) == 1
        for rho in poly2.factor_int(e):
            assert poly2.pow_mod(X, e // rho, g) != 1


def test_order_rejects_reducible():
    with pytest.raises(ValueError):
        poly2.poly_order(0b101)


def test_primitive_known():
    assert poly2.is_primitive(0x13)
    assert not poly2.is_primitive(0x1F)
    assert not poly2.is_primitive(0b110001)  # x^5+x^4+1 is reducible


@pytest.mark.parametrize("k", range(2, 11))
def test_classify_invariants(k):
    full = (1 << k) - 1
    for g in range(1 << k, 1 << (k + 1)):
        c = poly2.classify(g)
        if c.primitive:
            assert c.irreducible and c.order == full
        if c.irreducible and c.order is not None:
            assert full % c.order == 0 and c.order * c.cofactor_t == full


def test_factor_int_reassembles():
    for k in range(2, 64, 7):
        n = (1 << k) - 1
        prod = 1
        for p, e in poly2.factor_int(n).items():
            prod *= p**e
        assert prod == n
        assert poly2.mersenne_factors(k) == poly2.mersenne_factors(k)


@settings(max_examples=50)
@given(st.integers(min_value=2, max_value=10), st.data())
def test_minimal_polynomial_of_root(k, data):
    g = data.draw(st.sampled_from([x for x in poly2.irreducibles(k) if x != X]))
    from cyclejoin.field import table_for
    ft, t = table_for(g)
    beta = ft.elem(t)
    assert poly2.eval_at(g, beta, ft.modulus) == 0
    assert poly2.minimal_polynomial(beta, ft.modulus) == g
