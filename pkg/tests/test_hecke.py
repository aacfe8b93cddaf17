"""Hecke algebra tests against a brute-force matrix oracle.

The oracle works with explicit 2x2 matrices over Fractions and decides
everything by p-adic valuations: membership in K, Smith type of a coset,
and convolution values counted rep by rep.  Nothing here shares code
with the class-based counting in the package.
"""

import random
from fractions import Fraction

import pytest

from gl2trace.hecke import (HeckeElement, LocalField, SatakeParameter,
                            SymLaurent, convolve, coset_decomposition,
                            coset_degree, inverse_satake, satake_transform,
                            spherical_trace)
from gl2trace.rings import LaurentQ, QiNumber, QiV

INF = 10 ** 9


def valp(x, p):
    x = Fraction(x)
    if x == 0:
        return INF
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def mat_mul(x, y):
    return ((x[0][0] * y[0][0] + x[0][1] * y[1][0],
             x[0][0] * y[0][1] + x[0][1] * y[1][1]),
            (x[1][0] * y[0][0] + x[1][1] * y[1][0],
             x[1][0] * y[0][1] + x[1][1] * y[1][1]))


def mat_inv(x):
    d = x[0][0] * x[1][1] - x[0][1] * x[1][0]
    assert d != 0
    return ((x[1][1] / d, -x[0][1] / d), (-x[1][0] / d, x[0][0] / d))


def in_K(x, p):
    " integral with unit determinant "
    if any(valp(e, p) < 0 for row in x for e in row):
        return False
    return valp(x[0][0] * x[1][1] - x[0][1] * x[1][0], p) == 0


def smith_type(x, p):
    " elementary-divisor exponents as a dominant pair (a, b) "
    d1 = min(valp(e, p) for row in x for e in row)
    det = x[0][0] * x[1][1] - x[0][1] * x[1][0]
    assert det != 0
    return (valp(det, p) - d1, d1)


def random_unit(rng, p):
    while True:
        x = ((rng.randrange(-3 * p, 3 * p), rng.randrange(-3 * p, 3 * p)),
             (rng.randrange(-3 * p, 3 * p), rng.randrange(-3 * p, 3 * p)))
        det = x[0][0] * x[1][1] - x[0][1] * x[1][0]
        if det != 0 and valp(det, p) == 0:
            return ((Fraction(x[0][0]), Fraction(x[0][1])),
                    (Fraction(x[1][0]), Fraction(x[1][1])))


CASES = [(2, (1, 0)), (2, (2, 0)), (2, (2, 1)), (2, (3, 0)),
         (3, (1, 0)), (3, (2, 0)), (3, (1, -1)), (5, (1, 0))]


@pytest.mark.parametrize("q,key", CASES)
def test_coset_reps_count_and_type(q, key):
    field = LocalField(q)
    reps = coset_decomposition(field, key)
    m = key[0] - key[1]
    expected = 1 if m == 0 else q ** (m - 1) * (q + 1)
    assert len(reps) == expected == coset_degree(field, key)
    for r in reps:
        assert r[1][0] == 0
        assert smith_type(r, q) == key


@pytest.mark.parametrize("q,key", CASES)
def test_coset_reps_disjoint(q, key):
    field = LocalField(q)
    reps = coset_decomposition(field, key)
    for i, r1 in enumerate(reps):
        inv = mat_inv(r1)
        for r2 in reps[i + 1:]:
            assert not in_K(mat_mul(inv, r2), q)


@pytest.mark.parametrize("q,key", [(2, (1, 0)), (2, (2, 0)), (3, (1, 0)),
                                   (3, (2, 1)), (2, (1, -1))])
def test_coset_reps_cover(q, key):
    " random K diag K points land in exactly one right coset "
    rng = random.Random(1000 + 7 * q + key[0])
    field = LocalField(q)
    reps = coset_decomposition(field, key)
    diag = ((Fraction(q) ** key[0], Fraction(0)), (Fraction(0), Fraction(q) ** key[1]))
    for _ in range(25):
        g = mat_mul(mat_mul(random_unit(rng, q), diag), random_unit(rng, q))
        hits = sum(1 for r in reps if in_K(mat_mul(mat_inv(r), g), q))
        assert hits == 1


def oracle_convolve(field, key1, key2):
    " (char1 * char2)(z) counted over explicit matrix representatives "
    q = field.q
    reps = coset_decomposition(field, key1)
    dd = sum(key1) + sum(key2)
    out = {}
    for bz in range(key1[1] + key2[1], dd // 2 + 1):
        az = dd - bz
        z = ((Fraction(q) ** az, Fraction(0)), (Fraction(0), Fraction(q) ** bz))
        n = sum(1 for r in reps if smith_type(mat_mul(mat_inv(r), z), q) == key2)
        if n:
            out[(az, bz)] = n
    return out


@pytest.mark.parametrize("q,key1,key2", [
    (2, (1, 0), (1, 0)),
    (2, (2, 0), (1, 0)),
    (2, (1, 0), (2, 0)),
    (2, (1, 0), (1, -1)),
    (2, (2, 1), (1, 0)),
    (3, (1, 0), (1, 0)),
    (3, (1, 0), (2, 1)),
    (3, (2, 0), (1, 0)),
    (5, (1, 0), (1, 0)),
])
def test_convolution_matches_matrix_oracle(q, key1, key2):
    field = LocalField(q)
    got = convolve(HeckeElement.char(field, key1), HeckeElement.char(field, key2))
    want = oracle_convolve(field, key1, key2)
    assert {k: c for k, c in got.coeffs.items()} == \
        {k: LaurentQ(n, 0, q) for k, n in want.items()}


@pytest.mark.parametrize("q", [2, 3, 5])
def test_tp_squared_identity(q):
    field = LocalField(q)
    tp = HeckeElement.char(field, (1, 0))
    want = HeckeElement(field, {(2, 0): 1, (1, 1): q + 1})
    assert tp * tp == want


def test_unit_element():
    field = LocalField(3)
    one = HeckeElement.unit(field)
    h = HeckeElement(field, {(2, 0): Fraction(3, 2), (1, -1): LaurentQ(1, 2, 3)})
    assert one * h == h
    assert h * one == h


@pytest.mark.parametrize("q", [2, 3])
def test_convolution_commutes(q):
    rng = random.Random(40 + q)
    field = LocalField(q)
    keys = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (1, -1)]
    for _ in range(6):
        f = HeckeElement(field, {k: rng.randrange(-3, 4) for k in rng.sample(keys, 3)})
        g = HeckeElement(field, {k: rng.randrange(-3, 4) for k in rng.sample(keys, 3)})
        assert f * g == g * f


def test_convolution_associates():
    field = LocalField(2)
    f = HeckeElement(field, {(1, 0): 1, (0, 0): 2})
    g = HeckeElement(field, {(1, 1): 1, (1, 0): -1})
    h = HeckeElement(field, {(2, 0): 1})
    assert (f * g) * h == f * (g * h)


# -- transform ----------------------------------------------------------


def test_satake_frozen_values():
    field = LocalField(2)
    v = field.v(1)
    s = satake_transform(HeckeElement.char(field, (1, 0)))
    assert s == SymLaurent({(1, 0): v}, 2)
    assert satake_transform(HeckeElement.unit(field)) == SymLaurent.one(2)
    assert satake_transform(HeckeElement.char(field, (1, 1))) == SymLaurent({(1, 1): 1}, 2)
    s20 = satake_transform(HeckeElement.char(field, (2, 0)))
    assert s20 == SymLaurent({(2, 0): 2, (1, 1): 1}, 2)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_satake_is_multiplicative(q):
    rng = random.Random(90 + q)
    field = LocalField(q)
    keys = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (1, -1), (3, 1)]
    for _ in range(8):
        f = HeckeElement(field, {k: Fraction(rng.randrange(-4, 5), rng.choice([1, 2]))
                                 for k in rng.sample(keys, 3)})
        g = HeckeElement(field, {k: rng.randrange(-4, 5) for k in rng.sample(keys, 3)})
        assert satake_transform(f * g) == satake_transform(f) * satake_transform(g)


@pytest.mark.parametrize("q,key", CASES)
def test_degree_character(q, key):
    " the transform evaluated at Y = (v, 1/v) counts cosets "
    field = LocalField(q)
    s = satake_transform(HeckeElement.char(field, key))
    v = field.v(1)
    val = s.evaluate(v, v.inverse())
    assert val == LaurentQ(coset_degree(field, key), 0, q)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_inverse_satake_roundtrip(q):
    rng = random.Random(7 * q)
    field = LocalField(q)
    keys = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (1, -1), (3, 0)]
    for _ in range(6):
        h = HeckeElement(field, {k: Fraction(rng.randrange(-5, 6), rng.choice([1, 3]))
                                 for k in rng.sample(keys, 4)})
        assert inverse_satake(satake_transform(h)) == h


def test_inverse_satake_monomial():
    # Y1 + Y2 pulls back to v^-1 * char(1, 0)
    got = inverse_satake(SymLaurent({(1, 0): 1}, 3))
    want = HeckeElement(LocalField(3), {(1, 0): LaurentQ(0, Fraction(1, 3), 3)})
    assert got == want


def test_inverse_satake_needs_field():
    with pytest.raises(ValueError):
        inverse_satake(SymLaurent({(1, 0): 1}))


# -- traces -------------------------------------------------------------


def test_spherical_trace_exact():
    field = LocalField(2)
    tp = HeckeElement.char(field, (1, 0))
    tr = spherical_trace(tp, SatakeParameter.trivial())
    assert tr == QiV(QiNumber(0), QiNumber(2), 2)

    sp = SatakeParameter.from_triple(2, 1)
    assert sp.is_unitary()
    assert sp.alpha == QiNumber(Fraction(3, 5), Fraction(4, 5))
    tr2 = spherical_trace(tp, sp)
    assert tr2 == QiV(QiNumber(0), QiNumber(Fraction(6, 5)), 2)

    assert spherical_trace(HeckeElement.unit(field), sp) == QiV(QiNumber(1), QiNumber(0), 2)


def test_spherical_trace_numeric():
    field = LocalField(3)
    tp = HeckeElement.char(field, (1, 0))
    import cmath
    theta = 0.7
    sp = SatakeParameter(cmath.exp(1j * theta), cmath.exp(-1j * theta))
    got = spherical_trace(tp, sp)
    assert abs(got - 3 ** 0.5 * 2 * cmath.cos(theta).real) < 1e-12


def test_trace_is_linear_and_multiplicative():
    field = LocalField(5)
    sp = SatakeParameter.from_triple(3, 2)
    f = HeckeElement(field, {(1, 0): 2, (1, 1): Fraction(1, 2)})
    g = HeckeElement(field, {(2, 0): 1, (0, 0): -1})
    lhs = spherical_trace(f * g, sp)
    rhs = spherical_trace(f, sp) * spherical_trace(g, sp)
    assert lhs == rhs


# -- text round trips ---------------------------------------------------


def test_hecke_text_roundtrip():
    field = LocalField(3)
    h = HeckeElement(field, {(2, 0): Fraction(3, 2), (1, -1): LaurentQ(1, Fraction(-2, 7), 3),
                             (0, 0): -1})
    text = h.to_text()
    assert text.splitlines()[0] == "q 3 kmin 0"
    assert HeckeElement.from_text(text) == h


def test_hecke_text_kmin_shift():
    # a reader must accept any kmin and reduce
    h = HeckeElement.from_text("q 2 kmin -2\n1 0 4 0 0 6\n")
    # 4*v^-2 + 6*v = 2 + 6v at q = 2
    assert h == HeckeElement(LocalField(2), {(1, 0): LaurentQ(2, 6, 2)})


def test_symlaurent_text_roundtrip():
    s = SymLaurent({(2, 0): LaurentQ(1, 1, 5), (1, 1): Fraction(-7, 3)}, 5)
    assert SymLaurent.from_text(s.to_text()) == s


def test_symlaurent_str():
    field = LocalField(2)
    s = satake_transform(HeckeElement.char(field, (1, 0)))
    assert str(s) == "v*(Y1 + Y2)"


def test_bad_header_rejected():
    with pytest.raises(ValueError):
        HeckeElement.from_text("p 3 kmin 0\n1 0 1\n")
    with pytest.raises(ValueError):
        HeckeElement.from_text("")
