"""Global assembly: torus support, one-dim and residual terms, Cartan
report, correction bracket, intertwining, configuration."""

import math
from fractions import Fraction

import pytest

from gl2trace.assembly import (ArchProfile, ExactnessError,
                               GlobalTestFunction, NormalizationConstants,
                               cartan_discrepancy, correction_term,
                               format_cartan_report, format_correction_report,
                               format_pieces, intertwining_constant,
                               load_config, numeric_verify, one_dim_geometric,
                               one_dim_spectral, parse_pieces,
                               residual_breakdown, residual_geometric,
                               residual_spectral, torus_support,
                               uncompleted_zeta_ratio)
from gl2trace.chargroup import (GroupFunction, class_group_mod_squares,
                                hilbert_symbol, poisson_check, project_to_D)
from gl2trace.hecke import HeckeElement, LocalField
from gl2trace.rings import LaurentQ

INF = "inf"


def wide_profiles():
    f = ArchProfile(pos=((-2, 2, [3]),), neg=((-1, 1, [5]),))
    phi = ArchProfile(pos=((-2, 2, [Fraction(1, 2)]),), neg=((-1, 1, [7]),))
    return f, phi


def char_k_fn():
    f, phi = wide_profiles()
    return GlobalTestFunction([INF, 2], f_profile=f, phi_profile=phi)


def t2_fn():
    f, phi = wide_profiles()
    h2 = HeckeElement.char(LocalField(2), (1, 0))
    return GlobalTestFunction([INF, 2, 3], hecke={2: h2},
                              f_profile=f, phi_profile=phi)


# -- profiles -----------------------------------------------------------


def test_profile_mass():
    f, phi = wide_profiles()
    assert f.mass(1) == 12 and f.mass(-1) == 10
    assert phi.mass(1) == 2 and phi.mass(-1) == 14
    lin = ArchProfile(pos=((-2, 2, [0, 1]),))  # integrand l
    assert lin.mass(1) == 0
    quad = ArchProfile(pos=((0, 1, [0, 0, 3]),))  # integrand 3 l^2
    assert quad.mass(1) == 1


def test_profile_pointwise():
    p = ArchProfile(pos=((0, 1, [5]),))
    assert p.value_at(Fraction(2)) == 5       # log 2 in [0, 1)
    assert p.value_at(Fraction(3)) == 0       # log 3 > 1
    assert p.value_at(Fraction(1)) == 5       # l = 0
    assert p.value_at(Fraction(1, 2)) == 0    # l < 0
    assert p.value_at(Fraction(-2)) == 0      # no negative component


def test_profile_nonconstant_piece():
    p = ArchProfile(pos=((-2, 2, [0, 1]),))
    assert p.value_at(Fraction(1)) == 0       # polynomial at l = 0
    with pytest.raises(ExactnessError):
        p.value_at(Fraction(2))
    approx = p.value_at(Fraction(2), numeric=True)
    assert abs(approx - math.log(2)) < 1e-12


def test_profile_validation():
    with pytest.raises(ValueError):
        ArchProfile(pos=((1, 1, [2]),))
    with pytest.raises(ValueError):
        ArchProfile(pos=((0, 2, [1]), (1, 3, [1])))
    with pytest.raises(ValueError):
        ArchProfile(pos=((0, 1, []),))


def test_pieces_text_roundtrip():
    pieces = ((Fraction(-1, 2), Fraction(3), (Fraction(1), Fraction(-2, 7))),
              (Fraction(4), Fraction(5), (Fraction(0),)))
    again = parse_pieces(format_pieces(pieces))
    assert tuple((lo, hi, tuple(cs)) for lo, hi, cs in again) == pieces
    assert parse_pieces("") == ()


# -- torus support ------------------------------------------------------


def test_support_char_k():
    rows = torus_support(char_k_fn())
    assert rows == [(1, 3, Fraction(1, 2)), (-1, 5, 7)]


def test_support_t2():
    rows = torus_support(t2_fn())
    assert rows == [(2, 3, Fraction(1, 2)), (-2, 5, 7)]


def test_support_empty_arch():
    f = GlobalTestFunction([INF, 2])
    assert torus_support(f) == []


def test_support_central_shift():
    " a coset with negative exponent puts mass at t = 1/p "
    f, phi = wide_profiles()
    h = HeckeElement.char(LocalField(2), (0, -1))
    g = GlobalTestFunction([INF, 2], hecke={2: h},
                           f_profile=f, phi_profile=phi)
    rows = torus_support(g)
    ts = [r[0] for r in rows]
    assert ts == [Fraction(1, 2), Fraction(-1, 2)]
    # f-value: coefficient 1 times the positive profile value 3
    assert rows[0][1] == 3
    # Phi: module factor 2^{1} times the unit x-ball, times profile 1/2
    assert rows[0][2] == 2 * 1 * Fraction(1, 2)


def test_support_v_part_rejected():
    f, phi = wide_profiles()
    h = HeckeElement.char(LocalField(2), (1, 0), LaurentQ(0, 1, 2))
    g = GlobalTestFunction([INF, 2], hecke={2: h},
                           f_profile=f, phi_profile=phi)
    with pytest.raises(ExactnessError):
        torus_support(g)


def test_test_function_validation():
    h3 = HeckeElement.char(LocalField(3), (1, 0))
    with pytest.raises(ValueError):
        GlobalTestFunction([INF, 2], hecke={2: h3})  # q mismatch
    with pytest.raises(ValueError):
        GlobalTestFunction([INF, 2], hecke={3: h3})  # place outside S


# -- one-dimensional term -----------------------------------------------


def test_one_dim_geometric_char_k():
    f = char_k_fn()
    assert one_dim_geometric(f) == 8
    consts = NormalizationConstants(vol_k=2, vol_gbar=3)
    assert one_dim_geometric(f, consts) == Fraction(32, 3)


def test_one_dim_spectral_char_k():
    # only the trivial character is unramified everywhere in S;
    # its local factors are 1 and the arch factor is the full Phi-mass
    assert one_dim_spectral(char_k_fn()) == 16


def test_one_dim_spectral_t2():
    # trivial character: coset count (2+1) at p=2, 1 at p=3
    assert one_dim_spectral(t2_fn()) == 48
    consts = NormalizationConstants(vol_gbar=4)
    assert one_dim_spectral(t2_fn(), consts) == 12


def test_one_dim_zero():
    f = GlobalTestFunction([INF, 2])
    assert one_dim_geometric(f) == 0
    assert one_dim_spectral(f) == 0


# -- Cartan report ------------------------------------------------------


def test_cartan_ratios():
    for q in (2, 3, 5):
        fld = LocalField(q)
        h = (HeckeElement.char(fld, (1, 0))
             + HeckeElement.char(fld, (1, 1), 4)
             + HeckeElement.unit(fld))
        f = GlobalTestFunction([INF, q] if q != 2 else [INF, 2],
                               hecke={q: h})
        rows = cartan_discrepancy(f)
        by_key = {key: (g, t, r) for _, key, g, t, r in rows}
        g, t, r = by_key[(1, 0)]
        assert r == Fraction(q + 1, 2)
        assert g == LaurentQ(q + 1, 0, q) and t == LaurentQ(2, 0, q)
        assert by_key[(0, 0)][2] == 1
        assert by_key[(1, 1)][2] == 1
        assert by_key[(1, 1)][0] == LaurentQ(4, 0, q)
    report = format_cartan_report(rows)
    assert "ratio" in report.splitlines()[0]
    assert len(report.splitlines()) == 4


# -- residual term ------------------------------------------------------


def test_residual_geometric_char_k():
    assert residual_geometric(char_k_fn()) == -Fraction(15, 8)


def test_residual_identity_char_k():
    f = char_k_fn()
    assert residual_spectral(f) == residual_geometric(f) == -Fraction(15, 8)


def test_residual_identity_t2():
    f = t2_fn()
    assert residual_geometric(f) == -Fraction(15, 8)
    assert residual_spectral(f) == -Fraction(15, 8)
    # itemization: 8 characters, equal shares by reciprocity
    rows = residual_breakdown(f)
    assert len(rows) == 8
    assert all(term == -Fraction(15, 64) for _, term in rows)


def test_residual_identity_is_live():
    " the per-place symbols are individually nontrivial "
    seen_minus = 0
    for c, t, v in [(3, 2, 2), (3, 2, 3), (-1, -1, INF), (-1, -1, 2)]:
        s = hilbert_symbol(c, t, v)
        assert s == -1
        seen_minus += 1
    assert seen_minus == 4


def test_residual_needs_2():
    f, phi = wide_profiles()
    g = GlobalTestFunction([INF, 3], f_profile=f, phi_profile=phi)
    assert residual_geometric(g) == -Fraction(15, 8)  # geometric side fine
    with pytest.raises(ValueError):
        residual_spectral(g)


def test_residual_zero():
    assert residual_spectral(GlobalTestFunction([INF, 2])) == 0


def test_residual_random_profiles():
    " equality holds for any rational piecewise-constant profile pair "
    import random
    rng = random.Random(17)
    fld2, fld3 = LocalField(2), LocalField(3)
    for _ in range(10):
        def rnd_profile():
            pos = ((-3, 0, [Fraction(rng.randint(-9, 9), rng.randint(1, 5))]),
                   (0, 3, [Fraction(rng.randint(-9, 9), rng.randint(1, 5))]))
            neg = ((-2, 2, [Fraction(rng.randint(-9, 9), rng.randint(1, 5))]),)
            return ArchProfile(pos=pos, neg=neg)
        h2 = (HeckeElement.char(fld2, (1, 0), rng.randint(-3, 3))
              + HeckeElement.char(fld2, (0, 0), rng.randint(-3, 3))
              + HeckeElement.char(fld2, (1, 1), rng.randint(-3, 3)))
        h3 = (HeckeElement.char(fld3, (1, 0), rng.randint(-3, 3))
              + HeckeElement.unit(fld3))
        f = GlobalTestFunction([INF, 2, 3], hecke={2: h2, 3: h3},
                               f_profile=rnd_profile(),
                               phi_profile=rnd_profile())
        assert residual_spectral(f) == residual_geometric(f)


# -- correction bracket -------------------------------------------------


def test_correction_char_k():
    f = char_k_fn()
    total, rows = correction_term(f)
    assert total == -Fraction(49, 8)
    assert total == -one_dim_geometric(f) - residual_geometric(f)
    assert [r[0] for r in rows] == [1, -1]
    assert rows[0] == (1, Fraction(1, 8), 3, Fraction(1, 8) - 3)
    text = format_correction_report(total, rows)
    assert text.splitlines()[-1].endswith(str(total))


def test_correction_zero_and_scaling():
    total0, rows0 = correction_term(GlobalTestFunction([INF, 2]))
    assert total0 == 0 and rows0 == []
    f, phi = wide_profiles()
    h = HeckeElement.char(LocalField(2), (1, 0))
    g1 = GlobalTestFunction([INF, 2], hecke={2: h},
                            f_profile=f, phi_profile=phi)
    g3 = GlobalTestFunction([INF, 2], hecke={2: h.scale(3)},
                            f_profile=f, phi_profile=phi)
    assert correction_term(g3)[0] == 3 * correction_term(g1)[0]


# -- torus-level Poisson invariant --------------------------------------


def test_torus_level_poisson():
    f = t2_fn()
    sg = class_group_mod_squares(f.places)
    values = {e: Fraction(0) for e in sg.group.elements()}
    for t, fv, _ in torus_support(f):
        values[project_to_D(t, sg)] += fv
    F = GroupFunction(sg.group, values)
    lhs, rhs = poisson_check(sg.group, [sg.identity()], F)
    assert lhs == rhs
    # the identity fiber is empty here: +-2 project nontrivially
    assert lhs == 0


# -- intertwining -------------------------------------------------------


def test_intertwining_constant():
    assert intertwining_constant() == -1


def test_intertwining_numeric():
    r4 = numeric_verify(1e-4)
    assert abs(r4 + 1) < 1e-3
    errs = [abs(numeric_verify(s) + 1) for s in (1e-2, 1e-3, 1e-4)]
    assert errs[0] > errs[1] > errs[2]


def test_uncompleted_ratio_recorded():
    assert abs(uncompleted_zeta_ratio(1) + 0.30396) < 2e-3


# -- configuration ------------------------------------------------------


def test_load_config(tmp_path):
    h = HeckeElement.char(LocalField(2), (1, 0)) + HeckeElement.unit(LocalField(2))
    (tmp_path / "t2.hk").write_text(h.to_text())
    cfg = """
# comment
places = inf,2
vol_gbar = 2
vol_k = 1
hecke_2 = t2.hk
f_pos = -2:2:3
f_neg = -1:1:5
phi_pos = -2:2:1/2
phi_neg = -1:1:7
"""
    f, consts = load_config(cfg, base_dir=str(tmp_path))
    assert f.places == [INF, 2]
    assert f.local(2) == h
    assert consts.vol_gbar == 2
    assert f.f_profile.mass(1) == 12
    assert one_dim_geometric(f, consts) is not None


def test_load_config_errors(tmp_path):
    with pytest.raises(ValueError):
        load_config("vol_gbar = 1")          # missing places
    with pytest.raises(ValueError):
        load_config("places = inf,2\nbogus = 3")
    with pytest.raises(ValueError):
        load_config("places = inf,2\nplaces = inf,3")
    h3 = HeckeElement.char(LocalField(3), (1, 0))
    (tmp_path / "bad.hk").write_text(h3.to_text())
    with pytest.raises(ValueError):
        load_config("places = inf,2\nhecke_2 = bad.hk",
                    base_dir=str(tmp_path))
