"""Hilbert-Kunz tables, estimates, monomial volumes, multiplicities,
star spread, and the membership probe."""

import json
import random
from fractions import Fraction

import pytest

from hkprod import (Ideal, InfiniteColengthError, Ring, TrialSpec,
                    hilbert_samuel_parameter, hk_estimate, hk_table,
                    jacobian_candidates, monomial_hk_volume, random_ideals,
                    star_spread, tc_probe)


def I_(ring, *gens):
    return Ideal(ring, list(gens))


def test_table_on_fermat_parameter(fermat):
    table = hk_table(I_(fermat, "y", "z"), 3)
    assert [r.colength for r in table.rows] == [3, 12, 48, 192]
    assert all(r.normalized == 3 for r in table.rows)
    assert table.d == 2


def test_table_kunz_scaling(F5xy):
    table = hk_table(I_(F5xy, "x^2", "y^3"), 1)
    assert [(r.q, r.colength) for r in table.rows] == [(1, 6), (5, 150)]
    assert [r.normalized for r in table.rows] == [6, 6]


def test_table_rejects_infinite_colength(F2xy):
    with pytest.raises(InfiniteColengthError):
        hk_table(I_(F2xy, "x"), 1)


def test_table_serialization(F2xy):
    table = hk_table(I_(F2xy, "x", "y"), 2)
    obj = table.to_json_obj()
    assert obj["schema"] == 1
    assert [row["normalized"] for row in obj["rows"]] == ["1/1"] * 3
    json.dumps(obj)  # must be serializable as-is
    lines = table.to_csv().strip().splitlines()
    assert lines[0] == "q,colength,normalized_num,normalized_den"
    assert lines[1] == "1,1,1,1"


def test_estimate_exact_regular(F5xy):
    est = hk_estimate(I_(F5xy, "x^2", "y^3"), 1, "exact-regular")
    assert est.value == 6 and est.is_limit


def test_estimate_auto_picks_monomial_volume(F2xy):
    est = hk_estimate(I_(F2xy, "x^2", "x*y", "y^2"), 1)
    assert est.method == "exact-monomial-volume"
    assert est.value == 3 and est.is_limit


def test_estimate_sequence_methods_on_fermat(fermat):
    m = I_(fermat, "x", "y", "z")
    last = hk_estimate(m, 3, "sequence-last")
    assert not last.is_limit
    assert last.value == Fraction(m.bracket_power(8).colength_strict(), 64)
    extrap = hk_estimate(m, 3, "sequence-extrapolated")
    assert not extrap.is_limit
    rows = extrap.table.rows
    (q1, v1), (q2, v2) = (rows[-2].q, rows[-2].normalized), (rows[-1].q, rows[-1].normalized)
    assert extrap.value == Fraction(q2 * v2 - q1 * v1, q2 - q1)


def test_estimate_validation(F2xy, fermat):
    with pytest.raises(ValueError):
        hk_estimate(I_(fermat, "x", "y", "z"), 1, "exact-regular")
    with pytest.raises(ValueError):
        hk_estimate(I_(F2xy, "x", "y"), 1, "no-such-method")


def test_monomial_volume_spec_value(F2xy):
    assert monomial_hk_volume(I_(F2xy, "x^2", "x*y", "y^2")) == 3


def test_monomial_volume_equals_colength_randomized(F3xy):
    spec = TrialSpec(seed=17, family="monomial", degree_bound=4, count=25)
    for I in random_ideals(spec, F3xy):
        assert monomial_hk_volume(I) == I.colength_strict()


def test_monomial_volume_validation(F2xy, fermat):
    with pytest.raises(ValueError):
        monomial_hk_volume(I_(F2xy, "x + y", "y^2"))
    with pytest.raises(ValueError):
        monomial_hk_volume(I_(fermat, "y", "z"))
    with pytest.raises(InfiniteColengthError):
        monomial_hk_volume(I_(F2xy, "x^2"))


def test_hilbert_samuel_parameter(fermat, F3xy):
    e, diag = hilbert_samuel_parameter(I_(fermat, "y", "z"))
    assert e == 3
    assert diag[0] == 6  # 2! * lambda(R/J) / 1
    e2, _ = hilbert_samuel_parameter(I_(F3xy, "x", "y^2"))
    assert e2 == 2
    with pytest.raises(ValueError):
        hilbert_samuel_parameter(I_(F3xy, "x^2", "x*y", "y^2"))


def test_star_spread_modes(F2xy, fermat):
    assert star_spread(I_(F2xy, "x^2", "x*y", "y^2"), "regular") == 3
    assert star_spread(I_(fermat, "y", "z"), "parameter") == 2
    assert star_spread(I_(F2xy, "x", "y"), 4) == 4
    with pytest.raises(ValueError):
        star_spread(I_(fermat, "y", "z"), "regular")
    with pytest.raises(ValueError):
        star_spread(I_(F2xy, "x"), "nope")
    with pytest.raises(ValueError):
        star_spread(I_(F2xy, "x"), 0)


def test_probe_trivial_member(fermat):
    verdict = tc_probe(fermat.poly("y"), I_(fermat, "y", "z"), fermat.one(), 3)
    assert verdict.consistent and str(verdict) == "ConsistentUpTo(8)"


def test_probe_fermat_classical_candidate(fermat):
    verdict = tc_probe(fermat.poly("x^2"), I_(fermat, "y", "z"),
                       fermat.poly("x^2"), 3)
    assert verdict.consistent and verdict.q == 8


def test_probe_refutation(F2xy):
    verdict = tc_probe(F2xy.poly("x"), I_(F2xy, "x^2", "y^2"), F2xy.one(), 3)
    assert not verdict.consistent and verdict.q == 2
    assert str(verdict).startswith("RefutedAt(2): normal form")
    assert verdict.witness == F2xy.poly("x^2")


def test_probe_membership_in_ideal_always_consistent(F3xy):
    rng = random.Random(2)
    spec = TrialSpec(seed=8, family="binomial", degree_bound=3, count=8)
    for I in random_ideals(spec, F3xy):
        z = I.gens[rng.randrange(len(I.gens))]
        assert tc_probe(z, I, F3xy.one(), 2).consistent


def test_probe_validation(F2xy):
    I = I_(F2xy, "x", "y")
    with pytest.raises(ValueError):
        tc_probe(F2xy.poly("x"), I, F2xy.zero(), 2)
    with pytest.raises(ValueError):
        tc_probe(F2xy.poly("x"), I, F2xy.one(), 0)


def test_jacobian_candidates(fermat):
    cands = jacobian_candidates(fermat)
    assert sorted(str(c) for c in cands) == ["x^2", "y^2", "z^2"]
    # over F_3 the Fermat cubic is a cube of linear forms: all partials vanish
    frobenius_cubic = Ring(3, ["x", "y", "z"], relations=["x^3+y^3+z^3"])
    assert jacobian_candidates(frobenius_cubic) == []
    with pytest.raises(ValueError):
        jacobian_candidates(Ring(2, ["x", "y"]))
