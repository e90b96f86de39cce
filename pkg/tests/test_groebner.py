"""Groebner bases, staircase counts, syzygies, module colengths."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from hkprod import Ring, buchberger, is_groebner, normal_form, syzygies
from hkprod.groebner import (colength_of_basis, module_buchberger,
                             module_colength, module_normal_form,
                             staircase_count, top_key, vector_from_polys)

from .oracles import brute_colength


def test_basis_already_reduced(F5xy):
    gb = buchberger([F5xy.poly("x^2 - y"), F5xy.poly("y^2")], F5xy)
    assert [str(g) for g in gb] == ["y^2", "x^2 + 4*y"]
    assert is_groebner(gb)


def test_basis_over_fermat_quotient(fermat):
    gb = buchberger([fermat.poly("y"), fermat.poly("z")], fermat)
    assert [str(g) for g in gb] == ["z", "y", "x^3"]


def test_normal_form_single_step(F5xy):
    gb = [F5xy.poly("x^2 - y"), F5xy.poly("y^2")]
    assert normal_form(F5xy.poly("x^2"), gb) == F5xy.poly("y")


def test_normal_form_idempotent_and_linear(F3xy):
    gb = buchberger([F3xy.poly("x^2 + y"), F3xy.poly("y^3")], F3xy)
    rng = random.Random(5)
    for _ in range(20):
        f = sum((F3xy.monomial((rng.randint(0, 3), rng.randint(0, 3)),
                               rng.randint(0, 2)) for _ in range(3)), F3xy.zero())
        g = sum((F3xy.monomial((rng.randint(0, 3), rng.randint(0, 3)),
                               rng.randint(0, 2)) for _ in range(3)), F3xy.zero())
        nf = lambda h: normal_form(h, gb)
        assert nf(nf(f)) == nf(f)
        assert nf(f + g) == nf(f) + nf(g)


def test_staircase_counts():
    assert staircase_count([(2, 0), (0, 2)], 2) == 4
    assert staircase_count([(1, 0)], 2) is None  # no pure power of y
    assert staircase_count([(0, 0)], 2) == 0  # unit ideal
    assert staircase_count([], 0) == 1


def test_colength_spec_value(F5xy):
    gb = buchberger([F5xy.poly("x^2 - y"), F5xy.poly("y^2")], F5xy)
    assert colength_of_basis(gb, F5xy) == 4  # quotient is F_5[x]/(x^4)


def test_colength_independent_of_order_and_generator_shuffle(F2xy):
    gens = ["x^3 + y", "x*y + y^2", "y^4"]
    base = colength_of_basis(buchberger([F2xy.poly(g) for g in gens], F2xy), F2xy)
    lex_ring = Ring(2, ["x", "y"], order="lex")
    swapped = Ring(2, ["x", "y"], precedence=(1, 0))
    for ring in (lex_ring, swapped):
        for perm in ([2, 0, 1], [1, 2, 0]):
            polys = [ring.poly(gens[i]) for i in perm]
            assert colength_of_basis(buchberger(polys, ring), ring) == base


def test_colength_matches_brute_force_on_random_ideals(F2xy):
    rng = random.Random(9)
    for _ in range(15):
        gens = [F2xy.poly(f"x^{rng.randint(1, 3)}"), F2xy.poly(f"y^{rng.randint(1, 3)}")]
        for _ in range(rng.randint(0, 2)):
            gens.append(F2xy.monomial((rng.randint(0, 3), rng.randint(0, 3)))
                        + F2xy.monomial((rng.randint(0, 3), rng.randint(0, 3))))
        gens = [g for g in gens if not g.is_zero()]
        engine = colength_of_basis(buchberger(gens, F2xy), F2xy)
        assert engine == brute_colength(gens, F2xy)


def test_colength_matches_brute_force_on_fermat(fermat):
    for gens in (["y", "z"], ["x", "y", "z"], ["x^2", "y", "z"], ["y^2", "z^2"]):
        polys = [fermat.poly(g) for g in gens]
        engine = colength_of_basis(buchberger(polys, fermat), fermat)
        assert engine == brute_colength(polys, fermat)


def test_membership_via_normal_form(F2xy, fermat):
    gb = buchberger([F2xy.poly("x"), F2xy.poly("y")], F2xy)
    assert normal_form(F2xy.poly("x*y"), gb).is_zero()
    gb2 = buchberger([F2xy.poly("x^2"), F2xy.poly("y^2")], F2xy)
    assert not normal_form(F2xy.poly("x"), gb2).is_zero()
    # x^3 = y^3 + z^3 in the quotient, so it reduces to zero mod (y, z)
    gb3 = buchberger([fermat.poly("y"), fermat.poly("z")], fermat)
    assert normal_form(fermat.poly("x^3"), gb3).is_zero()


def test_syzygies_are_actual_syzygies(F2xy, fermat):
    for ring, gens in ((F2xy, ["x^2", "x*y", "y^2"]),
                       (F2xy, ["x^2 + y", "y^2"]),
                       (fermat, ["y", "z"])):
        polys = [ring.poly(g) for g in gens]
        rel_gb = buchberger([], ring)
        for s in syzygies(polys, ring):
            combo = sum((si * ai for si, ai in zip(s, polys)), ring.zero())
            assert normal_form(combo, rel_gb).is_zero() if rel_gb else combo.is_zero()


def test_syzygies_of_maximal_ideal(F2xy):
    syz = syzygies([F2xy.var("x"), F2xy.var("y")], F2xy)
    assert len(syz) == 1
    assert [str(f) for f in syz[0]] == ["y", "x"]


def test_syzygies_contain_taylor_relations(F2xy):
    # for a monomial sequence the Taylor vectors generate all syzygies
    a = [F2xy.poly("x^2"), F2xy.poly("x*y"), F2xy.poly("y^2")]
    syz = syzygies(a, F2xy)
    basis = module_buchberger([vector_from_polys(s) for s in syz],
                              F2xy, top_key(F2xy))
    taylor = [
        [F2xy.poly("y"), F2xy.poly("x"), F2xy.zero()],
        [F2xy.zero(), F2xy.poly("y"), F2xy.poly("x")],
        [F2xy.poly("y^2"), F2xy.zero(), F2xy.poly("x^2")],
    ]
    for t in taylor:
        nf = module_normal_form(vector_from_polys(t), basis, F2xy, top_key(F2xy))
        assert not nf


def test_module_colength_spec_value(F2xy):
    # N = K_{(x,y)} + (x^2, y^2) R^2: the syzygy (y, x) plus I e_1, I e_2
    vectors = [vector_from_polys([F2xy.poly("y"), F2xy.poly("x")])]
    for g in ("x^2", "y^2"):
        for pos in (0, 1):
            comps = [F2xy.zero(), F2xy.zero()]
            comps[pos] = F2xy.poly(g)
            vectors.append(vector_from_polys(comps))
    assert module_colength(vectors, 2, F2xy) == 5


def test_module_colength_full_module(F2xy):
    vectors = [vector_from_polys([F2xy.one(), F2xy.zero()]),
               vector_from_polys([F2xy.zero(), F2xy.one()])]
    assert module_colength(vectors, 2, F2xy) == 0


def test_kunz_scaling_of_colength():
    # over a polynomial ring lambda(R/I^[q]) = q^d lambda(R/I)
    for p in (2, 3):
        ring = Ring(p, ["x", "y"])
        rng = random.Random(p)
        for _ in range(10):
            gens = [ring.poly(f"x^{rng.randint(1, 3)}"),
                    ring.poly(f"y^{rng.randint(1, 3)}"),
                    ring.monomial((rng.randint(0, 2), rng.randint(0, 2)))
                    + ring.monomial((rng.randint(0, 2), rng.randint(0, 2)))]
            gens = [g for g in gens if not g.is_zero()]
            lam = colength_of_basis(buchberger(gens, ring), ring)
            scaled = colength_of_basis(
                buchberger([g.frobenius(p) for g in gens], ring), ring)
            assert scaled == p * p * lam


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                min_size=1, max_size=5))
def test_buchberger_criterion_on_monomial_ideals(monos):
    ring = Ring(2, ["x", "y"])
    gens = [ring.monomial(m) for m in monos if sum(m)]
    if not gens:
        return
    gb = buchberger(gens, ring)
    assert is_groebner(gb)
    # reduced basis of a monomial ideal is its minimal generating set
    assert all(len(g.terms) == 1 for g in gb)


def test_empty_input(F2xy):
    assert buchberger([], F2xy) == []
    assert colength_of_basis([], F2xy) is None
