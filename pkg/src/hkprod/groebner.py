"""Buchberger-based Groebner machinery for ideals and free-module submodules.

Everything is computed in the ambient polynomial ring; quotient-ring
questions are handled by the callers adjoining the presentation's
relations (for ideals) or relation multiples of the basis vectors (for
modules).  Output bases are reduced, monic and deterministically sorted,
so identical inputs give identical bases.
"""

from __future__ import annotations

import heapq
from itertools import combinations

import numpy as np

from .rings import Monomial, Polynomial, Ring

# Hard cap on the staircase sieve, in cells.  Bracket powers multiply
# exponents by q; blowing past this means the requested length is not
# desk-scale and silently grinding on would help nobody.
MAX_BOX_CELLS = 200_000_000


class ColengthOverflowError(RuntimeError):
    """The staircase bounding box is too large to count exactly."""


def _divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def _lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _quot(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(m1, m2))


def normal_form(f: Polynomial, basis: list[Polynomial]) -> Polynomial:
    """Remainder of multivariate division of f by basis (first-match reducer).

    Zero iff f lies in the ideal generated by a *Groebner* basis; always
    idempotent and F_p-linear for a fixed basis.
    """
    ring = f.ring
    p = ring.p
    key = ring.order.key
    lead = [(g.leading_monomial(), pow(g.leading_coefficient(), -1, p), g)
            for g in basis if not g.is_zero()]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lcinv, g in lead:
            if _divides(lm, m):
                factor = (c * lcinv) % p
                q = _quot(m, lm)
                for gm, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    if mm == m:
                        continue
                    v = (work.get(mm, 0) - factor * gc) % p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return Polynomial(ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = _lcm(lf, lg)
    p = f.ring.p
    cf = pow(f.leading_coefficient(), -1, p)
    cg = pow(g.leading_coefficient(), -1, p)
    return f.term_mul(_quot(lcm, lf), cf) - g.term_mul(_quot(lcm, lg), cg)


def buchberger(gens, ring: Ring) -> list[Polynomial]:
    """Reduced Groebner basis of (gens) + (ring.relations) in the ambient ring.

    Normal selection strategy: S-pairs ordered by lcm degree, then by
    the monomial order on the lcm, then by index; pairs with coprime
    leading monomials are skipped (Buchberger's first criterion).
    """
    G: list[Polynomial] = []
    for f in list(gens) + list(ring.relations):
        f = f if isinstance(f, Polynomial) else ring.poly(f)
        if not f.is_zero():
            G.append(f.monic())
    G.sort(key=lambda g: ring.order.key(g.leading_monomial()))
    key = ring.order.key
    queue: list = []

    def push_pairs(j):
        lj = G[j].leading_monomial()
        for i in range(j):
            li = G[i].leading_monomial()
            lcm = _lcm(li, lj)
            if lcm == tuple(a + b for a, b in zip(li, lj)):
                continue  # coprime leading monomials
            heapq.heappush(queue, (sum(lcm), key(lcm), i, j))

    for j in range(len(G)):
        push_pairs(j)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        s = normal_form(s_polynomial(G[i], G[j]), G)
        if not s.is_zero():
            G.append(s.monic())
            push_pairs(len(G) - 1)
    return interreduce(G)


def interreduce(G: list[Polynomial]) -> list[Polynomial]:
    """Minimalize then fully reduce a Groebner basis; result is canonical."""
    if not G:
        return []
    ring = G[0].ring
    key = ring.order.key
    minimal: list[Polynomial] = []
    for g in sorted(G, key=lambda h: key(h.leading_monomial())):
        if not any(_divides(h.leading_monomial(), g.leading_monomial())
                   for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        r = normal_form(g, minimal[:i] + minimal[i + 1:])
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda h: key(h.leading_monomial()))
    return reduced


def is_groebner(G: list[Polynomial]) -> bool:
    """Buchberger criterion: every S-pair reduces to zero."""
    for f, g in combinations(G, 2):
        if not normal_form(s_polynomial(f, g), G).is_zero():
            return False
    return True


# --- staircase counting ----------------------------------------------------

def staircase_count(lead_monos: list[Monomial], nvars: int):
    """Number of monomials outside the monomial ideal of lead_monos.

    Returns None when infinite.  Finiteness is decided combinatorially:
    the complement is infinite iff some variable has no pure power among
    the leading monomials.  The finite count is a sieve over the box
    bounded by those pure powers.
    """
    if nvars == 0:
        return 0 if lead_monos else 1
    bounds = [None] * nvars
    for m in lead_monos:
        support = [i for i, e in enumerate(m) if e]
        if not support:
            return 0  # 1 is a leading monomial: unit ideal
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        return None
    cells = 1
    for b in bounds:
        cells *= b
    if cells > MAX_BOX_CELLS:
        raise ColengthOverflowError(f"staircase box of {cells} cells exceeds cap")
    box = np.zeros(bounds, dtype=bool)
    # only generators fitting inside the box can dominate a cell of it
    for m in lead_monos:
        if all(e < b for e, b in zip(m, bounds)):
            box[tuple(slice(e, None) for e in m)] = True
    return int(box.size - box.sum())


def colength_of_basis(gb: list[Polynomial], ring: Ring):
    """lambda of the quotient by the ideal a reduced basis presents."""
    leads = [g.leading_monomial() for g in gb if not g.is_zero()]
    return staircase_count(leads, ring.nvars)


# --- module machinery -------------------------------------------------------
#
# A module element of R^rank is a dict {(component, monomial): coeff}.
# Orders on module terms:
#   TOP  - term over position, position tiebreak e_0 > e_1 > ...
#   ELIM - every term in component 0 beats every term elsewhere (used to
#          read syzygies / colon ideals off an extended module basis).

VecTerm = tuple[int, Monomial]
Vector = dict


def top_key(ring: Ring):
    mkey = ring.order.key
    return lambda t: (mkey(t[1]), -t[0])


def elim_key(ring: Ring):
    mkey = ring.order.key
    return lambda t: (1 if t[0] == 0 else 0, mkey(t[1]), -t[0])


def vector_from_polys(polys) -> Vector:
    v: Vector = {}
    for i, f in enumerate(polys):
        for m, c in f.terms.items():
            v[(i, m)] = c
    return v


def vector_to_polys(v: Vector, rank: int, ring: Ring) -> list[Polynomial]:
    comps: list[dict] = [{} for _ in range(rank)]
    for (i, m), c in v.items():
        comps[i][m] = c
    return [Polynomial(ring, t) for t in comps]


def _vec_leading(v: Vector, key) -> VecTerm:
    return max(v, key=key)


def _vec_axpy(v: Vector, coeff: int, mono: Monomial, w: Vector, p: int) -> Vector:
    """v - coeff * x^mono * w, in place on a copy."""
    out = dict(v)
    for (i, m), c in w.items():
        t = (i, tuple(a + b for a, b in zip(m, mono)))
        val = (out.get(t, 0) - coeff * c) % p
        if val:
            out[t] = val
        else:
            out.pop(t, None)
    return out


def module_normal_form(v: Vector, basis: list[Vector], ring: Ring, key) -> Vector:
    p = ring.p
    lead = [(_vec_leading(w, key), w) for w in basis if w]
    lead = [((t[0], t[1]), pow(w[t], -1, p), w) for t, w in lead]
    remainder: Vector = {}
    work = dict(v)
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        pos, mono = t
        for (lpos, lmono), lcinv, w in lead:
            if lpos == pos and _divides(lmono, mono):
                work[t] = c
                work = _vec_axpy(work, (c * lcinv) % p, _quot(mono, lmono), w, p)
                break
        else:
            remainder[t] = c
    return remainder


def _vec_monic(v: Vector, ring: Ring, key) -> Vector:
    if not v:
        return v
    inv = pow(v[_vec_leading(v, key)], -1, ring.p)
    if inv == 1:
        return v
    return {t: (c * inv) % ring.p for t, c in v.items()}


def module_buchberger(vectors: list[Vector], ring: Ring, key) -> list[Vector]:
    """Reduced module Groebner basis; S-pairs only within a component."""
    p = ring.p
    G = [_vec_monic(dict(v), ring, key) for v in vectors if v]
    G.sort(key=lambda v: key(_vec_leading(v, key)))
    queue: list = []

    def push_pairs(j):
        (pj, mj) = _vec_leading(G[j], key)
        for i in range(j):
            (pi, mi) = _vec_leading(G[i], key)
            if pi != pj:
                continue
            lcm = _lcm(mi, mj)
            heapq.heappush(queue, (sum(lcm), key((pi, lcm)), i, j))

    for j in range(len(G)):
        push_pairs(j)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        (pi, mi), (pj, mj) = _vec_leading(G[i], key), _vec_leading(G[j], key)
        lcm = _lcm(mi, mj)
        ci = pow(G[i][(pi, mi)], -1, p)
        cj = pow(G[j][(pj, mj)], -1, p)
        s = _vec_axpy({}, p - ci, _quot(lcm, mi), G[i], p)
        s = _vec_axpy(s, cj, _quot(lcm, mj), G[j], p)
        s = module_normal_form(s, G, ring, key)
        if s:
            G.append(_vec_monic(s, ring, key))
            push_pairs(len(G) - 1)
    return module_interreduce(G, ring, key)


def module_interreduce(G: list[Vector], ring: Ring, key) -> list[Vector]:
    minimal: list[Vector] = []
    for v in sorted((v for v in G if v), key=lambda v: key(_vec_leading(v, key))):
        pv, mv = _vec_leading(v, key)
        if not any(pw == pv and _divides(mw, mv)
                   for (pw, mw) in (_vec_leading(w, key) for w in minimal)):
            minimal.append(v)
    reduced = []
    for i, v in enumerate(minimal):
        r = module_normal_form(v, minimal[:i] + minimal[i + 1:], ring, key)
        if r:
            reduced.append(_vec_monic(r, ring, key))
    reduced.sort(key=lambda v: key(_vec_leading(v, key)))
    return reduced


def syzygies(polys: list[Polynomial], ring: Ring) -> list[list[Polynomial]]:
    """Generators of the first syzygy module of polys over Ring (= S/Q).

    Lifts to the ambient ring: a syzygy over S/Q is a tuple s with
    sum(s_i * a_i) in Q, read off an elimination-order module basis of
    the vectors a_i*e_0 + e_i together with f*e_0 for each relation f.
    """
    if not polys:
        raise ValueError("syzygies of an empty sequence")
    ell = len(polys)
    rank = 1 + ell
    vectors: list[Vector] = []
    for i, a in enumerate(polys):
        v: Vector = {(i + 1, (0,) * ring.nvars): 1}
        for m, c in a.terms.items():
            v[(0, m)] = c
        vectors.append(v)
    for f in ring.relations:
        vectors.append({(0, m): c for m, c in f.terms.items()})
    basis = module_buchberger(vectors, ring, elim_key(ring))
    result = []
    for v in basis:
        if all(t[0] != 0 for t in v):
            shifted = {(i - 1, m): c for (i, m), c in v.items()}
            result.append(vector_to_polys(shifted, ell, ring))
    return result


def colon_by_element(gens: list[Polynomial], f: Polynomial, ring: Ring) -> list[Polynomial]:
    """Generators of ((gens) + Q : f) in the ambient ring, via elimination."""
    if f.is_zero():
        raise ValueError("colon by zero")
    vectors: list[Vector] = []
    v: Vector = {(1, (0,) * ring.nvars): 1}
    for m, c in f.terms.items():
        v[(0, m)] = c
    vectors.append(v)
    for g in list(gens) + list(ring.relations):
        if not g.is_zero():
            vectors.append({(0, m): c for m, c in g.terms.items()})
    basis = module_buchberger(vectors, ring, elim_key(ring))
    result = []
    for w in basis:
        if all(t[0] != 0 for t in w):
            poly = vector_to_polys({(0, m): c for (i, m), c in w.items()}, 1, ring)[0]
            if not poly.is_zero():
                result.append(poly)
    return result


def module_colength(vectors: list[Vector], rank: int, ring: Ring):
    """lambda(R^rank / N) for N generated by vectors (relations adjoined).

    None when infinite.  Computed componentwise from the leading-term
    module of the TOP-order basis of N + Q*(e_0,...,e_{rank-1}).
    """
    gens = [dict(v) for v in vectors if v]
    for f in ring.relations:
        for i in range(rank):
            gens.append({(i, m): c for m, c in f.terms.items()})
    basis = module_buchberger(gens, ring, top_key(ring))
    key = top_key(ring)
    per_component: list[list[Monomial]] = [[] for _ in range(rank)]
    for v in basis:
        i, m = _vec_leading(v, key)
        per_component[i].append(m)
    total = 0
    for leads in per_component:
        c = staircase_count(leads, ring.nvars)
        if c is None:
            return None
        total += c
    return total
