"""Ideal algebra over a Ring: sums, products, powers, bracket powers,
colons, minimal generator counts, Krull dimension, parameter-ideal
detection, and seeded random ideal families for randomized trials."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import groebner
from .rings import Polynomial, Ring, RingMismatchError, is_p_power


class InfiniteColengthError(ValueError):
    """The ideal is not primary to the ideal of all variables."""


class MinimalGeneratorsError(RuntimeError):
    """Greedy trimming could not realize mu(I) many generators.

    Happens for some non-homogeneous generating sets where only a unit
    combination of generators is redundant, never a single generator."""


class Ideal:
    """An ideal of the presented ring, with a lazily cached reduced basis.

    The basis always presents I + Q in the ambient polynomial ring, so
    colengths over the quotient come for free.
    """

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        polys = []
        for g in gens:
            f = ring.poly(g) if isinstance(g, str) else g
            if f.ring is not ring and not f.ring.same_as(ring):
                raise RingMismatchError("generator from a different ring")
            if not f.is_zero():
                polys.append(f)
        self.gens = tuple(polys)
        self._gb = None
        self._colength = None

    @property
    def groebner_basis(self) -> list[Polynomial]:
        if self._gb is None:
            self._gb = groebner.buchberger(self.gens, self.ring)
        return self._gb

    def colength(self):
        """lambda(R/I); None when infinite."""
        if self._colength is None:
            self._colength = groebner.colength_of_basis(self.groebner_basis, self.ring)
        return self._colength

    def colength_strict(self) -> int:
        c = self.colength()
        if c is None:
            raise InfiniteColengthError(f"ideal ({self}) has infinite colength")
        return c

    def is_m_primary(self) -> bool:
        return self.colength() is not None

    def contains(self, f: Polynomial) -> bool:
        return groebner.normal_form(f, self.groebner_basis).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return groebner.normal_form(f, self.groebner_basis)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        gens = [f * g for f in self.gens for g in other.gens]
        return Ideal(self.ring, gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, list(self.gens) + list(other.gens))

    def power(self, n: int) -> "Ideal":
        if n < 1:
            raise ValueError("ideal power needs n >= 1")
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def bracket_power(self, q: int) -> "Ideal":
        """I^[q]: generated by the q-th Frobenius powers of the generators."""
        if not is_p_power(q, self.ring.p):
            raise ValueError(f"{q} is not a power of the characteristic")
        if q == 1:
            return self
        return Ideal(self.ring, [g.frobenius(q) for g in self.gens])

    def colon(self, f: Polynomial) -> "Ideal":
        """(I : f) = {g : g*f in I}, computed by module elimination."""
        return Ideal(self.ring, groebner.colon_by_element(list(self.gens), f, self.ring))

    def min_gens(self) -> int:
        """mu(I) = lambda(R/mI) - lambda(R/I), m the ideal of all variables."""
        lam = self.colength()
        if lam is None:
            raise InfiniteColengthError("min_gens needs finite colength")
        m = maximal_ideal(self.ring)
        return (m * self).colength_strict() - lam

    def _greedy_trim(self, gens) -> list[Polynomial]:
        gens = sorted(gens, key=lambda g: (g.degree(),
                                           self.ring.order.key(g.leading_monomial())))
        changed = True
        while changed and len(gens) > 1:
            changed = False
            for i in range(len(gens) - 1, -1, -1):
                rest = gens[:i] + gens[i + 1:]
                if Ideal(self.ring, rest).contains(gens[i]):
                    del gens[i]
                    changed = True
                    break
        return gens

    def minimal_generators(self, strict: bool = True) -> list[Polynomial]:
        """A generating sequence of mu(I) elements, by greedy trimming.

        Trims the given generators, then the reduced basis if that got
        stuck (the basis is echelonized, so single-generator redundancy
        is the common case there).  With strict=True a sequence longer
        than mu(I) raises; with strict=False the shortest one found is
        returned (the length bookkeeping downstream is valid for any
        generating sequence, just not minimal).
        """
        trimmed = self._greedy_trim(list(self.gens))
        if not self.is_m_primary():
            return trimmed
        mu = self.min_gens()
        if len(trimmed) == mu:
            return trimmed
        from_basis = self._greedy_trim(list(self.groebner_basis))
        if len(from_basis) == mu:
            return from_basis
        if strict:
            raise MinimalGeneratorsError(
                f"could not trim ({self}) to mu={mu} generators")
        return min(trimmed, from_basis, key=len)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def _check(self, other: "Ideal"):
        if self.ring is not other.ring and not self.ring.same_as(other.ring):
            raise RingMismatchError("ideals over different rings")

    def __str__(self):
        return ", ".join(str(g) for g in self.gens) if self.gens else "0"

    def __repr__(self):
        return f"Ideal({self})"


def maximal_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, [ring.var(i) for i in range(ring.nvars)])


def krull_dim(ring: Ring) -> int:
    """Dimension of S/Q: the largest variable subset meeting no leading
    monomial of GB(Q) (combinatorial dimension of the initial ideal)."""
    if ring._dim is not None:
        return ring._dim
    if not ring.relations:
        ring._dim = ring.nvars
        return ring._dim
    gb = groebner.buchberger([], ring)
    supports = [frozenset(i for i, e in enumerate(g.leading_monomial()) if e)
                for g in gb]
    if any(not s for s in supports):
        ring._dim = 0  # unit ideal: the zero ring
        return 0
    best = 0
    indices = range(ring.nvars)
    for size in range(ring.nvars, -1, -1):
        for subset in combinations(indices, size):
            sub = set(subset)
            if all(not s <= sub for s in supports):
                best = size
                break
        if best == size:
            break
    ring._dim = best
    return best


def is_parameter_ideal(J: Ideal) -> bool:
    """m-primary and generated by exactly d = dim elements."""
    if not J.is_m_primary():
        return False
    return J.min_gens() == krull_dim(J.ring)


def relation_squarefree_heuristic(ring: Ring):
    """Reducedness probe for a single-relation presentation.

    True: the relation has an isolated singularity at the origin (finite
    colength of (f, partials)), which forces squarefreeness for the
    homogeneous hypersurfaces handled here.  False: all partials vanish,
    so f is a p-th power.  None: inconclusive.
    """
    if len(ring.relations) != 1:
        raise ValueError("heuristic applies to exactly one relation")
    f = ring.relations[0]
    partials = [f.partial(i) for i in range(ring.nvars)]
    nonzero = [g for g in partials if not g.is_zero()]
    if not nonzero:
        return False
    if f.is_homogeneous() and Ideal(ring, [f] + nonzero).is_m_primary():
        return True
    return None


# --- seeded random families --------------------------------------------------

FAMILIES = ("monomial", "binomial", "dense", "parameter-powers")


@dataclass(frozen=True)
class TrialSpec:
    """Reproducible ideal stream: same spec, same ideals."""

    seed: int
    family: str
    degree_bound: int
    count: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.degree_bound < 1 or self.count < 0:
            raise ValueError("degree bound and count must be positive")


def _random_monomial(rng: random.Random, ring: Ring, bound: int) -> Polynomial:
    total = rng.randint(1, bound)
    exps = [0] * ring.nvars
    for _ in range(total):
        exps[rng.randrange(ring.nvars)] += 1
    return ring.monomial(exps)


def _monomial_ideal(rng: random.Random, ring: Ring, bound: int) -> Ideal:
    # pure powers of every variable first, forcing m-primariness
    gens = []
    for i in range(ring.nvars):
        exps = [0] * ring.nvars
        exps[i] = rng.randint(1, bound)
        gens.append(ring.monomial(exps))
    for _ in range(rng.randint(0, ring.nvars)):
        gens.append(_random_monomial(rng, ring, bound))
    return Ideal(ring, gens)


def _binomial_ideal(rng: random.Random, ring: Ring, bound: int) -> Ideal:
    base = _monomial_ideal(rng, ring, bound)
    gens = list(base.gens)
    for _ in range(rng.randint(1, 2)):
        m1 = _random_monomial(rng, ring, bound)
        m2 = _random_monomial(rng, ring, bound)
        c = rng.randint(1, ring.p - 1)
        g = m1 + m2 * c
        if not g.is_zero():
            gens.append(g)
    return Ideal(ring, gens)


def _dense_poly(rng: random.Random, ring: Ring, bound: int) -> Polynomial:
    f = ring.zero()
    for _ in range(rng.randint(2, 4)):
        f = f + _random_monomial(rng, ring, bound) * rng.randint(1, ring.p - 1)
    return f


def _dense_ideal(rng: random.Random, ring: Ring, bound: int) -> Ideal:
    gens = [_dense_poly(rng, ring, bound) for _ in range(ring.nvars + 1)]
    return Ideal(ring, [g for g in gens if not g.is_zero()])


def _parameter_powers_ideal(rng: random.Random, ring: Ring, bound: int) -> Ideal:
    d = krull_dim(ring)
    gens = []
    for i in range(d):
        exps = [0] * ring.nvars
        exps[i] = rng.randint(1, bound)
        gens.append(ring.monomial(exps))
    return Ideal(ring, gens)


_BUILDERS = {
    "monomial": _monomial_ideal,
    "binomial": _binomial_ideal,
    "dense": _dense_ideal,
    "parameter-powers": _parameter_powers_ideal,
}


def random_ideals(spec: TrialSpec, ring: Ring, require_m_primary: bool = True):
    """Deterministic ideal stream for trials.

    Families that cannot guarantee finite colength by construction
    (dense, binomial over quotients) are filtered by retrying with the
    same RNG, preserving determinism.
    """
    rng = random.Random(spec.seed)
    build = _BUILDERS[spec.family]
    out = []
    attempts = 0
    while len(out) < spec.count:
        ideal = build(rng, ring, spec.degree_bound)
        attempts += 1
        if attempts > 100 * (spec.count + 1):
            raise RuntimeError("random ideal family keeps producing non-m-primary ideals")
        if ideal.gens and (not require_m_primary or ideal.is_m_primary()):
            out.append(ideal)
    return out
