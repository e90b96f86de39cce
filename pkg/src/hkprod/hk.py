"""Hilbert-Kunz tables and estimates, exact monomial volumes,
Hilbert-Samuel multiplicity for parameter ideals, star-spread modes, and
a finite-q tight-closure membership probe.

Every normalized value is an exact Fraction; nothing here touches
floating point, so downstream equality checks carry no tolerance."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .ideals import Ideal, InfiniteColengthError, is_parameter_ideal, krull_dim
from .rings import Polynomial, Ring


@dataclass
class HKRow:
    q: int
    colength: int
    normalized: Fraction


@dataclass
class HKTable:
    """Per-q colengths lambda(R/I^[q]) with exact normalizations by q^d."""

    ideal: Ideal
    d: int
    rows: list[HKRow]

    def to_json_obj(self) -> dict:
        return {
            "schema": 1,
            "d": self.d,
            "ideal": [str(g) for g in self.ideal.gens],
            "rows": [{"q": r.q, "colength": r.colength,
                      "normalized": f"{r.normalized.numerator}/{r.normalized.denominator}"}
                     for r in self.rows],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["q", "colength", "normalized_num", "normalized_den"])
        for r in self.rows:
            w.writerow([r.q, r.colength, r.normalized.numerator, r.normalized.denominator])
        return buf.getvalue()


def hk_table(I: Ideal, e_max: int) -> HKTable:
    """Exact rows for q = p^0 ... p^e_max; raises on infinite colength."""
    if not I.is_m_primary():
        raise InfiniteColengthError("Hilbert-Kunz table needs an m-primary ideal")
    d = krull_dim(I.ring)
    rows = []
    for e in range(e_max + 1):
        q = I.ring.p ** e
        lam = I.bracket_power(q).colength_strict()
        rows.append(HKRow(q=q, colength=lam, normalized=Fraction(lam, q ** d)))
    return HKTable(ideal=I, d=d, rows=rows)


ESTIMATE_METHODS = ("exact-regular", "exact-monomial-volume",
                    "sequence-last", "sequence-extrapolated")


@dataclass
class HKEstimate:
    """A value for e_HK(I) together with how it was obtained.

    is_limit is True only for the two exact methods; the sequence
    methods report finite-q data and never claim the limit."""

    value: Fraction
    method: str
    is_limit: bool
    table: HKTable


def hk_estimate(I: Ideal, e_max: int, method: str = "auto") -> HKEstimate:
    ring = I.ring
    if method == "auto":
        if ring.is_regular and all(len(g.terms) == 1 for g in I.gens):
            method = "exact-monomial-volume"
        elif ring.is_regular:
            method = "exact-regular"
        else:
            method = "sequence-last"
    if method not in ESTIMATE_METHODS:
        raise ValueError(f"unknown estimation method {method!r}")
    if method == "exact-regular":
        if not ring.is_regular:
            raise ValueError("exact-regular needs a relation-free presentation")
        # Kunz: Frobenius is flat over regular rings, so e_HK(I) = lambda(R/I)
        value = Fraction(I.colength_strict())
        return HKEstimate(value, method, True, hk_table(I, min(e_max, 1)))
    if method == "exact-monomial-volume":
        value = monomial_hk_volume(I)
        return HKEstimate(value, method, True, hk_table(I, min(e_max, 1)))
    table = hk_table(I, e_max)
    if method == "sequence-last":
        return HKEstimate(table.rows[-1].normalized, method, False, table)
    if len(table.rows) < 2:
        raise ValueError("extrapolation needs at least two rows")
    # fit v(q) = e + c/q through the last two rows; O(1/q) deviation
    # heuristic, never claimed as the limit
    (q1, v1), (q2, v2) = ((r.q, r.normalized) for r in table.rows[-2:])
    value = Fraction(q2 * v2 - q1 * v1, q2 - q1)
    return HKEstimate(value, "sequence-extrapolated", False, table)


def monomial_hk_volume(I: Ideal) -> Fraction:
    """Exact e_HK of an m-primary monomial ideal in a polynomial ring.

    The Euclidean volume of the staircase complement, by inclusion-
    exclusion over generator subsets with componentwise-max joins inside
    the bounding box of pure powers.
    """
    ring = I.ring
    if not ring.is_regular:
        raise ValueError("monomial volume needs a relation-free presentation")
    if any(len(g.terms) != 1 for g in I.gens):
        raise ValueError("monomial volume needs monomial generators")
    gens = [g.leading_monomial()
            for g in Ideal(ring, I.minimal_generators()).gens]
    n = ring.nvars
    bounds = [None] * n
    for m in gens:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1 and (bounds[support[0]] is None or m[support[0]] < bounds[support[0]]):
            bounds[support[0]] = m[support[0]]
    if any(b is None for b in bounds):
        raise InfiniteColengthError("monomial ideal is not m-primary")
    box = 1
    for b in bounds:
        box *= b
    covered = 0
    for k in range(1, len(gens) + 1):
        sign = 1 if k % 2 else -1
        for subset in combinations(gens, k):
            join = tuple(max(col) for col in zip(*subset))
            vol = 1
            for j, b in zip(join, bounds):
                vol *= max(b - j, 0)
            covered += sign * vol
    return Fraction(box - covered)


def hilbert_samuel_parameter(J: Ideal) -> tuple[int, list[Fraction]]:
    """e(J) = lambda(R/J) for a parameter ideal in a Cohen-Macaulay ring.

    Returns the multiplicity plus a diagnostic list d! * lambda(R/J^n) / n^d
    for n <= 4 (it approaches e(J) from above as n grows).
    """
    if not is_parameter_ideal(J):
        raise ValueError("not a parameter ideal")
    d = krull_dim(J.ring)
    e = J.colength_strict()
    fact = 1
    for k in range(2, d + 1):
        fact *= k
    diag = [Fraction(fact * J.power(n).colength_strict(), n ** d) for n in range(1, 5)]
    return e, diag


def star_spread(J: Ideal, mode) -> int:
    """The *-spread in the three decidable modes.

    mode="regular": tight closure is trivial, so J is its own unique
    minimal *-reduction and the spread is mu(J); requires no relations.
    mode="parameter": J is (asserted) tightly equivalent to a parameter
    ideal, so the spread equals the dimension.  An integer mode is a
    caller-supplied value, passed through.
    """
    if isinstance(mode, int) and not isinstance(mode, bool):
        if mode < 1:
            raise ValueError("star spread must be positive")
        return mode
    if mode == "regular":
        if not J.ring.is_regular:
            raise ValueError("regular mode needs a relation-free presentation")
        return J.min_gens()
    if mode == "parameter":
        return krull_dim(J.ring)
    raise ValueError(f"unknown star-spread mode {mode!r}")


@dataclass
class ProbeVerdict:
    """Outcome of the finite-q membership probe c * z^q in I^[q].

    consistent=True means every checked level passed (ConsistentUpTo
    q_max); otherwise q is the first failing level and witness the
    nonzero normal form there.  A refutation disproves z in I* only
    under the caller's assertion that c is a test element.
    """

    consistent: bool
    q: int
    witness: Polynomial | None = None

    def __str__(self):
        if self.consistent:
            return f"ConsistentUpTo({self.q})"
        return f"RefutedAt({self.q}): normal form {self.witness}"


def tc_probe(z: Polynomial, I: Ideal, c: Polynomial, e_max: int) -> ProbeVerdict:
    """Check c * z^q in I^[q] for q = p^1 ... p^e_max."""
    if c.is_zero():
        raise ValueError("multiplier c must be nonzero")
    if e_max < 1:
        raise ValueError("e_max must be at least 1")
    p = I.ring.p
    for e in range(1, e_max + 1):
        q = p ** e
        Iq = I.bracket_power(q)
        nf = Iq.normal_form(c * z.frobenius(q))
        if not nf.is_zero():
            return ProbeVerdict(consistent=False, q=q, witness=nf)
    return ProbeVerdict(consistent=True, q=p ** e_max)


def jacobian_candidates(ring: Ring) -> list[Polynomial]:
    """Nonzero partial derivatives of a single-relation presentation;
    candidate test elements for hypersurface probes.  An empty list
    flags the degenerate case of all partials vanishing."""
    if len(ring.relations) != 1:
        raise ValueError("jacobian candidates need exactly one relation")
    f = ring.relations[0]
    return [g for g in (f.partial(i) for i in range(ring.nvars)) if not g.is_zero()]
