"""Executable checkers, one per numbered claim about lengths and
Hilbert-Kunz multiplicities of ideal products.

Every checker computes both sides of its (in)equality through disjoint
call graphs (ideal staircases vs. syzygy module staircases vs. volume
formulas) and returns a structured VerifyReport.  Limit statements on
non-regular presentations are checked as exact per-q surrogates and the
report carries an explicit caveat; nothing is ever compared with a
tolerance."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .hk import jacobian_candidates, star_spread, tc_probe
from .ideals import (Ideal, MinimalGeneratorsError, TrialSpec,
                     is_parameter_ideal, krull_dim, maximal_ideal,
                     random_ideals)
from .koszul import kernel_length, len_identity_sides
from .rings import Ring

CHECK_NAMES = (
    "len-identity", "prop-ineq", "cor-power", "eqconds", "freeness",
    "square", "eq7", "hk-product", "cor-power-hk", "eqthentc",
    "param-lower", "square-hk", "prop42", "huneke-yao",
)


def _ser(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return {k: _ser(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_ser(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


@dataclass
class VerifyReport:
    check: str
    fixture: str
    lhs: object
    rhs: object
    relation: str  # "=", "<=", ">="
    holds: bool
    q: int | None = None
    caveat: str | None = None
    data: dict = field(default_factory=dict)

    def to_json_line(self) -> str:
        obj = {
            "schema": 1,
            "checker": self.check,
            "fixture": self.fixture,
            "lhs": _ser(self.lhs),
            "rhs": _ser(self.rhs),
            "relation": self.relation,
            "holds": self.holds,
            "q": self.q,
            "caveat": self.caveat,
            "data": _ser(self.data),
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    def csv_row(self) -> list:
        return [self.check, self.fixture, _ser(self.lhs), _ser(self.rhs),
                self.relation, self.holds, self.q if self.q is not None else ""]


CSV_HEADER = ["checker", "fixture", "lhs", "rhs", "relation", "holds", "q"]


def _fixture(*ideals, extra=""):
    desc = "; ".join(f"({i})" for i in ideals)
    return desc + (f" {extra}" if extra else "")


# --- length identities (general case) ---------------------------------------

def verify_len_identity(I: Ideal, J: Ideal, q: int = 1) -> VerifyReport:
    """l*lambda(R/I^[q]) + lambda(R/J^[q]) = lambda(K) + lambda(R/(IJ)^[q]).

    Exact for any generating sequence of J, minimal or not; the l on the
    left is the length of the sequence actually used."""
    a = J.minimal_generators(strict=False)
    sides = len_identity_sides(I, a, q)
    return VerifyReport(
        check="len-identity", fixture=_fixture(I, J), q=q,
        lhs=sides.lhs, rhs=sides.rhs, relation="=",
        holds=sides.holds(), data=dict(sides.parts, ell=sides.ell),
    )


def verify_prop_ineq(I: Ideal, J: Ideal) -> VerifyReport:
    """lambda(R/IJ) <= mu(J)*lambda(R/I) + lambda(R/J); principal J gets
    the regular-element branch lambda(M/IM) <= lambda(R/I) with the
    annihilator criterion reported."""
    a = J.minimal_generators(strict=False)
    lam_I = I.colength_strict()
    if len(a) == 1:
        # principal J needs no colength of its own: the bound reduces to
        # lambda(M/IM) <= lambda(R/I) for the rank-1 module M = (f)
        f = a[0]
        fI = Ideal(I.ring, [f * g for g in I.gens])
        lam_mim = fI.colon(f).colength_strict()  # lambda((f)/(f)I)
        ann = Ideal(I.ring, []).colon(f)  # (0 : f)
        ann_in_I = all(I.contains(g) for g in ann.gens)
        holds = lam_mim <= lam_I and ((lam_mim == lam_I) == ann_in_I)
        return VerifyReport(
            check="prop-ineq", fixture=_fixture(I, J, extra="[principal]"),
            lhs=lam_mim, rhs=lam_I, relation="<=", holds=holds,
            data={"mu": 1, "annihilator_in_I": ann_in_I},
        )
    mu = J.min_gens()
    lam_J = J.colength_strict()
    lam_IJ = (I * J).colength_strict()
    rhs = mu * lam_I + lam_J
    return VerifyReport(
        check="prop-ineq", fixture=_fixture(I, J),
        lhs=lam_IJ, rhs=rhs, relation="<=", holds=lam_IJ <= rhs,
        data={"mu": mu, "lambda_I": lam_I, "lambda_J": lam_J},
    )


def verify_cor_power(I: Ideal, n: int) -> VerifyReport:
    """lambda(R/I^n) <= (1 + l + ... + l^(n-1)) * lambda(R/I), l = mu(I)."""
    if n < 1:
        raise ValueError("power must be at least 1")
    ell = I.min_gens()
    coeff = sum(ell ** k for k in range(n))
    lam_I = I.colength_strict()
    lam_In = I.power(n).colength_strict()
    rhs = coeff * lam_I
    return VerifyReport(
        check="cor-power", fixture=_fixture(I, extra=f"n={n}"),
        lhs=lam_In, rhs=rhs, relation="<=", holds=lam_In <= rhs,
        data={"mu": ell, "n": n},
    )


def verify_eqconds(I: Ideal, J: Ideal) -> VerifyReport:
    """Equality in the product bound forces J in I; the converse when J
    is generated by a regular sequence (parameter surrogate)."""
    mu = J.min_gens()
    if mu < 2:
        raise ValueError("theorem needs a non-principal J")
    lam_IJ = (I * J).colength_strict()
    bound = mu * I.colength_strict() + J.colength_strict()
    equality = lam_IJ == bound
    containment = I.contains_ideal(J)
    parameter = is_parameter_ideal(J)
    forward_ok = (not equality) or containment
    converse_ok = (not (parameter and containment)) or equality
    return VerifyReport(
        check="eqconds", fixture=_fixture(I, J),
        lhs=lam_IJ, rhs=bound, relation="=",
        holds=forward_ok and converse_ok,
        data={"equality": equality, "containment": containment,
              "parameter": parameter, "mu": mu},
    )


def verify_freeness(J: Ideal, I: Ideal) -> VerifyReport:
    """lambda(J/IJ) = mu(J)*lambda(R/I) exactly when the presentation
    kernel vanishes (J/IJ free over R/I); the two detections must agree.
    Needs a genuinely minimal sequence: at a non-minimal presentation the
    kernel is nonzero even for free quotients."""
    a = J.minimal_generators()
    mu = len(a)
    lam_JIJ = (I * J).colength_strict() - J.colength_strict()
    rhs = mu * I.colength_strict()
    free_by_length = lam_JIJ == rhs
    kernel = kernel_length(a, I, 1)
    return VerifyReport(
        check="freeness", fixture=_fixture(J, I),
        lhs=lam_JIJ, rhs=rhs, relation="=",
        holds=free_by_length == (kernel == 0),
        data={"free_by_length": free_by_length, "kernel_length": kernel, "mu": mu},
    )


def verify_cor_square(J: Ideal) -> VerifyReport:
    """lambda(R/J^2) = (d+1)*lambda(R/J) for parameter ideals, d >= 2."""
    d = krull_dim(J.ring)
    if d < 2:
        raise ValueError("needs dimension at least 2")
    if not is_parameter_ideal(J):
        raise ValueError("needs a parameter ideal")
    lam_J2 = J.power(2).colength_strict()
    rhs = (d + 1) * J.colength_strict()
    return VerifyReport(
        check="square", fixture=_fixture(J),
        lhs=lam_J2, rhs=rhs, relation="=", holds=lam_J2 == rhs,
        data={"d": d},
    )


# --- per-q and Hilbert-Kunz statements ---------------------------------------

def verify_eq7_per_q(I: Ideal, J: Ideal, e_max: int) -> VerifyReport:
    """The length identity at every q = p^0 ... p^e_max (the exact form
    behind the limiting Hilbert-Kunz identity)."""
    a = J.minimal_generators(strict=False)
    per_q = {}
    all_hold = True
    p = I.ring.p
    for e in range(e_max + 1):
        q = p ** e
        sides = len_identity_sides(I, a, q)
        per_q[str(q)] = {"lhs": sides.lhs, "rhs_kernel": sides.rhs_kernel,
                         "rhs_product": sides.rhs_product, "holds": sides.holds()}
        all_hold = all_hold and sides.holds()
    return VerifyReport(
        check="eq7", fixture=_fixture(I, J), q=p ** e_max,
        lhs="per-q", rhs="per-q", relation="=", holds=all_hold,
        data={"per_q": per_q, "ell": len(a)},
    )


def _normalized(I: Ideal, q: int, d: int) -> Fraction:
    return Fraction(I.bracket_power(q).colength_strict(), q ** d)


def verify_hk_product_bound(I: Ideal, J: Ideal, mode, e_max: int = 1) -> VerifyReport:
    """e_HK(IJ) <= l*(J)*e_HK(I) + e_HK(J); exact via Kunz when the ring
    is regular, a flagged finite-q surrogate otherwise."""
    ls = star_spread(J, mode)
    ring = I.ring
    if ring.is_regular:
        lhs = (I * J).colength_strict()
        rhs = ls * I.colength_strict() + J.colength_strict()
        return VerifyReport(
            check="hk-product", fixture=_fixture(I, J),
            lhs=lhs, rhs=rhs, relation="<=", holds=lhs <= rhs,
            data={"star_spread": ls, "exact": True},
        )
    d = krull_dim(ring)
    q = ring.p ** e_max
    lhs = _normalized(I * J, q, d)
    rhs = ls * _normalized(I, q, d) + _normalized(J, q, d)
    return VerifyReport(
        check="hk-product", fixture=_fixture(I, J), q=q,
        lhs=lhs, rhs=rhs, relation="<=", holds=lhs <= rhs,
        caveat=f"finite-q surrogate at q={q}",
        data={"star_spread": ls, "exact": False},
    )


def verify_cor_power_hk(I: Ideal, n: int, mode, e_max: int = 1) -> VerifyReport:
    """e_HK(I^n) <= (1 + l + ... + l^(n-1)) * e_HK(I) with l = l*(I)."""
    if n < 1:
        raise ValueError("power must be at least 1")
    ls = star_spread(I, mode)
    coeff = sum(ls ** k for k in range(n))
    ring = I.ring
    if ring.is_regular:
        lhs = I.power(n).colength_strict()
        rhs = coeff * I.colength_strict()
        return VerifyReport(
            check="cor-power-hk", fixture=_fixture(I, extra=f"n={n}"),
            lhs=lhs, rhs=rhs, relation="<=", holds=lhs <= rhs,
            data={"star_spread": ls, "n": n, "exact": True},
        )
    d = krull_dim(ring)
    q = ring.p ** e_max
    lhs = _normalized(I.power(n), q, d)
    rhs = coeff * _normalized(I, q, d)
    return VerifyReport(
        check="cor-power-hk", fixture=_fixture(I, extra=f"n={n}"), q=q,
        lhs=lhs, rhs=rhs, relation="<=", holds=lhs <= rhs,
        caveat=f"finite-q surrogate at q={q}",
        data={"star_spread": ls, "n": n, "exact": False},
    )


def verify_eqthentc(I: Ideal, J: Ideal, mode, e_max: int = 1) -> VerifyReport:
    """Equality in the product bound forces J inside the tight closure
    of I: exact containment check in regular rings (I* = I); in other
    rings a zero finite-q gap triggers probe runs, reported unasserted."""
    ls = star_spread(J, mode)
    if ls < 2:
        raise ValueError("theorem needs star spread at least 2")
    ring = I.ring
    if ring.is_regular:
        lhs = (I * J).colength_strict()
        rhs = ls * I.colength_strict() + J.colength_strict()
        equality = lhs == rhs
        containment = I.contains_ideal(J) if equality else None
        holds = (not equality) or bool(containment)
        return VerifyReport(
            check="eqthentc", fixture=_fixture(I, J),
            lhs=lhs, rhs=rhs, relation="=", holds=holds,
            data={"equality": equality, "containment": containment,
                  "star_spread": ls, "exact": True},
        )
    d = krull_dim(ring)
    q = ring.p ** e_max
    lhs = _normalized(I * J, q, d)
    rhs = ls * _normalized(I, q, d) + _normalized(J, q, d)
    gap = rhs - lhs
    verdicts = {}
    if gap == 0 and len(ring.relations) == 1:
        for ci, c in enumerate(jacobian_candidates(ring)):
            for gi, g in enumerate(J.gens):
                v = tc_probe(g, I, c, e_max)
                verdicts[f"c{ci}_gen{gi}"] = str(v)
    return VerifyReport(
        check="eqthentc", fixture=_fixture(I, J), q=q,
        lhs=lhs, rhs=rhs, relation="=", holds=True,
        caveat=f"finite-q gap report at q={q}; membership in I* is not decided",
        data={"gap": gap, "probe_verdicts": verdicts, "star_spread": ls,
              "exact": False},
    )


def verify_param_lower_bound(I: Ideal, J: Ideal, e_max: int = 1) -> VerifyReport:
    """e_HK(IJ) >= d*e_HK(I+J) + e_HK(J) for parameter J, with the
    equality branch d*e_HK(I) + e_HK(J) when J is contained in I."""
    ring = I.ring
    d = krull_dim(ring)
    if d < 2:
        raise ValueError("needs dimension at least 2")
    if not is_parameter_ideal(J):
        raise ValueError("needs a parameter ideal J")
    containment = I.contains_ideal(J)
    if ring.is_regular:
        lam_IJ = (I * J).colength_strict()
        rhs = d * (I + J).colength_strict() + J.colength_strict()
        holds = lam_IJ >= rhs
        data = {"d": d, "containment": containment, "exact": True}
        if containment:
            eq_rhs = d * I.colength_strict() + J.colength_strict()
            data["equality_branch_rhs"] = eq_rhs
            holds = holds and lam_IJ == eq_rhs
        return VerifyReport(
            check="param-lower", fixture=_fixture(I, J),
            lhs=lam_IJ, rhs=rhs, relation=">=", holds=holds, data=data,
        )
    q = ring.p ** e_max
    lhs = _normalized(I * J, q, d)
    rhs = d * _normalized(I + J, q, d) + _normalized(J, q, d)
    data = {"d": d, "containment": containment, "exact": False}
    if containment:
        data["equality_branch_gap"] = (d * _normalized(I, q, d)
                                       + _normalized(J, q, d) - lhs)
    return VerifyReport(
        check="param-lower", fixture=_fixture(I, J), q=q,
        lhs=lhs, rhs=rhs, relation=">=", holds=lhs >= rhs,
        caveat=f"finite-q surrogate at q={q}", data=data,
    )


def verify_cor_square_hk(J: Ideal, e_max: int = 1) -> VerifyReport:
    """e_HK(J^2) = (d+1)*e_HK(J) = (d+1)*e(J) for parameter ideals.

    Regular rings reduce to the exact length statement; elsewhere the
    per-q form is checked at every computed q and any gap is reported."""
    ring = J.ring
    d = krull_dim(ring)
    if d < 2:
        raise ValueError("needs dimension at least 2")
    if not is_parameter_ideal(J):
        raise ValueError("needs a parameter ideal")
    lam_J = J.colength_strict()  # = e(J) in the Cohen-Macaulay rings handled
    if ring.is_regular:
        lhs = J.power(2).colength_strict()
        rhs = (d + 1) * lam_J
        return VerifyReport(
            check="square-hk", fixture=_fixture(J),
            lhs=lhs, rhs=rhs, relation="=", holds=lhs == rhs,
            data={"d": d, "e_J": lam_J, "exact": True},
        )
    J2 = J.power(2)
    per_q = {}
    all_equal = True
    p = ring.p
    for e in range(e_max + 1):
        q = p ** e
        lhs_q = J2.bracket_power(q).colength_strict()
        rhs_q = (d + 1) * J.bracket_power(q).colength_strict()
        per_q[str(q)] = {"lhs": lhs_q, "rhs": rhs_q,
                         "gap_normalized": Fraction(lhs_q - rhs_q, q ** d)}
        all_equal = all_equal and lhs_q == rhs_q
    q = p ** e_max
    return VerifyReport(
        check="square-hk", fixture=_fixture(J), q=q,
        lhs=_normalized(J2, q, d), rhs=Fraction(d + 1) * _normalized(J, q, d),
        relation="=", holds=all_equal,
        caveat=f"exact per-q form checked for q <= {q}",
        data={"d": d, "e_J": lam_J, "per_q": per_q, "exact": False},
    )


def verify_prop42(I: Ideal, J: Ideal, e_max: int) -> VerifyReport:
    """Once some bracket power of the parameter ideal J lands inside I,
    lambda(R/I*J^[q]) = d*lambda(R/I) + lambda(R/J^[q]) for all larger q
    (exact in regular rings via Kunz)."""
    ring = I.ring
    if not is_parameter_ideal(J):
        raise ValueError("needs a parameter ideal J")
    d = krull_dim(ring)
    p = ring.p
    q0 = None
    for e in range(e_max + 1):
        if I.contains_ideal(J.bracket_power(p ** e)):
            q0 = p ** e
            break
    if q0 is None:
        return VerifyReport(
            check="prop42", fixture=_fixture(I, J), q=p ** e_max,
            lhs="n/a", rhs="n/a", relation="=", holds=True,
            caveat=f"inconclusive: no q0 <= {p ** e_max} with J^[q0] in I",
            data={"d": d},
        )
    lam_I = I.colength_strict()
    per_q = {}
    all_equal = True
    for e in range(e_max + 1):
        q = p ** e
        if q < q0:
            continue
        Jq = J.bracket_power(q)
        lhs_q = (I * Jq).colength_strict()
        rhs_q = d * lam_I + Jq.colength_strict()
        per_q[str(q)] = {"lhs": lhs_q, "rhs": rhs_q}
        all_equal = all_equal and lhs_q == rhs_q
    caveat = None if ring.is_regular else "finite-q report on a non-regular presentation"
    holds = all_equal if ring.is_regular else True
    return VerifyReport(
        check="prop42", fixture=_fixture(I, J), q=p ** e_max,
        lhs="per-q", rhs="per-q", relation="=", holds=holds, caveat=caveat,
        data={"d": d, "q0": q0, "per_q": per_q, "all_equal": all_equal},
    )


def verify_huneke_yao_per_q(I: Ideal, e_max: int) -> VerifyReport:
    """lambda(R/I^[q]) <= lambda(R/m^[q]) * lambda(R/I) for every q."""
    ring = I.ring
    m = maximal_ideal(ring)
    lam_I = I.colength_strict()
    p = ring.p
    per_q = {}
    all_hold = True
    for e in range(1, e_max + 1):
        q = p ** e
        lhs_q = I.bracket_power(q).colength_strict()
        rhs_q = m.bracket_power(q).colength_strict() * lam_I
        per_q[str(q)] = {"lhs": lhs_q, "rhs": rhs_q}
        all_hold = all_hold and lhs_q <= rhs_q
    data = {"per_q": per_q, "lambda_I": lam_I}
    if ring.is_regular:
        # Kunz: e_HK(R) = 1, so the limit statement is lam_I <= lam_I
        data["limit_equality"] = True
    return VerifyReport(
        check="huneke-yao", fixture=_fixture(I), q=p ** e_max,
        lhs="per-q", rhs="per-q", relation="<=", holds=all_hold, data=data,
    )


# --- randomized trial driver --------------------------------------------------

def _trial_pair(ring: Ring, rng: random.Random, bound: int, force_param_sub: bool):
    """One (I, J) fixture; every so often J is a parameter ideal with
    J contained in I, to exercise containment/equality branches."""
    families = ["monomial", "binomial"] + (["dense"] if ring.is_regular else [])
    if force_param_sub:
        J = random_ideals(TrialSpec(rng.randrange(2 ** 32), "parameter-powers",
                                    bound, 1), ring)[0]
        extra = random_ideals(TrialSpec(rng.randrange(2 ** 32), "monomial",
                                        bound, 1), ring)[0]
        I = J + extra
        return I, J
    fam_i = families[rng.randrange(len(families))]
    fam_j = families[rng.randrange(len(families))]
    I = random_ideals(TrialSpec(rng.randrange(2 ** 32), fam_i, bound, 1), ring)[0]
    J = random_ideals(TrialSpec(rng.randrange(2 ** 32), fam_j, bound, 1), ring)[0]
    return I, J


def run_trials(check: str, ring: Ring, trials: int, seed: int,
               e_max: int = 1, n: int = 2, mode=None) -> list[VerifyReport]:
    """Seeded randomized suite for one checker; deterministic output."""
    if check not in CHECK_NAMES:
        raise ValueError(f"unknown check {check!r}")
    rng = random.Random(seed)
    bound = 3 if ring.nvars <= 2 else 2
    if mode is None:
        mode = "regular" if ring.is_regular else "parameter"
    reports: list[VerifyReport] = []
    for t in range(trials):
        force_sub = t % 4 == 3
        if check in ("square", "square-hk"):
            J = random_ideals(TrialSpec(rng.randrange(2 ** 32), "parameter-powers",
                                        4, 1), ring)[0]
            if check == "square":
                reports.append(verify_cor_square(J))
            else:
                reports.append(verify_cor_square_hk(J, e_max))
            continue
        if check in ("cor-power", "cor-power-hk", "huneke-yao"):
            I = random_ideals(TrialSpec(rng.randrange(2 ** 32), "monomial" if t % 2
                                        else "binomial", bound, 1), ring)[0]
            if check == "cor-power":
                reports.append(verify_cor_power(I, n))
            elif check == "cor-power-hk":
                reports.append(verify_cor_power_hk(I, n, mode, e_max))
            else:
                reports.append(verify_huneke_yao_per_q(I, e_max))
            continue
        needs_param_j = check in ("hk-product", "eqthentc", "param-lower", "prop42")
        if needs_param_j and not ring.is_regular:
            J = random_ideals(TrialSpec(rng.randrange(2 ** 32), "parameter-powers",
                                        bound, 1), ring)[0]
            I = (J + random_ideals(TrialSpec(rng.randrange(2 ** 32), "monomial",
                                             bound, 1), ring)[0]) if force_sub else \
                random_ideals(TrialSpec(rng.randrange(2 ** 32), "monomial",
                                        bound, 1), ring)[0]
        elif check in ("param-lower", "prop42"):
            J = random_ideals(TrialSpec(rng.randrange(2 ** 32), "parameter-powers",
                                        bound, 1), ring)[0]
            I = (J + random_ideals(TrialSpec(rng.randrange(2 ** 32), "monomial",
                                             bound, 1), ring)[0]) if force_sub else \
                random_ideals(TrialSpec(rng.randrange(2 ** 32), "monomial",
                                        bound, 1), ring)[0]
        else:
            I, J = _trial_pair(ring, rng, bound, force_sub)
        if check == "len-identity":
            for e in range(e_max + 1):
                reports.append(verify_len_identity(I, J, ring.p ** e))
        elif check == "prop-ineq":
            reports.append(verify_prop_ineq(I, J))
        elif check == "eqconds":
            if J.min_gens() >= 2:
                reports.append(verify_eqconds(I, J))
        elif check == "freeness":
            try:
                reports.append(verify_freeness(J, I))
            except MinimalGeneratorsError:
                pass  # fixture without a trimmable minimal sequence
        elif check == "eq7":
            reports.append(verify_eq7_per_q(I, J, e_max))
        elif check == "hk-product":
            reports.append(verify_hk_product_bound(I, J, mode, e_max))
        elif check == "eqthentc":
            if star_spread(J, mode) >= 2:
                reports.append(verify_eqthentc(I, J, mode, e_max))
        elif check == "param-lower":
            reports.append(verify_param_lower_bound(I, J, e_max))
        elif check == "prop42":
            reports.append(verify_prop42(I, J, e_max))
    return reports
