"""Koszul-complex data for a generating sequence and the presentation
kernel at every Frobenius level.

For a sequence a = a_1,...,a_l generating J and an m-primary ideal I,
the kernel K_{a,I} sits in the exact length bookkeeping

    l * lambda(R/I) + lambda(R/J) = lambda(K_{a,I}) + lambda(R/IJ)

whose two sides are computed along disjoint code paths: the left and the
product term by ideal staircases, the kernel term by syzygies plus a
module staircase.  The identity itself is asserted by the verifiers, not
here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groebner
from .ideals import Ideal, InfiniteColengthError
from .rings import Polynomial, is_p_power


def koszul_vector(a: list[Polynomial], i: int, j: int, q: int = 1) -> list[Polynomial]:
    """The trivial syzygy -a_j^q e_i + a_i^q e_j of the sequence a^q.

    Indices are 0-based with i < j < len(a).
    """
    ell = len(a)
    if not (0 <= i < j < ell):
        raise IndexError(f"need 0 <= i < j < {ell}")
    ring = a[0].ring
    if not is_p_power(q, ring.p):
        raise ValueError(f"{q} is not a power of the characteristic")
    vec = [ring.zero()] * ell
    vec[i] = -(a[j].frobenius(q))
    vec[j] = a[i].frobenius(q)
    return vec


def koszul_cells(a: list[Polynomial], q: int = 1) -> list[list[Polynomial]]:
    """All v_ij(a^q), the generators of the image of the second Koszul
    differential; a proper submodule of the syzygies unless a is a
    regular sequence.  Exposed for diagnostics only."""
    ell = len(a)
    return [koszul_vector(a, i, j, q) for i in range(ell) for j in range(i + 1, ell)]


def kernel_length(a: list[Polynomial], I: Ideal, q: int = 1) -> int:
    """lambda(K_{a^q, I^[q]}).

    Computed as l * lambda(R/I^[q]) minus lambda(R^l / (K_{a^q} + I^[q] R^l)),
    with the syzygy module K_{a^q} recomputed fresh at every q (Frobenius
    does not transport syzygies outside regular rings).
    """
    if not a:
        raise ValueError("empty generating sequence")
    ring = I.ring
    ell = len(a)
    aq = [f.frobenius(q) for f in a]
    Iq = I.bracket_power(q)
    lam_Iq = Iq.colength()
    if lam_Iq is None:
        raise InfiniteColengthError("I must be m-primary")
    syz = groebner.syzygies(aq, ring)
    vectors = [groebner.vector_from_polys(v) for v in syz]
    for g in Iq.gens:
        for pos in range(ell):
            vectors.append({(pos, m): c for m, c in g.terms.items()})
    quotient = groebner.module_colength(vectors, ell, ring)
    if quotient is None:
        raise InfiniteColengthError("K_a + I R^l has infinite module colength")
    return ell * lam_Iq - quotient


@dataclass
class LenIdentitySides:
    """Both sides of the length identity at Frobenius level q.

    lhs = l*lambda(R/I^[q]) + lambda(R/J^[q]);
    rhs_kernel = lambda(K_{a^q, I^[q]}); rhs_product = lambda(R/(IJ)^[q]).
    The equality is asserted by the caller.
    """

    q: int
    ell: int
    lhs: int
    rhs_kernel: int
    rhs_product: int
    parts: dict = field(default_factory=dict)

    @property
    def rhs(self) -> int:
        return self.rhs_kernel + self.rhs_product

    def holds(self) -> bool:
        return self.lhs == self.rhs


def len_identity_sides(I: Ideal, a: list[Polynomial], q: int = 1) -> LenIdentitySides:
    """Compute all three lengths of the identity along independent paths."""
    ring = I.ring
    ell = len(a)
    J = Ideal(ring, a)
    lam_I = I.bracket_power(q).colength_strict()
    lam_J = J.bracket_power(q).colength_strict()
    lam_K = kernel_length(a, I, q)
    lam_IJ = (I * J).bracket_power(q).colength_strict()
    return LenIdentitySides(
        q=q, ell=ell,
        lhs=ell * lam_I + lam_J,
        rhs_kernel=lam_K,
        rhs_product=lam_IJ,
        parts={"lambda_Iq": lam_I, "lambda_Jq": lam_J,
               "lambda_K": lam_K, "lambda_IJq": lam_IJ},
    )
