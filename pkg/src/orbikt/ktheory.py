"""Equivariant K-theory of a finite group acting on a finite complex.

Rational ranks come from the localization decomposition over conjugacy
classes (sum of rational K-ranks of the centralizer quotients of fixed sets).
Three Euler-characteristic routes cross-check each other, an exact counting
identity is verified when all nontrivial fixed sets are finite, and in the
isolated-singular-orbit regime the integral K-groups are assembled from the
six-term sequence with the boundary map provably zero whenever the odd
K-group of the quotient is torsion-free.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import (
    GSimplicialComplex,
    centralizer_fixed_action,
    fixed_subcomplex,
    orbits_and_stabilizers,
    quotient_complex,
)
from .errors import (
    InternalInconsistency,
    NonIntegralResult,
    NotApplicable,
    NotIsolated,
)
from .groups import commuting_pairs, conjugacy_data
from .homology import KRanks, euler_characteristic, homology_integral, k_ranks


class BCDecomposition:
    """Per-conjugacy-class rational K-ranks of centralizer quotients of
    fixed sets, with their componentwise totals."""

    def __init__(self, per_class, totals):
        self.per_class = tuple(per_class)  # (class idx, rep, quotient, KRanks)
        self.totals = totals

    def ranks_by_class(self):
        return [(rep, kr.even, kr.odd) for _, rep, _, kr in self.per_class]


def bc_decomposition(gx: GSimplicialComplex,
                     allow_subdivide=True) -> BCDecomposition:
    gx.require_admissible()
    cd = conjugacy_data(gx.group)
    per_class = []
    totals = KRanks(0, 0)
    for idx, rep in enumerate(cd.reps):
        cfa = centralizer_fixed_action(gx, rep)
        quotient = quotient_complex(cfa.gcomplex,
                                    allow_subdivide=allow_subdivide)
        kr = k_ranks(quotient.complex)
        per_class.append((idx, rep, quotient, kr))
        totals = totals + kr
    return BCDecomposition(per_class, totals)


def _singular_orbits(gx: GSimplicialComplex):
    """Orbits with nontrivial stabilizer; NotIsolated unless all are vertices."""
    od = orbits_and_stabilizers(gx)
    singular = []
    for i in range(len(od)):
        if od.stabilizer(i).order > 1:
            if len(od.rep(i)) > 1:
                raise NotIsolated(
                    "simplex orbit %r of dimension %d has stabilizer of "
                    "order %d" % (od.rep(i), len(od.rep(i)) - 1,
                                  od.stabilizer(i).order))
            singular.append(i)
    return od, singular


def _rep_star_count(stabilizer):
    """Number of nontrivial irreps = conjugacy class count minus one."""
    return len(conjugacy_data(stabilizer.group).classes) - 1


def equivariant_euler(gx: GSimplicialComplex, method="bc",
                      allow_subdivide=True) -> int:
    gx.require_admissible()
    if method == "bc":
        totals = bc_decomposition(gx, allow_subdivide=allow_subdivide).totals
        return totals.even - totals.odd
    if method == "commuting_pairs":
        order = gx.group.order
        total = 0
        for g, h in commuting_pairs(gx.group):
            fixed = fixed_subcomplex(gx, [g, h])
            total += euler_characteristic(fixed.complex)
        if total % order:
            raise NonIntegralResult(
                "commuting-pair sum %d is not divisible by |G| = %d"
                % (total, order))
        return total // order
    if method == "isolated":
        od, singular = _singular_orbits(gx)
        quotient = quotient_complex(gx, allow_subdivide=allow_subdivide)
        return (euler_characteristic(quotient.complex)
                + sum(_rep_star_count(od.stabilizer(i)) for i in singular))
    raise ValueError("unknown method %r" % (method,))


class EulerQuotientCheck:
    def __init__(self, lhs, rhs, integral):
        self.lhs = lhs
        self.rhs = rhs
        self.integral = integral

    @property
    def equal(self):
        return self.integral and self.lhs == self.rhs


def euler_quotient_check(gx: GSimplicialComplex,
                         allow_subdivide=True) -> EulerQuotientCheck:
    """Compare the quotient's Euler characteristic with the fixed-set average."""
    gx.require_admissible()
    quotient = quotient_complex(gx, allow_subdivide=allow_subdivide)
    lhs = euler_characteristic(quotient.complex)
    cd = conjugacy_data(gx.group)
    total = 0
    for cls, rep in zip(cd.classes, cd.reps):
        fixed = fixed_subcomplex(gx, [rep])
        total += len(cls) * euler_characteristic(fixed.complex)
    rhs = Fraction(total, gx.group.order)
    integral = rhs.denominator == 1
    return EulerQuotientCheck(lhs, int(rhs) if integral else rhs, integral)


class CountIdentity:
    def __init__(self, lhs, rhs):
        self.lhs = lhs
        self.rhs = rhs

    @property
    def equal(self):
        return self.lhs == self.rhs


def bc_vs_count_identity(gx: GSimplicialComplex,
                         allow_subdivide=True) -> CountIdentity:
    """Sum of point counts of nontrivial-class quotients against the total
    number of nontrivial stabilizer irreps over singular orbits.

    Requires every fixed set of a nontrivial element to be 0-dimensional.
    """
    gx.require_admissible()
    cd = conjugacy_data(gx.group)
    identity_class = cd.class_of[gx.group.identity]
    lhs = 0
    for idx, rep in enumerate(cd.reps):
        if idx == identity_class:
            continue
        fixed = fixed_subcomplex(gx, [rep])
        if fixed.complex.dimension > 0:
            raise NotApplicable(
                "fixed set of element %d is %d-dimensional"
                % (rep, fixed.complex.dimension))
        cfa = centralizer_fixed_action(gx, rep)
        quotient = quotient_complex(cfa.gcomplex,
                                    allow_subdivide=allow_subdivide)
        lhs += quotient.complex.vertex_count
    od, singular = _singular_orbits(gx)
    rhs = sum(_rep_star_count(od.stabilizer(i)) for i in singular)
    return CountIdentity(lhs, rhs)


class InvariantsCheck:
    def __init__(self, rows):
        self.rows = tuple(rows)  # (degree, invariant dim, quotient Betti)

    @property
    def all_equal(self):
        return all(a == b for _, a, b in self.rows)


def invariants_check(gx: GSimplicialComplex) -> InvariantsCheck:
    """Invariant cohomology dimensions against quotient Betti numbers."""
    from .homology import invariant_cohomology_dims

    dims = invariant_cohomology_dims(gx)
    quotient = quotient_complex(gx)
    betti = homology_integral(quotient.complex).betti
    top = max(len(dims), len(betti))
    rows = []
    for k in range(top):
        a = dims[k] if k < len(dims) else 0
        b = betti[k] if k < len(betti) else 0
        rows.append((k, a, b))
    return InvariantsCheck(rows)


class IsolatedKResult:
    """Integral K-theory in the isolated-singular-orbit regime.

    k0/k1 are (rank, torsion tuple) when the quotient has dimension at most
    two, rank-only (torsion None) otherwise.  boundary_status records whether
    the connecting map of the six-term sequence is provably zero or merely
    has torsion image bounded per orbit by the stabilizer order.
    """

    def __init__(self, singular_orbits, quotient_k0, quotient_k1,
                 k0, k1, boundary_status, torsion_bounds, dimension_capped):
        self.singular_orbits = tuple(singular_orbits)
        self.quotient_k0 = quotient_k0
        self.quotient_k1 = quotient_k1
        self.k0 = k0
        self.k1 = k1
        self.boundary_status = boundary_status
        self.torsion_bounds = tuple(torsion_bounds)
        self.dimension_capped = dimension_capped


def isolated_k_theory(gx: GSimplicialComplex,
                      allow_subdivide=True) -> IsolatedKResult:
    gx.require_admissible()
    od, singular = _singular_orbits(gx)
    singular_records = [
        (i, od.stabilizer(i), _rep_star_count(od.stabilizer(i)))
        for i in singular
    ]
    extra_rank = sum(r for _, _, r in singular_records)
    quotient = quotient_complex(gx, allow_subdivide=allow_subdivide)
    hom = homology_integral(quotient.complex)
    betti = hom.betti
    even = sum(b for k, b in enumerate(betti) if k % 2 == 0)
    odd = sum(b for k, b in enumerate(betti) if k % 2 == 1)
    dim = quotient.complex.dimension
    torsion_bounds = [(i, stab.order) for i, stab, _ in singular_records]
    if dim <= 2:
        # K0 of the quotient is H0 + H2; its torsion is the torsion of H1
        # (universal coefficients); K1 = H1 modulo torsion contributions of
        # H0, which vanish, so K1 is torsion-free here.
        h1_torsion = hom.torsion[1] if len(hom.torsion) > 1 else ()
        quotient_k0 = (even, tuple(h1_torsion))
        quotient_k1 = (odd, ())
        k0 = (even + extra_rank, tuple(h1_torsion))
        k1 = (odd, ())
        boundary_status = "provably-zero"
        capped = False
    else:
        quotient_k0 = (even, None)
        quotient_k1 = (odd, None)
        k0 = (even + extra_rank, None)
        k1 = (odd, None)
        boundary_status = "torsion-bounded"
        capped = True
    return IsolatedKResult(singular_records, quotient_k0, quotient_k1,
                           k0, k1, boundary_status, torsion_bounds, capped)


def bc_cross_check(gx: GSimplicialComplex, result: IsolatedKResult):
    """Assert the localization totals match the isolated-regime ranks."""
    totals = bc_decomposition(gx).totals
    if (totals.even, totals.odd) != (result.k0[0], result.k1[0]):
        raise InternalInconsistency(
            "localization totals (%d, %d) disagree with isolated ranks "
            "(%d, %d)" % (totals.even, totals.odd,
                          result.k0[0], result.k1[0]))
    return totals
