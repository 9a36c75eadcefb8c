"""Structure of the crossed product of C(X) by a finite group G.

Everything is reported through finite combinatorial invariants: Peter-Weyl
block decompositions of the fibers over the orbit space, inclusion
multiplicities between fibers along face maps, the primitive-ideal node set
with its specialization preorder, the distinguished open set of
trivial-isotropy-representation nodes, and validation of ideal filtrations.
"""

from __future__ import annotations

from .characters import Character, conjugate_irrep, multiplicity, subgroup_table
from .complexes import GSimplicialComplex, isotropy_strata, orbits_and_stabilizers
from .errors import (
    InternalInconsistency,
    NonConstantStabilizer,
    NotOpen,
    NotSubgroup,
)
from .groups import FiniteGroup, Subgroup


class FiberDecomposition:
    """Block decomposition of the compacts of l2(G) fixed under K.

    One block per irrep sigma of K, of dimension [G:K]*d_sigma, occurring with
    multiplicity d_sigma inside the |G|-dimensional regular representation.
    """

    def __init__(self, group, stabilizer, blocks, table):
        self.group = group
        self.stabilizer = stabilizer
        self.blocks = tuple(blocks)  # records (irrep_id, block_dim, multiplicity)
        self.table = table
        total = sum(dim * mult for _, dim, mult in blocks)
        if total != group.order:
            raise InternalInconsistency(
                "fiber blocks sum to %d, expected |G| = %d"
                % (total, group.order))
        if len(blocks) != len(table.irreps):
            raise InternalInconsistency("block count != irrep count")


def fiber_decomposition(group: FiniteGroup, sub: Subgroup) -> FiberDecomposition:
    if sub.parent is not group:
        raise NotSubgroup("stabilizer is not a subgroup of the given group")
    table = subgroup_table(sub)
    index = group.order // sub.order
    blocks = [(rid, index * d, d) for rid, d, _ in table.irreps]
    return FiberDecomposition(group, sub, blocks, table)


class InclusionMultiplicityMatrix:
    """Multiplicities m[sigma][tau] of sigma in tau restricted from K to L."""

    def __init__(self, ambient, sub, entries, row_table, col_table):
        self.ambient = ambient  # K
        self.sub = sub          # L, contained in K
        self.entries = tuple(tuple(row) for row in entries)
        self.row_table = row_table  # irreps of L
        self.col_table = col_table  # irreps of K

    def row(self, sigma_id):
        return self.entries[sigma_id]


def inclusion_multiplicities(group: FiniteGroup, sub: Subgroup,
                             ambient: Subgroup) -> InclusionMultiplicityMatrix:
    """m[sigma][tau] over sigma in irreps(L = sub), tau in irreps(K = ambient)."""
    if sub.parent is not group or ambient.parent is not group:
        raise NotSubgroup("both subgroups must live in the given group")
    if not set(sub.elements) <= set(ambient.elements):
        raise NotSubgroup("first subgroup is not contained in the second")
    row_table = subgroup_table(sub)
    col_table = subgroup_table(ambient)
    inner = ambient.sub_from_parent(sub.elements)
    entries = [[0] * len(col_table.irreps) for _ in row_table.irreps]
    for tau_id, tau_degree, _ in col_table.irreps:
        tau = col_table.character(tau_id)
        for sigma_id, _, _ in row_table.irreps:
            sigma = row_table.character(sigma_id)
            entries[sigma_id][tau_id] = multiplicity(tau, sigma, inner)
        total = sum(entries[sigma_id][tau_id] * row_table.degree(sigma_id)
                    for sigma_id, _, _ in row_table.irreps)
        if total != tau_degree:
            raise InternalInconsistency(
                "degree identity fails for column %d: %d != %d"
                % (tau_id, total, tau_degree))
    return InclusionMultiplicityMatrix(ambient, sub, entries,
                                       row_table, col_table)


class PrimNode:
    """A point of the primitive-ideal space: (simplex orbit, stabilizer irrep)."""

    __slots__ = ("orbit_id", "irrep_id")

    def __init__(self, orbit_id, irrep_id):
        self.orbit_id = orbit_id
        self.irrep_id = irrep_id

    def key(self):
        return (self.orbit_id, self.irrep_id)

    def __eq__(self, other):
        return isinstance(other, PrimNode) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "PrimNode(orbit=%d, irrep=%d)" % (self.orbit_id, self.irrep_id)


class PrimPoset:
    """Nodes with the specialization preorder: leq[a][b] iff node a lies in
    the closure of node b."""

    def __init__(self, nodes, leq, stabilizer_orders, irrep_degrees,
                 aggregated=False):
        self.nodes = tuple(nodes)
        self.leq = tuple(tuple(row) for row in leq)
        self.stabilizer_orders = tuple(stabilizer_orders)
        self.irrep_degrees = tuple(irrep_degrees)
        self.aggregated = aggregated
        self._verify_preorder()

    def _verify_preorder(self):
        n = len(self.nodes)
        for a in range(n):
            if not self.leq[a][a]:
                raise InternalInconsistency("specialization not reflexive")
        for b in range(n):
            below_b = [a for a in range(n) if self.leq[a][b]]
            for c in range(n):
                if self.leq[b][c]:
                    for a in below_b:
                        if not self.leq[a][c]:
                            raise InternalInconsistency(
                                "specialization not transitive at "
                                "(%d, %d, %d)" % (a, b, c))

    def __len__(self):
        return len(self.nodes)

    def index_of(self, key):
        if isinstance(key, PrimNode):
            key = key.key()
        else:
            key = tuple(key)
        for i, node in enumerate(self.nodes):
            if node.key() == key:
                return i
        return None

    def closure(self, node_indices):
        out = set()
        for b in node_indices:
            for a in range(len(self.nodes)):
                if self.leq[a][b]:
                    out.add(a)
        return out

    def open_violation(self, node_indices):
        """None if the set is open, else a witness (inside, outside) pair
        with inside in the set, outside not, and inside <= outside."""
        inside = set(node_indices)
        for a in inside:
            for b in range(len(self.nodes)):
                if self.leq[a][b] and b not in inside:
                    return (a, b)
        return None

    def is_open(self, node_indices):
        return self.open_violation(node_indices) is None

    def is_antisymmetric(self):
        n = len(self.nodes)
        return all(not (self.leq[a][b] and self.leq[b][a])
                   for a in range(n) for b in range(n) if a != b)

    def relation_pairs(self):
        n = len(self.nodes)
        return [(a, b) for a in range(n) for b in range(n)
                if a != b and self.leq[a][b]]


def prim_nodes(gx: GSimplicialComplex):
    """One node per (simplex orbit, irrep of its stabilizer)."""
    gx.require_admissible()
    od = orbits_and_stabilizers(gx)
    nodes = []
    for i in range(len(od)):
        table = subgroup_table(od.stabilizer(i))
        for rid, _, _ in table.irreps:
            nodes.append(PrimNode(i, rid))
    return nodes


def _restriction_positive(big_sub, chi: Character, small_sub, psi_id):
    """Whether psi occurs in chi restricted from big_sub to small_sub."""
    inner = big_sub.sub_from_parent(small_sub.elements)
    psi = subgroup_table(small_sub).character(psi_id)
    return multiplicity(chi, psi, inner) > 0


def specialization(gx: GSimplicialComplex) -> PrimPoset:
    """The specialization preorder on prim nodes.

    (s, sigma) lies in the closure of (t, tau) iff some translate m = h.rep_t
    has rep_s as a face and sigma restricted to the stabilizer of m contains
    the transported irrep h.tau.
    """
    gx.require_admissible()
    od = orbits_and_stabilizers(gx)
    nodes = prim_nodes(gx)
    index = {node.key(): i for i, node in enumerate(nodes)}
    n = len(nodes)
    leq = [[False] * n for _ in range(n)]

    # for each orbit pair (s_orb, t_orb): translates of rep_t with rep_s as face
    face_translates = {}
    for t_orb in range(len(od)):
        for member in od.members(t_orb):
            h = od.transporter(t_orb)[member]
            faces = set()
            for mask in range(1, 1 << len(member)):
                faces.add(tuple(v for i, v in enumerate(member)
                                if mask >> i & 1))
            for face in faces:
                s_orb = od.orbit_of[face]
                if od.rep(s_orb) == face:
                    face_translates.setdefault((s_orb, t_orb), []).append(h)

    transported = {}  # (t_orb, h, tau) -> (subgroup, tau' id)
    for (s_orb, t_orb), hs in face_translates.items():
        stab_s = od.stabilizer(s_orb)
        table_s = subgroup_table(stab_s)
        stab_t = od.stabilizer(t_orb)
        table_t = subgroup_table(stab_t)
        for tau_id, _, _ in table_t.irreps:
            targets = []
            for h in hs:
                key = (t_orb, h, tau_id)
                if key not in transported:
                    transported[key] = conjugate_irrep(h, tau_id, stab_t)
                sub_m, tau_m = transported[key]
                if not set(sub_m.elements) <= set(stab_s.elements):
                    raise InternalInconsistency(
                        "face stabilizer does not contain cell stabilizer")
                targets.append((sub_m, tau_m))
            for sigma_id, _, _ in table_s.irreps:
                chi = table_s.character(sigma_id)
                if any(_restriction_positive(stab_s, chi, sub_m, tau_m)
                       for sub_m, tau_m in targets):
                    a = index[(s_orb, sigma_id)]
                    b = index[(t_orb, tau_id)]
                    leq[a][b] = True

    stab_orders = [od.stabilizer(node.orbit_id).order for node in nodes]
    degrees = [subgroup_table(od.stabilizer(node.orbit_id)).degree(node.irrep_id)
               for node in nodes]
    return PrimPoset(nodes, leq, stab_orders, degrees)


def ix_nodes(poset_or_gx):
    """The trivial-irrep node set with its openness certificate.

    These nodes carry the distinguished ideal induced from the orbit space;
    the set must be open in the specialization topology.  Accepts a
    G-simplicial complex (the poset is computed) or a ready poset.
    """
    poset = (specialization(poset_or_gx)
             if isinstance(poset_or_gx, GSimplicialComplex) else poset_or_gx)
    members = [i for i, node in enumerate(poset.nodes) if node.irrep_id == 0]
    violation = poset.open_violation(members)
    if violation is not None:
        raise NotOpen("trivial-irrep node set is not open (internal bug)",
                      witness=violation)
    return members


def aggregate_strata(poset: PrimPoset, gx: GSimplicialComplex) -> PrimPoset:
    """Merge nodes along isotropy strata.

    Requires literal (not just conjugate) equality of stabilizers across each
    stratum's orbit representatives, so that irreps match by table id.
    """
    od = orbits_and_stabilizers(gx)
    strata = isotropy_strata(gx)
    stratum_of = {}
    for st in strata:
        base = od.stabilizer(st.orbit_ids[0])
        for oid in st.orbit_ids:
            stab = od.stabilizer(oid)
            if stab.elements != base.elements:
                raise NonConstantStabilizer(
                    "stratum %d mixes stabilizers %r and %r"
                    % (st.stratum_id, base.elements, stab.elements))
            stratum_of[oid] = st.stratum_id
    new_nodes = []
    new_index = {}
    for st in strata:
        table = subgroup_table(od.stabilizer(st.orbit_ids[0]))
        for rid, _, _ in table.irreps:
            new_index[(st.stratum_id, rid)] = len(new_nodes)
            new_nodes.append(PrimNode(st.stratum_id, rid))
    m = len(new_nodes)
    leq = [[False] * m for _ in range(m)]
    for a, node_a in enumerate(poset.nodes):
        ka = new_index[(stratum_of[node_a.orbit_id], node_a.irrep_id)]
        for b, node_b in enumerate(poset.nodes):
            if poset.leq[a][b]:
                kb = new_index[(stratum_of[node_b.orbit_id], node_b.irrep_id)]
                leq[ka][kb] = True
    stab_orders = [od.stabilizer(strata[n.orbit_id].orbit_ids[0]).order
                   for n in new_nodes]
    degrees = []
    for node in new_nodes:
        table = subgroup_table(od.stabilizer(strata[node.orbit_id].orbit_ids[0]))
        degrees.append(table.degree(node.irrep_id))
    return PrimPoset(new_nodes, leq, stab_orders, degrees, aggregated=True)


class FiltrationReport:
    """Validation and block data for an increasing open filtration."""

    def __init__(self, steps, step_counts, cumulative_counts):
        self.steps = steps  # per step: list of (node key, degree, block_dim)
        self.step_counts = tuple(step_counts)
        self.cumulative_counts = tuple(cumulative_counts)


def filtration_report(poset: PrimPoset, gx: GSimplicialComplex,
                      increments) -> FiltrationReport:
    """Validate a filtration given as per-step node-key increments.

    Each step adds the listed nodes; every cumulative set must be open in the
    specialization topology.  Reports per-step counts and per-node block data
    (irrep degree and fiber block dimension).
    """
    group = gx.group
    seen = set()
    steps = []
    step_counts = []
    cumulative_counts = []
    indices = set()
    for k, keys in enumerate(increments):
        detail = []
        for key in keys:
            idx = poset.index_of(key)
            if idx is None:
                raise NotOpen("step %d names unknown node %r" % (k + 1, key),
                              step=k + 1, witness=key)
            if idx in seen:
                raise NotOpen("step %d repeats node %r" % (k + 1, key),
                              step=k + 1, witness=key)
            seen.add(idx)
            indices.add(idx)
            degree = poset.irrep_degrees[idx]
            block_dim = group.order // poset.stabilizer_orders[idx] * degree
            detail.append((key, degree, block_dim))
        violation = poset.open_violation(indices)
        if violation is not None:
            inside, outside = violation
            raise NotOpen(
                "step %d is not open: node %r lies in the closure of %r"
                % (k + 1, poset.nodes[inside].key(),
                   poset.nodes[outside].key()),
                step=k + 1,
                witness=(poset.nodes[inside].key(),
                         poset.nodes[outside].key()))
        steps.append(detail)
        step_counts.append(len(detail))
        cumulative_counts.append(len(indices))
    return FiltrationReport(steps, step_counts, cumulative_counts)
