"""Finite simplicial complexes with simplicial finite-group actions.

Covers admissibility (setwise-invariant simplices are pointwise fixed),
barycentric subdivision, simplex orbits with stabilizers and transporters,
fixed subcomplexes, quotients under a Bredon-type regularity condition, and
constant-isotropy strata.
"""

from __future__ import annotations

from .errors import BadAction, NotAComplex, NotAdmissible, NotRegular
from .groups import FiniteGroup, Subgroup


class SimplicialComplex:
    """A finite abstract simplicial complex, closed under faces.

    Simplices are strictly increasing vertex tuples; every vertex index below
    vertex_count occurs as a 0-simplex.
    """

    def __init__(self, vertex_count, maximal_simplices):
        if vertex_count < 0:
            raise NotAComplex("negative vertex count")
        closure = set()
        for s in maximal_simplices:
            s = tuple(sorted(set(s)))
            if not s:
                raise NotAComplex("empty simplex")
            if s[0] < 0 or s[-1] >= vertex_count:
                raise NotAComplex("vertex index out of range in %r" % (s,))
            for mask in range(1, 1 << len(s)):
                face = tuple(v for i, v in enumerate(s) if mask >> i & 1)
                closure.add(face)
        for v in range(vertex_count):
            closure.add((v,))
        self.vertex_count = vertex_count
        dim = max((len(s) - 1 for s in closure), default=-1)
        self.simplices = tuple(
            tuple(sorted(s for s in closure if len(s) == k + 1))
            for k in range(dim + 1)
        )
        self._index = {
            s: (k, i)
            for k, level in enumerate(self.simplices)
            for i, s in enumerate(level)
        }

    @property
    def dimension(self):
        return len(self.simplices) - 1

    def f_vector(self):
        return tuple(len(level) for level in self.simplices)

    def simplex_count(self):
        return sum(self.f_vector())

    def __contains__(self, simplex):
        return tuple(simplex) in self._index

    def index_of(self, simplex):
        return self._index[tuple(simplex)]

    def all_simplices(self):
        for level in self.simplices:
            yield from level

    def maximal_simplices(self):
        out = []
        for k in range(self.dimension, -1, -1):
            for s in self.simplices[k]:
                sset = set(s)
                if not any(sset < set(t) for t in out):
                    out.append(s)
        return sorted(out, key=lambda s: (len(s), s))

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.vertex_count == other.vertex_count
                and self.simplices == other.simplices)


class FixedSubcomplex:
    """A full subcomplex on a fixed vertex set, with the re-indexing map."""

    def __init__(self, complex, vertex_embedding):
        self.complex = complex
        self.vertex_embedding = tuple(vertex_embedding)  # new index -> old


class GSimplicialComplex:
    """A simplicial complex with a simplicial action of a finite group."""

    def __init__(self, complex: SimplicialComplex, group: FiniteGroup,
                 vertex_action, check=True):
        self.complex = complex
        self.group = group
        self.vertex_action = tuple(tuple(row) for row in vertex_action)
        self._admissible = None
        self._orbit_data = None
        if check:
            self._validate()

    def _validate(self):
        n = self.complex.vertex_count
        if len(self.vertex_action) != self.group.order:
            raise BadAction("need one vertex permutation per group element")
        for g, row in enumerate(self.vertex_action):
            if sorted(row) != list(range(n)):
                raise BadAction("element %d does not act by a permutation" % g)
        ident = self.vertex_action[self.group.identity]
        if tuple(ident) != tuple(range(n)):
            raise BadAction("identity does not act trivially")
        for g in range(self.group.order):
            for h in range(self.group.order):
                gh = self.group.mult[g][h]
                for v in range(n):
                    if (self.vertex_action[g][self.vertex_action[h][v]]
                            != self.vertex_action[gh][v]):
                        raise BadAction(
                            "action is not a homomorphism at (%d,%d)" % (g, h))
        for g in range(self.group.order):
            for s in self.complex.all_simplices():
                if self.simplex_image(g, s) not in self.complex:
                    raise BadAction(
                        "element %d maps simplex %r outside the complex"
                        % (g, s))

    def simplex_image(self, g, simplex):
        row = self.vertex_action[g]
        return tuple(sorted(row[v] for v in simplex))

    def is_admissible(self):
        """True iff every setwise-invariant simplex is pointwise fixed."""
        ok, _ = self.admissibility_witness()
        return ok

    def admissibility_witness(self):
        """(True, None) or (False, (g, simplex)) for one violation."""
        if self._admissible is None:
            self._admissible = (True, None)
            for g in range(self.group.order):
                if g == self.group.identity:
                    continue
                row = self.vertex_action[g]
                for s in self.complex.all_simplices():
                    if (self.simplex_image(g, s) == s
                            and any(row[v] != v for v in s)):
                        self._admissible = (False, (g, s))
                        break
                if not self._admissible[0]:
                    break
        return self._admissible

    def require_admissible(self):
        ok, witness = self.admissibility_witness()
        if not ok:
            raise NotAdmissible(
                "element %d permutes the vertices of invariant simplex %r"
                % witness, witness=witness)


def check_admissible(gx: GSimplicialComplex):
    """(ok, witness): witness is one (g, simplex) violation or None."""
    return gx.admissibility_witness()


def barycentric_subdivide(gx: GSimplicialComplex) -> GSimplicialComplex:
    """Barycentric subdivision with the induced action on flags.

    Vertices of the result are the simplices of the input (in the canonical
    dimension-then-lex order); k-simplices are strict flags s0 < ... < sk.
    """
    old = gx.complex
    verts = list(old.all_simplices())
    vert_id = {s: i for i, s in enumerate(verts)}
    maximal = []
    for top in old.maximal_simplices():
        flags = [[top]]
        while flags and len(flags[0]) < len(top):
            extended = []
            for flag in flags:
                small = flag[0]
                for drop in range(len(small)):
                    face = small[:drop] + small[drop + 1:]
                    extended.append([face] + flag)
            flags = extended
        for flag in flags:
            maximal.append(tuple(vert_id[s] for s in flag))
    new_complex = SimplicialComplex(len(verts), maximal)
    action = tuple(
        tuple(vert_id[gx.simplex_image(g, s)] for s in verts)
        for g in range(gx.group.order)
    )
    return GSimplicialComplex(new_complex, gx.group, action, check=False)


class OrbitData:
    """G-orbits of simplices: representatives, members, stabilizers,
    transporters, ordered by (dimension, representative)."""

    def __init__(self, orbits, orbit_of):
        self.orbits = tuple(orbits)  # records (rep, members, stab, transporter)
        self.orbit_of = orbit_of     # simplex tuple -> orbit id

    def __len__(self):
        return len(self.orbits)

    def rep(self, i):
        return self.orbits[i][0]

    def members(self, i):
        return self.orbits[i][1]

    def stabilizer(self, i) -> Subgroup:
        return self.orbits[i][2]

    def transporter(self, i):
        """Map member simplex -> smallest g with g·rep = member."""
        return self.orbits[i][3]


def orbits_and_stabilizers(gx: GSimplicialComplex) -> OrbitData:
    gx.require_admissible()
    if gx._orbit_data is not None:
        return gx._orbit_data
    group = gx.group
    seen = {}
    raw = []
    for s in gx.complex.all_simplices():
        if s in seen:
            continue
        images = {}
        for g in range(group.order):
            t = gx.simplex_image(g, s)
            if t not in images:
                images[t] = g
        rep = min(images)
        # transporters and stabilizer relative to the lex-min representative
        transporter = {}
        stab = []
        for g in range(group.order):
            t = gx.simplex_image(g, rep)
            if t not in transporter:
                transporter[t] = g
            if t == rep:
                stab.append(g)
        members = tuple(sorted(images))
        orbit_id = len(raw)
        for t in members:
            seen[t] = orbit_id
        if len(members) * len(stab) != group.order:
            raise NotAdmissible(
                "orbit-stabilizer identity fails for %r" % (rep,))
        raw.append((rep, members, Subgroup(group, stab), transporter))
    order = sorted(range(len(raw)), key=lambda i: (len(raw[i][0]), raw[i][0]))
    renumber = {old: new for new, old in enumerate(order)}
    orbits = [raw[i] for i in order]
    orbit_of = {s: renumber[i] for s, i in seen.items()}
    data = OrbitData(orbits, orbit_of)
    gx._orbit_data = data
    return data


def fixed_subcomplex(gx: GSimplicialComplex, elements) -> FixedSubcomplex:
    """The full subcomplex of points fixed by every element of the set.

    Under admissibility this is exactly the fixed-point set: a simplex is
    pointwise fixed iff all its vertices are.
    """
    gx.require_admissible()
    elements = list(elements)
    fixed = [v for v in range(gx.complex.vertex_count)
             if all(gx.vertex_action[g][v] == v for g in elements)]
    new_id = {v: i for i, v in enumerate(fixed)}
    fixed_set = set(fixed)
    surviving = [
        tuple(new_id[v] for v in s)
        for s in gx.complex.all_simplices()
        if set(s) <= fixed_set
    ]
    return FixedSubcomplex(SimplicialComplex(len(fixed), surviving), fixed)


class QuotientResult:
    """Quotient complex of a Bredon-regular action, with projection data."""

    def __init__(self, complex, vertex_map, subdivisions, source):
        self.complex = complex
        self.vertex_map = tuple(vertex_map)  # source vertex -> quotient vertex
        self.subdivisions = subdivisions
        self.source = source  # the (possibly subdivided) GSimplicialComplex

    def project(self, simplex):
        return tuple(sorted(set(self.vertex_map[v] for v in simplex)))


def _bredon_witness(gx: GSimplicialComplex):
    """None if the quotient of gx is simplicial, else one offending datum.

    Condition (a): within any simplex, vertices lie in pairwise-distinct
    vertex orbits.  Condition (b): simplices with the same vertex-orbit image
    form a single G-orbit.
    """
    od = orbits_and_stabilizers(gx)
    vert_orbit = {s[0]: i for s, i in od.orbit_of.items() if len(s) == 1}
    buckets = {}
    for s in gx.complex.all_simplices():
        image = tuple(sorted(vert_orbit[v] for v in s))
        if len(set(image)) != len(s):
            return ("vertices collide", s)
        buckets.setdefault(image, set()).add(od.orbit_of[s])
    for image, orbit_ids in buckets.items():
        if len(orbit_ids) > 1:
            return ("distinct orbits identified", image)
    return None


def quotient_complex(gx: GSimplicialComplex, allow_subdivide=True,
                     max_subdivisions=2) -> QuotientResult:
    subdivisions = 0
    current = gx
    while True:
        ok, _ = current.admissibility_witness()
        witness = None if ok else "not admissible"
        if ok:
            witness = _bredon_witness(current)
        if witness is None:
            break
        if not allow_subdivide or subdivisions >= max_subdivisions:
            raise NotRegular(
                "quotient is not simplicial (%s); subdivision %s"
                % (witness, "exhausted" if allow_subdivide else "forbidden"))
        current = barycentric_subdivide(current)
        subdivisions += 1
    od = orbits_and_stabilizers(current)
    vert_orbit = {s[0]: i for s, i in od.orbit_of.items() if len(s) == 1}
    # quotient vertices numbered by the (dim, rep)-sorted vertex-orbit order
    vertex_orbits = sorted(set(vert_orbit.values()))
    new_id = {o: i for i, o in enumerate(vertex_orbits)}
    maximal = [
        tuple(sorted(new_id[vert_orbit[v]] for v in s))
        for s in current.complex.maximal_simplices()
    ]
    qcomplex = SimplicialComplex(len(vertex_orbits), maximal)
    vertex_map = [new_id[vert_orbit[v]]
                  for v in range(current.complex.vertex_count)]
    return QuotientResult(qcomplex, vertex_map, subdivisions, current)


class CentralizerFixedAction:
    """The fixed complex of g with the restricted centralizer action."""

    def __init__(self, gcomplex, centralizer, vertex_embedding):
        self.gcomplex = gcomplex
        self.centralizer = centralizer  # Subgroup of the original group
        self.vertex_embedding = vertex_embedding


def centralizer_fixed_action(gx: GSimplicialComplex,
                             g: int) -> CentralizerFixedAction:
    gx.require_admissible()
    group = gx.group
    cent = group.centralizer(g)
    fixed = fixed_subcomplex(gx, [g])
    old_of_new = fixed.vertex_embedding
    new_of_old = {v: i for i, v in enumerate(old_of_new)}
    action = tuple(
        tuple(new_of_old[gx.vertex_action[z][v]] for v in old_of_new)
        for z in cent.elements
    )
    sub_gx = GSimplicialComplex(fixed.complex, cent.group, action, check=False)
    return CentralizerFixedAction(sub_gx, cent, old_of_new)


class IsotropyStratum:
    """A maximal adjacency-connected set of orbits with conjugate stabilizers."""

    def __init__(self, stratum_id, stabilizer_rep, orbit_ids, connected=True):
        self.stratum_id = stratum_id
        self.stabilizer_rep = stabilizer_rep  # Subgroup of the rep orbit
        self.orbit_ids = tuple(orbit_ids)
        self.connected = connected

    @property
    def stabilizer_order(self):
        return self.stabilizer_rep.order


def isotropy_strata(gx: GSimplicialComplex):
    """Orbits grouped by stabilizer conjugacy class, split into components.

    Two orbits are adjacent when a representative of one is a face of a
    translate of the representative of the other (and the stabilizer classes
    agree, since only same-class orbits are ever compared).
    """
    od = orbits_and_stabilizers(gx)
    n = len(od)
    by_class = {}
    for i in range(n):
        by_class.setdefault(od.stabilizer(i).canonical_conjugacy_key(),
                            []).append(i)

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for members in by_class.values():
        for a in members:
            faces_a = set()
            for m in od.members(a):
                for mask in range(1, 1 << len(m)):
                    faces_a.add(tuple(v for i, v in enumerate(m)
                                      if mask >> i & 1))
            for b in members:
                if b != a and od.rep(b) in faces_a:
                    union(a, b)

    components = {}
    for members in by_class.values():
        for i in members:
            components.setdefault(find(i), []).append(i)
    strata = []
    for root in sorted(components, key=lambda r: min(components[r])):
        orbit_ids = sorted(components[root])
        strata.append(IsotropyStratum(len(strata),
                                      od.stabilizer(orbit_ids[0]),
                                      orbit_ids))
    return strata
