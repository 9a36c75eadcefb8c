"""Exact character tables and restriction/induction multiplicities.

Tables are computed by the Burnside-Dixon class-algebra method: structure
constants of the class sums, simultaneous eigenvectors over F_p for a prime
p = 1 (mod exp(G)) with p > 2|G|, then lifted to exact cyclotomic values.
Everything downstream (multiplicities, conjugate irreps, induction) is plain
exact arithmetic on the lifted values.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import Cyclotomic
from .errors import (
    BoundExceeded,
    InternalInconsistency,
    NonIntegralMultiplicity,
    NotSubgroup,
)
from .groups import FiniteGroup, Subgroup, conjugacy_data

CHARACTER_TABLE_BOUND = 512


# -- linear algebra over F_p ---------------------------------------------------


def _rref_mod(rows, p):
    """Row-reduce over F_p; returns (reduced rows, pivot column list)."""
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        pivots.append(c)
        rank += 1
    return rows[:rank], pivots


def _nullspace_mod(matrix, p):
    """Basis of the kernel of a square matrix over F_p (column vectors)."""
    m = len(matrix)
    reduced, pivots = _rref_mod(matrix, p)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for c in free:
        v = [0] * m
        v[c] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = (-row[c]) % p
        basis.append(v)
    return basis


def _poly_eval_mod(poly, x, p):
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def _poly_divmod_mod(a, b, p):
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = (a[i] * binv) % p
        q[i - len(b) + 1] = c
        if c:
            for j, d in enumerate(b):
                a[i - len(b) + 1 + j] = (a[i - len(b) + 1 + j] - c * d) % p
    r = a[: len(b) - 1] or [0]
    while len(r) > 1 and r[-1] % p == 0:
        r.pop()
    return q, r


def _poly_gcd_mod(a, b, p):
    a, b = list(a), list(b)
    while len(b) > 1 or b[0] % p:
        _, r = _poly_divmod_mod(a, b, p)
        a, b = b, r
        if len(b) == 1 and b[0] % p == 0:
            break
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _poly_mul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _min_poly_mod(matrix, p):
    """Minimal polynomial of a square matrix over F_p (monic, low-first)."""
    m = len(matrix)
    minpoly = [1]
    for start in range(m):
        v = [0] * m
        v[start] = 1
        # minimal polynomial of the Krylov sequence of v
        echelon, combos = [], []
        vec, combo = v, [1]
        while True:
            red = list(vec)
            cmb = list(combo) + [0] * (m + 1 - len(combo))
            for row, rc in zip(echelon, combos):
                lead = next(i for i, x in enumerate(row) if x)
                if red[lead]:
                    f = red[lead]
                    red = [(a - f * b) % p for a, b in zip(red, row)]
                    cmb = [(a - f * b) % p for a, b in zip(cmb, rc)]
            if all(x % p == 0 for x in red):
                while len(cmb) > 1 and cmb[-1] % p == 0:
                    cmb.pop()
                inv = pow(cmb[-1], p - 2, p)
                poly = [(c * inv) % p for c in cmb]
                break
            lead = next(i for i, x in enumerate(red) if x)
            inv = pow(red[lead], p - 2, p)
            echelon.append([(x * inv) % p for x in red])
            combos.append([(x * inv) % p for x in cmb])
            vec = [sum(matrix[i][j] * vec[j] for j in range(m)) % p
                   for i in range(m)]
            combo = [0] + combo
        g = _poly_gcd_mod(minpoly, poly, p)
        quot, rem = _poly_divmod_mod(_poly_mul_mod(minpoly, poly, p), g, p)
        assert len(rem) == 1 and rem[0] == 0
        minpoly = quot
        if len(minpoly) == m + 1:
            break
    return minpoly


def _smallest_dixon_prime(exponent, order):
    p = exponent + 1
    while True:
        if p > 2 * order and _is_prime(p) and (p - 1) % exponent == 0:
            return p
        p += 1


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _primitive_root(p):
    factors = set()
    n = p - 1
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1
    if n > 1:
        factors.add(n)
    for w in range(2, p):
        if all(pow(w, (p - 1) // q, p) != 1 for q in factors):
            return w
    raise InternalInconsistency("no primitive root found")


# -- the Dixon computation -----------------------------------------------------


def _class_matrix(cd, i, group):
    """N with N[j][k] = #{(x,y) in C_i x C_j : xy = rep_k}."""
    r = len(cd.classes)
    n = [[0] * r for _ in range(r)]
    inv = group.inv
    for k, z in enumerate(cd.reps):
        for x in cd.classes[i]:
            j = cd.class_of[group.mult[inv[x]][z]]
            n[j][k] += 1
    return n


def _dixon_rows(group):
    """Exact character values per conjugacy class, unsorted.

    Returns (rows, degrees) where rows[s] is a list of Cyclotomic values at
    conductor exp(G), one per class in conjugacy order.
    """
    cd = conjugacy_data(group)
    r = len(cd.classes)
    e = group.exponent()
    p = _smallest_dixon_prime(e, group.order)
    c_e = cd.class_of[group.identity]

    # split F_p^r into common eigenspaces of the class matrices
    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    spaces[0], _ = _rref_mod(spaces[0], p)
    for i in range(r):
        if i == c_e:
            continue
        if all(len(s) == 1 for s in spaces):
            break
        nmat = _class_matrix(cd, i, group)
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            m = len(basis)
            _, pivots = _rref_mod(basis, p)
            images = [
                [sum(nmat[a][b] * v[b] for b in range(r)) % p for a in range(r)]
                for v in basis
            ]
            # coordinates read off at pivot positions (basis is in rref)
            amat = [[images[i2][pivots[j]] for i2 in range(m)] for j in range(m)]
            minpoly = _min_poly_mod(amat, p)
            roots = [x for x in range(p) if _poly_eval_mod(minpoly, x, p) == 0]
            if len(roots) == 1:
                new_spaces.append(basis)
                continue
            found = 0
            for lam in roots:
                shifted = [
                    [(amat[a][b] - (lam if a == b else 0)) % p for b in range(m)]
                    for a in range(m)
                ]
                vecs = [
                    [sum(coords[t] * basis[t][j] for t in range(m)) % p
                     for j in range(r)]
                    for coords in _nullspace_mod(shifted, p)
                ]
                if vecs:
                    new_spaces.append(_rref_mod(vecs, p)[0])
                    found += len(vecs)
            if found != m:
                raise InternalInconsistency("eigenspace split lost dimensions")
        spaces = new_spaces
    if any(len(s) != 1 for s in spaces):
        raise InternalInconsistency("class algebra did not fully split")

    # normalize eigenvectors to omega-vectors (value 1 at the identity class)
    omegas = []
    for (v,) in spaces:
        if v[c_e] % p == 0:
            raise InternalInconsistency("eigenvector vanishes at identity class")
        inv0 = pow(v[c_e], p - 2, p)
        omegas.append([(x * inv0) % p for x in v])

    sizes = [len(c) for c in cd.classes]
    inv_class = [cd.class_of[group.inv[rep]] for rep in cd.reps]

    # degrees: d^2 = |G| / sum_i omega_i * omega_{i*} / h_i   (mod p)
    degrees, values_mod = [], []
    for om in omegas:
        s = 0
        for i in range(r):
            s = (s + om[i] * om[inv_class[i]] * pow(sizes[i], p - 2, p)) % p
        d2 = (group.order * pow(s, p - 2, p)) % p
        d = next((x for x in range(1, p // 2 + 1) if (x * x) % p == d2), None)
        if d is None or d > group.order:
            raise InternalInconsistency("degree recovery failed")
        degrees.append(d)
        values_mod.append(
            [(d * om[i] * pow(sizes[i], p - 2, p)) % p for i in range(r)])

    # power map: class of rep_i^l
    power_class = []
    for rep in cd.reps:
        row, x = [], group.identity
        for _ in range(e):
            row.append(cd.class_of[x])
            x = group.mult[x][rep]
        power_class.append(row)

    # lift each value to a sum of e-th roots of unity
    z = pow(_primitive_root(p), (p - 1) // e, p)
    zinv = pow(z, p - 2, p)
    inv_e = pow(e % p, p - 2, p)
    rows = []
    for d, vals in zip(degrees, values_mod):
        row = []
        for i in range(r):
            mults = []
            for j in range(e):
                acc = 0
                for l in range(e):
                    acc = (acc + vals[power_class[i][l]]
                           * pow(zinv, (j * l) % (p - 1), p)) % p
                mults.append((acc * inv_e) % p)
            if sum(mults) != d or any(mj > d for mj in mults):
                raise InternalInconsistency("eigenvalue multiplicity lift failed")
            value = Cyclotomic.zero(e)
            for j, mj in enumerate(mults):
                if mj:
                    value = value + Cyclotomic.root_of_unity(e, j) * mj
            row.append(value)
        rows.append(row)
    return rows, degrees


# -- public types ----------------------------------------------------------------


class Character:
    """A class function on a group, one exact value per conjugacy class."""

    def __init__(self, group, values):
        self.group = group
        self.conjugacy = conjugacy_data(group)
        self.values = tuple(values)
        assert len(self.values) == len(self.conjugacy.classes)

    @property
    def degree_value(self):
        return self.values[self.conjugacy.class_of[self.group.identity]]

    def value_on_element(self, g):
        return self.values[self.conjugacy.class_of[g]]

    def __eq__(self, other):
        return (isinstance(other, Character)
                and self.group is other.group
                and self.values == other.values)

    def __hash__(self):
        return hash(self.values)


class CharacterTable:
    """All irreducible characters of a group, deterministically ordered."""

    def __init__(self, group, conductor, irreps):
        self.group = group
        self.conjugacy = conjugacy_data(group)
        self.conductor = conductor
        self.irreps = tuple(irreps)  # records (id, degree, values)

    def __len__(self):
        return len(self.irreps)

    def degree(self, irrep_id):
        return self.irreps[irrep_id][1]

    def values(self, irrep_id):
        return self.irreps[irrep_id][2]

    def character(self, irrep_id) -> Character:
        return Character(self.group, self.values(irrep_id))

    def find_by_values(self, values):
        values = tuple(values)
        for rid, _, vals in self.irreps:
            if vals == values:
                return rid
        return None


def character_table(group: FiniteGroup, conductor=None,
                    bound=CHARACTER_TABLE_BOUND) -> CharacterTable:
    """The exact character table of the group.

    Values live at the given conductor (a multiple of exp(G); defaults to
    exp(G)).  Irreps are sorted by (degree, coefficient vectors), with the
    trivial character forced to id 0.
    """
    if group.order > bound:
        raise BoundExceeded("group order %d exceeds bound %d"
                            % (group.order, bound))
    e = group.exponent()
    if conductor is None:
        conductor = e
    if conductor % e != 0:
        raise InternalInconsistency("conductor must be a multiple of exp(G)")
    cached = group._tables.get(conductor)
    if cached is not None:
        return cached

    rows, degrees = _dixon_rows(group)
    rows = [[v.lift(conductor) for v in row] for row in rows]
    one = Cyclotomic.one(conductor)
    records = []
    for row, d in zip(rows, degrees):
        trivial = all(v == one for v in row)
        key = (d, 0 if trivial else 1, tuple(v.sort_key() for v in row))
        records.append((key, d, tuple(row)))
    records.sort(key=lambda rec: rec[0])
    irreps = [(i, d, row) for i, (_, d, row) in enumerate(records)]

    table = CharacterTable(group, conductor, irreps)
    _verify_table(table)
    group._tables[conductor] = table
    return table


def _verify_table(table):
    group = table.group
    cd = table.conjugacy
    n = group.order
    r = len(cd.classes)
    if len(table.irreps) != r:
        raise InternalInconsistency("irrep count != class count")
    if sum(d * d for _, d, _ in table.irreps) != n:
        raise InternalInconsistency("sum of squared degrees != |G|")
    one = Cyclotomic.one(table.conductor)
    if any(v != one for v in table.values(0)):
        raise InternalInconsistency("irrep 0 is not the trivial character")
    for rid, d, vals in table.irreps:
        if n % d != 0:
            raise InternalInconsistency("degree does not divide |G|")
        if vals[cd.class_of[group.identity]] != d:
            raise InternalInconsistency("degree disagrees with identity value")
    sizes = [len(c) for c in cd.classes]
    pairs = ([(a, b) for a in range(r) for b in range(r)]
             if n <= 64 else
             [(a, a) for a in range(r)] + [(0, b) for b in range(1, r)])
    for a, b in pairs:
        va, vb = table.values(a), table.values(b)
        acc = Cyclotomic.zero(table.conductor)
        for i in range(r):
            acc = acc + va[i] * vb[i].conjugate() * sizes[i]
        want = n if a == b else 0
        if acc != want:
            raise InternalInconsistency("row orthogonality fails (%d,%d)"
                                        % (a, b))


def subgroup_table(sub: Subgroup, bound=CHARACTER_TABLE_BOUND) -> CharacterTable:
    """Character table of a subgroup, at the parent group's conductor."""
    key = sub.elements
    cached = sub.parent._sub_tables.get(key)
    if cached is None:
        cached = character_table(sub.group, conductor=sub.parent.exponent(),
                                 bound=bound)
        sub.parent._sub_tables[key] = cached
    return cached


# -- multiplicities and transport -------------------------------------------------


def _common_conductor(*values):
    return lcm(*[v.conductor for v in values])


def multiplicity(chi: Character, psi: Character, sub: Subgroup) -> int:
    """<res chi, psi> over the subgroup: (1/|L|) sum chi(l) conj(psi(l)).

    chi is a (possibly reducible) character of the parent group; psi is a
    character of the reified subgroup.  The result must be a non-negative
    rational integer.
    """
    if chi.group is not sub.parent:
        raise NotSubgroup("chi is not a character of the ambient group")
    if psi.group is not sub.group and psi.group.mult != sub.group.mult:
        raise NotSubgroup("psi does not live on this subgroup")
    m = _common_conductor(chi.values[0], psi.values[0])
    acc = Cyclotomic.zero(m)
    for i, l in enumerate(sub.elements):
        acc = acc + (chi.value_on_element(l).lift(m)
                     * psi.value_on_element(i).lift(m).conjugate())
    acc = acc * Fraction(1, sub.order)
    if not acc.is_integer() or acc.integer_value() < 0:
        raise NonIntegralMultiplicity(
            "inner product %s is not a non-negative integer" % (acc,))
    return acc.integer_value()


def restrict_character(chi: Character, sub: Subgroup) -> Character:
    """The restriction of a parent-group character to a reified subgroup."""
    assert chi.group is sub.parent
    cd = conjugacy_data(sub.group)
    values = [chi.value_on_element(sub.elements[rep]) for rep in cd.reps]
    return Character(sub.group, values)


def conjugate_irrep(g: int, sigma_id: int, sub: Subgroup):
    """Transport an irrep along conjugation: returns (g K g^-1, irrep id).

    The resulting irrep of gKg^-1 has character chi_sigma(g^-1 . g).
    """
    parent = sub.parent
    table = subgroup_table(sub)
    chi = table.character(sigma_id)
    target = sub.conjugate(g)
    target_table = subgroup_table(target)
    cd = conjugacy_data(target.group)
    ginv = parent.inv[g]
    values = []
    for rep in cd.reps:
        y = target.elements[rep]
        x = parent.conj(ginv, y)
        values.append(chi.value_on_element(sub.position_of(x)))
    tau = target_table.find_by_values(values)
    if tau is None:
        raise InternalInconsistency("conjugated character not in target table")
    return target, tau


def induced_character(psi: Character, sub: Subgroup) -> Character:
    """Induction of a subgroup character to the parent group."""
    parent = sub.parent
    if psi.group is not sub.group and psi.group.mult != sub.group.mult:
        raise NotSubgroup("psi does not live on this subgroup")
    cd = conjugacy_data(parent)
    inside = {l: i for i, l in enumerate(sub.elements)}
    conductor = psi.values[0].conductor
    values = []
    for rep in cd.reps:
        acc = Cyclotomic.zero(conductor)
        for x in range(parent.order):
            y = parent.conj(parent.inv[x], rep)
            if y in inside:
                acc = acc + psi.value_on_element(inside[y])
        values.append(acc * Fraction(1, sub.order))
    return Character(parent, values)
