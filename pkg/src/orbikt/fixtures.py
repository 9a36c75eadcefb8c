"""Built-in example actions: named deterministic (group, complex, action)
triples used by the CLI and the test suite.

Available names: ``d4-torus``, ``z4-torus``, ``z2-flip-torus``, ``z2-circle``,
and ``trivial-on(torus)`` / ``trivial-on(circle)``.

The torus is triangulated on a 4x4 grid of quarter-integer points plus one
center point per grid square (32 vertices, 96 edges, 64 triangles); the
dihedral symmetries act by exact rational linear maps modulo 1, so every
claimed symmetry is verified, not assumed.  The circle is the 8-gon.
"""

from fractions import Fraction

from .complexes import GSimplicialComplex, SimplicialComplex, \
    barycentric_subdivide
from .errors import UnknownFixture
from .groups import cyclic_group, dihedral_group, trivial_group

FIXTURE_NAMES = ("d4-torus", "z4-torus", "z2-flip-torus", "z2-circle",
                 "trivial-on(torus)", "trivial-on(circle)")

_GRID = 4  # grid squares per side; vertex coordinates live in (1/GRID)Z^2 / Z^2


def _torus_vertices():
    """Vertex id -> exact (s, t) coordinate on the unit square mod 1."""
    coords = []
    for i in range(_GRID):
        for j in range(_GRID):
            coords.append((Fraction(i, _GRID), Fraction(j, _GRID)))
    half = Fraction(1, 2 * _GRID)
    for i in range(_GRID):
        for j in range(_GRID):
            coords.append((Fraction(i, _GRID) + half,
                           Fraction(j, _GRID) + half))
    return coords


def torus_complex() -> SimplicialComplex:
    def grid(i, j):
        return (i % _GRID) * _GRID + (j % _GRID)

    def center(i, j):
        return _GRID * _GRID + (i % _GRID) * _GRID + (j % _GRID)

    triangles = []
    for i in range(_GRID):
        for j in range(_GRID):
            c00 = grid(i, j)
            c10 = grid(i + 1, j)
            c11 = grid(i + 1, j + 1)
            c01 = grid(i, j + 1)
            m = center(i, j)
            triangles += [(c00, c10, m), (c10, c11, m),
                          (c11, c01, m), (c01, c00, m)]
    return SimplicialComplex(2 * _GRID * _GRID, triangles)


def circle_complex(n=8) -> SimplicialComplex:
    return SimplicialComplex(n, [(k, (k + 1) % n) for k in range(n)])


def _torus_permutation(linear_map):
    """Vertex permutation induced by an exact map on coordinates mod 1."""
    coords = _torus_vertices()
    index = {c: v for v, c in enumerate(coords)}
    images = []
    for s, t in coords:
        u, w = linear_map(s, t)
        images.append(index[(u % 1, w % 1)])
    return tuple(images)


def _rotation(k):
    """(s, t) -> R^k (s, t) where R is the quarter turn (s, t) -> (-t, s)."""
    def apply(s, t):
        for _ in range(k % 4):
            s, t = -t, s
        return s, t
    return apply


def _d4_maps():
    """Geometric map per dihedral element: index k < 4 is R^k, index 4 + k
    is S R^k with S the reflection (s, t) -> (s, -t)."""
    maps = []
    for k in range(4):
        maps.append(_rotation(k))
    for k in range(4):
        rot = _rotation(k)

        def apply(s, t, rot=rot):
            u, w = rot(s, t)
            return u, -w
        maps.append(apply)
    return maps


def _d4_torus() -> GSimplicialComplex:
    group = dihedral_group(4)
    action = [_torus_permutation(f) for f in _d4_maps()]
    return GSimplicialComplex(torus_complex(), group, action)


def _z4_torus() -> GSimplicialComplex:
    group = cyclic_group(4)
    action = [_torus_permutation(_rotation(k)) for k in range(4)]
    return GSimplicialComplex(torus_complex(), group, action)


def _z2_flip_torus() -> GSimplicialComplex:
    group = cyclic_group(2)
    action = [_torus_permutation(_rotation(0)),
              _torus_permutation(_rotation(2))]
    return GSimplicialComplex(torus_complex(), group, action)


def _z2_circle() -> GSimplicialComplex:
    group = cyclic_group(2)
    n = 8
    identity = tuple(range(n))
    reflect = tuple((n - k) % n for k in range(n))
    return GSimplicialComplex(circle_complex(n), group, [identity, reflect])


def _trivial_on(complex: SimplicialComplex) -> GSimplicialComplex:
    return GSimplicialComplex(complex, trivial_group(),
                              [tuple(range(complex.vertex_count))])


_BUILDERS = {
    "d4-torus": _d4_torus,
    "z4-torus": _z4_torus,
    "z2-flip-torus": _z2_flip_torus,
    "z2-circle": _z2_circle,
    "trivial-on(torus)": lambda: _trivial_on(torus_complex()),
    "trivial-on(circle)": lambda: _trivial_on(circle_complex()),
}


def fixture(name) -> GSimplicialComplex:
    """Build the named fixture; always admissible (subdividing if an action
    were admissible only after subdivision, which none of the built-ins
    need)."""
    if name not in _BUILDERS:
        raise UnknownFixture(
            "unknown fixture %r (available: %s)"
            % (name, ", ".join(sorted(_BUILDERS))))
    gx = _BUILDERS[name]()
    for _ in range(2):
        if gx.is_admissible():
            break
        gx = barycentric_subdivide(gx)
    gx.require_admissible()
    return gx
