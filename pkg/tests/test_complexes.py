import pytest

from orbikt import (BadAction, GSimplicialComplex, NotAComplex, NotAdmissible,
                    NotRegular, SimplicialComplex, barycentric_subdivide,
                    check_admissible, cyclic_group, dihedral_group,
                    fixed_subcomplex, fixture, isotropy_strata,
                    orbits_and_stabilizers, quotient_complex, trivial_group)


def interval():
    return SimplicialComplex(2, [(0, 1)])


def two_point_circle():
    """Two vertices joined by two edges is not a simplicial complex;
    the closest simplicial model needs distinct edges, so use the square."""
    return SimplicialComplex(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_closure_generates_faces():
    c = SimplicialComplex(3, [(0, 1, 2)])
    assert c.f_vector() == (3, 3, 1)
    assert (0, 1) in c
    assert (2,) in c
    assert c.dimension == 2


def test_isolated_vertices_are_included():
    c = SimplicialComplex(4, [(0, 1)])
    assert c.f_vector() == (4, 1)


def test_bad_simplices_rejected():
    with pytest.raises(NotAComplex):
        SimplicialComplex(2, [(0, 2)])       # vertex out of range
    with pytest.raises(NotAComplex):
        SimplicialComplex(3, [()])           # empty simplex
    with pytest.raises(NotAComplex):
        SimplicialComplex(-1, [])            # negative vertex count
    # repeated vertices are normalized away, not rejected
    assert SimplicialComplex(3, [(0, 0, 1)]).f_vector() == (3, 1)


def test_action_must_be_homomorphism():
    c = interval()
    g = cyclic_group(2)
    with pytest.raises(BadAction):
        # swapping vertices composed with itself is the identity, so sending
        # both elements to the swap is not a homomorphism
        GSimplicialComplex(c, g, [(1, 0), (1, 0)])


def test_action_must_preserve_simplices():
    c = SimplicialComplex(3, [(0, 1)])
    g = cyclic_group(2)
    with pytest.raises(BadAction):
        GSimplicialComplex(c, g, [(0, 1, 2), (1, 2, 0)])


def test_reflection_of_interval_is_not_admissible():
    """A reflection fixing an edge setwise while swapping its endpoints is
    the minimal admissibility failure; the witness names the culprit."""
    c = interval()
    g = cyclic_group(2)
    gx = GSimplicialComplex(c, g, [(0, 1), (1, 0)])
    assert not gx.is_admissible()
    ok, (elt, simplex) = gx.admissibility_witness()
    assert not ok
    assert elt == 1
    assert simplex == (0, 1)
    assert check_admissible(gx) == (False, (1, (0, 1)))
    with pytest.raises(NotAdmissible):
        gx.require_admissible()


def test_square_reflection_is_admissible():
    c = two_point_circle()
    g = cyclic_group(2)
    # reflect across the diagonal through vertices 0 and 2
    gx = GSimplicialComplex(c, g, [(0, 1, 2, 3), (0, 3, 2, 1)])
    assert gx.is_admissible()


def test_subdivision_repairs_admissibility():
    gx = GSimplicialComplex(interval(), cyclic_group(2),
                            [(0, 1), (1, 0)])
    sd = barycentric_subdivide(gx)
    assert sd.is_admissible()
    # the subdivided interval has 3 vertices and 2 edges
    assert sd.complex.f_vector() == (3, 2)


def test_subdivision_counts_of_triangle():
    c = SimplicialComplex(3, [(0, 1, 2)])
    gx = GSimplicialComplex(c, trivial_group(), [(0, 1, 2)])
    sd = barycentric_subdivide(gx)
    # vertices = simplices of the original; each triangle gives 6 triangles
    assert sd.complex.f_vector() == (7, 12, 6)


def test_orbit_stabilizer_identity_on_fixtures(all_fixtures):
    for gx in all_fixtures.values():
        od = orbits_and_stabilizers(gx)
        for rep, members, stab, transporter in od.orbits:
            assert len(members) * stab.order == gx.group.order
            assert set(transporter) == set(members)
            # transported representative lands on each member
            for member, g in transporter.items():
                assert gx.simplex_image(g, rep) == member


def test_orbit_inventory_of_dihedral_torus(d4_torus):
    od = orbits_and_stabilizers(d4_torus)
    inventory = {}
    for rep, members, stab, _t in od.orbits:
        key = (len(rep) - 1, stab.order)
        inventory[key] = inventory.get(key, 0) + 1
    assert inventory == {
        (0, 8): 2,   # two full-stabilizer corners
        (0, 4): 1,   # the half-shift pair
        (0, 2): 5,   # reflection-axis vertices
        (0, 1): 1,   # free vertex orbit
        (1, 2): 8,   # edges along reflection axes
        (1, 1): 8,   # free edges
        (2, 1): 8,   # free triangles
    }


def test_stabilizer_subgroups_on_torus(d4_torus):
    g = d4_torus.group
    od = orbits_and_stabilizers(d4_torus)
    stabs = {od.orbits[i][2].elements for i in range(len(od))}
    # representative stabilizers: G, H, <S>, <SR2>, <SR3>, trivial.  The
    # anti-diagonal reflection <SR> stabilizes only non-representative
    # members (orbit reps land on the main diagonal), so it never appears.
    assert stabs == {
        tuple(range(8)), (0, 2, 4, 6), (0, 4), (0, 6), (0, 7), (0,),
    }


def test_fixed_subcomplex_of_half_turn_is_four_points(d4_torus):
    fixed = fixed_subcomplex(d4_torus, [2])
    assert fixed.complex.f_vector() == (4,)


def test_fixed_subcomplex_of_reflection_is_two_circles(d4_torus):
    fixed = fixed_subcomplex(d4_torus, [4])
    assert fixed.complex.f_vector() == (8, 8)


def test_fixed_subcomplex_of_two_generators_is_intersection(d4_torus):
    fixed = fixed_subcomplex(d4_torus, [2, 4])
    assert fixed.complex.f_vector() == (4,)


def test_fixed_points_of_circle_reflection(z2_circle):
    fixed = fixed_subcomplex(z2_circle, [1])
    assert fixed.complex.f_vector() == (2,)
    assert fixed.vertex_embedding == (0, 4)


def test_quotient_of_dihedral_torus_is_disk(d4_torus):
    q = quotient_complex(d4_torus)
    assert q.subdivisions == 0
    assert q.complex.f_vector() == (9, 16, 8)


def test_quotient_of_rotation_torus_needs_one_subdivision(z4_torus):
    q = quotient_complex(z4_torus)
    assert q.subdivisions == 1


def test_quotient_refuses_when_subdivision_is_forbidden(z4_torus):
    with pytest.raises(NotRegular):
        quotient_complex(z4_torus, allow_subdivide=False)


def test_quotient_projection_is_surjective(z2_circle):
    q = quotient_complex(z2_circle)
    assert q.complex.f_vector() == (5, 4)
    image = {q.project(s) for s in z2_circle.complex.all_simplices()}
    assert image == set(q.complex.all_simplices())


def test_strata_counts(all_fixtures):
    expected = {"d4-torus": 7, "z4-torus": 4, "z2-flip-torus": 5,
                "z2-circle": 3}
    for name, gx in all_fixtures.items():
        assert len(isotropy_strata(gx)) == expected[name]


def test_strata_partition_orbits(d4_torus):
    od = orbits_and_stabilizers(d4_torus)
    strata = isotropy_strata(d4_torus)
    seen = sorted(oid for st in strata for oid in st.orbit_ids)
    assert seen == list(range(len(od)))


def test_strata_have_constant_stabilizer_order(all_fixtures):
    for gx in all_fixtures.values():
        od = orbits_and_stabilizers(gx)
        for st in isotropy_strata(gx):
            orders = {od.stabilizer(oid).order for oid in st.orbit_ids}
            assert len(orders) == 1


def test_diagonal_stratum_of_torus_has_seven_orbits(d4_torus):
    strata = isotropy_strata(d4_torus)
    sizes = sorted(len(st.orbit_ids) for st in strata)
    assert sizes == [1, 1, 1, 3, 3, 7, 17]


def test_centralizer_fixed_action_restricts(d4_torus):
    from orbikt import centralizer_fixed_action
    cfa = centralizer_fixed_action(d4_torus, 2)  # half turn is central
    assert cfa.centralizer.order == 8
    assert cfa.gcomplex.complex.f_vector() == (4,)
    assert cfa.gcomplex.is_admissible()
