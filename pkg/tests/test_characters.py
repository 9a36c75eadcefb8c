from fractions import Fraction

import pytest

from orbikt import (BoundExceeded, Cyclotomic, character_table,
                    conjugate_irrep, cyclic_group, dihedral_group,
                    induced_character, multiplicity, product_group,
                    restrict_character, subgroup_table, trivial_group)
from orbikt.groups import conjugacy_data


def chars_as_strings(table):
    return [(rid, d, [str(v) for v in vals]) for rid, d, vals in table.irreps]


def test_trivial_group_table():
    t = character_table(trivial_group())
    assert chars_as_strings(t) == [(0, 1, ["1"])]


def test_cyclic4_table_frozen():
    t = character_table(cyclic_group(4))
    assert chars_as_strings(t) == [
        (0, 1, ["1", "1", "1", "1"]),
        (1, 1, ["1", "-1", "1", "-1"]),
        (2, 1, ["1", "-z4", "-1", "z4"]),
        (3, 1, ["1", "z4", "-1", "-z4"]),
    ]


def test_cyclic3_table_frozen():
    t = character_table(cyclic_group(3))
    assert chars_as_strings(t) == [
        (0, 1, ["1", "1", "1"]),
        (1, 1, ["1", "-1 - z3", "z3"]),
        (2, 1, ["1", "z3", "-1 - z3"]),
    ]


def test_dihedral4_table_frozen():
    """Classes in order [E], [R2], [R], [S], [SR]; the four linear rows and
    one degree-2 row, trivial first."""
    g = dihedral_group(4)
    t = character_table(g)
    assert chars_as_strings(t) == [
        (0, 1, ["1", "1", "1", "1", "1"]),
        (1, 1, ["1", "1", "-1", "-1", "1"]),
        (2, 1, ["1", "1", "-1", "1", "-1"]),
        (3, 1, ["1", "1", "1", "-1", "-1"]),
        (4, 2, ["2", "-2", "0", "0", "0"]),
    ]


def test_klein_four_table_all_linear():
    t = character_table(product_group(cyclic_group(2), cyclic_group(2)))
    degrees = [d for _rid, d, _v in t.irreps]
    assert degrees == [1, 1, 1, 1]


def test_dihedral3_table_frozen():
    t = character_table(dihedral_group(3))
    assert [(rid, d) for rid, d, _ in t.irreps] == [(0, 1), (1, 1), (2, 2)]
    assert [str(v) for v in t.values(2)] == ["2", "-1", "0"]


def test_sum_of_degree_squares_is_group_order():
    for g in (cyclic_group(5), dihedral_group(4), dihedral_group(6),
              product_group(cyclic_group(2), cyclic_group(4))):
        t = character_table(g)
        assert sum(d * d for _rid, d, _v in t.irreps) == g.order


def test_row_orthogonality_dihedral4():
    g = dihedral_group(4)
    t = character_table(g)
    cd = conjugacy_data(g)
    n = len(t.irreps)
    for i in range(n):
        for j in range(n):
            acc = Cyclotomic.zero(t.conductor)
            for c, members in enumerate(cd.classes):
                acc = acc + (t.values(i)[c] * t.values(j)[c].conjugate()
                             * len(members))
            expected = g.order if i == j else 0
            assert acc == Cyclotomic.from_rational(t.conductor, expected)


def test_character_value_on_element():
    g = dihedral_group(4)
    t = character_table(g)
    chi = t.character(4)
    assert str(chi.value_on_element(0)) == "2"
    assert str(chi.value_on_element(2)) == "-2"
    for elt in (1, 3, 4, 5, 6, 7):
        assert chi.value_on_element(elt).is_zero()


def test_degree_one_bound_exceeded():
    with pytest.raises(BoundExceeded):
        character_table(cyclic_group(4), bound=3)


def test_subgroup_table_uses_parent_exponent():
    g = dihedral_group(4)
    h = g.subgroup([2, 4])
    t = subgroup_table(h)
    assert t.conductor == g.exponent()


def test_restriction_multiplicities_of_plane_representation():
    """The degree-2 row restricted to the rotation subgroup splits into the
    two primitive linear characters, missing the trivial and order-2 ones."""
    g = dihedral_group(4)
    rot = g.subgroup([1])
    t = character_table(g)
    chi = t.character(4)
    mults = [multiplicity(chi, subgroup_table(rot).character(j), rot)
             for j in range(4)]
    assert mults == [0, 0, 1, 1]


def test_restriction_of_linear_characters_to_reflection():
    g = dihedral_group(4)
    k = g.subgroup([4])  # <S>
    t = character_table(g)
    tk = subgroup_table(k)
    triv, sign = tk.character(0), tk.character(1)
    # rows with value +1 at S contain the trivial character of <S>
    assert [multiplicity(t.character(i), triv, k) for i in range(5)] == \
        [1, 0, 1, 0, 1]
    assert [multiplicity(t.character(i), sign, k) for i in range(5)] == \
        [0, 1, 0, 1, 1]


def test_restrict_character_values():
    g = dihedral_group(4)
    h = g.subgroup([2, 4])
    chi = character_table(g).character(4)
    res = restrict_character(chi, h)
    assert [str(v) for v in res.values] == ["2", "-2", "0", "0"]


def test_conjugate_irrep_transports_between_conjugate_subgroups():
    g = dihedral_group(4)
    k = g.subgroup([4])       # <S>
    conj_sub, tau = conjugate_irrep(1, 1, k)  # transport sign along R
    assert conj_sub.elements == (0, 6)        # <SR2>
    assert tau == 1  # sign goes to sign
    conj_sub, tau = conjugate_irrep(1, 0, k)
    assert tau == 0  # trivial goes to trivial


def test_frobenius_reciprocity_examples():
    g = dihedral_group(4)
    t = character_table(g)
    full = g.full_subgroup()
    for sub in (g.subgroup([4]), g.subgroup([1]), g.subgroup([2, 4])):
        ts = subgroup_table(sub)
        for sid, _d, _v in ts.irreps:
            psi = ts.character(sid)
            induced = induced_character(psi, sub)
            for rid, _dd, _vv in t.irreps:
                chi = t.character(rid)
                lhs = multiplicity(induced, chi, full)
                rhs = multiplicity(chi, psi, sub)
                assert lhs == rhs


def test_induced_character_degree():
    g = dihedral_group(4)
    k = g.subgroup([4])
    psi = subgroup_table(k).character(1)
    ind = induced_character(psi, k)
    assert ind.degree_value == g.order // k.order


def test_tables_are_cached():
    g = dihedral_group(4)
    assert character_table(g) is character_table(g)
    h1, h2 = g.subgroup([4]), g.subgroup([4])
    assert subgroup_table(h1) is subgroup_table(h2)
