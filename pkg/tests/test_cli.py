import json

from orbikt.cli import main

D4_LADDER = """\
1: (0, 0) (1, 0) (2, 0) (3, 0) (4, 0) (5, 0) (6, 0)
2: (1, 1) (3, 1) (4, 1) (0, 3) (5, 3) (2, 3)
3: (0, 1) (0, 2) (0, 4) (5, 1) (5, 2) (5, 4) (2, 1) (2, 2)
"""


def run_cli(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# -- table output -------------------------------------------------------------------


def test_bc_table_dihedral_torus(capsys):
    code, out, err = run_cli(capsys, ["bc", "--fixture", "d4-torus"])
    assert code == 0 and err == ""
    assert out == (
        "class [E]: K0 rank 1, K1 rank 0\n"
        "class [R2]: K0 rank 3, K1 rank 0\n"
        "class [R]: K0 rank 2, K1 rank 0\n"
        "class [S]: K0 rank 2, K1 rank 0\n"
        "class [SR]: K0 rank 1, K1 rank 0\n"
        "totals: K0 rank 9, K1 rank 0\n"
    )


def test_ktheory_table_rotation_torus(capsys):
    code, out, err = run_cli(capsys, ["ktheory", "--fixture", "z4-torus"])
    assert code == 0
    assert out == (
        "K0 = Z^9, K1 = 0\n"
        "boundary map: provably-zero\n"
        "class [e]: K0 rank 2, K1 rank 0\n"
        "class [g]: K0 rank 2, K1 rank 0\n"
        "class [g2]: K0 rank 3, K1 rank 0\n"
        "class [g3]: K0 rank 2, K1 rank 0\n"
        "totals: K0 rank 9, K1 rank 0\n"
        "flag paper-discrepancy: computed_k0_rank=9, example=ex-sphere, "
        "published_k0_rank=8\n"
    )


def test_prim_aggregate_table_circle(capsys):
    code, out, _ = run_cli(capsys,
                           ["prim", "--aggregate", "--fixture", "z2-circle"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "nodes: 5"
    assert "relation pairs: 4" in lines
    assert lines[-1] == "ix: [0, 2, 3] (size 3, open)"


def test_fixture_describe_table(capsys):
    code, out, _ = run_cli(capsys, ["fixture", "z2-circle"])
    assert code == 0
    assert "name: z2-circle" in out
    assert "group_order: 2" in out
    assert "admissible: True" in out


def test_group_table_output(capsys):
    code, out, _ = run_cli(capsys, ["group", "--group", "builtin:cyclic:4"])
    assert code == 0
    assert "order: 4" in out
    assert "conductor: 4" in out
    code, out, _ = run_cli(capsys, ["group", "--group", "builtin:dihedral:4"])
    assert code == 0
    assert "order: 8" in out
    assert "abelian: False" in out


def test_euler_pairs_table(capsys):
    code, out, _ = run_cli(capsys, ["euler", "--method", "pairs",
                                    "--fixture", "z4-torus"])
    assert code == 0
    assert "value: 9" in out


# -- json output --------------------------------------------------------------------


def test_json_byte_deterministic(capsys):
    argv = ["ktheory", "--fixture", "z4-torus", "--format", "json"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second
    doc = json.loads(first)
    assert set(doc) == {"meta", "payload", "flags"}
    assert doc["meta"]["command"] == "ktheory"
    assert doc["meta"]["fixture"] == "z4-torus"
    assert doc["meta"]["deterministic"] is True
    assert doc["payload"]["k0"] == {"rank": 9, "torsion": []}
    assert doc["payload"]["k1"] == {"rank": 0, "torsion": []}
    assert doc["flags"] == [{
        "type": "paper-discrepancy",
        "example": "ex-sphere",
        "published_k0_rank": 8,
        "computed_k0_rank": 9,
    }]


def test_bc_json_flip_torus(capsys):
    code, out, _ = run_cli(capsys, ["bc", "--fixture", "z2-flip-torus",
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["totals"] == {"even": 6, "odd": 0}
    assert doc["meta"]["group_order"] == 2
    assert doc["meta"]["f_vector"] == [32, 96, 64]
    assert doc["flags"] == []


def test_fiber_json_with_builtin_group(capsys):
    code, out, _ = run_cli(capsys, ["fiber", "S", "--group",
                                    "builtin:dihedral:4", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["stabilizer"] == ["E", "S"]
    assert doc["payload"]["index"] == 4
    assert doc["payload"]["blocks"] == [
        {"irrep": 0, "dimension": 4, "multiplicity": 1},
        {"irrep": 1, "dimension": 4, "multiplicity": 1},
    ]


def test_fiber_trivial_stabilizer(capsys):
    code, out, _ = run_cli(capsys, ["fiber", "--group", "builtin:dihedral:4",
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["blocks"] == [
        {"irrep": 0, "dimension": 8, "multiplicity": 1}]


def test_fixed_json(capsys):
    code, out, _ = run_cli(capsys, ["fixed", "R2", "--fixture", "d4-torus",
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["elements"] == ["R2"]
    assert doc["payload"]["f_vector"] == [4]
    assert doc["payload"]["betti"] == [4]
    assert doc["payload"]["vertex_embedding"] == [0, 2, 8, 10]


def test_euler_quotient_check_json(capsys):
    code, out, _ = run_cli(capsys, ["euler", "--method", "quotient-check",
                                    "--fixture", "d4-torus",
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"] == {"method": "quotient-check",
                              "quotient_euler": 1, "class_average": "1",
                              "equal": True, "integral": True}


def test_identity_check_json(capsys):
    code, out, _ = run_cli(capsys, ["identity-check", "--fixture", "z4-torus",
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"] == {"vertex_count_sum": 7, "euler_difference": 7,
                              "equal": True}


def test_orbits_json(capsys):
    code, out, _ = run_cli(capsys, ["orbits", "--fixture", "z2-circle",
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["orbit_count"] == 9


def test_quotient_respects_no_subdivide(capsys):
    code, out, _ = run_cli(capsys, ["quotient", "--fixture", "z2-circle",
                                    "--no-subdivide", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["subdivisions"] == 0
    assert doc["meta"]["subdivision"] == "forbidden"


# -- filtration command ---------------------------------------------------------------


def test_filtration_command_valid(capsys, tmp_path):
    path = tmp_path / "ladder.txt"
    path.write_text(D4_LADDER)
    code, out, _ = run_cli(capsys, ["filtration", str(path), "--fixture",
                                    "d4-torus", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["valid"] is True
    assert doc["payload"]["node_total"] == 21
    assert [s["count"] for s in doc["payload"]["steps"]] == [7, 6, 8]
    assert [s["cumulative"] for s in doc["payload"]["steps"]] == [7, 13, 21]


def test_filtration_command_rejects_non_open(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1: (0, 4)\n")
    code, _, err = run_cli(capsys, ["filtration", str(path),
                                    "--fixture", "d4-torus"])
    assert code == 2
    assert "NotOpen" in err


# -- bundle export / import -----------------------------------------------------------


def test_fixture_emit_round_trips_through_bc(capsys, tmp_path):
    code, out, _ = run_cli(capsys, ["fixture", "z2-circle", "--emit"])
    assert code == 0
    assert out.startswith("# group")
    path = tmp_path / "bundle.txt"
    path.write_text(out)
    code, out, _ = run_cli(capsys, ["bc", "--complex", str(path)])
    assert code == 0
    assert out.splitlines()[-1] == "totals: K0 rank 3, K1 rank 0"


# -- exit codes -----------------------------------------------------------------------


def test_refusals_exit_2(capsys):
    code, _, err = run_cli(capsys, ["ktheory", "--fixture", "d4-torus"])
    assert code == 2 and "NotIsolated" in err
    code, _, err = run_cli(capsys, ["identity-check", "--fixture",
                                    "d4-torus"])
    assert code == 2 and "NotApplicable" in err
    code, _, err = run_cli(capsys, ["quotient", "--fixture", "z4-torus",
                                    "--no-subdivide"])
    assert code == 2 and "NotRegular" in err
    code, _, err = run_cli(capsys, ["euler", "--method", "isolated",
                                    "--fixture", "d4-torus"])
    assert code == 2 and "NotIsolated" in err


def test_input_errors_exit_1(capsys):
    code, _, err = run_cli(capsys, ["bc", "--fixture", "no-such-fixture"])
    assert code == 1 and "ParseError" in err
    code, _, err = run_cli(capsys, ["bc", "--fixture", "d4-torus",
                                    "--group", "builtin:cyclic:2"])
    assert code == 1 and "cannot be combined" in err
    code, _, err = run_cli(capsys, ["orbits"])
    assert code == 1 and "needs a group action" in err
    code, _, err = run_cli(capsys, ["betti", "--group", "builtin:cyclic:2"])
    assert code == 1 and "needs a complex" in err
    code, _, err = run_cli(capsys, ["group", "--fixture", "d4-torus",
                                    "--max-order", "4"])
    assert code == 1 and "BoundExceeded" in err
    code, _, err = run_cli(capsys, ["fixed", "Q", "--fixture", "z2-circle"])
    assert code == 1 and "NotAGroup" in err
    code, _, err = run_cli(capsys, ["no-such-command"])
    assert code == 1
    code, _, err = run_cli(capsys, [])
    assert code == 1


def test_group_file_loading(capsys, tmp_path):
    path = tmp_path / "group.txt"
    path.write_text("group 2\ntable\n0 1\n1 0\n")
    code, out, _ = run_cli(capsys, ["group", "--group", str(path),
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["order"] == 2
    code, _, err = run_cli(capsys, ["group", "--group",
                                    str(tmp_path / "missing.txt")])
    assert code == 1 and "cannot read" in err
