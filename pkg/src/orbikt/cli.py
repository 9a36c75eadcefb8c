"""Command-line front end.

One batch run per invocation: inputs are resolved (fixture name, or group and
complex files), the requested command dispatches to a library operation, and
the result is printed as an aligned table or as a single json document with
top-level keys ``meta``, ``payload``, ``flags``.  The json output is
byte-identical across runs for identical inputs (sorted keys, canonical
integers, no timestamps).

Exit status: 0 on success, 1 on input errors, 2 when a mathematical
precondition of the requested computation fails (refusals such as
NotIsolated, NotApplicable, NotOpen).
"""

import argparse
import json
import sys

from .characters import character_table
from .complexes import (fixed_subcomplex, orbits_and_stabilizers,
                        quotient_complex)
from .crossed import (aggregate_strata, fiber_decomposition,
                      filtration_report, ix_nodes, specialization)
from .errors import BadAction, BoundExceeded, OrbiktError, ParseError
from .fixtures import FIXTURE_NAMES, fixture as build_fixture
from .formats import (parse_action_text, parse_builtin_spec,
                      parse_complex_text, parse_filtration_text,
                      parse_group_text, serialize_bundle, split_bundle_text)
from .groups import conjugacy_data
from .homology import euler_characteristic, homology_integral
from .ktheory import (bc_cross_check, bc_decomposition, bc_vs_count_identity,
                      equivariant_euler, euler_quotient_check,
                      isolated_k_theory)

FORMAT_VERSION = 1

# Published values that the implementation knowingly contradicts; the
# ktheory command flags the disagreement instead of silently differing.
PUBLISHED_DISCREPANCIES = {
    "z4-torus": {"example": "ex-sphere", "published_k0_rank": 8},
}


class _Parser(argparse.ArgumentParser):
    """Argument errors are input errors (exit 1), not refusals (exit 2)."""

    def error(self, message):
        raise ParseError(message)


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", metavar="FILE|builtin:SPEC",
                        help="group file, or builtin:cyclic:N, "
                             "builtin:dihedral:N, builtin:product:A:B, "
                             "builtin:trivial")
    common.add_argument("--complex", metavar="FILE", dest="complex_file",
                        help="complex file; may also carry act lines and an "
                             "embedded group section")
    common.add_argument("--fixture", choices=FIXTURE_NAMES, metavar="NAME",
                        help="built-in example: one of %s" %
                             ", ".join(FIXTURE_NAMES))
    common.add_argument("--format", choices=("table", "json"),
                        default="table")
    common.add_argument("--max-order", type=int, default=512, metavar="N",
                        help="refuse groups larger than N (default 512)")
    common.add_argument("--no-subdivide", action="store_true",
                        help="forbid automatic barycentric subdivision when "
                             "forming quotients")

    parser = _Parser(prog="orbikt",
                     description="Exact invariants of finite group actions "
                                 "on simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="COMMAND")

    sub.add_parser("group", parents=[common],
                   help="conjugacy classes and character table")
    sub.add_parser("complex", parents=[common],
                   help="face counts and Euler characteristic")
    sub.add_parser("orbits", parents=[common],
                   help="simplex orbits with stabilizers")
    p = sub.add_parser("fixed", parents=[common],
                       help="fixed-point subcomplex of the listed elements")
    p.add_argument("elements", nargs="+", metavar="ELT",
                   help="group elements by name or index")
    sub.add_parser("quotient", parents=[common],
                   help="orbit space as a simplicial complex")
    sub.add_parser("betti", parents=[common],
                   help="integral homology of the complex")
    p = sub.add_parser("euler", parents=[common],
                       help="equivariant Euler characteristic")
    p.add_argument("--method", default="bc",
                   choices=("bc", "pairs", "isolated", "quotient-check"))
    p = sub.add_parser("fiber", parents=[common],
                       help="fiber blocks of the crossed product over a "
                            "point with the given stabilizer")
    p.add_argument("generators", nargs="*", metavar="ELT",
                   help="stabilizer generators by name or index "
                        "(none = trivial subgroup)")
    p = sub.add_parser("prim", parents=[common],
                       help="primitive-ideal specialization poset")
    p.add_argument("--aggregate", action="store_true",
                   help="merge nodes along isotropy strata")
    p = sub.add_parser("filtration", parents=[common],
                       help="validate an increasing open filtration")
    p.add_argument("file", metavar="FILE",
                   help="one line per step: 'k: (stratum-id, irrep-id) ...'")
    sub.add_parser("bc", parents=[common],
                   help="localization summands by conjugacy class")
    sub.add_parser("ktheory", parents=[common],
                   help="integral K-groups in the isolated-orbit regime")
    sub.add_parser("identity-check", parents=[common],
                   help="localization totals against the orbit-count "
                        "identity for zero-dimensional fixed sets")
    p = sub.add_parser("fixture", parents=[common],
                       help="describe or export a built-in example")
    p.add_argument("name", choices=FIXTURE_NAMES, metavar="NAME")
    p.add_argument("--emit", action="store_true",
                   help="print the example as a group/complex/action "
                        "document")
    return parser


# -- input resolution ---------------------------------------------------------


class Inputs:
    """Resolved inputs for one run: at most one group, complex, action."""

    def __init__(self, group=None, complex=None, gx=None, fixture_name=None):
        self.group = group
        self.complex = complex
        self.gx = gx
        self.fixture_name = fixture_name

    def require_group(self):
        if self.group is None:
            raise ParseError("this command needs a group "
                             "(--group or --fixture)")
        return self.group

    def require_complex(self):
        if self.complex is None:
            raise ParseError("this command needs a complex "
                             "(--complex or --fixture)")
        return self.complex

    def require_action(self):
        if self.gx is None:
            raise BadAction("this command needs a group action: supply "
                            "--fixture, or a --complex file with act lines "
                            "and a group")
        return self.gx


def _read_file(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc))


def _load_group(source):
    if source.startswith("builtin:"):
        return parse_builtin_spec(source[len("builtin:"):])
    return parse_group_text(_read_file(source))


def resolve_inputs(args) -> Inputs:
    if args.fixture:
        if args.group or args.complex_file:
            raise ParseError("--fixture cannot be combined with --group "
                             "or --complex")
        gx = build_fixture(args.fixture)
        _check_order(gx.group, args)
        return Inputs(group=gx.group, complex=gx.complex, gx=gx,
                      fixture_name=args.fixture)

    group = _load_group(args.group) if args.group else None
    complex = None
    action_text = None
    if args.complex_file:
        sections = split_bundle_text(_read_file(args.complex_file))
        if sections["complex"] is None:
            raise ParseError("%s contains no complex section"
                             % args.complex_file)
        complex = parse_complex_text(sections["complex"])
        action_text = sections["action"]
        if sections["group"] is not None:
            if group is not None:
                raise ParseError("group given both via --group and inside "
                                 "the complex file")
            group = parse_group_text(sections["group"])
    if group is not None:
        _check_order(group, args)
    gx = None
    if action_text is not None:
        if group is None:
            raise ParseError("action lines need a group (--group or an "
                             "embedded group section)")
        gx = parse_action_text(action_text, group, complex)
    return Inputs(group=group, complex=complex, gx=gx)


def _check_order(group, args):
    if args.max_order is not None and group.order > args.max_order:
        raise BoundExceeded("group order %d exceeds --max-order %d"
                            % (group.order, args.max_order))


# -- command payloads -----------------------------------------------------------


def _homology_payload(complex):
    hom = homology_integral(complex)
    return {
        "f_vector": list(complex.f_vector()),
        "betti": list(hom.betti),
        "torsion": [list(t) for t in hom.torsion],
        "euler": euler_characteristic(complex),
    }


def _cmd_group(inputs, args):
    group = inputs.require_group()
    cd = conjugacy_data(group)
    table = character_table(group)
    classes = [{"index": i, "rep": group.name_of(rep), "size": len(members)}
               for i, (rep, members) in enumerate(zip(cd.reps, cd.classes))]
    irreps = [{"id": rid, "degree": d, "values": [str(v) for v in values]}
              for rid, d, values in table.irreps]
    payload = {
        "order": group.order,
        "exponent": group.exponent(),
        "abelian": group.is_abelian,
        "classes": classes,
        "irreps": irreps,
        "conductor": table.conductor,
    }
    return payload, []


def _cmd_complex(inputs, args):
    complex = inputs.require_complex()
    payload = {
        "vertices": complex.vertex_count,
        "dimension": complex.dimension,
        "f_vector": list(complex.f_vector()),
        "euler": euler_characteristic(complex),
        "maximal_simplices": len(complex.maximal_simplices()),
    }
    return payload, []


def _cmd_orbits(inputs, args):
    gx = inputs.require_action()
    od = orbits_and_stabilizers(gx)
    group = gx.group
    rows = []
    for i, (rep, members, stab, _tr) in enumerate(od.orbits):
        rows.append({
            "id": i,
            "dim": len(rep) - 1,
            "rep": list(rep),
            "size": len(members),
            "stabilizer_order": stab.order,
            "stabilizer": [group.name_of(g) for g in stab.elements],
        })
    return {"orbits": rows, "orbit_count": len(rows)}, []


def _cmd_fixed(inputs, args):
    gx = inputs.require_action()
    group = gx.group
    elements = [group.element_index(tok) for tok in args.elements]
    fixed = fixed_subcomplex(gx, elements)
    payload = {"elements": [group.name_of(g) for g in elements]}
    payload.update(_homology_payload(fixed.complex))
    payload["vertex_embedding"] = list(fixed.vertex_embedding)
    return payload, []


def _cmd_quotient(inputs, args):
    gx = inputs.require_action()
    quotient = quotient_complex(gx, allow_subdivide=not args.no_subdivide)
    payload = {"subdivisions": quotient.subdivisions}
    payload.update(_homology_payload(quotient.complex))
    return payload, []


def _cmd_betti(inputs, args):
    return _homology_payload(inputs.require_complex()), []


def _cmd_euler(inputs, args):
    gx = inputs.require_action()
    flags = []
    if args.method == "quotient-check":
        check = euler_quotient_check(gx,
                                     allow_subdivide=not args.no_subdivide)
        payload = {
            "method": args.method,
            "quotient_euler": check.lhs,
            "class_average": str(check.rhs),
            "equal": check.equal,
            "integral": check.integral,
        }
        if not check.integral:
            flags.append({"type": "non-integral-average",
                          "value": str(check.rhs)})
        return payload, flags
    method = {"bc": "bc", "pairs": "commuting_pairs",
              "isolated": "isolated"}[args.method]
    value = equivariant_euler(gx, method,
                              allow_subdivide=not args.no_subdivide)
    return {"method": args.method, "value": value}, flags


def _cmd_fiber(inputs, args):
    group = inputs.require_group()
    gens = [group.element_index(tok) for tok in args.generators]
    sub = group.subgroup(gens)
    decomp = fiber_decomposition(group, sub)
    blocks = [{"irrep": rid, "dimension": dim, "multiplicity": mult}
              for rid, dim, mult in decomp.blocks]
    payload = {
        "generators": [group.name_of(g) for g in gens],
        "stabilizer_order": sub.order,
        "stabilizer": [group.name_of(g) for g in sub.elements],
        "index": group.order // sub.order,
        "blocks": blocks,
    }
    return payload, []


def _prim_poset(gx, aggregate):
    poset = specialization(gx)
    if aggregate:
        poset = aggregate_strata(poset, gx)
    return poset


def _cmd_prim(inputs, args):
    gx = inputs.require_action()
    poset = _prim_poset(gx, args.aggregate)
    site = "stratum" if args.aggregate else "orbit"
    nodes = []
    for i, node in enumerate(poset.nodes):
        nodes.append({
            "index": i,
            site: node.orbit_id,
            "irrep": node.irrep_id,
            "stabilizer_order": poset.stabilizer_orders[i],
            "degree": poset.irrep_degrees[i],
        })
    payload = {
        "aggregated": bool(args.aggregate),
        "nodes": nodes,
        "relation": [[a, b] for a, b in poset.relation_pairs()],
        "ix": ix_nodes(poset),
    }
    return payload, []


def _cmd_filtration(inputs, args):
    gx = inputs.require_action()
    steps = parse_filtration_text(_read_file(args.file))
    poset = _prim_poset(gx, aggregate=True)
    report = filtration_report(poset, gx, steps)
    out_steps = []
    for k, detail in enumerate(report.steps):
        out_steps.append({
            "step": k + 1,
            "added": [list(key) for key, _d, _b in detail],
            "count": report.step_counts[k],
            "cumulative": report.cumulative_counts[k],
            "blocks": [{"node": list(key), "degree": d, "block_dimension": b}
                       for key, d, b in detail],
        })
    payload = {
        "valid": True,
        "steps": out_steps,
        "node_total": report.cumulative_counts[-1],
    }
    return payload, []


def _bc_payload(gx, allow_subdivide=True):
    decomp = bc_decomposition(gx, allow_subdivide=allow_subdivide)
    group = gx.group
    per_class = [{"class": idx, "rep": group.name_of(rep),
                  "even": kr.even, "odd": kr.odd}
                 for idx, rep, _q, kr in decomp.per_class]
    return decomp, {
        "per_class": per_class,
        "totals": {"even": decomp.totals.even, "odd": decomp.totals.odd},
    }


def _cmd_bc(inputs, args):
    gx = inputs.require_action()
    _decomp, payload = _bc_payload(gx, not args.no_subdivide)
    return payload, []


def _cmd_ktheory(inputs, args):
    gx = inputs.require_action()
    result = isolated_k_theory(gx, allow_subdivide=not args.no_subdivide)
    bc_cross_check(gx, result)
    _decomp, bc_payload = _bc_payload(gx, not args.no_subdivide)
    group = gx.group
    od = orbits_and_stabilizers(gx)

    def k_group(pair):
        rank, torsion = pair
        return {"rank": rank,
                "torsion": None if torsion is None else list(torsion)}

    payload = dict(bc_payload)
    payload.update({
        "k0": k_group(result.k0),
        "k1": k_group(result.k1),
        "quotient_k0": k_group(result.quotient_k0),
        "quotient_k1": k_group(result.quotient_k1),
        "boundary_status": result.boundary_status,
        "dimension_capped": result.dimension_capped,
        "singular_orbits": [
            {"orbit": i, "rep": list(od.rep(i)),
             "stabilizer": [group.name_of(g)
                            for g in od.stabilizer(i).elements],
             "extra_rank": extra}
            for i, _stab, extra in result.singular_orbits
        ],
        "torsion_bounds": [{"orbit": i, "bound": bound}
                           for i, bound in result.torsion_bounds],
    })
    flags = []
    known = PUBLISHED_DISCREPANCIES.get(inputs.fixture_name)
    if known is not None and known["published_k0_rank"] != result.k0[0]:
        flags.append({
            "type": "paper-discrepancy",
            "example": known["example"],
            "published_k0_rank": known["published_k0_rank"],
            "computed_k0_rank": result.k0[0],
        })
    return payload, flags


def _cmd_identity_check(inputs, args):
    gx = inputs.require_action()
    identity = bc_vs_count_identity(gx,
                                    allow_subdivide=not args.no_subdivide)
    payload = {"vertex_count_sum": identity.lhs,
               "euler_difference": identity.rhs,
               "equal": identity.lhs == identity.rhs}
    return payload, []


def _cmd_fixture(inputs, args):
    gx = inputs.gx
    if args.emit:
        return {"_raw": serialize_bundle(gx)}, []
    payload = {
        "name": inputs.fixture_name,
        "group_order": gx.group.order,
        "f_vector": list(gx.complex.f_vector()),
        "dimension": gx.complex.dimension,
        "admissible": gx.is_admissible(),
    }
    return payload, []


_HANDLERS = {
    "group": _cmd_group,
    "complex": _cmd_complex,
    "orbits": _cmd_orbits,
    "fixed": _cmd_fixed,
    "quotient": _cmd_quotient,
    "betti": _cmd_betti,
    "euler": _cmd_euler,
    "fiber": _cmd_fiber,
    "prim": _cmd_prim,
    "filtration": _cmd_filtration,
    "bc": _cmd_bc,
    "ktheory": _cmd_ktheory,
    "identity-check": _cmd_identity_check,
    "fixture": _cmd_fixture,
}


# -- rendering -------------------------------------------------------------------


def _meta(inputs, args):
    meta = {"command": args.command, "format_version": FORMAT_VERSION,
            "deterministic": True}
    if inputs.fixture_name:
        meta["fixture"] = inputs.fixture_name
    if inputs.group is not None:
        meta["group_order"] = inputs.group.order
    if inputs.complex is not None:
        meta["f_vector"] = list(inputs.complex.f_vector())
    if args.no_subdivide:
        meta["subdivision"] = "forbidden"
    return meta


def report_json(meta, payload, flags) -> str:
    doc = {"meta": meta, "payload": payload, "flags": flags}
    return json.dumps(doc, sort_keys=True, indent=2)


def _table_lines(value, indent=""):
    lines = []
    if isinstance(value, dict):
        for key in value:
            item = value[key]
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append("%s%s:" % (indent, key))
                lines.extend(_table_lines(item, indent + "  "))
            else:
                lines.append("%s%s: %s" % (indent, key, _flat(item)))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append("%s-" % indent)
                lines.extend(_table_lines(item, indent + "  "))
            else:
                lines.append("%s- %s" % (indent, _flat(item)))
    else:
        lines.append("%s%s" % (indent, _flat(value)))
    return lines


def _is_flat(value):
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value):
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def _k_text(entry):
    rank, torsion = entry["rank"], entry["torsion"]
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append("Z^%d" % rank)
    for t in torsion or ():
        parts.append("Z/%d" % t)
    return " + ".join(parts) if parts else "0"


def render_table(command, payload, flags) -> str:
    lines = []
    if command == "bc":
        for row in payload["per_class"]:
            lines.append("class [%s]: K0 rank %d, K1 rank %d"
                         % (row["rep"], row["even"], row["odd"]))
        totals = payload["totals"]
        lines.append("totals: K0 rank %d, K1 rank %d"
                     % (totals["even"], totals["odd"]))
    elif command == "ktheory":
        lines.append("K0 = %s, K1 = %s"
                     % (_k_text(payload["k0"]), _k_text(payload["k1"])))
        lines.append("boundary map: %s" % payload["boundary_status"])
        for row in payload["per_class"]:
            lines.append("class [%s]: K0 rank %d, K1 rank %d"
                         % (row["rep"], row["even"], row["odd"]))
        totals = payload["totals"]
        lines.append("totals: K0 rank %d, K1 rank %d"
                     % (totals["even"], totals["odd"]))
    elif command == "prim":
        lines.append("nodes: %d" % len(payload["nodes"]))
        lines.extend(_table_lines(payload["nodes"]))
        lines.append("relation pairs: %d" % len(payload["relation"]))
        lines.append("ix: %s (size %d, open)"
                     % (_flat(payload["ix"]), len(payload["ix"])))
    else:
        lines.extend(_table_lines(payload))
    for flag in flags:
        lines.append("flag %s: %s"
                     % (flag.get("type", "?"),
                        ", ".join("%s=%s" % (k, flag[k])
                                  for k in sorted(flag) if k != "type")))
    return "\n".join(lines)


# -- entry point -----------------------------------------------------------------


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "fixture":
        gx = build_fixture(args.name)
        inputs = Inputs(group=gx.group, complex=gx.complex, gx=gx,
                        fixture_name=args.name)
    else:
        inputs = resolve_inputs(args)
    payload, flags = _HANDLERS[args.command](inputs, args)
    if "_raw" in payload:
        sys.stdout.write(payload["_raw"])
        return 0
    if args.format == "json":
        print(report_json(_meta(inputs, args), payload, flags))
    else:
        print(render_table(args.command, payload, flags))
    return 0


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except OrbiktError as exc:
        print("orbikt: %s: %s" % (exc.kind, exc), file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
