"""Text file formats for groups, complexes, actions, and filtrations.

All formats are line-oriented: blank lines and lines starting with ``#`` are
ignored, tokens are whitespace-separated.

Group file::

    group <n>
    table            # followed by n rows of n element indices
    ...
    group <n>
    perm <k>         # followed by generator lines, each a permutation of
    ...              # 0..k-1 in image notation; the expansion must have
                     # exactly n elements

Builtin group specs (CLI ``--group builtin:...``)::

    trivial | cyclic:<n> | dihedral:<n> | product:<spec>:<spec>

Complex file::

    vertices <n>
    simplex v0 v1 ... vk     # maximal simplices; the closure is computed

Action file (one line per generator; the remaining group elements are
derived through the multiplication table and cross-checked)::

    act <group-element-index> : <vertex permutation in image notation>

Filtration file (one line per step, 1-based increasing step labels; each
line lists the (stratum-id, irrep-id) pairs ADDED at that step)::

    1: (0, 0) (1, 0)
    2: (0, 1)
"""

import re

from .complexes import GSimplicialComplex, SimplicialComplex
from .errors import BadAction, NotAGroup, ParseError
from .groups import (FiniteGroup, cyclic_group, dihedral_group,
                     group_from_permutations, product_group, trivial_group)


def _content_lines(text):
    """Split into (lineno, stripped content) pairs, dropping blanks/comments."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def _int_token(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError("line %d: %s must be an integer, got %r"
                         % (lineno, what, token))


# -- groups --------------------------------------------------------------------


def parse_group_text(text) -> FiniteGroup:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty group file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "group":
        raise ParseError("line %d: expected header 'group <n>'" % lineno)
    n = _int_token(parts[1], lineno, "group order")
    if n < 1:
        raise ParseError("line %d: group order must be positive" % lineno)
    if len(lines) < 2:
        raise ParseError("group file ends after the header")
    lineno, mode_line = lines[1]
    mode = mode_line.split()
    body = lines[2:]

    if mode[0] == "table":
        if len(mode) != 1:
            raise ParseError("line %d: 'table' takes no arguments" % lineno)
        if len(body) != n:
            raise ParseError("expected %d table rows, found %d"
                             % (n, len(body)))
        table = []
        for row_lineno, row_line in body:
            row = [_int_token(tok, row_lineno, "table entry")
                   for tok in row_line.split()]
            if len(row) != n:
                raise ParseError("line %d: expected %d entries in table row"
                                 % (row_lineno, n))
            table.append(row)
        return FiniteGroup(table)

    if mode[0] == "perm":
        if len(mode) != 2:
            raise ParseError("line %d: expected 'perm <k>'" % lineno)
        degree = _int_token(mode[1], lineno, "permutation degree")
        if degree < 1:
            raise ParseError("line %d: permutation degree must be positive"
                             % lineno)
        if not body:
            raise ParseError("'perm' group file lists no generators")
        perms = []
        for row_lineno, row_line in body:
            images = [_int_token(tok, row_lineno, "image")
                      for tok in row_line.split()]
            if len(images) != degree:
                raise ParseError("line %d: expected %d images" %
                                 (row_lineno, degree))
            perms.append(tuple(images))
        group = group_from_permutations(degree, perms)
        if group.order != n:
            raise NotAGroup(
                "permutation generators produce a group of order %d, "
                "but the header declares %d" % (group.order, n))
        return group

    raise ParseError("line %d: expected 'table' or 'perm <k>', got %r"
                     % (lineno, mode[0]))


def serialize_group(group: FiniteGroup) -> str:
    lines = ["group %d" % group.order, "table"]
    for row in group.mult:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_builtin_spec(spec) -> FiniteGroup:
    """Parse a colon-separated builtin group spec such as ``cyclic:4`` or
    ``product:cyclic:2:dihedral:3`` (prefix notation, consumed recursively)."""
    tokens = [t for t in spec.split(":") if t != ""]
    if not tokens:
        raise ParseError("empty builtin group spec")

    def consume(pos):
        if pos >= len(tokens):
            raise ParseError("builtin spec %r ends mid-expression" % spec)
        head = tokens[pos]
        if head == "trivial":
            return trivial_group(), pos + 1
        if head in ("cyclic", "dihedral"):
            if pos + 1 >= len(tokens):
                raise ParseError("builtin spec %r: %s needs a parameter"
                                 % (spec, head))
            n = _int_token(tokens[pos + 1], 0, "%s parameter" % head)
            maker = cyclic_group if head == "cyclic" else dihedral_group
            return maker(n), pos + 2
        if head == "product":
            left, pos = consume(pos + 1)
            right, pos = consume(pos)
            return product_group(left, right), pos
        raise ParseError("unknown builtin group %r (expected trivial, "
                         "cyclic, dihedral, or product)" % head)

    group, end = consume(0)
    if end != len(tokens):
        raise ParseError("builtin spec %r has trailing tokens %r"
                         % (spec, ":".join(tokens[end:])))
    return group


# -- complexes -------------------------------------------------------------------


def parse_complex_text(text) -> SimplicialComplex:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty complex file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "vertices":
        raise ParseError("line %d: expected header 'vertices <n>'" % lineno)
    n = _int_token(parts[1], lineno, "vertex count")
    maximal = []
    for row_lineno, row_line in lines[1:]:
        parts = row_line.split()
        if parts[0] != "simplex":
            raise ParseError("line %d: expected 'simplex v0 v1 ...'"
                             % row_lineno)
        simplex = [_int_token(tok, row_lineno, "vertex") for tok in parts[1:]]
        if not simplex:
            raise ParseError("line %d: empty simplex" % row_lineno)
        maximal.append(tuple(simplex))
    return SimplicialComplex(n, maximal)


def serialize_complex(complex: SimplicialComplex) -> str:
    lines = ["vertices %d" % complex.vertex_count]
    for simplex in sorted(complex.maximal_simplices()):
        lines.append("simplex " + " ".join(str(v) for v in simplex))
    return "\n".join(lines) + "\n"


# -- actions ---------------------------------------------------------------------


def parse_action_text(text, group: FiniteGroup,
                      complex: SimplicialComplex) -> GSimplicialComplex:
    """Parse generator action lines and extend to the whole group.

    The listed elements together with the identity must generate the group;
    every derived permutation is cross-checked against any explicit line for
    the same element.
    """
    n = complex.vertex_count
    known = {group.identity: tuple(range(n))}
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty action file")
    for lineno, line in lines:
        match = re.fullmatch(r"act\s+(\d+)\s*:\s*(.*)", line)
        if not match:
            raise ParseError(
                "line %d: expected 'act <element-index> : <images>'" % lineno)
        g = int(match.group(1))
        if not 0 <= g < group.order:
            raise BadAction("line %d: element index %d out of range"
                            % (lineno, g))
        images = [_int_token(tok, lineno, "vertex image")
                  for tok in match.group(2).split()]
        if sorted(images) != list(range(n)):
            raise BadAction(
                "line %d: images are not a permutation of 0..%d"
                % (lineno, n - 1))
        perm = tuple(images)
        if g in known and known[g] != perm:
            raise BadAction("line %d: conflicting permutations for element %s"
                            % (lineno, group.name_of(g)))
        known[g] = perm

    # Close under multiplication: act(a*b) = act(a) o act(b).
    changed = True
    while changed:
        changed = False
        for a in list(known):
            pa = known[a]
            for b in list(known):
                pb = known[b]
                c = group.mult[a][b]
                pc = tuple(pa[pb[v]] for v in range(n))
                if c in known:
                    if known[c] != pc:
                        raise BadAction(
                            "action file is inconsistent with the group "
                            "table at element %s" % group.name_of(c))
                else:
                    known[c] = pc
                    changed = True
    if len(known) != group.order:
        missing = next(g for g in range(group.order) if g not in known)
        raise BadAction(
            "action file elements do not generate the group "
            "(element %s is unreachable)" % group.name_of(missing))
    vertex_action = [known[g] for g in range(group.order)]
    return GSimplicialComplex(complex, group, vertex_action)


def serialize_action(gx: GSimplicialComplex) -> str:
    """One ``act`` line per non-identity element (a generating set that makes
    re-parsing verify every entry against the group table)."""
    lines = []
    for g in range(gx.group.order):
        if g == gx.group.identity:
            continue
        images = " ".join(str(v) for v in gx.vertex_action[g])
        lines.append("act %d : %s" % (g, images))
    if not lines:  # trivial group: record the identity explicitly
        images = " ".join(str(v) for v in gx.vertex_action[gx.group.identity])
        lines.append("act %d : %s" % (gx.group.identity, images))
    return "\n".join(lines) + "\n"


# -- combined documents -----------------------------------------------------------


def split_bundle_text(text):
    """Split a document that may interleave group, complex, and action
    sections into their raw texts.

    Complex lines start with ``vertices``/``simplex``, action lines with
    ``act``; everything else (``group``, ``table``, ``perm``, bare numeric
    rows) belongs to the group section.  Returns a dict with keys 'group',
    'complex', 'action' mapping to text or None.
    """
    group_lines, complex_lines, action_lines = [], [], []
    for lineno, line in _content_lines(text):
        head = line.split()[0]
        if head in ("vertices", "simplex"):
            complex_lines.append(line)
        elif head == "act":
            action_lines.append(line)
        elif head in ("group", "table", "perm") or _is_numeric_row(line):
            group_lines.append(line)
        else:
            raise ParseError("line %d: unrecognized directive %r"
                             % (lineno, head))
    return {
        "group": "\n".join(group_lines) + "\n" if group_lines else None,
        "complex": "\n".join(complex_lines) + "\n" if complex_lines else None,
        "action": "\n".join(action_lines) + "\n" if action_lines else None,
    }


def _is_numeric_row(line):
    try:
        for tok in line.split():
            int(tok)
    except ValueError:
        return False
    return True


def serialize_bundle(gx: GSimplicialComplex) -> str:
    """One self-contained document: group, complex, and action sections."""
    return ("# group\n" + serialize_group(gx.group)
            + "# complex\n" + serialize_complex(gx.complex)
            + "# action\n" + serialize_action(gx))


def parse_bundle_text(text) -> GSimplicialComplex:
    sections = split_bundle_text(text)
    if sections["group"] is None:
        raise ParseError("bundle document lacks a group section")
    if sections["complex"] is None:
        raise ParseError("bundle document lacks a complex section")
    if sections["action"] is None:
        raise ParseError("bundle document lacks action lines")
    group = parse_group_text(sections["group"])
    complex = parse_complex_text(sections["complex"])
    return parse_action_text(sections["action"], group, complex)


# -- filtrations ----------------------------------------------------------------

_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_filtration_text(text):
    """Return a list of steps, each a list of (stratum-id, irrep-id) pairs
    added at that step. Step labels must be 1, 2, 3, ... in order."""
    steps = []
    for lineno, line in _content_lines(text):
        label, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(
                "line %d: expected 'step: (stratum-id, irrep-id) ...'"
                % lineno)
        step_no = _int_token(label.strip(), lineno, "step label")
        if step_no != len(steps) + 1:
            raise ParseError("line %d: step labels must be 1, 2, ... in "
                             "order (got %d)" % (lineno, step_no))
        pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(rest)]
        leftover = _PAIR_RE.sub("", rest).strip()
        if leftover:
            raise ParseError("line %d: unparsable text %r in step"
                             % (lineno, leftover))
        if not pairs:
            raise ParseError("line %d: step adds no nodes" % lineno)
        steps.append(pairs)
    if not steps:
        raise ParseError("empty filtration file")
    return steps


def serialize_filtration(steps) -> str:
    lines = []
    for i, pairs in enumerate(steps, start=1):
        body = " ".join("(%d, %d)" % (a, b) for a, b in pairs)
        lines.append("%d: %s" % (i, body))
    return "\n".join(lines) + "\n"
