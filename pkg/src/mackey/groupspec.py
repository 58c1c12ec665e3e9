"""Tiny textual group descriptions for the CLI and test fixtures.

Accepted forms:

    triv                 trivial group on one point
    S<n>, A<n>           symmetric / alternating on n points
    C<n>, D<n>           cyclic / dihedral of order n resp. 2n
    Q8                   quaternions (regular representation)
    wreath:<n>[<body>]   S_n | body
    prod:<a>,<b>         direct product a x b
    perm:<gens>          explicit generators, cycles per generator,
                         generators split on ';', e.g.
                         perm:(0 1 2)(3 4);(0 1)

Whitespace around tokens is ignored.  Raises GroupSpecError on junk.
"""

from __future__ import annotations

import re

from .perm import PermGroup, direct_product, from_cycles
from .wreath import WreathGroup


class GroupSpecError(ValueError):
    pass


_NAMED = re.compile(r"^([SACDQ])(\d+)$")


def parse_group(text, bound=None):
    """Build the group a description names.

    Returns a PermGroup except for wreath bodies too large to
    enumerate, where a WreathGroup is returned instead.
    """
    g = _parse(text.strip(), bound)
    return g


def _parse(text, bound):
    if text == "triv":
        return PermGroup.trivial(1)
    m = _NAMED.match(text)
    if m:
        kind, num = m.group(1), int(m.group(2))
        if kind == "S":
            return PermGroup.symmetric(num)
        if kind == "A":
            return PermGroup.alternating(num)
        if kind == "C":
            return PermGroup.cyclic(num)
        if kind == "D":
            return PermGroup.dihedral(num)
        if kind == "Q":
            if num != 8:
                raise GroupSpecError("only Q8 is available")
            return PermGroup.quaternion()
    if text.startswith("wreath:"):
        rest = text[len("wreath:"):]
        m = re.match(r"^(\d+)\[(.*)\]$", rest)
        if not m:
            raise GroupSpecError("wreath wants wreath:<n>[<body>]: %r" % text)
        n = int(m.group(1))
        body = _parse(m.group(2).strip(), bound)
        wg = WreathGroup(n, body)
        from .perm import DEFAULT_ORDER_BOUND

        limit = bound if bound is not None else DEFAULT_ORDER_BOUND
        if wg.order <= limit:
            return wg.to_permgroup(limit)
        return wg
    if text.startswith("prod:"):
        parts = _split_top(text[len("prod:"):])
        if len(parts) < 2:
            raise GroupSpecError("prod wants at least two factors: %r" % text)
        gs = [_parse(p.strip(), bound) for p in parts]
        out = gs[0]
        for g in gs[1:]:
            out = direct_product(out, g)[0]
        return out
    if text.startswith("perm:"):
        return _parse_perm(text[len("perm:"):])
    raise GroupSpecError("unrecognized group description: %r" % text)


def _split_top(text):
    """Split on commas not nested inside brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


_CYCLE = re.compile(r"\(([^()]*)\)")


def _parse_perm(text):
    gen_texts = [t.strip() for t in text.split(";") if t.strip()]
    if not gen_texts:
        raise GroupSpecError("perm wants at least one generator")
    raw = []
    degree = 1
    for gt in gen_texts:
        cycles = []
        rest = _CYCLE.sub("", gt).strip()
        if rest:
            raise GroupSpecError("junk outside cycles: %r" % gt)
        for body in _CYCLE.findall(gt):
            pts = [int(p) for p in re.split(r"[,\s]+", body.strip()) if p]
            if len(pts) != len(set(pts)):
                raise GroupSpecError("repeated point in cycle: %r" % body)
            cycles.append(tuple(pts))
            for p in pts:
                degree = max(degree, p + 1)
        raw.append(cycles)
    gens = [from_cycles(degree, cycles) for cycles in raw]
    return PermGroup(gens, degree=degree)
