"""Framed oriented link diagrams at semiarc granularity.

A diagram is a list of signed crossings over semiarc ids 0..E-1.  Each
crossing names the four semiarcs meeting it: the over strand enters at
over_in and leaves at over_out, the under strand at under_in/under_out.
Every semiarc ends at exactly one crossing slot and starts at exactly one,
so the successor relation (in-slot to out-slot of the same strand) is a
permutation whose orbits are the link components.  Zero-crossing components
(free loops) are single semiarcs that succeed themselves.

Virtual crossings are never represented: a virtual crossing does not split
semiarcs, so codes for virtual links enter through their classical
crossings alone.

Crossing geometry is fixed once, here, with both strands drawn upward:

  positive: the over strand runs lower-left to upper-right, and the labels
            satisfy o_out = alpha_{u_out}(o_in), u_in = beta_{o_in}(u_out);
  negative: the mirror image, o_in = alpha_{u_in}(o_out),
            u_out = beta_{o_out}(u_in).

Equivalently the sideways map eats the left-edge pair and emits the right
pair.  Kink insertion uses one canonical positive curl: the lowest-id
semiarc s of the component is cut into s -> (over) -> loop -> (under) -> s',
which forces the label to change by the kink map across the curl.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import (
    BadSign,
    DanglingSemiarc,
    DuplicateEndpoint,
    SignMismatch,
    UnmatchedCrossingLabel,
)


class Crossing(NamedTuple):
    sign: int
    over_in: int
    over_out: int
    under_in: int
    under_out: int


@dataclass(frozen=True)
class LinkDiagram:
    """Immutable diagram; build with from_crossings or one of the parsers."""

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    semiarc_component: tuple[int, ...]
    framing: tuple[int, ...]

    @property
    def semiarc_count(self) -> int:
        return len(self.semiarc_component)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @cached_property
    def free_loop_semiarcs(self) -> tuple[int, ...]:
        used = set()
        for c in self.crossings:
            used.update((c.over_in, c.over_out, c.under_in, c.under_out))
        return tuple(s for s in range(self.semiarc_count) if s not in used)

    @cached_property
    def _successor(self) -> tuple[int, ...]:
        succ = [None] * self.semiarc_count
        for c in self.crossings:
            succ[c.over_in] = c.over_out
            succ[c.under_in] = c.under_out
        for s in self.free_loop_semiarcs:
            succ[s] = s
        return tuple(succ)

    @cached_property
    def _head_slot(self) -> tuple:
        """For each semiarc, (crossing index, 'over'|'under') where it ends."""
        head = [None] * self.semiarc_count
        for i, c in enumerate(self.crossings):
            head[c.over_in] = (i, "over")
            head[c.under_in] = (i, "under")
        return tuple(head)

    def successor(self, s: int) -> int:
        return self._successor[s]

    def component_of(self, s: int) -> int:
        return self.semiarc_component[s]

    def __repr__(self):
        return (f"LinkDiagram({len(self.crossings)} crossings, "
                f"{self.component_count} components, framing={self.framing})")


def from_crossings(crossings, free_loops=()) -> LinkDiagram:
    """Validate a crossing list and derive components and framing.

    free_loops lists the semiarc ids of zero-crossing components.  Semiarc
    ids must cover 0..E-1 with each id used exactly once as an in and once
    as an out endpoint.
    """
    cleaned = []
    for c in crossings:
        sign, o_in, o_out, u_in, u_out = c
        if sign not in (1, -1):
            raise BadSign(sign)
        cleaned.append(Crossing(int(sign), int(o_in), int(o_out),
                                int(u_in), int(u_out)))
    free_loops = tuple(int(s) for s in free_loops)

    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    for s in free_loops:
        if s in ins:
            raise DuplicateEndpoint(s, "in")
        ins[s] = outs[s] = 1
    for c in cleaned:
        for s in (c.over_in, c.under_in):
            if s in ins:
                raise DuplicateEndpoint(s, "in")
            ins[s] = 1
        for s in (c.over_out, c.under_out):
            if s in outs:
                raise DuplicateEndpoint(s, "out")
            outs[s] = 1

    mentioned = set(ins) | set(outs)
    if not mentioned:
        raise ValueError("diagram has no semiarcs; declare at least a free loop")
    count = max(mentioned) + 1
    for s in range(count):
        if s not in ins:
            raise DanglingSemiarc(s, "in")
        if s not in outs:
            raise DanglingSemiarc(s, "out")

    succ = [None] * count
    for c in cleaned:
        succ[c.over_in] = c.over_out
        succ[c.under_in] = c.under_out
    for s in free_loops:
        succ[s] = s

    component_of = [None] * count
    components = []
    for start in range(count):
        if component_of[start] is not None:
            continue
        orbit = []
        s = start
        while component_of[s] is None:
            component_of[s] = len(components)
            orbit.append(s)
            s = succ[s]
        components.append(tuple(orbit))

    framing = [0] * len(components)
    for c in cleaned:
        co = component_of[c.over_in]
        cu = component_of[c.under_in]
        if co == cu:
            framing[co] += c.sign

    return LinkDiagram(
        crossings=tuple(cleaned),
        components=tuple(components),
        semiarc_component=tuple(component_of),
        framing=tuple(framing),
    )


# -- canonical text format ----------------------------------------------


def parse_crossing_list(text: str) -> LinkDiagram:
    """Parse lines `X <sign> <o_in> <o_out> <u_in> <u_out>` and `L <semiarc>`.

    L lines declare zero-crossing components; `#` starts a comment.
    """
    crossings = []
    free_loops = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        tag = tokens[0].upper()
        if tag == "X":
            if len(tokens) != 6:
                raise ValueError(
                    f"line {lineno}: expected `X sign o_in o_out u_in u_out`")
            try:
                sign = int(tokens[1])
            except ValueError:
                raise BadSign(tokens[1]) from None
            try:
                ids = [int(t) for t in tokens[2:]]
            except ValueError:
                raise ValueError(f"line {lineno}: semiarc ids must be integers") from None
            if sign not in (1, -1):
                raise BadSign(sign)
            crossings.append(Crossing(sign, *ids))
        elif tag == "L":
            if len(tokens) != 2:
                raise ValueError(f"line {lineno}: expected `L semiarc`")
            free_loops.append(int(tokens[1]))
        else:
            raise ValueError(f"line {lineno}: unknown record {tokens[0]!r}")
    return from_crossings(crossings, free_loops)


def render_crossing_list(d: LinkDiagram) -> str:
    lines = [
        f"X {c.sign:+d} {c.over_in} {c.over_out} {c.under_in} {c.under_out}"
        for c in d.crossings
    ]
    lines.extend(f"L {s}" for s in d.free_loop_semiarcs)
    return "\n".join(lines) + "\n"


# -- signed Gauss codes --------------------------------------------------

_GAUSS_TOKEN = re.compile(r"([OUou])\s*(\d+)\s*([+-])")


def parse_gauss(text: str) -> LinkDiagram:
    """Parse one signed Gauss code component per nonempty line.

    Tokens are O<k>+ / U<k>- etc.; each crossing label k must occur exactly
    once as O and once as U, with equal signs.  Semiarcs are the gaps
    between consecutive tokens of a component, numbered along orientation.
    """
    component_tokens = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = _GAUSS_TOKEN.findall(body)
        stripped = _GAUSS_TOKEN.sub("", body).strip()
        if stripped or not tokens:
            raise ValueError(f"unrecognized Gauss code text: {body!r}")
        component_tokens.append(tokens)
    if not component_tokens:
        raise ValueError("empty Gauss code")

    passes: dict[int, dict] = {}
    base = 0
    for tokens in component_tokens:
        m = len(tokens)
        for j, (kind, label_str, sign_str) in enumerate(tokens):
            label = int(label_str)
            sign = 1 if sign_str == "+" else -1
            entry = passes.setdefault(label, {})
            kind = kind.upper()
            if kind in entry:
                raise UnmatchedCrossingLabel(
                    label, f"appears more than once as {kind}")
            entry[kind] = (sign, base + (j - 1) % m, base + j)
        base += m

    crossings = []
    for label in sorted(passes):
        entry = passes[label]
        if "O" not in entry or "U" not in entry:
            missing = "U" if "U" in entry else "O"
            raise UnmatchedCrossingLabel(label, f"has no {missing} pass")
        o_sign, o_in, o_out = entry["O"]
        u_sign, u_in, u_out = entry["U"]
        if o_sign != u_sign:
            raise SignMismatch(label)
        crossings.append(Crossing(o_sign, o_in, o_out, u_in, u_out))
    return from_crossings(crossings)


def render_gauss(d: LinkDiagram) -> str:
    """Write a signed Gauss code, one component per line.

    Crossings are labeled 1..c in diagram order.  Free loops cannot be
    expressed in a Gauss code.
    """
    if d.free_loop_semiarcs:
        raise ValueError("Gauss codes cannot describe zero-crossing components")
    lines = []
    for comp in d.components:
        m = len(comp)
        tokens = []
        for j in range(m):
            # token j sits between semiarcs comp[j-1] and comp[j]
            idx, strand = d._head_slot[comp[(j - 1) % m]]
            c = d.crossings[idx]
            kind = "O" if strand == "over" else "U"
            tokens.append(f"{kind}{idx + 1}{'+' if c.sign > 0 else '-'}")
        lines.append("".join(tokens))
    return "\n".join(lines) + "\n"


def canonical_relabel(d: LinkDiagram) -> LinkDiagram:
    """Renumber semiarcs along each component starting at its lowest id.

    parse_gauss(render_gauss(d)) equals canonical_relabel(d); diagrams from
    parse_gauss are already canonical.
    """
    new_id = {}
    for comp in d.components:
        for s in comp:
            new_id[s] = len(new_id)
    crossings = [
        Crossing(c.sign, new_id[c.over_in], new_id[c.over_out],
                 new_id[c.under_in], new_id[c.under_out])
        for c in d.crossings
    ]
    return from_crossings(crossings, [new_id[s] for s in d.free_loop_semiarcs])


# -- planar diagram codes ------------------------------------------------

_PD_QUAD = re.compile(
    r"[Xx]\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str) -> LinkDiagram:
    """Import a planar diagram code of X[a,b,c,d] crossings.

    Reading is counterclockwise from the incoming under-edge: the under
    strand runs a -> c, and the over strand occupies b and d.  Over-strand
    directions are recovered by propagating head/tail constraints from the
    under slots; codes whose over directions stay undetermined (closed
    all-over loops) are rejected rather than guessed.
    """
    quads = [tuple(int(v) for v in q) for q in _PD_QUAD.findall(text)]
    if not quads:
        raise ValueError("no X[a,b,c,d] crossings found")

    occurrences: dict[int, list] = {}
    for ci, (a, b, c, dd) in enumerate(quads):
        occurrences.setdefault(a, []).append((ci, "uin"))
        occurrences.setdefault(c, []).append((ci, "uout"))
        occurrences.setdefault(b, []).append((ci, "b"))
        occurrences.setdefault(dd, []).append((ci, "d"))
    for e, occ in occurrences.items():
        if len(occ) != 2:
            raise ValueError(f"edge {e} appears {len(occ)} times; expected 2")

    # bit per crossing: True when the over strand runs b -> d
    bits: dict[int, bool] = {}

    def direction(ci, kind):
        if kind == "uin":
            return "head"
        if kind == "uout":
            return "tail"
        if ci not in bits:
            return None
        if kind == "b":
            return "head" if bits[ci] else "tail"
        return "tail" if bits[ci] else "head"

    changed = True
    while changed:
        changed = False
        for e, occ in occurrences.items():
            dirs = [direction(ci, kind) for ci, kind in occ]
            if None not in dirs:
                if dirs[0] == dirs[1]:
                    raise ValueError(f"edge {e} is oriented inconsistently")
                continue
            if dirs.count(None) == 2:
                continue
            i = dirs.index(None)
            want = "tail" if dirs[1 - i] == "head" else "head"
            ci, kind = occ[i]
            bit = (want == "head") if kind == "b" else (want == "tail")
            if bits.setdefault(ci, bit) != bit:
                raise ValueError(f"edge {e} is oriented inconsistently")
            changed = True

    if len(bits) < len(quads):
        raise ValueError(
            "over-strand directions are ambiguous in this code; refusing to guess")

    ids = {e: i for i, e in enumerate(sorted(occurrences))}
    crossings = []
    for ci, (a, b, c, dd) in enumerate(quads):
        if bits[ci]:
            # over runs b -> d: over direction crosses under from its left
            crossings.append(Crossing(-1, ids[b], ids[dd], ids[a], ids[c]))
        else:
            crossings.append(Crossing(+1, ids[dd], ids[b], ids[a], ids[c]))
    return from_crossings(crossings)


# -- surgery -------------------------------------------------------------


def add_positive_kink(d: LinkDiagram, component: int) -> LinkDiagram:
    """Insert one positive curl on the lowest-id semiarc of a component.

    The semiarc s is cut into s -> loop -> s': the new crossing K is
    positive with over pass s -> loop and under pass loop -> s', and the
    crossing that used to consume s consumes s' instead.  Framing of that
    component rises by one.
    """
    if not 0 <= component < d.component_count:
        raise ValueError(f"no component {component}")
    s = min(d.components[component])
    loop = d.semiarc_count
    crossings = list(d.crossings)
    free_loops = list(d.free_loop_semiarcs)
    if s in free_loops:
        # the strand closes straight back into the kink
        free_loops.remove(s)
        crossings.append(Crossing(+1, s, loop, loop, s))
    else:
        s_new = loop + 1
        idx, strand = d._head_slot[s]
        c = d.crossings[idx]
        if strand == "over":
            crossings[idx] = c._replace(over_in=s_new)
        else:
            crossings[idx] = c._replace(under_in=s_new)
        crossings.append(Crossing(+1, s, loop, loop, s_new))
    return from_crossings(crossings, free_loops)


def reverse_component(d: LinkDiagram, component: int) -> LinkDiagram:
    """Reverse the orientation of one component.

    Each crossing strand lying on the component swaps its in and out slots;
    a crossing between the component and a different one flips sign, while
    self-crossings and crossings not involving the component keep theirs.
    """
    if not 0 <= component < d.component_count:
        raise ValueError(f"no component {component}")
    crossings = []
    for c in d.crossings:
        on_over = d.semiarc_component[c.over_in] == component
        on_under = d.semiarc_component[c.under_in] == component
        sign = -c.sign if on_over != on_under else c.sign
        o_in, o_out = (c.over_out, c.over_in) if on_over else (c.over_in, c.over_out)
        u_in, u_out = (c.under_out, c.under_in) if on_under else (c.under_in, c.under_out)
        crossings.append(Crossing(sign, o_in, o_out, u_in, u_out))
    return from_crossings(crossings, d.free_loop_semiarcs)
