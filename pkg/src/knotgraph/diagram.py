"""Combinatorial model of oriented diagrams with crossings and rigid
vertices.

A diagram is a set of 4-port nodes joined by directed arcs, plus a count
of free loops (closed strands meeting no node).  Ports are numbered
0,1,2,3 counterclockwise around the node.  The two strands through a node
pair the ports 0-2 and 1-3; at a positive crossing (kind XPos) the 0-2
strand passes over, at XNeg the 1-3 strand does.  Vert is a plain rigid
vertex, CVert a marked one.

The model is abstract in the Gauss-code sense: planarity of the induced
4-valent graph is never checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

KINDS = ("XPos", "XNeg", "Vert", "CVert")
CROSSING_KINDS = ("XPos", "XNeg")
VERTEX_KINDS = ("Vert", "CVert")

End = Tuple[str, int]          # (node id, port)
ArcT = Tuple[End, End]         # (tail, head): tail is an out-port, head an in-port


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Diagram:
    nodes: Tuple[Tuple[str, str], ...] = ()   # (id, kind), id-sorted
    arcs: Tuple[ArcT, ...] = ()               # sorted
    free_loops: int = 0

    @staticmethod
    def make(nodes: Dict[str, str], arcs: Iterable[ArcT],
             free_loops: int = 0) -> "Diagram":
        nd = tuple(sorted((str(i), k) for i, k in nodes.items()))
        ar = tuple(sorted(((str(a), int(p)), (str(b), int(q)))
                          for (a, p), (b, q) in arcs))
        return Diagram(nd, ar, int(free_loops))

    def kind_of(self, node: str) -> str:
        for i, k in self.nodes:
            if i == node:
                return k
        raise DiagramError("unknown node %r" % node)

    def node_ids(self) -> List[str]:
        return [i for i, _ in self.nodes]

    def node_map(self) -> Dict[str, str]:
        return dict(self.nodes)

    def crossings(self) -> List[str]:
        return [i for i, k in self.nodes if k in CROSSING_KINDS]

    def vertices(self) -> List[str]:
        return [i for i, k in self.nodes if k in VERTEX_KINDS]

    # --- port bookkeeping

    def port_roles(self) -> Tuple[Dict[End, ArcT], Dict[End, ArcT]]:
        """Maps out-port -> arc and in-port -> arc."""
        outs: Dict[End, ArcT] = {}
        ins: Dict[End, ArcT] = {}
        for arc in self.arcs:
            tail, head = arc
            if tail in outs:
                raise DiagramError("port %s used twice as tail" % (tail,))
            if head in ins:
                raise DiagramError("port %s used twice as head" % (head,))
            outs[tail] = arc
            ins[head] = arc
        return outs, ins

    def in_ports(self, node: str) -> List[int]:
        _, ins = self.port_roles()
        return sorted(p for (n, p) in ins if n == node)

    # --- validation

    def validate(self) -> List[str]:
        """Empty list iff the diagram is well formed."""
        report: List[str] = []
        ids = self.node_ids()
        if len(set(ids)) != len(ids):
            report.append("duplicate node id")
            return report
        known = set(ids)
        for i, k in self.nodes:
            if k not in KINDS:
                report.append("node %s: unknown kind %s" % (i, k))
        used: Dict[End, int] = {}
        for (a, p), (b, q) in self.arcs:
            for n, port in ((a, p), (b, q)):
                if n not in known:
                    report.append("arc endpoint at unknown node %s" % n)
                if not 0 <= port <= 3:
                    report.append("node %s: port %d out of range" % (n, port))
        if report:
            return report
        outs: Dict[End, str] = {}
        ins: Dict[End, str] = {}
        for arc in self.arcs:
            tail, head = arc
            if tail in outs or tail in ins:
                report.append("node %s port %d: duplicate port use" % tail)
            outs[tail] = "o"
            if head in ins or head in outs:
                report.append("node %s port %d: duplicate port use" % head)
            ins[head] = "i"
        if report:
            return report
        for i, _ in self.nodes:
            for strand in ((0, 2), (1, 3)):
                roles = []
                for p in strand:
                    if (i, p) in outs:
                        roles.append("out")
                    elif (i, p) in ins:
                        roles.append("in")
                    else:
                        roles.append("free")
                if sorted(roles) != ["in", "out"]:
                    report.append(
                        "node %s strand %s: orientation through node broken "
                        "(%s)" % (i, strand, ",".join(roles)))
        if self.free_loops < 0:
            report.append("negative free loop count")
        return report

    def require_valid(self) -> None:
        r = self.validate()
        if r:
            raise DiagramError("; ".join(r))

    # --- signs, writhe, components

    def crossing_sign(self, node: str) -> int:
        kind = self.kind_of(node)
        if kind not in CROSSING_KINDS:
            return 0
        _, ins = self.port_roles()
        in_a = 0 if (node, 0) in ins else 2
        in_b = 1 if (node, 1) in ins else 3
        base = 1 if (in_a, in_b) in ((0, 1), (2, 3)) else -1
        return base if kind == "XPos" else -base

    def writhe(self) -> int:
        return sum(self.crossing_sign(i) for i in self.crossings())

    def trace_components(self) -> List[List[ArcT]]:
        """Closed oriented loops through nodes, as arc lists (free loops
        excluded)."""
        outs, ins = self.port_roles()
        seen: Set[ArcT] = set()
        comps: List[List[ArcT]] = []
        for start in self.arcs:
            if start in seen:
                continue
            comp = []
            arc = start
            while True:
                comp.append(arc)
                seen.add(arc)
                n, p = arc[1]
                nxt = outs[(n, (p + 2) % 4)]
                if nxt == start:
                    break
                if nxt in seen:
                    raise DiagramError("strand tracing does not close")
                arc = nxt
            comps.append(comp)
        return comps

    def components(self) -> int:
        return len(self.trace_components()) + self.free_loops

    def component_of_port(self, end: End, role: str = "in") -> int:
        """Index (into trace_components) of the loop through the given
        port; role 'in' looks the port up as an arc head, 'out' as a tail."""
        for ci, comp in enumerate(self.trace_components()):
            for arc in comp:
                if role == "in" and arc[1] == end:
                    return ci
                if role == "out" and arc[0] == end:
                    return ci
        raise DiagramError("port %s not found on any component" % (end,))

    def reverse_component(self, index: int) -> "Diagram":
        comps = self.trace_components()
        if not 0 <= index < len(comps):
            raise DiagramError("unknown component %d" % index)
        flip = set(comps[index])
        arcs = []
        for arc in self.arcs:
            if arc in flip:
                arcs.append((arc[1], arc[0]))
            else:
                arcs.append(arc)
        return Diagram.make(self.node_map(), arcs, self.free_loops)

    def mirror(self) -> "Diagram":
        swap = {"XPos": "XNeg", "XNeg": "XPos"}
        nodes = {i: swap.get(k, k) for i, k in self.nodes}
        return Diagram.make(nodes, self.arcs, self.free_loops)

    # --- equality up to renumbering

    def canonical_form(self) -> str:
        return _canonical_form(self)

    def same_as(self, other: "Diagram") -> bool:
        return self.canonical_form() == other.canonical_form()

    def __str__(self) -> str:
        return serialize(self)


# --- canonical labeling -----------------------------------------------------


def _adjacency(d: Diagram) -> Dict[str, List[Tuple[int, str, int, str]]]:
    """For each node, the 4 ports in order with (port, peer, peer-port,
    direction flag)."""
    outs, ins = d.port_roles()
    adj: Dict[str, List[Tuple[int, str, int, str]]] = {i: [] for i in d.node_ids()}
    for i in d.node_ids():
        for p in range(4):
            if (i, p) in outs:
                (_, _), (b, q) = outs[(i, p)]
                adj[i].append((p, b, q, ">"))
            else:
                (a, q), (_, _) = ins[(i, p)]
                adj[i].append((p, a, q, "<"))
    return adj


def _canonical_form(d: Diagram) -> str:
    if d.validate():
        raise DiagramError("cannot canonicalise an invalid diagram")
    adj = _adjacency(d)
    kinds = d.node_map()
    # connected parts of the node graph
    parts: List[List[str]] = []
    unseen = set(d.node_ids())
    while unseen:
        root = min(unseen)
        stack, part = [root], []
        unseen.discard(root)
        while stack:
            n = stack.pop()
            part.append(n)
            for _, peer, _, _ in adj[n]:
                if peer in unseen:
                    unseen.discard(peer)
                    stack.append(peer)
        parts.append(part)

    def encode_from(root: str, part: Sequence[str]) -> str:
        label: Dict[str, int] = {root: 0}
        order = [root]
        qi = 0
        while qi < len(order):
            n = order[qi]
            qi += 1
            for _, peer, _, _ in adj[n]:
                if peer not in label:
                    label[peer] = len(order)
                    order.append(peer)
        rows = []
        for n in order:
            cells = ["%s" % kinds[n]]
            for p, peer, q, dirn in adj[n]:
                cells.append("%d%s%d.%d" % (p, dirn, label[peer], q))
            rows.append(" ".join(cells))
        return " | ".join(rows)

    encoded_parts = []
    for part in parts:
        encoded_parts.append(min(encode_from(r, part) for r in part))
    encoded_parts.sort()
    return "loops=%d ; %s" % (d.free_loops, " ;; ".join(encoded_parts))


# --- text codec -------------------------------------------------------------


def serialize(d: Diagram, name: str = "diagram") -> str:
    lines = ["diagram %s" % name]
    for i, k in d.nodes:
        lines.append("node %s %s" % (i, k))
    for (a, p), (b, q) in d.arcs:
        lines.append("arc %s.%d -> %s.%d" % (a, p, b, q))
    if d.free_loops:
        lines.append("loop %d" % d.free_loops)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Tuple[str, Diagram]:
    name = "diagram"
    nodes: Dict[str, str] = {}
    arcs: List[ArcT] = []
    loops = 0

    def end(tok: str, lineno: int) -> End:
        if "." not in tok:
            raise DiagramError("line %d: bad endpoint %r" % (lineno, tok))
        n, _, p = tok.rpartition(".")
        if not p.isdigit():
            raise DiagramError("line %d: bad port in %r" % (lineno, tok))
        return (n, int(p))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "diagram" and len(toks) == 2:
            name = toks[1]
        elif toks[0] == "node" and len(toks) == 3:
            if toks[2] not in KINDS:
                raise DiagramError("line %d: unknown node kind %r"
                                   % (lineno, toks[2]))
            nodes[toks[1]] = toks[2]
        elif toks[0] == "arc" and len(toks) == 4 and toks[2] == "->":
            arcs.append((end(toks[1], lineno), end(toks[3], lineno)))
        elif toks[0] == "loop" and len(toks) == 2 and toks[1].isdigit():
            loops += int(toks[1])
        else:
            raise DiagramError("line %d: cannot parse %r" % (lineno, line))
    for (a, _), (b, _) in arcs:
        for n in (a, b):
            if n not in nodes:
                raise DiagramError("arc endpoint at undefined node %r" % n)
    return name, Diagram.make(nodes, arcs, loops)


def parse_diagram(text: str) -> Diagram:
    return parse(text)[1]


# --- local surgery ----------------------------------------------------------


def replace_kind(d: Diagram, node: str, kind: str) -> Diagram:
    nodes = d.node_map()
    if node not in nodes:
        raise DiagramError("unknown node %r" % node)
    nodes[node] = kind
    return Diagram.make(nodes, d.arcs, d.free_loops)


def splice_node(d: Diagram, node: str, joins: Dict[int, int]) -> Diagram:
    """Remove a node, reconnecting strands per joins (in-port -> out-port).

    Every in-port and every out-port of the node must appear exactly once.
    Chains of arcs that close up entirely through the removed node become
    free loops.
    """
    outs, ins = d.port_roles()
    node_in = sorted(p for (n, p) in ins if n == node)
    node_out = sorted(p for (n, p) in outs if n == node)
    if sorted(joins.keys()) != node_in or sorted(joins.values()) != node_out:
        raise DiagramError("joins %r do not match ports of node %s"
                           % (joins, node))
    nodes = d.node_map()
    del nodes[node]
    touched = [a for a in d.arcs if a[0][0] == node or a[1][0] == node]
    arcs = [a for a in d.arcs if a not in touched]
    loops = d.free_loops
    consumed = set()
    for start in touched:
        if start in consumed or start[0][0] == node:
            continue
        # start outside the node, follow through the node until we exit
        arc = start
        consumed.add(arc)
        while arc[1][0] == node:
            arc2 = outs[(node, joins[arc[1][1]])]
            consumed.add(arc2)
            arc = arc2
        arcs.append((start[0], arc[1]))
    for start in touched:
        # leftover cycles run entirely through the node
        if start in consumed:
            continue
        arc = start
        while True:
            consumed.add(arc)
            arc = outs[(node, joins[arc[1][1]])]
            if arc == start:
                break
        loops += 1
    return Diagram.make(nodes, arcs, loops)


def vertex_ports(d: Diagram, node: str) -> Dict[str, int]:
    """The in/out ports of the two strands through a node: keys in_a,
    out_a (the 0-2 strand) and in_b, out_b (the 1-3 strand)."""
    _, ins = d.port_roles()
    in_a = 0 if (node, 0) in ins else 2
    in_b = 1 if (node, 1) in ins else 3
    return {"in_a": in_a, "out_a": (in_a + 2) % 4,
            "in_b": in_b, "out_b": (in_b + 2) % 4}


def path_to_reentry(d: Diagram, node: str, out_port: int):
    """Arcs followed from a node's out-port until the strand re-enters the
    same node; returns (arcs, re-entry port)."""
    outs, _ = d.port_roles()
    path = []
    arc = outs[(node, out_port)]
    while True:
        path.append(arc)
        n, p = arc[1]
        if n == node:
            return path, p
        arc = outs[(n, (p + 2) % 4)]


def reverse_arcs(d: Diagram, subset) -> Diagram:
    flip = set(subset)
    arcs = [((a[1], a[0]) if a in flip else a) for a in d.arcs]
    return Diagram.make(d.node_map(), arcs, d.free_loops)


def disjoint_union(d1: Diagram, d2: Diagram, suffix: str = "'") -> Diagram:
    """Union with d2's node ids suffixed to avoid clashes."""
    ids1 = set(d1.node_ids())
    rename = {}
    for i in d2.node_ids():
        j = i
        while j in ids1 or j in rename.values():
            j = j + suffix
        rename[i] = j
    nodes = d1.node_map()
    for i, k in d2.nodes:
        nodes[rename[i]] = k
    arcs = list(d1.arcs) + [((rename[a], p), (rename[b], q))
                            for (a, p), (b, q) in d2.arcs]
    return Diagram.make(nodes, arcs, d1.free_loops + d2.free_loops)
