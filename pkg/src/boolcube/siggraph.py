"""Signed digraphs, interaction graphs, cycles, circular and and-net forms.

Arcs are (source, sign, target) with sign +1 or -1; loops are admitted and a
graph may carry both a positive and a negative arc on the same ordered pair
(then it is not simple).  The local interaction graph at a point collects the
signs of the nonzero discrete derivatives there; the global graph is the union
over all points.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .hypercube import FormatError, Point, check_components
from .network import BooleanNetwork, cached

Arc = tuple[str, int, str]


@dataclass(frozen=True)
class SignedDigraph:
    vertices: tuple[str, ...]
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        check_components(self.vertices)
        known = set(self.vertices)
        for src, sign, dst in self.arcs:
            if sign not in (1, -1):
                raise ValueError(f"arc sign must be +1 or -1, got {sign!r}")
            if src not in known or dst not in known:
                raise ValueError(f"arc ({src!r}, {sign}, {dst!r}) uses unknown vertices")

    @property
    def is_simple(self) -> bool:
        return len({(src, dst) for src, _, dst in self.arcs}) == len(self.arcs)

    def arc_list(self) -> tuple[Arc, ...]:
        index = {v: k for k, v in enumerate(self.vertices)}
        return tuple(
            sorted(self.arcs, key=lambda a: (index[a[0]], index[a[2]], -a[1]))
        )


def graph_rows(g: SignedDigraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(positive, negative) adjacency masks indexed by source vertex."""

    def compute() -> tuple[tuple[int, ...], tuple[int, ...]]:
        index = {v: k for k, v in enumerate(g.vertices)}
        pos = [0] * len(g.vertices)
        neg = [0] * len(g.vertices)
        for src, sign, dst in g.arcs:
            if sign == 1:
                pos[index[src]] |= 1 << index[dst]
            else:
                neg[index[src]] |= 1 << index[dst]
        return tuple(pos), tuple(neg)

    return cached(g, "_rows", compute)


def graph_from_rows(
    vertices: tuple[str, ...], pos: tuple[int, ...], neg: tuple[int, ...]
) -> SignedDigraph:
    arcs = set()
    for j, src in enumerate(vertices):
        for i, dst in enumerate(vertices):
            if pos[j] >> i & 1:
                arcs.add((src, 1, dst))
            if neg[j] >> i & 1:
                arcs.add((src, -1, dst))
    return SignedDigraph(vertices, frozenset(arcs))


@dataclass(frozen=True)
class Cycle:
    """A cycle of a signed digraph, rotation-normalized.

    vertices[0] is the smallest vertex in the parent graph's order; signs[k]
    is the sign of the arc vertices[k] -> vertices[(k+1) % length].
    """

    vertices: tuple[str, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices or len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be nonempty and distinct")
        if len(self.signs) != len(self.vertices) or any(
            s not in (1, -1) for s in self.signs
        ):
            raise ValueError("need one sign of +1/-1 per arc")

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def sign(self) -> int:
        """Positive iff the number of negative arcs is even."""
        out = 1
        for s in self.signs:
            out *= s
        return out

    def arcs(self) -> tuple[Arc, ...]:
        n = len(self.vertices)
        return tuple(
            (self.vertices[k], self.signs[k], self.vertices[(k + 1) % n])
            for k in range(n)
        )

    def __str__(self) -> str:
        parts = []
        for v, s in zip(self.vertices, self.signs):
            parts.append(v)
            parts.append("+" if s == 1 else "-")
        return "(" + " ".join(parts) + ")"


def discrete_derivative(f: BooleanNetwork, i: str, j: str, x: Point) -> int:
    """f_i(x with x_j=1) minus f_i(x with x_j=0); one of -1, 0, +1."""
    if x.components != f.components:
        raise ValueError("point components do not match the network")
    bi = 1 << f.components.index(i) if i in f.components else None
    bj = 1 << f.components.index(j) if j in f.components else None
    if bi is None or bj is None:
        raise ValueError("unknown component label")
    hi = f.table[x.code | bj]
    lo = f.table[x.code & ~bj]
    return (1 if hi & bi else 0) - (1 if lo & bi else 0)


def _raw_local_rows(
    n: int, table: tuple[int, ...]
) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    out = []
    for x in range(1 << n):
        pos = []
        neg = []
        for j in range(n):
            bj = 1 << j
            hi = table[x | bj]
            lo = table[x & ~bj]
            diff = hi ^ lo
            pos.append(diff & hi)
            neg.append(diff & lo)
        out.append((tuple(pos), tuple(neg)))
    return tuple(out)


def local_rows(
    f: BooleanNetwork,
) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Per point x: (positive, negative) target masks indexed by source."""
    return cached(f, "_local_rows", lambda: _raw_local_rows(f.width, f.table))


def global_rows(f: BooleanNetwork) -> tuple[tuple[int, ...], tuple[int, ...]]:
    def compute() -> tuple[tuple[int, ...], tuple[int, ...]]:
        n = f.width
        pos = [0] * n
        neg = [0] * n
        for p, m in local_rows(f):
            for j in range(n):
                pos[j] |= p[j]
                neg[j] |= m[j]
        return tuple(pos), tuple(neg)

    return cached(f, "_global_rows", compute)


def local_interaction_graph(f: BooleanNetwork, x: Point) -> SignedDigraph:
    if x.components != f.components:
        raise ValueError("point components do not match the network")
    pos, neg = local_rows(f)[x.code]
    return graph_from_rows(f.components, pos, neg)


def global_interaction_graph(f: BooleanNetwork) -> SignedDigraph:
    pos, neg = global_rows(f)
    return graph_from_rows(f.components, pos, neg)


def _unsigned_cycles(n: int, adj: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Simple cycles as index tuples starting at their smallest vertex.

    Johnson's blocked search, run once per start vertex over the subgraph of
    vertices >= start; loops are collected separately first.
    """
    cycles: list[tuple[int, ...]] = [(v,) for v in range(n) if adj[v] >> v & 1]
    for s in range(n):
        allowed = ~((1 << s) - 1)
        blocked = [False] * n
        blist: list[int] = [0] * n
        path: list[int] = []

        def unblock(u: int) -> None:
            stack = [u]
            while stack:
                w = stack.pop()
                if blocked[w]:
                    blocked[w] = False
                    todo = blist[w]
                    blist[w] = 0
                    while todo:
                        low = todo & -todo
                        stack.append(low.bit_length() - 1)
                        todo ^= low
        def circuit(v: int) -> bool:
            found = False
            path.append(v)
            blocked[v] = True
            targets = adj[v] & allowed & ~(1 << v)
            while targets:
                low = targets & -targets
                w = low.bit_length() - 1
                targets ^= low
                if w == s:
                    if len(path) > 1:
                        cycles.append(tuple(path))
                    found = True
                elif not blocked[w] and circuit(w):
                    found = True
            if found:
                unblock(v)
            else:
                targets = adj[v] & allowed & ~(1 << v)
                while targets:
                    low = targets & -targets
                    w = low.bit_length() - 1
                    targets ^= low
                    blist[w] |= 1 << v
            path.pop()
            return found

        circuit(s)
    return cycles


def _signed_cycles(
    n: int, pos: tuple[int, ...], neg: tuple[int, ...]
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(vertex indices, signs) per cycle; both-sign arcs expand to two cycles."""
    adj = tuple(p | m for p, m in zip(pos, neg))
    out = []
    for verts in _unsigned_cycles(n, adj):
        length = len(verts)
        options = []
        for k in range(length):
            src = verts[k]
            dst = verts[(k + 1) % length]
            choices = []
            if pos[src] >> dst & 1:
                choices.append(1)
            if neg[src] >> dst & 1:
                choices.append(-1)
            options.append(choices)
        for signs in product(*options):
            out.append((verts, signs))
    out.sort(key=lambda c: (len(c[0]), c[0], c[1]))
    return out


def enumerate_cycles(g: SignedDigraph) -> tuple[Cycle, ...]:
    """Every cycle exactly once, sorted by length, vertex sequence, signs."""
    pos, neg = graph_rows(g)
    n = len(g.vertices)
    return tuple(
        Cycle(tuple(g.vertices[v] for v in verts), signs)
        for verts, signs in _signed_cycles(n, pos, neg)
    )


def is_chordless(g: SignedDigraph, cycle: Cycle) -> bool:
    """No arc of |g| joins two cycle vertices besides the cycle's own arcs."""
    index = {v: k for k, v in enumerate(g.vertices)}
    members = 0
    for v in cycle.vertices:
        if v not in index:
            raise ValueError(f"cycle vertex {v!r} is not in the graph")
        members |= 1 << index[v]
    own = {(index[src], index[dst]) for src, _, dst in cycle.arcs()}
    pos, neg = graph_rows(g)
    for v in cycle.vertices:
        j = index[v]
        targets = (pos[j] | neg[j]) & members
        while targets:
            low = targets & -targets
            i = low.bit_length() - 1
            targets ^= low
            if (j, i) not in own:
                return False
    return True


def delocalizing_vertices(g: SignedDigraph, cycle: Cycle) -> tuple[str, ...]:
    """Vertices sending a positive and a negative arc into distinct cycle vertices."""
    index = {v: k for k, v in enumerate(g.vertices)}
    members = 0
    for v in cycle.vertices:
        members |= 1 << index[v]
    pos, neg = graph_rows(g)
    out = []
    for j, v in enumerate(g.vertices):
        p = pos[j] & members
        m = neg[j] & members
        if p and m and (p | m).bit_count() >= 2:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class CircularForm:
    """f(x) = sigma(x) xor s for a single cycle permutation sigma.

    predecessor[i] is the index of sigma(i), the unique in-neighbor of i;
    bit i of constant is 1 exactly when the arc sigma(i) -> i is negative.
    """

    components: tuple[str, ...]
    predecessor: tuple[int, ...]
    constant: int

    def __post_init__(self) -> None:
        check_components(self.components)
        n = len(self.components)
        if sorted(self.predecessor) != list(range(n)):
            raise ValueError("predecessor map must be a permutation")
        if not 0 <= self.constant < 1 << n:
            raise ValueError("constant out of range")
        seen = 0
        v = 0
        for _ in range(n):
            seen |= 1 << v
            v = self.predecessor[v]
        if seen != (1 << n) - 1:
            raise ValueError("predecessor map must be a single cycle")

    @property
    def sign(self) -> int:
        """Positive iff the number of negative arcs is even."""
        return 1 if self.constant.bit_count() % 2 == 0 else -1

    def graph(self) -> SignedDigraph:
        arcs = set()
        for i, dst in enumerate(self.components):
            sign = -1 if self.constant >> i & 1 else 1
            arcs.add((self.components[self.predecessor[i]], sign, dst))
        return SignedDigraph(self.components, frozenset(arcs))


def circular_network(form: CircularForm) -> BooleanNetwork:
    n = len(form.components)
    table = []
    for x in range(1 << n):
        out = 0
        for i in range(n):
            if (x >> form.predecessor[i] & 1) ^ (form.constant >> i & 1):
                out |= 1 << i
        table.append(out)
    return BooleanNetwork(form.components, tuple(table))


def _table_global_rows(
    n: int, table: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pos = [0] * n
    neg = [0] * n
    for x in range(1 << n):
        for j in range(n):
            bj = 1 << j
            if x & bj:
                continue
            hi = table[x | bj]
            lo = table[x]
            diff = hi ^ lo
            pos[j] |= diff & hi
            neg[j] |= diff & lo
    return tuple(pos), tuple(neg)


def _rows_circular_pred(
    n: int, pos: tuple[int, ...], neg: tuple[int, ...]
) -> tuple[tuple[int, ...], int] | None:
    """(predecessor map, constant) when the rows form a single Hamiltonian cycle."""
    pred: list[int] = [-1] * n
    for j in range(n):
        if pos[j] & neg[j]:
            return None
        targets = pos[j] | neg[j]
        if targets.bit_count() != 1:
            return None
        i = targets.bit_length() - 1
        if pred[i] != -1:
            return None
        pred[i] = j
    seen = 0
    v = 0
    for _ in range(n):
        seen |= 1 << v
        v = pred[v]
    if seen != (1 << n) - 1:
        return None
    constant = sum(1 << i for i in range(n) if neg[pred[i]] >> i & 1)
    return tuple(pred), constant


def _table_circular_pred(
    n: int, table: tuple[int, ...]
) -> tuple[tuple[int, ...], int] | None:
    found = _rows_circular_pred(n, *_table_global_rows(n, table))
    if found is None:
        return None
    pred, constant = found
    for x in range(1 << n):
        out = 0
        for i in range(n):
            if (x >> pred[i] & 1) ^ (constant >> i & 1):
                out |= 1 << i
        if out != table[x]:
            return None
    return found


def detect_circular(f: BooleanNetwork) -> CircularForm | None:
    """The circular form of f, when G(f) is a cycle through every component."""

    def compute() -> tuple[tuple[int, ...], int] | None:
        found = _rows_circular_pred(f.width, *global_rows(f))
        if found is None:
            return None
        pred, constant = found
        form = CircularForm(f.components, pred, constant)
        if circular_network(form).table != f.table:
            return None
        return found

    found = cached(f, "_circular_pred", compute)
    if found is None:
        return None
    return CircularForm(f.components, found[0], found[1])


def and_net(g: SignedDigraph) -> BooleanNetwork:
    """The conjunctive network of a simple graph: f_i is the AND of its
    in-neighbors, each read positively or negatively per the arc sign; a
    vertex with no in-arc gets the constant 1."""
    if not g.is_simple:
        raise ValueError("and-nets are defined over simple graphs")
    pos, neg = graph_rows(g)
    n = len(g.vertices)
    pos_in = [0] * n
    neg_in = [0] * n
    for j in range(n):
        for i in range(n):
            if pos[j] >> i & 1:
                pos_in[i] |= 1 << j
            if neg[j] >> i & 1:
                neg_in[i] |= 1 << j
    table = []
    for x in range(1 << n):
        out = 0
        for i in range(n):
            if pos_in[i] & ~x or neg_in[i] & x:
                continue
            out |= 1 << i
        table.append(out)
    return BooleanNetwork(g.vertices, tuple(table))


def is_and_net(f: BooleanNetwork) -> bool:
    def compute() -> bool:
        pos, neg = global_rows(f)
        if any(p & m for p, m in zip(pos, neg)):
            return False
        return and_net(global_interaction_graph(f)).table == f.table

    return cached(f, "_is_and_net", compute)


def _acyclic(n: int, adj: tuple[int, ...]) -> bool:
    """Peel vertices with no outgoing arcs; a cycle survives every round."""
    mask = (1 << n) - 1
    while mask:
        removable = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if not adj[v] & mask:
                removable |= low
        if not removable:
            return False
        mask ^= removable
    return True


def _cycle_signs_present(
    n: int, pos: tuple[int, ...], neg: tuple[int, ...]
) -> tuple[bool, bool]:
    """(has positive cycle, has negative cycle); both-sign arcs give both."""
    has_pos = has_neg = False
    for verts, signs in _signed_cycles(n, pos, neg):
        s = 1
        for k in signs:
            s *= k
        if s == 1:
            has_pos = True
        else:
            has_neg = True
        if has_pos and has_neg:
            break
    return has_pos, has_neg


def has_cycle_of_sign(g: SignedDigraph, sign: int) -> bool:
    pos, neg = graph_rows(g)
    has_pos, has_neg = _cycle_signs_present(len(g.vertices), pos, neg)
    return has_pos if sign == 1 else has_neg


def shih_dong_condition(f: BooleanNetwork) -> bool:
    """Every local interaction graph is acyclic."""

    def compute() -> bool:
        n = f.width
        return all(
            _acyclic(n, tuple(p | m for p, m in zip(pos, neg)))
            for pos, neg in local_rows(f)
        )

    return cached(f, "_shih_dong", compute)


class CycleFilter(Enum):
    ALL = "All"
    POSITIVE_CHORDLESS = "PositiveChordless"
    NEGATIVE_CHORDLESS = "NegativeChordless"


@lru_cache(maxsize=1 << 16)
def _cycles_by_rows(
    n: int, pos: tuple[int, ...], neg: tuple[int, ...]
) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    return tuple(_signed_cycles(n, pos, neg))


def _rows_chordless(
    verts: tuple[int, ...], pos: tuple[int, ...], neg: tuple[int, ...]
) -> bool:
    members = 0
    for v in verts:
        members |= 1 << v
    length = len(verts)
    own = {(verts[k], verts[(k + 1) % length]) for k in range(length)}
    for j in verts:
        targets = (pos[j] | neg[j]) & members
        while targets:
            low = targets & -targets
            i = low.bit_length() - 1
            targets ^= low
            if (j, i) not in own:
                return False
    return True


def _min_filtered_cycle_len(
    n: int,
    rows: tuple[tuple[int, ...], tuple[int, ...]],
    filt: CycleFilter,
    chord_rows: tuple[tuple[int, ...], tuple[int, ...]] | None,
) -> int | None:
    pos, neg = rows
    if filt is CycleFilter.ALL:
        best = None
        for verts, _ in _cycles_by_rows(n, pos, neg):
            if best is None or len(verts) < best:
                best = len(verts)
                if best == 1:
                    break
        return best
    want = 1 if filt is CycleFilter.POSITIVE_CHORDLESS else -1
    cpos, cneg = chord_rows if chord_rows is not None else (pos, neg)
    best = None
    for verts, signs in _cycles_by_rows(n, pos, neg):
        if best is not None and len(verts) >= best:
            continue
        s = 1
        for k in signs:
            s *= k
        if s != want:
            continue
        if _rows_chordless(verts, cpos, cneg):
            best = len(verts)
    return best


def counting_condition(
    f: BooleanNetwork,
    filt: CycleFilter = CycleFilter.ALL,
    global_chordless: bool = False,
) -> bool:
    """For each k <= n, at most 2^k - 1 points see a qualifying local cycle of
    length <= k.  Qualifying: any cycle (All) or a chordless cycle of the given
    sign, chords judged in the local graph unless global_chordless is set."""
    n = f.width
    chord_rows = global_rows(f) if global_chordless else None
    per_k = [0] * (n + 1)
    for rows in local_rows(f):
        shortest = _min_filtered_cycle_len(n, rows, filt, chord_rows)
        if shortest is not None:
            per_k[shortest] += 1
    running = 0
    for k in range(1, n + 1):
        running += per_k[k]
        if running > (1 << k) - 1:
            return False
    return True


def parse_sg(text: str) -> SignedDigraph:
    """Parse the .sg format: a vertices line, then one '<src> <+|-> <dst>' per arc."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty graph description")
    head = lines[0].split()
    if head[0] != "vertices" or len(head) < 2:
        raise FormatError("first line must be: vertices <label> <label> ...")
    vertices = tuple(head[1:])
    try:
        check_components(vertices)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    known = set(vertices)
    arcs = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[1] not in ("+", "-"):
            raise FormatError(f"bad arc line {line!r}")
        src, sign_text, dst = parts
        if src not in known or dst not in known:
            raise FormatError(f"arc line {line!r} uses unknown vertices")
        arc = (src, 1 if sign_text == "+" else -1, dst)
        if arc in arcs:
            raise FormatError(f"duplicate arc {line!r}")
        arcs.add(arc)
    return SignedDigraph(vertices, frozenset(arcs))


def render_sg(g: SignedDigraph) -> str:
    lines = ["vertices " + " ".join(g.vertices)]
    lines.extend(
        f"{src} {'+' if sign == 1 else '-'} {dst}" for src, sign, dst in g.arc_list()
    )
    return "\n".join(lines) + "\n"


def load_sg(path: str) -> SignedDigraph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_sg(handle.read())


def simple_digraph_count(n: int) -> int:
    return 3 ** (n * n)


def simple_digraph_rows_from_index(
    n: int, index: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Decode base-3 digits, one per ordered pair (source, target), row-major.

    Digit 0 is no arc, 1 a positive arc, 2 a negative arc; covers every simple
    signed digraph on n vertices exactly once.
    """
    if not 0 <= index < simple_digraph_count(n):
        raise ValueError(f"digraph index {index} out of range for {n} vertices")
    pos = [0] * n
    neg = [0] * n
    for j in range(n):
        for i in range(n):
            digit = index % 3
            index //= 3
            if digit == 1:
                pos[j] |= 1 << i
            elif digit == 2:
                neg[j] |= 1 << i
    return tuple(pos), tuple(neg)


def simple_digraph_from_index(
    vertices: tuple[str, ...], index: int
) -> SignedDigraph:
    pos, neg = simple_digraph_rows_from_index(len(vertices), index)
    return graph_from_rows(vertices, pos, neg)


def enumerate_simple_digraphs(vertices: tuple[str, ...]) -> Iterator[SignedDigraph]:
    for index in range(simple_digraph_count(len(vertices))):
        yield simple_digraph_from_index(vertices, index)
