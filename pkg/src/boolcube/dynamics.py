"""Asynchronous dynamics: state graph, attractors, convergence predicates.

The asynchronous state graph has an arc x -> x with component i flipped for
every component where f_i(x) differs from x_i, so the out-degree of x is the
Hamming distance between x and f(x).  Attractors are the terminal strongly
connected components; a punctual one is exactly a fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypercube import Point
from .network import BooleanNetwork, WidthCapError, cached, fixed_point_codes

WIDTH_CAP = 20


def _check_width(f: BooleanNetwork) -> None:
    if f.width > WIDTH_CAP:
        raise WidthCapError(
            f"state graphs are capped at width {WIDTH_CAP}, got {f.width}"
        )


@dataclass(frozen=True)
class StateGraph:
    """Arcs are (state code, state code) pairs differing in one component."""

    components: tuple[str, ...]
    arcs: frozenset[tuple[int, int]]

    def arc_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    def point(self, code: int) -> Point:
        return Point(self.components, code)


@dataclass(frozen=True)
class Attractor:
    components: tuple[str, ...]
    states: frozenset[int]

    @property
    def cyclic(self) -> bool:
        return len(self.states) > 1

    def state_points(self) -> tuple[Point, ...]:
        return tuple(Point(self.components, code) for code in sorted(self.states))


def asynchronous_state_graph(f: BooleanNetwork) -> StateGraph:
    _check_width(f)
    arcs = set()
    for x, v in enumerate(f.table):
        diff = x ^ v
        while diff:
            low = diff & -diff
            arcs.add((x, x ^ low))
            diff ^= low
    return StateGraph(f.components, frozenset(arcs))


def _successor_lists(table: tuple[int, ...]) -> list[list[int]]:
    out = []
    for x, v in enumerate(table):
        diff = x ^ v
        succ = []
        while diff:
            low = diff & -diff
            succ.append(x ^ low)
            diff ^= low
        out.append(succ)
    return out


def _tarjan_components(succs: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan; components come out in reverse topological order."""
    size = len(succs)
    index = [-1] * size
    low = [0] * size
    onstack = bytearray(size)
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(size):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = 1
        call: list[tuple[int, int]] = [(root, 0)]
        while call:
            v, pos = call[-1]
            advanced = False
            while pos < len(succs[v]):
                w = succs[v][pos]
                pos += 1
                if index[w] == -1:
                    call[-1] = (v, pos)
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = 1
                    call.append((w, 0))
                    advanced = True
                    break
                if onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            call.pop()
            if call:
                u = call[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _terminal_components(table: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """(terminal SCCs sorted by smallest state, whether the graph is acyclic)."""
    succs = _successor_lists(table)
    comps = _tarjan_components(succs)
    comp_id = [0] * len(table)
    for k, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = k
    terminal = []
    acyclic = True
    for k, comp in enumerate(comps):
        if len(comp) > 1:
            acyclic = False
        if all(comp_id[w] == k for v in comp for w in succs[v]):
            terminal.append(tuple(sorted(comp)))
    terminal.sort(key=lambda comp: comp[0])
    return tuple(terminal), acyclic


def _term_info(f: BooleanNetwork) -> tuple[tuple[tuple[int, ...], ...], bool]:
    return cached(f, "_term_info", lambda: _terminal_components(f.table))


def attractors(f: BooleanNetwork) -> tuple[Attractor, ...]:
    _check_width(f)

    def compute() -> tuple[Attractor, ...]:
        terminal, _ = _term_info(f)
        return tuple(Attractor(f.components, frozenset(comp)) for comp in terminal)

    return cached(f, "_attractors", compute)


def attractor_summary(f: BooleanNetwork) -> tuple[int, bool]:
    """(number of attractors, whether any is cyclic); cached for sweeps."""

    def compute() -> tuple[int, bool]:
        atts = attractors(f)
        return len(atts), any(a.cyclic for a in atts)

    return cached(f, "_att_summary", compute)


def weak_convergence(f: BooleanNetwork) -> bool:
    """A unique fixed point reachable from every state along a geodesic.

    Equivalent to one reverse BFS from the fixed point using only the arcs
    that decrease the distance to it.
    """
    _check_width(f)

    def compute() -> bool:
        fixed = fixed_point_codes(f)
        if len(fixed) != 1:
            return False
        target = fixed[0]
        table = f.table
        n = f.width
        seen = bytearray(len(table))
        seen[target] = 1
        frontier = [target]
        reached = 1
        while frontier:
            new_frontier = []
            for y in frontier:
                agree = ~(y ^ target)
                for i in range(n):
                    if not agree >> i & 1:
                        continue
                    x = y ^ (1 << i)
                    if seen[x]:
                        continue
                    # arc x -> y exists iff component i is unstable at x
                    if (table[x] ^ x) >> i & 1:
                        seen[x] = 1
                        new_frontier.append(x)
                        reached += 1
            frontier = new_frontier
        return reached == len(table)

    return cached(f, "_weak_convergence", compute)


def strong_convergence(f: BooleanNetwork) -> bool:
    """A unique fixed point and an acyclic state graph."""
    _check_width(f)

    def compute() -> bool:
        if len(fixed_point_codes(f)) != 1:
            return False
        _, acyclic = _term_info(f)
        return acyclic

    return cached(f, "_strong_convergence", compute)
