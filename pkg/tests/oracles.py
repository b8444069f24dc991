"""Brute-force reference implementations used to cross-check the package.

Everything here favours the most literal reading of a definition over speed.
Widths stay small in the tests, so quadratic and exponential loops are fine.
"""

from __future__ import annotations

from itertools import product

from boolcube import BooleanNetwork, SignedDigraph


# -- plain network predicates -------------------------------------------------


def fixed_point_list(f: BooleanNetwork) -> list[int]:
    return [x for x in range(1 << f.width) if f.table[x] == x]


def self_dual(f: BooleanNetwork) -> bool:
    mask = (1 << f.width) - 1
    return all(f.table[x ^ mask] == f.table[x] ^ mask for x in range(len(f.table)))


def parity_name(f: BooleanNetwork) -> str:
    image = {x ^ f.table[x] for x in range(len(f.table))}
    size = len(f.table)
    if image == {c for c in range(size) if bin(c).count("1") % 2 == 0}:
        return "even"
    if image == {c for c in range(size) if bin(c).count("1") % 2 == 1}:
        return "odd"
    return "neither"


def non_expansive(f: BooleanNetwork) -> bool:
    size = len(f.table)
    for x in range(size):
        for y in range(size):
            dist_in = bin(x ^ y).count("1")
            dist_out = bin(f.table[x] ^ f.table[y]).count("1")
            if dist_out > dist_in:
                return False
    return True


# -- subnetworks ---------------------------------------------------------------


def sub_table(f: BooleanNetwork, free: list[str], frozen: dict[str, int]) -> tuple[int, ...]:
    """Freeze the components outside `free` and project the outputs onto `free`."""
    free = [c for c in f.components if c in free]
    table = []
    for y in range(1 << len(free)):
        x = 0
        for pos, label in enumerate(f.components):
            if label in frozen:
                bit = frozen[label]
            else:
                bit = y >> free.index(label) & 1
            x |= bit << pos
        value = f.table[x]
        out = 0
        for k, label in enumerate(free):
            out |= (value >> f.components.index(label) & 1) << k
        table.append(out)
    return tuple(table)


def all_strict_sub_tables(f: BooleanNetwork) -> list[tuple[int, ...]]:
    tables = []
    labels = list(f.components)
    for keep in product([0, 1], repeat=len(labels)):
        free = [c for c, k in zip(labels, keep) if k]
        if not free or len(free) == len(labels):
            continue
        rest = [c for c in labels if c not in free]
        for bits in product([0, 1], repeat=len(rest)):
            tables.append(sub_table(f, free, dict(zip(rest, bits))))
    return tables


def two_critical(f: BooleanNetwork) -> bool:
    if len(fixed_point_list(f)) < 2:
        return False
    return all(
        sum(1 for y, v in enumerate(t) if v == y) <= 1
        for t in all_strict_sub_tables(f)
    )


def zero_critical(f: BooleanNetwork) -> bool:
    if fixed_point_list(f):
        return False
    return all(
        any(v == y for y, v in enumerate(t)) for t in all_strict_sub_tables(f)
    )


# -- signed digraphs -------------------------------------------------------------


def local_arcs(f: BooleanNetwork, code: int) -> set[tuple[str, int, str]]:
    """Arcs of the interaction graph at one state, straight from the derivative."""
    arcs = set()
    for j in range(f.width):
        lo = code & ~(1 << j)
        hi = lo | (1 << j)
        diff = f.table[lo] ^ f.table[hi]
        for i in range(f.width):
            if diff >> i & 1:
                sign = 1 if f.table[hi] >> i & 1 else -1
                arcs.add((f.components[j], sign, f.components[i]))
    return arcs


def global_arcs(f: BooleanNetwork) -> set[tuple[str, int, str]]:
    arcs: set[tuple[str, int, str]] = set()
    for code in range(len(f.table)):
        arcs |= local_arcs(f, code)
    return arcs


def cycle_set(g: SignedDigraph) -> set[tuple[tuple[str, ...], tuple[int, ...]]]:
    """Every elementary signed cycle, found by depth-first search over simple
    paths whose start is the smallest vertex on the cycle.  Parallel arcs of
    opposite signs contribute one cycle per sign choice.
    """
    order = {v: k for k, v in enumerate(g.vertices)}
    succ: dict[str, dict[str, list[int]]] = {}
    for src, sign, dst in g.arcs:
        succ.setdefault(src, {}).setdefault(dst, []).append(sign)
    found: set[tuple[tuple[str, ...], tuple[int, ...]]] = set()

    def walk(start: str, path: list[str], seen: set[str]) -> None:
        here = path[-1]
        for dst in succ.get(here, {}):
            if dst == start:
                hops = [succ[path[k]][path[k + 1]] for k in range(len(path) - 1)]
                hops.append(succ[here][start])
                for choice in product(*hops):
                    found.add((tuple(path), choice))
            elif order[dst] > order[start] and dst not in seen:
                seen.add(dst)
                path.append(dst)
                walk(start, path, seen)
                path.pop()
                seen.discard(dst)

    for start in g.vertices:
        walk(start, [start], {start})
    return found


def chordless(g: SignedDigraph, vertices: tuple[str, ...]) -> bool:
    members = set(vertices)
    hops = {(vertices[k - 1], vertices[k]) for k in range(len(vertices))}
    return not any(
        src in members and dst in members and (src, dst) not in hops
        for src, _, dst in g.arcs
    )


# -- asynchronous dynamics --------------------------------------------------------


def successor_map(f: BooleanNetwork) -> list[list[int]]:
    out = []
    for x, v in enumerate(f.table):
        out.append([x ^ (1 << i) for i in range(f.width) if (x ^ v) >> i & 1])
    return out


def _reach_sets(succ: list[list[int]]) -> list[set[int]]:
    sets = []
    for x in range(len(succ)):
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in succ[y]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        sets.append(seen)
    return sets


def attractor_sets(f: BooleanNetwork) -> list[frozenset[int]]:
    """Terminal strongly connected components via reachability closure."""
    succ = successor_map(f)
    reach = _reach_sets(succ)
    out = set()
    for x in range(len(succ)):
        component = frozenset(y for y in reach[x] if x in reach[y])
        if reach[x] == set(component):
            out.add(component)
    return sorted(out, key=min)


def weakly_convergent(f: BooleanNetwork) -> bool:
    fixed = fixed_point_list(f)
    if len(fixed) != 1:
        return False
    target = fixed[0]
    good = {target}
    states = sorted(range(len(f.table)), key=lambda x: bin(x ^ target).count("1"))
    for x in states[1:]:
        for i in range(f.width):
            toward = (x ^ target) >> i & 1 and (f.table[x] ^ x) >> i & 1
            if toward and x ^ (1 << i) in good:
                good.add(x)
                break
    return len(good) == len(f.table)


def strongly_convergent(f: BooleanNetwork) -> bool:
    if len(fixed_point_list(f)) != 1:
        return False
    succ = successor_map(f)
    reach = _reach_sets(succ)
    return not any(x in reach[y] for x in range(len(succ)) for y in succ[x])
