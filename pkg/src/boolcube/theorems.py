"""Catalog of checkable theorems, sweep harness, and open-question searches.

Every catalog entry is a (hypothesis, conclusion) pair of predicates wired
through the public operations of the other modules.  check() classifies one
candidate as Vacuous (hypothesis fails), Confirmed, or Counterexample; sweep()
folds check over a deterministic candidate stream and produces a report that
is byte-identical across repeats and worker counts, wall time aside.  A
counterexample is a discovery to surface, never something to suppress.
"""

from __future__ import annotations

import hashlib
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Union

from .dynamics import attractor_summary, weak_convergence
from .hypercube import Point, gather_bits, scatter_bits
from .network import (
    BooleanNetwork,
    ParityClass,
    WidthCapError,
    cached,
    default_components,
    eosd_class,
    fixed_point_codes,
    is_conjugate_bijective,
    is_non_expansive,
    network_from_index,
    render_bn,
)
from .siggraph import (
    CircularForm,
    CycleFilter,
    _acyclic,
    _cycle_signs_present,
    _cycles_by_rows,
    _rows_chordless,
    _table_circular_pred,
    circular_network,
    counting_condition,
    global_rows,
    is_and_net,
    local_rows,
    shih_dong_condition,
    simple_digraph_count,
    simple_digraph_rows_from_index,
)
from .subnetwork import (
    _spec_items,
    all_subnetworks_fixed_point_census,
    has_eosd_subnetwork,
    is_two_critical,
    is_zero_critical,
)


class TheoremId(Enum):
    ROBERT = "ROBERT"
    ARACENA_POS = "ARACENA_POS"
    ARACENA_NEG = "ARACENA_NEG"
    DICHOTOMY_UNIQUE = "DICHOTOMY_UNIQUE"
    DICHOTOMY_EXIST = "DICHOTOMY_EXIST"
    RICHARD2010 = "RICHARD2010"
    SHIH_DONG = "SHIH_DONG"
    REMY_RUET_THIEFFRY = "REMY_RUET_THIEFFRY"
    RICHARD2011 = "RICHARD2011"
    MAIN_EOSD = "MAIN_EOSD"
    COR_COUNTING = "COR_COUNTING"
    COR_GEODESIC = "COR_GEODESIC"
    THM_CIRCULAR_EOSD = "THM_CIRCULAR_EOSD"
    THM_CRITICAL_NONEXP = "THM_CRITICAL_NONEXP"
    COR_NONEXP_DICHOTOMY = "COR_NONEXP_DICHOTOMY"
    COR_COUNTING_SIGNED = "COR_COUNTING_SIGNED"
    ANDNET_2CRITICAL = "ANDNET_2CRITICAL"
    ANDNET_CHORDLESS = "ANDNET_CHORDLESS"
    LEMMA1_HYPERCUBE = "LEMMA1_HYPERCUBE"
    PROP_ODD_OUTDEGREE = "PROP_ODD_OUTDEGREE"
    PROP_CRITICAL_DYNAMICS = "PROP_CRITICAL_DYNAMICS"
    PROP_MINIMAL_FORBIDDEN = "PROP_MINIMAL_FORBIDDEN"


class OpenQuestion(Enum):
    Q1_NEG_LOCAL_CYCLES = "Q1_NEG_LOCAL_CYCLES"
    Q2_0CRITICAL_ANDNET = "Q2_0CRITICAL_ANDNET"


class VerdictKind(Enum):
    VACUOUS = "Vacuous"
    CONFIRMED = "Confirmed"
    COUNTEREXAMPLE = "Counterexample"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    payload: str | None = None

    def __str__(self) -> str:
        return self.kind.value


# ---------------------------------------------------------------------------
# Cached per-network predicates shared by the catalog.


def _fp_count(f: BooleanNetwork) -> int:
    return len(fixed_point_codes(f))


def _global_cycle_signs(f: BooleanNetwork) -> tuple[bool, bool]:
    return cached(
        f, "_gsigns", lambda: _cycle_signs_present(f.width, *global_rows(f))
    )


def _local_cycle_signs(f: BooleanNetwork) -> tuple[bool, bool]:
    def compute() -> tuple[bool, bool]:
        has_pos = has_neg = False
        n = f.width
        for pos, neg in local_rows(f):
            p, m = _cycle_signs_present(n, pos, neg)
            has_pos = has_pos or p
            has_neg = has_neg or m
            if has_pos and has_neg:
                break
        return has_pos, has_neg

    return cached(f, "_lsigns", compute)


def _global_acyclic(f: BooleanNetwork) -> bool:
    def compute() -> bool:
        pos, neg = global_rows(f)
        return _acyclic(f.width, tuple(p | m for p, m in zip(pos, neg)))

    return cached(f, "_gacyclic", compute)


def _strongly_connected_with_arc(f: BooleanNetwork) -> bool:
    def compute() -> bool:
        pos, neg = global_rows(f)
        n = f.width
        adj = tuple(p | m for p, m in zip(pos, neg))
        if not any(adj):
            return False
        radj = tuple(
            sum(1 << j for j in range(n) if adj[j] >> i & 1) for i in range(n)
        )
        full = (1 << n) - 1
        for rows in (adj, radj):
            reached = 1
            frontier = 1
            while frontier:
                step = 0
                probe = frontier
                while probe:
                    low = probe & -probe
                    probe ^= low
                    step |= rows[low.bit_length() - 1]
                frontier = step & ~reached
                reached |= frontier
            if reached != full:
                return False
        return True

    return cached(f, "_sconn", compute)


def _circular_sign(f: BooleanNetwork) -> int | None:
    from .siggraph import detect_circular

    form = detect_circular(f)
    return None if form is None else form.sign


def _item_fp_map(f: BooleanNetwork) -> dict[tuple[int, int], int]:
    """Fixed-point count per subnetwork item (free mask, frozen code)."""

    def compute() -> dict[tuple[int, int], int]:
        return {
            (mask, code): sum(1 for x, v in enumerate(table) if v == x)
            for mask, code, table in _spec_items(f)
        }

    return cached(f, "_item_fps", compute)


def _iter_strict_subitems(mask: int, code: int):
    """(mask', code') of every strict subnetwork item below (mask, code)."""
    sub = (mask - 1) & mask
    while sub:
        diff = mask ^ sub
        w = diff
        while True:
            yield sub, code | w
            if w == 0:
                break
            w = (w - 1) & diff
        sub = (sub - 1) & mask


def _has_critical_sub(f: BooleanNetwork, want_two: bool) -> bool:
    fps = _item_fp_map(f)
    for (mask, code), count in fps.items():
        if want_two:
            if count < 2:
                continue
            if all(fps[item] <= 1 for item in _iter_strict_subitems(mask, code)):
                return True
        else:
            if count != 0:
                continue
            if all(fps[item] >= 1 for item in _iter_strict_subitems(mask, code)):
                return True
    return False


def _item_circular_signs(f: BooleanNetwork) -> tuple[int, ...]:
    """Per item: +1/-1 when the item is a circular network, else 0."""

    def compute() -> tuple[int, ...]:
        out = []
        for mask, _, table in _spec_items(f):
            found = _table_circular_pred(mask.bit_count(), table)
            if found is None:
                out.append(0)
            else:
                out.append(1 if found[1].bit_count() % 2 == 0 else -1)
        return tuple(out)

    return cached(f, "_item_circ", compute)


def _has_circular_sub(f: BooleanNetwork) -> tuple[bool, bool]:
    signs = _item_circular_signs(f)
    return 1 in signs, -1 in signs


def _all_subs_conjugate_bijective(f: BooleanNetwork) -> bool:
    def compute() -> bool:
        return all(
            len({x ^ v for x, v in enumerate(table)}) == len(table)
            for _, _, table in _spec_items(f)
        )

    return cached(f, "_subs_bij", compute)


# ---------------------------------------------------------------------------
# Conclusion bodies that need more than one line.


def _concl_circular_eosd(f: BooleanNetwork) -> bool:
    sign = _circular_sign(f)
    ne = is_non_expansive(f)
    esd = eosd_class(f) is ParityClass.EVEN
    osd = eosd_class(f) is ParityClass.ODD
    return ((sign == 1) == (esd and ne)) and ((sign == -1) == (osd and ne))


def _concl_critical_nonexp(f: BooleanNetwork) -> bool:
    sign = _circular_sign(f)
    ne = is_non_expansive(f)
    pos_ok = (sign == 1) == (is_two_critical(f) and ne)
    neg_ok = (sign == -1) == (is_zero_critical(f) and ne)
    return pos_ok and neg_ok


def _concl_nonexp_dichotomy(f: BooleanNetwork) -> bool:
    lo, hi = all_subnetworks_fixed_point_census(f)
    has_pos, has_neg = _has_circular_sub(f)
    return (
        (hi <= 1) == (not has_pos)
        and (lo >= 1) == (not has_neg)
        and ((lo, hi) == (1, 1)) == (not has_pos and not has_neg)
    )


def _concl_counting_signed(f: BooleanNetwork) -> bool:
    count = _fp_count(f)
    if counting_condition(f, CycleFilter.POSITIVE_CHORDLESS) and count > 1:
        return False
    if counting_condition(f, CycleFilter.NEGATIVE_CHORDLESS) and count < 1:
        return False
    return True


def _concl_andnet_2critical(f: BooleanNetwork) -> bool:
    return (_circular_sign(f) == 1) == (is_and_net(f) and is_two_critical(f))


def _graph_cycle_analysis(
    f: BooleanNetwork,
) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int, bool, bool], ...]:
    """Per cycle of G(f): (vertices, signs, sign, chordless, has delocalizer)."""

    def compute():
        pos, neg = global_rows(f)
        n = f.width
        out = []
        for verts, signs in _cycles_by_rows(n, pos, neg):
            total = 1
            for s in signs:
                total *= s
            members = 0
            for v in verts:
                members |= 1 << v
            deloc = any(
                pos[j] & members
                and neg[j] & members
                and ((pos[j] | neg[j]) & members).bit_count() >= 2
                for j in range(n)
            )
            out.append(
                (verts, signs, total, _rows_chordless(verts, pos, neg), deloc)
            )
        return tuple(out)

    return cached(f, "_gcycles", compute)


def _concl_andnet_chordless(f: BooleanNetwork) -> bool:
    lo, hi = all_subnetworks_fixed_point_census(f)
    analysis = _graph_cycle_analysis(f)
    all_ok = all(deloc for _, _, _, chordless, deloc in analysis if chordless)
    pos_ok = all(
        deloc for _, _, sign, chordless, deloc in analysis if chordless and sign == 1
    )
    return (((lo, hi) == (1, 1)) == all_ok) and ((hi <= 1) == pos_ok)


def _concl_odd_outdegree(f: BooleanNetwork) -> bool:
    n = f.width
    for pos, neg in local_rows(f):
        for j in range(n):
            if (pos[j] | neg[j]).bit_count() % 2 == 0:
                return False
    return True


def _concl_critical_dynamics(f: BooleanNetwork) -> bool:
    count, has_cyclic = attractor_summary(f)
    if count >= 2 and not _has_critical_sub(f, want_two=True):
        return False
    if is_non_expansive(f) and has_cyclic:
        if _fp_count(f) != 0 or not _has_critical_sub(f, want_two=False):
            return False
    return True


def _base_ok(kind: str, count: int) -> bool:
    if kind == "le1":
        return count <= 1
    if kind == "ge1":
        return count >= 1
    return count == 1


def _concl_minimal_forbidden(f: BooleanNetwork) -> bool:
    fps = _item_fp_map(f)
    for kind in ("le1", "ge1", "eq1"):
        all_ok = all(_base_ok(kind, c) for c in fps.values())
        minimal_found = False
        for (mask, code), count in fps.items():
            if _base_ok(kind, count):
                continue
            if all(
                _base_ok(kind, fps[item])
                for item in _iter_strict_subitems(mask, code)
            ):
                minimal_found = True
                break
        if all_ok != (not minimal_found):
            return False
    return True


def _concl_cor11(f: BooleanNetwork) -> bool:
    census_unique = all_subnetworks_fixed_point_census(f) == (1, 1)
    no_eosd = not has_eosd_subnetwork(f)
    all_bij = _all_subs_conjugate_bijective(f)
    return census_unique == no_eosd == all_bij


def _concl_dynamics_iso(f: BooleanNetwork) -> bool:
    table = f.table
    full = (1 << f.width) - 1
    for mask, code, sub in _spec_items(f):
        if mask == full:
            continue
        for y, v in enumerate(sub):
            x = code | scatter_bits(y, mask)
            if gather_bits((table[x] ^ x) & mask, mask) != v ^ y:
                return False
    return True


def _concl_local_subgraph(f: BooleanNetwork) -> bool:
    from .siggraph import _raw_local_rows

    lrows = local_rows(f)
    full = (1 << f.width) - 1
    for mask, code, sub in _spec_items(f):
        if mask == full:
            continue
        m = mask.bit_count()
        free = [k for k in range(f.width) if mask >> k & 1]
        srows = _raw_local_rows(m, sub)
        for y in range(1 << m):
            x = code | scatter_bits(y, mask)
            fpos, fneg = lrows[x]
            spos, sneg = srows[y]
            for b, j in enumerate(free):
                if spos[b] != gather_bits(fpos[j] & mask, mask):
                    return False
                if sneg[b] != gather_bits(fneg[j] & mask, mask):
                    return False
    return True


def _concl_eosd_andnet(f: BooleanNetwork) -> bool:
    sign = _circular_sign(f)
    net = is_and_net(f)
    cls = eosd_class(f)
    pos_ok = (sign == 1) == (net and cls is ParityClass.EVEN)
    neg_ok = (sign == -1) == (net and cls is ParityClass.ODD)
    return pos_ok and neg_ok


def _concl_chordless_local_circular(f: BooleanNetwork) -> bool:
    from .subnetwork import sub_table

    n = f.width
    gpos, gneg = global_rows(f)
    for x, (pos, neg) in enumerate(local_rows(f)):
        for verts, signs in _cycles_by_rows(n, pos, neg):
            if not _rows_chordless(verts, gpos, gneg):
                continue
            mask = 0
            for v in verts:
                mask |= 1 << v
            found = _table_circular_pred(
                len(verts), sub_table(f.table, mask, x & ~mask)
            )
            if found is None:
                return False
            pred, constant = found
            free = [k for k in range(n) if mask >> k & 1]
            length = len(verts)
            for k in range(length):
                src = verts[k]
                dst = verts[(k + 1) % length]
                b = free.index(dst)
                if free[pred[b]] != src:
                    return False
                want_neg = signs[k] == -1
                if bool(constant >> b & 1) != want_neg:
                    return False
    return True


def _concl_circular_subnetworks(f: BooleanNetwork) -> bool:
    """Realized circular-subnetwork graphs == chord-free delocalizer-free cycles."""
    realized = set()
    items = _spec_items(f)
    signs = _item_circular_signs(f)
    for (mask, _, table), sign in zip(items, signs):
        if sign == 0:
            continue
        found = _table_circular_pred(mask.bit_count(), table)
        assert found is not None
        pred, constant = found
        free = [k for k in range(f.width) if mask >> k & 1]
        arcs = frozenset(
            (free[pred[b]], -1 if constant >> b & 1 else 1, free[b])
            for b in range(len(free))
        )
        realized.add(arcs)
    wanted = set()
    for verts, signs_, _, chordless, deloc in _graph_cycle_analysis(f):
        if not chordless or deloc:
            continue
        length = len(verts)
        wanted.add(
            frozenset(
                (verts[k], signs_[k], verts[(k + 1) % length])
                for k in range(length)
            )
        )
    return realized == wanted


# ---------------------------------------------------------------------------
# The catalog.


def _parity_even_or_odd(f: BooleanNetwork) -> bool:
    from .network import parity_class

    return parity_class(f) is not ParityClass.NEITHER


def _TRUE(f: BooleanNetwork) -> bool:
    return True

NETWORK_CATALOG: dict[
    str, tuple[Callable[[BooleanNetwork], bool], Callable[[BooleanNetwork], bool]]
] = {
    "ROBERT": (_global_acyclic, lambda f: _fp_count(f) == 1),
    "ARACENA_POS": (
        lambda f: _strongly_connected_with_arc(f) and not _global_cycle_signs(f)[1],
        lambda f: _fp_count(f) >= 2,
    ),
    "ARACENA_NEG": (
        lambda f: _strongly_connected_with_arc(f) and not _global_cycle_signs(f)[0],
        lambda f: _fp_count(f) == 0,
    ),
    "DICHOTOMY_UNIQUE": (
        lambda f: not _global_cycle_signs(f)[0],
        lambda f: _fp_count(f) <= 1,
    ),
    "DICHOTOMY_UNIQUE_WEAK": (
        lambda f: not _global_cycle_signs(f)[0],
        lambda f: _fp_count(f) <= 2,
    ),
    "DICHOTOMY_EXIST": (
        lambda f: not _global_cycle_signs(f)[1],
        lambda f: _fp_count(f) >= 1,
    ),
    "RICHARD2010": (
        lambda f: not _global_cycle_signs(f)[1],
        lambda f: not attractor_summary(f)[1],
    ),
    "SHIH_DONG": (shih_dong_condition, lambda f: _fp_count(f) == 1),
    "REMY_RUET_THIEFFRY": (
        lambda f: not _local_cycle_signs(f)[0],
        lambda f: _fp_count(f) <= 1,
    ),
    "RICHARD2011": (
        lambda f: is_non_expansive(f) and not _local_cycle_signs(f)[1],
        lambda f: _fp_count(f) >= 1,
    ),
    "MAIN_EOSD": (lambda f: not has_eosd_subnetwork(f), is_conjugate_bijective),
    "COR_COUNTING": (counting_condition, lambda f: _fp_count(f) == 1),
    "COR_GEODESIC": (lambda f: not has_eosd_subnetwork(f), weak_convergence),
    "THM_CIRCULAR_EOSD": (_TRUE, _concl_circular_eosd),
    "THM_CRITICAL_NONEXP": (_TRUE, _concl_critical_nonexp),
    "COR_NONEXP_DICHOTOMY": (is_non_expansive, _concl_nonexp_dichotomy),
    "COR_COUNTING_SIGNED": (is_non_expansive, _concl_counting_signed),
    "ANDNET_2CRITICAL": (_TRUE, _concl_andnet_2critical),
    "ANDNET_CHORDLESS": (is_and_net, _concl_andnet_chordless),
    "PROP_ODD_OUTDEGREE": (_parity_even_or_odd, _concl_odd_outdegree),
    "PROP_CRITICAL_DYNAMICS": (_TRUE, _concl_critical_dynamics),
    "PROP_MINIMAL_FORBIDDEN": (_TRUE, _concl_minimal_forbidden),
    "COR11_EQUIVALENCE": (_TRUE, _concl_cor11),
    "DYNAMICS_ISOMORPHISM": (_TRUE, _concl_dynamics_iso),
    "LOCAL_SUBGRAPH_CONTAINMENT": (_TRUE, _concl_local_subgraph),
    "EOSD_ANDNET_CIRCULAR": (_TRUE, _concl_eosd_andnet),
    "CHORDLESS_LOCAL_CYCLE_CIRCULAR": (_TRUE, _concl_chordless_local_circular),
    "CIRCULAR_SUBNETWORK_CRITERION": (is_and_net, _concl_circular_subnetworks),
}


PROPERTY_IDS: tuple[str, ...] = (
    "DICHOTOMY_UNIQUE_WEAK",
    "COR11_EQUIVALENCE",
    "DYNAMICS_ISOMORPHISM",
    "LOCAL_SUBGRAPH_CONTAINMENT",
    "EOSD_ANDNET_CIRCULAR",
    "CHORDLESS_LOCAL_CYCLE_CIRCULAR",
    "CIRCULAR_SUBNETWORK_CRITERION",
)


def catalog_keys() -> tuple[str, ...]:
    return tuple(t.name for t in TheoremId) + PROPERTY_IDS


def _resolve(theorem: Union[TheoremId, str]) -> str:
    key = theorem.name if isinstance(theorem, TheoremId) else str(theorem)
    if key not in NETWORK_CATALOG and key != "LEMMA1_HYPERCUBE":
        raise ValueError(f"unknown theorem id {key!r}")
    return key


# ---------------------------------------------------------------------------
# The hypercube subset entry: checked over point sets, not networks.


@lru_cache(maxsize=None)
def _neighbor_masks(n: int) -> tuple[int, ...]:
    return tuple(
        sum(1 << (c ^ (1 << k)) for k in range(n)) for c in range(1 << n)
    )


@lru_cache(maxsize=None)
def _parity_masks(n: int) -> tuple[int, int]:
    even = odd = 0
    for c in range(1 << n):
        if c.bit_count() % 2 == 0:
            even |= 1 << c
        else:
            odd |= 1 << c
    return even, odd


def _subset_hypothesis(n: int, members: int) -> bool:
    if members == 0:
        return False
    nbm = _neighbor_masks(n)
    neighborhood = 0
    probe = members
    while probe:
        low = probe & -probe
        neighborhood |= nbm[low.bit_length() - 1]
        probe ^= low
    if members & neighborhood:
        return False
    return members.bit_count() >= neighborhood.bit_count()


def _subset_conclusion(n: int, members: int) -> bool:
    even, odd = _parity_masks(n)
    return members == even or members == odd


def _subset_payload(n: int, members: int) -> str:
    from .hypercube import format_code

    points = [format_code(c, n) for c in range(1 << n) if members >> c & 1]
    return f"subset width={n}\npoints " + " ".join(points) + "\n"


def check_point_set(points: Iterable[Point]) -> Verdict:
    points = list(points)
    if not points:
        return Verdict(VerdictKind.VACUOUS)
    components = points[0].components
    members = 0
    for p in points:
        if p.components != components:
            raise ValueError("points live over different component lists")
        members |= 1 << p.code
    n = len(components)
    if not _subset_hypothesis(n, members):
        return Verdict(VerdictKind.VACUOUS)
    if _subset_conclusion(n, members):
        return Verdict(VerdictKind.CONFIRMED)
    return Verdict(VerdictKind.COUNTEREXAMPLE, _subset_payload(n, members))


# ---------------------------------------------------------------------------
# Candidate generators.


@dataclass(frozen=True)
class Exhaustive:
    n: int


@dataclass(frozen=True)
class Sample:
    n: int
    count: int
    seed: int


@dataclass(frozen=True)
class AndNets:
    n: int


@dataclass(frozen=True)
class Circular:
    n: int


@dataclass(frozen=True)
class NonExpansiveFiltered:
    n: int
    count: int
    seed: int


@dataclass(frozen=True)
class Subsets:
    n: int


Generator = Union[Exhaustive, Sample, AndNets, Circular, NonExpansiveFiltered, Subsets]


def describe_generator(gen: Generator) -> str:
    if isinstance(gen, Exhaustive):
        return f"exhaustive(n={gen.n})"
    if isinstance(gen, Sample):
        return f"sample(n={gen.n},count={gen.count},seed={gen.seed})"
    if isinstance(gen, AndNets):
        return f"family(andnets(n={gen.n}))"
    if isinstance(gen, Circular):
        return f"family(circular(n={gen.n}))"
    if isinstance(gen, NonExpansiveFiltered):
        return f"family(nonexpansive(n={gen.n},count={gen.count},seed={gen.seed}))"
    return f"subsets(n={gen.n})"


def generator_count(gen: Generator) -> int:
    if isinstance(gen, Exhaustive):
        if gen.n > 3:
            raise WidthCapError(f"exhaustive sweeps are capped at width 3, got {gen.n}")
        return 1 << (gen.n << gen.n)
    if isinstance(gen, (Sample, NonExpansiveFiltered)):
        if gen.n > 16:
            raise WidthCapError(f"sampling is capped at width 16, got {gen.n}")
        return gen.count
    if isinstance(gen, AndNets):
        if gen.n > 3:
            raise WidthCapError(f"the and-net family is capped at width 3, got {gen.n}")
        return simple_digraph_count(gen.n)
    if isinstance(gen, Circular):
        if gen.n > 8:
            raise WidthCapError(f"the circular family is capped at width 8, got {gen.n}")
        return math.factorial(gen.n - 1) << gen.n
    if gen.n > 4:
        raise WidthCapError(f"subset sweeps are capped at width 4, got {gen.n}")
    return 1 << (1 << gen.n)


def sample_table_index(n: int, seed: int, index: int) -> int:
    """Partition-independent candidate bits: a keyed hash of (seed, index)."""
    bits = n << n
    digest = hashlib.blake2b(
        f"{seed}:{index}".encode(), digest_size=max(8, (bits + 7) // 8)
    ).digest()
    return int.from_bytes(digest, "big") & ((1 << bits) - 1)


@lru_cache(maxsize=8)
def _cycle_orders(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple((0,) + rest for rest in permutations(range(1, n)))


def circular_candidate(n: int, index: int) -> BooleanNetwork:
    constant = index & ((1 << n) - 1)
    order = _cycle_orders(n)[index >> n]
    pred = [0] * n
    for t, v in enumerate(order):
        pred[v] = order[t - 1]
    return circular_network(
        CircularForm(default_components(n), tuple(pred), constant)
    )


def _and_net_candidate(n: int, index: int) -> BooleanNetwork:
    pos, neg = simple_digraph_rows_from_index(n, index)
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
    return BooleanNetwork(default_components(n), tuple(table))


def candidate_network(gen: Generator, index: int) -> BooleanNetwork:
    if isinstance(gen, Exhaustive):
        return network_from_index(gen.n, index)
    if isinstance(gen, (Sample, NonExpansiveFiltered)):
        return network_from_index(gen.n, sample_table_index(gen.n, gen.seed, index))
    if isinstance(gen, AndNets):
        return _and_net_candidate(gen.n, index)
    if isinstance(gen, Circular):
        return circular_candidate(gen.n, index)
    raise ValueError("subset generators do not yield networks")


# ---------------------------------------------------------------------------
# Sweeping.


@dataclass(frozen=True)
class SweepReport:
    theorem: str
    generator: str
    candidates: int
    vacuous: int
    confirmed: int
    counterexamples: tuple[tuple[int, str], ...]
    notes: tuple[str, ...] = ()
    wall_time_s: float = 0.0

    @property
    def counterexample_count(self) -> int:
        return len(self.counterexamples)

    def _lines(self, include_wall: bool) -> list[str]:
        lines = [
            "# sweep report v1",
            f"candidates={self.candidates}",
            f"confirmed={self.confirmed}",
            f"counterexamples={self.counterexample_count}",
            f"generator={self.generator}",
        ]
        lines.extend(f"note.{note}" for note in sorted(self.notes))
        lines.append(f"theorem={self.theorem}")
        lines.append(f"vacuous={self.vacuous}")
        if include_wall:
            lines.append(f"wall_time_s={self.wall_time_s:.3f}")
        for index, payload in self.counterexamples:
            lines.append("")
            lines.append(f"counterexample candidate={index}")
            lines.extend("  " + row for row in payload.rstrip("\n").splitlines())
        return lines

    def canonical_text(self) -> str:
        """Byte-stable rendering: everything except the wall-time line."""
        return "\n".join(self._lines(include_wall=False)) + "\n"

    def text(self) -> str:
        return "\n".join(self._lines(include_wall=True)) + "\n"

    def __str__(self) -> str:
        return self.text()


@dataclass
class _Tally:
    vacuous: int = 0
    confirmed: int = 0
    counterexamples: list[tuple[int, str]] = field(default_factory=list)
    weak_confirmed: int = 0
    weak_counterexamples: int = 0


def _evaluate_keys(
    keys: tuple[str, ...], gen: Generator, lo: int, hi: int
) -> tuple[dict[str, _Tally], int]:
    tallies = {key: _Tally() for key in keys}
    rejected = 0
    filtered = isinstance(gen, NonExpansiveFiltered)
    subset_mode = isinstance(gen, Subsets)
    for index in range(lo, hi):
        if subset_mode:
            for key in keys:
                tally = tallies[key]
                if not _subset_hypothesis(gen.n, index):
                    tally.vacuous += 1
                elif _subset_conclusion(gen.n, index):
                    tally.confirmed += 1
                else:
                    tally.counterexamples.append(
                        (index, _subset_payload(gen.n, index))
                    )
            continue
        f = candidate_network(gen, index)
        if filtered and not is_non_expansive(f):
            rejected += 1
            continue
        for key in keys:
            tally = tallies[key]
            hyp, concl = NETWORK_CATALOG[key]
            if not hyp(f):
                tally.vacuous += 1
                continue
            if key == "DICHOTOMY_UNIQUE":
                if _fp_count(f) <= 2:
                    tally.weak_confirmed += 1
                else:
                    tally.weak_counterexamples += 1
            if concl(f):
                tally.confirmed += 1
            else:
                tally.counterexamples.append((index, render_bn(f)))
    return tallies, rejected


def _sweep_chunk(args: tuple[tuple[str, ...], Generator, int, int]):
    keys, gen, lo, hi = args
    tallies, rejected = _evaluate_keys(keys, gen, lo, hi)
    return (
        {
            key: (
                tally.vacuous,
                tally.confirmed,
                tally.counterexamples,
                tally.weak_confirmed,
                tally.weak_counterexamples,
            )
            for key, tally in tallies.items()
        },
        rejected,
    )


def _chunk_ranges(count: int, jobs: int) -> list[tuple[int, int]]:
    chunks = max(1, min(count, jobs * 4))
    step = (count + chunks - 1) // chunks
    return [(lo, min(lo + step, count)) for lo in range(0, count, step)]


def sweep_many(
    theorems: Iterable[Union[TheoremId, str]],
    generator: Generator,
    jobs: int = 1,
) -> dict[str, SweepReport]:
    """Run several catalog entries over one candidate stream in a single pass."""
    keys = tuple(_resolve(t) for t in theorems)
    for key in keys:
        if (key == "LEMMA1_HYPERCUBE") != isinstance(generator, Subsets):
            raise ValueError(
                "LEMMA1_HYPERCUBE sweeps over subsets; every other id sweeps networks"
            )
    count = generator_count(generator)
    started = time.perf_counter()
    merged = {key: _Tally() for key in keys}
    rejected_total = 0
    if jobs <= 1 or count < 2:
        tallies, rejected_total = _evaluate_keys(keys, generator, 0, count)
        merged = tallies
    else:
        ranges = _chunk_ranges(count, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk, rejected in pool.map(
                _sweep_chunk, [(keys, generator, lo, hi) for lo, hi in ranges]
            ):
                rejected_total += rejected
                for key, (vac, conf, cexs, wconf, wcex) in chunk.items():
                    tally = merged[key]
                    tally.vacuous += vac
                    tally.confirmed += conf
                    tally.counterexamples.extend(cexs)
                    tally.weak_confirmed += wconf
                    tally.weak_counterexamples += wcex
    wall = time.perf_counter() - started
    descriptor = describe_generator(generator)
    reports = {}
    for key in keys:
        tally = merged[key]
        notes = []
        if isinstance(generator, NonExpansiveFiltered):
            accepted = count - rejected_total
            notes.append(f"accepted={accepted}/{count}")
        if key == "DICHOTOMY_UNIQUE":
            notes.append(f"weak_at_most_two_confirmed={tally.weak_confirmed}")
            notes.append(
                f"weak_at_most_two_counterexamples={tally.weak_counterexamples}"
            )
        candidates = count - (
            rejected_total if isinstance(generator, NonExpansiveFiltered) else 0
        )
        reports[key] = SweepReport(
            theorem=key,
            generator=descriptor,
            candidates=candidates,
            vacuous=tally.vacuous,
            confirmed=tally.confirmed,
            counterexamples=tuple(sorted(tally.counterexamples)),
            notes=tuple(notes),
            wall_time_s=wall,
        )
    return reports


def sweep(
    theorem: Union[TheoremId, str], generator: Generator, jobs: int = 1
) -> SweepReport:
    key = _resolve(theorem)
    return sweep_many([key], generator, jobs=jobs)[key]


def check(
    theorem: Union[TheoremId, str],
    candidate: Union[BooleanNetwork, Iterable[Point]],
) -> Verdict:
    """Classify one candidate: Vacuous, Confirmed, or Counterexample."""
    key = _resolve(theorem)
    if key == "LEMMA1_HYPERCUBE":
        if isinstance(candidate, BooleanNetwork):
            raise ValueError("LEMMA1_HYPERCUBE expects a set of points")
        return check_point_set(candidate)
    if not isinstance(candidate, BooleanNetwork):
        raise ValueError(f"{key} expects a BooleanNetwork")
    hyp, concl = NETWORK_CATALOG[key]
    if not hyp(candidate):
        return Verdict(VerdictKind.VACUOUS)
    if concl(candidate):
        return Verdict(VerdictKind.CONFIRMED)
    return Verdict(VerdictKind.COUNTEREXAMPLE, render_bn(candidate))


# ---------------------------------------------------------------------------
# Open questions: violations are discoveries to report, not failures.

_QUESTIONS: dict[
    str, tuple[Callable[[BooleanNetwork], bool], Callable[[BooleanNetwork], bool]]
] = {
    # Does every network without negative local cycles have a fixed point?
    "Q1_NEG_LOCAL_CYCLES": (
        lambda f: not _local_cycle_signs(f)[1],
        lambda f: _fp_count(f) == 0,
    ),
    # Is every 0-critical and-net a negative circular network?
    "Q2_0CRITICAL_ANDNET": (
        lambda f: is_and_net(f) and is_zero_critical(f),
        lambda f: _circular_sign(f) != -1,
    ),
}


@dataclass(frozen=True)
class SearchReport:
    question: str
    generator: str
    examined: int
    hypothesis_hits: int
    discoveries: tuple[tuple[int, str], ...]
    notes: tuple[str, ...] = ()
    wall_time_s: float = 0.0

    @property
    def discovery_count(self) -> int:
        return len(self.discoveries)

    def _lines(self, include_wall: bool) -> list[str]:
        lines = [
            "# search report v1",
            f"discoveries={self.discovery_count}",
            f"examined={self.examined}",
            f"generator={self.generator}",
            f"hypothesis_hits={self.hypothesis_hits}",
        ]
        lines.extend(f"note.{note}" for note in sorted(self.notes))
        lines.append(f"question={self.question}")
        if include_wall:
            lines.append(f"wall_time_s={self.wall_time_s:.3f}")
        for index, payload in self.discoveries:
            lines.append("")
            lines.append(f"discovery candidate={index}")
            lines.extend("  " + row for row in payload.rstrip("\n").splitlines())
        return lines

    def canonical_text(self) -> str:
        return "\n".join(self._lines(include_wall=False)) + "\n"

    def text(self) -> str:
        return "\n".join(self._lines(include_wall=True)) + "\n"

    def __str__(self) -> str:
        return self.text()


def _search_chunk(args: tuple[str, Generator, int, int]):
    key, gen, lo, hi = args
    hyp, is_discovery = _QUESTIONS[key]
    hits = 0
    discoveries: list[tuple[int, str]] = []
    for index in range(lo, hi):
        f = candidate_network(gen, index)
        if not hyp(f):
            continue
        hits += 1
        if is_discovery(f):
            discoveries.append((index, render_bn(f)))
    return hits, discoveries


def open_question_search(
    question: Union[OpenQuestion, str],
    generator: Generator,
    budget: int | None = None,
    jobs: int = 1,
) -> SearchReport:
    key = question.name if isinstance(question, OpenQuestion) else str(question)
    if key not in _QUESTIONS:
        raise ValueError(f"unknown open question {key!r}")
    if isinstance(generator, Subsets):
        raise ValueError("open questions sweep networks, not subsets")
    count = generator_count(generator)
    if budget is not None:
        count = min(count, budget)
    started = time.perf_counter()
    hits = 0
    discoveries: list[tuple[int, str]] = []
    if jobs <= 1 or count < 2:
        hits, discoveries = _search_chunk((key, generator, 0, count))
    else:
        ranges = _chunk_ranges(count, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk_hits, chunk_discoveries in pool.map(
                _search_chunk, [(key, generator, lo, hi) for lo, hi in ranges]
            ):
                hits += chunk_hits
                discoveries.extend(chunk_discoveries)
    wall = time.perf_counter() - started
    return SearchReport(
        question=key,
        generator=describe_generator(generator),
        examined=count,
        hypothesis_hits=hits,
        discoveries=tuple(sorted(discoveries)),
        wall_time_s=wall,
    )
