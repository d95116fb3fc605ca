"""Closed-form good-edge constructions and edge counts for the four families.

The path construction is organized around "centers": vertices whose
standard-ranking label is at least 3, i.e. positions divisible by 4.  A
center c with lowest set bit 2^j dominates the open block
(c - 2^j, c + 2^j); joining c to any non-neighbor inside its block keeps
the standard ranking valid, and those are exactly the addable edges.

The published procedure enumerates the same set from the smaller endpoint
of each edge.  Taken literally it drops two groups of addable edges, so
the literal clause readings are kept available as variants for auditing
(see `path_good_edges` and the CLI's --strict-paper mode).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, edge, mask_of
from .ranking import (FamilySpec, Ranking, build_family, standard_path_ranking,
                      trailing_zeros)

VARIANTS = ("corrected", "printed", "literal")


@dataclass(frozen=True)
class EdgeSet:
    """A sorted, duplicate-free set of candidate edges with provenance tags.

    `tags[i]` records which construction clause produced `edges[i]`.
    """

    family: FamilySpec | None
    edges: tuple[tuple[int, int], ...]
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.tags):
            raise ValueError("one tag per edge required")
        if list(self.edges) != sorted(set(self.edges)):
            raise ValueError("edges must be sorted and duplicate-free")

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, e):
        return tuple(e) in set(self.edges)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family.to_json_dict() if self.family else None,
            "edges": [list(e) for e in self.edges],
            "clauses": list(self.tags),
        }


def _make_edge_set(family: FamilySpec | None,
                   tagged: dict[tuple[int, int], str]) -> EdgeSet:
    es = sorted(tagged)
    return EdgeSet(family, tuple(es), tuple(tagged[e] for e in es))


def flip_bit(bit: int) -> int:
    """Complement of a single binary digit."""
    if bit not in (0, 1):
        raise ValueError("binary digit required")
    return 1 - bit


def next_center(m: int, s: int) -> int:
    """Offset m+1 + sum of 2^i over the zero bits of odd m at positions 1..s.

    Equals the smallest multiple of 2^(s+1) above m: the nearest position to
    the right of m whose standard-ranking label exceeds s + 1.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError("odd positive m required")
    t = m.bit_length() - 1
    if not 1 <= s <= t - 1:
        raise ValueError(f"s must be in 1..{t - 1} for m={m}")
    return m + 1 + sum(flip_bit((m >> i) & 1) * 2 ** i for i in range(1, s + 1))


def _block_radius(c: int) -> int:
    return c & -c


def _centers(limit: int):
    return range(4, limit + 1, 4)


def path_good_targets(m: int, k: int, variant: str = "corrected") -> set[int]:
    """Positions n > m such that joining v_m to v_n is addable to the path
    on 2^k - 1 vertices without raising its rank number.

    The "printed" and "literal" variants reproduce the published procedure
    clauses verbatim (``literal`` restricts the interior-run clause to
    l > 0); both miss some addable edges and exist for auditing.
    """
    peak = 2 ** k - 1
    if not 1 <= m <= peak:
        raise ValueError(f"m must be in 1..{peak}")
    if variant == "corrected":
        res = set()
        if m % 4 == 0:
            res.update(range(m + 2, min(m + _block_radius(m) - 1, peak) + 1))
        for c in _centers(peak):
            if c >= m + 2 and c - _block_radius(c) < m:
                res.add(c)
        return res
    if variant in ("printed", "literal"):
        return set(_printed_targets(m, k, l_min=1 if variant == "literal" else 0))
    raise ValueError(f"unknown variant {variant!r}")


def _printed_targets(m: int, k: int, l_min: int) -> dict[int, str]:
    """The three published clauses, applied verbatim; returns n -> clause."""
    peak = 2 ** k - 1
    t = m.bit_length() - 1
    j = trailing_zeros(m)
    l = ((m >> j) - 1) // 2
    res: dict[int, str] = {}
    if m % 2 == 1:
        w = t + 1
        while 2 ** w <= peak:
            res.setdefault(2 ** w, "1")
            w += 1
        for s in range(1, t):
            n = next_center(m, s)
            if n <= peak:
                res.setdefault(n, "1")
    if l >= l_min:
        for n in range(m + 2, min(2 ** j * (2 * l + 2) - 1, peak) + 1):
            res.setdefault(n, "2")
    w = (2 ** j * (2 * l + 2) - 1).bit_length()
    while 2 ** w <= peak:
        res.setdefault(2 ** w, "3")
        w += 1
    return {n: c for n, c in res.items() if m + 2 <= n <= peak}


def path_good_edges(k: int, variant: str = "corrected") -> EdgeSet:
    """Addable-edge set for the path on 2^k - 1 vertices.

    The corrected construction walks the centers and emits each center's
    block; its size is (k-3)*2^k + 4.
    """
    if k < 3:
        raise ValueError("k >= 3 required")
    spec = FamilySpec.path(k)
    peak = 2 ** k - 1
    tagged: dict[tuple[int, int], str] = {}
    if variant == "corrected":
        for c in _centers(peak):
            r = _block_radius(c)
            for x in range(max(1, c - r + 1), min(peak, c + r - 1) + 1):
                if abs(x - c) >= 2:
                    side = "L" if x < c else "R"
                    tagged[edge(x, c)] = f"block:{c}{side}"
    else:
        for m in range(1, peak + 1):
            for n, clause in _printed_targets(
                    m, k, l_min=1 if variant == "literal" else 0).items():
                tagged.setdefault(edge(m, n), f"clause:{clause}")
    return _make_edge_set(spec, tagged)


def vertices_labeled_at_least(r: Ranking, j: int) -> int:
    """Bitmask of the vertices whose label is at least j."""
    return mask_of(v for v in range(1, len(r.labels) + 1) if r.label(v) >= j)


def non_neighbor_edges(g: Graph, component: int, v: int) -> EdgeSet:
    """Edges from v to every non-neighbor of v inside the given component."""
    if not (component >> v) & 1:
        raise ValueError(f"vertex {v} is not in the component")
    others = component & ~(1 << v) & ~g.neighbors_mask(v)
    tagged = {edge(v, w): f"at:{v}" for w in bits(others)}
    return _make_edge_set(None, tagged)


def level_good_edges(k: int, j: int) -> EdgeSet:
    """Addable edges of the path at level j: one star of completion edges per
    component left after removing all vertices labeled >= j, centered on the
    component's unique vertex labeled j - 1.

    Level k+1 removes nothing and yields the star of the global top vertex.
    """
    if k < 3:
        raise ValueError("k >= 3 required")
    if not 4 <= j <= k + 1:
        raise ValueError(f"j must be in 4..{k + 1}")
    g = build_family(FamilySpec.path(k))
    r = standard_path_ranking(k)
    high = vertices_labeled_at_least(r, j)
    tagged: dict[tuple[int, int], str] = {}
    for comp in g.connected_components(g.members & ~high):
        tops = [v for v in bits(comp) if r.label(v) == j - 1]
        if len(tops) != 1:
            raise AssertionError(f"component lacks a unique top at level {j}")
        v = tops[0]
        for e in non_neighbor_edges(g, comp, v):
            tagged[e] = f"level{j}:v{v}"
    return _make_edge_set(FamilySpec.path(k), tagged)


def all_levels_good_edges(k: int, top: int | None = None) -> EdgeSet:
    """Union of the level constructions for j = 4..top (default top = k+1).

    `top = k` reproduces the published union bound, which undercounts.
    """
    if k < 3:
        raise ValueError("k >= 3 required")
    stop = k + 1 if top is None else top
    tagged: dict[tuple[int, int], str] = {}
    for j in range(4, stop + 1):
        for e, tag in zip(level_good_edges(k, j).edges, level_good_edges(k, j).tags):
            tagged.setdefault(e, tag)
    return _make_edge_set(FamilySpec.path(k), tagged)


def cycle_good_edges(k: int, variant: str = "corrected") -> EdgeSet:
    """Addable-edge set for the cycle on 2^k vertices: the path construction
    plus every chord from the top vertex 2^k except to its two neighbors.
    Size (k-2)*2^k + 1."""
    if k < 3:
        raise ValueError("k >= 3 required")
    hub = 2 ** k
    tagged: dict[tuple[int, int], str] = {}
    path_part = path_good_edges(k, variant)
    tagged.update(zip(path_part.edges, path_part.tags))
    for i in range(2, hub - 1):
        tagged[edge(i, hub)] = "hub"
    return _make_edge_set(FamilySpec.cycle(k), tagged)


def _part_ranges(spec: FamilySpec) -> list[range]:
    out = []
    start = 1
    for m in spec.parts:
        out.append(range(start, start + m))
        start += m
    return out


def multipartite_good_edges(spec: FamilySpec) -> EdgeSet:
    """Intra-part pairs of every part after the designated largest one."""
    tagged = {}
    for i, rng in enumerate(_part_ranges(spec)):
        if i == 0:
            continue
        for u, v in combinations(rng, 2):
            tagged[edge(u, v)] = f"part{i + 1}"
    return _make_edge_set(spec, tagged)


def multipartite_forbidden_edges(spec: FamilySpec) -> EdgeSet:
    """Intra-part pairs of the designated largest part."""
    rng = _part_ranges(spec)[0]
    tagged = {edge(u, v): "part1" for u, v in combinations(rng, 2)}
    return _make_edge_set(spec, tagged)


def joined_good_edges(n: int) -> EdgeSet:
    """Addable edges of two joined n-cliques: the top-labeled vertex of each
    clique joined to every vertex of the other clique, minus the existing
    join edge.  Size 2(n-1)."""
    if n < 2:
        raise ValueError("n >= 2 required")
    tagged: dict[tuple[int, int], str] = {}
    w_top, v_top = n, 2 * n
    for i in range(1, n + 1):
        tagged[edge(w_top, n + i)] = "top-w"
    for i in range(2, n + 1):
        e = edge(v_top, i)
        tagged[e] = "top-w,top-v" if e in tagged else "top-v"
    return _make_edge_set(FamilySpec.joined(n), tagged)


def family_good_edges(spec: FamilySpec, variant: str = "corrected") -> EdgeSet:
    if spec.kind == "path":
        return path_good_edges(spec.k, variant)
    if spec.kind == "cycle":
        return cycle_good_edges(spec.k, variant)
    if spec.kind == "multipartite":
        return multipartite_good_edges(spec)
    return joined_good_edges(spec.n)


# -- closed-form counts -------------------------------------------------

def mu_path(k: int) -> int:
    """(k-3)*2^k + 4 addable edges for the path on 2^k - 1 vertices."""
    if k < 3:
        raise ValueError("k >= 3 required")
    return (k - 3) * 2 ** k + 4


def mu_path_recurrence(k: int) -> int:
    """Same count by the doubling recurrence a_k = 2*a_{k-1} + 2^k - 4,
    anchored at a_3 = 4 (the exhaustively verified count for 7 vertices)."""
    if k < 3:
        raise ValueError("k >= 3 required")
    a = 4
    for i in range(4, k + 1):
        a = 2 * a + 2 ** i - 4
    return a


def mu_cycle(k: int) -> int:
    """(k-2)*2^k + 1 addable edges for the cycle on 2^k vertices."""
    if k < 3:
        raise ValueError("k >= 3 required")
    return (k - 2) * 2 ** k + 1


def mu_multipartite(*parts: int) -> int:
    """Sum of (m_i - 1) * m_i / 2 over all parts after the largest."""
    spec = FamilySpec.multipartite(*parts)
    return sum(m * (m - 1) // 2 for m in spec.parts[1:])


def mu_joined(n: int) -> int:
    """2(n-1) addable edges for two joined n-cliques."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return 2 * (n - 1)


def mu_value(spec: FamilySpec) -> int:
    if spec.kind == "path":
        return mu_path(spec.k)
    if spec.kind == "cycle":
        return mu_cycle(spec.k)
    if spec.kind == "multipartite":
        return mu_multipartite(*spec.parts)
    return mu_joined(spec.n)
