"""Rankings, the validity predicate, and the four supported graph families.

A ranking labels every vertex with a positive integer so that any path
between two equally labeled vertices passes through a strictly larger
label.  The closed-form rankings built here are the ones whose structure
the good-edge constructions in `construct` rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, mask_of


def trailing_zeros(m: int) -> int:
    if m < 1:
        raise ValueError("positive integer required")
    return (m & -m).bit_length() - 1


def position_label(m: int) -> int:
    """Label of the vertex in position m of a standard path ranking.

    One more than the exponent of the largest power of two dividing m.
    """
    return trailing_zeros(m) + 1


@dataclass(frozen=True)
class Ranking:
    """Vertex labels aligned with vertex ids: labels[i] labels vertex i+1."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if any(l < 1 for l in self.labels):
            raise ValueError("labels must be positive integers")

    def label(self, v: int) -> int:
        return self.labels[v - 1]

    @property
    def max_label(self) -> int:
        return max(self.labels)

    def to_json_dict(self) -> dict:
        return {"labels": list(self.labels)}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Ranking":
        return cls(tuple(int(x) for x in obj["labels"]))


@dataclass(frozen=True)
class FamilySpec:
    """One of the four supported graph families, with its parameters.

    kinds: "path" (2^k - 1 vertices), "cycle" (2^k vertices),
    "multipartite" (complete multipartite, parts sorted descending),
    "joined" (two n-cliques joined by a single edge).
    """

    kind: str
    k: int | None = None
    parts: tuple[int, ...] | None = None
    n: int | None = None

    def __post_init__(self):
        if self.kind in ("path", "cycle"):
            if self.k is None or self.parts is not None or self.n is not None:
                raise ValueError(f"{self.kind} takes exactly the parameter k")
            if self.kind == "path" and self.k < 1:
                raise ValueError("path requires k >= 1")
            if self.kind == "cycle" and self.k < 2:
                raise ValueError("cycle requires k >= 2")
        elif self.kind == "multipartite":
            if self.parts is None or self.k is not None or self.n is not None:
                raise ValueError("multipartite takes exactly the part sizes")
            if len(self.parts) < 2 or any(m < 1 for m in self.parts):
                raise ValueError("multipartite requires at least two parts of size >= 1")
            object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))
        elif self.kind == "joined":
            if self.n is None or self.k is not None or self.parts is not None:
                raise ValueError("joined takes exactly the parameter n")
            if self.n < 2:
                raise ValueError("joined requires n >= 2")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @classmethod
    def path(cls, k: int) -> "FamilySpec":
        return cls("path", k=k)

    @classmethod
    def cycle(cls, k: int) -> "FamilySpec":
        return cls("cycle", k=k)

    @classmethod
    def multipartite(cls, *parts: int) -> "FamilySpec":
        return cls("multipartite", parts=tuple(parts))

    @classmethod
    def joined(cls, n: int) -> "FamilySpec":
        return cls("joined", n=n)

    @property
    def vertex_count(self) -> int:
        if self.kind == "path":
            return 2 ** self.k - 1
        if self.kind == "cycle":
            return 2 ** self.k
        if self.kind == "multipartite":
            return sum(self.parts)
        return 2 * self.n

    def describe(self) -> str:
        if self.kind == "path":
            return f"path on {self.vertex_count} vertices (k={self.k})"
        if self.kind == "cycle":
            return f"cycle on {self.vertex_count} vertices (k={self.k})"
        if self.kind == "multipartite":
            return "complete multipartite with parts " + ",".join(map(str, self.parts))
        return f"two {self.n}-cliques joined by an edge"

    def to_json_dict(self) -> dict:
        if self.kind in ("path", "cycle"):
            return {"kind": self.kind, "k": self.k}
        if self.kind == "multipartite":
            return {"kind": self.kind, "parts": list(self.parts)}
        return {"kind": self.kind, "n": self.n}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "FamilySpec":
        kind = obj["kind"]
        if kind in ("path", "cycle"):
            return cls(kind, k=int(obj["k"]))
        if kind == "multipartite":
            return cls(kind, parts=tuple(int(m) for m in obj["parts"]))
        return cls(kind, n=int(obj["n"]))


def build_family(spec: FamilySpec) -> Graph:
    """Concrete graph of a family, with its canonical vertex numbering.

    Paths and cycles are numbered along the walk.  Multipartite parts are
    numbered consecutively, largest part first.  Joined cliques number the
    first clique 1..n and the second n+1..2n, with the join edge {1, 2n}.
    """
    if spec.kind == "path":
        n = 2 ** spec.k - 1
        return Graph(n, [(i, i + 1) for i in range(1, n)])
    if spec.kind == "cycle":
        n = 2 ** spec.k
        es = [(i, i + 1) for i in range(1, n)] + [(1, n)]
        return Graph(n, es)
    if spec.kind == "multipartite":
        n = sum(spec.parts)
        bounds = []
        start = 1
        for m in spec.parts:
            bounds.append(range(start, start + m))
            start += m
        es = []
        for i, p in enumerate(bounds):
            for q in bounds[i + 1:]:
                es.extend((u, v) for u in p for v in q)
        return Graph(n, es)
    # joined cliques
    n = spec.n
    es = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    es += [(u, v) for u in range(n + 1, 2 * n + 1) for v in range(u + 1, 2 * n + 1)]
    es.append((1, 2 * n))
    return Graph(2 * n, es)


def standard_path_ranking(k: int) -> Ranking:
    """The unique optimal ranking of the path on 2^k - 1 vertices."""
    if k < 1:
        raise ValueError("k >= 1 required")
    n = 2 ** k - 1
    return Ranking(tuple(position_label(i) for i in range(1, n + 1)))


def standard_cycle_ranking(k: int) -> Ranking:
    """Optimal ranking of the cycle on 2^k vertices: the standard path
    ranking on the first 2^k - 1 vertices, with the last vertex on top."""
    if k < 2:
        raise ValueError("k >= 2 required")
    n = 2 ** k
    return Ranking(tuple(position_label(i) for i in range(1, n)) + (k + 1,))


def multipartite_ranking(spec: FamilySpec) -> Ranking:
    """Optimal ranking of a complete multipartite graph: the first largest
    part all labeled 1, every other vertex a distinct label 2, 3, ..."""
    if spec.kind != "multipartite":
        raise ValueError("multipartite spec required")
    labels = [1] * spec.parts[0]
    nxt = 2
    for m in spec.parts[1:]:
        labels.extend(range(nxt, nxt + m))
        nxt += m
    return Ranking(tuple(labels))


def joined_cliques_ranking(n: int) -> Ranking:
    """Optimal ranking of two joined n-cliques: both cliques labeled 1..n in
    vertex order, except the second clique's join endpoint gets n + 1."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return Ranking(tuple(range(1, n + 1)) + tuple(range(1, n)) + (n + 1,))


def family_ranking(spec: FamilySpec) -> Ranking:
    if spec.kind == "path":
        return standard_path_ranking(spec.k)
    if spec.kind == "cycle":
        return standard_cycle_ranking(spec.k)
    if spec.kind == "multipartite":
        return multipartite_ranking(spec)
    return joined_cliques_ranking(spec.n)


def family_rank_value(spec: FamilySpec) -> int:
    """Rank number of the family graph (k, k+1, N - m_1 + 1, or n + 1)."""
    if spec.kind == "path":
        return spec.k
    if spec.kind == "cycle":
        return spec.k + 1
    if spec.kind == "multipartite":
        return sum(spec.parts) - spec.parts[0] + 1
    return spec.n + 1


def is_valid_ranking(g: Graph, r: Ranking) -> bool:
    """Check the ranking property via induced prefix components.

    For each label value c, the subgraph induced by vertices labeled <= c
    may contain at most one vertex labeled c per connected component.  This
    is equivalent to the path formulation but avoids path enumeration.
    """
    verts = g.vertices()
    if len(r.labels) < g.n or any(v > len(r.labels) for v in verts):
        raise ValueError("ranking does not label every vertex of the graph")
    values = sorted({r.label(v) for v in verts})
    for c in values:
        level = mask_of(v for v in verts if r.label(v) <= c)
        for comp in g.connected_components(level):
            hits = sum(1 for v in bits(comp) if r.label(v) == c)
            if hits > 1:
                return False
    return True
