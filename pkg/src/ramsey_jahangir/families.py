"""Parametric pattern families and the extremal clique-union constructions.

Patterns carry a canonical labeling that the rest of the package relies on:
paths and cycles are numbered along the traversal, wheels and Jahangir
graphs number the rim 0..sm-1 with the hub last, and the Jahangir spokes
sit at rim positions 0, s, 2s, ...
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, from_edges


class UnsupportedPartitionError(ValueError):
    """Cycle containment question outside the supported partition shapes."""


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("path needs n >= 1")

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("cycle needs n >= 3")

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class Wheel:
    """Cycle on k rim vertices plus a hub adjacent to every rim vertex."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValueError("wheel needs rim length k >= 3")

    @property
    def order(self) -> int:
        return self.k + 1


@dataclass(frozen=True)
class Jahangir:
    """Cycle on s*m rim vertices plus a hub on every s-th rim vertex.

    The hub is adjacent to the m rim vertices at mutual rim distance s,
    i.e. rim positions 0, s, ..., (m-1)s.  Requires s >= 2 and m >= 2.
    """

    s: int
    m: int

    def __post_init__(self) -> None:
        if self.s < 2:
            raise ValueError("rim step s >= 2 required")
        if self.m < 2:
            raise ValueError("spoke count m >= 2 required")

    @property
    def order(self) -> int:
        return self.s * self.m + 1


@dataclass(frozen=True)
class DisjointPaths:
    """t vertex-disjoint paths, each on n vertices."""

    t: int
    n: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("need t >= 1 paths")
        if self.n < 1:
            raise ValueError("path needs n >= 1")

    @property
    def order(self) -> int:
        return self.t * self.n


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("complete graph needs n >= 1")

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class CliqueUnion:
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ValueError("need at least one clique")
        if any(s < 1 for s in self.sizes):
            raise ValueError("clique sizes must be positive")

    @property
    def order(self) -> int:
        return sum(self.sizes)


PatternSpec = Path | Cycle | Wheel | Jahangir | DisjointPaths | Complete | CliqueUnion


def pattern_edges(spec: PatternSpec) -> list[tuple[int, int]]:
    """Edge list of the canonical labeling of ``spec``."""
    if isinstance(spec, Path):
        return [(i, i + 1) for i in range(spec.n - 1)]
    if isinstance(spec, Cycle):
        return [(i, (i + 1) % spec.n) for i in range(spec.n)]
    if isinstance(spec, Wheel):
        rim = [(i, (i + 1) % spec.k) for i in range(spec.k)]
        return rim + [(i, spec.k) for i in range(spec.k)]
    if isinstance(spec, Jahangir):
        sm = spec.s * spec.m
        rim = [(i, (i + 1) % sm) for i in range(sm)]
        return rim + [(j * spec.s, sm) for j in range(spec.m)]
    if isinstance(spec, DisjointPaths):
        out = []
        for block in range(spec.t):
            base = block * spec.n
            out.extend((base + i, base + i + 1) for i in range(spec.n - 1))
        return out
    if isinstance(spec, Complete):
        return [(i, j) for j in range(spec.n) for i in range(j)]
    if isinstance(spec, CliqueUnion):
        out = []
        base = 0
        for size in spec.sizes:
            out.extend((base + i, base + j) for j in range(size) for i in range(j))
            base += size
        return out
    raise TypeError(f"not a pattern spec: {spec!r}")


def build(spec: PatternSpec) -> Graph:
    return from_edges(spec.order, pattern_edges(spec))


def format_spec(spec: PatternSpec) -> str:
    if isinstance(spec, Path):
        return f"P{spec.n}"
    if isinstance(spec, Cycle):
        return f"C{spec.n}"
    if isinstance(spec, Wheel):
        return f"W{spec.k}"
    if isinstance(spec, Jahangir):
        return f"J{spec.s},{spec.m}"
    if isinstance(spec, DisjointPaths):
        return f"{spec.t}P{spec.n}"
    if isinstance(spec, Complete):
        return f"K{spec.n}"
    if isinstance(spec, CliqueUnion):
        return "+".join(f"K{s}" for s in spec.sizes)
    raise TypeError(f"not a pattern spec: {spec!r}")


def parse_spec(text: str) -> PatternSpec:
    """Parse the CLI pattern syntax: P23, C6, W6, J2,3, 2P23, K5, K3+K1.

    Letters are case-insensitive; whitespace is rejected rather than
    stripped so malformed batch input fails loudly.
    """
    if any(ch.isspace() for ch in text):
        raise ValueError(f"whitespace not allowed in pattern {text!r}")
    t = text.upper()
    if not t:
        raise ValueError("empty pattern")
    if "+" in t:
        sizes = []
        for part in t.split("+"):
            if not part.startswith("K") or not part[1:].isdigit():
                raise ValueError(f"bad clique-union component {part!r} in {text!r}")
            sizes.append(int(part[1:]))
        return CliqueUnion(tuple(sizes))
    head = t[0]
    if head == "P" and t[1:].isdigit():
        return Path(int(t[1:]))
    if head == "C" and t[1:].isdigit():
        return Cycle(int(t[1:]))
    if head == "W" and t[1:].isdigit():
        return Wheel(int(t[1:]))
    if head == "K" and t[1:].isdigit():
        return Complete(int(t[1:]))
    if head == "J":
        bits = t[1:].split(",")
        if len(bits) == 2 and all(b.isdigit() for b in bits):
            return Jahangir(int(bits[0]), int(bits[1]))
        raise ValueError(f"bad pattern {text!r}: expected Js,m with integer s, m")
    if t[0].isdigit():
        digits = 0
        while digits < len(t) and t[digits].isdigit():
            digits += 1
        if digits < len(t) and t[digits] == "P" and t[digits + 1 :].isdigit():
            return DisjointPaths(int(t[:digits]), int(t[digits + 1 :]))
    raise ValueError(f"unrecognized pattern {text!r}")


# ---------------------------------------------------------------------------
# Extremal lower-bound constructions.
#
# These build the clique unions whose complements avoid the Jahangir target;
# they are the order R-1 witnesses for the three Ramsey regimes.  Only shape
# constraints are validated here (parities, minimal s and m): the graphs are
# valid lower-bound witnesses for every n, while the n-thresholds of the
# dichotomy theorems are enforced by the extractors in `witness`.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Thm1:
    """Even rim step: K_{n-1} + K_{sm/2-1}."""

    n: int
    s: int
    m: int

    def __post_init__(self) -> None:
        if self.s < 2 or self.s % 2:
            raise ValueError("this regime needs even s >= 2")
        if self.m < 3:
            raise ValueError("this regime needs m >= 3")
        if self.n < 2:
            raise ValueError("n >= 2 required")


@dataclass(frozen=True)
class Thm2EvenM:
    """Odd rim step, even spoke count: 2 K_{n-1}."""

    n: int
    s: int
    m: int

    def __post_init__(self) -> None:
        if self.s < 3 or self.s % 2 == 0:
            raise ValueError("this regime needs odd s >= 3")
        if self.m < 2 or self.m % 2:
            raise ValueError("this regime needs even m >= 2")
        if self.n < 2:
            raise ValueError("n >= 2 required")


@dataclass(frozen=True)
class Thm2OddM:
    """Odd rim step, odd spoke count: K_1 + 2 K_{n-1}."""

    n: int
    s: int
    m: int

    def __post_init__(self) -> None:
        if self.s < 3 or self.s % 2 == 0:
            raise ValueError("this regime needs odd s >= 3")
        if self.m < 3 or self.m % 2 == 0:
            raise ValueError("this regime needs odd m >= 3")
        if self.n < 2:
            raise ValueError("n >= 2 required")


@dataclass(frozen=True)
class Thm3:
    """t disjoint paths, even rim step: K_{sm/2-1} + K_{tn-1}."""

    t: int
    n: int
    s: int
    m: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("t >= 1 required")
        if self.s < 2 or self.s % 2:
            raise ValueError("this regime needs even s >= 2")
        if self.m < 3:
            raise ValueError("this regime needs m >= 3")
        if self.n < 2:
            raise ValueError("n >= 2 required")


TheoremCase = Thm1 | Thm2EvenM | Thm2OddM | Thm3


def extremal_graph(case: TheoremCase) -> Graph:
    """Build the lower-bound witness for ``case`` (order R-1)."""
    if isinstance(case, Thm1):
        return build(CliqueUnion((case.n - 1, case.s * case.m // 2 - 1)))
    if isinstance(case, Thm2EvenM):
        return build(CliqueUnion((case.n - 1, case.n - 1)))
    if isinstance(case, Thm2OddM):
        return build(CliqueUnion((1, case.n - 1, case.n - 1)))
    if isinstance(case, Thm3):
        return build(CliqueUnion((case.s * case.m // 2 - 1, case.t * case.n - 1)))
    raise TypeError(f"not a theorem case: {case!r}")


def build_complete_multipartite(part_sizes: list[int] | tuple[int, ...]) -> Graph:
    parts = list(part_sizes)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    starts = []
    base = 0
    for p in parts:
        starts.append(base)
        base += p
    edge_list = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(starts[a], starts[a] + parts[a]):
                for v in range(starts[b], starts[b] + parts[b]):
                    edge_list.append((u, v))
    return from_edges(n, edge_list)


def multipartite_contains_even_cycle(
    part_sizes: list[int] | tuple[int, ...],
    cycle_len: int,
    *,
    search_cap: int = 12,
    budget: int | None = None,
) -> bool:
    """Does the complete multipartite graph with these parts contain C_L?

    Two parts are answered exactly by the bipartite rule (L even and both
    parts at least L/2).  More parts fall back to explicit search when the
    total order is within ``search_cap``; beyond that the question is
    refused rather than guessed.
    """
    parts = list(part_sizes)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    if cycle_len < 3:
        raise ValueError("cycle length >= 3 required")
    if len(parts) == 1:
        return False
    if len(parts) == 2:
        a, b = parts
        return cycle_len % 2 == 0 and min(a, b) >= cycle_len // 2
    if sum(parts) <= search_cap:
        from .embedding import find_subgraph

        host = build_complete_multipartite(parts)
        result = find_subgraph(host, Cycle(cycle_len), budget=budget)
        if result.status == "unknown":
            raise UnsupportedPartitionError("search budget exhausted")
        return result.status == "present"
    raise UnsupportedPartitionError(
        f"3+ parts with total order {sum(parts)} exceeds the search cap {search_cap}"
    )
