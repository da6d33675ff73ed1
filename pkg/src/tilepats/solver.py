"""Exact minimum tile set synthesis for small patterns.

A tile set that uniquely assembles a pattern induces a partition of the
pattern's cells (cells grouped by tile type). Conversely a colour-consistent
partition yields a tile set once glue classes are closed under:

R1  cells of one block share their north, south, east and west glues;
R2  the edge between two adjacent cells is a single glue;
R3  two blocks with the same (south, west) glue classes must be one block.

The search enumerates partitions in row-major order with branch and bound and
maintains the closure incrementally on a union-find with rollback.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product

from .assembler import verify_solves
from .tiles import Cell, Pattern, SeedGlues, TileSet, TileType, canonical_form, check_uniqueness

log = logging.getLogger(__name__)

DEFAULT_GUARD = 40
BRUTE_FORCE_GUARD = 9


class ClosureSoundnessError(RuntimeError):
    """Closure produced a tile set that does not re-assemble the pattern."""


class SearchLimit(RuntimeError):
    """Search stopped before proving optimality."""

    def __init__(self, message: str, best: "Certificate | None", lower_bound: int):
        super().__init__(message)
        self.best = best
        self.lower_bound = lower_bound


@dataclass(frozen=True)
class Certificate:
    k: int
    tileset: TileSet
    seed: SeedGlues


# edges -------------------------------------------------------------------------

class EdgeIndex:
    """Integer ids for every cell boundary of a ``width`` x ``height`` pattern.

    Vertical edge ``V(x, y)`` separates ``(x, y)`` from ``(x + 1, y)`` for
    ``x = 0..width``; ``V(0, y)`` faces the seed column. Horizontal edge
    ``H(x, y)`` separates ``(x, y)`` from ``(x, y + 1)`` for ``y = 0..height``.
    """

    def __init__(self, width: int, height: int):
        self.width, self.height = width, height
        self.n_vertical = (width + 1) * height
        self.size = self.n_vertical + width * (height + 1)

    def v(self, x: int, y: int) -> int:
        return x * self.height + (y - 1)

    def h(self, x: int, y: int) -> int:
        return self.n_vertical + (x - 1) * (self.height + 1) + y

    def sides(self, cell: Cell) -> tuple[int, int, int, int]:
        """(north, south, east, west) edge ids of ``cell``."""
        x, y = cell
        return self.h(x, y), self.h(x, y - 1), self.v(x, y), self.v(x - 1, y)


class RollbackUnionFind:
    """Union by size without path compression, so unions can be undone."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.weight = [1] * n
        self.history: list[int] = []

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.weight[ra] < self.weight[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.weight[ra] += self.weight[rb]
        self.history.append(rb)
        return True

    def mark(self) -> int:
        return len(self.history)

    def rollback(self, mark: int) -> None:
        while len(self.history) > mark:
            rb = self.history.pop()
            ra = self.parent[rb]
            self.weight[ra] -= self.weight[rb]
            self.parent[rb] = rb


# closure ----------------------------------------------------------------------

@dataclass
class ClosureResult:
    feasible: bool
    blocks: list[list[Cell]] = field(default_factory=list)
    certificate: Certificate | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.feasible


def _normalize_partition(p: Pattern, part) -> list[list[Cell]]:
    """Accept a list of blocks or a cell -> label mapping."""
    if isinstance(part, dict):
        groups: dict = {}
        for cell in p.cells():
            groups.setdefault(part[cell], []).append(cell)
        blocks = list(groups.values())
    else:
        blocks = [list(b) for b in part]
    seen = [c for b in blocks for c in b]
    if len(seen) != len(set(seen)) or set(seen) != set(p.cells()):
        raise ValueError("partition must cover every cell exactly once")
    for b in blocks:
        if len({p[c] for c in b}) != 1:
            raise ValueError(f"block {b} is not color-consistent")
    return blocks


def closure(p: Pattern, part) -> ClosureResult:
    """Close a colour-consistent partition under R1-R3 and build its certificate.

    Infeasible when R3 forces two differently coloured blocks together. A
    feasible closure is re-checked by simulation; a mismatch raises
    :class:`ClosureSoundnessError`.
    """
    blocks = _normalize_partition(p, part)
    edges = EdgeIndex(p.width, p.height)
    uf = RollbackUnionFind(edges.size)
    while True:
        for b in blocks:
            first = edges.sides(b[0])
            for c in b[1:]:
                for a, e in zip(first, edges.sides(c)):
                    uf.union(a, e)
        by_key: dict[tuple[int, int], list[int]] = {}
        for i, b in enumerate(blocks):
            _, s, _, w = edges.sides(b[0])
            by_key.setdefault((uf.find(s), uf.find(w)), []).append(i)
        groups = [g for g in by_key.values() if len(g) > 1]
        if not groups:
            break
        for g in groups:
            colors = {p[blocks[i][0]] for i in g}
            if len(colors) > 1:
                i, j = g[0], next(j for j in g if p[blocks[j][0]] != p[blocks[g[0]][0]])
                return ClosureResult(
                    False, blocks, None,
                    f"color clash between blocks at {blocks[i][0]} ({p[blocks[i][0]]})"
                    f" and {blocks[j][0]} ({p[blocks[j][0]]})",
                )
        merged = []
        for g in by_key.values():
            merged.append([c for i in g for c in blocks[i]])
        blocks = merged

    for b in blocks:
        b.sort(key=lambda c: (c[1], c[0]))
    blocks.sort(key=lambda b: (b[0][1], b[0][0]))
    cert = _induced_certificate(p, blocks, edges, uf)
    verdict = verify_solves(cert.tileset, cert.seed, p)
    if not verdict:
        raise ClosureSoundnessError(f"closure tile set fails to assemble pattern: {verdict}")
    return ClosureResult(True, blocks, cert, "")


def _induced_certificate(p: Pattern, blocks, edges: EdgeIndex, uf: RollbackUnionFind) -> Certificate:
    names: dict[int, str] = {}

    def glue(e: int) -> str:
        r = uf.find(e)
        if r not in names:
            names[r] = f"g{len(names)}"
        return names[r]

    types = []
    for b in blocks:
        n, s, e, w = edges.sides(b[0])
        types.append(TileType(glue(n), glue(s), glue(e), glue(w), p[b[0]]))
    seed = SeedGlues(
        tuple(glue(edges.h(x, 0)) for x in range(1, p.width + 1)),
        tuple(glue(edges.v(0, y)) for y in range(1, p.height + 1)),
    )
    return Certificate(len(types), TileSet(types), seed)


def canonical_certificate(cert: Certificate) -> Certificate:
    ts, mapping = canonical_form(cert.tileset)
    extra: dict[str, str] = {}
    for g in cert.seed.north + cert.seed.east:
        if g not in mapping and g not in extra:
            extra[g] = f"s{len(extra)}"
    return Certificate(cert.k, ts, cert.seed.renamed({**mapping, **extra}))


def verify_certificate(p: Pattern, cert: Certificate) -> bool:
    return (
        not check_uniqueness(cert.tileset)
        and len(cert.tileset) == cert.k
        and bool(verify_solves(cert.tileset, cert.seed, p))
    )


# branch and bound -----------------------------------------------------------------

class _Search:
    def __init__(self, p: Pattern, best_k: int, node_limit: int | None):
        self.p = p
        self.cells = list(p.cells())
        self.colors = [p[c] for c in self.cells]
        self.edges = EdgeIndex(p.width, p.height)
        self.sides = [self.edges.sides(c) for c in self.cells]
        self.uf = RollbackUnionFind(self.edges.size)
        # colours still to come after position i
        self.future_colors = [set(self.colors[i:]) for i in range(len(self.cells) + 1)]
        self.block_cell: list[int] = []  # anchor cell index per block
        self.block_color: list[str] = []
        self.assign = [-1] * len(self.cells)
        self.best_k = best_k
        self.best_assign: list[int] | None = None
        self.nodes = 0
        self.node_limit = node_limit

    def _keys_distinct(self) -> bool:
        find = self.uf.find
        seen = set()
        for anchor in self.block_cell:
            _, s, _, w = self.sides[anchor]
            key = (find(s), find(w))
            if key in seen:
                return False
            seen.add(key)
        return True

    def _forced_block(self, i: int) -> int | None:
        find = self.uf.find
        _, s, _, w = self.sides[i]
        key = (find(s), find(w))
        for b, anchor in enumerate(self.block_cell):
            _, bs, _, bw = self.sides[anchor]
            if (find(bs), find(bw)) == key:
                return b
        return None

    def run(self) -> None:
        self._dfs(0)

    def _dfs(self, i: int) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _LimitHit
        n_blocks = len(self.block_cell)
        if i == len(self.cells):
            if n_blocks < self.best_k:
                self.best_k = n_blocks
                self.best_assign = list(self.assign)
                log.debug("new best k=%d after %d nodes", n_blocks, self.nodes)
            return
        missing = len(self.future_colors[i] - set(self.block_color))
        if n_blocks + missing >= self.best_k:
            return
        color = self.colors[i]
        forced = self._forced_block(i)
        if forced is not None:
            if self.block_color[forced] == color:
                self._try_existing(i, forced)
            return
        for b in range(n_blocks):
            if self.block_color[b] == color:
                self._try_existing(i, b)
        if n_blocks + 1 + len(self.future_colors[i + 1] - set(self.block_color) - {color}) < self.best_k:
            self.block_cell.append(i)
            self.block_color.append(color)
            self.assign[i] = n_blocks
            if self._keys_distinct():
                self._dfs(i + 1)
            self.assign[i] = -1
            self.block_cell.pop()
            self.block_color.pop()

    def _try_existing(self, i: int, b: int) -> None:
        mark = self.uf.mark()
        for a, e in zip(self.sides[self.block_cell[b]], self.sides[i]):
            self.uf.union(a, e)
        self.assign[i] = b
        if self._keys_distinct():
            self._dfs(i + 1)
        self.assign[i] = -1
        self.uf.rollback(mark)


class _LimitHit(Exception):
    pass


def minimize_tileset(
    p: Pattern,
    budget: int | None = None,
    guard: int = DEFAULT_GUARD,
    node_limit: int | None = None,
) -> Certificate:
    """Smallest tile set (with its seed) that uniquely assembles ``p``.

    Raises :class:`SearchLimit` if no tile set of size ``<= budget`` exists
    or ``node_limit`` search nodes are exhausted first; the exception carries
    the best certificate found and a proven lower bound.
    """
    n_cells = p.width * p.height
    if n_cells > guard:
        raise ValueError(f"pattern has {n_cells} cells, guard is {guard}")
    n_colors = len(p.colors())
    best: Certificate | None = None
    if budget is not None:
        bound = budget + 1
    else:
        per_color = {c: [] for c in sorted(p.colors())}
        for cell in p.cells():
            per_color[p[cell]].append(cell)
        res = closure(p, list(per_color.values()))
        if res:
            return canonical_certificate(res.certificate)
        best = closure(p, [[c] for c in p.cells()]).certificate
        bound = best.k

    search = _Search(p, bound, node_limit)
    try:
        search.run()
    except _LimitHit:
        found = best
        if search.best_assign is not None:
            found = _certificate_from(p, search)
        raise SearchLimit(
            f"node limit {node_limit} reached", found and canonical_certificate(found), n_colors
        ) from None

    if search.best_assign is not None:
        best = _certificate_from(p, search)
    if best is None:
        raise SearchLimit(f"no tile set of size <= {budget}", None, bound)
    log.info("pattern %dx%d: k=%d in %d nodes", p.width, p.height, best.k, search.nodes)
    return canonical_certificate(best)


def _certificate_from(p: Pattern, search: _Search) -> Certificate:
    labels = {c: b for c, b in zip(search.cells, search.best_assign)}
    res = closure(p, labels)
    if not res or res.certificate.k != search.best_k:
        raise ClosureSoundnessError("search optimum is not closed")
    return res.certificate


# brute force oracle -------------------------------------------------------------

def _set_partitions(items: list, k: int):
    """All partitions of ``items`` into exactly ``k`` non-empty blocks."""
    n = len(items)
    if k < 1 or k > n:
        return
    if n == k:
        yield [[x] for x in items]
        return
    if k == 1:
        yield [list(items)]
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest, k - 1):
        yield [[first]] + part
    for part in _set_partitions(rest, k):
        for i in range(k):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _compositions(total: int, sizes: list[int]):
    """Ways to give each colour class between 1 and its size blocks, summing to ``total``."""
    if not sizes:
        if total == 0:
            yield []
        return
    head, tail = sizes[0], sizes[1:]
    for k in range(1, min(head, total - len(tail)) + 1):
        for rest in _compositions(total - k, tail):
            yield [k] + rest


def brute_force_min(p: Pattern, guard: int = BRUTE_FORCE_GUARD) -> int:
    """Minimum tile count by enumerating every colour-consistent partition.

    Partitions are tried in order of block count; the first count with a
    feasible closure is the minimum, since closure only ever merges blocks.
    """
    n_cells = p.width * p.height
    if n_cells > guard:
        raise ValueError(f"pattern has {n_cells} cells, brute force guard is {guard}")
    classes: dict[str, list[Cell]] = {}
    for cell in p.cells():
        classes.setdefault(p[cell], []).append(cell)
    groups = list(classes.values())
    sizes = [len(g) for g in groups]
    for k in range(len(groups), n_cells + 1):
        for split in _compositions(k, sizes):
            per_class = [list(_set_partitions(g, m)) for g, m in zip(groups, split)]
            for choice in product(*per_class):
                blocks = [b for part in choice for b in part]
                res = closure(p, blocks)
                if res:
                    return len(res.blocks)
    raise AssertionError("the all-singleton partition is always feasible")
