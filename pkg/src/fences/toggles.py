"""Toggle maps, Coxeter words, base graphs, and homomesy transfer.

Toggling x in a set S swaps x's membership when the result stays inside
the family (antichains or ideals) and does nothing otherwise, so every
toggle is an involution.  A Coxeter word lists each element exactly once;
words are written left to right but applied right to left, i.e. the
rightmost toggle acts first.

The base graph joins two toggles when they fail to commute as functions
on the whole family.  A toggle is admissible for a word when it is a
source or a sink of the orientation the word induces on the base graph;
conjugating by an admissible toggle moves it to the far end of the word,
which flips that vertex in the orientation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .fence import ANTICHAIN, IDEAL, ElementSet, Fence, FenceError, RoleError
from .rowmotion import decompose
from .stats import MesyReport, StatExpr, classify_orbit_sums


@dataclass(frozen=True)
class ToggleWord:
    """A Coxeter word: each element once, leftmost applied last."""

    family: str
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(int(x) for x in self.order))
        if self.family not in (ANTICHAIN, IDEAL):
            raise FenceError(f"toggle words act on antichains or ideals")
        if len(set(self.order)) != len(self.order) or any(
            x < 1 for x in self.order
        ):
            raise FenceError(
                f"word must list distinct positive elements, got {self.order}"
            )

    def position(self, x: int) -> int:
        return self.order.index(x)

    def __str__(self) -> str:
        return ",".join(map(str, self.order))

    @classmethod
    def parse(cls, family: str, text: str) -> "ToggleWord":
        return cls(family, tuple(int(t) for t in text.split(",")))


def _check_word(F: Fence, word: ToggleWord) -> None:
    if sorted(word.order) != list(range(1, F.n + 1)):
        raise FenceError(
            f"word {word.order} is not a permutation of 1..{F.n}"
        )


def toggle_mask(F: Fence, family: str, x: int, m: int) -> int:
    """Toggle one element on a bitmask (no role validation)."""
    bit = 1 << (x - 1)
    if family == IDEAL:
        if m & bit:
            if not m & F.upper_covers[x - 1]:
                return m ^ bit
        elif (m & F.lower_covers[x - 1]) == F.lower_covers[x - 1]:
            return m ^ bit
        return m
    if family == ANTICHAIN:
        if m & bit:
            return m ^ bit
        if not m & F.comparable[x - 1]:
            return m ^ bit
        return m
    raise FenceError(f"no toggles for family {family!r}")


def toggle(F: Fence, family: str, x: int, S: ElementSet) -> ElementSet:
    """Toggle x in S, freezing when the result would leave the family."""
    F.require_role(S, family)
    if not 1 <= x <= F.n:
        raise FenceError(f"element x{x} out of range 1..{F.n}")
    return ElementSet(toggle_mask(F, family, x, S.mask), family)


def compile_word(F: Fence, word: ToggleWord) -> Callable[[int], int]:
    """A fast mask-to-mask function applying the word right to left."""
    _check_word(F, word)
    if word.family == IDEAL:
        ops = tuple(
            (1 << (x - 1), F.lower_covers[x - 1], F.upper_covers[x - 1])
            for x in reversed(word.order)
        )

        def step(m: int) -> int:
            for bit, lo, up in ops:
                if m & bit:
                    if not m & up:
                        m ^= bit
                elif (m & lo) == lo:
                    m ^= bit
            return m

        return step

    ops2 = tuple(
        (1 << (x - 1), F.comparable[x - 1]) for x in reversed(word.order)
    )

    def step2(m: int) -> int:
        for bit, cmp_ in ops2:
            if m & bit:
                m ^= bit
            elif not m & cmp_:
                m ^= bit
        return m

    return step2


def apply_word(F: Fence, word: ToggleWord, S: ElementSet) -> ElementSet:
    """Apply a toggle word to an element set (rightmost toggle first)."""
    F.require_role(S, word.family)
    return ElementSet(compile_word(F, word)(S.mask), word.family)


# -- base graphs --------------------------------------------------------------


@dataclass(frozen=True)
class BaseGraph:
    family: str
    n: int
    edges: frozenset[tuple[int, int]]  # pairs (u, v) with u < v

    def neighbors(self, x: int) -> tuple[int, ...]:
        out = [v for u, v in self.edges if u == x]
        out += [u for u, v in self.edges if v == x]
        return tuple(sorted(out))

    @property
    def is_forest(self) -> bool:
        parent = list(range(self.n + 1))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


def base_graph(F: Fence, family: str, cap: int | None = None) -> BaseGraph:
    """Edges join toggles that fail to commute somewhere on the family.

    Commutation is decided exhaustively over the enumerated family rather
    than by structural rules, so the antichain graph (which has no known
    structural description) is obtained the same way as the ideal one.
    """
    masks = F.family_masks(family, cap)
    edges = set()
    for x in range(1, F.n + 1):
        for y in range(x + 1, F.n + 1):
            for m in masks:
                a = toggle_mask(F, family, x, toggle_mask(F, family, y, m))
                b = toggle_mask(F, family, y, toggle_mask(F, family, x, m))
                if a != b:
                    edges.add((x, y))
                    break
    G = BaseGraph(family, F.n, frozenset(edges))
    if family == IDEAL:
        covers = {tuple(sorted(p)) for p in F.cover_pairs()}
        stray = edges - covers
        if stray:  # contradicts commutation of non-covering ideal toggles
            raise FenceError(
                f"ideal toggles fail to commute off cover pairs: {sorted(stray)}"
            )
    return G


def orientation(word: ToggleWord, G: BaseGraph) -> frozenset[tuple[int, int]]:
    """Each base-graph edge directed from the earlier toggle in the word."""
    pos = {x: i for i, x in enumerate(word.order)}
    out = set()
    for u, v in G.edges:
        if pos[u] < pos[v]:
            out.add((u, v))
        else:
            out.add((v, u))
    return frozenset(out)


def _sources_and_sinks(
    o: frozenset[tuple[int, int]], vertices: Iterable[int]
) -> set[int]:
    indeg: dict[int, int] = {}
    outdeg: dict[int, int] = {}
    for u, v in o:
        outdeg[u] = outdeg.get(u, 0) + 1
        indeg[v] = indeg.get(v, 0) + 1
    out = set()
    for x in vertices:
        if indeg.get(x, 0) == 0 or outdeg.get(x, 0) == 0:
            out.add(x)
    return out


def admissible_toggles(word: ToggleWord, G: BaseGraph) -> set[int]:
    """Elements whose toggle is a source or sink of the word's orientation."""
    return _sources_and_sinks(orientation(word, G), range(1, G.n + 1))


def conjugate_word(word: ToggleWord, x: int, G: BaseGraph) -> ToggleWord:
    """Conjugate by an admissible toggle and cancel, giving a Coxeter word.

    A source commutes past everything to its left, so conjugation removes
    it there and re-inserts it at the right end; a sink moves the other
    way.  Either move flips the vertex in the induced orientation.
    """
    o = orientation(word, G)
    incident_out = any(u == x for u, _ in o)
    incident_in = any(v == x for _, v in o)
    rest = tuple(y for y in word.order if y != x)
    if not incident_in:  # source (or isolated): send x to the right end
        return ToggleWord(word.family, rest + (x,))
    if not incident_out:  # sink: send x to the left end
        return ToggleWord(word.family, (x,) + rest)
    raise FenceError(f"toggle {x} is not admissible for word {word}")


def _flip(o: frozenset[tuple[int, int]], x: int) -> frozenset[tuple[int, int]]:
    return frozenset(
        (v, u) if u == x or v == x else (u, v) for u, v in o
    )


def conjugation_path(
    word: ToggleWord, word2: ToggleWord, G: BaseGraph
) -> list[int]:
    """A sequence of admissible conjugations carrying the orientation of
    one Coxeter word onto the other's, found by breadth-first search over
    orientations with source/sink flips.  Requires an acyclic base graph;
    the answer is empty exactly when the orientations already agree.
    """
    if word.family != word2.family:
        raise FenceError("words act on different families")
    if not G.is_forest:
        raise FenceError(
            "base graph has a cycle; admissible conjugation paths are "
            "only guaranteed for acyclic base graphs"
        )
    start = orientation(word, G)
    goal = orientation(word2, G)
    if start == goal:
        return []
    flippable = sorted({u for e in G.edges for u in e})
    frontier = [start]
    parents: dict[frozenset, tuple[frozenset, int] | None] = {start: None}
    while frontier:
        nxt = []
        for o in frontier:
            for x in sorted(_sources_and_sinks(o, flippable)):
                o2 = _flip(o, x)
                if o2 in parents:
                    continue
                parents[o2] = (o, x)
                if o2 == goal:
                    path = [x]
                    back = o
                    while parents[back] is not None:
                        prev, step = parents[back]
                        path.append(step)
                        back = prev
                    return path[::-1]
                nxt.append(o2)
        frontier = nxt
    raise FenceError("no conjugation path found (unexpected for a forest)")


# -- linear extensions ---------------------------------------------------


def sample_linear_extensions(
    F: Fence, count: int, seed: int = 0
) -> list[tuple[int, ...]]:
    """Up to `count` distinct linear extensions, sampled reproducibly by
    repeatedly picking a random currently-minimal element."""
    rng = random.Random(f"linext:{seed}:{F.alpha}")
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        placed = 0
        order = []
        remaining = F.full_mask
        while remaining:
            avail = []
            rest = remaining
            while rest:
                low = rest & -rest
                rest ^= low
                e = low.bit_length() - 1
                if not F.strict_down[e] & remaining:
                    avail.append(e + 1)
            pick = rng.choice(avail)
            order.append(pick)
            remaining ^= 1 << (pick - 1)
            placed += 1
        tup = tuple(order)
        if tup not in seen:
            seen.add(tup)
            out.append(tup)
    return out


def is_linear_extension(F: Fence, order: Sequence[int]) -> bool:
    pos = {x: i for i, x in enumerate(order)}
    if sorted(order) != list(range(1, F.n + 1)):
        return False
    return all(pos[a] < pos[b] for a, b in F.cover_pairs())


# -- orbits of a word and homomesy transfer ---------------------------------


def word_orbits(F: Fence, word: ToggleWord, cap: int | None = None):
    """Orbit partition of the family under the cyclic group of the word."""
    from .rowmotion import Orbit

    step = compile_word(F, word)
    masks = F.family_masks(word.family, cap)
    return tuple(
        Orbit(word.family, tuple(ElementSet(m, word.family) for m in ms))
        for ms in decompose(masks, step)
    )


def _word_profiles(
    F: Fence, word: ToggleWord, cap: int | None = None
) -> list[tuple[int, tuple[int, ...], int]]:
    """Per-orbit (size, element counts, total cardinality) under a word."""
    step = compile_word(F, word)
    masks = F.family_masks(word.family, cap)
    profiles = []
    for ms in decompose(masks, step):
        counts = [0] * F.n
        total = 0
        for m in ms:
            total += bin(m).count("1")
            while m:
                low = m & -m
                m ^= low
                counts[low.bit_length() - 1] += 1
        profiles.append((len(ms), tuple(counts), total))
    return profiles


def _classify_expr(
    expr: StatExpr, profiles: list[tuple[int, tuple[int, ...], int]]
) -> MesyReport:
    data = []
    for size, counts, total in profiles:
        val = expr.constant * size
        for coeff, atom in expr.terms:
            val += coeff * (total if atom.element is None else counts[atom.element - 1])
        data.append((size, Fraction(val)))
    return classify_orbit_sums(data)


@dataclass(frozen=True)
class TransferResult:
    stat: str
    report_a: MesyReport
    report_b: MesyReport

    @property
    def agree(self) -> bool:
        return (
            self.report_a.kind == self.report_b.kind
            and self.report_a.constant == self.report_b.constant
        )


@dataclass(frozen=True)
class TransferReport:
    family: str
    word_a: ToggleWord
    word_b: ToggleWord
    results: tuple[TransferResult, ...]

    @property
    def agree(self) -> bool:
        return all(r.agree for r in self.results)

    def disagreements(self) -> tuple[TransferResult, ...]:
        return tuple(r for r in self.results if not r.agree)


def transfer_check(
    F: Fence,
    family: str,
    word_a: ToggleWord,
    word_b: ToggleWord,
    exprs: StatExpr | Sequence[StatExpr],
    cap: int | None = None,
) -> TransferReport:
    """Compare homomesy/orbomesy verdicts of statistics under two words.

    Disagreement is reported, not raised: for ideal words agreement is a
    theorem, for antichain words it is only conjectured, so a mismatch
    there is a discovery.
    """
    if word_a.family != family or word_b.family != family:
        raise RoleError("words do not act on the requested family")
    if isinstance(exprs, StatExpr):
        exprs = [exprs]
    for e in exprs:
        fam = e.family()
        if fam is not None and fam != family:
            raise RoleError(f"statistic {e} targets {fam}s, not {family}s")
    pa = _word_profiles(F, word_a, cap)
    pb = _word_profiles(F, word_b, cap)
    results = tuple(
        TransferResult(str(e), _classify_expr(e, pa), _classify_expr(e, pb))
        for e in exprs
    )
    return TransferReport(family, word_a, word_b, results)
