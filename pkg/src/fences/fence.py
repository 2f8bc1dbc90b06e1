"""Fence posets and their order-theoretic primitives.

A fence is a poset whose Hasse diagram is a single zigzag path.  It is
encoded by a composition alpha = (a_1, ..., a_s) with a_1, a_s >= 2.
Walking the path x_1, x_2, ..., x_n left to right, the chain ascends
inside odd-numbered segments and descends inside even ones; segment i
carries a_i - 1 elements of its own plus the elements it shares with its
neighbours.  The element count is n = sum(alpha) - 1, and the shared
element of segments i and i+1 sits at position a_1 + ... + a_i.

Elements are exposed 1-based (x_1 ... x_n) in every public interface.
Internally subsets are bitmasks with bit k-1 standing for x_k; all
operations are pure and fences are immutable after construction, so a
Fence can be shared freely across threads.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

ANTICHAIN = "antichain"
IDEAL = "ideal"
UPPER = "upper-ideal"

ROLES = (ANTICHAIN, IDEAL, UPPER)

#: Hard ceiling on enumerated family sizes unless a caller lowers it.
DEFAULT_MAX_FAMILY = 2_000_000


class FenceError(ValueError):
    """Invalid fence construction or operation."""


class RoleError(FenceError):
    """An ElementSet was used where a different role was required."""


class FamilyCapError(RuntimeError):
    """A family enumeration exceeded the configured cap."""


@dataclass(frozen=True)
class Composition:
    """A composition (a_1, ..., a_s) with a_1, a_s >= 2 and all parts >= 1."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise FenceError("composition must have at least one part")
        if any(p < 1 for p in parts):
            raise FenceError(f"composition parts must be >= 1, got {parts}")
        if parts[0] < 2 or parts[-1] < 2:
            raise FenceError(
                f"first and last parts must be >= 2, got {parts}"
            )

    @classmethod
    def coerce(cls, alpha: "Composition | Iterable[int]") -> "Composition":
        if isinstance(alpha, Composition):
            return alpha
        return cls(tuple(alpha))

    @property
    def s(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts) - 1

    @property
    def is_palindromic(self) -> bool:
        return self.parts == self.parts[::-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class ElementSet:
    """A subset of fence elements tagged with the family it belongs to.

    The mask uses bit k-1 for element x_k.  Instances made through
    Fence.element_set are validated against their role; arithmetic
    produced by the library preserves validity by construction.
    """

    mask: int
    role: str

    @property
    def elements(self) -> tuple[int, ...]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length())
            m ^= low
        return tuple(out)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, k: int) -> bool:
        return bool(self.mask >> (k - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def label(self) -> str:
        """Render as the usual x-notation, e.g. '{x2,x6,x8}'."""
        return "{" + ",".join(f"x{k}" for k in self.elements) + "}"

    def __repr__(self) -> str:
        return f"ElementSet({self.label()}, {self.role})"


class Fence:
    """The fence poset of a composition, with precomputed index maps."""

    def __init__(
        self,
        alpha: Composition | Iterable[int],
        max_family: int | None = None,
    ):
        alpha = Composition.coerce(alpha)
        self.alpha = alpha
        self.max_family = max_family
        self.s = alpha.s
        self.n = alpha.n
        self.full_mask = (1 << self.n) - 1
        # cums[i] = a_1 + ... + a_i, so shared element s_i is x_{cums[i]}.
        cums = [0]
        for part in alpha:
            cums.append(cums[-1] + part)
        self.cums = tuple(cums)

        n = self.n
        # edge e joins x_{e+1} and x_{e+2} (0-based e in [0, n-1)); it lies
        # in segment i iff cums[i-1] <= e+1 <= cums[i]-1, ascending iff i odd.
        edge_segment = [bisect_right(cums, e + 1) for e in range(n - 1)]
        self.edge_up = tuple(i % 2 == 1 for i in edge_segment)

        lower = [0] * n  # lower covers of each element, as masks
        upper = [0] * n
        for e, up in enumerate(self.edge_up):
            if up:  # x_{e+1} < x_{e+2}
                upper[e] |= 1 << (e + 1)
                lower[e + 1] |= 1 << e
            else:  # x_{e+1} > x_{e+2}
                lower[e] |= 1 << (e + 1)
                upper[e + 1] |= 1 << e
        self.lower_covers = tuple(lower)
        self.upper_covers = tuple(upper)

        # Full strict down/up sets.  The Hasse diagram is a path, so walking
        # covers transitively is linear in practice.
        down = [0] * n
        up_ = [0] * n
        for e in range(n):
            seen = lower[e]
            frontier = lower[e]
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                more = lower[low.bit_length() - 1] & ~seen
                seen |= more
                frontier |= more
            down[e] = seen
        for e in range(n):
            seen = upper[e]
            frontier = upper[e]
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                more = upper[low.bit_length() - 1] & ~seen
                seen |= more
                frontier |= more
            up_[e] = seen
        self.strict_down = tuple(down)
        self.strict_up = tuple(up_)
        self.comparable = tuple(down[e] | up_[e] for e in range(n))

        # Segment data, 1-based segment indices.  Segment i spans positions
        # [max(cums[i-1],1), min(cums[i], n)] inclusive (1-based).
        seg_masks = [0]
        seg_elems: list[tuple[int, ...]] = [()]
        for i in range(1, self.s + 1):
            lo = max(cums[i - 1], 1)
            hi = min(cums[i], n)
            seg_masks.append(((1 << hi) - 1) ^ ((1 << (lo - 1)) - 1))
            seg_elems.append(tuple(range(lo, hi + 1)))
        self.segment_masks = tuple(seg_masks)
        self._segment_elements = tuple(seg_elems)

        # shared element s_i = x_{cums[i]} for 1 <= i <= s-1
        self.shared = tuple(cums[i] for i in range(1, self.s))
        self._shared_index = {x: i for i, x in enumerate(self.shared, start=1)}

        # unshared elements of segment i, listed so entry j-1 is the j-th
        # smallest in the partial order (ascending segments read left to
        # right, descending ones right to left)
        unshared: list[tuple[int, ...]] = [()]
        for i in range(1, self.s + 1):
            # positions strictly between the shared endpoints; the path ends
            # x_1 and x_n are unshared, which this range already covers
            elems = list(range(cums[i - 1] + 1, min(cums[i], n + 1)))
            if i % 2 == 0:
                elems = elems[::-1]
            unshared.append(tuple(elems))
        self.unshared = tuple(unshared)
        self._unshared_pos = {
            x: (i, j)
            for i in range(1, self.s + 1)
            for j, x in enumerate(self.unshared[i], start=1)
        }

        self._cache: dict = {}

    # -- basic accessors ------------------------------------------------

    def __repr__(self) -> str:
        return f"Fence{self.alpha}"

    def cover_pairs(self) -> tuple[tuple[int, int], ...]:
        """All covers as (lower, upper) element pairs along the path."""
        out = []
        for e, up in enumerate(self.edge_up):
            a, b = e + 1, e + 2
            out.append((a, b) if up else (b, a))
        return tuple(out)

    def segments_of(self, k: int) -> tuple[int, ...]:
        """Indices of the segments containing x_k."""
        i = self._shared_index.get(k)
        if i is not None:
            return (i, i + 1)
        return (self._unshared_pos[k][0],)

    def is_shared(self, k: int) -> bool:
        return k in self._shared_index

    def shared_element(self, i: int) -> int:
        """The element s_i shared by segments i and i+1 (1 <= i <= s-1)."""
        if not 1 <= i <= self.s - 1:
            raise FenceError(f"shared index {i} out of range for s={self.s}")
        return self.shared[i - 1]

    def shared_index(self, k: int) -> int | None:
        """i such that x_k = s_i, or None when x_k is unshared."""
        return self._shared_index.get(k)

    def unshared_element(self, i: int, j: int) -> int:
        """The j-th smallest unshared element of segment i."""
        try:
            return self.unshared[i][j - 1]
        except IndexError:
            raise FenceError(f"no unshared element ({i},{j}) in {self!r}")

    def unshared_position(self, k: int) -> tuple[int, int] | None:
        """(i, j) with x_k the j-th smallest unshared element of segment i."""
        return self._unshared_pos.get(k)

    def segment_elements(self, i: int) -> tuple[int, ...]:
        return self._segment_elements[i]

    # -- element sets ----------------------------------------------------

    def mask_of(self, elements: Iterable[int]) -> int:
        m = 0
        for k in elements:
            if not 1 <= k <= self.n:
                raise FenceError(f"element x{k} out of range 1..{self.n}")
            m |= 1 << (k - 1)
        return m

    def is_ideal_mask(self, m: int) -> bool:
        for e, up in enumerate(self.edge_up):
            a = m >> e & 1
            b = m >> (e + 1) & 1
            if up:
                if b and not a:
                    return False
            elif a and not b:
                return False
        return True

    def is_upper_mask(self, m: int) -> bool:
        return self.is_ideal_mask(self.full_mask ^ m)

    def is_antichain_mask(self, m: int) -> bool:
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            if self.comparable[low.bit_length() - 1] & m:
                return False
        return True

    def _role_ok(self, m: int, role: str) -> bool:
        if role == ANTICHAIN:
            return self.is_antichain_mask(m)
        if role == IDEAL:
            return self.is_ideal_mask(m)
        if role == UPPER:
            return self.is_upper_mask(m)
        raise FenceError(f"unknown role {role!r}")

    def element_set(self, elements: Iterable[int], role: str) -> ElementSet:
        """Validated constructor; rejects sets that break their role."""
        m = self.mask_of(elements)
        if not self._role_ok(m, role):
            raise RoleError(
                f"{sorted(set(elements))} is not a valid {role} of {self!r}"
            )
        return ElementSet(m, role)

    def set_from_mask(self, m: int, role: str) -> ElementSet:
        if m & ~self.full_mask:
            raise FenceError("mask has bits outside the fence")
        return ElementSet(m, role)

    def require_role(self, S: ElementSet, role: str) -> None:
        if S.role != role:
            raise RoleError(f"expected a {role}, got a {S.role}")
        if S.mask & ~self.full_mask:
            raise FenceError("element set does not fit this fence")

    # -- closures and extremal elements -----------------------------------

    def _down_closure_mask(self, m: int) -> int:
        acc = m
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            acc |= self.strict_down[low.bit_length() - 1]
        return acc

    def _up_closure_mask(self, m: int) -> int:
        acc = m
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            acc |= self.strict_up[low.bit_length() - 1]
        return acc

    def _maximal_mask(self, m: int) -> int:
        acc = 0
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            if not self.strict_up[low.bit_length() - 1] & m:
                acc |= low
        return acc

    def _minimal_mask(self, m: int) -> int:
        acc = 0
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            if not self.strict_down[low.bit_length() - 1] & m:
                acc |= low
        return acc

    def down_closure(self, A: ElementSet) -> ElementSet:
        """Smallest ideal containing the antichain A."""
        self.require_role(A, ANTICHAIN)
        return ElementSet(self._down_closure_mask(A.mask), IDEAL)

    def up_closure(self, A: ElementSet) -> ElementSet:
        """Smallest upper ideal containing the antichain A."""
        self.require_role(A, ANTICHAIN)
        return ElementSet(self._up_closure_mask(A.mask), UPPER)

    def maximal_elements(self, I: ElementSet) -> ElementSet:
        """The antichain of maximal elements of an ideal."""
        self.require_role(I, IDEAL)
        return ElementSet(self._maximal_mask(I.mask), ANTICHAIN)

    def minimal_elements(self, U: ElementSet) -> ElementSet:
        """The antichain of minimal elements of an upper ideal."""
        self.require_role(U, UPPER)
        return ElementSet(self._minimal_mask(U.mask), ANTICHAIN)

    def complement(self, S: ElementSet) -> ElementSet:
        """Set complement; swaps the ideal and upper-ideal roles."""
        if S.role == IDEAL:
            return ElementSet(self.full_mask ^ S.mask, UPPER)
        if S.role == UPPER:
            return ElementSet(self.full_mask ^ S.mask, IDEAL)
        raise RoleError(
            "complement is defined for ideals and upper ideals; the "
            "complement of an antichain belongs to neither family"
        )

    # -- self-duality ------------------------------------------------------

    def _self_duality_failure(self) -> str | None:
        if "self_dual" in self._cache:
            return self._cache["self_dual"]
        reason: str | None = None
        if not self.alpha.is_palindromic:
            reason = f"alpha {self.alpha} is not palindromic"
        else:
            n = self.n
            covers = set(self.cover_pairs())
            for a, b in covers:
                if (n + 1 - b, n + 1 - a) not in covers:
                    reason = (
                        f"index reversal is not order-reversing: cover "
                        f"x{a}<x{b} maps to x{n + 1 - b},x{n + 1 - a} "
                        f"which is not a reversed cover (s={self.s} even "
                        "palindromes are self-isomorphic, not self-dual)"
                    )
                    break
        self._cache["self_dual"] = reason
        return reason

    def index_reversal(self) -> tuple[int, ...]:
        """The verified order-reversing bijection x_k -> x_{n+1-k}.

        Returned as a 1-based lookup table t with t[k-1] = n+1-k.  Raises
        FenceError when alpha is not palindromic or when the reversal
        fails the order-reversal check (palindromes with an even number
        of parts are order-isomorphic to themselves instead).
        """
        reason = self._self_duality_failure()
        if reason is not None:
            raise FenceError(f"no order-reversing index bijection: {reason}")
        return tuple(self.n - k for k in range(self.n))

    def reversed_mask(self, m: int) -> int:
        """Mirror a mask through k -> n+1-k (no duality check)."""
        out = 0
        for e in range(self.n):
            if m >> e & 1:
                out |= 1 << (self.n - 1 - e)
        return out

    # -- enumeration -------------------------------------------------------

    def ideal_masks(self, cap: int | None = None) -> tuple[int, ...]:
        """All ideals as sorted bitmasks, via transfer along the spine.

        The adjacency constraints of the zigzag make ideals exactly the
        bit strings with no forbidden step between consecutive positions,
        so the frontier never exceeds the final count.
        """
        if cap is None:
            cap = self.max_family
        limit = DEFAULT_MAX_FAMILY if cap is None else cap
        cached = self._cache.get("ideal_masks")
        if cached is not None:
            if len(cached) > limit:
                raise FamilyCapError(
                    f"{len(cached)} ideals exceed the cap {limit}"
                )
            return cached
        cur: list[tuple[int, int]] = [(0, 0), (1, 1)]
        if self.n == 0:  # unreachable: compositions force n >= 1
            cur = [(0, 0)]
        for e, up in enumerate(self.edge_up):
            bit = 1 << (e + 1)
            nxt: list[tuple[int, int]] = []
            append = nxt.append
            if up:  # forbid absent below present
                for m, last in cur:
                    append((m, 0))
                    if last:
                        append((m | bit, 1))
            else:  # forbid present above absent
                for m, last in cur:
                    if not last:
                        append((m, 0))
                    append((m | bit, 1))
            if len(nxt) > limit:
                raise FamilyCapError(
                    f"ideal enumeration of {self!r} exceeded cap {limit}"
                )
            cur = nxt
        masks = tuple(sorted(m for m, _ in cur))
        self._cache["ideal_masks"] = masks
        return masks

    def antichain_masks(self, cap: int | None = None) -> tuple[int, ...]:
        """All antichains as sorted bitmasks (maximal elements of ideals)."""
        cached = self._cache.get("antichain_masks")
        if cached is None:
            cached = tuple(
                sorted(self._maximal_mask(m) for m in self.ideal_masks(cap))
            )
            self._cache["antichain_masks"] = cached
        if cap is None:
            cap = self.max_family
        limit = DEFAULT_MAX_FAMILY if cap is None else cap
        if len(cached) > limit:
            raise FamilyCapError(
                f"{len(cached)} antichains exceed the cap {limit}"
            )
        return cached

    def family_masks(self, family: str, cap: int | None = None) -> tuple[int, ...]:
        if family == IDEAL:
            return self.ideal_masks(cap)
        if family == ANTICHAIN:
            return self.antichain_masks(cap)
        if family == UPPER:
            return tuple(
                sorted(self.full_mask ^ m for m in self.ideal_masks(cap))
            )
        raise FenceError(f"unknown family {family!r}")

    def enumerate_ideals(self, cap: int | None = None) -> tuple[ElementSet, ...]:
        """Every ideal exactly once, as validated ElementSets."""
        return tuple(ElementSet(m, IDEAL) for m in self.ideal_masks(cap))

    def enumerate_antichains(self, cap: int | None = None) -> tuple[ElementSet, ...]:
        return tuple(ElementSet(m, ANTICHAIN) for m in self.antichain_masks(cap))


def build_fence(
    alpha: Composition | Iterable[int], max_family: int | None = None
) -> Fence:
    """Construct the fence poset of a composition."""
    return Fence(alpha, max_family=max_family)
