"""Indicator statistics, orbit sums, and homomesy/orbomesy deciders.

Statistics are rational linear combinations of four kinds of atoms:
chi[x] (membership of x_k in an antichain), chihat[x] (membership in an
ideal), chi (antichain cardinality) and chihat (ideal cardinality), plus
a rational constant.  All arithmetic is exact: a statistic is homomesic
when every orbit average equals one constant, and orbomesic when orbits
of equal size have equal sums.  Floating point would mask violations, so
none is used.

Text syntax (whitespace-insensitive, 1-based element indices):

    2*chi[3] - chi[5] + 1/2        chihat[10]        chi
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .fence import ANTICHAIN, IDEAL, ElementSet, Fence, FenceError, RoleError
from .rowmotion import Orbit, antichain_orbits, ideal_orbits
from .tiling import AlphaTiling, tile_counts


class StatExprError(ValueError):
    """Malformed statistic expression."""


@dataclass(frozen=True)
class Atom:
    kind: str  # "chi" or "chihat"
    element: int | None  # None means the cardinality statistic

    @property
    def family(self) -> str:
        return ANTICHAIN if self.kind == "chi" else IDEAL

    def __str__(self) -> str:
        if self.element is None:
            return self.kind
        return f"{self.kind}[{self.element}]"


@dataclass(frozen=True)
class StatExpr:
    terms: tuple[tuple[Fraction, Atom], ...]
    constant: Fraction = Fraction(0)

    def families(self) -> set[str]:
        return {atom.family for _, atom in self.terms}

    def family(self) -> str | None:
        fams = self.families()
        if len(fams) > 1:
            raise RoleError(
                "statistic mixes antichain (chi) and ideal (chihat) atoms"
            )
        return next(iter(fams)) if fams else None

    def __str__(self) -> str:
        parts: list[str] = []
        for coeff, atom in self.terms:
            if not parts:
                sign = "-" if coeff < 0 else ""
            else:
                sign = " - " if coeff < 0 else " + "
            mag = abs(coeff)
            body = str(atom) if mag == 1 else f"{mag}*{atom}"
            parts.append(f"{sign}{body}")
        if self.constant or not parts:
            sign = " - " if self.constant < 0 else (" + " if parts else "")
            parts.append(f"{sign}{abs(self.constant)}")
        return "".join(parts)


def indicator(kind: str, element: int | None = None, coeff=1) -> StatExpr:
    """Convenience constructor for a single weighted atom."""
    return StatExpr(((Fraction(coeff), Atom(kind, element)),))


_TOKEN = re.compile(r"\s*(chihat|chi|\d+|[\[\]*/+\-])")


def _tokenize(text: str) -> list[str]:
    out = []
    text = text.rstrip()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise StatExprError(
                f"unexpected character {text[pos]!r} at position {pos}"
            )
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_stat(text: str) -> StatExpr:
    """Parse the documented statistic grammar into a StatExpr."""
    tokens = _tokenize(text)
    if not tokens:
        raise StatExprError("empty statistic expression")
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise StatExprError("unexpected end of expression")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise StatExprError(f"expected {expected!r}, got {tok!r}")
        pos += 1
        return tok

    def rational() -> Fraction:
        tok = take()
        if not tok.isdigit():
            raise StatExprError(f"expected a number, got {tok!r}")
        value = Fraction(int(tok))
        if peek() == "/":
            take("/")
            den = take()
            if not den.isdigit() or int(den) == 0:
                raise StatExprError(f"bad denominator {den!r}")
            value /= int(den)
        return value

    def atom() -> Atom:
        kind = take()
        if kind not in ("chi", "chihat"):
            raise StatExprError(f"expected chi or chihat, got {kind!r}")
        element = None
        if peek() == "[":
            take("[")
            tok = take()
            if not tok.isdigit() or int(tok) < 1:
                raise StatExprError(f"bad element index {tok!r}")
            element = int(tok)
            take("]")
        return Atom(kind, element)

    terms: list[tuple[Fraction, Atom]] = []
    constant = Fraction(0)
    sign = Fraction(1)
    if peek() in ("+", "-"):
        sign = Fraction(-1) if take() == "-" else Fraction(1)
    while True:
        if peek() in ("chi", "chihat"):
            terms.append((sign, atom()))
        else:
            coeff = sign * rational()
            if peek() == "*":
                take("*")
                terms.append((coeff, atom()))
            else:
                constant += coeff
        nxt = peek()
        if nxt is None:
            break
        if nxt not in ("+", "-"):
            raise StatExprError(f"expected + or -, got {nxt!r}")
        sign = Fraction(-1) if take() == "-" else Fraction(1)
    return StatExpr(tuple(terms), constant)


def evaluate(F: Fence, expr: StatExpr, S: ElementSet) -> Fraction:
    """Exact value of a statistic on one element set."""
    fam = expr.family()
    if fam is not None and S.role != fam:
        raise RoleError(
            f"statistic over {fam}s evaluated on a {S.role}"
        )
    total = expr.constant
    for coeff, atom in expr.terms:
        if atom.element is None:
            total += coeff * len(S)
        else:
            if not 1 <= atom.element <= F.n:
                raise FenceError(
                    f"element x{atom.element} out of range 1..{F.n}"
                )
            if atom.element in S:
                total += coeff
    return total


def orbit_sum(F: Fence, expr: StatExpr, orbit: Orbit) -> Fraction:
    """Sum of the statistic over all members of an orbit."""
    fam = expr.family()
    if fam is not None and orbit.family != fam:
        raise RoleError(f"statistic over {fam}s summed over a {orbit.family} orbit")
    counts = orbit_element_counts(orbit, F.n)
    sizes = sum(len(S) for S in orbit.reps)
    total = expr.constant * orbit.size
    for coeff, atom in expr.terms:
        if atom.element is None:
            total += coeff * sizes
        else:
            if not 1 <= atom.element <= F.n:
                raise FenceError(
                    f"element x{atom.element} out of range 1..{F.n}"
                )
            total += coeff * counts[atom.element - 1]
    return total


def orbit_element_counts(orbit: Orbit, n: int) -> tuple[int, ...]:
    """How often each of x_1..x_n occurs across the orbit (direct count)."""
    counts = [0] * n
    for S in orbit.reps:
        m = S.mask
        while m:
            low = m & -m
            m ^= low
            counts[low.bit_length() - 1] += 1
    return tuple(counts)


# -- homomesy / orbomesy -------------------------------------------------


@dataclass(frozen=True)
class MesyReport:
    kind: str  # "homomesic" | "orbomesic" | "neither"
    constant: Fraction | None
    per_orbit: tuple[tuple[int, Fraction, Fraction], ...]

    @property
    def is_homomesic(self) -> bool:
        return self.kind == "homomesic"

    @property
    def is_orbomesic(self) -> bool:
        return self.kind in ("homomesic", "orbomesic")

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "constant": None if self.constant is None else str(self.constant),
            "per_orbit": [
                {"size": size, "sum": str(sm), "average": str(avg)}
                for size, sm, avg in self.per_orbit
            ],
        }


def classify_orbit_sums(data: list[tuple[int, Fraction]]) -> MesyReport:
    """Build a MesyReport from (orbit size, statistic sum) pairs."""
    per_orbit = tuple(
        (size, sm, Fraction(sm, size)) for size, sm in data
    )
    averages = {avg for _, _, avg in per_orbit}
    if len(averages) == 1:
        return MesyReport("homomesic", next(iter(averages)), per_orbit)
    by_size: dict[int, set[Fraction]] = {}
    for size, sm, _ in per_orbit:
        by_size.setdefault(size, set()).add(sm)
    if all(len(v) == 1 for v in by_size.values()):
        return MesyReport("orbomesic", None, per_orbit)
    return MesyReport("neither", None, per_orbit)


def _orbits_for(F: Fence, family: str, orbits) -> tuple[Orbit, ...]:
    if orbits is not None:
        return tuple(orbits)
    if family == ANTICHAIN:
        return antichain_orbits(F)
    if family == IDEAL:
        return ideal_orbits(F)
    raise FenceError(f"no orbit family {family!r}")


def check_homomesy(F: Fence, family: str, expr: StatExpr, orbits=None) -> MesyReport:
    """Classify a statistic over the rowmotion orbits of a family."""
    fam = expr.family()
    if fam is not None and fam != family:
        raise RoleError(f"statistic over {fam}s checked on {family} orbits")
    orbs = _orbits_for(F, family, orbits)
    return classify_orbit_sums(
        [(o.size, orbit_sum(F, expr, o)) for o in orbs]
    )


def check_orbomesy(F: Fence, family: str, expr: StatExpr, orbits=None) -> MesyReport:
    """Same classification; exposed separately for orbomesy-focused checks."""
    return check_homomesy(F, family, expr, orbits)


# -- statistics read off a tiling -----------------------------------------


@dataclass(frozen=True)
class OrbitStatistics:
    """Per-element and total orbit statistics, as computed from a tiling."""

    width: int
    antichain_counts: tuple[int, ...]
    ideal_counts: tuple[int, ...]
    antichain_total: int
    ideal_total: int


def orbit_stats_from_tiling(F: Fence, T: AlphaTiling) -> OrbitStatistics:
    """Evaluate every indicator and both cardinality statistics of an
    orbit purely from its tile counts.

    For an unshared element that is j-th smallest on segment i the orbit
    ideal count is b_i*(alpha_i - j) plus the red heads of the row that
    carries the segment's maximal element; shared elements contribute
    their red head count (maximal) or the complement of it (minimal).
    """
    counts = tile_counts(T)
    w = T.width
    alpha = F.alpha
    s = F.s
    chi_x = [0] * F.n
    chihat_x = [0] * F.n
    for k in range(1, F.n + 1):
        si = F.shared_index(k)
        if si is not None:
            chi_x[k - 1] = counts.red_heads_in_row(si)
            if si % 2 == 1:
                chihat_x[k - 1] = counts.red_heads_in_row(si)
            else:
                chihat_x[k - 1] = w - counts.red_heads_in_row(si)
        else:
            i, j = F.unshared_position(k)
            b = counts.black_in_row(i)
            chi_x[k - 1] = b
            r = counts.red_heads_in_row(i - 1 if i % 2 == 0 else i)
            chihat_x[k - 1] = b * (alpha[i - 1] - j) + r
    chi_total = sum(
        counts.black_in_row(i) * (alpha[i - 1] - 1) + counts.red_heads_in_row(i)
        for i in range(1, s + 1)
    )
    chihat_total = ((s - 1) // 2) * w
    for i in range(1, s + 1):
        chihat_total += counts.black_in_row(i) * comb(alpha[i - 1], 2)
    for k in range(1, s):
        if k % 2 == 1:
            chihat_total += counts.red_heads_in_row(k) * (
                alpha[k - 1] + alpha[k] - 1
            )
        else:
            chihat_total -= counts.red_heads_in_row(k)
    return OrbitStatistics(
        w, tuple(chi_x), tuple(chihat_x), chi_total, chihat_total
    )
