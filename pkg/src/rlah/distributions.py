"""Distributions into contents-ordered blocks, their statistics, and the oracle.

A distribution here is a partition of the labels 1..n+r into nonempty
blocks whose contents are linearly ordered, with the r smallest labels
(the distinguished ones) lying in r distinct blocks.  ``stats`` computes
the record-low statistics that define the weight of a distribution, and
``oracle_g`` sums those weights by brute force -- the independent check
against the recurrence-filled triangles in :mod:`rlah.lah_core`.

Generation is by incremental insertion: label m+1 enters a distribution
of 1..m either as a new singleton block, at the front of an existing
block, or immediately after an existing element.  Restricting the
insertion positions gives the three enumeration modes:

    all         every contents-ordered distribution
    min_first   the smallest element is first within each block
    increasing  elements occur in increasing order within each block

Each object is produced exactly once (the parent of a distribution is
recovered by deleting its largest label) and blocks always appear in
ascending order of their minima, which is the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .poly import Polynomial

MODES = ("all", "min_first", "increasing")

#: Largest n+r that enumeration accepts by default; beyond this the object
#: counts explode (the row total at n+r = 9 is already in the millions).
DEFAULT_CAP = 9


class SizeLimitError(RuntimeError):
    """Raised when an enumeration request exceeds the configured cap."""


@dataclass(frozen=True)
class StatPair:
    nrec: int
    rec_star: int


@dataclass(frozen=True)
class LahDistribution:
    """A canonical distribution of 1..n+r into contents-ordered blocks."""

    n: int
    r: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        """Number of non-distinguished blocks."""
        return len(self.blocks) - self.r

    def validate(self) -> None:
        seen: list[int] = []
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            seen.extend(block)
        expected = self.n + self.r
        if sorted(seen) != list(range(1, expected + 1)):
            raise ValueError(f"blocks do not partition 1..{expected}: {self.blocks}")
        mins = [min(block) for block in self.blocks]
        if mins != sorted(mins):
            raise ValueError("blocks not in ascending order of minima")
        distinguished_homes = [i for i, block in enumerate(self.blocks)
                               if any(e <= self.r for e in block)]
        per_block = [sum(1 for e in block if e <= self.r) for block in self.blocks]
        if any(c > 1 for c in per_block):
            raise ValueError("two distinguished labels share a block")
        if len(distinguished_homes) != self.r:
            raise ValueError("wrong number of distinguished blocks")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"block count {len(self.blocks)} out of range")

    def text(self) -> str:
        """Render as e.g. ``(1,5,3)|(2,9)|(6)``."""
        return "|".join("(" + ",".join(str(e) for e in block) + ")" for block in self.blocks)


def record_lows(dist: LahDistribution) -> frozenset[int]:
    """Labels with no smaller label to their left within their block.

    Every block's first element and every block's minimum qualify.
    """
    lows: set[int] = set()
    for block in dist.blocks:
        current = None
        for e in block:
            if current is None or e < current:
                lows.add(e)
                current = e
    return frozenset(lows)


def stats(dist: LahDistribution) -> StatPair:
    """Record-low statistics over all n+r elements.

    ``rec_star`` counts record lows that are not their block's minimum,
    ``nrec`` counts elements that are not record lows.  Distinguished
    labels are block minima, so they contribute to neither.
    """
    lows = record_lows(dist)
    return StatPair(nrec=dist.n + dist.r - len(lows), rec_star=len(lows) - len(dist.blocks))


def iter_arrangements(num_ordinary: int, num_distinguished: int, k: int | None,
                      mode: str = "all") -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield groupings of the ranks 0..num_ordinary+num_distinguished-1.

    Ranks below ``num_distinguished`` each occupy their own group; with
    ``k`` given, exactly ``k + num_distinguished`` groups are produced.
    Groups appear in ascending order of their smallest rank.  This is the
    insertion engine shared by distribution enumeration and the outer
    arrangements of the proof constructions.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if num_ordinary < 0 or num_distinguished < 0:
        raise ValueError("counts must be nonnegative")
    if k is not None and not 0 <= k <= num_ordinary:
        return
    total = num_ordinary + num_distinguished
    target = None if k is None else k + num_distinguished

    def extend(groups: tuple[tuple[int, ...], ...], idx: int):
        if idx == total:
            if target is None or len(groups) == target:
                yield groups
            return
        if target is not None and len(groups) + (total - idx) < target:
            return
        room = target is None or len(groups) < target
        if idx < num_distinguished:
            if room:
                yield from extend(groups + ((idx,),), idx + 1)
            return
        if room:
            yield from extend(groups + ((idx,),), idx + 1)
        for gi, group in enumerate(groups):
            if mode == "increasing":
                positions: range | tuple[int, ...] = (len(group),)
            elif mode == "min_first":
                positions = range(1, len(group) + 1)
            else:
                positions = range(len(group) + 1)
            for p in positions:
                inserted = group[:p] + (idx,) + group[p:]
                yield from extend(groups[:gi] + (inserted,) + groups[gi + 1:], idx + 1)

    yield from extend((), 0)


def _check_cap(n: int, r: int, cap: int | None) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if n + r > limit:
        raise SizeLimitError(
            f"n+r = {n + r} exceeds the enumeration cap {limit}; "
            f"raise the cap explicitly to proceed")


def enumerate_distributions(n: int, k: int, r: int, mode: str = "all",
                            cap: int | None = None) -> Iterator[LahDistribution]:
    """Yield each distribution of 1..n+r with k non-distinguished blocks once."""
    if n < 0 or k < 0 or r < 0:
        raise ValueError("n, k, r must be nonnegative")
    _check_cap(n, r, cap)
    for groups in iter_arrangements(n, r, k, mode):
        blocks = tuple(tuple(rank + 1 for rank in group) for group in groups)
        yield LahDistribution(n=n, r=r, blocks=blocks)


def oracle_g(n: int, k: int, r: int, cap: int | None = None) -> Polynomial:
    """Brute-force weight sum over all distributions: the triangle oracle."""
    terms: dict[tuple[int, int, int, int], int] = {}
    for dist in enumerate_distributions(n, k, r, "all", cap=cap):
        st = stats(dist)
        mono = (st.nrec, st.rec_star, 0, 0)
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms)


def oracle_row(n: int, r: int, cap: int | None = None) -> dict[int, Polynomial]:
    """Weight sums for every k of one row, from a single enumeration pass."""
    if n < 0 or r < 0:
        raise ValueError("n, r must be nonnegative")
    _check_cap(n, r, cap)
    rows: dict[int, dict[tuple[int, int, int, int], int]] = {}
    for groups in iter_arrangements(n, r, None, "all"):
        blocks = tuple(tuple(rank + 1 for rank in group) for group in groups)
        dist = LahDistribution(n=n, r=r, blocks=blocks)
        st = stats(dist)
        mono = (st.nrec, st.rec_star, 0, 0)
        bucket = rows.setdefault(len(blocks) - r, {})
        bucket[mono] = bucket.get(mono, 0) + 1
    return {k: Polynomial(terms) for k, terms in sorted(rows.items())}
