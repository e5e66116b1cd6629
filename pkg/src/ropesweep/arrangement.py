"""Simple arrangements of x-monotone pseudolines encoded as wiring diagrams.

A wiring diagram on ``n`` tracks is a word of adjacent transpositions.  The
swap at position ``p`` exchanges the wires on tracks ``p`` and ``p + 1``
(track 1 is the top one).  Wires are labelled ``1..n`` by their top-to-bottom
order at the far left, so a diagram is valid exactly when the word is a
reduced word of the order-reversing permutation.

Two words describe the same arrangement iff they are related by commuting
swaps whose positions differ by at least two.  We represent each such class by
its lexicographically least word.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import (
    PositionOutOfRange,
    RepeatedCrossing,
    ResourceLimit,
    WrongSwapCount,
)

__all__ = [
    "WiringDiagram",
    "validate",
    "canonicalize",
    "is_canonical",
    "reflect_horizontal",
    "reflect_vertical",
    "symmetry_orbit",
    "enumerate_arrangements",
    "canonical_prefixes",
    "iter_arrangements",
]


def _check(n: int, swaps: Sequence[int]) -> None:
    if n < 2:
        raise ValueError(f"need at least 2 pseudolines, got n={n}")
    wires = list(range(1, n + 1))
    for step, p in enumerate(swaps):
        if not 1 <= p <= n - 1:
            raise PositionOutOfRange(step, p, n)
        a, b = wires[p - 1], wires[p]
        if a > b:
            raise RepeatedCrossing(step, (b, a))
        wires[p - 1], wires[p] = b, a
    if len(swaps) != n * (n - 1) // 2:
        raise WrongSwapCount(n, len(swaps))


@dataclass(frozen=True)
class WiringDiagram:
    """A validated, immutable wiring diagram."""

    n: int
    swaps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "swaps", tuple(int(p) for p in self.swaps))
        _check(self.n, self.swaps)

    def __len__(self) -> int:
        return len(self.swaps)

    def wire_orders(self) -> Iterator[tuple[int, ...]]:
        """Yield the top-to-bottom wire order before the first swap and after each swap."""
        wires = list(range(1, self.n + 1))
        yield tuple(wires)
        for p in self.swaps:
            wires[p - 1], wires[p] = wires[p], wires[p - 1]
            yield tuple(wires)

    def crossing_pairs(self) -> list[tuple[int, int]]:
        """Pseudoline pair (upper, lower before the swap) for each swap in order."""
        out = []
        wires = list(range(1, self.n + 1))
        for p in self.swaps:
            a, b = wires[p - 1], wires[p]
            out.append((a, b))
            wires[p - 1], wires[p] = b, a
        return out

    def __str__(self) -> str:
        return " ".join(map(str, self.swaps))


def validate(n: int, swaps: Iterable[int]) -> WiringDiagram:
    """Check that ``swaps`` crosses every pair of ``n`` wires exactly once.

    Range and repeated-crossing errors are reported before a wrong length, so
    the offending step index is always available.
    """
    return WiringDiagram(n, tuple(swaps))


def _lex_min_word(swaps: Sequence[int]) -> list[int]:
    # Repeatedly remove the smallest letter that can be commuted to the front.
    rest = list(swaps)
    out = []
    while rest:
        best_i = -1
        best = None
        blocked: set[int] = set()
        for i, q in enumerate(rest):
            if q not in blocked and (best is None or q < best):
                best, best_i = q, i
            blocked.update((q - 1, q, q + 1))
        out.append(rest.pop(best_i))
    return out


def canonicalize(wd: WiringDiagram) -> WiringDiagram:
    """Lexicographically least word in the commutation class of ``wd``."""
    return WiringDiagram(wd.n, tuple(_lex_min_word(wd.swaps)))


def is_canonical(swaps: Sequence[int]) -> bool:
    """Local test: no letter is preceded by a larger letter it could commute past."""
    for i, p in enumerate(swaps):
        j = i - 1
        while j >= 0 and abs(swaps[j] - p) >= 2:
            if swaps[j] > p:
                return False
            j -= 1
    return True


def reflect_horizontal(wd: WiringDiagram) -> WiringDiagram:
    """Mirror left-right: the swap sequence reversed."""
    return WiringDiagram(wd.n, wd.swaps[::-1])


def reflect_vertical(wd: WiringDiagram) -> WiringDiagram:
    """Mirror top-bottom: position ``p`` becomes ``n - p``."""
    return WiringDiagram(wd.n, tuple(wd.n - p for p in wd.swaps))


def symmetry_orbit(wd: WiringDiagram) -> set[tuple[int, ...]]:
    """Canonical words of the images of ``wd`` under {id, horizontal, vertical, both}."""
    h = reflect_horizontal(wd)
    images = (wd, h, reflect_vertical(wd), reflect_vertical(h))
    return {canonicalize(g).swaps for g in images}


class _Budget:
    def __init__(self, max_count: int | None, max_seconds: float | None):
        self.max_count = max_count
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.max_count is not None and self.count > self.max_count:
            raise ResourceLimit(f"enumeration exceeded {self.max_count} arrangements")
        if self.deadline is not None and self.count % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise ResourceLimit("enumeration exceeded its time budget")


def _replay(n: int, prefix: Sequence[int]) -> list[int]:
    wires = list(range(n))
    for p in prefix:
        i = p - 1
        if wires[i] > wires[i + 1]:
            raise RepeatedCrossing(len(prefix), (wires[i + 1] + 1, wires[i] + 1))
        wires[i], wires[i + 1] = wires[i + 1], wires[i]
    return wires


def _dfs(
    n: int,
    prefix: Sequence[int],
    depth_limit: int,
    emit: Callable[[list[int]], None],
) -> None:
    """Depth-first search over lex-least reduced prefixes, extended to ``depth_limit``."""
    wires = _replay(n, prefix)
    word = list(prefix)

    def rec(depth: int) -> None:
        if depth == depth_limit:
            emit(word)
            return
        for p in range(1, n):
            i = p - 1
            if wires[i] > wires[i + 1]:
                continue
            # Reject p if a larger letter sits in the trailing run of letters
            # that commute with p.
            ok = True
            j = depth - 1
            while j >= 0:
                q = word[j]
                if -2 < q - p < 2:
                    break
                if q > p:
                    ok = False
                    break
                j -= 1
            if not ok:
                continue
            wires[i], wires[i + 1] = wires[i + 1], wires[i]
            word.append(p)
            rec(depth + 1)
            word.pop()
            wires[i], wires[i + 1] = wires[i + 1], wires[i]

    rec(len(word))


def canonical_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All canonical prefixes of length ``depth`` (used to partition enumeration)."""
    if n < 2:
        raise ValueError(f"need at least 2 pseudolines, got n={n}")
    depth = min(depth, n * (n - 1) // 2)
    out: list[tuple[int, ...]] = []
    _dfs(n, (), depth, lambda w: out.append(tuple(w)))
    return out


def enumerate_arrangements(
    n: int,
    visitor: Callable[[WiringDiagram], object] | None = None,
    *,
    prefix: Sequence[int] = (),
    max_count: int | None = None,
    max_seconds: float | None = None,
    raw: bool = False,
) -> int:
    """Visit one canonical word per arrangement of ``n`` pseudolines.

    Words are produced in lexicographic order.  With ``prefix`` only the words
    starting with that (canonical) prefix are visited, which lets callers split
    the work.  With ``raw=True`` the visitor receives the bare swap tuple
    instead of a validated :class:`WiringDiagram` (faster for counting).
    Returns the number of arrangements visited.
    """
    if n < 2:
        raise ValueError(f"need at least 2 pseudolines, got n={n}")
    if not is_canonical(prefix):
        return 0
    budget = _Budget(max_count, max_seconds)
    total = n * (n - 1) // 2

    def emit(word: list[int]) -> None:
        budget.tick()
        if visitor is None:
            return
        swaps = tuple(word)
        if raw:
            visitor(swaps)
        else:
            visitor(WiringDiagram(n, swaps))

    _dfs(n, prefix, total, emit)
    return budget.count


def iter_arrangements(n: int) -> list[WiringDiagram]:
    """All arrangements of ``n`` pseudolines as a list (small ``n`` only)."""
    out: list[WiringDiagram] = []
    enumerate_arrangements(n, out.append)
    return out
