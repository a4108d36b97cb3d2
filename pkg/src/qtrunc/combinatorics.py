"""Brute-force enumeration of partitions and overpartitions, and the map phi.

These are the slow, obviously-correct oracles the series code is checked
against.  Nothing here touches generating functions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

OVERLINE = "̅"


@dataclass(frozen=True)
class Overpartition:
    """Non-increasing parts plus the set of values whose first copy is overlined."""

    parts: tuple[int, ...] = ()
    overlined: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "overlined", frozenset(self.overlined))
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(b > a for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")
        if not self.overlined <= set(parts):
            raise ValueError(f"overlined values {sorted(self.overlined)} not among parts")

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.parts, tuple(sorted(self.overlined)))

    @classmethod
    def from_flags(cls, parts: Sequence[int], flags: Sequence[bool]) -> "Overpartition":
        """Build from per-part flags; only a value's first occurrence may be flagged."""
        if len(parts) != len(flags):
            raise ValueError("parts and flags differ in length")
        seen = set()
        over = set()
        for p, f in zip(parts, flags):
            if f:
                if p in seen:
                    raise ValueError(f"overline on a repeated copy of {p}")
                over.add(p)
            seen.add(p)
        return cls(tuple(parts), frozenset(over))

    @classmethod
    def parse(cls, text: str) -> "Overpartition":
        """Parse "3',1,1" style text; a trailing quote marks an overline."""
        text = text.strip().strip("()")
        if not text:
            return cls()
        parts, flags = [], []
        for tok in text.split(","):
            tok = tok.strip()
            bar = tok.endswith("'")
            parts.append(int(tok.rstrip("'")))
            flags.append(bar)
        return cls.from_flags(parts, flags)

    @property
    def flags(self) -> tuple[bool, ...]:
        out, seen = [], set()
        for p in self.parts:
            out.append(p in self.overlined and p not in seen)
            seen.add(p)
        return tuple(out)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        body = ",".join(f"{p}{OVERLINE}" if f else str(p) for p, f in zip(self.parts, self.flags))
        return f"({body})"


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as non-increasing tuples, largest parts first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def restricted_partitions(n: int, allowed: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Partitions of n using only the given part sizes."""
    allowed = sorted(set(a for a in allowed if 0 < a <= n), reverse=True)

    def rec(rem, idx):
        if rem == 0:
            yield ()
            return
        for i in range(idx, len(allowed)):
            a = allowed[i]
            if a <= rem:
                for rest in rec(rem - a, i):
                    yield (a,) + rest

    yield from rec(n, 0)


def colored_partitions(n: int, colors: dict[int, int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Partitions whose parts carry a color; ``colors[v]`` is how many colors value v has.

    Parts are (value, color) pairs in non-increasing lexicographic order, which
    makes each colored partition appear exactly once.
    """
    kinds = sorted(
        ((v, c) for v, k in colors.items() if 0 < v <= n for c in range(1, k + 1)),
        reverse=True,
    )

    def rec(rem, idx):
        if rem == 0:
            yield ()
            return
        for i in range(idx, len(kinds)):
            v, c = kinds[i]
            if v <= rem:
                for rest in rec(rem - v, i):
                    yield ((v, c),) + rest

    yield from rec(n, 0)


def enumerate_overpartitions(n: int) -> list[Overpartition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for parts in partitions(n):
        values = sorted(set(parts))
        for mask in range(1 << len(values)):
            over = frozenset(v for i, v in enumerate(values) if mask >> i & 1)
            out.append(Overpartition(parts, over))
    out.sort(key=Overpartition.sort_key)
    return out


def phi(lam: Overpartition) -> Overpartition:
    """Map an overpartition of n to one of n - 1 by acting on its last part.

    A last part 1 is dropped; any other unbarred or barred last part is
    decremented, keeping its bar; a barred last 1 is removed together with the
    part before it, which is replaced by that many ones (the first barred iff
    the removed part was barred).  The one-part input (1-bar) maps to the empty
    overpartition.
    """
    if not lam.parts:
        raise ValueError("phi is undefined on the empty overpartition")
    parts = list(lam.parts)
    flags = list(lam.flags)
    last, last_bar = parts[-1], flags[-1]
    if last == 1 and not last_bar:
        return Overpartition.from_flags(parts[:-1], flags[:-1])
    if last != 1:
        parts[-1] -= 1
        return Overpartition.from_flags(parts, flags)
    if len(parts) == 1:
        return Overpartition()
    prev, prev_bar = parts[-2], flags[-2]
    new_parts = parts[:-2] + [1] * prev
    new_flags = flags[:-2] + [prev_bar] + [False] * (prev - 1)
    return Overpartition.from_flags(new_parts, new_flags)


def phi_fiber_analysis(n: int) -> dict[Overpartition, int]:
    """Fiber size of phi over every overpartition of n - 1 (zero if missed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sizes = Counter(phi(lam) for lam in enumerate_overpartitions(n))
    fibers = {mu: 0 for mu in enumerate_overpartitions(n - 1)}
    for mu, c in sizes.items():
        if mu not in fibers:
            raise AssertionError(f"phi produced {mu}, not an overpartition of {n - 1}")
        fibers[mu] = c
    return fibers


def count_distinct_odd(n: int) -> int:
    count = 0
    for parts in partitions(n):
        odd = [p for p in parts if p % 2]
        if len(odd) == len(set(odd)):
            count += 1
    return count


def jmr_colors(n: int, m: int, r: int) -> dict[int, int]:
    """Part sizes allowed for J_{m,r} and their color counts.

    Parts congruent to 0, r, m - r mod m; when r = m/2 the residue r class is
    doubled, so it gets two colors.
    """
    if m < 1 or r < 1 or 2 * r > m:
        raise ValueError(f"need 1 <= r <= m/2, got m={m}, r={r}")
    colors: dict[int, int] = {}
    for v in range(1, n + 1):
        res = v % m
        if res == 0:
            colors[v] = colors.get(v, 0) + 1
        if res == r:
            colors[v] = colors.get(v, 0) + 1
        if res == (m - r) % m:
            colors[v] = colors.get(v, 0) + 1
    return colors


def count_jmr(n: int, m: int, r: int) -> int:
    colors = jmr_colors(n, m, r)
    if all(c == 1 for c in colors.values()):
        return sum(1 for _ in restricted_partitions(n, list(colors)))
    return sum(1 for _ in colored_partitions(n, colors))


def count_three_colored(n: int) -> int:
    return sum(1 for _ in colored_partitions(n, {v: 3 for v in range(1, n + 1)}))
