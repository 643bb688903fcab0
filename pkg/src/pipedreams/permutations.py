"""Permutations of {1..n} and the statistics driving pipe-dream bookkeeping.

Positions and values are one-based throughout.  ``Perm.letters`` stores the
one-line notation ``(w(1), ..., w(n))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _one_line_tuples
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..n} in one-line notation.

    >>> w = Perm.from_one_line([2, 4, 1, 3])
    >>> w.inverse.letters
    (3, 1, 4, 2)
    >>> w.inversions(), w.major_index()
    (3, 2)
    """

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.letters)
        if n == 0:
            raise ValueError("one-line notation must be non-empty")
        if sorted(self.letters) != list(range(1, n + 1)):
            raise ValueError(f"not a rearrangement of 1..{n}: {self.letters!r}")

    @classmethod
    def from_one_line(cls, values: Iterable[int]) -> Perm:
        return cls(tuple(int(v) for v in values))

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.letters)

    def __call__(self, i: int) -> int:
        return self.letters[i - 1]

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else ","
        return sep.join(str(v) for v in self.letters)

    @cached_property
    def inverse(self) -> Perm:
        inv = [0] * self.n
        for i, v in enumerate(self.letters, start=1):
            inv[v - 1] = i
        return Perm(tuple(inv))

    def inversions(self) -> int:
        """Number of pairs i < j with w(i) > w(j)."""
        seq = self.letters
        n = self.n
        return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])

    def descents(self) -> tuple[int, ...]:
        """Positions i with w(i) > w(i+1)."""
        seq = self.letters
        return tuple(i for i in range(1, self.n) if seq[i - 1] > seq[i])

    def major_index(self) -> int:
        """Sum of the descent positions.

        >>> Perm.from_one_line([1, 4, 5, 6, 3, 2]).major_index()
        9
        """
        return sum(self.descents())

    def decreasing_runs(self) -> tuple[tuple[int, ...], ...]:
        """Maximal decreasing factors; they concatenate to the one-line word.

        >>> Perm.from_one_line([3, 1, 6, 7, 5, 4, 2]).decreasing_runs()
        ((3, 1), (6,), (7, 5, 4, 2))
        """
        runs: list[list[int]] = []
        for v in self.letters:
            if runs and runs[-1][-1] > v:
                runs[-1].append(v)
            else:
                runs.append([v])
        return tuple(tuple(r) for r in runs)

    def run_firsts(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.decreasing_runs())

    def is_fireworks(self) -> bool:
        """True iff the first entries of the decreasing runs increase."""
        firsts = self.run_firsts()
        return all(a < b for a, b in zip(firsts, firsts[1:]))

    def is_inverse_fireworks(self) -> bool:
        return self.inverse.is_fireworks()

    def lr_maxima(self) -> frozenset[int]:
        """Values strictly larger than every value to their left.

        >>> sorted(Perm.from_one_line([2, 1, 4, 3]).lr_maxima())
        [2, 4]
        """
        out: list[int] = []
        best = 0
        for v in self.letters:
            if v > best:
                out.append(v)
                best = v
        return frozenset(out)

    def column_code(self) -> Code:
        """The inverse one-line word with its left-to-right maxima zeroed.

        This is the column-to-row code shared by every vertical-less diagram
        of ``self``; entry c names the pipe exiting column c (0 = no pipe).
        """
        inv = self.inverse
        maxima = inv.lr_maxima()
        return Code(tuple(0 if v in maxima else v for v in inv.letters), self.n)

    def reduced_column_code(self) -> Code:
        """``column_code`` with its leading zero dropped.

        Only defined for inverse fireworks permutations, whose bumpless
        diagrams live on an n x (n-1) grid.
        """
        if not self.is_inverse_fireworks():
            raise ValueError(f"{self.letters}: not inverse fireworks")
        return Code(self.column_code().entries[1:], self.n)

    def pipe_travel(self) -> int:
        """Total eastward column passages of the coded pipes.

        Sum of (c - 1) over the columns c holding a non-zero entry of
        ``column_code``; every diagram with that code spends exactly this
        many tiles moving its pipes east, so it bounds the weighty count.
        """
        return sum(c - 1 for c, v in enumerate(self.column_code().entries, start=1) if v)

    def to_json(self) -> list[int]:
        return list(self.letters)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Perm:
        return cls.from_one_line(data)


@dataclass(frozen=True)
class Code:
    """Column-to-row code: entry c names the pipe exiting column c (0 = none).

    Full codes have length ``n``; reduced codes (leading column dropped)
    have length ``n - 1``.  The ambient size is carried explicitly so the
    two flavours cannot be confused at call sites.
    """

    entries: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if len(self.entries) not in (self.n, self.n - 1):
            raise ValueError(f"code of length {len(self.entries)} does not fit n={self.n}")
        nonzero = [v for v in self.entries if v != 0]
        if any(not 0 <= v <= self.n for v in self.entries):
            raise ValueError(f"entries out of range 0..{self.n}: {self.entries!r}")
        if len(set(nonzero)) != len(nonzero):
            raise ValueError(f"repeated pipe labels in {self.entries!r}")

    @property
    def is_reduced(self) -> bool:
        return len(self.entries) == self.n - 1

    @property
    def pipes(self) -> frozenset[int]:
        """The rows at which pipes enter (the non-zero entries)."""
        return frozenset(v for v in self.entries if v)

    def full_entries(self) -> tuple[int, ...]:
        return ((0,) + self.entries) if self.is_reduced else self.entries

    def realize(self) -> Perm:
        """Fill the zero slots with the missing values of 1..n in increasing order."""
        full = list(self.full_entries())
        missing = iter(sorted(set(range(1, self.n + 1)) - set(full)))
        return Perm(tuple(v if v else next(missing) for v in full))

    def is_realizable(self) -> bool:
        """True iff ``realize`` puts its left-to-right maxima exactly at the zero slots."""
        full = self.full_entries()
        p = self.realize()
        zero_slots = {c for c, v in enumerate(full, start=1) if v == 0}
        maxima = p.lr_maxima()
        maxima_slots = {c for c in range(1, self.n + 1) if p(c) in maxima}
        return maxima_slots == zero_slots

    def to_json(self) -> list[int]:
        return list(self.entries)


def symmetric_group(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic one-line order."""
    for tup in _one_line_tuples(range(1, n + 1)):
        yield Perm(tup)
