"""Monotone not-all-equal 3-SAT instances.

File format (``.nae``)::

    c optional comment
    p mnae <numVars> <numClauses>
    1 2 3 0

Variables are the integers ``1..numVars``; a clause is three distinct
positive indices terminated by ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence

Assignment = Mapping[int, bool]
MAX_BRUTE_FORCE_VARS = 24


class NaeParseError(ValueError):
    pass


@dataclass(frozen=True)
class NaeInstance:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for i, c in enumerate(clauses, 1):
            if len(c) != 3:
                raise NaeParseError(f"clause {i} has {len(c)} literals, expected 3")
            if any(x < 0 for x in c):
                raise NaeParseError(f"clause {i} has a negated literal")
            if len(set(c)) != 3:
                raise NaeParseError(f"clause {i} repeats a variable")
            if any(not 1 <= x <= self.num_vars for x in c):
                raise NaeParseError(f"clause {i} uses a variable outside 1..{self.num_vars}")

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(range(1, self.num_vars + 1))

    def occurrences(self, x: int) -> list[int]:
        """0-based indices of the clauses containing ``x``, in file order."""
        return [i for i, c in enumerate(self.clauses) if x in c]

    def is_feasible(self, f: Assignment) -> bool:
        missing = [x for x in self.variables if x not in f]
        if missing:
            raise ValueError(f"assignment misses variable {missing[0]}")
        return all(len({f[x] for x in c}) == 2 for c in self.clauses)

    def to_text(self) -> str:
        lines = [f"p mnae {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_mnae(text: str) -> NaeInstance:
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise NaeParseError(f"line {lineno}: second header")
            if len(tok) != 4 or tok[1] != "mnae":
                raise NaeParseError(f"line {lineno}: expected 'p mnae <vars> <clauses>'")
            try:
                header = (int(tok[2]), int(tok[3]))
            except ValueError:
                raise NaeParseError(f"line {lineno}: bad header counts") from None
            continue
        if header is None:
            raise NaeParseError(f"line {lineno}: clause before header")
        try:
            lits = [int(t) for t in tok]
        except ValueError:
            raise NaeParseError(f"line {lineno}: non-integer literal") from None
        if lits[-1] != 0 or 0 in lits[:-1]:
            raise NaeParseError(f"line {lineno}: clause must end with a single 0")
        lits = lits[:-1]
        if any(x < 0 for x in lits):
            raise NaeParseError(f"line {lineno}: negated literal")
        if len(lits) != 3:
            raise NaeParseError(f"line {lineno}: clause has {len(lits)} literals, expected 3")
        if len(set(lits)) != 3:
            raise NaeParseError(f"line {lineno}: repeated variable")
        clauses.append(tuple(lits))
    if header is None:
        raise NaeParseError("missing 'p mnae' header")
    if len(clauses) != header[1]:
        raise NaeParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return NaeInstance(header[0], tuple(clauses))


def assignments(variables: Sequence[int]) -> Iterator[dict[int, bool]]:
    """All assignments in lexicographic order with ``True`` before ``False``."""
    for bits in product((True, False), repeat=len(variables)):
        yield dict(zip(variables, bits))


def nae_brute_force(phi: NaeInstance) -> dict[int, bool] | None:
    """First feasible assignment in :func:`assignments` order, or ``None``."""
    if phi.num_vars > MAX_BRUTE_FORCE_VARS:
        raise ValueError(f"brute force is limited to {MAX_BRUTE_FORCE_VARS} variables")
    for f in assignments(phi.variables):
        if phi.is_feasible(f):
            return f
    return None


def format_assignment(phi: NaeInstance, f: Assignment) -> str:
    return "".join("1" if f[x] else "0" for x in phi.variables)


def parse_assignment(phi: NaeInstance, bits: str) -> dict[int, bool]:
    bits = bits.strip()
    if len(bits) != phi.num_vars or set(bits) - {"0", "1"}:
        raise ValueError(f"expected {phi.num_vars} characters of 0/1")
    return {x: b == "1" for x, b in zip(phi.variables, bits)}


FANO = NaeInstance(
    7, ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))
)
