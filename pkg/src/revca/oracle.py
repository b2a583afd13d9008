"""Brute-force ground truth for the decision procedure.

Enumerates every configuration of the n-cell ring as a base-d integer,
evaluates the global map vectorized over the whole space, and reads
bijectivity off the image histogram. Strictly a correctness oracle and
experiment tool, not a performance path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError
from .evolution import Configuration
from .rules import Rule, format_rule

DEFAULT_ORACLE_BUDGET = 10_000_000
_ORACLE_BUDGET_ENV = "REVCA_ORACLE_BUDGET"


def _budget(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(_ORACLE_BUDGET_ENV, DEFAULT_ORACLE_BUDGET))


@dataclass(frozen=True)
class GlobalMapSummary:
    rule: Rule
    n: int
    image_size: int
    max_indegree: int

    @property
    def d(self) -> int:
        return self.rule.d

    @property
    def bijective(self) -> bool:
        return self.image_size == self.d ** self.n

    def to_dict(self) -> dict:
        return {
            "schema": "revca/global-map:1",
            "rule": format_rule(self.rule),
            "d": self.d,
            "n": self.n,
            "space": self.d ** self.n,
            "image_size": self.image_size,
            "max_indegree": self.max_indegree,
            "bijective": self.bijective,
        }


def _successors(rule: Rule, n: int, budget: int | None) -> np.ndarray:
    """successors[u] = encoding of step(decode(u)), for all d**n rings."""
    if n < 3:
        raise ValueError(f"cell count must be >= 3, got {n}")
    d = rule.d
    size = d ** n
    limit = _budget(budget)
    if size > limit:
        raise ResourceLimitError(
            f"{d}^{n} = {size} configurations exceed the oracle budget {limit} "
            f"(env {_ORACLE_BUDGET_ENV})"
        )
    table = np.asarray(rule.table, dtype=np.int64)
    configs = np.arange(size, dtype=np.int64)
    # cell i is the digit with place value d**(n-1-i)
    place = [d ** (n - 1 - i) for i in range(n)]
    digit = lambda i: (configs // place[i % n]) % d
    succ = np.zeros(size, dtype=np.int64)
    for i in range(n):
        rmt = digit(i) * (d * d) + digit(i + 1) * d + digit(i + 2)
        succ += table[rmt] * place[i]
    return succ


def oracle_is_reversible(rule: Rule, n: int, budget: int | None = None) -> GlobalMapSummary:
    """Exhaustively evaluate the global map and summarize its image."""
    succ = _successors(rule, n, budget)
    counts = np.bincount(succ, minlength=rule.d ** n)
    return GlobalMapSummary(
        rule=rule,
        n=n,
        image_size=int(np.count_nonzero(counts)),
        max_indegree=int(counts.max()),
    )


def find_nonreachable(
    rule: Rule, n: int, limit: int | None = None, budget: int | None = None
) -> list[Configuration]:
    """Configurations with no predecessor, in lexicographic order."""
    succ = _successors(rule, n, budget)
    counts = np.bincount(succ, minlength=rule.d ** n)
    missing = np.flatnonzero(counts == 0)
    if limit is not None:
        missing = missing[:limit]
    d = rule.d
    out = []
    for u in missing.tolist():
        cells = []
        for _ in range(n):
            cells.append(u % d)
            u //= d
        out.append(tuple(reversed(cells)))
    return out
