"""Reversibility decision via the minimized reachability tree.

The direct tree of an n-cell CA has d**n leaves, but only the *set of
distinct node values* per level matters: equal values root equal
subtrees. The per-level frontier of unique values evolves by a map that
does not depend on the level (interior derivation is level-free), and
since node values live in a finite set the frontier sequence is
eventually periodic: frontier(q + p) == frontier(q) for a minimal
preperiod q and period p. That turns the decision for any n into

* checking the interior edge cardinality (d**2 RMTs per label) on the
  expansions of frontiers 0 .. n-4, which for n beyond the closure is a
  scan of the finitely many computed expansions;
* locating frontier(n-3) arithmetically and pushing it through the two
  ring-closing filters, where labels must carry d and then exactly one
  RMT.

Any failed cardinality check certifies irreversibility with a witness;
if nothing fails the tree is complete and the CA is reversible. An
unbalanced rule fails at the root, so it is rejected without building
anything.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ResourceLimitError
from .rules import Rule, format_rule, is_balanced
from .tree import EdgeLabel, NodeClass, TreeNode, child, edge_label, root

DEFAULT_NODE_BUDGET = 100_000
_NODE_BUDGET_ENV = "REVCA_NODE_BUDGET"


def _node_budget(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(_NODE_BUDGET_ENV, DEFAULT_NODE_BUDGET))


@dataclass(frozen=True)
class Witness:
    """Why a CA is irreversible.

    ``kind`` is "unbalanced" (rejected before building the tree) or
    "edge_total" (an edge label at ``level`` carried ``actual`` RMTs where
    a complete tree needs ``expected``).
    """

    kind: str
    detail: str
    level: int | None = None
    edge_state: int | None = None
    expected: int | None = None
    actual: int | None = None
    node: TreeNode | None = None


@dataclass(frozen=True)
class Verdict:
    rule: Rule
    n: int
    reversible: bool
    witness: Witness | None
    preperiod: int | None
    period: int | None
    frontier_sizes: tuple[int, ...]

    @property
    def outcome(self) -> str:
        return "reversible" if self.reversible else "irreversible"

    def to_dict(self) -> dict:
        return {
            "schema": "revca/verdict:1",
            "rule": format_rule(self.rule),
            "d": self.rule.d,
            "n": self.n,
            "outcome": self.outcome,
            "witness_level": None if self.witness is None else self.witness.level,
            "witness_detail": None if self.witness is None else self.witness.detail,
            "q": self.preperiod,
            "p": self.period,
            "frontier_sizes": list(self.frontier_sizes),
        }


@dataclass(frozen=True)
class _Expansion:
    """Cached interior derivation of one node value."""

    children: tuple[TreeNode, ...]
    violation: Witness | None  # level filled in by the caller


class FrontierClosure:
    """Lazily computed frontier sequence of one rule.

    ``frontiers[l]`` is the frozenset of node values at level l of the
    full tree. Expansion results are cached per node value (the
    cross-level repeat mechanism), and whole-frontier repeats give the
    (preperiod, period) pair used to index any level arithmetically.

    With ``fail_fast`` the sequence stops extending at the first level
    whose expansion violates the interior cardinality; deciders never
    need later frontiers in that case. ``frontier_closure`` builds the
    non-failing variant whose contract is the sequence itself.
    """

    def __init__(self, rule: Rule, node_budget: int | None = None, fail_fast: bool = True):
        self.rule = rule
        self.node_budget = _node_budget(node_budget)
        self.fail_fast = fail_fast
        self.frontiers: list[frozenset[TreeNode]] = [frozenset([root(rule.d)])]
        self._frontier_index: dict[frozenset[TreeNode], int] = {self.frontiers[0]: 0}
        self._violations: list[Witness | None] = []
        self._expansions: dict[TreeNode, _Expansion] = {}
        self.preperiod: int | None = None
        self.period: int | None = None
        self._aborted_at: int | None = None

    @property
    def closed(self) -> bool:
        return self.period is not None

    @property
    def levels(self) -> tuple[frozenset[TreeNode], ...]:
        """The materialized frontier sequence."""
        return tuple(self.frontiers)

    @property
    def levels_computed(self) -> int:
        return len(self.frontiers)

    def frontier_sizes(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.frontiers)

    def _expand(self, node: TreeNode) -> _Expansion:
        cached = self._expansions.get(node)
        if cached is not None:
            return cached
        if len(self._expansions) >= self.node_budget:
            raise ResourceLimitError(
                f"more than {self.node_budget} distinct tree nodes; "
                f"raise the budget (env {_NODE_BUDGET_ENV}) to continue"
            )
        d = self.rule.d
        want = d * d
        children = []
        violation = None
        for m in range(d):
            label = edge_label(node, self.rule, m)
            got = label.total()
            if got != want and violation is None:
                violation = Witness(
                    kind="edge_total",
                    detail=(
                        f"edge for state {m} carries {got} RMTs, "
                        f"an interior edge of a complete tree carries {want}"
                    ),
                    edge_state=m,
                    expected=want,
                    actual=got,
                    node=node,
                )
            children.append(child(label, NodeClass.INTERIOR))
        result = _Expansion(tuple(children), violation)
        self._expansions[node] = result
        return result

    def _advance(self) -> None:
        """Compute the next frontier from the last one."""
        level = len(self.frontiers) - 1
        current = self.frontiers[-1]
        nxt: set[TreeNode] = set()
        violation = None
        for node in sorted(current, key=lambda nd: nd.by_window):
            exp = self._expand(node)
            if exp.violation is not None and violation is None:
                violation = Witness(
                    kind=exp.violation.kind,
                    detail=f"level {level}: {exp.violation.detail}",
                    level=level,
                    edge_state=exp.violation.edge_state,
                    expected=exp.violation.expected,
                    actual=exp.violation.actual,
                    node=exp.violation.node,
                )
                if self.fail_fast:
                    break
            nxt.update(exp.children)
        self._violations.append(violation)
        if violation is not None and self.fail_fast:
            self._aborted_at = level
            return
        frontier = frozenset(nxt)
        self.frontiers.append(frontier)
        seen_at = self._frontier_index.get(frontier)
        if seen_at is not None:
            self.preperiod = seen_at
            self.period = len(self.frontiers) - 1 - seen_at
        else:
            self._frontier_index[frontier] = len(self.frontiers) - 1

    def _ensure_expanded_through(self, level: int) -> None:
        """Make violations[0..level] available (or detect closure/abort first)."""
        while (
            len(self._violations) <= level
            and not self.closed
            and self._aborted_at is None
        ):
            self._advance()

    def close(self) -> None:
        """Run until the frontier sequence repeats."""
        if self.fail_fast:
            raise RuntimeError("close() requires fail_fast=False")
        while not self.closed:
            self._advance()

    def first_interior_violation(self, max_level: int) -> Witness | None:
        """Lowest-level interior cardinality violation among edge levels
        0..max_level of the full tree, if any."""
        if max_level < 0:
            return None
        self._ensure_expanded_through(max_level)
        # Once closed, violations for levels >= preperiod repeat with the
        # period, and one full period is always materialized.
        for level, v in enumerate(self._violations):
            if level > max_level:
                break
            if v is not None:
                return v
        return None

    def frontier_at(self, level: int) -> frozenset[TreeNode]:
        if level < len(self.frontiers):
            return self.frontiers[level]
        while not self.closed:
            if self._aborted_at is not None:
                raise RuntimeError(
                    f"frontier {level} unavailable: expansion stopped at the "
                    f"level-{self._aborted_at} violation"
                )
            self._advance()
            if level < len(self.frontiers):
                return self.frontiers[level]
        q, p = self.preperiod, self.period
        return self.frontiers[q + (level - q) % p]

    def canonical_level(self, level: int) -> int:
        """The materialized level holding the same frontier value."""
        if level < len(self.frontiers):
            return level
        if not self.closed:
            self.frontier_at(level)
            if level < len(self.frontiers):
                return level
        q, p = self.preperiod, self.period
        return q + (level - q) % p


def frontier_closure(rule: Rule, node_budget: int | None = None) -> FrontierClosure:
    """Compute frontiers until the sequence repeats, regardless of violations."""
    if not is_balanced(rule):
        raise ValueError("frontier closure is defined for balanced rules")
    closure = FrontierClosure(rule, node_budget=node_budget, fail_fast=False)
    closure.close()
    return closure


@dataclass(frozen=True)
class _TailViolation:
    """Tail check failure, positioned relative to level n-3 (offset 0..2)."""

    offset: int
    edge_state: int
    expected: int
    actual: int
    node: TreeNode


def _tail_witness(rec: _TailViolation | None, n: int) -> Witness | None:
    if rec is None:
        return None
    level = n - 3 + rec.offset
    return Witness(
        kind="edge_total",
        detail=(
            f"level {level}: edge for state {rec.edge_state} carries "
            f"{rec.actual} RMTs, a complete tree needs {rec.expected}"
        ),
        level=level,
        edge_state=rec.edge_state,
        expected=rec.expected,
        actual=rec.actual,
        node=rec.node,
    )


def _check_tail(rule: Rule, frontier: Iterable[TreeNode], d: int) -> _TailViolation | None:
    """Check the three final edge levels from the level-(n-3) frontier,
    applying the two ring-closing filters. Depends only on the frontier."""

    def violation(offset: int, want: int, label: EdgeLabel, node: TreeNode) -> _TailViolation | None:
        got = label.total()
        if got == want:
            return None
        return _TailViolation(offset, label.edge_state, want, got, node)

    seen_second_last: set[TreeNode] = set()
    seen_last: set[TreeNode] = set()
    for node in sorted(frontier, key=lambda nd: nd.by_window):
        for m in range(d):
            label = edge_label(node, rule, m)
            w = violation(0, d * d, label, node)
            if w is not None:
                return w
            mid = child(label, NodeClass.SECOND_LAST)
            if mid in seen_second_last:
                continue
            seen_second_last.add(mid)
            for m2 in range(d):
                label2 = edge_label(mid, rule, m2)
                w = violation(1, d, label2, mid)
                if w is not None:
                    return w
                last = child(label2, NodeClass.LAST)
                if last in seen_last:
                    continue
                seen_last.add(last)
                for m3 in range(d):
                    label3 = edge_label(last, rule, m3)
                    w = violation(2, 1, label3, last)
                    if w is not None:
                        return w
    return None


def _unbalanced_witness(rule: Rule) -> Witness:
    counts = ", ".join(
        f"{m}:{c}" for m, c in enumerate(rule.state_counts())
    )
    return Witness(
        kind="unbalanced",
        detail=f"state counts {counts} differ from {rule.d * rule.d} each",
    )


def decide(
    rule: Rule,
    n: int,
    closure: FrontierClosure | None = None,
    node_budget: int | None = None,
) -> Verdict:
    """Decide reversibility of the n-cell CA under ``rule``."""
    if n < 3:
        raise ValueError(f"cell count must be >= 3, got {n}")
    if not is_balanced(rule):
        return Verdict(rule, n, False, _unbalanced_witness(rule), None, None, ())
    if closure is None:
        closure = FrontierClosure(rule, node_budget=node_budget)
    elif closure.rule is not rule and closure.rule != rule:
        raise ValueError("closure was built for a different rule")

    w = closure.first_interior_violation(n - 4)
    if w is None:
        w = _tail_witness(_check_tail(rule, closure.frontier_at(n - 3), rule.d), n)
    return Verdict(
        rule,
        n,
        w is None,
        w,
        closure.preperiod,
        closure.period,
        closure.frontier_sizes(),
    )


def decide_range(
    rule: Rule,
    n_lo: int,
    n_hi: int,
    node_budget: int | None = None,
) -> Mapping[int, Verdict]:
    """Decide every cell count in [n_lo, n_hi], sharing one closure.

    The tail check only depends on the frontier value at level n-3, so it
    is memoized per canonical frontier level.
    """
    if not 3 <= n_lo <= n_hi:
        raise ValueError(f"need 3 <= n_lo <= n_hi, got {n_lo}..{n_hi}")
    if not is_balanced(rule):
        w = _unbalanced_witness(rule)
        return {n: Verdict(rule, n, False, w, None, None, ()) for n in range(n_lo, n_hi + 1)}
    closure = FrontierClosure(rule, node_budget=node_budget)
    tail_memo: dict[int, _TailViolation | None] = {}
    out: dict[int, Verdict] = {}
    for n in range(n_lo, n_hi + 1):
        w = closure.first_interior_violation(n - 4)
        if w is None:
            key = closure.canonical_level(n - 3)
            if key not in tail_memo:
                tail_memo[key] = _check_tail(rule, closure.frontier_at(n - 3), rule.d)
            w = _tail_witness(tail_memo[key], n)
        out[n] = Verdict(
            rule, n, w is None, w,
            closure.preperiod, closure.period, closure.frontier_sizes(),
        )
    return out
