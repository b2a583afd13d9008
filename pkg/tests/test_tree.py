"""Reachability-tree node derivation, filters, and cardinality checks."""

import random

import pytest

from revca import (
    NodeClass,
    Rule,
    check_edge_cardinality,
    child,
    edge_label,
    expected_edge_total,
    find_nonreachable,
    format_node,
    node_is_balanced,
    oracle_is_reversible,
    parse_rule,
    root,
    sibl_set,
)

FIG2_RULE = "201012210201012210201012210"
SHIFTED_BLOCKS_RULE = "000111222000111222000111222"


def test_root_is_sibling_partition():
    node = root(3)
    assert set(node.window_set(1)) == {3, 4, 5}
    assert node.total() == 27
    node2 = root(2)
    assert [set(node2.window_set(w)) for w in range(4)] == [
        {0, 1}, {2, 3}, {4, 5}, {6, 7},
    ]


def test_edge_label_collects_matching_rmts():
    rule = parse_rule(FIG2_RULE, 3)
    label = edge_label(root(3), rule, 0)
    assert label.total() == 9
    union = {r for w in range(9) for r in label.window_set(w)}
    assert union == {r for r in range(27) if rule[r] == 0}


def test_edge_label_of_constant_rule():
    rule = Rule(2, (0,) * 8)
    label = edge_label(root(2), rule, 1)
    assert label.is_empty()


def test_edge_label_union_example_d2():
    rule = parse_rule("01011010", 2)
    label = edge_label(root(2), rule, 1)
    union = {r for w in range(4) for r in label.window_set(w)}
    assert union == {1, 3, 4, 6}


def test_labels_partition_every_window_set():
    rng = random.Random(7)
    for _ in range(50):
        d = rng.choice((2, 3))
        rule = Rule(d, tuple(rng.randrange(d) for _ in range(d ** 3)))
        node = root(d)
        labels = [edge_label(node, rule, m) for m in range(d)]
        for w in range(d * d):
            masks = [lab.by_window[w] for lab in labels]
            combined = 0
            for m in masks:
                assert combined & m == 0  # pairwise disjoint
                combined |= m
            assert combined == node.by_window[w]


def test_interior_child_expands_to_sibling_sets():
    label_sets = [0] * 9
    label_sets[0] = 1 << 1  # only RMT 1 in window set 0
    from revca.tree import EdgeLabel

    node = child(EdgeLabel(3, tuple(label_sets), 0), NodeClass.INTERIOR)
    assert set(node.window_set(0)) == {3, 4, 5}
    assert all(node.by_window[w] == 0 for w in range(1, 9))


def test_empty_label_gives_empty_child():
    rule = Rule(2, (0,) * 8)
    label = edge_label(root(2), rule, 1)
    for klass in NodeClass:
        assert child(label, klass).is_empty()


def test_fig2_second_last_filter_golden():
    # 4-cell ring: level 2 carries the first ring-closing filter. The
    # canonical trace follows edges 0 then 1 from the root.
    rule = parse_rule(FIG2_RULE, 3)
    level1 = child(edge_label(root(3), rule, 0), NodeClass.INTERIOR)
    level2 = child(edge_label(level1, rule, 1), NodeClass.SECOND_LAST)
    assert format_node(level2) == "[3][18][12][4][19][13][5][20][14]"
    assert set(level2.window_set(1)) == {18}
    # without the filter the same expansion would include 19 and 20
    unfiltered = child(edge_label(level1, rule, 1), NodeClass.INTERIOR)
    assert set(unfiltered.window_set(1)) == {18, 19, 20}


def test_fig2_last_filter_golden():
    rule = parse_rule(FIG2_RULE, 3)
    level1 = child(edge_label(root(3), rule, 0), NodeClass.INTERIOR)
    level2 = child(edge_label(level1, rule, 1), NodeClass.SECOND_LAST)
    level3 = child(edge_label(level2, rule, 0), NodeClass.LAST)
    assert format_node(level3) == "[][1][][][][][15][][17]"
    assert set(level3.window_set(1)) == {1}


def test_sibling_closure_of_interior_nodes():
    rng = random.Random(21)
    for _ in range(30):
        d = rng.choice((2, 3))
        rule = Rule(d, tuple(rng.randrange(d) for _ in range(d ** 3)))
        node = root(d)
        for _ in range(3):
            m = rng.randrange(d)
            node = child(edge_label(node, rule, m), NodeClass.INTERIOR)
            for w in range(d * d):
                got = node.by_window[w]
                for j in range(d * d):
                    sib = sibl_set(j, d).mask
                    assert got & sib in (0, sib)


def test_node_balance():
    balanced = parse_rule(FIG2_RULE, 3)
    assert node_is_balanced(root(3), balanced)
    unbalanced = parse_rule("000111222000111222000111220", 3)
    assert not node_is_balanced(root(3), unbalanced)
    block_rule = parse_rule("222111000222111000222111000", 3)
    for m in range(3):
        level1 = child(edge_label(root(3), block_rule, m), NodeClass.INTERIOR)
        assert node_is_balanced(level1, block_rule)


def test_expected_edge_total_by_level():
    assert expected_edge_total(0, 6, 3) == 9
    assert expected_edge_total(3, 6, 3) == 9
    assert expected_edge_total(4, 6, 3) == 3
    assert expected_edge_total(5, 6, 3) == 1
    with pytest.raises(ValueError):
        expected_edge_total(6, 6, 3)
    with pytest.raises(ValueError):
        expected_edge_total(0, 2, 3)


def test_check_edge_cardinality_interior():
    rule = parse_rule("222222222111111111000000000", 3)
    node = root(3)
    for _ in range(3):  # a few interior levels, any edge state
        label = edge_label(node, rule, 0)
        assert check_edge_cardinality(label, 0, 10) is None
        assert label.total() == 9
        node = child(label, NodeClass.INTERIOR)


def test_check_edge_cardinality_violation():
    # the Fig. 2 ring of 4 cells: first child chain reaches a level-3 node
    # whose state-1 edge is empty (a non-reachable leaf)
    rule = parse_rule(FIG2_RULE, 3)
    node = root(3)
    for klass in (NodeClass.INTERIOR, NodeClass.SECOND_LAST, NodeClass.LAST):
        node = child(edge_label(node, rule, 0), klass)
    label = edge_label(node, rule, 1)
    violation = check_edge_cardinality(label, 3, 4)
    assert violation is not None
    assert violation.actual == 0
    assert violation.expected == 1


def test_leaf_edges_of_reversible_ca_carry_one_rmt():
    rule = parse_rule("222222222111111111000000000", 3)
    n = 4
    node = root(3)
    for level, klass in ((1, NodeClass.INTERIOR), (2, NodeClass.SECOND_LAST), (3, NodeClass.LAST)):
        label = edge_label(node, rule, 1)
        assert check_edge_cardinality(label, level - 1, n) is None
        node = child(label, klass)
    for m in range(3):
        assert check_edge_cardinality(edge_label(node, rule, m), 3, n) is None


def _reachable_by_tree(rule, n):
    """Output configurations whose leaf node is nonempty."""
    d = rule.d
    found = set()

    def klass_for(level):
        if level == n - 2:
            return NodeClass.SECOND_LAST
        if level == n - 1:
            return NodeClass.LAST
        if level == n:
            return NodeClass.LEAF
        return NodeClass.INTERIOR

    def walk(node, level, prefix):
        if level == n:
            if not node.is_empty():
                found.add(prefix)
            return
        for m in range(d):
            label = edge_label(node, rule, m)
            if label.is_empty():
                continue
            walk(child(label, klass_for(level + 1)), level + 1, prefix + (m,))

    walk(root(d), 0, ())
    return found


def _reachable_by_oracle(rule, n):
    import numpy as np

    from revca.oracle import _successors

    succ = _successors(rule, n, None)
    counts = np.bincount(succ, minlength=rule.d ** n)
    reachable = set()
    for u in np.flatnonzero(counts > 0).tolist():
        cells = []
        for _ in range(n):
            cells.append(u % rule.d)
            u //= rule.d
        reachable.add(tuple(reversed(cells)))
    return reachable


def test_tree_paths_equal_oracle_image():
    rng = random.Random(3)
    rules = [
        parse_rule("10010110", 2),  # three-cell sum mod 2
        parse_rule("11110000", 2),  # identity
        parse_rule("01011010", 2),
        Rule(2, tuple(rng.randrange(2) for _ in range(8))),
        Rule(2, tuple(rng.randrange(2) for _ in range(8))),
    ]
    for rule in rules:
        for n in (5, 8):
            assert _reachable_by_tree(rule, n) == _reachable_by_oracle(rule, n)
    assert _reachable_by_tree(parse_rule("10010110", 2), 10) == _reachable_by_oracle(
        parse_rule("10010110", 2), 10
    )
    d3 = parse_rule(FIG2_RULE, 3)
    assert _reachable_by_tree(d3, 4) == _reachable_by_oracle(d3, 4)


def test_nonreachable_configs_match_tree(capsys):
    rule = parse_rule(FIG2_RULE, 3)
    missing = set(find_nonreachable(rule, 4))
    assert missing
    assert missing == set(
        tuple((u // 3 ** (3 - i)) % 3 for i in range(4)) for u in range(81)
    ) - _reachable_by_tree(rule, 4)
    assert not oracle_is_reversible(rule, 4).bijective
