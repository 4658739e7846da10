"""PQ-trees for the consecutive-ones problem.

A P-node's children may be permuted freely, a Q-node's children may only be
reversed.  :meth:`PQTree.reduce` restricts the represented orderings to those
in which a given set of leaves is consecutive, or raises
:class:`NotConsecutive` when no such ordering exists.

The reduction is recursive rather than Booth-Lueker's linear-time template
bubbling: each call recomputes leaf sets, which costs O(n) per constraint and
is plenty for the clique matrices of interval recognition.
"""
from __future__ import annotations

from typing import Hashable, Iterable, Sequence

EMPTY, FULL, PARTIAL = 0, 1, 2


class NotConsecutive(Exception):
    pass


class Node:
    __slots__ = ("kind", "children", "leaf")

    def __init__(self, kind: str, children: list[Node] | None = None, leaf: Hashable = None):
        self.kind = kind  # "P", "Q" or "L"
        self.children = children or []
        self.leaf = leaf

    def frontier(self) -> list:
        if self.kind == "L":
            return [self.leaf]
        out = []
        for c in self.children:
            out.extend(c.frontier())
        return out

    def __repr__(self) -> str:
        if self.kind == "L":
            return repr(self.leaf)
        inner = " ".join(map(repr, self.children))
        return f"({inner})" if self.kind == "P" else f"[{inner}]"


def _make(kind: str, children: list[Node]) -> Node:
    if len(children) == 1:
        return children[0]
    if kind == "Q" and len(children) == 2:
        kind = "P"
    return Node(kind, children)


class PQTree:
    def __init__(self, leaves: Iterable[Hashable]):
        leaves = list(leaves)
        if len(set(leaves)) != len(leaves):
            raise ValueError("leaves must be distinct")
        self.leaves = leaves
        if not leaves:
            self.root = None
        elif len(leaves) == 1:
            self.root = Node("L", leaf=leaves[0])
        else:
            self.root = Node("P", [Node("L", leaf=x) for x in leaves])

    def frontier(self) -> list:
        return self.root.frontier() if self.root else []

    def reduce(self, subset: Iterable[Hashable]) -> None:
        s = set(subset)
        if not s.issubset(self.leaves):
            raise ValueError("constraint mentions unknown leaves")
        if len(s) <= 1 or len(s) == len(self.leaves):
            return
        self._counts: dict[int, int] = {}
        self._sizes: dict[int, int] = {}
        self._count(self.root, s)
        self.root = self._reduce_at(self.root, len(s))

    def _count(self, node: Node, s: set) -> int:
        if node.kind == "L":
            hit, size = int(node.leaf in s), 1
        else:
            hit = size = 0
            for c in node.children:
                hit += self._count(c, s)
                size += self._sizes[id(c)]
        self._counts[id(node)] = hit
        self._sizes[id(node)] = size
        return hit

    def _label(self, node: Node) -> int:
        hit = self._counts[id(node)]
        if hit == 0:
            return EMPTY
        if hit == self._sizes[id(node)]:
            return FULL
        return PARTIAL

    def _reduce_at(self, node: Node, total: int) -> Node:
        # descend to the pertinent root: the lowest node holding every marked leaf
        for i, c in enumerate(node.children):
            if self._counts[id(c)] == total:
                node.children[i] = self._reduce_at(c, total)
                return node
        return self._root_template(node)

    def _partial(self, node: Node) -> list[Node]:
        """Children of the Q-node replacing a partial non-root node, full end first."""
        labels = [self._label(c) for c in node.children]
        if labels.count(PARTIAL) > 1:
            raise NotConsecutive
        if node.kind == "P":
            full = [c for c, l in zip(node.children, labels) if l == FULL]
            empty = [c for c, l in zip(node.children, labels) if l == EMPTY]
            out = []
            if full:
                out.append(_make("P", full))
            for c, l in zip(node.children, labels):
                if l == PARTIAL:
                    out.extend(self._partial(c))
            if empty:
                out.append(_make("P", empty))
            return out
        # Q-node: full block at one end, then at most one partial, then empties
        for children, labs in ((node.children, labels),
                               (node.children[::-1], labels[::-1])):
            out = self._q_prefix(children, labs)
            if out is not None:
                return out
        raise NotConsecutive

    def _q_prefix(self, children: list[Node], labels: list[int]) -> list[Node] | None:
        out: list[Node] = []
        i = 0
        while i < len(labels) and labels[i] == FULL:
            out.append(children[i])
            i += 1
        if i < len(labels) and labels[i] == PARTIAL:
            part = children[i]
            i += 1
            if any(l != EMPTY for l in labels[i:]):
                return None
            out.extend(self._partial(part))
        elif any(l != EMPTY for l in labels[i:]):
            return None
        out.extend(children[i:])
        return out

    def _root_template(self, node: Node) -> Node:
        labels = [self._label(c) for c in node.children]
        if node.kind == "P":
            full = [c for c, l in zip(node.children, labels) if l == FULL]
            empty = [c for c, l in zip(node.children, labels) if l == EMPTY]
            partial = [c for c, l in zip(node.children, labels) if l == PARTIAL]
            if len(partial) > 2:
                raise NotConsecutive
            mid: list[Node] = []
            if partial:
                mid.extend(reversed(self._partial(partial[0])))
            if full:
                mid.append(_make("P", full))
            if len(partial) == 2:
                mid.extend(self._partial(partial[1]))
            block = _make("Q", mid) if partial else mid[0]
            if not empty:
                return block
            return Node("P", empty + [block])
        # Q root: empties, partial?, fulls, partial?, empties, with a contiguous core
        idx = [i for i, l in enumerate(labels) if l != EMPTY]
        lo, hi = idx[0], idx[-1]
        core = labels[lo:hi + 1]
        if any(l == EMPTY for l in core):
            raise NotConsecutive
        if any(l == PARTIAL for l in core[1:-1]):
            raise NotConsecutive
        out = list(node.children[:lo])
        for pos in range(lo, hi + 1):
            c = node.children[pos]
            if labels[pos] != PARTIAL:
                out.append(c)
            elif pos == lo and pos != hi:
                out.extend(reversed(self._partial(c)))
            elif pos == hi and pos != lo:
                out.extend(self._partial(c))
            else:
                # a lone partial child cannot be the pertinent root's only pertinent child
                raise NotConsecutive
        out.extend(node.children[hi + 1:])
        return Node("Q", out)


def consecutive_ones_order(columns: Sequence[Hashable],
                           rows: Iterable[Iterable[Hashable]]) -> list | None:
    """Order of ``columns`` in which every row set is consecutive, or None."""
    tree = PQTree(columns)
    rows = [set(r) for r in rows]
    try:
        for r in rows:
            tree.reduce(r)
    except NotConsecutive:
        return None
    order = tree.frontier()
    pos = {c: i for i, c in enumerate(order)}
    for r in rows:
        if r and max(pos[c] for c in r) - min(pos[c] for c in r) + 1 != len(r):
            raise AssertionError("PQ-tree produced a non-consecutive order")
    return order
