"""Irredundant-base analysis: stabilizer-chain reports, minimum base length,
maximum irredundant base length, and the full set of achievable lengths.

The search explores point sequences depth first, extending each node by one
representative per orbit of the current stabilizer and skipping its fixed
points: replacing a point by a conjugate under the stabilizer conjugates
the residual chain, so orbit representatives see every achievable length,
and a fixed point can never produce the strict drop irredundancy requires.
Representatives are the smallest point of each orbit, visited in increasing
order, which makes every reported witness deterministic.

Two node representations are used: small stabilizers are materialized as a
dense matrix of element images (orbits and stabilizers become cheap array
operations); larger ones stay as chain-backed groups.  A stabilizer of
prime order is not expanded at all -- any extension by a moved point
reaches the identity, so the node contributes exactly one new length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ntheory import is_prime
from .perm import Domain, PermGroup, orbit_partition

_MATRIX_MAX_ORDER = 4096
_MATRIX_MAX_CELLS = 20_000_000


@dataclass(frozen=True)
class BaseSequence:
    """An ordered sequence of points of a domain."""

    domain: Domain
    points: tuple[int, ...]

    def __post_init__(self):
        for p in self.points:
            if not 0 <= p < self.domain.size:
                raise ValueError(f"point {p} outside the domain")

    def __len__(self) -> int:
        return len(self.points)

    def labels(self) -> tuple:
        return tuple(self.domain.labels[p] for p in self.points)


@dataclass(frozen=True)
class ChainReport:
    """Exact orders of the successive pointwise stabilizers of a sequence."""

    orders: tuple[int, ...]

    @property
    def strict_flags(self) -> tuple[bool, ...]:
        return tuple(a > b for a, b in zip(self.orders, self.orders[1:]))

    @property
    def all_strict(self) -> bool:
        return all(self.strict_flags)

    @property
    def terminal_trivial(self) -> bool:
        return self.orders[-1] == 1

    @property
    def is_irredundant_base(self) -> bool:
        return self.all_strict and self.terminal_trivial


@dataclass
class IntervalReport:
    """The set of achievable irredundant-base cardinalities of a group."""

    min_length: int
    max_length: int
    lengths: frozenset[int]
    is_interval: bool
    witnesses: dict[int, BaseSequence] = field(repr=False)


def chain_report(group: PermGroup, seq: BaseSequence) -> ChainReport:
    """Orders of G >= G_{p1} >= G_{p1,p2} >= ... along the sequence."""
    if seq.domain is not group.domain:
        raise ValueError("sequence lives on a different domain")
    current = group
    orders = [current.order]
    for p in seq.points:
        current = current.stabilizer_of_point(p)
        orders.append(current.order)
    return ChainReport(tuple(orders))


def is_irredundant_base(group: PermGroup, seq: BaseSequence) -> bool:
    return chain_report(group, seq).is_irredundant_base


# --------------------------------------------------------------------------
# search nodes
# --------------------------------------------------------------------------

class _MatrixNode:
    """A stabilizer held as the dense matrix of its element images.

    Column p lists the full orbit of p (the rows run over the whole group),
    so orbit representatives, fixed points and point stabilizers are single
    array operations.
    """

    __slots__ = ("mat", "_arange", "_reps", "_sizes")

    def __init__(self, mat: np.ndarray, arange: np.ndarray):
        self.mat = mat
        self._arange = arange
        self._reps = None
        self._sizes = None

    @property
    def order(self) -> int:
        return self.mat.shape[0]

    def _orbit_data(self):
        if self._reps is None:
            moved = (self.mat != self._arange).any(axis=0)
            mins = self.mat.min(axis=0)
            reps, counts = np.unique(mins[moved], return_counts=True)
            self._reps = reps.tolist()
            self._sizes = counts.tolist()
        return self._reps, self._sizes

    def reps(self) -> list[int]:
        return self._orbit_data()[0]

    def max_orbit_size(self) -> int:
        sizes = self._orbit_data()[1]
        return max(sizes) if sizes else 1

    def smallest_moved_point(self) -> int:
        moved = (self.mat != self._arange).any(axis=0)
        return int(np.argmax(moved))

    def child(self, point: int) -> "_MatrixNode":
        mask = self.mat[:, point] == point
        return _MatrixNode(self.mat[mask], self._arange)


class _GroupNode:
    """A stabilizer held as a chain-backed group; children drop to matrix
    form as soon as they fit."""

    __slots__ = ("group", "_orbits")

    def __init__(self, group: PermGroup):
        self.group = group
        self._orbits = None

    @property
    def order(self) -> int:
        return self.group.order

    def _orbit_data(self):
        if self._orbits is None:
            parts = [o for o in orbit_partition(self.group.generators, self.group.domain.size) if len(o) > 1]
            self._orbits = ([o[0] for o in parts], [len(o) for o in parts])
        return self._orbits

    def reps(self) -> list[int]:
        return self._orbit_data()[0]

    def max_orbit_size(self) -> int:
        sizes = self._orbit_data()[1]
        return max(sizes) if sizes else 1

    def smallest_moved_point(self) -> int:
        return min(g.smallest_moved_point() for g in self.group.generators)

    def child(self, point: int):
        stab = self.group.stabilizer_of_point(point)
        return _make_node(stab)


def _matrix_from_group(group: PermGroup) -> _MatrixNode:
    rows = np.stack([p.image for p in group.elements()])
    return _MatrixNode(rows, group.domain._arange)


def _make_node(group: PermGroup):
    order = group.order
    if order <= _MATRIX_MAX_ORDER and order * group.domain.size <= _MATRIX_MAX_CELLS:
        return _matrix_from_group(group)
    return _GroupNode(group)


# --------------------------------------------------------------------------
# searches
# --------------------------------------------------------------------------

def _prime_shortcut(order: int) -> bool:
    return order <= _MATRIX_MAX_ORDER and is_prime(order)


def achievable_lengths(group: PermGroup) -> IntervalReport:
    """The full set of achievable irredundant-base cardinalities, with one
    (deterministic, first-found) witness per achieved length."""
    domain = group.domain
    witnesses: dict[int, tuple[int, ...]] = {}

    def record(length: int, prefix: tuple[int, ...]) -> None:
        witnesses.setdefault(length, prefix)

    def explore(node, prefix: tuple[int, ...]) -> None:
        order = node.order
        if order == 1:
            record(len(prefix), prefix)
            return
        if _prime_shortcut(order):
            record(len(prefix) + 1, prefix + (node.smallest_moved_point(),))
            return
        for rep in node.reps():
            explore(node.child(rep), prefix + (rep,))

    explore(_make_node(group), ())
    lengths = frozenset(witnesses)
    lo, hi = min(lengths), max(lengths)
    return IntervalReport(
        min_length=lo,
        max_length=hi,
        lengths=lengths,
        is_interval=(lengths == frozenset(range(lo, hi + 1))),
        witnesses={l: BaseSequence(domain, pts) for l, pts in sorted(witnesses.items())},
    )


def exhaustive_lengths(group: PermGroup, max_order: int = 20000, max_points: int = 64) -> frozenset[int]:
    """Reference computation of the achievable-length set with NO orbit
    pruning: every point that strictly drops the stabilizer is tried at
    every position.  Exponential; only usable on the verification corpus.
    """
    if group.order > max_order or group.domain.size > max_points:
        raise ValueError("exhaustive reference is restricted to small groups")
    node = _matrix_from_group(group)
    n = group.domain.size
    lengths: set[int] = set()

    def rec(mat: np.ndarray, depth: int) -> None:
        k = mat.shape[0]
        if k == 1:
            lengths.add(depth)
            return
        for p in range(n):
            sub = mat[mat[:, p] == p]
            if sub.shape[0] < k:
                rec(sub, depth + 1)

    rec(node.mat, 0)
    return frozenset(lengths)


def min_base_length(group: PermGroup) -> tuple[int, BaseSequence]:
    """Smallest base cardinality, by iterative deepening over orbit
    representatives; a node is cut when even the largest possible orbit
    drops cannot reach the identity within the remaining budget."""
    domain = group.domain
    if group.order == 1:
        return 0, BaseSequence(domain, ())

    def dfs(node, prefix: tuple[int, ...], budget: int):
        order = node.order
        if order == 1:
            return prefix
        if budget == 0 or node.max_orbit_size() ** budget < order:
            return None
        if _prime_shortcut(order):
            return prefix + (node.smallest_moved_point(),)
        for rep in node.reps():
            found = dfs(node.child(rep), prefix + (rep,), budget - 1)
            if found is not None:
                return found
        return None

    root = _make_node(group)
    bound = 1
    while True:
        found = dfs(root, (), bound)
        if found is not None:
            return len(found), BaseSequence(domain, found)
        bound += 1


def max_irredundant_length(group: PermGroup) -> tuple[int, BaseSequence]:
    """Largest irredundant base cardinality, by branch-and-bound: each
    strict step at least halves the order, so a subtree is cut when
    len(prefix) + log2(order) cannot beat the current best."""
    domain = group.domain
    best: dict = {"len": -1, "wit": ()}

    def upper(order: int) -> int:
        return order.bit_length() - 1  # floor(log2(order))

    def dfs(node, prefix: tuple[int, ...]) -> None:
        order = node.order
        if order == 1:
            if len(prefix) > best["len"]:
                best["len"] = len(prefix)
                best["wit"] = prefix
            return
        if len(prefix) + upper(order) <= best["len"]:
            return
        if _prime_shortcut(order):
            if len(prefix) + 1 > best["len"]:
                best["len"] = len(prefix) + 1
                best["wit"] = prefix + (node.smallest_moved_point(),)
            return
        for rep in node.reps():
            dfs(node.child(rep), prefix + (rep,))

    dfs(_make_node(group), ())
    return best["len"], BaseSequence(domain, best["wit"])
