"""2-switches: remove ``v1v2`` and ``w1w2``, add ``v1w2`` and ``v2w1``."""
from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import InvalidSwitchError, OutOfRangeError
from .graph_core import Graph


class SwitchKind(Enum):
    INVALID = "INVALID"
    PLAIN = "PLAIN"
    DEGREE_RESTRICTED = "DEGREE_RESTRICTED"


class TwoSwitch(NamedTuple):
    v1: int
    v2: int
    w1: int
    w2: int

    @property
    def removed(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.v1, self.v2), (self.w1, self.w2)

    @property
    def added(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.v1, self.w2), (self.v2, self.w1)

    def equivalents(self) -> tuple[TwoSwitch, ...]:
        v1, v2, w1, w2 = self
        return (self, TwoSwitch(w1, w2, v1, v2), TwoSwitch(v2, v1, w2, w1), TwoSwitch(w2, w1, v2, v1))

    def canonical(self) -> TwoSwitch:
        return min(self.equivalents())


SwitchSequence = list  # of TwoSwitch


def classify_switch(g: Graph, s: TwoSwitch) -> SwitchKind:
    v1, v2, w1, w2 = s
    for x in s:
        if not 0 <= x < g.n:
            raise OutOfRangeError(f"vertex {x} outside 0..{g.n - 1}")
    if len({v1, v2, w1, w2}) != 4:
        return SwitchKind.INVALID
    adj = g.adj
    if not (adj[v1] >> v2 & 1 and adj[w1] >> w2 & 1):
        return SwitchKind.INVALID
    if adj[v1] >> w2 & 1 or adj[v2] >> w1 & 1:
        return SwitchKind.INVALID
    deg = g.degrees
    if deg[v1] == deg[w1] and deg[v2] == deg[w2]:
        return SwitchKind.DEGREE_RESTRICTED
    return SwitchKind.PLAIN


def apply_switch(g: Graph, s: TwoSwitch) -> Graph:
    if classify_switch(g, s) is SwitchKind.INVALID:
        raise InvalidSwitchError(f"{tuple(s)} is not a valid 2-switch")
    s = TwoSwitch(*s)
    return g.edit(remove=s.removed, add=s.added)


def inverse_switch(s: TwoSwitch) -> TwoSwitch:
    v1, v2, w1, w2 = s
    return TwoSwitch(v1, w2, w1, v2)


def enumerate_switches(g: Graph, restricted: bool = False) -> list[TwoSwitch]:
    """Every valid switch (or every degree-restricted one), one per symmetry class.

    Output is sorted by the canonical 4-tuple.
    """
    want = {SwitchKind.DEGREE_RESTRICTED} if restricted else {SwitchKind.PLAIN, SwitchKind.DEGREE_RESTRICTED}
    found = set()
    for (a, b), (c, d) in combinations(g.sorted_edges(), 2):
        for s in (TwoSwitch(a, b, c, d), TwoSwitch(a, b, d, c)):
            if classify_switch(g, s) in want:
                found.add(s.canonical())
    return sorted(found)


def is_restricted_sequence(g: Graph, seq: Iterable[TwoSwitch]) -> bool:
    for s in seq:
        if classify_switch(g, s) is not SwitchKind.DEGREE_RESTRICTED:
            return False
        g = apply_switch(g, s)
    return True
