"""Independent-set counting straight from the definition.

This module exists to check the transfer-matrix pipeline from the outside,
so it deliberately shares no counting logic with it: everything here works
on an explicit vertex/edge graph.  Two routes are implemented, subset
enumeration and branching on a pivot vertex, and inside the range where
both apply every call cross-checks them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import (
    EdgeInterpretation,
    ExplicitGraph,
    FamilySpec,
    ResourceLimitError,
    build_graph,
)
from .transfer import count

_ENUM_MAX = 26
_BRANCH_MAX = 40


def _neighbor_masks(g: ExplicitGraph) -> list[int]:
    masks = [0] * g.vertex_count
    for a, b in g.edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    return masks


def _count_by_enumeration(masks: list[int]) -> int:
    # Subsets in increasing mask order: every nonempty subset strips its
    # lowest vertex to land on an already classified subset.
    n = len(masks)
    ok = bytearray(1 << n)
    ok[0] = 1
    total = 1
    for m in range(1, 1 << n):
        low = (m & -m).bit_length() - 1
        rest = m & (m - 1)
        if ok[rest] and not (masks[low] & rest):
            ok[m] = 1
            total += 1
    return total


def _count_by_branching(masks: list[int]) -> int:
    n = len(masks)
    memo: dict[int, int] = {}

    def walk(alive: int) -> int:
        if alive == 0:
            return 1
        cached = memo.get(alive)
        if cached is not None:
            return cached
        pivot = -1
        pivot_deg = -1
        m = alive
        while m:
            v = (m & -m).bit_length() - 1
            d = (masks[v] & alive).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = v
            m &= m - 1
        if pivot_deg == 0:
            result = 1 << alive.bit_count()
        else:
            without = walk(alive & ~(1 << pivot))
            closed = masks[pivot] | (1 << pivot)
            with_pivot = walk(alive & ~closed)
            result = without + with_pivot
        memo[alive] = result
        return result

    return walk((1 << n) - 1)


def count_independent_sets(g: ExplicitGraph) -> int:
    """Exact independent-set count of an explicit graph.

    Up to 26 vertices both routes run and must agree; up to 40 vertices
    the branching route runs alone; anything larger is refused.
    """
    n = g.vertex_count
    if n > _BRANCH_MAX:
        raise ResourceLimitError(
            f"{n} vertices exceeds the {_BRANCH_MAX}-vertex oracle cap"
        )
    masks = _neighbor_masks(g)
    branched = _count_by_branching(masks)
    if n <= _ENUM_MAX:
        enumerated = _count_by_enumeration(masks)
        if enumerated != branched:
            raise AssertionError(
                f"oracle self-check failed: enumeration {enumerated} vs branching {branched}"
            )
    return branched


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one oracle-vs-transfer comparison."""

    spec: FamilySpec
    interpretation: EdgeInterpretation
    oracle_count: int
    transfer_count: int
    agree: bool

    def as_dict(self) -> dict:
        return {
            "family": self.spec.family.value,
            "ell": self.spec.ell,
            "n": self.spec.n,
            "interpretation": self.interpretation.value,
            "oracle_count": self.oracle_count,
            "transfer_count": self.transfer_count,
            "agree": self.agree,
        }


def compare(
    spec: FamilySpec,
    interp: EdgeInterpretation = EdgeInterpretation.LITERAL,
) -> OracleReport:
    """Count one instance both ways and report, never raise, on mismatch."""
    interp = EdgeInterpretation(interp)
    oracle_count = count_independent_sets(build_graph(spec, interp))
    transfer_count = count(spec)
    return OracleReport(
        spec=spec,
        interpretation=interp,
        oracle_count=oracle_count,
        transfer_count=transfer_count,
        agree=oracle_count == transfer_count,
    )
