"""Machine-independent operation counting for enumeration runs.

Primitive operations are breadth-first searches and arc touches (incidence
entries scanned, edges flipped or copied).  Wall time never enters the
accounting, so delay and amortized-cost bounds can be asserted portably.

A gap is the work between two consecutive emitted solutions, including the
work before the first and after the last; a finished run over ``s``
solutions therefore has ``s + 1`` gaps.
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = ["DelayMeter", "GapStats"]


@dataclass(frozen=True)
class GapStats:
    bfs_runs: int
    arc_touches: int

    @property
    def ops(self) -> int:
        return self.bfs_runs + self.arc_touches


class DelayMeter:
    """Counts primitive operations and slices them into per-solution gaps.

    One meter instruments one enumeration run; create a fresh meter per run.
    """

    __slots__ = ("bfs_runs", "arc_touches", "emissions", "gaps", "_mark_bfs", "_mark_arcs", "_finished")

    def __init__(self):
        self.bfs_runs = 0
        self.arc_touches = 0
        self.emissions = 0
        self.gaps: list[GapStats] = []
        self._mark_bfs = 0
        self._mark_arcs = 0
        self._finished = False

    def bfs(self) -> None:
        self.bfs_runs += 1

    def arcs(self, count: int) -> None:
        self.arc_touches += count

    def _close_gap(self) -> None:
        self.gaps.append(GapStats(self.bfs_runs - self._mark_bfs, self.arc_touches - self._mark_arcs))
        self._mark_bfs = self.bfs_runs
        self._mark_arcs = self.arc_touches

    def emitted(self) -> None:
        if self._finished:
            raise RuntimeError("meter already finished; use a fresh DelayMeter per run")
        self._close_gap()
        self.emissions += 1

    def finished(self) -> None:
        """Close the trailing gap.  Call exactly once, after the run ends."""
        if self._finished:
            raise RuntimeError("meter already finished; use a fresh DelayMeter per run")
        self._close_gap()
        self._finished = True

    @property
    def total_ops(self) -> int:
        return self.bfs_runs + self.arc_touches

    @property
    def max_delay_ops(self) -> int:
        return max((g.ops for g in self.gaps), default=0)

    @property
    def max_delay_bfs(self) -> int:
        return max((g.bfs_runs for g in self.gaps), default=0)

    def amortized_ops(self) -> float | None:
        """Total operations per emitted solution; None when nothing was emitted."""
        if self.emissions == 0:
            return None
        return self.total_ops / self.emissions

    def summary(self) -> dict:
        return {
            "solutions": self.emissions,
            "total_bfs_runs": self.bfs_runs,
            "total_arc_touches": self.arc_touches,
            "total_ops": self.total_ops,
            "max_delay_ops": self.max_delay_ops,
            "max_delay_bfs": self.max_delay_bfs,
            "amortized_ops": self.amortized_ops(),
        }
