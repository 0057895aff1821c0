"""Resolution of nondeterministic choices, and exhaustive search over them.

A choice is a short tuple such as ``("pair", 5, 6)`` or ``("absorb", 3)``.
Algorithms call :meth:`ChoiceCursor.pick` with the sorted candidate list at
each point where the published procedure leaves the choice open. Only points
with two or more candidates are recorded or consume script entries; forced
moves are invisible to policies.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional, Sequence

Choice = tuple

DEFAULT_NODE_CAP = 10**6


def default_node_cap() -> int:
    raw = os.environ.get("CLIQUELAB_NODE_CAP")
    return int(raw) if raw else DEFAULT_NODE_CAP


class ReplayError(ValueError):
    """A scripted choice was not among the candidates offered."""


class Mode(str, Enum):
    ADVERSARIAL = "adversarial"
    OPTIMISTIC = "optimistic"


@dataclass(frozen=True)
class ChoicePolicy:
    kind: str = "lowest_id"  # or "scripted"
    script: tuple[Choice, ...] = ()

    @classmethod
    def lowest_id(cls) -> "ChoicePolicy":
        return cls()

    @classmethod
    def scripted(cls, choices: Sequence[Choice]) -> "ChoicePolicy":
        return cls("scripted", tuple(tuple(c) for c in choices))

    def to_text(self) -> str:
        return "".join(" ".join(map(str, c)) + "\n" for c in self.script)

    @classmethod
    def from_text(cls, text: str) -> "ChoicePolicy":
        choices = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tag, *rest = line.split()
            try:
                choices.append((tag, *(int(x) for x in rest)))
            except ValueError:
                raise ReplayError(f"script line {lineno}: bad choice {raw.strip()!r}") from None
        return cls.scripted(choices)


@dataclass(frozen=True)
class ChoicePoint:
    candidates: tuple[Choice, ...]
    chosen: Choice


class ChoiceCursor:
    """Per-run consumer of a policy; scripts past their end fall back to lowest id."""

    def __init__(self, policy: ChoicePolicy):
        self.policy = policy
        self._pos = 0
        self.points: list[ChoicePoint] = []

    def pick(self, candidates: Sequence[Choice]) -> Choice:
        candidates = tuple(candidates)
        if not candidates:
            raise ValueError("no candidates to choose from")
        if len(candidates) == 1:
            return candidates[0]
        script = self.policy.script
        if self._pos < len(script):
            chosen = tuple(script[self._pos])
            if chosen not in candidates:
                raise ReplayError(
                    f"scripted choice #{self._pos} {chosen} is not among candidates {list(candidates)}"
                )
            self._pos += 1
        else:
            chosen = candidates[0]
        self.points.append(ChoicePoint(candidates, chosen))
        return chosen

    @property
    def choices(self) -> tuple[Choice, ...]:
        return tuple(p.chosen for p in self.points)


@dataclass
class SearchStats:
    runs: int = 0
    nodes: int = 0
    cap: int = DEFAULT_NODE_CAP

    def to_dict(self) -> dict:
        return {"runs": self.runs, "nodes": self.nodes, "cap": self.cap}


class SearchCapExceeded(RuntimeError):
    def __init__(self, stats: SearchStats):
        super().__init__(f"choice-tree cap {stats.cap} exceeded after {stats.runs} runs")
        self.stats = stats


@dataclass
class SearchOutcome:
    """Result of a trace search; `found` is None when no branch qualifies."""

    found: Any
    stats: SearchStats = field(default_factory=SearchStats)


def explore(
    run_prefix: Callable[[tuple[Choice, ...]], tuple[Any, Sequence[ChoicePoint]]],
    accept: Callable[[Any], bool],
    node_cap: Optional[int] = None,
) -> SearchOutcome:
    """Depth-first enumeration of choice sequences in lexicographic order.

    `run_prefix(prefix)` runs the algorithm with `prefix` scripted and lowest-id
    choices afterwards, returning its outcome and every recorded choice point.
    Runs may stop early (pruning); only the points they reached are expanded.
    """
    stats = SearchStats(cap=default_node_cap() if node_cap is None else node_cap)
    stack: list[tuple[Choice, ...]] = [()]
    while stack:
        prefix = stack.pop()
        outcome, points = run_prefix(prefix)
        stats.runs += 1
        stats.nodes += len(points) - len(prefix) + 1
        if accept(outcome):
            return SearchOutcome(outcome, stats)
        if stats.nodes > stats.cap:
            raise SearchCapExceeded(stats)
        chosen = [p.chosen for p in points]
        for i in range(len(prefix), len(points)):
            alts = [c for c in points[i].candidates if c != chosen[i]]
            for alt in reversed(alts):
                stack.append(tuple(chosen[:i]) + (alt,))
    return SearchOutcome(None, stats)
