"""Eigenvalue multisets: grouping, comparison and JSON serialization.

A :class:`Spectrum` is the common currency of the package: every closed-form
constructor and every numeric eigensolve is reduced to one before being
compared.  Values are stored in descending order; multiplicities always sum
to the order of the underlying matrix.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = ["Spectrum", "MatchReport", "spectrum_from_values", "spectra_match"]


def _render(value: float) -> float:
    """Round a value to 12 significant digits for deterministic JSON output."""
    if value == 0:
        return 0.0
    return float(f"{value:.12g}")


@dataclass(frozen=True)
class Spectrum:
    """Multiset of eigenvalues as (value, multiplicity) pairs, descending."""

    pairs: tuple[tuple[float, int], ...]
    grouping_tol: float = 0.0

    def __post_init__(self):
        for value, mult in self.pairs:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if not math.isfinite(value):
                raise ValueError("eigenvalues must be finite")
        values = [v for v, _ in self.pairs]
        if values != sorted(values, reverse=True):
            raise ValueError("pairs must be sorted by descending value")
        for a, b in zip(values, values[1:]):
            if a - b <= self.grouping_tol:
                raise ValueError("consecutive values must differ by more than grouping_tol")

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[float]:
        return [v for v, _ in self.pairs]

    def multiplicities(self) -> list[int]:
        return [m for _, m in self.pairs]

    def trace(self) -> float:
        """Sum of value * multiplicity (equals the matrix trace)."""
        return sum(v * m for v, m in self.pairs)

    def expanded(self) -> list[float]:
        """All eigenvalues with multiplicity, ascending."""
        out: list[float] = []
        for value, mult in reversed(self.pairs):
            out.extend([value] * mult)
        return out

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[float, int]] | Mapping[float, int],
                   grouping_tol: float = 0.0) -> "Spectrum":
        """Build from unordered pairs, merging exactly equal values."""
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        merged: dict[float, int] = {}
        for value, mult in items:
            key = float(value)
            merged[key] = merged.get(key, 0) + int(mult)
        ordered = tuple(sorted(merged.items(), key=lambda p: -p[0]))
        return Spectrum(ordered, grouping_tol)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "pairs": [{"value": _render(v), "multiplicity": m} for v, m in self.pairs],
            "tol": _render(self.grouping_tol),
        }

    @staticmethod
    def from_json(text: str) -> "Spectrum":
        data = json.loads(text)
        pairs = tuple((float(p["value"]), int(p["multiplicity"])) for p in data["pairs"])
        sp = Spectrum(pairs, float(data.get("tol", 0.0)))
        if sp.order != data["order"]:
            raise ValueError("order field disagrees with multiplicities")
        return sp


def spectrum_from_values(values: Sequence[float], group_tol: float) -> Spectrum:
    """Group a list of eigenvalues into a Spectrum.

    Adjacent sorted values within ``group_tol`` are merged into one group
    represented by the group mean; the total multiplicity is preserved.
    """
    if group_tol < 0:
        raise ValueError("group_tol must be nonnegative")
    ordered = sorted(float(v) for v in values)
    groups: list[list[float]] = []
    for v in ordered:
        if groups and v - groups[-1][-1] <= group_tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    pairs = tuple(
        (sum(g) / len(g), len(g)) for g in reversed(groups)
    )
    return Spectrum(pairs, group_tol)


@dataclass(frozen=True)
class MatchReport:
    """Result of comparing two spectra groupwise."""

    matches: bool
    max_gap: float
    mismatches: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "match": self.matches,
            "max_abs_gap": _render(self.max_gap) if math.isfinite(self.max_gap) else None,
            "mismatches": list(self.mismatches),
        }


def spectra_match(a: Spectrum, b: Spectrum, tol: float) -> MatchReport:
    """Align two spectra group by group (both sorted descending).

    Matching requires equal orders, equal group counts, groupwise value gaps
    within ``tol`` and exactly equal multiplicities.
    """
    problems: list[str] = []
    if a.order != b.order:
        problems.append(f"order {a.order} != {b.order}")
    if len(a.pairs) != len(b.pairs):
        problems.append(f"group count {len(a.pairs)} != {len(b.pairs)}")
    if problems:
        return MatchReport(False, math.inf, tuple(problems))
    max_gap = 0.0
    for (va, ma), (vb, mb) in zip(a.pairs, b.pairs):
        gap = abs(va - vb)
        max_gap = max(max_gap, gap)
        if gap > tol:
            problems.append(f"value gap {gap:.3e} at {va:.6g} vs {vb:.6g}")
        if ma != mb:
            problems.append(f"multiplicity {ma} != {mb} at value {va:.6g}")
    return MatchReport(not problems, max_gap, tuple(problems))
