"""Group-level summaries of correlation results.

Covers significant rates per group, the five-way classification of paired
(in, out) GDP correlations, and the in/out tendency roll-ups built on it.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Literal, Mapping, Sequence, Tuple

from tradenet.constants import CLASSIFY_TIE_TOLERANCE, COMPARE_RULES
from tradenet.errors import EmptyInput, InvalidGroup, MissingGroup
from tradenet.stats.correlation import CorrelationResult

GROUPS = (1, 2)

CorrelationClass = Literal[
    "OnlyInSignificant",
    "OnlyOutSignificant",
    "BothInGreater",
    "BothOutGreater",
    "NeitherSignificant",
]

CORRELATION_CLASSES: Tuple[CorrelationClass, ...] = (
    "OnlyInSignificant",
    "OnlyOutSignificant",
    "BothInGreater",
    "BothOutGreater",
    "NeitherSignificant",
)

ComparisonRule = Literal["abs", "signed"]

IN_TENDENCY: Tuple[CorrelationClass, ...] = ("OnlyInSignificant", "BothInGreater")
OUT_TENDENCY: Tuple[CorrelationClass, ...] = ("OnlyOutSignificant", "BothOutGreater")


# ============================================================================
# Group assignment
# ============================================================================


@dataclass(frozen=True)
class GroupAssignment:
    """Country -> group (1 = higher per-capita income half, 2 = lower half)."""

    groups: Mapping[str, int]

    def __post_init__(self) -> None:
        clean: Dict[str, int] = {}
        for country, group in self.groups.items():
            if group not in GROUPS:
                raise InvalidGroup(f"Group of {country!r} must be 1 or 2, got {group!r}")
            clean[country] = int(group)
        object.__setattr__(self, "groups", clean)

    def group_of(self, country: str) -> int:
        try:
            return self.groups[country]
        except KeyError:
            raise MissingGroup(f"Country {country!r} has no group assignment") from None

    def members(self, group: int) -> List[str]:
        return [c for c, g in self.groups.items() if g == group]

    @property
    def sizes(self) -> Tuple[int, int]:
        return (len(self.members(1)), len(self.members(2)))

    def require_all(self, countries: Iterable[str]) -> None:
        """Raise MissingGroup naming every country without a group."""
        missing = [c for c in countries if c not in self.groups]
        if missing:
            raise MissingGroup(f"No group assignment for: {', '.join(missing)}")

    def restricted(self, countries: Iterable[str]) -> "GroupAssignment":
        return GroupAssignment({c: self.group_of(c) for c in countries})

    def __len__(self) -> int:
        return len(self.groups)


# ============================================================================
# Significant rates
# ============================================================================


@dataclass(frozen=True)
class GroupRate:
    significant: int
    total: int

    @property
    def rate(self) -> float:
        return self.significant / self.total if self.total else 0.0


@dataclass(frozen=True)
class SignificantRate:
    """Share of countries with p < alpha, per group and over both groups."""

    groups: Dict[int, GroupRate]
    total: GroupRate

    def rate(self, group: int) -> float:
        return self.groups[group].rate


def significant_rate(
    results: Sequence[Tuple[str, CorrelationResult]], groups: GroupAssignment
) -> SignificantRate:
    """
    Count significant results per group. Negative correlations count when p < alpha.

    Raises:
        EmptyInput: If there are no results.
        MissingGroup: If a listed country has no group.
    """
    if not results:
        raise EmptyInput("No correlation results to aggregate")
    counts = {g: [0, 0] for g in GROUPS}
    for country, result in results:
        bucket = counts[groups.group_of(country)]
        bucket[1] += 1
        if result.significant:
            bucket[0] += 1
    per_group = {g: GroupRate(sig, tot) for g, (sig, tot) in counts.items() if tot}
    total = GroupRate(
        sum(r.significant for r in per_group.values()),
        sum(r.total for r in per_group.values()),
    )
    return SignificantRate(per_group, total)


def average_rates(rates: Sequence[SignificantRate]) -> Dict[str, float]:
    """
    Mean of each group's rate (and of the total rate) across several measures.

    Returns a mapping with keys "1", "2" and "total"; a group missing from any
    table is left out.
    """
    if not rates:
        raise EmptyInput("No rate tables to average")
    averaged: Dict[str, float] = {}
    for group in GROUPS:
        if all(group in r.groups for r in rates):
            averaged[str(group)] = sum(r.rate(group) for r in rates) / len(rates)
    averaged["total"] = sum(r.total.rate for r in rates) / len(rates)
    return averaged


# ============================================================================
# Classification of (in, out) pairs
# ============================================================================


def classify(
    in_result: CorrelationResult,
    out_result: CorrelationResult,
    rule: ComparisonRule = "abs",
) -> CorrelationClass:
    """
    Place a country's (in, out) GDP correlations in one of five classes.

    When both are significant, "abs" compares |r| and "signed" compares r.
    Values within 1e-12 of each other count as in-greater.
    """
    if rule not in COMPARE_RULES:
        raise ValueError(f"Unknown comparison rule {rule!r}; expected one of {', '.join(COMPARE_RULES)}")
    if in_result.significant and not out_result.significant:
        return "OnlyInSignificant"
    if out_result.significant and not in_result.significant:
        return "OnlyOutSignificant"
    if not in_result.significant:
        return "NeitherSignificant"

    if rule == "abs":
        r_in, r_out = abs(in_result.r), abs(out_result.r)
    else:
        r_in, r_out = in_result.r, out_result.r
    if r_in >= r_out - CLASSIFY_TIE_TOLERANCE:
        return "BothInGreater"
    return "BothOutGreater"


@dataclass
class TendencyTable:
    """Per-group counts of each class plus the in/out tendency roll-ups."""

    counts: Dict[int, Dict[CorrelationClass, int]] = field(
        default_factory=lambda: {g: {c: 0 for c in CORRELATION_CLASSES} for g in GROUPS}
    )

    def count(self, group: int, cls: CorrelationClass) -> int:
        return self.counts[group][cls]

    def in_tendency(self, group: int) -> int:
        """Countries whose GDP tracks in-centrality more closely."""
        return sum(self.counts[group][c] for c in IN_TENDENCY)

    def out_tendency(self, group: int) -> int:
        return sum(self.counts[group][c] for c in OUT_TENDENCY)


def tendency_counts(
    classes: Sequence[Tuple[str, CorrelationClass]], groups: GroupAssignment
) -> TendencyTable:
    """
    Count classes per group. An empty list yields an all-zero table.

    Raises:
        MissingGroup: If a listed country has no group.
    """
    table = TendencyTable()
    for country, cls in classes:
        table.counts[groups.group_of(country)][cls] += 1
    return table


def average_tendency(tables: Sequence[TendencyTable]) -> Dict[int, Tuple[float, float]]:
    """Mean (in-tendency, out-tendency) per group across several measures."""
    if not tables:
        raise EmptyInput("No tendency tables to average")
    return {
        g: (
            sum(t.in_tendency(g) for t in tables) / len(tables),
            sum(t.out_tendency(g) for t in tables) / len(tables),
        )
        for g in GROUPS
    }
