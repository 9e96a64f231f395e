"""Frame starter data model, verification predicates, and file format.

A frame starter over ``G \\ H`` is a set of unordered element pairs that
partitions the complement of the subgroup and whose signed differences
partition it again.  Verification never raises on bad candidates: every
defect is collected into a report so callers can see all violations at
once.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .groups import (
    Element,
    Group,
    Subgroup,
    parse_element,
    parse_generator_list,
    parse_group,
    subgroup_closure,
)

Pair = tuple[Element, Element]

__all__ = [
    "Pair",
    "FrameStarter",
    "Violation",
    "VerificationReport",
    "Adder",
    "AdderRow",
    "AdderResult",
    "StarterParseError",
    "verify_frame_starter",
    "is_strong",
    "match_by_differences",
    "compute_adder",
    "are_orthogonal",
    "negate_starter",
    "complement_elements",
    "format_starter",
    "parse_starter",
    "write_starter",
    "read_starter",
]


def complement_elements(group: Group, subgroup: Subgroup) -> tuple[Element, ...]:
    members = set(subgroup.elements)
    return tuple(a for a in group.elements() if a not in members)


@dataclass(frozen=True)
class FrameStarter:
    """A pair set with its (group, subgroup) context.

    Pairs are stored oriented (lexicographically smaller element first) and
    sorted, so equal starters compare equal and serialize identically.
    Construction does not verify the starter properties; use
    :func:`verify_frame_starter` / :func:`is_strong` for that.
    """

    group: Group
    subgroup: Subgroup
    pairs: tuple[Pair, ...]

    @classmethod
    def make(
        cls, group: Group, subgroup: Subgroup, pairs: Iterable[Iterable[Element]]
    ) -> "FrameStarter":
        if subgroup.parent != group:
            raise ValueError("subgroup does not belong to the given group")
        oriented = set()
        for pair in pairs:
            members = tuple(pair)
            if len(members) != 2:
                raise ValueError(f"pairs must have two elements, got {members!r}")
            for a in members:
                if not group.contains(a):
                    raise ValueError(f"{a!r} is not an element of {group}")
            x, y = members
            oriented.add((x, y) if x <= y else (y, x))
        return cls(group=group, subgroup=subgroup, pairs=tuple(sorted(oriented)))

    @property
    def type_base(self) -> int:
        return self.subgroup.order

    @property
    def type_count(self) -> int:
        return self.group.order // self.subgroup.order

    def type_str(self) -> str:
        return f"{self.type_base}^{self.type_count}"


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    pairs: tuple[Pair, ...] = ()


@dataclass(frozen=True)
class VerificationReport:
    """All defects found by a verification pass; empty means the check holds."""

    checked: str
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self) -> list[str]:
        return [f"{v.kind}: {v.message}" for v in self.violations]


def _pair_str(group: Group, pair: Pair) -> str:
    return "{" + group.format_element(pair[0]) + "," + group.format_element(pair[1]) + "}"


def _multiset_violations(
    group: Group,
    expected: tuple[Element, ...],
    counts: Counter,
    cites: dict[Element, list[Pair]],
    noun: str,
    in_subgroup_kind: str,
    repeated_kind: str,
    missing_kind: str,
    subgroup: Subgroup,
) -> list[Violation]:
    out = []
    expected_set = set(expected)
    for value in sorted(counts):
        pairs = tuple(cites[value])
        if subgroup.contains(value):
            out.append(
                Violation(
                    in_subgroup_kind,
                    f"{noun} {group.format_element(value)} lies in the subgroup "
                    f"(from {', '.join(_pair_str(group, p) for p in pairs)})",
                    pairs,
                )
            )
        elif counts[value] > 1:
            out.append(
                Violation(
                    repeated_kind,
                    f"{noun} {group.format_element(value)} occurs {counts[value]} times "
                    f"(from {', '.join(_pair_str(group, p) for p in pairs)})",
                    pairs,
                )
            )
    for value in sorted(expected_set - set(counts)):
        out.append(
            Violation(missing_kind, f"{noun} {group.format_element(value)} is missing")
        )
    return out


def verify_frame_starter(starter: FrameStarter) -> VerificationReport:
    """Check both partition properties, reporting every violation."""
    group, subgroup = starter.group, starter.subgroup
    expected = complement_elements(group, subgroup)
    violations: list[Violation] = []

    if 2 * len(starter.pairs) != len(expected):
        violations.append(
            Violation(
                "pair-count",
                f"{len(starter.pairs)} pairs cannot partition the {len(expected)} "
                f"elements outside the subgroup",
            )
        )

    member_counts: Counter = Counter()
    member_cites: dict[Element, list[Pair]] = defaultdict(list)
    for pair in starter.pairs:
        for a in pair:
            member_counts[a] += 1
            member_cites[a].append(pair)
    violations.extend(
        _multiset_violations(
            group,
            expected,
            member_counts,
            member_cites,
            "element",
            "element-in-subgroup",
            "repeated-element",
            "missing-element",
            subgroup,
        )
    )

    diff_counts: Counter = Counter()
    diff_cites: dict[Element, list[Pair]] = defaultdict(list)
    for x, y in starter.pairs:
        d = group.sub(y, x)
        nd = group.neg(d)
        if subgroup.contains(d):
            # +-d coincide inside the subgroup; one finding per pair
            violations.append(
                Violation(
                    "difference-in-subgroup",
                    f"difference {group.format_element(d)} of pair "
                    f"{_pair_str(group, (x, y))} lies in the subgroup",
                    ((x, y),),
                )
            )
            continue
        diff_counts[d] += 1
        diff_cites[d].append((x, y))
        diff_counts[nd] += 1
        diff_cites[nd].append((x, y))
    violations.extend(
        _multiset_violations(
            group,
            expected,
            diff_counts,
            diff_cites,
            "difference",
            "difference-in-subgroup",
            "repeated-difference",
            "missing-difference",
            subgroup,
        )
    )
    return VerificationReport(checked="frame", violations=tuple(violations))


def is_strong(starter: FrameStarter) -> VerificationReport:
    """Frame verification plus distinct pair sums avoiding the subgroup."""
    base = verify_frame_starter(starter)
    group, subgroup = starter.group, starter.subgroup
    violations = list(base.violations)

    sum_counts: Counter = Counter()
    sum_cites: dict[Element, list[Pair]] = defaultdict(list)
    for x, y in starter.pairs:
        s = group.add(x, y)
        sum_counts[s] += 1
        sum_cites[s].append((x, y))
    for s in sorted(sum_counts):
        pairs = tuple(sum_cites[s])
        if subgroup.contains(s):
            violations.append(
                Violation(
                    "sum-in-subgroup",
                    f"sum {group.format_element(s)} lies in the subgroup "
                    f"(from {', '.join(_pair_str(group, p) for p in pairs)})",
                    pairs,
                )
            )
        elif sum_counts[s] > 1:
            violations.append(
                Violation(
                    "repeated-sum",
                    f"sum {group.format_element(s)} occurs {sum_counts[s]} times "
                    f"(from {', '.join(_pair_str(group, p) for p in pairs)})",
                    pairs,
                )
            )
    return VerificationReport(checked="strong", violations=tuple(violations))


@dataclass(frozen=True)
class AdderRow:
    """One difference-matched row: oriented pairs with equal ordered difference."""

    left: Pair
    right: Pair
    translate: Element


@dataclass(frozen=True)
class Adder:
    rows: tuple[AdderRow, ...]

    def values(self) -> tuple[Element, ...]:
        return tuple(row.translate for row in self.rows)


@dataclass(frozen=True)
class AdderResult:
    adder: Adder | None
    report: VerificationReport

    @property
    def ok(self) -> bool:
        return self.adder is not None


def _require_same_context(s1: FrameStarter, s2: FrameStarter) -> None:
    if s1.group != s2.group or s1.subgroup.elements != s2.subgroup.elements:
        raise ValueError("starters live over different (group, subgroup) contexts")


def match_by_differences(
    s1: FrameStarter, s2: FrameStarter
) -> tuple[tuple[Pair, Pair], ...]:
    """Match each pair of ``s1`` to the unique pair of ``s2`` with the same
    signed difference class, orienting the right pair so the ordered
    differences agree.

    Both starters must verify; two valid frame starters over the same
    complement always match completely, which is asserted.
    """
    _require_same_context(s1, s2)
    for name, s in (("first", s1), ("second", s2)):
        if not verify_frame_starter(s).ok:
            raise ValueError(f"{name} starter is not a valid frame starter")
    group = s1.group
    by_class: dict[Element, tuple[Pair, Element]] = {}
    for u, v in s2.pairs:
        d = group.sub(v, u)
        by_class[min(d, group.neg(d))] = ((u, v), d)
    rows = []
    for x, y in s1.pairs:
        d = group.sub(y, x)
        key = min(d, group.neg(d))
        assert key in by_class, "valid starters over one complement must match"
        (u, v), d2 = by_class[key]
        rows.append(((x, y), (u, v) if d2 == d else (v, u)))
    return tuple(rows)


def compute_adder(s1: FrameStarter, s2: FrameStarter) -> AdderResult:
    """Translates between difference-matched pairs, or the failure report.

    With matched orientations ``y - x = v - u`` the translate is ``v - y``
    (equivalently ``u - x``).  The starters are orthogonal exactly when all
    translates are pairwise distinct and avoid the subgroup.
    """
    group, subgroup = s1.group, s1.subgroup
    rows = []
    for left, right in match_by_differences(s1, s2):
        rows.append(AdderRow(left=left, right=right, translate=group.sub(right[1], left[1])))
    violations: list[Violation] = []
    cites: dict[Element, list[Pair]] = defaultdict(list)
    counts: Counter = Counter()
    for row in rows:
        counts[row.translate] += 1
        cites[row.translate].append(row.left)
    for value in sorted(counts):
        pairs = tuple(cites[value])
        if subgroup.contains(value):
            violations.append(
                Violation(
                    "adder-in-subgroup",
                    f"translate {group.format_element(value)} lies in the subgroup "
                    f"(rows {', '.join(_pair_str(group, p) for p in pairs)})",
                    pairs,
                )
            )
        elif counts[value] > 1:
            violations.append(
                Violation(
                    "repeated-adder",
                    f"translate {group.format_element(value)} occurs {counts[value]} "
                    f"times (rows {', '.join(_pair_str(group, p) for p in pairs)})",
                    pairs,
                )
            )
    report = VerificationReport(checked="orthogonal", violations=tuple(violations))
    return AdderResult(adder=Adder(tuple(rows)) if report.ok else None, report=report)


def are_orthogonal(s1: FrameStarter, s2: FrameStarter) -> VerificationReport:
    """Orthogonality test; the verdict is ``report.ok``."""
    return compute_adder(s1, s2).report


def negate_starter(starter: FrameStarter) -> FrameStarter:
    group = starter.group
    return FrameStarter.make(
        group,
        starter.subgroup,
        [(group.neg(x), group.neg(y)) for x, y in starter.pairs],
    )


class StarterParseError(ValueError):
    """Raised when a starter file cannot be parsed."""


def format_starter(starter: FrameStarter) -> str:
    """Render the line-oriented starter format (canonical, byte-stable)."""
    group = starter.group
    lines = [f"group {group.notation()}"]
    gens = ";".join(group.format_element(g) for g in starter.subgroup.generators)
    lines.append(f"subgroup {gens}".rstrip())
    for x, y in starter.pairs:
        lines.append(f"{group.format_element(x)} , {group.format_element(y)}")
    return "\n".join(lines) + "\n"


def _split_pair_line(line: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in line:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_starter(text: str) -> FrameStarter:
    """Parse the starter file format.

    Blank lines and lines starting with ``#`` are ignored.  The first
    significant line names the group, the second the subgroup generators,
    and each following line holds one pair ``x , y``.
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append(stripped)
    if len(lines) < 2:
        raise StarterParseError("file must contain a group line and a subgroup line")
    if not lines[0].startswith("group "):
        raise StarterParseError(f"expected 'group Z(...)', got {lines[0]!r}")
    try:
        group = parse_group(lines[0][len("group ") :])
    except ValueError as exc:
        raise StarterParseError(str(exc)) from None
    if lines[1] != "subgroup" and not lines[1].startswith("subgroup "):
        raise StarterParseError(f"expected 'subgroup ...', got {lines[1]!r}")
    try:
        gens = parse_generator_list(group, lines[1][len("subgroup") :])
    except ValueError as exc:
        raise StarterParseError(str(exc)) from None
    subgroup = subgroup_closure(group, gens)
    pairs = []
    for line in lines[2:]:
        tokens = _split_pair_line(line)
        if len(tokens) != 2:
            raise StarterParseError(f"expected a pair 'x , y', got {line!r}")
        try:
            pairs.append(tuple(parse_element(group, tok) for tok in tokens))
        except ValueError as exc:
            raise StarterParseError(str(exc)) from None
    return FrameStarter.make(group, subgroup, pairs)


def write_starter(starter: FrameStarter, path: str | Path) -> None:
    Path(path).write_text(format_starter(starter), encoding="ascii")


def read_starter(path: str | Path) -> FrameStarter:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise StarterParseError(f"cannot read {path}: {exc}") from None
    return parse_starter(text)
