"""Bundled reference starters and parameter tables used by the self-test.

The starter files are verbatim transcriptions of published reference
objects; verification, not transcription, is authoritative.  Each entry
records the frozen verifier outcome so the self-test can detect both
corpus corruption and verifier drift.  The ``z5t_t20`` row does not
verify as printed (members 36 and 48 repeat, 62 and 74 are missing) and
is flagged ``valid_as_printed=False`` rather than silently corrected.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .starters import FrameStarter, parse_starter

__all__ = [
    "CorpusEntry",
    "ENTRIES",
    "Z15_ADDER",
    "corpus_text",
    "load_starter",
    "table1_pairs",
]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    resource: str
    claim: str  # "strong" or "frame"
    valid_as_printed: bool
    # (kind, element) signature of every expected violation, empty if valid
    expected_violations: tuple[tuple[str, int], ...] = ()


ENTRIES: tuple[CorpusEntry, ...] = (
    CorpusEntry("z10", "z10.st", "strong", True),
    CorpusEntry("z7", "z7.st", "strong", True),
    CorpusEntry("z15_a", "z15_a.st", "frame", True),
    CorpusEntry("z15_b", "z15_b.st", "frame", True),
    CorpusEntry("z4z4", "z4z4.st", "strong", True),
    CorpusEntry("z5t_t04", "z5t_t04.st", "strong", True),
    CorpusEntry("z5t_t06", "z5t_t06.st", "strong", True),
    CorpusEntry("z5t_t08", "z5t_t08.st", "strong", True),
    CorpusEntry("z5t_t10", "z5t_t10.st", "strong", True),
    CorpusEntry("z5t_t12", "z5t_t12.st", "strong", True),
    CorpusEntry("z5t_t14", "z5t_t14.st", "strong", True),
    CorpusEntry("z5t_t16", "z5t_t16.st", "strong", True),
    CorpusEntry("z5t_t18", "z5t_t18.st", "strong", True),
    CorpusEntry(
        "z5t_t20",
        "z5t_t20.st",
        "strong",
        False,
        expected_violations=(
            ("repeated-element", 36),
            ("repeated-element", 48),
            ("missing-element", 62),
            ("missing-element", 74),
        ),
    ),
)

# Adder between the two Z(15) starters, keyed by the oriented pairs of the
# first one; the value is the translate carrying that pair onto its mate.
Z15_ADDER: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {
    ((1,), (2,)): (1,),
    ((9,), (11,)): (2,),
    ((3,), (6,)): (6,),
    ((8,), (12,)): (11,),
    ((4,), (13,)): (3,),
    ((7,), (14,)): (7,),
}


def corpus_text(resource: str) -> str:
    return (resources.files(__package__) / "corpus" / resource).read_text(
        encoding="ascii"
    )


def load_starter(name: str) -> FrameStarter:
    entry = next((e for e in ENTRIES if e.name == name), None)
    if entry is None:
        raise KeyError(f"no corpus entry named {name!r}")
    return parse_starter(corpus_text(entry.resource))


def table1_pairs() -> frozenset[tuple[int, int]]:
    """The reference (h, g) set admitting strong frame starters, g <= 100."""
    pairs = set()
    for line in corpus_text("table1.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        h, g = line.split()
        pairs.add((int(h), int(g)))
    return frozenset(pairs)
