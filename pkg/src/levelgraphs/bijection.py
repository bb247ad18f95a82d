"""Bijection between level selections and odd-even digit sequences.

For the four-vertex clique family an independent set picks at most one
vertex per level, so it is a chain of per-level choices, one of four
labels or nothing.  Labels name vertices by digits: the innermost level
owns 2, the next 4, and so on outward, and a level's label consists of
its even core, optionally the odd digit below it (the lead) and
optionally the odd digit above it (the trail).  A lead other than 1 is
written in brackets because it only survives into the merged digit
sequence when the adjacent inner level chose nothing; the innermost lead
1 is always plain since nothing sits inside it.

Merging the chosen labels and resolving brackets turns every selection
into a strictly increasing digit sequence in which every odd digit has an
even neighbor.  The map is reversible: walking the sequence from the
innermost digit block outward, the inner choice pins down whether an
invisible lead was present, which is what makes this a bijection rather
than a mere surjection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import ResourceLimitError

_ENUM_MAX_LEVELS = 9


class MalformedSequenceError(ValueError):
    """The digit sequence is not in the image of the selection map."""


@dataclass(frozen=True)
class VertexLabel:
    """One vertex of one level, named by its digits.

    core is the level's even digit; lead and trail are the optional odd
    digits core-1 and core+1.  bracketed marks a lead that is written in
    brackets, which is every lead except the innermost level's 1.
    """

    level: int
    core: int
    lead: int | None
    trail: int | None
    bracketed: bool

    @property
    def shape_index(self) -> int:
        # 0 core, 1 core+trail, 2 lead+core, 3 lead+core+trail
        return (2 if self.lead is not None else 0) + (1 if self.trail is not None else 0)

    def text(self) -> str:
        parts = []
        if self.lead is not None:
            parts.append(f"[{self.lead}]" if self.bracketed else str(self.lead))
        parts.append(str(self.core))
        if self.trail is not None:
            parts.append(str(self.trail))
        return "".join(parts)


# choice at a level: a VertexLabel, or None for the empty choice
LevelChoice = VertexLabel | None

# inner shape index -> outer shape indices that may enclose it
_ALLOWED_OUTER = {0: (2, 3), 1: (0, 3), 2: (0, 1), 3: (1, 2)}


def labels_at_level(n: int, level: int) -> list[VertexLabel]:
    """The four labels of one level, innermost level n through outermost 1.

    Ordered core, core+trail, lead+core, lead+core+trail.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= level <= n:
        raise ValueError(f"level must be in 1..{n}, got {level}")
    core = 2 * (n - level) + 2
    brack = level != n
    return [
        VertexLabel(level, core, None, None, False),
        VertexLabel(level, core, None, core + 1, False),
        VertexLabel(level, core, core - 1, None, brack),
        VertexLabel(level, core, core - 1, core + 1, brack),
    ]


def compatible_outer(inner: LevelChoice, outer: LevelChoice) -> bool:
    """May `outer` sit on the level directly enclosing `inner`'s level?

    The empty choice is compatible with everything in both roles.
    """
    if inner is None or outer is None:
        return True
    if outer.level != inner.level - 1 or outer.core != inner.core + 2:
        raise ValueError(
            f"labels are not on adjacent levels: inner level {inner.level}, outer level {outer.level}"
        )
    return outer.shape_index in _ALLOWED_OUTER[inner.shape_index]


def independent_selections(n: int) -> list[tuple[LevelChoice, ...]]:
    """Every admissible chain of choices, innermost level first.

    Element i of a chain is the choice at level n - i.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > _ENUM_MAX_LEVELS:
        raise ResourceLimitError(f"n={n} exceeds the enumeration cap {_ENUM_MAX_LEVELS}")
    if n == 0:
        return [()]
    per_level = {k: labels_at_level(n, k) for k in range(1, n + 1)}
    out: list[tuple[LevelChoice, ...]] = []
    chain: list[LevelChoice] = []

    def grow(level: int) -> None:
        if level == 0:
            out.append(tuple(chain))
            return
        inner = chain[-1] if chain else None
        for choice in [None, *per_level[level]]:
            if inner is None or choice is None or compatible_outer(inner, choice):
                chain.append(choice)
                grow(level - 1)
                chain.pop()

    grow(n)
    return out


def _check_selection(selection: tuple[LevelChoice, ...]) -> None:
    n = len(selection)
    for i, choice in enumerate(selection):
        if choice is None:
            continue
        if choice.level != n - i or choice.core != 2 * i + 2:
            raise ValueError(
                f"slot {i} of an {n}-level selection cannot hold level {choice.level} core {choice.core}"
            )
    for i in range(n - 1):
        inner, outer = selection[i], selection[i + 1]
        if inner is not None and outer is not None and not compatible_outer(inner, outer):
            raise ValueError(f"choices at levels {n - i} and {n - i - 1} are incompatible")


def to_sequence(selection: tuple[LevelChoice, ...]) -> tuple[int, ...]:
    """Merge a selection's digits into its odd-even sequence.

    A bracketed lead is dropped when the digit below it or a plain copy of
    it is present, both of which happen exactly when the adjacent inner
    level chose a label; everything else is kept and brackets are erased.
    """
    _check_selection(selection)
    plain: set[int] = set()
    held: list[int] = []
    for choice in selection:
        if choice is None:
            continue
        plain.add(choice.core)
        if choice.trail is not None:
            plain.add(choice.trail)
        if choice.lead is not None:
            if choice.bracketed:
                held.append(choice.lead)
            else:
                plain.add(choice.lead)
    digits = set(plain)
    for lead in held:
        if lead - 1 not in plain and lead not in plain:
            digits.add(lead)
    return tuple(sorted(digits))


def _validate_sequence(seq: tuple[int, ...], n: int) -> None:
    if list(seq) != sorted(set(seq)):
        raise MalformedSequenceError("digits must be strictly increasing")
    for d in seq:
        if not 1 <= d <= 2 * n + 1:
            raise MalformedSequenceError(f"digit {d} is outside 1..{2 * n + 1}")
    members = set(seq)
    for d in seq:
        if d % 2 and d - 1 not in members and d + 1 not in members:
            raise MalformedSequenceError(f"odd digit {d} has no even neighbor")


def from_sequence(seq, n: int) -> tuple[LevelChoice, ...]:
    """Invert to_sequence for an n-level selection.

    Digit blocks are consumed innermost first.  Whether a level's label
    carried a lead is read off the sequence when the inner neighbor is
    empty and forced by the compatibility rules when it is not.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    seq = tuple(int(d) for d in seq)
    _validate_sequence(seq, n)
    members = set(seq)
    choices: list[LevelChoice] = []
    inner: LevelChoice = None
    for i in range(n):
        level = n - i
        core = 2 * i + 2
        if core not in members:
            choice = None
        else:
            trail = core + 1 in members
            if level == n:
                lead = 1 in members
            elif inner is None:
                lead = core - 1 in members
            else:
                # of the two shapes an inner label allows, exactly one has
                # the trail we observed; its lead bit is forced
                lead = None
                for shape in _ALLOWED_OUTER[inner.shape_index]:
                    if bool(shape & 1) == trail:
                        lead = bool(shape & 2)
                        break
                if lead is None:
                    raise MalformedSequenceError(
                        f"no admissible label at level {level} matches the digits"
                    )
            variants = labels_at_level(n, level)
            choice = variants[(2 if lead else 0) + (1 if trail else 0)]
        choices.append(choice)
        inner = choice
    selection = tuple(choices)
    if to_sequence(selection) != seq:
        raise MalformedSequenceError("sequence is not the merge of any selection")
    return selection


def valid_sequences(n: int) -> list[tuple[int, ...]]:
    """All odd-even sequences on 1..2n+1 in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > _ENUM_MAX_LEVELS:
        raise ResourceLimitError(f"n={n} exceeds the enumeration cap {_ENUM_MAX_LEVELS}")
    width = 2 * n + 1
    out: list[tuple[int, ...]] = []
    for mask in range(1 << width):
        digits = tuple(d for d in range(1, width + 1) if mask >> (d - 1) & 1)
        members = set(digits)
        if all(d % 2 == 0 or d - 1 in members or d + 1 in members for d in digits):
            out.append(digits)
    out.sort()
    return out
