"""Exact independent-set counts via a level-to-level transfer matrix.

An independent set decomposes into one admissible level vector per level,
subject only to pairwise compatibility of adjacent levels and to the
innermost level being accepted.  Counting independent sets is therefore a
chain count: with M the 0/1 compatibility matrix over the ordered vector
collection and u the acceptance vector, the number of independent sets of
the n-level instance is the first entry of M^n u.  The first row of M
belongs to the zero vector and is all ones, so the outermost application
of M performs the free sum over the outermost level, and n = 0 collapses
to u's first entry, which is 1 in every family.

All arithmetic is on Python ints; counts grow geometrically and must stay
exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import Family, FamilySpec, LevelVector, acceptance, compatible, level_vectors


@dataclass(frozen=True)
class TransferMatrix:
    """Compatibility matrix over an ordered level-vector collection.

    Rows are stored as bitmasks; bit j of rows[i] is 1 iff vectors[j] may
    sit directly inside vectors[i].  Row 0 corresponds to the zero vector
    and is all ones.
    """

    family: Family
    ell: int
    vectors: tuple[LevelVector, ...]
    rows: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def dense(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]


def build_transfer(family: Family, ell: int) -> TransferMatrix:
    family = Family(family)
    vectors = level_vectors(family, ell)
    rows = []
    for v in vectors:
        mask = 0
        for j, w in enumerate(vectors):
            if compatible(v, w):
                mask |= 1 << j
        rows.append(mask)
    return TransferMatrix(family=family, ell=ell, vectors=tuple(vectors), rows=tuple(rows))


def _apply(rows: tuple[int, ...], vec: list[int]) -> list[int]:
    out = []
    for mask in rows:
        acc = 0
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            acc += vec[j]
            m &= m - 1
        out.append(acc)
    return out


def count(spec: FamilySpec) -> int:
    """Number of independent sets in the n-level instance, exactly.

    n = 0 is the empty graph and counts 1 (the empty set).
    """
    matrix = build_transfer(spec.family, spec.ell)
    vec = list(acceptance(spec.family, spec.ell))
    for _ in range(spec.n):
        vec = _apply(matrix.rows, vec)
    return vec[0]


def count_series(family: Family, ell: int, n_max: int) -> list[int]:
    """Counts for n = 0 .. n_max in one sweep of matrix-vector products."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    matrix = build_transfer(family, ell)
    vec = list(acceptance(family, ell))
    out = [vec[0]]
    for _ in range(n_max):
        vec = _apply(matrix.rows, vec)
        out.append(vec[0])
    return out
