"""Transfer-matrix counting against frozen values and brute-force chains."""

from __future__ import annotations

from itertools import product

import pytest

from levelgraphs import (
    Family,
    FamilySpec,
    ResourceLimitError,
    acceptance,
    build_transfer,
    compatible,
    count,
    count_series,
    level_vectors,
    lucas,
)

# frozen expected prefixes, computed independently by expanding the closed
# generating functions with exact convolution arithmetic
PREFIXES = {
    ("g", 3): [1, 4, 14, 48, 164, 560, 1912, 6528, 22288, 76096, 259808, 887040, 3028544],
    ("g", 4): [1, 7, 34, 183, 913, 4742, 24025, 123487, 629290, 3223119, 16458937, 84196718, 430263457],
    ("g", 5): [1, 11, 82, 663, 4985, 38838, 295693, 2280891, 17455474, 134206975],
    ("g", 6): [1, 18, 198, 2442, 27396, 322248, 3676764, 42683664, 490343640],
    ("r", 3): [1, 4, 10, 28, 76, 208, 568, 1552, 4240],
    ("r", 4): [1, 7, 21, 87, 317, 1215, 4565, 17287, 65261],
    ("r", 5): [1, 11, 46, 266, 1366, 7316, 38596, 204716],
    ("r", 6): [1, 18, 98, 812, 5748, 43120, 316600, 2343120],
    ("k", 4): [1, 5, 32, 151, 819, 4056, 21145, 106877, 550088, 2800975],
    ("k", 5): [1, 6, 72, 463, 4030, 28908, 231393, 1733366],
    ("k", 6): [1, 7, 160, 1390, 19534, 202528, 2495596, 27700276],
    ("p", 4): [1, 5, 17, 61, 217, 773, 2753, 9805, 34921, 124373, 442961, 1577629, 5618809],
    ("p", 5): [1, 6, 26, 116, 516, 2296, 10216, 45456],
    ("p", 6): [1, 7, 37, 199, 1069, 5743, 30853],
}


def test_matrix_shape_and_first_row():
    for fam in Family:
        for ell in (3, 4, 5):
            m = build_transfer(fam, ell)
            assert m.dim == len(level_vectors(fam, ell))
            assert m.rows[0] == (1 << m.dim) - 1  # zero vector admits everything
            assert m.dense()[0] == [1] * m.dim


def test_matrix_is_the_compatibility_table():
    m = build_transfer(Family.G, 3)
    vs = level_vectors(Family.G, 3)
    for i, v in enumerate(vs):
        for j, w in enumerate(vs):
            assert m.entry(i, j) == (1 if compatible(v, w) else 0)


@pytest.mark.parametrize("key,prefix", sorted(PREFIXES.items()))
def test_frozen_prefixes(key, prefix):
    fam, ell = key
    assert count_series(Family(fam), ell, len(prefix) - 1) == prefix


def test_count_series_examples():
    assert count_series(Family.K, 3, 4) == [1, 4, 14, 48, 164]
    assert count_series(Family.K, 4, 2) == [1, 5, 32]
    assert count_series(Family.P, 3, 3) == [1, 4, 10, 28]


def test_count_matches_series():
    for fam in Family:
        series = count_series(fam, 4, 6)
        for n, want in enumerate(series):
            assert count(FamilySpec(fam, 4, n)) == want


def test_single_level_counts():
    for ell in range(3, 9):
        assert count(FamilySpec(Family.G, ell, 1)) == lucas(ell)
        assert count(FamilySpec(Family.R, ell, 1)) == lucas(ell)
        assert count(FamilySpec(Family.K, ell, 1)) == ell + 1
        assert count(FamilySpec(Family.P, ell, 1)) == ell + 1


def test_counts_against_explicit_chain_enumeration():
    # small enough to enumerate every admissible chain outright
    for fam in Family:
        vs = level_vectors(fam, 3)
        accept = acceptance(fam, 3)
        accepted = {v for v, bit in zip(vs, accept) if bit}
        for n in range(6):
            total = 0
            for chain in product(vs, repeat=n):
                if n and chain[-1] not in accepted:
                    continue
                if all(compatible(chain[i], chain[i + 1]) for i in range(n - 1)):
                    total += 1
            assert count(FamilySpec(fam, 3, n)) == total


def test_prefix_property():
    for fam in Family:
        full = count_series(fam, 4, 9)
        for k in range(10):
            assert count_series(fam, 4, k) == full[: k + 1]


def test_series_strictly_increase():
    for fam in Family:
        for ell in (3, 4, 5, 6):
            s = count_series(fam, ell, 10)
            assert all(a < b for a, b in zip(s, s[1:]))


def test_family_coincidences():
    assert count_series(Family.K, 3, 20) == count_series(Family.G, 3, 20)
    assert count_series(Family.P, 3, 20) == count_series(Family.R, 3, 20)


def test_cap_is_enforced():
    with pytest.raises(ResourceLimitError):
        build_transfer(Family.G, 17)
    with pytest.raises(ValueError):
        count_series(Family.G, 3, -1)
