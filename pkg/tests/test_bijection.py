"""Selections, digit sequences, and the equivalence between them."""

from __future__ import annotations

import pytest

from levelgraphs import (
    Family,
    FamilySpec,
    MalformedSequenceError,
    ResourceLimitError,
    compatible_outer,
    count,
    from_sequence,
    independent_selections,
    labels_at_level,
    to_sequence,
    valid_sequences,
)


def label(n, level, text):
    for cand in labels_at_level(n, level):
        if cand.text() == text:
            return cand
    raise AssertionError(f"no label {text!r} at level {level} of {n}")


def test_innermost_labels_have_a_plain_one():
    assert [lab.text() for lab in labels_at_level(1, 1)] == ["2", "23", "12", "123"]
    assert [lab.text() for lab in labels_at_level(3, 3)] == ["2", "23", "12", "123"]


def test_outer_labels_bracket_their_lead():
    assert [lab.text() for lab in labels_at_level(3, 1)] == ["6", "67", "[5]6", "[5]67"]
    assert [lab.text() for lab in labels_at_level(3, 2)] == ["4", "45", "[3]4", "[3]45"]


def test_label_cores_step_by_two():
    for n in (1, 2, 3, 4, 5):
        for level in range(1, n + 1):
            labs = labels_at_level(n, level)
            assert all(lab.core == 2 * (n - level) + 2 for lab in labs)
            assert all(lab.level == level for lab in labs)


def test_labels_at_level_range_errors():
    with pytest.raises(ValueError):
        labels_at_level(3, 0)
    with pytest.raises(ValueError):
        labels_at_level(3, 4)
    with pytest.raises(ValueError):
        labels_at_level(0, 1)


def test_compatible_outer_examples():
    assert compatible_outer(label(3, 2, "45"), label(3, 1, "[5]67"))
    assert not compatible_outer(label(3, 2, "45"), label(3, 1, "67"))
    assert compatible_outer(None, label(3, 1, "67"))
    assert compatible_outer(label(3, 2, "45"), None)
    assert compatible_outer(None, None)
    with pytest.raises(ValueError):
        compatible_outer(label(3, 3, "2"), label(3, 1, "67"))


def test_compatible_outer_is_two_of_four():
    # every inner label admits exactly two of the four outer labels
    for inner in labels_at_level(3, 2):
        allowed = [
            outer for outer in labels_at_level(3, 1)
            if compatible_outer(inner, outer)
        ]
        assert len(allowed) == 2


def test_selection_counts_match_transfer():
    for n in range(7):
        sels = independent_selections(n)
        assert len(sels) == count(FamilySpec(Family.P, 4, n))
        assert len(set(sels)) == len(sels)


def test_selection_chains_are_innermost_first():
    for sel in independent_selections(3):
        assert len(sel) == 3
        for i, choice in enumerate(sel):
            if choice is not None:
                assert choice.level == 3 - i
        for i in range(2):
            inner, outer = sel[i], sel[i + 1]
            if inner is not None and outer is not None:
                assert compatible_outer(inner, outer)


def test_valid_sequences_small():
    assert valid_sequences(0) == [()]
    assert valid_sequences(1) == [(), (1, 2), (1, 2, 3), (2,), (2, 3)]


def test_valid_sequence_counts_match_transfer():
    for n in range(9):
        assert len(valid_sequences(n)) == count(FamilySpec(Family.P, 4, n))


def test_valid_sequences_are_sorted_and_odd_even():
    for n in (2, 3, 4):
        seqs = valid_sequences(n)
        assert seqs == sorted(seqs)
        for seq in seqs:
            members = set(seq)
            assert list(seq) == sorted(members)
            assert all(d % 2 == 0 or d - 1 in members or d + 1 in members for d in seq)
            assert all(1 <= d <= 2 * n + 1 for d in seq)


def test_enumeration_caps():
    with pytest.raises(ResourceLimitError):
        valid_sequences(10)
    with pytest.raises(ResourceLimitError):
        independent_selections(10)


def test_to_sequence_worked_examples():
    assert to_sequence((None, label(3, 2, "45"), label(3, 1, "[5]67"))) == (4, 5, 6, 7)
    assert to_sequence((None, label(3, 2, "4"), label(3, 1, "[5]67"))) == (4, 6, 7)
    assert to_sequence((label(3, 3, "12"), None, label(3, 1, "[5]6"))) == (1, 2, 5, 6)
    assert to_sequence((None, label(3, 2, "[3]4"), label(3, 1, "67"))) == (3, 4, 6, 7)


def test_from_sequence_worked_examples():
    def texts(sel):
        return tuple(None if c is None else c.text() for c in sel)

    assert texts(from_sequence((4, 5, 6, 7), 3)) == (None, "45", "[5]67")
    assert texts(from_sequence((4, 6, 7), 3)) == (None, "4", "[5]67")
    assert texts(from_sequence((1, 2, 5, 6), 3)) == ("12", None, "[5]6")
    assert texts(from_sequence((3, 4, 6, 7), 3)) == (None, "[3]4", "67")
    assert from_sequence((), 3) == (None, None, None)


def test_round_trips_exhaustively():
    for n in range(6):
        seen = {}
        for sel in independent_selections(n):
            seq = to_sequence(sel)
            assert seq not in seen, f"collision at {seq}"
            seen[seq] = sel
            assert from_sequence(seq, n) == sel
        assert sorted(seen) == valid_sequences(n)
        for seq in valid_sequences(n):
            assert to_sequence(from_sequence(seq, n)) == seq


def test_to_sequence_rejects_broken_selections():
    with pytest.raises(ValueError):
        to_sequence((label(3, 2, "45"),))  # wrong slot for a 1-level selection
    with pytest.raises(ValueError):
        # 45 under 67 violates the compatibility rules
        to_sequence((None, label(3, 2, "45"), label(3, 1, "67")))


def test_from_sequence_rejects_malformed_input():
    with pytest.raises(MalformedSequenceError):
        from_sequence((1,), 1)  # lone odd digit
    with pytest.raises(MalformedSequenceError):
        from_sequence((2, 2), 1)
    with pytest.raises(MalformedSequenceError):
        from_sequence((3, 2), 1)
    with pytest.raises(MalformedSequenceError):
        from_sequence((9,), 1)  # beyond 2n+1
    with pytest.raises(MalformedSequenceError):
        from_sequence((1, 3), 2)
