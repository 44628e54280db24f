import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcsk.oracles import _iso_violation_cap, naive_oplce, naive_z
from lcsk.order_iso import (
    build_oplce_table,
    order_isomorphic,
    prev_next_for_suffix,
    sort_positions,
    z_table_for_suffix,
)

values = st.integers(1, 6)  # small range: duplicates are the interesting case
seqs = st.lists(values, min_size=1, max_size=20).map(tuple)
wide_seqs = st.lists(st.integers(1, 10**6), min_size=1, max_size=20).map(tuple)


class TestOrderIsomorphic:
    def test_basic_pairs(self):
        assert order_isomorphic((1, 5, 2), (2, 9, 4))
        assert order_isomorphic((1, 1, 2), (3, 3, 4))
        assert not order_isomorphic((1, 1, 2), (3, 4, 5))  # tie must stay a tie
        assert not order_isomorphic((1, 2), (1, 2, 3))
        assert order_isomorphic((), ())

    @given(seqs)
    def test_reflexive(self, s):
        assert order_isomorphic(s, s)

    @given(seqs, seqs)
    def test_symmetric(self, s, t):
        assert order_isomorphic(s, t) == order_isomorphic(t, s)

    @given(st.data())
    def test_hereditary_under_windows(self, data):
        s = data.draw(seqs)
        # build an isomorphic partner by rank-preserving remapping
        ranked = sorted(set(s))
        gaps = data.draw(
            st.lists(st.integers(1, 5), min_size=len(ranked), max_size=len(ranked))
        )
        new_vals = {}
        acc = 0
        for v, g in zip(ranked, gaps):
            acc += g
            new_vals[v] = acc
        t = tuple(new_vals[v] for v in s)
        assert order_isomorphic(s, t)
        a = data.draw(st.integers(0, len(s) - 1))
        b = data.draw(st.integers(a, len(s)))
        assert order_isomorphic(s[a:b], t[a:b])

    @given(seqs, seqs)
    def test_agrees_with_matrix_oracle(self, s, t):
        if len(s) != len(t):
            assert not order_isomorphic(s, t)
        else:
            full = _iso_violation_cap(np.array(s), np.array(t)) == len(s)
            assert order_isomorphic(s, t) == full


class TestSortPositions:
    @given(seqs)
    def test_permutations_sorted_stably(self, s):
        sp = sort_positions(s)
        n = len(s)
        assert sorted(sp.asc) == list(range(1, n + 1))
        assert sorted(sp.desc) == list(range(1, n + 1))
        for arr, sign in ((sp.asc, 1), (sp.desc, -1)):
            for a, b in zip(arr, arr[1:]):
                va, vb = s[a - 1], s[b - 1]
                assert sign * (vb - va) >= 0 or va == vb
                if va == vb:
                    assert a < b  # ties keep ascending position order


class TestPrevNext:
    def test_worked_example(self):
        pn = prev_next_for_suffix((3, 1, 4, 2, 5), 1)
        assert pn.prev[1:] == [None, None, 1, 2, 3]
        assert pn.next[1:] == [None, 1, None, 1, None]

    def test_rejects_bad_suffix(self):
        with pytest.raises(ValueError):
            prev_next_for_suffix((1, 2), 0)
        with pytest.raises(ValueError):
            prev_next_for_suffix((1, 2), 3)

    @given(seqs, st.data())
    def test_definitional(self, s, data):
        i = data.draw(st.integers(1, len(s)))
        pn = prev_next_for_suffix(s, i)
        t = s[i - 1 :]
        for d in range(1, len(t) + 1):
            below = [a for a in range(1, d) if t[a - 1] <= t[d - 1]]
            above = [a for a in range(1, d) if t[a - 1] >= t[d - 1]]
            want_prev = max(below, key=lambda a: (t[a - 1], a)) if below else None
            want_next = max(above, key=lambda a: (-t[a - 1], a)) if above else None
            assert pn.prev[d] == want_prev
            assert pn.next[d] == want_next


class TestZTable:
    def test_worked_example(self):
        assert z_table_for_suffix((2, 1, 4, 3), 1)[1:] == [4, 1, 2, 1]

    def test_strictly_increasing_sequence(self):
        assert naive_z((1, 2, 3), 1)[1:] == [3, 2, 1]
        assert z_table_for_suffix((1, 2, 3), 1)[1:] == [3, 2, 1]

    @given(seqs, st.data())
    @settings(max_examples=120)
    def test_matches_naive_with_duplicates(self, s, data):
        i = data.draw(st.integers(1, len(s)))
        assert z_table_for_suffix(s, i) == naive_z(s, i)

    @given(wide_seqs, st.data())
    def test_matches_naive_distinct_values(self, s, data):
        i = data.draw(st.integers(1, len(s)))
        assert z_table_for_suffix(s, i) == naive_z(s, i)

    def test_shared_positions_equal_fresh(self):
        s = (5, 1, 5, 2, 5, 3)
        sp = sort_positions(s)
        for i in range(1, len(s) + 1):
            assert z_table_for_suffix(s, i, sp) == z_table_for_suffix(s, i)


class TestOpLceTable:
    def test_section_example(self):
        t = build_oplce_table((32, 40, 4, 16, 27, 41), (28, 32, 12, 20, 25, 26))
        assert t.query(1, 1) == 5
        assert t.query(3, 3) == 4

    def test_singleton_suffixes(self):
        t = build_oplce_table((7, 9), (4, 4, 4))
        assert t.query(2, 3) == 1  # singletons are always isomorphic

    def test_query_range_checks(self):
        t = build_oplce_table((1, 2), (3,))
        with pytest.raises(ValueError):
            t.query(0, 1)
        with pytest.raises(ValueError):
            t.query(1, 2)

    def test_empty_inputs(self):
        t = build_oplce_table((), (1, 2))
        assert t.values.shape == (1, 3)

    @given(seqs, seqs)
    @settings(max_examples=60)
    def test_every_cell_matches_naive(self, a, b):
        t = build_oplce_table(a, b)
        for i1 in range(1, len(a) + 1):
            for i2 in range(1, len(b) + 1):
                assert t.query(i1, i2) == naive_oplce(a, b, i1, i2)

    @given(seqs, seqs)
    def test_capped_by_suffix_lengths(self, a, b):
        t = build_oplce_table(a, b)
        for i1 in range(1, len(a) + 1):
            for i2 in range(1, len(b) + 1):
                v = t.query(i1, i2)
                assert 1 <= v <= min(len(a) - i1 + 1, len(b) - i2 + 1)


class TestSuffixExtensionRegression:
    """Order-isomorphism is not suffix-extendable like exact matching.

    Equal full-length prefixes plus an isomorphic last pair do NOT imply the
    extended windows stay isomorphic, so the exact-mode run/chunk table
    shortcuts must never be applied to the op path.
    """

    A = (32, 40, 4, 16, 27)
    B = (28, 32, 12, 20, 25)

    def test_base_pair_isomorphic(self):
        assert order_isomorphic(self.A, self.B)

    def test_first_extension_breaks_only_at_full_length(self):
        a1, b1 = self.A + (41,), self.B + (26,)
        assert not order_isomorphic(a1, b1)
        assert order_isomorphic(a1[2:], b1[2:])  # suffixes from position 3

    def test_second_extension_breaks_differently(self):
        a2, b2 = self.A + (15,), self.B + (22,)
        assert not order_isomorphic(a2, b2)
        assert order_isomorphic(a2[4:], b2[4:])  # suffixes from position 5
