import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from tilepats.tiles import (
    AmbiguousLookup,
    Pattern,
    TileSet,
    TileType,
    canonicalize,
    check_uniqueness,
    lookup_tile,
    rename_glues,
    tilesets_isomorphic,
)


def random_renaming(ts, rng):
    glues = sorted(ts.glues())
    fresh = [f"q{i}" for i in range(len(glues))]
    rng.shuffle(fresh)
    return dict(zip(glues, fresh))


def shuffled(ts, rng):
    types = list(ts.types)
    rng.shuffle(types)
    return TileSet(types)


@st.composite
def tilesets(draw, max_types=7, n_glues=4, colors=("A", "B")):
    glue = st.sampled_from([f"e{i}" for i in range(n_glues)])
    raw = draw(
        st.lists(
            st.builds(TileType, glue, glue, glue, glue, st.sampled_from(colors)),
            max_size=max_types,
            unique=True,
        )
    )
    return TileSet(raw)


def brute_isomorphic(a, b):
    """Try every matching of types; accept if one induces a glue bijection."""
    if len(a) != len(b):
        return False
    sides = ("north", "south", "east", "west")
    for perm in permutations(range(len(b))):
        fwd, back = {}, {}
        ok = True
        for i, j in enumerate(perm):
            ta, tb = a[i], b[j]
            if ta.color != tb.color:
                ok = False
                break
            for s in sides:
                ga, gb = getattr(ta, s), getattr(tb, s)
                if fwd.setdefault(ga, gb) != gb or back.setdefault(gb, ga) != ga:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


class TestUniqueness:
    def test_clash_reported(self):
        a = TileType("n1", "s", "e1", "w", "A")
        b = TileType("n2", "s", "e2", "w", "B")
        assert check_uniqueness(TileSet([a, b])) == [(0, 1)]

    def test_empty(self):
        assert check_uniqueness(TileSet()) == []

    def test_t26_has_no_clash(self, t26):
        assert check_uniqueness(t26) == []

    def test_duplicates_rejected(self):
        t = TileType("a", "b", "c", "d", "A")
        with pytest.raises(ValueError):
            TileSet([t, t])

    def test_same_glues_different_color_allowed_but_clash(self):
        ts = TileSet([TileType("a", "b", "c", "d", "A"), TileType("a", "b", "c", "d", "B")])
        assert check_uniqueness(ts) == [(0, 1)]

    @given(tilesets())
    def test_reported_pairs_share_south_west(self, ts):
        pairs = check_uniqueness(ts)
        for i, j in pairs:
            assert (ts[i].south, ts[i].west) == (ts[j].south, ts[j].west)
        keys = [(t.south, t.west) for t in ts]
        assert (not pairs) == (len(set(keys)) == len(keys))


class TestLookup:
    def test_counter_blue_at_origin(self, counter):
        ts, *_ = counter
        t = lookup_tile(ts, "1", "1")
        assert t.color == "Blue" and t.east == "0" and t.north == "0"

    def test_unknown_pair(self, t26):
        assert lookup_tile(t26, "nope", "0h") is None

    def test_t26_neutral_black(self, t26):
        assert lookup_tile(t26, "#", "0h") == TileType("#", "#", "0h", "0h", "Black")

    def test_ambiguous(self):
        ts = TileSet([TileType("a", "s", "e", "w", "A"), TileType("b", "s", "e", "w", "A")])
        with pytest.raises(AmbiguousLookup):
            lookup_tile(ts, "s", "w")

    @given(tilesets())
    def test_partial_function_when_unique(self, ts):
        if check_uniqueness(ts):
            return
        for t in ts:
            assert lookup_tile(ts, t.south, t.west) == t


class TestCanonical:
    def test_renaming_invariance_t26(self, t26):
        rng = random.Random(3)
        ref = canonicalize(t26)
        for _ in range(50):
            other = shuffled(rename_glues(t26, random_renaming(t26, rng)), rng)
            assert canonicalize(other) == ref

    def test_idempotent(self, t26):
        c = canonicalize(t26)
        assert canonicalize(c) == c

    def test_size_change_detected(self, t26):
        carry = next(t for t in t26 if t.color == "CarryBlue")
        assert canonicalize(t26) != canonicalize(t26.without(carry))

    def test_colors_are_not_renamed(self):
        a = TileSet([TileType("a", "a", "b", "b", "Red")])
        b = TileSet([TileType("a", "a", "b", "b", "Blue")])
        assert not tilesets_isomorphic(a, b)

    def test_t26_vs_counter(self, t26, counter):
        assert not tilesets_isomorphic(t26, counter[0])

    def test_glue_structure_matters(self):
        a = TileSet([TileType("a", "a", "b", "b", "X")])
        b = TileSet([TileType("a", "b", "a", "b", "X")])
        assert not tilesets_isomorphic(a, b)

    def test_rename_must_be_injective(self, t26):
        with pytest.raises(ValueError):
            rename_glues(t26, {"0h": "1h"})

    @settings(max_examples=200)
    @given(tilesets(), st.randoms(use_true_random=False))
    def test_invariance_and_idempotence(self, ts, rnd):
        rng = random.Random(rnd.random())
        c = canonicalize(ts)
        assert canonicalize(c) == c
        other = shuffled(rename_glues(ts, random_renaming(ts, rng)), rng)
        assert canonicalize(other) == c

    @settings(max_examples=300)
    @given(tilesets(max_types=4, n_glues=3), tilesets(max_types=4, n_glues=3))
    def test_matches_brute_force_isomorphism(self, a, b):
        assert tilesets_isomorphic(a, b) == brute_isomorphic(a, b)

    @settings(max_examples=100)
    @given(st.lists(tilesets(max_types=3, n_glues=2), min_size=3, max_size=3))
    def test_equivalence_relation(self, triple):
        a, b, c = triple
        assert tilesets_isomorphic(a, a)
        assert tilesets_isomorphic(a, b) == tilesets_isomorphic(b, a)
        if tilesets_isomorphic(a, b) and tilesets_isomorphic(b, c):
            assert tilesets_isomorphic(a, c)


class TestPattern:
    def test_coordinates(self):
        p = Pattern.from_top_rows([["N1", "N2"], ["S1", "S2"]])
        assert p[(1, 1)] == "S1" and p[(2, 2)] == "N2"
        assert (p.width, p.height) == (2, 2)
        assert list(p.cells()) == [(1, 1), (2, 1), (1, 2), (2, 2)]

    def test_from_columns(self):
        p = Pattern.from_columns([["a", "b"], ["c", "d"]])
        assert p[(1, 2)] == "b" and p[(2, 1)] == "c"

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            Pattern((("a",), ("a", "b")))

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            Pattern.from_top_rows([["a"]])[(2, 1)]
