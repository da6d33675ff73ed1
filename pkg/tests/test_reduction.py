import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ss_corpus
from tilepats.assembler import assemble, column_glue_trace, verify_solves
from tilepats.reduction import (
    CIRCUIT_COLORS,
    T26,
    SubsetSumInstance,
    build_circuit_pattern,
    build_seed,
    circuit_height,
    circuit_layout,
    circuit_width,
    decode_trace,
    connector_value,
    display_height,
    element_columns,
    evaluate_choice,
    format_choices,
    parse_choices,
    running_totals,
    search_seed,
    seed_template,
    simulate_choice,
    solve_ss_by_assembly,
    splice,
    subset_sum_dp,
    verify_choice,
)
from tilepats.tiles import Pattern, check_uniqueness, lookup_tile

instances = st.builds(
    SubsetSumInstance,
    st.lists(st.integers(1, 15), min_size=1, max_size=3).map(tuple),
    st.integers(1, 40),
)


def subset_sum_brute(inst):
    """Direct enumeration, independent of the DP."""
    return any(
        sum(c) == inst.target
        for k in range(1, len(inst.elements) + 1)
        for c in itertools.combinations(inst.elements, k)
    )


def all_choices(n):
    return list(itertools.product((True, False), repeat=n))


class TestHeight:
    def test_default_floor(self, sample):
        assert circuit_height(sample) == 21

    def test_small_floor(self, sample):
        # 75 + 112 = 187 needs 8 bits
        assert circuit_height(sample, 7) == 8

    def test_single(self):
        assert circuit_height(SubsetSumInstance((1,), 1)) == 21

    def test_display_height_for_drawing(self, sample):
        assert display_height(sample, 7) == 7
        assert display_height(SubsetSumInstance((300,), 2), 3) == 9

    @given(instances, st.integers(1, 12))
    def test_headroom(self, inst, floor):
        h = circuit_height(inst, floor)
        # n + sum(S) <= 2**h keeps |n - any subset sum| below 2**h
        assert inst.target + sum(inst.elements) <= 2**h
        assert inst.target < 2**h and sum(inst.elements) < 2**h
        assert h >= floor


class TestPattern:
    def test_sample_geometry(self, sample):
        p = build_circuit_pattern(sample, 7)
        assert (p.width, p.height) == (34, 7)
        assert circuit_layout(sample, 7).starts == (2, 10, 18, 26)
        assert set(p.colors()) == set(CIRCUIT_COLORS)

    def test_single_bit_instance(self):
        p = build_circuit_pattern(SubsetSumInstance((1,), 1), 1)
        assert p.rows == (("White", "RAW", "UAB", "Black"),)

    def test_target_column_and_final(self, sample):
        p = build_circuit_pattern(sample, 7)
        # 75 = 1001011b, row 1 is the LSB
        assert p.column(1) == ("White", "White", "Black", "White", "Black", "Black", "White")
        assert set(p.column(34)) == {"Black"}

    def test_staircase(self):
        # element 5 = 101b at h=3
        cols = element_columns(5, 3)
        assert cols == [
            ["RAW", "CarryBlue", "CarryBlue"],
            ["UAB", "RAB", "CarryBlue"],
            ["el-White", "UAW", "RAW"],
            ["el-Black", "el-Black", "UAB"],
        ]

    def test_too_small(self):
        with pytest.raises(ValueError, match="element 2"):
            build_circuit_pattern(SubsetSumInstance((1, 9), 1), 3)
        with pytest.raises(ValueError, match="target"):
            build_circuit_pattern(SubsetSumInstance((1,), 9), 3)

    @given(instances, st.integers(0, 3))
    def test_layout_total_and_colors(self, inst, extra):
        h = display_height(inst, 1) + extra
        layout = circuit_layout(inst, h)
        assert layout.width == circuit_width(len(inst.elements), h)
        assert len(layout.roles) == layout.width * h
        p = build_circuit_pattern(inst, h)
        assert set(p.colors()) <= set(CIRCUIT_COLORS)

    @given(instances)
    def test_color_budget(self, inst):
        h = circuit_height(inst, 3)
        colors = set(build_circuit_pattern(inst, h).colors())
        rich = any(v >= 4 for v in inst.elements) and any(
            v < 2 ** (h - 1) and any(not (v >> r) & 1 for r in range(h - 1)) for v in inst.elements
        )
        if rich:
            assert len(colors) == 9

    def test_corpus_uses_nine_colors(self):
        for inst in ss_corpus(40, seed=5):
            assert len(set(build_circuit_pattern(inst, circuit_height(inst)).colors())) == 9


class TestT26:
    def test_counts(self, t26):
        assert len(t26) == 26
        counts = Counter(t.color for t in t26)
        assert sorted(counts.values()) == [1, 1, 2, 2, 4, 4, 4, 4, 4]
        assert set(counts) == set(CIRCUIT_COLORS)
        assert counts["Black"] == counts["White"] == 1
        assert counts["el-Black"] == counts["el-White"] == 2

    def test_unique(self, t26):
        assert check_uniqueness(t26) == []

    def test_glue_scheme_distinct(self, t26):
        glues = t26.glues()
        assert glues == {"#", "0h", "1h", "0vp", "1vp", "0vc", "1vc", "0*", "0x", "1*", "1x"}

    def test_raw_on_lookup(self, t26):
        t = lookup_tile(t26, "1*", "0h")
        assert (t.color, t.east, t.north) == ("RAW", "1*", "1vc")

    def test_black_white(self, t26):
        assert lookup_tile(t26, "#", "1h").color == "White"
        assert lookup_tile(t26, "#", "0h").east == "0h"

    @pytest.mark.parametrize("t", [0, 1])
    @pytest.mark.parametrize("b", [0, 1])
    def test_carry_is_half_subtractor(self, t26, t, b):
        tile = lookup_tile(t26, f"{b}vc", f"{t}h")
        assert tile.color == "CarryBlue"
        diff = t - b
        assert tile.east == f"{diff % 2}h"
        assert tile.north == f"{int(diff < 0)}vc"


class TestSeed:
    def test_sample_signal_columns(self, sample):
        seed = build_seed(sample, 7, "**x*")
        assert [seed.north[x - 1] for x in (2, 10, 18, 26)] == ["1*", "1*", "1x", "1*"]
        assert seed.north[0] == seed.north[-1] == "#"
        assert len(seed.north) == 34 and len(seed.east) == 7

    def test_all_off(self, sample):
        seed = build_seed(sample, 7, "xxxx")
        assert [seed.north[x - 1] for x in (2, 10, 18, 26)] == ["1x"] * 4

    def test_even_element(self):
        seed = build_seed(SubsetSumInstance((2,), 2), 2, "*")
        assert seed.north[1:4] == ("0*", "1vp", "0vp")
        assert seed.east == ("0h", "1h")

    def test_choice_length(self, sample):
        with pytest.raises(ValueError):
            build_seed(sample, 7, "**")

    def test_choice_strings(self):
        assert parse_choices("**x*") == (True, True, False, True)
        assert format_choices((True, False)) == "*x"
        with pytest.raises(ValueError):
            parse_choices("*y")

    def test_rigidity(self, sample):
        starts = set(circuit_layout(sample, 7).starts)
        seeds = [build_seed(sample, 7, c) for c in all_choices(4)]
        for a, b in itertools.combinations(seeds, 2):
            assert a.east == b.east
            diff = {x for x, (g1, g2) in enumerate(zip(a.north, b.north), 1) if g1 != g2}
            assert diff and diff <= starts

    @settings(max_examples=50)
    @given(instances, st.data())
    def test_template_reproduces_build_seed(self, inst, data):
        h = display_height(inst, 1)
        choice = data.draw(st.lists(st.booleans(), min_size=len(inst.elements), max_size=len(inst.elements)))
        template = seed_template(build_circuit_pattern(inst, h))
        assert template.seed(choice) == build_seed(inst, h, choice)


class TestEvaluate:
    def test_examples(self, sample):
        assert evaluate_choice(sample, 7, "**x*") == 0
        assert evaluate_choice(sample, 7, "****") == 91
        assert evaluate_choice(sample, 7, "xxxx") == 75

    @given(instances, st.integers(0, 2))
    def test_all_off_is_target(self, inst, extra):
        h = display_height(inst, 1) + extra
        assert evaluate_choice(inst, h, [False] * len(inst.elements)) == inst.target % 2**h

    def test_running_totals(self, sample):
        out = simulate_choice(sample, 7, "**x*")
        assert running_totals(out, 4, 7) == [75, 64, 39, 39, 0]

    @settings(max_examples=40)
    @given(instances, st.integers(0, 2))
    def test_simulation_matches_analytic(self, inst, extra):
        h = display_height(inst, 1) + extra
        for choice in all_choices(len(inst.elements)):
            out = simulate_choice(inst, h, choice)
            assert out.complete
            totals = running_totals(out, len(inst.elements), h)
            assert totals[-1] == evaluate_choice(inst, h, choice)
            assert bool(verify_choice(inst, h, choice)) == (totals[-1] == 0)

    def test_failure_lands_in_final_column(self, sample):
        v = verify_choice(sample, 7, "****")
        assert not v and v.cell[0] == 34


class TestOracles:
    def test_dp_examples(self, sample):
        assert subset_sum_dp(sample)
        assert not subset_sum_dp(SubsetSumInstance((2,), 1))
        assert subset_sum_dp(SubsetSumInstance((1, 2, 4), 7))

    def test_dp_guard(self):
        with pytest.raises(ValueError):
            subset_sum_dp(SubsetSumInstance((1, 2), 10**6), max_cells=1000)

    @given(instances)
    def test_dp_matches_enumeration(self, inst):
        assert subset_sum_dp(inst) == subset_sum_brute(inst)


class TestSolve:
    def test(self, sample):
        assert solve_ss_by_assembly(sample, 7) == (True, True, False, True)

    def test_sample_unique_witness(self, sample):
        accepting = [c for c in all_choices(4) if verify_choice(sample, 7, c)]
        assert accepting == [(True, True, False, True)]

    def test_unsolvable(self):
        assert solve_ss_by_assembly(SubsetSumInstance((2,), 1), 21) is None

    def test_pair(self):
        assert solve_ss_by_assembly(SubsetSumInstance((3, 5), 8), 21) == (True, True)

    def test_guard(self):
        with pytest.raises(ValueError):
            solve_ss_by_assembly(SubsetSumInstance(tuple(range(1, 26)), 5))

    @settings(max_examples=30, deadline=None)
    @given(instances)
    def test_agrees_with_dp(self, inst):
        witness = solve_ss_by_assembly(inst)
        assert (witness is not None) == subset_sum_dp(inst)
        if witness is not None:
            assert sum(v for v, on in zip(inst.elements, witness) if on) == inst.target

    def test_wraparound_possible_without_headroom(self):
        # at display height 2, subtracting 3 from 2 wraps to 3, then 3 - 3 = 0
        inst = SubsetSumInstance((3, 3), 2)
        assert verify_choice(inst, 2, (True, True))
        assert not subset_sum_dp(inst)
        assert solve_ss_by_assembly(inst) is None

    @settings(max_examples=40, deadline=None)
    @given(instances)
    def test_anti_wraparound(self, inst):
        h = circuit_height(inst, 1)
        for choice in all_choices(len(inst.elements)):
            if evaluate_choice(inst, h, choice) == 0:
                assert sum(v for v, on in zip(inst.elements, choice) if on) == inst.target


class TestSplice:
    def test_connector_values(self):
        assert connector_value(5, 3, 3) == 2
        assert connector_value(4, 4, 3) == 0
        assert connector_value(3, 5, 3) == 6

    def test_connector_columns(self):
        a = Pattern.from_columns([["Black"] * 3])
        b = Pattern.from_columns([["White"] * 3])
        p = splice(a, 5, b, 3, 3)
        assert p.width == 1 + 4 + 1
        assert p.columns()[1:5] == [tuple(c) for c in element_columns(2, 3)]

    def test_zero_connector(self):
        a = Pattern.from_columns([["Black"] * 3])
        p = splice(a, 6, a, 6, 3)
        assert p.columns()[1:5] == [tuple(c) for c in element_columns(0, 3)]
        assert "RAW" not in p.colors() and "UAW" not in p.colors()

    def test_height_mismatch(self):
        a = Pattern.from_columns([["Black"] * 3])
        b = Pattern.from_columns([["Black"] * 2])
        with pytest.raises(ValueError):
            splice(a, 0, b, 0, 3)
        with pytest.raises(ValueError):
            splice(a, 8, a, 0, 3)

    def test_two_circuits_assemble(self, sample):
        h = 8
        b = SubsetSumInstance((3, 6, 5), 8)
        pa, pb = build_circuit_pattern(sample, h), build_circuit_pattern(b, h)
        composite = splice(pa, 0, pb, b.target, h)
        assert composite.width == pa.width + h + 1 + pb.width
        found = search_seed(composite)
        assert found is not None
        choice, seed = found
        # A's witness, the connector ON, B's witness
        assert choice == (True, True, False, True, True, True, False, True)
        assert verify_solves(T26, seed, composite)
        out = assemble(T26, seed, composite.width, h)
        assert out.complete and out.assembly.color_pattern() == composite

    def test_unsolvable_half_blocks_composite(self, sample):
        h = 8
        b = SubsetSumInstance((2, 4), 5)
        composite = splice(build_circuit_pattern(sample, h), 0, build_circuit_pattern(b, h), b.target, h)
        assert search_seed(composite) is None

    def test_boundary_reads_connector_output(self, sample):
        h = 8
        b = SubsetSumInstance((3,), 3)
        pa = build_circuit_pattern(sample, h)
        composite = splice(pa, 0, build_circuit_pattern(b, h), 3, h)
        _, seed = search_seed(composite)
        asm = assemble(T26, seed, composite.width, h).assembly
        assert decode_trace(column_glue_trace(asm, pa.width).glues) == 0
        assert decode_trace(column_glue_trace(asm, pa.width + h + 1).glues) == 3
