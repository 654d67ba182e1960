import pytest
from hypothesis import given, settings, strategies as st

from qschur_hh.blockcomb import (AbacusConfig, BlockLabel, abacus_from_partition, block_label, blocks_of,
                                 blocks_to_csv, blocks_to_json, core_from_runner_counts, core_weight_oracle,
                                 e_core, e_core_and_weight, is_e_core, is_rouquier_core, rim_hooks,
                                 rouquier_bead_bound, rouquier_core_example, rouquier_witness)
from qschur_hh.symwreath import Partition, partitions

EMPTY = Partition(())


def test_abacus_examples():
    ab = abacus_from_partition((), 3, 3)
    assert ab.beta_numbers == (2, 1, 0) and ab.runner_counts == (1, 1, 1)
    ab = abacus_from_partition((1,), 2, 2)
    assert ab.beta_numbers == (2, 0) and ab.runner_counts == (2, 0)
    with pytest.raises(ValueError):
        abacus_from_partition((2, 1), 2, 1)
    with pytest.raises(ValueError):
        AbacusConfig(2, (1, 1))


def test_abacus_round_trip_display():
    ab = abacus_from_partition((3, 1), 3, 4)
    assert ab.partition() == Partition((3, 1))
    assert ab.display().count("o") == 4


def test_core_examples():
    for e in range(2, 6):
        assert e_core_and_weight((), e) == (EMPTY, 0)
        assert e_core_and_weight((e,), e) == (EMPTY, 1)
        assert e_core_and_weight((1,), e) == (Partition((1,)), 0)


def test_rim_hooks_of_row():
    assert rim_hooks((3,), 3) == [EMPTY]
    assert rim_hooks((2, 1), 2) == []
    assert sorted(rim_hooks((2, 2), 2)) == [Partition((1, 1)), Partition((2,))]
    assert rim_hooks((2, 1), 3) == [EMPTY]


def test_core_against_removal_oracle():
    for n in range(13):
        for p in partitions(n):
            for e in range(2, 6):
                core, w = e_core_and_weight(p, e)
                assert core_weight_oracle(p, e) == {(core, w)}
                assert n == core.size + e * w


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 9), max_size=7), st.integers(2, 5), st.integers(0, 12))
def test_bead_count_independence(parts, e, extra):
    p = Partition.of(parts)
    core, w = e_core_and_weight(p, e)
    ab = abacus_from_partition(p, e, len(p) + extra)
    pushed = ab.push_up()
    assert pushed.partition() == core
    assert (sum(ab.beta_numbers) - sum(pushed.beta_numbers)) // e == w
    assert e_core(core, e) == core
    assert is_e_core(core, e)


def test_rouquier_examples():
    assert is_rouquier_core((), 3, 1)
    assert not is_rouquier_core((), 3, 2)
    for e in (2, 3, 4):
        for w in (1, 2, 3):
            core = rouquier_core_example(e, w)
            assert is_e_core(core, e)
            assert is_rouquier_core(core, e, w)
    with pytest.raises(ValueError):
        is_rouquier_core((2,), 2, 1)


def test_rouquier_bound_is_stable():
    # widening the bead search far beyond the bound never finds a new witness
    for n in range(9):
        for p in partitions(n):
            for e in (2, 3):
                if not is_e_core(p, e):
                    continue
                for w in (1, 2, 3):
                    inside = rouquier_witness(p, e, w) is not None
                    wide = rouquier_witness(p, e, w, bound=3 * rouquier_bead_bound(p, e, w) + 10) is not None
                    assert inside == wide


def test_core_from_runner_counts():
    assert core_from_runner_counts([1, 1, 1]) == EMPTY
    assert core_from_runner_counts([0, 1]) == Partition((1,))


def test_block_labels_and_grouping():
    assert block_label((3,), 3) == BlockLabel(1, EMPTY)
    assert block_label((), 3) == BlockLabel(0, EMPTY)
    blocks = blocks_of(6, 3)
    assert sum(len(v) for v in blocks.values()) == len(partitions(6))
    for lab, ps in blocks.items():
        assert all(block_label(p, 3) == lab for p in ps)
        assert all(p.size == lab.core.size + 3 * lab.weight for p in ps)
    doc = blocks_to_json(blocks)
    assert doc[0]["core"] == [] and doc[0]["weight"] == 2
    assert blocks_to_csv(blocks).splitlines()[0] == "weight,core,partition"
