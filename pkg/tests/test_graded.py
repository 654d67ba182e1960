from qschur_hh.graded import GradedDims


def test_trailing_zeros_and_equality():
    assert GradedDims([1, 2, 0, 0]) == [1, 2]
    assert GradedDims({0: 1, 3: 2}).as_list() == [1, 0, 0, 2]
    assert GradedDims([]).total() == 0


def test_sum_and_product():
    a = GradedDims([1, 1])
    assert a + GradedDims([0, 0, 1]) == [1, 1, 1]
    assert a * a == [1, 2, 1]


def test_regrade_and_even_part():
    assert GradedDims([1, 1, 1]).regrade(2) == [1, 0, 1, 0, 1]
    assert GradedDims([3, 1, 1, 1, 1]).even_part() == {0: 3, 2: 1, 4: 1}
    assert GradedDims([1, 2, 3]).to_json("y-degree") == {"degree_convention": "y-degree", "dims": [1, 2, 3]}
