"""Smoke test for the scat extension module."""

import scat


def main():
    assert [scat.count([2] * n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    for method in ("recurrence", "determinant", "exhaustive"):
        assert scat.count([3, 4, 3], method) == 15

    tree = scat.Tree.parse("[3,4,0,0,4,0,0,0,0,0,0,2,5,0,0,0,0,0,0]")
    assert tree.signature() == [3, 4, 4, 2, 5]
    assert tree.to_stirling() == "2233321155554"
    assert tree.to_partition() == [[1, 2, 6, 7, 8], [3, 4, 5], [9, 10, 11, 12, 13]]
    assert tree.to_parenthesization() == "(**(****)*)*((*****)*)"
    path = tree.to_path()
    assert path.mu == [0, 2, 6, 0, 5]
    assert path.area_vector() == [0, 2, 3, 0, 1]
    assert path.to_tree() == tree
    assert scat.stirling_to_tree("2233321155554") == tree
    assert scat.parenthesization_to_tree("(**(****)*)*((*****)*)") == tree

    trees = scat.trees([2, 3, 2])
    assert len(trees) == len(set(trees)) == scat.count([2, 3, 2])
    assert [t.to_path() for t in trees] == scat.paths([2, 3, 2])

    assert scat.rational_signature(5, 13) == [3, 4, 3, 4, 3]
    assert scat.narayana([2, 2, 2], "peaks") == [(1, 1), (2, 3), (3, 1)]
    assert scat.count_parking([1, 1, 1]) == 16
    assert scat.s_factorial([2, 2, 2]) == 15
    double_factorial = 1
    for k in range(1, 31):
        double_factorial *= 2 * k - 1
    assert scat.s_factorial([2] * 30) == double_factorial

    arw, ours, equal = scat.arw_compare(5, 13, [0, 2, 4, 4, 2])
    assert arw == [[1, 2, 5, 6, 9, 10], [3, 4], [7, 8], [11, 12]]
    assert ours == [[1, 2, 5, 6, 10], [3, 4], [7, 8, 9], [11, 12]]
    assert not equal

    for bad in (lambda: scat.Tree([1]), lambda: scat.rational_signature(4, 6), lambda: scat.DyckPath([2, 2], [2, 0])):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
