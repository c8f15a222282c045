"""Garden relations: exact products, residuals, violation reporting."""

import numpy as np
import pytest

from adinkra import (
    Violation,
    color_pairs,
    diamond,
    format_matrix,
    garden_check,
    hypercube,
    multiply,
    product_tables,
    rhombic_dodecahedron,
    rhombic_icosahedron,
    to_matrices,
    transpose,
)
from adinkra.garden import as_exact


def test_color_pairs_order():
    assert color_pairs(3) == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    assert len(color_pairs(5)) == 15


def test_as_exact_accepts_exact_floats_only():
    assert as_exact(np.array([[2.0, 0.0]])).dtype == np.int64
    with pytest.raises(ValueError, match="exact integers"):
        as_exact(np.array([[0.5]]))
    with pytest.raises(ValueError, match="2-d"):
        as_exact(np.array([1, 2]))


def test_transpose_and_multiply():
    a = [[1, 0, -1], [0, 1, 0]]
    assert transpose(a).tolist() == [[1, 0], [0, 1], [-1, 0]]
    assert multiply(a, transpose(a)).tolist() == [[2, 0], [0, 1]]
    with pytest.raises(ValueError, match="inner dimensions"):
        multiply(a, a)


def test_garden_check_passes_hypercubes():
    for n in range(1, 5):
        rep = garden_check(to_matrices(hypercube(n)))
        assert rep.ok and rep.left_ok and rep.right_ok
        assert rep.violations == ()


def test_garden_check_flags_undashed_diamond():
    g = diamond().with_signs([1, 1, 1, 1])
    rep = garden_check(to_matrices(g))
    assert not rep.ok and not rep.left_ok and not rep.right_ok
    assert Violation("left", 1, 2, 1, 2, 2) in rep.violations
    assert Violation("left", 1, 2, 2, 1, 2) in rep.violations
    # Left family violations come first, ordered by (I, J, row, col).
    sides = [v.side for v in rep.violations]
    assert sides == sorted(sides, key=("left", "right").index)


def test_garden_check_residual_matrices():
    rep = garden_check(to_matrices(diamond()))
    assert rep.left_residuals[(1, 1)].shape == (2, 2)
    assert not rep.left_residuals[(1, 1)].any()
    assert sorted(rep.left_residuals) == color_pairs(2)


def test_rd_split_verdict():
    rep = garden_check(to_matrices(rhombic_dodecahedron()))
    assert rep.left_ok and not rep.right_ok and not rep.ok
    assert all(v.side == "right" for v in rep.violations)
    # Non-square case: left residuals are 6x6, right are 8x8.
    assert rep.left_residuals[(1, 1)].shape == (6, 6)
    assert rep.right_residuals[(1, 1)].shape == (8, 8)


def test_ri_fails_both_sides():
    rep = garden_check(to_matrices(rhombic_icosahedron()))
    assert not rep.left_ok and not rep.right_ok


def test_product_tables_labels_and_diagonal():
    mats = to_matrices(rhombic_dodecahedron())
    left, right = product_tables(mats)
    assert [lab for lab, _ in left[:3]] == [
        "L1*R1",
        "L1*R2 + L2*R1",
        "L1*R3 + L3*R1",
    ]
    assert right[0][0] == "R1*L1"
    assert len(left) == len(right) == 10
    # Diagonal products are printed single, so the left diagonal is I_6.
    assert left[0][1].tolist() == np.eye(6, dtype=int).tolist()


def test_garden_check_shape_errors():
    with pytest.raises(ValueError, match="at least one"):
        garden_check([])
    with pytest.raises(ValueError, match="shape"):
        garden_check([[[1, 0]], [[1], [0]]])


def test_format_matrix_aligns_columns():
    text = format_matrix([[1, -1], [0, 10]])
    assert text.splitlines() == [" 1 -1", " 0 10"]
    assert format_matrix([[1]], indent="  ") == "  1"


def test_report_json_shape():
    obj = garden_check(to_matrices(diamond())).to_json_obj()
    assert obj["ok"] and obj["violations"] == []
    assert obj["d"] == obj["d_hat"] == 2


def test_diagonal_left_right_equivalence_for_signed_permutations():
    # For square signed partial permutation matrices the diagonal left
    # residual vanishes iff the diagonal right residual does.
    rng = np.random.default_rng(17)
    for _ in range(200):
        d = int(rng.integers(1, 6))
        m = np.zeros((d, d), dtype=np.int64)
        cols = rng.permutation(d)
        keep = rng.random(d) < 0.8
        for r in range(d):
            if keep[r]:
                m[r, cols[r]] = rng.choice((-1, 1))
        rep = garden_check([m])
        left = rep.left_residuals[(1, 1)]
        right = rep.right_residuals[(1, 1)]
        assert (not left.any()) == (not right.any())
        assert rep.ok == (not left.any())
