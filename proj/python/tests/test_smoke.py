import numpy as np
import pytest

import u3groups


def test_delta27_report():
    r = u3groups.report(["R(3,1,1,2)", "R(3,1,2,1)"], tables=u3groups.default_tables_path())
    assert r["order"] == 27
    assert r["center_order"] == 3
    assert r["num_classes"] == 11
    assert sum(r["class_sizes"]) == r["order"]
    assert r["matched_expected_label"] == "[27,4]"


def test_cyclic_e():
    g = u3groups.build_group(["E"])
    assert g.order == 3
    assert g.is_abelian
    e = u3groups.generator_matrix("E")
    assert np.allclose(np.linalg.matrix_power(e, 3), np.eye(3))


def test_phase_times_e():
    assert u3groups.build_group(["PHASE(1,7)*E"]).order == 21


def test_series_members():
    s4 = u3groups.build_series("S4M", [3])
    assert (s4.order, s4.center_order) == (96, 4)
    t7 = u3groups.build_series("TnM", [7, 1])
    assert (t7.order, t7.center_order) == (21, 1)


def test_character_table_orthogonality():
    g = u3groups.build_group(["R(3,1,1,2)", "R(3,1,2,1)"])
    t = u3groups.character_table(g)
    assert t["complete"]
    assert t["sum_of_squares"] == 27
    sizes = [c["size"] for c in t["classes"]]
    rows = [[complex(*v) for v in ch["values"]] for ch in t["characters"]]
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            ip = sum(s * x.conjugate() * y for s, x, y in zip(sizes, a, b)) / 27
            assert abs(ip - (1 if i == j else 0)) < 1e-9


def test_tensor_def_conj():
    g = u3groups.build_group(["R(3,1,1,2)", "R(3,1,2,1)"])
    m = u3groups.tensor_multiplicities(g, "def", "conj")
    assert sum(m) == 9 and max(m) == 1


def test_errors():
    with pytest.raises(u3groups.ParseError):
        u3groups.build_group(["F(2,0"])
    with pytest.raises(u3groups.GroupNotClosed):
        u3groups.build_group(["F(2,0,1)", "H"], max_order=2)


def test_theorem_predicates():
    assert u3groups.theorem_product_predict(3, 2)
    assert not u3groups.theorem_product_predict(3, 3)
    assert u3groups.theorem_series_predicate(1, 2, 8)
    assert not u3groups.theorem_series_predicate(1, 2, 3)
    assert u3groups.solve_tn(7) == [2, 4]


def test_generator_unitarity():
    for expr in ["E", "H", "J", "K", "L", "M", "N", "P", "Q", "F(7,1,2)", "R(3,1,1,2)"]:
        a = u3groups.generator_matrix(expr)
        assert np.allclose(a @ a.conj().T, np.eye(3))
