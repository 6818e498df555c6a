"""Exhaustive verifier: exact entropies, leakage, and fiber decodability."""

import random
from fractions import Fraction

import pytest

from secnetcomp import fixtures
from secnetcomp.codes import code_from_columns, security_matrix, check_decodability
from secnetcomp.errors import TooLarge
from secnetcomp.gf import FieldMatrix
from secnetcomp.netmodel import Network, enumerate_wiretap_sets
from secnetcomp.oracle import (
    entropy,
    joint,
    mutual_information,
    sel_edges,
    sel_linear,
    sel_messages,
    sel_security,
    verify_decodability_exact,
    verify_security_exact,
)


def tiny_code(q=5, cols=None, z=(1,)):
    net = Network(["s1", "g"], [("e1", "s1", "g")], ["s1"], "g")
    return code_from_columns(net, q, 1, 1, z, {"e1": cols or (1, 0)})


def test_single_uniform_symbol_has_unit_entropy():
    code = tiny_code(cols=(1, 0))
    h = entropy(code, sel_edges(code, {"e1"}))
    assert h == 1
    assert isinstance(h, Fraction)


def test_entropy_of_projected_messages():
    # H(M (P kron I_l)) = l * rank(P) for uniform sources
    net = fixtures.sum_example_network()
    code = fixtures.sum_example_secure_code()
    p = FieldMatrix(5, [[1, 0], [0, 1], [0, 0], [0, 0]])
    h = entropy(code, sel_linear(code, p))
    assert h == 2 * code.l


def test_joint_entropy_adds_for_independent_parts():
    code = tiny_code(cols=(1, 0))
    m = sel_messages(code)
    # key symbol is the second packed coordinate
    k = sel_edges(code, set())  # empty
    h_m = entropy(code, m)
    key_sel = sel_linear(code, FieldMatrix(5, [[0]]))
    # use an explicit pair: message and an independent key-only view
    from secnetcomp.oracle import Selection

    key_matrix = FieldMatrix(5, [[0], [1]])
    key_view = Selection(key_matrix, "K")
    h_k = entropy(code, key_view)
    h_joint = entropy(code, joint(m, key_view))
    assert h_joint == h_m + h_k == 2


def test_mutual_information_self():
    code = tiny_code(cols=(1, 1))
    sel = sel_edges(code, {"e1"})
    assert mutual_information(code, sel, sel) == entropy(code, sel)


def test_one_time_pad_leaks_nothing():
    for q in (2, 3, 5):
        code = tiny_code(q=q, cols=(1, 1))  # edge carries m + k
        leak = mutual_information(code, sel_edges(code, {"e1"}), sel_messages(code))
        assert leak == 0


def test_secure_sum_example_all_single_wiretaps_leak_nothing():
    code = fixtures.sum_example_secure_code()
    _, g = fixtures.sum_example_functions()
    secure, leaks = verify_security_exact(code, g, r=1)
    assert secure
    assert len(leaks) == 13
    assert all(v == 0 for v in leaks.values())


def test_leaky_edge_has_positive_mutual_information():
    net = fixtures.leak_demo_network()
    f, g = fixtures.leak_demo_functions()
    cols = {
        "e1": (1, 0, 0),
        "e2": (0, 1, 0),
        "e3": (0, 0, 1),
        "e4": (0, 0, 1),
        "e5": (1, 0, 1),
        "e6": (0, 1, 0),
    }
    code = code_from_columns(net, 3, 1, 1, (0, 0, 0), cols)
    secure, leaks = verify_security_exact(code, g, r=1)
    assert not secure
    assert leaks[frozenset({"e5"})] > 0
    assert leaks[frozenset({"e1"})] == 0


def test_empty_wiretap_vacuously_secure():
    code = fixtures.sum_example_secure_code()
    _, g = fixtures.sum_example_functions()
    secure, leaks = verify_security_exact(code, g, r=0)
    assert secure and list(leaks) == [frozenset()]


def test_decodability_exact_identity_forwarding():
    code = tiny_code(cols=(1, 0), z=(1,))
    assert verify_decodability_exact(code, FieldMatrix(5, [[1]]))


def test_decodability_exact_sum_example():
    code = fixtures.sum_example_secure_code()
    f, _ = fixtures.sum_example_functions()
    assert verify_decodability_exact(code, f)


def test_decodability_exact_detects_fiber_collision():
    net = Network(
        ["s1", "s2", "g"],
        [("e1", "s1", "g"), ("e2", "s2", "g")],
        ["s1", "s2"],
        "g",
    )
    code = code_from_columns(net, 5, 1, 1, (0, 0), {"e1": (1, 0), "e2": (0, 0)})
    f = FieldMatrix(5, [[1], [1]])
    assert not verify_decodability_exact(code, f)


def test_state_cap_enforced():
    code = fixtures.sum_example_secure_code()  # 5**8 states
    with pytest.raises(TooLarge):
        entropy(code, sel_messages(code), cap=5 ** 6)


def test_mi_symmetry_and_nonnegativity():
    rng = random.Random(59)
    net = Network(
        ["s1", "s2", "g"],
        [("e1", "s1", "g"), ("e2", "s2", "g")],
        ["s1", "s2"],
        "g",
    )
    for _ in range(10):
        q = rng.choice([2, 3])
        z = (rng.randrange(2), rng.randrange(2))
        width = 2 + sum(z)
        cols = {
            e: tuple(rng.randrange(q) for _ in range(width)) for e in ("e1", "e2")
        }
        code = code_from_columns(net, q, 1, 1, z, cols)
        a = sel_edges(code, {"e1"})
        b = sel_edges(code, {"e2"})
        mi_ab = mutual_information(code, a, b)
        mi_ba = mutual_information(code, b, a)
        assert mi_ab == mi_ba
        assert mi_ab >= 0


def test_algebraic_and_exact_criteria_agree_on_random_codes():
    # scaled-down agreement check; the acceptance suite runs the full corpus
    rng = random.Random(61)
    net = Network(
        ["s1", "s2", "u", "g"],
        [("e1", "s1", "u"), ("e2", "s2", "u"), ("e3", "u", "g")],
        ["s1", "s2"],
        "g",
    )
    from secnetcomp.codes import check_security_subspace

    for _ in range(20):
        q = rng.choice([2, 3])
        z = (1, 1)
        width = 2 + sum(z)
        cols = {e: tuple(rng.randrange(q) for _ in range(width)) for e in net.edge_ids}
        code = code_from_columns(net, q, 1, 1, z, cols)
        g = FieldMatrix(q, [[1], [1]])
        s = security_matrix(g, 1, z)
        sets = enumerate_wiretap_sets(net, 1)
        algebraic, _, _ = check_security_subspace(code, s, sets)
        exact, _ = verify_security_exact(code, g, wiretaps=sets)
        assert algebraic == exact
        f = FieldMatrix(q, [[1], [rng.randrange(q)]])
        alg_dec, _ = check_decodability(code, f)
        assert alg_dec == verify_decodability_exact(code, f)
