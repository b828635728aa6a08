import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitary_digraphs import (
    Digraph,
    apply_permutations,
    complement,
    degrees,
    digraph_of,
    generate,
    in_neighborhood,
    is_degree_balanced,
    is_permutation_equivalent,
    is_strongly_connected,
    line_digraph,
    out_neighborhood,
    pattern_of,
    support_of,
    well_formed,
)
from unitary_digraphs.digraph import invert_permutation, permutation_matrix, permute_pattern
from unitary_digraphs.errors import PreconditionError, SearchLimitExceeded
from unitary_digraphs.synthesis import fourier_matrix

from conftest import LOOP_PAIR_LINE, TRIANGLE
from oracles import all_multidigraphs, brute_perm_equivalent, line_digraph_arcs


@st.composite
def digraphs(draw, max_n=6, max_arcs=12):
    n = draw(st.integers(1, max_n))
    arcs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                         max_size=max_arcs))
    return Digraph(n, tuple(arcs))


def perms(n):
    return st.permutations(list(range(n)))


class TestDigraphType:
    def test_rejects_out_of_range_arc(self):
        with pytest.raises(PreconditionError):
            Digraph(2, ((0, 2),))

    def test_rejects_empty_vertex_set(self):
        with pytest.raises(PreconditionError):
            Digraph(0)

    def test_arcs_are_tuples(self):
        D = Digraph(2, [[0, 1], [1, 0]])
        assert D.arcs == ((0, 1), (1, 0))
        assert hash(D) == hash(Digraph(2, ((0, 1), (1, 0))))


class TestNeighborhoods:
    def test_triangle_out(self):
        assert out_neighborhood(digraph_of(TRIANGLE), 0) == {1, 2}

    def test_loop(self):
        assert out_neighborhood(Digraph(1, ((0, 0),)), 0) == {0}

    def test_bidirected_c4(self):
        assert out_neighborhood(generate("cycle", 4), 0) == {1, 3}

    def test_triangle_in(self):
        assert in_neighborhood(digraph_of(TRIANGLE), 0) == {1, 2}

    def test_directed_cycle_in(self):
        assert in_neighborhood(generate("directed_cycle", 3), 0) == {2}

    def test_loop_pair_in(self, loop_pair):
        assert in_neighborhood(loop_pair, 0) == {0, 1}

    def test_parallel_arcs_collapse(self):
        assert out_neighborhood(Digraph(2, ((0, 1), (0, 1))), 0) == {1}

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            out_neighborhood(Digraph(2), 2)
        with pytest.raises(PreconditionError):
            degrees(Digraph(2), -1)


class TestDegrees:
    def test_loop_pair(self, loop_pair):
        assert degrees(loop_pair, 0) == (2, 2)

    @pytest.mark.parametrize("n", [2, 3, 7])
    def test_directed_cycle(self, n):
        D = generate("directed_cycle", n)
        assert all(degrees(D, v) == (1, 1) for v in range(n))

    def test_multiplicity(self):
        D = Digraph(2, ((0, 1), (0, 1), (1, 0), (1, 0)))
        assert degrees(D, 0) == (2, 2)

    def test_balanced(self, loop_pair):
        assert is_degree_balanced(loop_pair)
        assert is_degree_balanced(generate("n_path", 3))
        assert not is_degree_balanced(Digraph(2, ((0, 1), (1, 1))))


class TestConnectivity:
    def test_examples(self):
        assert is_strongly_connected(generate("directed_cycle", 3))
        assert not is_strongly_connected(Digraph(4, ((0, 1), (1, 0), (2, 3), (3, 2))))
        for n in range(2, 9):
            assert is_strongly_connected(generate("n_path", n))

    @settings(max_examples=200, deadline=None)
    @given(digraphs(max_n=7, max_arcs=14))
    def test_matches_networkx(self, D):
        G = nx.MultiDiGraph()
        G.add_nodes_from(range(D.n))
        G.add_edges_from(D.arcs)
        assert is_strongly_connected(D) == nx.is_strongly_connected(G)

    def test_long_path_no_recursion_limit(self):
        assert is_strongly_connected(generate("directed_cycle", 5000))


class TestWellFormed:
    def test_two_cycle(self):
        assert well_formed(generate("directed_cycle", 2)) == (True, [])

    def test_single_arc(self):
        assert well_formed(Digraph(2, ((0, 1),))) == (False, [0, 1])

    def test_isolated_loop(self):
        assert well_formed(Digraph(1, ((0, 0),))) == (True, [])


class TestLineDigraph:
    def test_loop_pair(self, loop_pair):
        L, labels = line_digraph(loop_pair)
        assert L.n == 3
        assert set(L.arcs) == {(0, 0), (0, 1), (1, 2), (2, 0), (2, 1)}
        assert [(lab.tail, lab.head, lab.arc_id) for lab in labels] == [
            (0, 0, 0), (0, 1, 1), (1, 0, 2)]
        ok, _ = is_permutation_equivalent(pattern_of(L), LOOP_PAIR_LINE)
        assert ok

    def test_directed_cycle_is_fixed(self):
        D = generate("directed_cycle", 3)
        L, _ = line_digraph(D)
        ok, (P, Q) = is_permutation_equivalent(pattern_of(L), pattern_of(D))
        assert ok

    def test_complete_with_loops(self):
        L, _ = line_digraph(generate("complete", 2))
        assert L.n == 4
        assert all(degrees(L, v)[1] == 2 for v in range(4))

    def test_parallel_arcs_become_vertices(self):
        D = Digraph(2, ((0, 1), (0, 1), (1, 0)))
        L, _ = line_digraph(D)
        assert L.n == 3 and L.is_simple()

    def test_empty(self):
        with pytest.raises(PreconditionError):
            line_digraph(Digraph(3))

    def test_exhaustive_against_definition(self):
        for n in (1, 2, 3):
            for arcs in all_multidigraphs(n, 4 if n == 3 else 5):
                D = Digraph(n, arcs)
                L, labels = line_digraph(D)
                assert set(L.arcs) == line_digraph_arcs(arcs)
                assert L.m == len(line_digraph_arcs(arcs))

    @settings(max_examples=300, deadline=None)
    @given(digraphs(max_n=6, max_arcs=12))
    def test_neighborhoods_of_arcs(self, D):
        if D.m == 0:
            return
        L, labels = line_digraph(D)
        for k, lab in enumerate(labels):
            out_arcs = {b for b in range(D.m) if D.arcs[b][0] == lab.head}
            in_arcs = {a for a in range(D.m) if D.arcs[a][1] == lab.tail}
            assert out_neighborhood(L, k) == out_arcs
            assert in_neighborhood(L, k) == in_arcs
            assert len(out_arcs) == degrees(D, lab.head)[1]
            assert len(in_arcs) == degrees(D, lab.tail)[0]
        assert L.n == D.m
        assert L.m == sum(degrees(D, v)[0] * degrees(D, v)[1] for v in range(D.n))


class TestPatterns:
    def test_collapse(self):
        D = Digraph(2, ((0, 1), (0, 1), (1, 0)))
        assert pattern_of(D).tolist() == [[0, 1], [1, 0]]

    def test_triangle(self):
        assert pattern_of(digraph_of(TRIANGLE)).tolist() == TRIANGLE.tolist()

    def test_loop_pair(self, loop_pair):
        assert pattern_of(loop_pair).tolist() == [[1, 1], [1, 0]]

    def test_digraph_of(self):
        assert digraph_of(np.eye(2, dtype=int)).arcs == ((0, 0), (1, 1))
        assert digraph_of([[1, 1], [1, 0]]).arcs == ((0, 0), (0, 1), (1, 0))
        assert digraph_of(np.ones((3, 3), dtype=int)).m == 9

    @settings(max_examples=100, deadline=None)
    @given(digraphs())
    def test_round_trip(self, D):
        assert np.array_equal(pattern_of(digraph_of(pattern_of(D))), pattern_of(D))

    def test_pattern_is_read_only(self):
        P = pattern_of(generate("cycle", 4))
        with pytest.raises(ValueError):
            P[0, 0] = 1

    def test_support(self):
        assert support_of(fourier_matrix(2)).tolist() == [[1, 1], [1, 1]]
        assert support_of(np.eye(3)).tolist() == np.eye(3, dtype=int).tolist()
        F = fourier_matrix(2)
        B = np.zeros((4, 4), dtype=complex)
        B[:2, :2] = F
        B[2:, 2:] = F
        assert support_of(B).tolist() == [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]

    def test_support_threshold_is_strict(self):
        assert support_of(np.array([[1e-12, 1.0], [1.0, 0.0]]), 1e-12).tolist() == [[0, 1], [1, 0]]


class TestPermutations:
    def test_identity(self):
        D = generate("cycle", 5)
        assert np.array_equal(pattern_of(apply_permutations(D, range(5), range(5))), pattern_of(D))

    def test_row_swap_of_two_cycle(self):
        D = generate("directed_cycle", 2)
        assert pattern_of(apply_permutations(D, [1, 0], [0, 1])).tolist() == [[1, 0], [0, 1]]

    def test_matrix_convention(self):
        rng = np.random.default_rng(3)
        A = rng.integers(0, 2, size=(5, 5))
        P, Q = rng.permutation(5), rng.permutation(5)
        expected = permutation_matrix(P) @ A @ permutation_matrix(Q).T
        assert np.array_equal(permute_pattern(A, P, Q), expected)

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_inverse_round_trip(self, data):
        D = data.draw(digraphs())
        P = data.draw(perms(D.n))
        Q = data.draw(perms(D.n))
        E = apply_permutations(D, P, Q)
        back = apply_permutations(E, invert_permutation(P), invert_permutation(Q))
        assert back.arcs == D.arcs

    def test_isomorphic_triangle(self):
        D = digraph_of(TRIANGLE)
        P = [2, 0, 1]
        E = apply_permutations(D, P, P)
        assert np.array_equal(pattern_of(E), TRIANGLE)

    def test_size_mismatch(self):
        with pytest.raises(PreconditionError):
            apply_permutations(generate("cycle", 3), [0, 1], [0, 1, 2])
        with pytest.raises(PreconditionError):
            apply_permutations(generate("cycle", 3), [0, 0, 1], [0, 1, 2])


class TestPermutationEquivalence:
    def test_examples(self):
        assert is_permutation_equivalent([[0, 1], [1, 0]], [[1, 0], [0, 1]])[0]
        assert not is_permutation_equivalent(TRIANGLE, np.eye(3, dtype=int))[0]

    def test_limit(self):
        with pytest.raises(SearchLimitExceeded):
            is_permutation_equivalent(np.eye(9, dtype=int), np.eye(9, dtype=int))
        assert is_permutation_equivalent(np.eye(9, dtype=int), np.eye(9, dtype=int), max_n=9)[0]

    def test_witness_applies(self):
        rng = np.random.default_rng(7)
        for _ in range(30):
            A = rng.integers(0, 2, size=(6, 6))
            P, Q = rng.permutation(6), rng.permutation(6)
            B = permute_pattern(A, P, Q)
            ok, (P2, Q2) = is_permutation_equivalent(A, B)
            assert ok
            assert np.array_equal(permute_pattern(A, P2, Q2), B)

    def test_against_brute_force(self):
        rng = np.random.default_rng(11)
        for _ in range(150):
            A = rng.integers(0, 2, size=(3, 3))
            B = rng.integers(0, 2, size=(3, 3))
            if A.sum() != B.sum():
                continue
            assert is_permutation_equivalent(A, B)[0] == brute_perm_equivalent(A, B)


class TestComplement:
    def test_triangle_to_identity(self):
        assert pattern_of(complement(digraph_of(TRIANGLE))).tolist() == np.eye(3, dtype=int).tolist()

    def test_complete(self):
        assert complement(generate("complete", 3)).m == 0

    def test_identity(self):
        assert pattern_of(complement(digraph_of(np.eye(2, dtype=int)))).tolist() == [[0, 1], [1, 0]]

    def test_parallel_rejected(self):
        with pytest.raises(PreconditionError):
            complement(Digraph(2, ((0, 1), (0, 1))))

    @settings(max_examples=100, deadline=None)
    @given(digraphs())
    def test_involution(self, D):
        S = digraph_of(pattern_of(D))
        assert complement(complement(S)) == S
