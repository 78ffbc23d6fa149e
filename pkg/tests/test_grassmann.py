from itertools import product

import pytest

from clusterchar.catalog import (
    free_module,
    kronecker_rep,
    loop_module_2,
    two_cycle_module,
)
from clusterchar.errors import BadDims, NotPolynomialCount
from clusterchar.grassmann import (
    SubspaceIter,
    count_subreps,
    count_subspaces,
    euler_char,
    first_primes,
    gaussian_binomial,
    grass_table,
)
from clusterchar.quivers import linear_an
from clusterchar.reps import interval_module, specialize_mod_p


# ------------------------------------------------------------------- oracle
#
# Independent brute force: subspaces are represented by their full vector
# sets (spans enumerated from the echelon bases), and stability is checked
# by membership.  No echelon reduction is shared with the implementation.


def span(basis, q, d):
    vectors = set()
    for coeffs in product(range(q), repeat=len(basis)):
        v = [0] * d
        for c, row in zip(coeffs, basis):
            for i in range(d):
                v[i] = (v[i] + c * row[i]) % q
        vectors.add(tuple(v))
    return frozenset(vectors)


def all_subspace_spans(d, q):
    by_dim = {e: [] for e in range(d + 1)}
    for e in range(d + 1):
        for basis in SubspaceIter(d, e, q):
            by_dim[e].append(span(basis, q, d))
    return by_dim


def oracle_total_subreps(v, q):
    """Count all stable tuples over all subdimension vectors at once."""
    vq = specialize_mod_p(v, q) if v.modulus is None else v
    spans = [all_subspace_spans(d, q) for d in vq.dims]
    choices = [
        [s for e in range(d + 1) for s in spans[i][e]]
        for i, d in enumerate(vq.dims)
    ]
    arrows = [
        (a.source - 1, a.target - 1, m) for a, m in zip(vq.quiver.arrows, vq.mats)
    ]
    total = 0
    for tup in product(*choices):
        ok = True
        for s, t, m in arrows:
            for w in tup[s]:
                img = tuple(sum(row[i] * w[i] for i in range(len(w))) % q for row in m)
                if img not in tup[t]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            total += 1
    return total


class TestSubspaces:
    def test_lines_in_f3_squared(self):
        assert count_subspaces(2, 1, 3) == 4

    def test_gaussian_4_2_2(self):
        # (q^2+1)(q^2+q+1) at q=2
        assert count_subspaces(4, 2, 2) == 35

    def test_e_zero(self):
        assert count_subspaces(5, 0, 7) == 1

    def test_bad_dims(self):
        with pytest.raises(BadDims):
            count_subspaces(2, 3, 2)

    def test_matches_closed_form(self):
        for d in range(5):
            for e in range(d + 1):
                for q in (2, 3, 5):
                    assert count_subspaces(d, e, q) == gaussian_binomial(d, e, q)

    def test_iterator_exhaustive_and_distinct(self):
        for d in range(4):
            for e in range(d + 1):
                for q in (2, 3):
                    seen = list(SubspaceIter(d, e, q))
                    assert len(seen) == count_subspaces(d, e, q)
                    assert len(set(seen)) == len(seen)

    def test_iterator_spans_distinct(self):
        # echelon bases generate pairwise different subspaces
        spans = [span(b, 3, 2) for b in SubspaceIter(2, 1, 3)]
        assert len(set(spans)) == len(spans) == 4


class TestCountSubreps:
    def test_kronecker_point(self):
        v = kronecker_rep()
        for q in (2, 3, 5):
            assert count_subreps(v, (1, 1), q) == 1

    def test_kronecker_line(self):
        v = kronecker_rep()
        for q in (2, 3, 5):
            assert count_subreps(v, (0, 1), q) == q + 1

    def test_kronecker_empty(self):
        assert count_subreps(kronecker_rep(), (1, 0), 3) == 0

    def test_whole_module(self):
        for v in (kronecker_rep(), loop_module_2(), two_cycle_module()):
            assert count_subreps(v, v.dims, 3) == 1

    def test_bad_dims(self):
        with pytest.raises(BadDims):
            count_subreps(kronecker_rep(), (3, 0), 2)

    def test_oracle_equivalence(self):
        reps = [
            kronecker_rep(),
            loop_module_2(),
            two_cycle_module(),
            interval_module(linear_an(3), 1, 2),
        ]
        for v in reps:
            for q in (2, 3):
                total = sum(
                    count_subreps(v, e, q)
                    for e in product(*(range(d + 1) for d in v.dims))
                )
                assert total == oracle_total_subreps(v, q), (v.dims, q)


class TestEulerChar:
    def test_kronecker_p1(self):
        assert euler_char(kronecker_rep(), (0, 1)) == 2

    def test_kronecker_empty(self):
        assert euler_char(kronecker_rep(), (1, 0)) == 0

    def test_grassmannian_of_point_space(self):
        assert euler_char(free_module(4), (2,)) == 6

    def test_large_free_module(self):
        # binomial(10, 5) through a degree-25 counting polynomial
        assert euler_char(free_module(10), (5,)) == 252

    def test_non_polynomial_guard(self, monkeypatch):
        import clusterchar.grassmann as g

        def fake_counts(v, e, q):
            return 1 if q == 2 else q

        monkeypatch.setattr(g, "count_subreps", fake_counts)
        with pytest.raises(NotPolynomialCount):
            g.euler_char(kronecker_rep(), (1, 1))


class TestGrassTable:
    def test_kronecker_table(self):
        table = grass_table(kronecker_rep())
        nonzero = {e: c for e, c in table.items() if c}
        assert nonzero == {
            (0, 0): 1,
            (0, 1): 2,
            (0, 2): 1,
            (1, 1): 1,
            (1, 2): 2,
            (2, 2): 1,
        }

    def test_loop_table(self):
        assert grass_table(loop_module_2()) == {(0,): 1, (1,): 1, (2,): 1}

    def test_interval_table(self):
        table = grass_table(interval_module(linear_an(4), 1, 3))
        ones = {(0, 0, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)}
        for e, chi in table.items():
            assert chi == (1 if e in ones else 0)

    def test_boundary_entries(self):
        for v in (kronecker_rep(), loop_module_2(), two_cycle_module(), free_module(3)):
            table = grass_table(v)
            assert table[(0,) * v.quiver.n] == 1
            assert table[v.dims] == 1

    def test_interval_entries_are_01(self):
        for a in range(1, 5):
            for b in range(a, 5):
                table = grass_table(interval_module(linear_an(4), a, b))
                assert set(table.values()) <= {0, 1}


def test_first_primes():
    assert first_primes(6) == [2, 3, 5, 7, 11, 13]
