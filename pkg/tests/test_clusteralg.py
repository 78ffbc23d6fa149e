import pytest

from clusterchar.clusteralg import Seed, enumerate_seeds, initial_seed, mutate_seed
from clusterchar.errors import DepthExceeded, NotDivisible
from clusterchar.laurent import LaurentPoly, parse_laurent
from clusterchar.quivers import kronecker, linear_an

A2 = linear_an(2)


def lp2(text):
    return parse_laurent(text, 2)


class TestMutateSeed:
    def test_first_step(self):
        seed = mutate_seed(initial_seed(A2), 1)
        assert seed.cluster[0] == lp2("x1^-1 + x1^-1*x2")
        assert seed.cluster[1] == lp2("x2")
        assert [(a.source, a.target) for a in seed.quiver.arrows] == [(2, 1)]

    def test_involution(self):
        start = initial_seed(A2)
        for i in (1, 2):
            twice = mutate_seed(mutate_seed(start, i), i)
            assert twice.cluster == start.cluster
            assert twice.canonical() == start.canonical()

    def test_sequence_1_2(self):
        seed = mutate_seed(mutate_seed(initial_seed(A2), 1), 2)
        assert seed.cluster[0].fraction_str() == "(1 + x2)/x1"
        assert seed.cluster[1].fraction_str() == "(1 + x1 + x2)/(x1*x2)"

    def test_not_divisible_is_fatal(self):
        # a doctored cluster entry breaks the Laurent phenomenon
        bad = Seed(
            A2,
            (LaurentPoly.variable(2, 1) + 1, LaurentPoly.variable(2, 2)),
        )
        with pytest.raises(NotDivisible):
            mutate_seed(bad, 1)


class TestEnumerate:
    def test_a2_pentagon(self):
        seeds, variables = enumerate_seeds(A2)
        assert len(seeds) == 5
        assert {u.fraction_str() for u in variables} == {
            "x1",
            "x2",
            "(1 + x2)/x1",
            "(1 + x1 + x2)/(x1*x2)",
            "(1 + x1)/x2",
        }

    def test_counts_catalan(self):
        expected = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132}
        for n, count in expected.items():
            seeds, variables = enumerate_seeds(linear_an(n))
            assert len(seeds) == count
            assert len(variables) == n * (n + 3) // 2

    def test_order_independence(self):
        # reversed vertex-expansion order yields the same canonical sets
        q = linear_an(4)
        seeds, variables = enumerate_seeds(q)
        start = initial_seed(q)
        seen = {start.canonical(): start}
        frontier = [start]
        while frontier:
            new = []
            for seed in frontier:
                for i in range(q.n, 0, -1):
                    s = mutate_seed(seed, i)
                    if s.canonical() not in seen:
                        seen[s.canonical()] = s
                        new.append(s)
            frontier = new
        assert set(seen) == {s.canonical() for s in seeds}

    def test_kronecker_depth_exceeded(self):
        with pytest.raises(DepthExceeded) as info:
            enumerate_seeds(kronecker(), max_depth=8)
        assert len(info.value.variables) >= 9
        assert len(info.value.seeds) >= 9

    def test_kronecker_variables_are_laurent(self):
        try:
            enumerate_seeds(kronecker(), max_depth=6)
        except DepthExceeded as exc:
            for u in exc.variables:
                assert not u.is_zero()
