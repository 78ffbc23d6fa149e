"""Agreement between the pure-Python counting kernel and the compiled one."""

from itertools import product

import pytest

from clusterchar import grassmann
from clusterchar.catalog import (
    a_n_intervals,
    kronecker_rep,
    loop_module_2,
    two_cycle_module,
)
from clusterchar.grassmann import available_backends, count_subreps, set_backend
from clusterchar.reps import direct_sum

needs_compiled = pytest.mark.skipif(
    "compiled" not in available_backends(),
    reason="compiled kernel not built",
)


@pytest.fixture(autouse=True)
def restore_backend():
    original = grassmann.backend_name()
    yield
    set_backend(original)


def workload():
    intervals = a_n_intervals(4)
    reps = [
        kronecker_rep(),
        loop_module_2(),
        two_cycle_module(),
        direct_sum(intervals[0], intervals[4]),
        direct_sum(kronecker_rep(), kronecker_rep()),
    ]
    for v in reps:
        for e in product(*(range(d + 1) for d in v.dims)):
            for q in (2, 3):
                yield v, e, q


@needs_compiled
def test_backends_agree():
    cases = list(workload())
    set_backend("pure")
    pure = [count_subreps(v, e, q) for v, e, q in cases]
    set_backend("compiled")
    compiled = [count_subreps(v, e, q) for v, e, q in cases]
    assert pure == compiled


@needs_compiled
def test_backends_agree_larger_prime():
    v = direct_sum(kronecker_rep(), kronecker_rep())
    for e in [(2, 2), (1, 2), (2, 3), (0, 4)]:
        set_backend("pure")
        a = count_subreps(v, e, 7)
        set_backend("compiled")
        b = count_subreps(v, e, 7)
        assert a == b


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        set_backend("gpu")


def test_default_backend_reported():
    assert grassmann.backend_name() in ("pure", "compiled")
