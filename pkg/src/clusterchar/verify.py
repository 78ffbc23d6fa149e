"""Verification suites: golden-value and identity checks runnable from the
command line (exit code 1 on any failure) and reused by the test suite.

Suite names: grass, fpoly, char, algebra, or all.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from . import catalog
from .arquiver import IndecObject, cluster_indecomposables, knit, sigma
from .charcat import (
    cc,
    cc_of_summands,
    cc_table,
    ct_enumerate,
    index_vector,
    iota,
    verify_ar_multiplication,
    verify_exchange,
)
from .clusteralg import enumerate_seeds
from .errors import DepthExceeded, NotDivisible
from .fpoly import check_ar_identity, check_product, f_polynomial
from .grassmann import grass_table
from .laurent import LaurentPoly
from .quivers import b_matrix, kronecker, linear_an
from .reps import direct_sum, interval_module


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name} ({self.elapsed:.2f}s): {self.detail}"


def _run(name, fn) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except Exception as exc:  # noqa: BLE001 - report, do not crash the suite
        detail = f"{type(exc).__name__}: {exc}"
        ok = False
    return CheckResult(name, ok, str(detail), time.perf_counter() - start)


# ------------------------------------------------------------- grass checks


def check_kronecker_grass_table() -> str:
    table = grass_table(catalog.kronecker_rep())
    expected = {(0, 0): 1, (0, 1): 2, (0, 2): 1, (1, 1): 1, (1, 2): 2, (2, 2): 1}
    nonzero = {e: chi for e, chi in table.items() if chi != 0}
    if nonzero != expected:
        raise AssertionError(f"table {nonzero} != expected {expected}")
    return "chi over the six nonempty strata = (1,2,1,1,2,1), zero elsewhere"


def check_small_grass_tables() -> str:
    loop2 = grass_table(catalog.loop_module_2())
    if loop2 != {(0,): 1, (1,): 1, (2,): 1}:
        raise AssertionError(f"loop module table {loop2}")
    interval = grass_table(interval_module(linear_an(4), 1, 3))
    ones = {(0, 0, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)}
    for e, chi in interval.items():
        want = 1 if e in ones else 0
        if chi != want:
            raise AssertionError(f"interval table wrong at {e}: {chi} != {want}")
    return "loop and interval tables as expected"


# ------------------------------------------------------------- fpoly checks


def _y(n, entries, coeff=1):
    return LaurentPoly.monomial(n, entries, coeff)


def check_fpoly_golden_set() -> str:
    checked = []

    kron = f_polynomial(catalog.kronecker_rep()).poly
    expected = (
        _y(2, (0, 0)) + _y(2, (0, 1), 2) + _y(2, (0, 2)) + _y(2, (1, 1))
        + _y(2, (1, 2), 2) + _y(2, (2, 2))
    )
    if kron != expected:
        raise AssertionError(f"Kronecker F = {kron.to_str('y')}")
    checked.append("kronecker")

    f1 = f_polynomial(catalog.loop_module_1()).poly
    f2 = f_polynomial(catalog.loop_module_2()).poly
    if f1 != _y(1, (0,)) + _y(1, (1,)):
        raise AssertionError(f"loop V1 F = {f1.to_str('y')}")
    if f2 != _y(1, (0,)) + _y(1, (1,)) + _y(1, (2,)):
        raise AssertionError(f"loop V2 F = {f2.to_str('y')}")
    checked.append("loop")

    for d in range(1, 6):
        f = f_polynomial(catalog.free_module(d)).poly
        expected = LaurentPoly(1, {(i,): comb(d, i) for i in range(d + 1)})
        if f != expected:
            raise AssertionError(f"free module d={d}: {f.to_str('y')}")
    checked.append("binomials d<=5")

    v1, v2 = catalog.kronecker_nonisomorphic_pair()
    expected = _y(2, (0, 0)) + _y(2, (0, 1)) + _y(2, (1, 1))
    for v in (v1, v2):
        if f_polynomial(v).poly != expected:
            raise AssertionError("non-isomorphic pair F mismatch")
    checked.append("equal-F pair")

    tc = f_polynomial(catalog.two_cycle_module()).poly
    expected = _y(2, (0, 0)) + _y(2, (1, 0)) + _y(2, (1, 1)) + _y(2, (2, 1))
    if tc != expected:
        raise AssertionError(f"two-cycle F = {tc.to_str('y')}")
    checked.append("two-cycle")
    return "golden set: " + ", ".join(checked)


def _direct_sum_grid():
    groups = [
        [catalog.kronecker_rep(), *catalog.kronecker_nonisomorphic_pair()],
        [catalog.loop_module_1(), catalog.loop_module_2()],
        [catalog.free_module(d) for d in range(1, 6)],
        [catalog.two_cycle_module()],
        catalog.a_n_intervals(4),
    ]
    for group in groups:
        yield from combinations_with_replacement(group, 2)


def check_direct_sum_grid() -> str:
    count = 0
    for v, w in _direct_sum_grid():
        if not check_product(v, w):
            raise AssertionError(
                f"F_V*F_W != F_(V+W) for dims {v.dims} and {w.dims}"
            )
        count += 1
    return f"{count} module pairs, all exact"


def _mesh_checks(n: int):
    q = linear_an(n)
    ar = knit(q)
    for tau_x, middle, x in ar.meshes():
        tau_m = interval_module(q, *tau_x)
        x_m = interval_module(q, *x)
        mid = interval_module(q, *middle[0])
        for extra in middle[1:]:
            mid = direct_sum(mid, interval_module(q, *extra))
        yield tau_m, mid, x_m, (tau_x, middle, x)


def check_ar_identity_meshes() -> str:
    if not check_ar_identity(
        catalog.loop_module_1(), catalog.loop_module_2(), catalog.loop_module_1()
    ):
        raise AssertionError("loop almost-split identity fails")
    count = 1
    for n in (4, 5):
        for tau_m, mid, x_m, mesh in _mesh_checks(n):
            if not check_ar_identity(tau_m, mid, x_m):
                raise AssertionError(f"A{n} mesh {mesh} fails")
            count += 1
    return f"{count} almost-split sequences, all exact"


# -------------------------------------------------------------- char checks


def check_index_pins() -> str:
    q = linear_an(4)
    pins = {
        (2, 2): (0, -1, 1, 0),
        (1, 3): (-1, 0, 0, 1),
        (1, 1): (-1, 1, 0, 0),
    }
    for (a, b), want in pins.items():
        got = index_vector(q, IndecObject.module(a, b))
        if got != want:
            raise AssertionError(f"index of [{a},{b}] = {got}, want {want}")
    for i in range(1, 5):
        want = tuple(1 if j == i else 0 for j in range(1, 5))
        got = index_vector(q, IndecObject.shifted_projective(i))
        if got != want:
            raise AssertionError(f"index of T{i} = {got}")
    return "3 module pins + 4 summand pins"


def check_cc_pins() -> str:
    q = linear_an(4)
    got = cc(q, IndecObject.module(1, 3))
    expected = LaurentPoly.monomial(4, (-1, -1, -1, 0)) * (
        _y(4, (1, 1, 0, 0)) + _y(4, (1, 0, 0, 1)) + _y(4, (0, 0, 1, 1)) + _y(4, (0, 1, 1, 1))
    )
    if got != expected:
        raise AssertionError(f"CC([1,3]) = {got.to_str()}")
    for i in range(1, 5):
        if cc(q, IndecObject.shifted_projective(i)) != LaurentPoly.variable(4, i):
            raise AssertionError(f"CC(T{i}) != x{i}")
    if cc_of_summands(q, []) != LaurentPoly.one(4):
        raise AssertionError("CC(0) != 1")
    return "CC(3/2/1), CC(T_i) = x_i, CC(0) = 1"


def check_iota_consistency() -> str:
    count = 0
    for n in range(1, 6):
        q = linear_an(n)
        ar = knit(q)
        b = b_matrix(q)
        for a in range(1, n + 1):
            for c in range(a, n + 1):
                m = IndecObject.module(a, c)
                lhs = tuple(
                    x + y
                    for x, y in zip(index_vector(q, m), index_vector(q, sigma(ar, m)))
                )
                dims = tuple(1 if a <= i <= c else 0 for i in range(1, n + 1))
                if lhs != iota(dims, b):
                    raise AssertionError(f"A{n} interval [{a},{c}]: {lhs} != iota")
                count += 1
    return f"{count} intervals across A1..A5"


def check_ar_multiplication() -> str:
    total = 0
    for n in range(1, 6):
        total += len(verify_ar_multiplication(linear_an(n)))
    return f"{total} meshes across A1..A5, all equal middle product + 1"


def check_index_injectivity() -> str:
    for n in range(1, 6):
        q = linear_an(n)
        objs = cluster_indecomposables(q)
        vectors = [index_vector(q, x) for x in objs]
        if len(set(vectors)) != len(vectors):
            raise AssertionError(f"A{n} index vectors collide")
    return "index vectors pairwise distinct on A1..A5 (14 on A4)"


# ------------------------------------------------------------ algebra checks


def check_categorification() -> str:
    details = []
    for n in range(1, 6):
        q = linear_an(n)
        table = cc_table(q)
        category_values = {v.to_str() for v in table.values.values()}
        seeds, variables = enumerate_seeds(q)
        algebra_values = {u.to_str() for u in variables}
        if category_values != algebra_values:
            raise AssertionError(f"A{n}: character values != cluster variables")
        if len(category_values) != n * (n + 3) // 2:
            raise AssertionError(f"A{n}: {len(category_values)} values")
        cts = ct_enumerate(q, table)
        if len(seeds) != len(cts):
            raise AssertionError(f"A{n}: {len(seeds)} seeds vs {len(cts)} CT objects")
        details.append(f"A{n}: {len(seeds)} seeds, {len(category_values)} variables")
    if "A4: 42 seeds, 14 variables" not in details:
        raise AssertionError(f"A4 counts off: {details}")
    return "; ".join(details)


def check_exchange_identities() -> str:
    q = linear_an(4)
    table = cc_table(q)
    count = 0
    for r in ct_enumerate(q, table):
        for i in range(1, 5):
            if not verify_exchange(r, i, table):
                raise AssertionError(f"exchange fails at {r.canonical()} vertex {i}")
            count += 1
    return f"{count} (object, vertex) exchange checks"


def check_laurent_phenomenon() -> str:
    # finite types close without a division failure
    for n in range(2, 6):
        enumerate_seeds(linear_an(n))
    # the Kronecker quiver must hit the depth bound, never NotDivisible
    try:
        enumerate_seeds(kronecker(), max_depth=8)
    except NotDivisible as exc:
        raise AssertionError(f"NotDivisible during Kronecker BFS: {exc}") from exc
    except DepthExceeded as exc:
        if len(exc.variables) < 9:
            raise AssertionError(
                f"only {len(exc.variables)} Kronecker variables at depth 8"
            ) from exc
        return (
            "A2..A5 closed; Kronecker open at depth 8 with "
            f"{len(exc.variables)} variables, no division failures"
        )
    raise AssertionError("Kronecker BFS unexpectedly closed")


# --------------------------------------------------------------- suite table


SUITES = {
    "grass": [
        ("kronecker-grass-table", check_kronecker_grass_table),
        ("small-grass-tables", check_small_grass_tables),
    ],
    "fpoly": [
        ("fpoly-golden-set", check_fpoly_golden_set),
        ("direct-sum-grid", check_direct_sum_grid),
        ("ar-identity-meshes", check_ar_identity_meshes),
    ],
    "char": [
        ("index-pins", check_index_pins),
        ("cc-pins", check_cc_pins),
        ("iota-consistency", check_iota_consistency),
        ("ar-multiplication", check_ar_multiplication),
        ("index-injectivity", check_index_injectivity),
    ],
    "algebra": [
        ("categorification", check_categorification),
        ("exchange-identities", check_exchange_identities),
        ("laurent-phenomenon", check_laurent_phenomenon),
    ],
}


def run_suite(name: str) -> list:
    """Run one suite (or "all"); returns a list of CheckResult."""
    if name == "all":
        names = ["grass", "fpoly", "char", "algebra"]
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)} or 'all'")
    results = []
    for suite in names:
        for check_name, fn in SUITES[suite]:
            results.append(_run(check_name, fn))
    return results
