"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they pass.
"""

import math
import time
from pathlib import Path

import numpy as np

from helpers import chsh_grid_oracle, ordered_factorizations, random_density
from quditcorr import (
    Factorization,
    JointView,
    MultiIndex,
    ProbabilityVector,
    QuditSplit,
    ReshapedState,
    SpinRep,
    TsallisParam,
    chsh_max,
    compose,
    correlation_matrix,
    decompose,
    linear_entropy,
    mutual_quantum_information,
    mutual_tomographic_information,
    partial_trace_left,
    partial_trace_right,
    qubit_from_probabilities,
    qubit_inequality_xy,
    qubit_inequality_zx,
    qutrit_inequality_shannon,
    qutrit_inequality_tsallis,
    rotation_matrix,
    separability_test,
    subadditivity_report,
    tomogram,
    validate,
)
from quditcorr.sampling import bloch_ball_probabilities, random_direction
from quditcorr.tomography import Direction

GOLDEN = Path(__file__).parent / "data" / "demo_four_level.golden.json"


def report_line(num: int, label: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {label} ({detail})")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_partition_bijection():
    start = time.perf_counter()
    failures = 0
    checked = 0
    for n in range(1, 257):
        factorizations = ordered_factorizations(n) if n > 1 else ((1,),)
        for dims in factorizations:
            f = Factorization(dims)
            for y in range(1, n + 1):
                checked += 1
                if compose(decompose(y, f)) != y:
                    failures += 1

    f22 = Factorization((2, 2))
    tables_ok = (
        [compose(MultiIndex((x1, x2), f22)) for x2 in (1, 2) for x1 in (1, 2)] == [1, 2, 3, 4]
        and [decompose(y, f22).coords[0] for y in range(1, 5)] == [1, 2, 1, 2]
        and [decompose(y, f22).coords[1] for y in range(1, 5)] == [1, 1, 2, 2]
    )
    elapsed = time.perf_counter() - start
    ok = failures == 0 and tables_ok and elapsed < 10.0
    report_line(
        1,
        "partition-map bijection (all ordered factorizations, N <= 256) and index tables",
        ok,
        f"{checked} round-trips, {failures} failures, tables_ok={tables_ok}, {elapsed:.1f}s",
    )


def test_criterion_2_classical_subadditivity():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = math.inf
    for _ in range(10_000):
        num_axes = int(rng.integers(2, 5))
        dims = tuple(int(d) for d in rng.integers(2, 5, size=num_axes))
        while math.prod(dims) > 64:
            dims = dims[:-1]
        if len(dims) < 2:
            dims = (2, 2)
        f = Factorization(dims)
        view = JointView(ProbabilityVector(rng.dirichlet(np.ones(f.total))), f)
        split = QuditSplit(f, int(rng.integers(1, f.num_axes)))
        worst = min(worst, subadditivity_report(view, split).mutual_info)

    product_worst = 0.0
    for _ in range(10_000):
        left = rng.dirichlet(np.ones(int(rng.integers(2, 9))))
        right = rng.dirichlet(np.ones(int(rng.integers(2, 9))))
        f = Factorization((left.size, right.size))
        view = JointView(ProbabilityVector(np.outer(right, left).ravel()), f)
        product_worst = max(
            product_worst, abs(subadditivity_report(view, QuditSplit(f, 1)).mutual_info)
        )
    elapsed = time.perf_counter() - start
    ok = worst >= -1e-10 and product_worst <= 1e-9 and elapsed < 30.0
    report_line(
        2,
        "classical subadditivity on 10^4 Dirichlet vectors + product saturation",
        ok,
        f"min I = {worst:.2e}, max |I_product| = {product_worst:.2e}, {elapsed:.1f}s",
    )


def test_criterion_3_partial_trace_closed_form():
    rng = np.random.default_rng(3)
    f = Factorization((2, 2))
    split = QuditSplit(f, 1)
    worst = 0.0
    for _ in range(1000):
        state = validate(random_density(rng, 4))
        r = state.matrix
        keep_left = np.array(
            [[r[0, 0] + r[2, 2], r[0, 1] + r[2, 3]], [r[1, 0] + r[3, 2], r[1, 1] + r[3, 3]]]
        )
        keep_right = np.array(
            [[r[0, 0] + r[1, 1], r[0, 2] + r[1, 3]], [r[2, 0] + r[3, 1], r[2, 2] + r[3, 3]]]
        )
        rs = ReshapedState(state, f)
        worst = max(
            worst,
            float(np.abs(partial_trace_right(rs, split).matrix - keep_left).max()),
            float(np.abs(partial_trace_left(rs, split).matrix - keep_right).max()),
        )
    ok = worst <= 1e-14
    report_line(
        3,
        "partial-trace summations equal the two-qubit closed forms",
        ok,
        f"max entrywise gap = {worst:.2e} over 1000 states",
    )


def test_criterion_4_bell_state_diagnostics():
    v = np.zeros(4)
    v[0] = v[3] = 2.0**-0.5
    state = validate(np.outer(v, v))
    f = Factorization((2, 2))
    rs = ReshapedState(state, f)
    split = QuditSplit(f, 1)

    mutual = mutual_quantum_information(rs, split)
    linear = linear_entropy(rs, split)
    witness = separability_test(rs, split).witness_value
    chsh = chsh_max(rs, split)
    oracle, settings = chsh_grid_oracle(correlation_matrix(rs, split))

    ok = (
        abs(mutual - 2.0 * math.log(2.0)) <= 1e-10
        and abs(linear - 0.5) <= 1e-12
        and abs(witness + 0.5) <= 1e-10
        and abs(chsh - 2.0 * math.sqrt(2.0)) <= 1e-9
        and settings >= 10_000
        and abs(oracle - chsh) <= 1e-9
    )
    report_line(
        4,
        "Bell-state diagnostics (mutual info, linear entropy, PPT witness, CHSH)",
        ok,
        f"I={mutual:.12f}, E={linear:.12f}, witness={witness:.12f}, "
        f"chsh={chsh:.12f}, oracle={oracle:.12f} over {settings} settings",
    )


def test_criterion_5_qubit_inequalities():
    rng = np.random.default_rng(5)
    worst = math.inf
    infinite = 0
    for _ in range(10_000):
        state = qubit_from_probabilities(bloch_ball_probabilities(rng))
        for result in (qubit_inequality_zx(state), qubit_inequality_xy(state)):
            if math.isinf(result.value):
                infinite += 1
            else:
                worst = min(worst, result.value)
    mixed = validate(np.eye(2) / 2.0)
    eq_zx = abs(qubit_inequality_zx(mixed).value)
    eq_xy = abs(qubit_inequality_xy(mixed).value)
    ok = worst >= -1e-10 and eq_zx <= 1e-9 and eq_xy <= 1e-9
    report_line(
        5,
        "qubit matrix-element inequalities on 10^4 Bloch-ball samples",
        ok,
        f"min finite value = {worst:.2e}, {infinite} infinite, "
        f"equality gaps at I/2 = ({eq_zx:.1e}, {eq_xy:.1e})",
    )


def test_criterion_6_qutrit_inequalities():
    rng = np.random.default_rng(6)
    params = [TsallisParam(q) for q in (1.5, 2.0, 3.0)]
    worst = math.inf
    infinite = 0
    for _ in range(10_000):
        state = validate(random_density(rng, 3))
        values = [qutrit_inequality_shannon(state).value]
        values += [qutrit_inequality_tsallis(state, tq).value for tq in params]
        for value in values:
            if math.isinf(value):
                infinite += 1
            else:
                worst = min(worst, value)
    mixed = validate(np.eye(3) / 3.0)
    shannon_anchor = qutrit_inequality_shannon(mixed).value
    tsallis_anchor = qutrit_inequality_tsallis(mixed, TsallisParam(2.0)).value
    ok = (
        worst >= -1e-10
        and abs(shannon_anchor - 0.056633) <= 1e-6
        and abs(tsallis_anchor - 1.0 / 9.0) <= 1e-6
    )
    report_line(
        6,
        "qutrit matrix-element inequalities (Shannon and q in {1.5, 2, 3})",
        ok,
        f"min finite value = {worst:.2e}, {infinite} infinite, "
        f"anchors = ({shannon_anchor:.6f}, {tsallis_anchor:.6f})",
    )


def test_criterion_7_tomography():
    start = time.perf_counter()
    rng = np.random.default_rng(7)

    # Half-spin rotation reproduced entrywise on a 20 x 20 x 5 grid.
    rep_half = SpinRep(0.5)
    rotation_gap = 0.0
    for theta in np.linspace(0.0, math.pi, 20):
        for phi in np.linspace(0.0, 2.0 * math.pi, 20, endpoint=False):
            for psi in np.linspace(0.0, 2.0 * math.pi, 5, endpoint=False):
                u = rotation_matrix(rep_half, Direction(theta, phi, psi))
                c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
                closed = np.array(
                    [
                        [c * np.exp(1j * (psi + phi) / 2), s * np.exp(1j * (psi - phi) / 2)],
                        [-s * np.exp(-1j * (psi - phi) / 2), c * np.exp(-1j * (psi + phi) / 2)],
                    ]
                )
                rotation_gap = max(rotation_gap, float(np.abs(u - closed).max()))

    # Normalization for j up to 7/2 on 10^3 random (state, direction) pairs.
    norm_gap = 0.0
    spins = [SpinRep(j / 2.0) for j in range(1, 8)]
    for k in range(1000):
        rep = spins[k % len(spins)]
        state = validate(random_density(rng, rep.dim))
        table = tomogram(state, rep, random_direction(rng))
        norm_gap = max(norm_gap, table.normalization_error)

    # Tomographic information on a 100-direction sweep of 100 random
    # spin-3/2 states.
    f = Factorization((2, 2))
    rep32 = SpinRep(1.5)
    grid = [
        Direction(theta, phi)
        for theta in np.linspace(0.0, math.pi, 10)
        for phi in np.linspace(0.0, 2.0 * math.pi, 10, endpoint=False)
    ]
    info_worst = math.inf
    for _ in range(100):
        state = validate(random_density(rng, 4))
        for direction in grid:
            info = mutual_tomographic_information(tomogram(state, rep32, direction), f)
            info_worst = min(info_worst, info)

    elapsed = time.perf_counter() - start
    ok = (
        rotation_gap <= 1e-12
        and norm_gap <= 1e-10
        and info_worst >= -1e-10
        and elapsed < 60.0
    )
    report_line(
        7,
        "tomography: rotation closed form, normalization, information sweep",
        ok,
        f"rotation gap = {rotation_gap:.1e}, normalization gap = {norm_gap:.1e}, "
        f"min I = {info_worst:.2e}, {elapsed:.1f}s",
    )


def test_criterion_8_golden_demo(capsys):
    from quditcorr.cli import main

    code = main(["demo-four-level"])
    out = capsys.readouterr().out
    golden = GOLDEN.read_text()
    ok = code == 0 and out == golden
    with capsys.disabled():
        report_line(
            8,
            "demo-four-level matches the checked-in golden report byte-for-byte",
            ok,
            f"exit={code}, {len(out)} bytes vs {len(golden)} golden",
        )
