"""Spin tomograms and their partition-map correlation diagnostics.

A tomogram w(m | n) is the diagonal of u rho u^dagger, where u is the SU(2)
rotation carrying the measurement direction n.  Tables are reported in the
flat-index order m = -j -> 1, ..., m = j -> 2j+1, which reverses the
storage basis (|m> kept with m descending); relabelled this way, a tomogram
is a one-variable distribution that the partition machinery can analyze.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .classical import JointView, ProbabilityVector, TsallisParam, marginal
from .errors import DomainError, UsageError
from .partition import Factorization
from .quantum import DensityMatrix
from .tolerances import (
    PSD_ATOL,
    SUBADDITIVITY_ATOL,
    TOMOGRAM_NEG_CLAMP,
    TOMOGRAM_SUM_ATOL,
)


@dataclass(frozen=True)
class Direction:
    """Measurement direction (theta, phi) plus the third Euler angle psi,
    which is kept for the rotation but never affects tomogram values."""

    theta: float
    phi: float
    psi: float = 0.0

    def __post_init__(self):
        theta, phi, psi = float(self.theta), float(self.phi), float(self.psi)
        if not 0.0 <= theta <= math.pi:
            raise DomainError(f"theta = {theta} outside [0, pi]")
        if not 0.0 <= phi < 2.0 * math.pi:
            raise DomainError(f"phi = {phi} outside [0, 2*pi)")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi", psi)


class SpinRep:
    """Spin-j operator triple in the |m> basis ordered m = j, j-1, ..., -j."""

    __slots__ = ("j", "dim", "m_values", "jz", "jx", "jy", "_jy_spectrum")

    def __init__(self, j):
        two_j = round(float(j) * 2.0)
        if abs(float(j) * 2.0 - two_j) > 1e-9 or two_j < 1:
            raise DomainError(f"spin j = {j} must be a positive multiple of 1/2")
        self.j = two_j / 2.0
        self.dim = two_j + 1
        m_values = self.j - np.arange(self.dim, dtype=float)
        raising = np.zeros((self.dim, self.dim))
        for k in range(1, self.dim):
            m = m_values[k]
            raising[k - 1, k] = math.sqrt(self.j * (self.j + 1.0) - m * (m + 1.0))
        jz = np.diag(m_values).astype(complex)
        jx = ((raising + raising.T) / 2.0).astype(complex)
        jy = (raising - raising.T) / 2.0j
        for arr in (m_values, jz, jx, jy):
            arr.flags.writeable = False
        self.m_values = m_values
        self.jz = jz
        self.jx = jx
        self.jy = jy
        # Jy is Hermitian; its eigen-pairs give exp(i theta Jy) directly.
        w, v = np.linalg.eigh(jy)
        w.flags.writeable = False
        v.flags.writeable = False
        self._jy_spectrum = (w, v)

    def __repr__(self) -> str:
        return f"SpinRep(j={self.j})"


def rotation_matrix(rep: SpinRep, direction: Direction) -> np.ndarray:
    """SU(2) rotation u(phi, theta, psi) = e^{i psi Jz} e^{i theta Jy} e^{i phi Jz}.

    For j = 1/2 this reduces entrywise to the familiar Euler-angle matrix
    [[cos(theta/2) e^{i(psi+phi)/2}, sin(theta/2) e^{i(psi-phi)/2}],
     [-sin(theta/2) e^{-i(psi-phi)/2}, cos(theta/2) e^{-i(psi+phi)/2}]].
    The psi factor sits outermost, which is what makes tomograms
    psi-independent.
    """
    w, v = rep._jy_spectrum
    rotate_y = (v * np.exp(1.0j * direction.theta * w)) @ v.conj().T
    left = np.exp(1.0j * direction.psi * rep.m_values)
    right = np.exp(1.0j * direction.phi * rep.m_values)
    return (left[:, None] * rotate_y) * right[None, :]


@dataclass(frozen=True, eq=False)
class TomogramTable:
    """w(m | n) in flat-index order (m = -j first), renormalized; the raw
    deviation of the sum from one is kept as `normalization_error`."""

    direction: Direction
    values: np.ndarray
    normalization_error: float


def tomogram(state: DensityMatrix, rep: SpinRep, direction: Direction) -> TomogramTable:
    """Spin-projection distribution along `direction`.

    `state` is given in the same |m>-descending basis as `rep`.
    """
    if state.dim != rep.dim:
        raise UsageError(
            f"state dimension {state.dim} does not match spin dimension {rep.dim}"
        )
    u = rotation_matrix(rep, direction)
    diag = np.einsum("ij,jk,ik->i", u, state.matrix, u.conj())
    imag_gap = float(np.abs(diag.imag).max())
    if imag_gap > TOMOGRAM_SUM_ATOL:
        raise DomainError(f"tomogram diagonal has imaginary part {imag_gap:.3e}")
    values = diag.real[::-1].copy()  # storage is m descending; tables are y-ordered
    low = float(values.min())
    if low < -TOMOGRAM_NEG_CLAMP:
        raise DomainError(f"tomogram value {low:.3e} below the clamp window")
    if float(values.max()) > 1.0 + PSD_ATOL:
        raise DomainError(f"tomogram value {values.max():.3e} exceeds 1")
    values[values < 0.0] = 0.0
    raw_sum = float(values.sum())
    error = abs(raw_sum - 1.0)
    if error > TOMOGRAM_SUM_ATOL:
        raise DomainError(
            f"tomogram sums to {raw_sum!r}, off by more than {TOMOGRAM_SUM_ATOL:.0e}"
        )
    values /= raw_sum
    values.flags.writeable = False
    return TomogramTable(direction=direction, values=values, normalization_error=error)


def _partition_view(table: TomogramTable, factorization: Factorization) -> JointView:
    if factorization.num_axes != 2:
        raise UsageError(
            f"tomographic analysis splits into two axes, got {factorization.num_axes}"
        )
    if factorization.total != table.values.size:
        raise UsageError(
            f"dimension mismatch: factorization total {factorization.total} "
            f"!= tomogram length {table.values.size}"
        )
    return JointView(ProbabilityVector(table.values), factorization)


def tomographic_marginals(
    table: TomogramTable, factorization: Factorization
) -> tuple[ProbabilityVector, ProbabilityVector]:
    """Marginals of the tomogram viewed through a two-axis partition."""
    view = _partition_view(table, factorization)
    return marginal(view, (1,)), marginal(view, (2,))


@dataclass(frozen=True)
class TsallisTomogramReport:
    s_q1: float
    s_q2: float
    s_q: float
    subadditivity_holds: bool


def tomographic_tsallis_report(
    table: TomogramTable, factorization: Factorization, tq: TsallisParam
) -> TsallisTomogramReport:
    """Tsallis entropies of the two tomographic marginals and the joint,
    with the subadditivity verdict S_q1 + S_q2 >= S_q."""
    first, second = tomographic_marginals(table, factorization)
    s_q1 = _kernels.tsallis(first.probs, tq.q)
    s_q2 = _kernels.tsallis(second.probs, tq.q)
    s_q = _kernels.tsallis(table.values, tq.q)
    return TsallisTomogramReport(
        s_q1=s_q1,
        s_q2=s_q2,
        s_q=s_q,
        subadditivity_holds=bool(s_q1 + s_q2 - s_q >= -SUBADDITIVITY_ATOL),
    )


def tomographic_tsallis_relative(
    first: ProbabilityVector, second: ProbabilityVector, tq: TsallisParam
) -> float:
    """Relative Tsallis entropy between marginals taken at two directions.

    The comparison is defined only between subsystems of equal dimension
    (X1 = X2) and for q > 1.
    """
    if tq.q <= 1.0:
        raise UsageError(f"the relative tomographic comparison needs q > 1, got q = {tq.q}")
    if len(first) != len(second):
        raise UsageError(
            f"marginal lengths differ ({len(first)} vs {len(second)}); "
            "the comparison requires equal subsystem dimensions X1 = X2"
        )
    return _kernels.relative_tsallis(first.probs, second.probs, tq.q)


def mutual_tomographic_information(
    table: TomogramTable, factorization: Factorization
) -> float:
    """S1 + S2 - S of the tomogram's partition view; zero means no hidden
    correlations at this direction."""
    first, second = tomographic_marginals(table, factorization)
    return (
        _kernels.shannon(first.probs)
        + _kernels.shannon(second.probs)
        - _kernels.shannon(table.values)
    )


@dataclass(frozen=True, eq=False)
class SweepRecord:
    direction: Direction
    values: tuple[float, ...]
    information: float
    tsallis: dict[float, TsallisTomogramReport]
    normalization_error: float


def direction_sweep(
    state: DensityMatrix,
    rep: SpinRep,
    factorization: Factorization,
    grid,
    qs=(),
) -> list[SweepRecord]:
    """Evaluate the tomographic diagnostics over a direction grid.

    One record per direction, in grid order.
    """
    directions = list(grid)
    if not directions:
        raise UsageError("direction grid is empty")
    qs = tuple(qs)
    records = []
    for direction in directions:
        table = tomogram(state, rep, direction)
        records.append(
            SweepRecord(
                direction=direction,
                values=tuple(float(v) for v in table.values),
                information=mutual_tomographic_information(table, factorization),
                tsallis={
                    tq.q: tomographic_tsallis_report(table, factorization, tq)
                    for tq in qs
                },
                normalization_error=table.normalization_error,
            )
        )
    return records
