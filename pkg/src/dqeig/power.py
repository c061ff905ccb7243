"""Iterative eigensolvers.

power_method_baseline iterates directly in dual quaternion arithmetic.
dcam_pm runs the same loop on the dual complex adjoint matrix, which is
cheaper per step and is the inner engine of the deflation driver dcama_pm.
adcam_pm adds Aitken extrapolation of the eigenvalue and eigenvector
sequences once the raw residual passes a trigger threshold.

All solvers stop when the residual |y - u*lam| in the 2R norm drops to the
configured tolerance; hitting the iteration cap is reported through the
trace, never raised, except inside deflation where a failed inner loop
aborts the sweep with the pairs found so far attached.
"""

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .adjoint import adjoint, vec_map_f, vec_map_f_inverse, vec_map_h
from .dual_eig import EigenResult
from .errors import InnerNoConvergence
from .matrices import (
    DualComplexMatrix,
    DualComplexVector,
    DualQuaternionMatrix,
    DualQuaternionVector,
    random_unit_vector,
)
from .scalars import DualComplex, DualNumber, DualQuaternion

__all__ = [
    "PowerIterConfig",
    "IterTrace",
    "power_method_baseline",
    "dcam_pm",
    "adcam_pm",
    "dcama_pm",
    "power_method_spectrum",
    "aitken_extrapolate",
    "pair_residual",
]

IMAG_DROP_TOL = 1e-10
AITKEN_GUARD = 1e-14


@dataclass(frozen=True)
class PowerIterConfig:
    """Iteration budget and tolerances shared by all iterative solvers."""

    max_iter: int = 5000
    tol: float = 1e-6
    aitken_trigger: float = 1e-3
    seed: int = 0

    def __post_init__(self):
        if self.max_iter < 1:
            raise ValueError("max_iter must be positive")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.aitken_trigger < self.tol:
            raise ValueError("aitken_trigger must be at least tol")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")


@dataclass
class IterTrace:
    """Per-iteration eigenvalue estimates and residuals.

    For the Aitken-accelerated solver the final record on convergence is the
    extrapolated pair. dropped_imag tracks the largest imaginary residue
    discarded when casting Rayleigh quotients to dual numbers; imag_flag is
    set when that residue was above the 1e-10 diagnostic threshold.
    """

    eigenvalues: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    converged: bool = False
    iterations: int = 0
    dropped_imag: float = 0.0
    imag_flag: bool = False

    def record(self, lam: DualNumber, residual: float, dropped: float):
        self.eigenvalues.append(lam)
        self.residuals.append(residual)
        self.dropped_imag = max(self.dropped_imag, dropped)
        if dropped > IMAG_DROP_TOL * max(1.0, abs(lam.st), abs(lam.du)):
            self.imag_flag = True


def _cast_complex(lam: DualComplex):
    return DualNumber(lam.st.real, lam.du.real), max(abs(lam.st.imag), abs(lam.du.imag))


def _cast_quaternion(lam: DualQuaternion):
    dropped = max(
        abs(lam.st.x), abs(lam.st.y), abs(lam.st.z),
        abs(lam.du.x), abs(lam.du.y), abs(lam.du.z),
    )
    return DualNumber(lam.st.w, lam.du.w), dropped


def pair_residual(q: DualQuaternionMatrix, lam: DualNumber, v: DualQuaternionVector) -> float:
    """|Q v - v lam| in the 2R norm."""
    return (q @ v - v.scale_right(lam)).norm_2r()


def power_method_baseline(
    q: DualQuaternionMatrix, v0: DualQuaternionVector, cfg: PowerIterConfig
):
    """Dominant eigenpair by power iteration in dual quaternion arithmetic.

    Expects Hermitian q and a unit start vector. Non-convergence within the
    iteration cap is reported in the trace, not raised.
    """
    v = v0.unit()
    trace = IterTrace()
    lam = DualNumber()
    for k in range(1, cfg.max_iter + 1):
        y = q @ v
        lam, dropped = _cast_quaternion(v.dot(y))
        res = (y - v.scale_right(lam)).norm_2r()
        trace.record(lam, res, dropped)
        v = y.unit()
        if res <= cfg.tol:
            trace.converged = True
            trace.iterations = k
            return lam, v, trace
    trace.iterations = cfg.max_iter
    return lam, v, trace


def _adjoint_power(p: DualComplexMatrix, u0: DualComplexVector, cfg: PowerIterConfig):
    u = u0.unit()
    trace = IterTrace()
    lam = DualNumber()
    for k in range(1, cfg.max_iter + 1):
        y = p @ u
        lam, dropped = _cast_complex(u.dot(y))
        res = (y - u.scale(lam)).norm_2r()
        trace.record(lam, res, dropped)
        u = y.unit()
        if res <= cfg.tol:
            trace.converged = True
            trace.iterations = k
            return lam, u, trace
    trace.iterations = cfg.max_iter
    return lam, u, trace


def dcam_pm(q: DualQuaternionMatrix, v0: DualQuaternionVector, cfg: PowerIterConfig):
    """Dominant eigenpair via power iteration on the adjoint matrix."""
    lam, u, trace = _adjoint_power(adjoint(q), vec_map_f(v0), cfg)
    return lam, vec_map_f_inverse(u), trace


def _aitken_real(x0, x1, x2, guard):
    x0 = np.asarray(x0, dtype=float)
    den = np.asarray(x2, dtype=float) + x0 - 2.0 * np.asarray(x1, dtype=float)
    ok = np.abs(den) >= guard * np.maximum(1.0, np.abs(x0))
    safe = np.where(ok, den, 1.0)
    return np.where(ok, x0 - (np.asarray(x1) - x0) ** 2 / safe, x0)


def _aitken_complex(a0, a1, a2, guard):
    return _aitken_real(a0.real, a1.real, a2.real, guard) + 1j * _aitken_real(
        a0.imag, a1.imag, a2.imag, guard
    )


def aitken_extrapolate(x0, x1, x2, guard: float = AITKEN_GUARD):
    """Aitken delta-squared step from three consecutive iterates.

    Standard and dual parts extrapolate independently, real component by
    real component. A component whose second difference falls below
    guard * max(1, |x|) passes through unextrapolated, which keeps the
    step exact-or-harmless near convergence.
    """
    if isinstance(x0, DualNumber):
        return DualNumber(
            float(_aitken_real(x0.st, x1.st, x2.st, guard)),
            float(_aitken_real(x0.du, x1.du, x2.du, guard)),
        )
    if isinstance(x0, DualComplexVector):
        return DualComplexVector(
            _aitken_complex(x0.st, x1.st, x2.st, guard),
            _aitken_complex(x0.du, x1.du, x2.du, guard),
        )
    if isinstance(x0, DualQuaternionVector):
        return DualQuaternionVector(
            _aitken_complex(x0.v1, x1.v1, x2.v1, guard),
            _aitken_complex(x0.v2, x1.v2, x2.v2, guard),
            _aitken_complex(x0.v3, x1.v3, x2.v3, guard),
            _aitken_complex(x0.v4, x1.v4, x2.v4, guard),
        )
    raise TypeError(f"cannot extrapolate {type(x0).__name__}")


def adcam_pm(q: DualQuaternionMatrix, v0: DualQuaternionVector, cfg: PowerIterConfig):
    """Adjoint power iteration with Aitken acceleration.

    Runs the dcam_pm loop; once the raw residual reaches cfg.aitken_trigger,
    each iteration extrapolates the last three eigenvalue and eigenvector
    iterates and stops as soon as the extrapolated pair meets cfg.tol.
    When the dominant eigenvalue is negative the iterate sequence alternates
    sign, so the history is sign-aligned before extrapolating.
    """
    p = adjoint(q)
    u = vec_map_f(v0).unit()
    trace = IterTrace()
    hist = deque(maxlen=3)
    lam = DualNumber()
    for k in range(1, cfg.max_iter + 1):
        y = p @ u
        lam, dropped = _cast_complex(u.dot(y))
        res = (y - u.scale(lam)).norm_2r()
        trace.record(lam, res, dropped)
        u = y.unit()
        hist.append((u, lam))
        if res <= cfg.aitken_trigger and len(hist) == 3:
            (ua, la), (ub, lb), (uc, lc) = hist
            sign = 1.0 if lam.st >= 0.0 else -1.0
            w = aitken_extrapolate(ua, ub * sign, uc)
            kappa = aitken_extrapolate(la, lb, lc)
            # cancellation collapse would shrink the standard part toward 0
            if math.sqrt(float(np.sum(np.abs(w.st) ** 2))) >= 0.5:
                res_w = (p @ w - w.scale(kappa)).norm_2r()
                if res_w <= cfg.tol:
                    trace.record(kappa, res_w, 0.0)
                    trace.converged = True
                    trace.iterations = k
                    return kappa, vec_map_f_inverse(w.unit()), trace
    trace.iterations = cfg.max_iter
    return lam, vec_map_f_inverse(u), trace


def _spectrum_result(q, found, iterations):
    ordered = sorted(found, key=lambda t: (t[0].st, t[0].du), reverse=True)
    pairs = tuple((lam, (v,)) for lam, v in ordered)
    if pairs:
        residual = float(np.mean([pair_residual(q, lam, v) for lam, v in ordered]))
    else:
        residual = 0.0
    return EigenResult(pairs, residual, iterations)


def dcama_pm(
    q: DualQuaternionMatrix, cfg: PowerIterConfig, deflate_tol: float | None = None
) -> EigenResult:
    """All eigenpairs by repeated dominant extraction on the adjoint matrix.

    After each extraction the adjoint is deflated with both the eigenvector
    and its H-partner, which removes the full doubled multiplicity of that
    eigenvalue. Stops after n pairs or when the deflated matrix drains below
    deflate_tol (default 1e-8 * max(1, initial norm)). Each inner loop
    restarts from a fresh seeded random vector. A non-converging inner loop
    raises InnerNoConvergence with the partial result attached.
    """
    n = q.rows
    p = adjoint(q)
    if deflate_tol is None:
        deflate_tol = 1e-8 * max(1.0, p.norm_fr())
    found = []
    iterations = 0
    for k in range(1, n + 1):
        if p.norm_fr() <= deflate_tol:
            break
        rng = np.random.default_rng([cfg.seed, k])
        u0 = vec_map_f(random_unit_vector(n, rng))
        lam, u, tr = _adjoint_power(p, u0, cfg)
        iterations += tr.iterations
        if not tr.converged:
            raise InnerNoConvergence(
                f"inner power loop {k} failed to converge in {cfg.max_iter} iterations",
                partial=_spectrum_result(q, found, iterations),
                pair_index=k,
            )
        found.append((lam, vec_map_f_inverse(u)))
        partner = vec_map_h(u)
        p = p - u.outer(u) * lam - partner.outer(partner) * lam
    return _spectrum_result(q, found, iterations)


def power_method_spectrum(
    q: DualQuaternionMatrix, cfg: PowerIterConfig, deflate_tol: float | None = None
) -> EigenResult:
    """All eigenpairs by deflation in plain dual quaternion arithmetic.

    The reference full-spectrum driver: extract the dominant pair with
    power_method_baseline, subtract lam * v v^*, repeat. Same stopping and
    failure contract as dcama_pm.
    """
    n = q.rows
    if deflate_tol is None:
        deflate_tol = 1e-8 * max(1.0, q.norm_fr())
    work = q
    found = []
    iterations = 0
    for k in range(1, n + 1):
        if work.norm_fr() <= deflate_tol:
            break
        rng = np.random.default_rng([cfg.seed, k])
        v0 = random_unit_vector(n, rng)
        lam, v, tr = power_method_baseline(work, v0, cfg)
        iterations += tr.iterations
        if not tr.converged:
            raise InnerNoConvergence(
                f"inner power loop {k} failed to converge in {cfg.max_iter} iterations",
                partial=_spectrum_result(q, found, iterations),
                pair_index=k,
            )
        found.append((lam, v))
        work = work - v.outer(v) * lam
    return _spectrum_result(q, found, iterations)
