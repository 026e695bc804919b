"""Sup-defined matrix quantities and their brute-force oracles.

* ``numerical_radius``        omega(T) = sup_|x|=1 |<Tx, x>|
* ``block_numerical_radius``  omega([[0, A], [B*, 0]]) = 1/2 sup_theta ||A + e^{i theta} B||
* ``euclidean_radius``        omega_e(T1..Tn) = sup_|x|=1 (sum |<Ti x, x>|^2)^(1/2)
* ``euclidean_norm``          ||(T1..Tn)||_e = sup over the complex unit ball of ||sum li Ti||

Every optimizer returns a :class:`QuantityResult` whose ``value`` is the
objective re-evaluated at ``witness`` (hence a lower bound of the supremum)
together with an estimated absolute error in ``accuracy``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Any, Sequence

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .errors import DimensionMismatchError, InvalidMatrixError
from .linalg import as_matrix

TWO_PI = 2.0 * np.pi
_EPS = np.finfo(float).eps
_SQRT_EPS = np.sqrt(_EPS)

# how many of the best coarse-grid candidates get a local refinement
_MAX_CANDIDATES = 6
# multistart ascent: iterations run on every start before keeping the best few
_PRUNE_AFTER = 8
_KEEP_AFTER_PRUNE = 4
_START_GRID_COARSENING = 4
_ASCENT_TAIL_FACTOR = 100.0
_TIE_TOL = 64 * np.finfo(float).eps


class Method(str, enum.Enum):
    THETA_SWEEP = "theta_sweep"
    LAMBDA_BALL_SWEEP = "lambda_ball_sweep"
    SPHERE_MULTISTART = "sphere_multistart"
    GRID_ORACLE = "grid_oracle"


@dataclass(frozen=True)
class SweepConfig:
    """Resolution knobs shared by all optimizers.

    ``coarse_points`` is the number of grid points per full turn of an angle,
    ``refine_tol`` the termination width of local refinement, and ``seed``
    fixes the random starts of the multistart ascent.
    """

    coarse_points: int = 720
    refine_tol: float = 1e-12
    multistart_count: int = 32
    max_iters: int = 500
    seed: int = 0

    def __post_init__(self):
        if int(self.coarse_points) < 8:
            raise ValueError("coarse_points must be at least 8")
        if not self.refine_tol > 0:
            raise ValueError("refine_tol must be positive")
        if int(self.multistart_count) < 1 or int(self.max_iters) < 1:
            raise ValueError("multistart_count and max_iters must be positive")

    def doubled(self) -> "SweepConfig":
        """A configuration with twice the grid, starts and iteration budget."""
        return replace(
            self,
            coarse_points=2 * self.coarse_points,
            multistart_count=2 * self.multistart_count,
            max_iters=2 * self.max_iters,
        )


DEFAULT_CONFIG = SweepConfig()


@dataclass(frozen=True)
class QuantityResult:
    value: float
    method: Method
    witness: Any
    accuracy: float

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, tuple):
            wit = [_encode_witness(p) for p in w]
        else:
            wit = _encode_witness(w)
        return {
            "value": float(self.value),
            "method": self.method.value,
            "witness": wit,
            "accuracy": float(self.accuracy),
        }


def _encode_witness(w):
    if isinstance(w, np.ndarray):
        return [[float(z.real), float(z.imag)] for z in w.ravel()]
    return float(w)


# ---------------------------------------------------------------------------
# batched Hermitian helpers


def _lambda_max_batch(h: np.ndarray) -> np.ndarray:
    """Largest eigenvalue of each Hermitian matrix in a ``(..., n, n)`` stack."""
    n = h.shape[-1]
    if n == 1:
        return h[..., 0, 0].real.copy()
    if n == 2:
        a = h[..., 0, 0].real
        d = h[..., 1, 1].real
        b = h[..., 0, 1]
        half = (a - d) / 2
        return (a + d) / 2 + np.sqrt(half * half + (b.real * b.real + b.imag * b.imag))
    return np.linalg.eigvalsh(h)[..., -1]


def _sigma_max_batch(m: np.ndarray) -> np.ndarray:
    """Largest singular value of each matrix in a ``(..., n, n)`` stack."""
    n = m.shape[-1]
    if n == 2:
        fro2 = np.sum(m.real**2 + m.imag**2, axis=(-2, -1))
        det = m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
        disc = np.maximum(fro2 * fro2 - 4.0 * np.abs(det) ** 2, 0.0)
        return np.sqrt(np.maximum((fro2 + np.sqrt(disc)) / 2, 0.0))
    # the top eigenvalue of the Gram matrix is relatively accurate, unlike
    # the small ones, and batched eigvalsh is much faster than batched svd
    gram = np.conj(np.swapaxes(m, -1, -2)) @ m
    return np.sqrt(np.maximum(np.linalg.eigvalsh(gram)[..., -1], 0.0))


def _roundoff(dim: int, scale: float) -> float:
    return 16.0 * _EPS * dim * (1.0 + scale)


# ---------------------------------------------------------------------------
# one-dimensional periodic maximization


def _maximize_periodic(
    f, lipschitz: float, cfg: SweepConfig, period: float = TWO_PI, scalar=None, newton=None, sweep=None
):
    """Maximize a periodic function given in batched form ``f(thetas)``.

    The nearest grid point to the true maximizer is within ``lipschitz * h / 2``
    of the maximum, so only grid peaks at least that high are refined, each on
    a bracket of two grid steps either side.  ``newton(theta)`` optionally
    returns ``(g, g', g'')`` for a strictly increasing transform ``g`` of the
    objective; when it converges inside the bracket it replaces bounded Brent.
    ``scalar`` is an optional faster single-angle version of ``f`` and
    ``sweep(grid)`` an optional faster way to evaluate it on the whole grid.
    Returns ``(theta, value, accuracy)``.
    """
    n = int(cfg.coarse_points)
    h = period / n
    grid = np.arange(n) * h
    vals = sweep(grid) if sweep is not None else f(grid)
    best_i = int(np.argmax(vals))
    best_theta, best_val = float(grid[best_i]), float(vals[best_i])
    if scalar is None:
        scalar = lambda theta: float(f(np.array([theta]))[0])  # noqa: E731

    left, right = np.roll(vals, 1), np.roll(vals, -1)
    is_peak = (vals >= left) & (vals >= right) & (vals >= best_val - 0.5 * lipschitz * h)
    peaks = np.flatnonzero(is_peak)
    order = np.argsort(-vals[peaks], kind="stable")
    peaks = [best_i] + [int(i) for i in peaks[order] if i != best_i]
    peaks = peaks[:_MAX_CANDIDATES]

    width = 0.0
    refined: list[float] = []
    for i in peaks:
        # grid peaks tied to roundoff with one already refined are copies under
        # a symmetry of the objective (or points of a plateau): skip them
        if any(abs(vals[i] - v) <= _TIE_TOL * (1.0 + abs(v)) for v in refined):
            continue
        refined.append(float(vals[i]))
        centre = float(grid[i])
        found = _newton_refine(newton, centre, 2 * h, cfg) if newton is not None else None
        if found is None:
            res = minimize_scalar(
                lambda u: -scalar(centre + u),
                bounds=(-2 * h, 2 * h),
                method="bounded",
                options={"xatol": cfg.refine_tol, "maxiter": cfg.max_iters},
            )
            u = float(res.x)
            step = 2.0 * (cfg.refine_tol + _SQRT_EPS * abs(u))
        else:
            u, last = found
            step = 2.0 * (cfg.refine_tol + last)
        val = scalar(centre + u)
        if val > best_val:
            best_theta, best_val = (centre + u) % period, val
        width = max(width, step)
    return best_theta, best_val, lipschitz * width


_NEWTON_MAX_STEPS = 30


def _newton_refine(newton, centre: float, half_width: float, cfg: SweepConfig):
    """Newton's method for a stationary point in ``[centre - w, centre + w]``.

    Returns ``(offset, last_step)``, or None if an iterate leaves the bracket,
    the curvature is not negative, or the steps do not shrink below
    ``refine_tol`` -- the caller then falls back to a derivative-free search.
    """
    u = 0.0
    g0 = None
    for _ in range(min(_NEWTON_MAX_STEPS, cfg.max_iters)):
        g, d1, d2 = newton(centre + u)
        if g0 is None:
            g0 = g
        if not d2 < 0.0 or not math.isfinite(d1 / d2):
            return None
        step = -d1 / d2
        u += step
        if abs(u) > half_width:
            return None
        if abs(step) <= cfg.refine_tol:
            if newton(centre + u)[0] < g0:
                return None
            return u, abs(step)
    return None


def _hermitian_path_derivatives(h, dh, d2h):
    """Value, first and second derivative of lambda_max along ``h(theta)``.

    ``h``, ``dh`` and ``d2h`` are the matrix and its derivatives at one angle;
    second-order perturbation theory gives the curvature, which is reported
    as +inf when the top eigenvalue is (numerically) repeated.
    """
    w, v = np.linalg.eigh(h)
    x = v[:, -1]
    dx = dh @ x
    d1 = float(np.vdot(x, dx).real)
    d2 = float(np.vdot(x, d2h @ x).real)
    if w.shape[0] > 1:
        gaps = w[-1] - w[:-1]
        if gaps[-1] <= 1e-9 * (1.0 + abs(w[-1])):
            return float(w[-1]), d1, math.inf
        coupling = v[:, :-1].conj().T @ dx
        d2 += 2.0 * float(np.sum((coupling.real**2 + coupling.imag**2) / gaps))
    return float(w[-1]), d1, d2


def support_function(t, theta: float) -> float:
    """``lambda_max(Re(e^{i theta} t))``, the support function of the numerical range."""
    a = as_matrix(t)
    return float(_support_batch(a)(np.array([float(theta)]))[0])


def _support_batch(a: np.ndarray):
    re = (a + a.conj().T) / 2
    im = (a - a.conj().T) / 2j

    def f(thetas):
        c = np.cos(thetas)[:, None, None]
        s = np.sin(thetas)[:, None, None]
        return _lambda_max_batch(c * re - s * im)

    return f


def _support_scalar(a: np.ndarray):
    re = (a + a.conj().T) / 2
    im = (a - a.conj().T) / 2j
    if a.shape[0] == 2:
        return lambda theta: float(_lambda_max_batch(math.cos(theta) * re - math.sin(theta) * im))
    eigvalsh = np.linalg.eigvalsh
    return lambda theta: float(eigvalsh(math.cos(theta) * re - math.sin(theta) * im)[-1])


def _support_sweep(a: np.ndarray):
    """Support function on a full-turn grid from half the eigen-decompositions.

    ``Re(e^{i (theta + pi)} a) = -Re(e^{i theta} a)``, so the smallest
    eigenvalue at ``theta`` gives the largest at ``theta + pi``.
    """
    re = (a + a.conj().T) / 2
    im = (a - a.conj().T) / 2j

    def sweep(grid):
        n = grid.shape[0]
        if n % 2 or a.shape[0] <= 2:
            return _support_batch(a)(grid)
        half = grid[: n // 2]
        c = np.cos(half)[:, None, None]
        s = np.sin(half)[:, None, None]
        w = np.linalg.eigvalsh(c * re - s * im)
        return np.concatenate([w[:, -1], -w[:, 0]])

    return sweep


def _support_newton(a: np.ndarray):
    re = (a + a.conj().T) / 2
    im = (a - a.conj().T) / 2j

    def newton(theta):
        c, s = math.cos(theta), math.sin(theta)
        h = c * re - s * im
        return _hermitian_path_derivatives(h, -s * re - c * im, -h)

    return newton


def numerical_radius(t, cfg: SweepConfig = DEFAULT_CONFIG) -> QuantityResult:
    """omega(t) by maximizing the support function over theta in [0, 2 pi)."""
    a = as_matrix(t)
    return _numerical_radius(a, cfg)


def _numerical_radius(a: np.ndarray, cfg: SweepConfig) -> QuantityResult:
    norm = float(np.linalg.norm(a, 2))
    if norm == 0.0:
        return QuantityResult(0.0, Method.THETA_SWEEP, 0.0, 0.0)
    f, scalar = _support_batch(a), _support_scalar(a)
    theta, _, acc = _maximize_periodic(
        f, norm, cfg, scalar=scalar, newton=_support_newton(a), sweep=_support_sweep(a)
    )
    value = scalar(theta)
    return QuantityResult(value, Method.THETA_SWEEP, theta, acc + _roundoff(a.shape[0], norm))


def real_part_norm_sup(t, cfg: SweepConfig = DEFAULT_CONFIG) -> QuantityResult:
    """``sup_theta ||Re(e^{i theta} t)||`` over theta in [0, pi).

    The function has period pi, so the half turn is swept with the full
    ``coarse_points`` resolution.  Its value equals omega(t).
    """
    a = as_matrix(t)
    norm = float(np.linalg.norm(a, 2))
    if norm == 0.0:
        return QuantityResult(0.0, Method.THETA_SWEEP, 0.0, 0.0)
    re = (a + a.conj().T) / 2
    im = (a - a.conj().T) / 2j

    def f(thetas):
        c = np.cos(thetas)[:, None, None]
        s = np.sin(thetas)[:, None, None]
        return np.max(np.abs(np.linalg.eigvalsh(c * re - s * im)), axis=-1)

    theta, _, acc = _maximize_periodic(f, norm, cfg, period=np.pi)
    value = float(f(np.array([theta]))[0])
    return QuantityResult(value, Method.THETA_SWEEP, theta, acc + _roundoff(a.shape[0], norm))


def block_numerical_radius(a, b, cfg: SweepConfig = DEFAULT_CONFIG) -> QuantityResult:
    """omega of ``[[0, a], [b*, 0]]`` as ``1/2 sup_theta ||a + e^{i theta} b||``."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"incompatible operands {a.shape} and {b.shape}")
    return _block_numerical_radius(a, b, cfg)


def _block_numerical_radius(a, b, cfg):
    p = a.conj().T @ a + b.conj().T @ b
    q = a.conj().T @ b
    qh = q.conj().T

    def f(thetas):
        e = np.exp(1j * thetas)[:, None, None]
        lam = _lambda_max_batch(p + e * q + e.conj() * qh)
        return 0.5 * np.sqrt(np.maximum(lam, 0.0))

    eigvalsh = np.linalg.eigvalsh

    def scalar(theta):
        e = complex(math.cos(theta), math.sin(theta))
        h = p + e * q + e.conjugate() * qh
        lam = float(_lambda_max_batch(h)) if h.shape[0] == 2 else float(eigvalsh(h)[-1])
        return 0.5 * math.sqrt(max(lam, 0.0))

    def newton(theta):
        e = complex(math.cos(theta), math.sin(theta))
        eq, eqh = e * q, e.conjugate() * qh
        return _hermitian_path_derivatives(p + eq + eqh, 1j * (eq - eqh), -(eq + eqh))

    nb = float(np.linalg.norm(b, 2))
    scale = float(np.linalg.norm(a, 2)) + nb
    if scale == 0.0:
        return QuantityResult(0.0, Method.THETA_SWEEP, 0.0, 0.0)
    theta, _, acc = _maximize_periodic(f, 0.5 * nb, cfg, scalar=scalar, newton=newton)
    value = scalar(theta)
    return QuantityResult(value, Method.THETA_SWEEP, theta, acc + _roundoff(a.shape[0], scale**2))


# ---------------------------------------------------------------------------
# tuples


def _as_tuple(ts) -> np.ndarray:
    mats = [as_matrix(t) for t in ts]
    if not mats:
        raise InvalidMatrixError("expected at least one matrix")
    shape = mats[0].shape
    for m in mats[1:]:
        if m.shape != shape:
            raise DimensionMismatchError(f"incompatible operands {shape} and {m.shape}")
    return np.stack(mats)


def euclidean_radius_objective(ts, x) -> float:
    """``(sum |<Ti x, x>|^2)^(1/2)`` for a single unit vector ``x``."""
    stack = _as_tuple(ts)
    x = np.asarray(x, dtype=np.complex128)
    return float(_radius_values(stack, x[None, :])[0])


def euclidean_norm_objective(ts, lam) -> float:
    """``||sum li Ti||`` for a single coefficient tuple ``lam``."""
    stack = _as_tuple(ts)
    lam = np.asarray(lam, dtype=np.complex128)
    return float(np.linalg.norm(np.tensordot(lam, stack, axes=1), 2))


def _radius_values(stack: np.ndarray, xs: np.ndarray) -> np.ndarray:
    c = np.einsum("ki,mij,kj->km", xs.conj(), stack, xs)
    return np.sqrt(np.sum(c.real**2 + c.imag**2, axis=1))


def _unit_x(t, phi):
    return np.array([np.cos(t), np.exp(1j * phi) * np.sin(t)])


def _dim2_quadratic_forms(stack, t, phi):
    """``<Ti x, x>`` for ``x = (cos t, e^{i phi} sin t)``; t, phi broadcastable."""
    ct, st = np.cos(t), np.sin(t)
    e = np.exp(1j * phi)
    cc, ss, cs = ct * ct, st * st, ct * st
    out = []
    for m in stack:
        out.append(cc * m[0, 0] + ss * m[1, 1] + cs * (e * m[0, 1] + e.conj() * m[1, 0]))
    return np.stack(out)


def _dim2_radius(stack, t, phi):
    c = _dim2_quadratic_forms(stack, t, phi)
    return np.sqrt(np.sum(c.real**2 + c.imag**2, axis=0))


def _grid_candidates(vals: np.ndarray, count: int):
    """Indices of up to ``count`` best grid points that are local maxima."""
    padded = np.pad(vals, 1, mode="wrap")
    centre = padded[1:-1, 1:-1]
    peak = np.ones_like(centre, dtype=bool)
    for dt in (-1, 0, 1):
        for dp in (-1, 0, 1):
            if dt or dp:
                peak &= centre >= padded[1 + dt : padded.shape[0] - 1 + dt, 1 + dp : padded.shape[1] - 1 + dp]
    flat = np.flatnonzero(peak)
    flat = flat[np.argsort(-centre.ravel()[flat], kind="stable")][:count]
    best = int(np.argmax(vals))
    if best not in flat:
        flat = np.concatenate([[best], flat[: count - 1]])
    return [np.unravel_index(int(i), vals.shape) for i in flat]


def euclidean_radius(ts: Sequence, cfg: SweepConfig = DEFAULT_CONFIG) -> QuantityResult:
    """omega_e(T1, ..., Tn); the witness is the maximizing unit vector."""
    stack = _as_tuple(ts)
    return _euclidean_radius(stack, cfg)


def _euclidean_radius(stack: np.ndarray, cfg: SweepConfig) -> QuantityResult:
    m, n, _ = stack.shape
    scale = float(np.sqrt(sum(np.linalg.norm(t, 2) ** 2 for t in stack)))
    if n == 1:
        x = np.ones(1, dtype=np.complex128)
        value = float(_radius_values(stack, x[None, :])[0])
        return QuantityResult(value, Method.SPHERE_MULTISTART, x, _roundoff(1, scale))
    if scale == 0.0:
        x = np.eye(n, dtype=np.complex128)[0]
        return QuantityResult(0.0, Method.SPHERE_MULTISTART, x, 0.0)
    if m == 1:
        # a single operator: the theta sweep already is the optimizer
        res = _numerical_radius(stack[0], cfg)
        h = stack[0] * np.exp(1j * res.witness)
        _, vecs = np.linalg.eigh((h + h.conj().T) / 2)
        x = vecs[:, -1]
        value = float(_radius_values(stack, x[None, :])[0])
        return QuantityResult(value, Method.SPHERE_MULTISTART, x, res.accuracy)
    if n == 2:
        xs = _radius_grid_starts(stack, cfg)
    else:
        # start k: top eigenvector of Re(sum conj(mu_i) T_i) for a random unit mu
        rng = np.random.default_rng(cfg.seed)
        mu = _random_unit(rng, (cfg.multistart_count, m))
        xs = _top_eigvecs(np.einsum("km,mij->kij", mu.conj(), stack))
    return _euclidean_radius_ascent(stack, xs, scale, cfg)


def _radius_grid_starts(stack, cfg):
    """Best points of a (t, phi) grid over ``x = (cos t, e^{i phi} sin t)``.

    The grid is four times coarser per angle than ``coarse_points``: it only
    seeds the ascent, which then converges to the nearby local maximum.
    """
    n_phi = max(8, int(cfg.coarse_points) // _START_GRID_COARSENING)
    t = np.linspace(0.0, np.pi / 2, n_phi // 4 + 1)
    phi = np.arange(n_phi) * (TWO_PI / n_phi)
    vals = _dim2_radius(stack, t[:, None], phi[None, :])
    return np.array([_unit_x(t[i], phi[j]) for i, j in _grid_candidates(vals, _KEEP_AFTER_PRUNE)])


def _top_eigvecs(h: np.ndarray) -> np.ndarray:
    hs = (h + np.conj(np.swapaxes(h, -1, -2))) / 2
    _, vecs = np.linalg.eigh(hs)
    return vecs[..., :, -1]


def _random_unit(rng, shape) -> np.ndarray:
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return z / np.linalg.norm(z, axis=-1, keepdims=True)


def _tail_estimate(history: list[float]) -> float:
    """Geometric-series bound on the remaining ascent from the last improvements."""
    if len(history) < 2:
        return history[-1] if history else 0.0
    d_prev, d_last = history[-2], history[-1]
    if d_last <= 0.0:
        return 0.0
    r = d_last / d_prev if d_prev > 0 else 1.0
    if r >= 0.999:
        return 1000.0 * d_last
    return d_last * r / (1.0 - r)


def _ascend(step, values, state, cfg):
    """Run a batched monotone ascent and return the best start's final state.

    ``step(state) -> (state, values)`` performs one iteration for every start.
    Starts are pruned to the most promising few after a short warm-up.  The
    run stops once the best start's projected remaining gain is below
    ``_ASCENT_TAIL_FACTOR * refine_tol`` (relative) and no other start is
    projected to overtake it.
    """
    history = [[] for _ in range(len(values))]
    for it in range(cfg.max_iters):
        if it == _PRUNE_AFTER and len(values) > _KEEP_AFTER_PRUNE:
            keep = np.argsort(-values, kind="stable")[:_KEEP_AFTER_PRUNE]
            state = tuple(s[keep] for s in state)
            values = values[keep]
            history = [history[k] for k in keep]
        state, new_values = step(state)
        gain = new_values - values
        for k, d in enumerate(gain):
            history[k].append(max(float(d), 0.0))
        values = np.maximum(new_values, values)
        best = int(np.argmax(values))
        top = float(values[best])
        if _tail_estimate(history[best]) > _ASCENT_TAIL_FACTOR * cfg.refine_tol * (1.0 + abs(top)):
            continue
        tails = np.array([_tail_estimate(h) for h in history])
        if np.all((values + tails < top) | (gain < cfg.refine_tol * (1.0 + np.abs(values)))):
            break
    k = int(np.argmax(values))
    return tuple(s[k] for s in state), float(values[k]), _tail_estimate(history[k])


def _euclidean_radius_ascent(stack, xs, scale, cfg):
    """Alternate ``mu = c / |c|`` (c_i = <Ti x, x>) with ``x`` = top eigenvector
    of ``Re(sum conj(mu_i) Ti)``; each half-step cannot decrease the objective."""
    m, n, _ = stack.shape
    values = _radius_values(stack, xs)

    def step(state):
        (x,) = state
        c = np.einsum("ki,mij,kj->km", x.conj(), stack, x)
        norms = np.linalg.norm(c, axis=1, keepdims=True)
        mu = np.where(norms > 0, c / np.where(norms > 0, norms, 1.0), 1.0 / np.sqrt(m))
        x = _top_eigvecs(np.einsum("km,mij->kij", mu.conj(), stack))
        return (x,), _radius_values(stack, x)

    (x,), _, tail = _ascend(step, values, (xs,), cfg)
    value = float(_radius_values(stack, x[None, :])[0])
    acc = tail + cfg.refine_tol * (1.0 + value) + _roundoff(n, scale**2)
    return QuantityResult(value, Method.SPHERE_MULTISTART, x, acc)


def euclidean_norm(ts: Sequence, cfg: SweepConfig = DEFAULT_CONFIG) -> QuantityResult:
    """||(T1, ..., Tn)||_e; the witness is the maximizing coefficient tuple."""
    stack = _as_tuple(ts)
    return _euclidean_norm(stack, cfg)


def _norm_values(stack, lam):
    return _sigma_max_batch(np.einsum("km,mij->kij", lam, stack))


def _euclidean_norm(stack: np.ndarray, cfg: SweepConfig) -> QuantityResult:
    m, n, _ = stack.shape
    scale = float(np.sqrt(sum(np.linalg.norm(t, 2) ** 2 for t in stack)))
    if m == 1:
        lam = np.ones(1, dtype=np.complex128)
        value = float(np.linalg.norm(stack[0], 2))
        return QuantityResult(value, Method.LAMBDA_BALL_SWEEP, lam, _roundoff(n, scale))
    if scale == 0.0:
        lam = np.eye(m, dtype=np.complex128)[0]
        return QuantityResult(0.0, Method.LAMBDA_BALL_SWEEP, lam, 0.0)
    if m == 2:
        starts = _norm_grid_starts(stack, cfg)
        method = Method.LAMBDA_BALL_SWEEP
    else:
        rng = np.random.default_rng(cfg.seed)
        starts = _random_unit(rng, (cfg.multistart_count, m))
        method = Method.SPHERE_MULTISTART

    def step(state):
        (lam,) = state
        u, _, vh = np.linalg.svd(np.einsum("km,mij->kij", lam, stack))
        y, x = u[:, :, 0], vh[:, 0, :].conj()
        c = np.einsum("ki,mij,kj->km", y.conj(), stack, x)
        norms = np.linalg.norm(c, axis=1, keepdims=True)
        lam = np.where(norms > 0, c.conj() / np.where(norms > 0, norms, 1.0), lam)
        return (lam,), _norm_values(stack, lam)

    (lam,), _, tail = _ascend(step, _norm_values(stack, starts), (starts,), cfg)
    value = float(np.linalg.norm(np.tensordot(lam, stack, axes=1), 2))
    acc = tail + cfg.refine_tol * (1.0 + value) + _roundoff(n, scale)
    return QuantityResult(value, method, lam, acc)


def _norm_grid_starts(stack, cfg):
    """Best points of a (t, phi) grid over ``lam = (cos t, e^{i phi} sin t)``.

    Dimension 2 evaluates closed-form singular values on a grid four times
    coarser per angle than ``coarse_points``; larger dimensions use a grid ten
    times coarser.  Every start is then polished by the alternating ascent.
    """
    n = stack.shape[1]
    coarsening = _START_GRID_COARSENING if n == 2 else 10
    n_phi = max(8, int(cfg.coarse_points) // coarsening)
    n_t = n_phi // 4 + 1
    t = np.linspace(0.0, np.pi / 2, n_t)
    phi = np.arange(n_phi) * (TWO_PI / n_phi)
    if n == 2:
        vals = _dim2_pair_sigma_max(stack[0], stack[1], t, phi)
    else:
        ct = np.cos(t)[:, None, None, None]
        st = (np.sin(t)[:, None] * np.exp(1j * phi)[None, :])[:, :, None, None]
        vals = _sigma_max_batch(ct * stack[0] + st * stack[1])
    cands = _grid_candidates(vals, _KEEP_AFTER_PRUNE)
    return np.array([[np.cos(t[i]), np.exp(1j * phi[j]) * np.sin(t[i])] for i, j in cands])


def _dim2_pair_sigma_max(a, b, t, phi):
    """``||cos t a + e^{i phi} sin t b||`` on the (t, phi) grid for 2x2 a, b.

    Frobenius norm and determinant of the combination are quadratic in the
    coefficients, so the closed-form singular value needs no per-point matrix.
    """
    ct, st = np.cos(t)[:, None], np.sin(t)[:, None]
    s = st * np.exp(1j * phi)[None, :]
    fa, fb = np.sum(np.abs(a) ** 2), np.sum(np.abs(b) ** 2)
    g = np.sum(a.conj() * b)
    fro2 = ct * ct * fa + st * st * fb + 2.0 * ct * np.real(s * g)
    det_a = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    det_b = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    mixed = a[0, 0] * b[1, 1] + a[1, 1] * b[0, 0] - a[0, 1] * b[1, 0] - a[1, 0] * b[0, 1]
    det = ct * ct * det_a + ct * s * mixed + s * s * det_b
    disc = np.maximum(fro2 * fro2 - 4.0 * (det.real**2 + det.imag**2), 0.0)
    return np.sqrt(np.maximum((fro2 + np.sqrt(disc)) / 2, 0.0))


# ---------------------------------------------------------------------------
# oracles


def euclidean_norm_xy_oracle(ts: Sequence, samples: int = 100_000, seed: int = 0) -> float:
    """Lower estimate of ||(T1..Tn)||_e from the two-vector formula.

    Samples random unit pairs ``(x, y)``, keeps the best few and polishes them
    with BFGS on the real coordinates of ``(x, y)``.
    """
    stack = _as_tuple(ts)
    samples = int(samples)
    if samples < 1:
        raise ValueError("samples must be positive")
    n = stack.shape[1]
    rng = np.random.default_rng(seed)

    def values(x, y):
        c = np.einsum("ki,mij,kj->km", y.conj(), stack, x)
        return np.sqrt(np.sum(c.real**2 + c.imag**2, axis=1))

    best_pairs = []
    chunk = 20_000
    done = 0
    while done < samples:
        k = min(chunk, samples - done)
        x = _random_unit(rng, (k, n))
        y = _random_unit(rng, (k, n))
        v = values(x, y)
        top = np.argsort(-v)[:5]
        best_pairs.extend((float(v[i]), x[i], y[i]) for i in top)
        done += k
    best_pairs.sort(key=lambda p: -p[0])

    def unpack(z):
        x = z[:n] + 1j * z[n : 2 * n]
        y = z[2 * n : 3 * n] + 1j * z[3 * n :]
        return x / np.linalg.norm(x), y / np.linalg.norm(y)

    def negative(z):
        x, y = unpack(z)
        return -float(values(x[None, :], y[None, :])[0])

    best = best_pairs[0][0]
    for _, x, y in best_pairs[:5]:
        z0 = np.concatenate([x.real, x.imag, y.real, y.imag])
        res = minimize(negative, z0, method="BFGS", options={"gtol": 1e-12})
        best = max(best, -float(res.fun))
    return best


def omega_e_grid_oracle(ts: Sequence, grid: int = 400) -> float:
    """Plain grid maximum of the omega_e objective for 2x2 inputs.

    ``x = (cos t, e^{i phi} sin t)`` with ``grid`` values of t in [0, pi/2]
    and ``2 * grid`` values of phi in [0, 2 pi); no refinement.
    """
    stack = _as_tuple(ts)
    if stack.shape[1] != 2:
        raise InvalidMatrixError("the grid oracle is defined for 2x2 matrices only")
    grid = int(grid)
    if grid < 2:
        raise ValueError("grid must be at least 2")
    t = np.linspace(0.0, np.pi / 2, grid)
    phi = np.arange(2 * grid) * (np.pi / grid)
    return float(np.max(_dim2_radius(stack, t[:, None], phi[None, :])))
