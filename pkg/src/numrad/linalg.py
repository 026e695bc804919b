"""Dense complex matrix kernel.

Matrices are plain ``numpy`` complex128 arrays that are validated on entry
and returned read-only, so every function here behaves as a pure function of
its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidMatrixError,
    NotHermitianError,
    NotPSDError,
)

# relative tolerance used by every structural predicate
REL_TOL = 1e-10

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def as_matrix(m) -> np.ndarray:
    """Validate ``m`` as a finite square matrix and return a read-only copy."""
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise InvalidMatrixError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidMatrixError("matrix has non-finite entries")
    return _freeze(a)


def as_vector(x) -> np.ndarray:
    v = np.array(x, dtype=np.complex128)
    if v.ndim != 1 or v.size < 1:
        raise InvalidMatrixError(f"expected a non-empty vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidMatrixError("vector has non-finite entries")
    return _freeze(v)


def _same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"incompatible operands {a.shape} and {b.shape}")


def adjoint(m) -> np.ndarray:
    a = as_matrix(m)
    return _freeze(a.conj().T.copy())


def multiply(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return _freeze(a @ b)


@dataclass(frozen=True)
class HermitianEigen:
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def jacobi_eigh(h: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Cyclic complex Jacobi eigensolver for a Hermitian matrix.

    Each rotation first removes the phase of the pivot ``h[p, q]`` and then
    applies the classical real rotation.  Iterates until the off-diagonal
    Frobenius mass drops below ``tol * (1 + ||h||_F)``.

    Returns ``(eigenvalues, eigenvectors)`` sorted ascending.
    """
    a = np.array(h, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    scale = 1.0 + np.linalg.norm(a)
    target = tol * scale
    for _ in range(max_sweeps):
        # summed directly: ||a||_F^2 - ||diag a||^2 would cancel catastrophically
        off = np.linalg.norm(a[~np.eye(n, dtype=bool)])
        if off < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= 1e-300 or r < 1e-18 * scale:
                    continue
                phase = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                upp, upq = c, s
                uqp, uqq = -s * np.conj(phase), c * np.conj(phase)

                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = cp * upp + cq * uqp
                a[:, q] = cp * upq + cq * uqq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = np.conj(upp) * rp + np.conj(uqp) * rq
                a[q, :] = np.conj(upq) * rp + np.conj(uqq) * rq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = vp * upp + vq * uqp
                v[:, q] = vp * upq + vq * uqq
    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _hermitian_part(h: np.ndarray) -> np.ndarray:
    scale = 1.0 + np.max(np.abs(h))
    if np.max(np.abs(h - h.conj().T)) > REL_TOL * scale:
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    return (h + h.conj().T) / 2


def hermitian_eigen(h, method: str = "lapack") -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    ``method`` selects the solver: ``"lapack"`` (numpy's ``eigh``) or
    ``"jacobi"`` (:func:`jacobi_eigh`).  The input is symmetrized first.
    """
    hs = _hermitian_part(as_matrix(h))
    if method == "lapack":
        w, v = np.linalg.eigh(hs)
    elif method == "jacobi":
        w, v = jacobi_eigh(hs)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return HermitianEigen(_freeze(np.asarray(w, dtype=float)), _freeze(np.asarray(v)))


def lambda_max(h: np.ndarray) -> float:
    """Largest eigenvalue of a Hermitian matrix (no validation; internal)."""
    return float(np.linalg.eigvalsh(h)[-1])


def psd_sqrt(h, method: str = "lapack") -> np.ndarray:
    """Positive semidefinite square root.

    Eigenvalues in ``[-1e-10 (1 + ||h||), 0)`` are treated as roundoff and
    clamped to zero; anything more negative raises :class:`NotPSDError`.
    """
    eig = hermitian_eigen(h, method=method)
    w = eig.eigenvalues
    scale = 1.0 + float(np.max(np.abs(w)))
    if w[0] < -REL_TOL * scale:
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e}, not positive semidefinite")
    root = np.sqrt(np.clip(w, 0.0, None))
    v = eig.eigenvectors
    out = (v * root) @ v.conj().T
    return _freeze((out + out.conj().T) / 2)


def matrix_abs(m) -> np.ndarray:
    """``|m| = (m* m)^(1/2)``.

    Built from the SVD ``m = U S V*`` as ``V S V*``, which equals
    ``psd_sqrt(m* m)`` but keeps full relative accuracy in the small
    singular directions that forming ``m* m`` would lose.
    """
    a = as_matrix(m)
    _, s, vh = np.linalg.svd(a)
    out = (vh.conj().T * s) @ vh
    return _freeze((out + out.conj().T) / 2)


def operator_norm(m) -> float:
    """Largest singular value, as ``sqrt(lambda_max(m* m))``."""
    a = as_matrix(m)
    return float(np.sqrt(max(lambda_max(a.conj().T @ a), 0.0)))


def cartesian_parts(m) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(Re m, Im m) = ((m + m*)/2, (m - m*)/(2i))``.

    Division by ``2i`` is done componentwise (halving and a swap), which is
    exact, rather than by complex division, which is not.
    """
    a = as_matrix(m)
    ah = a.conj().T
    re = (a + ah) / 2
    d = a - ah
    im = d.imag / 2 - 1j * (d.real / 2)
    return _freeze(re), _freeze(im)


def block_antidiag(a, b) -> np.ndarray:
    """The ``2n x 2n`` operator matrix ``[[0, a], [b*, 0]]``."""
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    n = a.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    out[:n, n:] = a
    out[n:, :n] = b.conj().T
    return _freeze(out)


@dataclass(frozen=True)
class StructureFlags:
    is_hermitian: bool
    is_normal: bool
    is_square_zero: bool
    is_accretive_dissipative: bool

    def satisfies(self, name: str) -> bool:
        """Check a precondition by name (``"none"`` always holds)."""
        if name == "none":
            return True
        try:
            return bool(getattr(self, "is_" + name))
        except AttributeError:
            raise ValueError(f"unknown structural predicate {name!r}") from None


def classify(m) -> StructureFlags:
    a = as_matrix(m)
    tol = REL_TOL * (1.0 + operator_norm(a))
    ah = a.conj().T
    hermitian = np.linalg.norm(a - ah, 2) <= tol
    normal = np.linalg.norm(ah @ a - a @ ah, 2) <= tol
    square_zero = np.linalg.norm(a @ a, 2) <= tol
    re, im = cartesian_parts(a)
    accretive_dissipative = (
        np.linalg.eigvalsh(re)[0] >= -tol and np.linalg.eigvalsh(im)[0] >= -tol
    )
    return StructureFlags(
        is_hermitian=bool(hermitian),
        is_normal=bool(normal),
        is_square_zero=bool(square_zero),
        is_accretive_dissipative=bool(accretive_dissipative),
    )
