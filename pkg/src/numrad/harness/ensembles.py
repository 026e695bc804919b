"""Seeded random matrix ensembles."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

ACCRETIVE_SHIFT = 0.01


class Structure(str, enum.Enum):
    GENERAL_COMPLEX = "general_complex"
    REAL_INTEGER = "real_integer"
    HERMITIAN = "hermitian"
    NORMAL = "normal"
    UNITARY = "unitary"
    SQUARE_ZERO = "square_zero"
    ACCRETIVE_DISSIPATIVE = "accretive_dissipative"


# the ensemble that certifies each registry precondition
PRECONDITION_STRUCTURE = {
    "hermitian": Structure.HERMITIAN,
    "normal": Structure.NORMAL,
    "square_zero": Structure.SQUARE_ZERO,
    "accretive_dissipative": Structure.ACCRETIVE_DISSIPATIVE,
}


@dataclass(frozen=True)
class EnsembleSpec:
    """A random matrix class.  ``lo``/``hi`` bound the real_integer entries."""

    dim: int
    structure: Structure = Structure.GENERAL_COMPLEX
    scale: float = 1.0
    lo: int = -5
    hi: int = 5

    def __post_init__(self):
        object.__setattr__(self, "structure", Structure(self.structure))
        if int(self.dim) < 1:
            raise ValueError("dim must be positive")
        if not self.scale > 0:
            raise ValueError("scale must be positive")
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")


def _uniform_complex(rng, shape, scale):
    return rng.uniform(-scale, scale, shape) + 1j * rng.uniform(-scale, scale, shape)


def random_unitary(rng, n: int) -> np.ndarray:
    """QR of a complex Gaussian matrix with the phases of R's diagonal removed."""
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    phases = np.where(np.abs(d) > 0, d / np.where(np.abs(d) > 0, np.abs(d), 1.0), 1.0)
    return q * phases


def generate_matrix(spec: EnsembleSpec, seed) -> np.ndarray:
    """Draw one matrix of ``spec``; deterministic in ``(spec, seed)``.

    ``seed`` is anything :func:`numpy.random.default_rng` accepts (an int, a
    sequence of ints, a SeedSequence).
    """
    rng = np.random.default_rng(seed)
    return _draw(spec, rng)


def _draw(spec: EnsembleSpec, rng) -> np.ndarray:
    n, s = int(spec.dim), float(spec.scale)
    kind = spec.structure
    if kind is Structure.GENERAL_COMPLEX:
        out = _uniform_complex(rng, (n, n), s)
    elif kind is Structure.REAL_INTEGER:
        out = rng.integers(spec.lo, spec.hi, size=(n, n), endpoint=True).astype(np.complex128)
    elif kind is Structure.HERMITIAN:
        g = _uniform_complex(rng, (n, n), s)
        out = (g + g.conj().T) / 2
    elif kind is Structure.NORMAL:
        u = random_unitary(rng, n)
        d = _uniform_complex(rng, n, s)
        out = (u * d) @ u.conj().T
    elif kind is Structure.UNITARY:
        out = random_unitary(rng, n)
    elif kind is Structure.SQUARE_ZERO:
        out = _square_zero(rng, n, s)
    elif kind is Structure.ACCRETIVE_DISSIPATIVE:
        g1 = _uniform_complex(rng, (n, n), s)
        g2 = _uniform_complex(rng, (n, n), s)
        eye = np.eye(n)
        out = (g1 @ g1.conj().T + ACCRETIVE_SHIFT * eye) + 1j * (g2 @ g2.conj().T + ACCRETIVE_SHIFT * eye)
    else:  # pragma: no cover - Structure is closed
        raise ValueError(kind)
    out = np.asarray(out, dtype=np.complex128)
    out.setflags(write=False)
    return out


def _square_zero(rng, n, scale):
    """``u v*`` with ``v* u = 0``, so the square ``u (v* u) v*`` vanishes."""
    if n == 1:
        return np.zeros((1, 1), dtype=np.complex128)
    u = _uniform_complex(rng, n, 1.0)
    v = _uniform_complex(rng, n, 1.0)
    u /= np.linalg.norm(u)
    v = v - u * np.vdot(u, v)
    v /= np.linalg.norm(v)
    size = scale * rng.uniform(0.5, 1.5)
    return size * np.outer(u, v.conj())
