"""Kernel catalogue and Gram matrix construction.

A ``VectorSet`` holds m vectors of C^n as the rows of an (m, n) complex128
array.  ``KernelSpec`` names one of the supported positive-semidefinite
kernels (homogeneous polynomial, shifted polynomial, Gaussian), and
``gram_matrix`` evaluates the pairwise kernel table with exact Hermitian
symmetry: only the upper triangle is computed, the lower is its conjugate
mirror.

Inner-product convention, used everywhere in this package: conjugate-linear
in the FIRST argument, <x, y> = x^H y.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .linalg import EigenSpectrum, clamp_psd, hermitian_eigenvalues, numerical_rank

_FIELDS = ("real", "complex")


@dataclass(frozen=True)
class VectorSet:
    """m vectors in C^n, stored as rows of an (m, n) complex128 array.

    field tags the intended scalar field: when it is "real" every imaginary
    part must be exactly zero.  labels, when given, name the vectors 1:1.
    """

    vectors: np.ndarray
    field: str = "complex"
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        arr = np.array(self.vectors, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("vectors must form a 2-D array, at least 1x1")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("vector entries must be finite")
        if self.field not in _FIELDS:
            raise ValueError(f"field must be one of {_FIELDS}, got {self.field!r}")
        if self.field == "real" and np.any(arr.imag != 0.0):
            raise ValueError("field='real' requires exactly zero imaginary parts")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != arr.shape[0]:
                raise ValueError("labels must match the number of vectors")
            object.__setattr__(self, "labels", labels)
        arr.flags.writeable = False
        object.__setattr__(self, "vectors", arr)

    @property
    def m(self) -> int:
        return self.vectors.shape[0]

    @property
    def n(self) -> int:
        return self.vectors.shape[1]

    def norms(self) -> np.ndarray:
        """Euclidean norm of each vector, as a length-m float array."""
        return np.sqrt(np.sum(self.vectors.real**2 + self.vectors.imag**2, axis=1))

    def fingerprint(self) -> str:
        """sha256 over field tag, shape, and raw entry bytes."""
        h = hashlib.sha256()
        h.update(self.field.encode())
        h.update(f"{self.m}x{self.n}".encode())
        h.update(np.ascontiguousarray(self.vectors).tobytes())
        return h.hexdigest()


@dataclass(frozen=True)
class KernelSpec:
    """One of the supported PSD kernels.

    variant "homogeneous": k(x, y) = <x, y>^p            (p >= 1)
    variant "shifted":     k(x, y) = (<x, y> + c)^p      (p >= 1, c >= 0)
    variant "gaussian":    k(x, y) = exp(-gamma |x-y|^2) (gamma > 0)

    The parameter ranges guarantee positive semidefiniteness.  Unused
    parameters stay None.
    """

    variant: str
    p: int | None = None
    c: float | None = None
    gamma: float | None = None

    def __post_init__(self):
        if self.variant in ("homogeneous", "shifted"):
            if not isinstance(self.p, int) or isinstance(self.p, bool) or self.p < 1:
                raise ValueError("polynomial kernels need an integer degree p >= 1")
            if self.gamma is not None:
                raise ValueError("gamma is only meaningful for the gaussian kernel")
            if self.variant == "homogeneous":
                if self.c is not None:
                    raise ValueError("homogeneous kernel takes no shift c")
            else:
                c = float(self.c)
                if not np.isfinite(c) or c < 0:
                    raise ValueError("shifted kernel needs a finite shift c >= 0")
                object.__setattr__(self, "c", c)
        elif self.variant == "gaussian":
            if self.p is not None or self.c is not None:
                raise ValueError("gaussian kernel takes only gamma")
            g = float(self.gamma)
            if not np.isfinite(g) or g <= 0:
                raise ValueError("gaussian kernel needs finite gamma > 0")
            object.__setattr__(self, "gamma", g)
        else:
            raise ValueError(f"unknown kernel variant {self.variant!r}")

    @classmethod
    def homogeneous(cls, p: int) -> "KernelSpec":
        return cls("homogeneous", p=p)

    @classmethod
    def shifted(cls, p: int, c: float) -> "KernelSpec":
        return cls("shifted", p=p, c=c)

    @classmethod
    def gaussian(cls, gamma: float) -> "KernelSpec":
        return cls("gaussian", gamma=gamma)

    @classmethod
    def linear(cls) -> "KernelSpec":
        """Alias: the homogeneous polynomial kernel with p = 1."""
        return cls("homogeneous", p=1)

    @property
    def is_polynomial(self) -> bool:
        return self.variant in ("homogeneous", "shifted")

    def describe(self) -> str:
        if self.variant == "homogeneous":
            return f"homogeneous p={self.p}"
        if self.variant == "shifted":
            return f"shifted p={self.p} c={self.c:g}"
        return f"gaussian gamma={self.gamma:g}"


@dataclass(frozen=True)
class GramMatrix:
    """Kernel table G[i, j] = k(x_i, x_j), exactly Hermitian by construction.

    The eigenvalue spectrum is computed lazily on first use and certified PSD
    (small negatives clamped, genuine ones rejected); repeated calls reuse the
    cached result.
    """

    matrix: np.ndarray
    kernel: KernelSpec
    source_fingerprint: str

    def __post_init__(self):
        a = np.array(self.matrix, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("Gram matrix must be square")
        if np.any(a.diagonal().imag != 0.0) or np.any(a.diagonal().real < 0.0):
            raise ValueError("Gram diagonal must be real and non-negative")
        a.flags.writeable = False
        object.__setattr__(self, "matrix", a)
        object.__setattr__(self, "_spectrum_cache", None)

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    def spectrum(self) -> EigenSpectrum:
        """Eigenvalues (descending), PSD-certified; cached after the first call."""
        cached = getattr(self, "_spectrum_cache")
        if cached is None:
            cached = clamp_psd(hermitian_eigenvalues(self.matrix))
            object.__setattr__(self, "_spectrum_cache", cached)
        return cached

    def rank(self) -> int:
        return numerical_rank(self.spectrum())


def _as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] < 1:
        raise ValueError("expected a 1-D vector")
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise ValueError("vector entries must be finite")
    return v


def inner_product(x, y) -> complex:
    """<x, y> = x^H y: conjugate-linear in the first argument."""
    xv = _as_vector(x)
    yv = _as_vector(y)
    if xv.shape != yv.shape:
        raise DimensionMismatchError(
            f"vectors have lengths {xv.shape[0]} and {yv.shape[0]}"
        )
    return complex(np.vdot(xv, yv))


def eval_kernel(spec: KernelSpec, x, y) -> complex:
    """k(x, y) for the given kernel; k(x, x) is always real >= 0."""
    if spec.variant == "homogeneous":
        return inner_product(x, y) ** spec.p
    if spec.variant == "shifted":
        return (inner_product(x, y) + spec.c) ** spec.p
    xv = _as_vector(x)
    yv = _as_vector(y)
    if xv.shape != yv.shape:
        raise DimensionMismatchError(
            f"vectors have lengths {xv.shape[0]} and {yv.shape[0]}"
        )
    d = xv - yv
    return complex(np.exp(-spec.gamma * np.vdot(d, d).real))


def gram_matrix(spec: KernelSpec, vs: VectorSet) -> GramMatrix:
    """G[i, j] = k(x_i, x_j), upper triangle evaluated, lower conjugate-mirrored."""
    m = vs.m
    g = np.zeros((m, m), dtype=np.complex128)
    rows = vs.vectors
    for i in range(m):
        g[i, i] = eval_kernel(spec, rows[i], rows[i]).real
        for j in range(i + 1, m):
            val = eval_kernel(spec, rows[i], rows[j])
            g[i, j] = val
            g[j, i] = np.conj(val)
    return GramMatrix(matrix=g, kernel=spec, source_fingerprint=vs.fingerprint())
