"""Shared helpers for the test suite: random vector sets and unitary maps."""

import numpy as np

from welchkit.kernels import VectorSet


def random_vectors(rng, m, n, field="complex", unit=False):
    """VectorSet with i.i.d. standard Gaussian entries, optionally normalized."""
    if field == "complex":
        a = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    else:
        a = rng.standard_normal((m, n)).astype(np.complex128)
    if unit:
        a = a / np.linalg.norm(a, axis=1, keepdims=True)
    return VectorSet(vectors=a, field=field)


def random_unitary(rng, n, reflections=4):
    """Unitary map of C^n composed from random Householder reflections."""
    u = np.eye(n, dtype=np.complex128)
    for _ in range(reflections):
        w = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        w = w / np.linalg.norm(w)
        u = u - 2.0 * np.outer(w, np.conj(w)) @ u
    return u


def apply_map(u, vs):
    """Transform every vector of the set by the matrix u (rows -> u @ row)."""
    return VectorSet(vectors=(u @ vs.vectors.T).T, field="complex")
