"""Dense complex linear algebra for small multi-qubit registers.

Operators and states are plain complex numpy arrays.  The register
convention used throughout the package: qubit 1 is the most significant
bit of the computational-basis index, so ``|q1 q2 ... qn>`` sits at index
``q1*2^(n-1) + ... + qn``.  Dimensions never exceed 32x32 (five qubits),
so everything below is unapologetically dense.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .errors import ValidationError

# Acceptance window for "Hermitian within rounding" inputs.
HERMITICITY_TOL = 1e-9
# Eigenvalues of a nominally PSD matrix may dip this far below zero
# before the input is rejected; anything above is clamped to 0.
PSD_FLOOR = -1e-9


def qmatrix(entries) -> np.ndarray:
    """Coerce to a validated 2-D complex matrix (finite entries, nonzero dims)."""
    mat = np.asarray(entries, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] < 1 or mat.shape[1] < 1:
        raise ValidationError(f"expected a 2-D matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat.real)) or not np.all(np.isfinite(mat.imag)):
        raise ValidationError("matrix entries must be finite")
    return mat


def qvector(entries, *, state: bool = False) -> np.ndarray:
    """Coerce to a 1-D complex vector; when ``state`` is set, require unit norm.

    State vectors must be normalized to within 1e-9.
    """
    vec = np.asarray(entries, dtype=complex)
    if vec.ndim != 1 or vec.shape[0] < 1:
        raise ValidationError(f"expected a 1-D vector, got shape {vec.shape}")
    if not np.all(np.isfinite(vec.real)) or not np.all(np.isfinite(vec.imag)):
        raise ValidationError("vector entries must be finite")
    if state:
        norm = np.linalg.norm(vec)
        if abs(norm - 1.0) > 1e-9:
            raise ValidationError(f"state vector norm {norm} deviates from 1")
    return vec


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a = qmatrix(a)
    b = qmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValidationError(
            f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; ``a`` supplies the more significant block index."""
    return np.kron(qmatrix(a), qmatrix(b))


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def partial_trace(
    rho: np.ndarray, dims: Sequence[int], traced: Iterable[int]
) -> np.ndarray:
    """Trace out the subsystems listed in ``traced``.

    Parameters
    ----------
    rho : square matrix over the full register.
    dims : sizes of the subsystems, in register order; their product must
        equal the matrix dimension.
    traced : indices (0-based, in register order) of subsystems to remove.

    The reduced operator keeps the remaining subsystems in their original
    order.  Tracing out everything yields a 1x1 matrix holding tr(rho).
    """
    rho = qmatrix(rho)
    dims = [int(d) for d in dims]
    if rho.shape[0] != rho.shape[1]:
        raise ValidationError("partial trace requires a square matrix")
    if any(d < 1 for d in dims) or int(np.prod(dims)) != rho.shape[0]:
        raise ValidationError(
            f"subsystem dims {dims} do not factor dimension {rho.shape[0]}"
        )
    traced = sorted(set(int(i) for i in traced))
    if traced and (traced[0] < 0 or traced[-1] >= len(dims)):
        raise ValidationError(f"traced indices {traced} out of range for {len(dims)} subsystems")

    work = rho.reshape(dims + dims)
    remaining = list(dims)
    for idx in reversed(traced):
        work = np.trace(work, axis1=idx, axis2=idx + len(remaining))
        del remaining[idx]
    kept_dim = int(np.prod(remaining)) if remaining else 1
    return work.reshape(kept_dim, kept_dim)


def _require_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = qmatrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValidationError("expected a square matrix")
    dev = np.abs(a - a.conj().T).max()
    if dev > tol:
        raise ValidationError(f"matrix deviates from Hermitian by {dev:.3e} (> {tol:.0e})")
    # symmetrize to absorb rounding from chained products
    return (a + a.conj().T) / 2


def herm_eigvals(a: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    sym = _require_hermitian(a)
    return np.linalg.eigvalsh(sym)[::-1]


def psd_sqrt(a: np.ndarray) -> np.ndarray:
    """Hermitian square root B of a PSD matrix, with B @ B == a.

    Eigenvalues in [PSD_FLOOR, 0) are clamped to zero; anything below the
    floor is rejected.
    """
    sym = _require_hermitian(a)
    evals, vecs = np.linalg.eigh(sym)
    if evals.min() < PSD_FLOOR:
        raise ValidationError(
            f"matrix has eigenvalue {evals.min():.3e} below the PSD floor {PSD_FLOOR:.0e}"
        )
    evals = np.clip(evals, 0.0, None)
    return (vecs * np.sqrt(evals)) @ vecs.conj().T


def density_operator(
    mat: np.ndarray,
    *,
    herm_tol: float = HERMITICITY_TOL,
    trace_tol: float = 1e-9,
    eig_floor: float = -1e-10,
) -> np.ndarray:
    """Validate a density operator: Hermitian, unit trace, PSD.

    Returns the symmetrized matrix so downstream eigen-decompositions see
    an exactly Hermitian input.
    """
    sym = _require_hermitian(mat, tol=herm_tol)
    tr = np.trace(sym).real
    if abs(tr - 1.0) > trace_tol:
        raise ValidationError(f"density operator trace {tr} deviates from 1")
    low = np.linalg.eigvalsh(sym).min()
    if low < eig_floor:
        raise ValidationError(f"density operator has eigenvalue {low:.3e} below {eig_floor:.0e}")
    return sym
