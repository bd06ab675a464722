"""States, projectors, and unitaries appearing in the teleportation scheme.

The sender holds an entangled two-qubit input pair (register positions 4
and 5) and shares a three-qubit channel (positions 1, 2, 3) with the two
receivers.  This module builds every operator the protocol needs: the
input projector, the Bell basis on qubits 3-4, the tunable single-qubit
basis on qubit 5, the GHZ/W channel states with an optional white-noise
admixture, and the Pauli matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ValidationError
from .qmat import qvector

TWO_PI = 2.0 * math.pi


class ChannelKind(str, Enum):
    GHZ = "ghz"
    W = "w"


@dataclass(frozen=True)
class InputSpec:
    """Bloch angles of the pure two-qubit input cos(t/2)|01> + e^{i p} sin(t/2)|10>.

    theta must lie strictly inside (0, pi): the boundary values describe the
    product states |01> and |10>, which carry no entanglement to teleport.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 < self.theta < math.pi):
            raise ValidationError(f"theta={self.theta} outside the open interval (0, pi)")
        if not (0.0 <= self.phi <= TWO_PI):
            raise ValidationError(f"phi={self.phi} outside [0, 2*pi]")


@dataclass(frozen=True)
class MeasurementSpec:
    """Angles (lam, mu) selecting the sender's single-qubit basis on qubit 5."""

    lam: float = 0.0
    mu: float = math.pi / 2

    def __post_init__(self) -> None:
        if not (0.0 <= self.lam <= TWO_PI):
            raise ValidationError(f"lambda={self.lam} outside [0, 2*pi]")
        if not (0.0 <= self.mu <= math.pi):
            raise ValidationError(f"mu={self.mu} outside [0, pi]")


@dataclass(frozen=True)
class ChannelSpec:
    """Three-qubit channel selection plus white-noise visibility.

    visibility w mixes the ideal channel with the maximally mixed state:
    w=1 is noiseless, w=0 leaves pure white noise I/8.
    """

    kind: ChannelKind
    visibility: float = 1.0

    def __post_init__(self) -> None:
        kind = ChannelKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if not (0.0 <= self.visibility <= 1.0):
            raise ValidationError(f"visibility w={self.visibility} outside [0, 1]")


_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
for _m in _PAULI:
    _m.setflags(write=False)


def pauli(b: int) -> np.ndarray:
    """Pauli matrix sigma^b for b in {0, 1, 2, 3} (identity, x, y, z)."""
    if b not in (0, 1, 2, 3):
        raise ValidationError(f"Pauli index {b} outside 0..3")
    return _PAULI[b]


def basis_ket(index: int, dim: int) -> np.ndarray:
    """Computational-basis ket |index> in a ``dim``-dimensional space."""
    vec = np.zeros(dim, dtype=complex)
    vec[index] = 1.0
    return vec


def _projector(vec: np.ndarray) -> np.ndarray:
    return np.outer(vec, vec.conj())


def input_ket(spec: InputSpec) -> np.ndarray:
    """State vector of the input pair on qubits 4, 5."""
    vec = np.zeros(4, dtype=complex)
    vec[0b01] = math.cos(spec.theta / 2)
    vec[0b10] = np.exp(1j * spec.phi) * math.sin(spec.theta / 2)
    return qvector(vec, state=True)


def input_state(spec: InputSpec) -> np.ndarray:
    """Rank-1 density operator of the input pair (4x4, unit trace)."""
    return _projector(input_ket(spec))


def bell_kets() -> list[np.ndarray]:
    """The four Bell states in the order Phi+, Phi-, Psi+, Psi-."""
    s = 1.0 / math.sqrt(2)
    return [
        qvector([s, 0, 0, s], state=True),
        qvector([s, 0, 0, -s], state=True),
        qvector([0, s, s, 0], state=True),
        qvector([0, s, -s, 0], state=True),
    ]


def bell_projectors() -> list[np.ndarray]:
    """Projectors onto the Bell basis, indexed j = 1..4 as list positions 0..3.

    They are mutually orthogonal and sum to the identity on two qubits.
    """
    return [_projector(v) for v in bell_kets()]


def nu_kets(spec: MeasurementSpec) -> list[np.ndarray]:
    """Orthonormal basis {nu+, nu-} on qubit 5 selected by (lam, mu).

    nu+ = cos(mu/2)|0> + e^{i lam} sin(mu/2)|1> and nu- is its orthogonal
    complement -sin(mu/2)|0> + e^{i lam} cos(mu/2)|1>.  The e^{+i lam}
    phase on nu- is required for orthogonality; with e^{-i lam} the pair
    would not resolve the identity for general lam.
    """
    c, s = math.cos(spec.mu / 2), math.sin(spec.mu / 2)
    phase = np.exp(1j * spec.lam)
    plus = qvector([c, phase * s], state=True)
    minus = qvector([-s, phase * c], state=True)
    return [plus, minus]


def nu_projectors(spec: MeasurementSpec) -> list[np.ndarray]:
    """Projectors onto nu+ and nu-, indexed k = 1..2 as list positions 0..1."""
    return [_projector(v) for v in nu_kets(spec)]


def ghz_ket() -> np.ndarray:
    """(|000> + |111>)/sqrt(2)."""
    s = 1.0 / math.sqrt(2)
    vec = np.zeros(8, dtype=complex)
    vec[0b000] = s
    vec[0b111] = s
    return vec


def w_ket() -> np.ndarray:
    """(|001> + |010> + |100>)/sqrt(3)."""
    s = 1.0 / math.sqrt(3)
    vec = np.zeros(8, dtype=complex)
    vec[0b001] = s
    vec[0b010] = s
    vec[0b100] = s
    return vec


def channel_state(spec: ChannelSpec) -> np.ndarray:
    """Channel density operator on qubits 1, 2, 3 with white-noise admixture.

    Returns w * |chi><chi| + (1 - w)/8 * I for chi the selected GHZ or W state.
    """
    chi = _projector(ghz_ket() if spec.kind is ChannelKind.GHZ else w_ket())
    w = spec.visibility
    return w * chi + (1.0 - w) / 8.0 * np.eye(8, dtype=complex)
