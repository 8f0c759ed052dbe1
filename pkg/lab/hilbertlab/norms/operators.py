"""
Operator registry and dense materialization.

Operators act on grid-cell values. A vector-valued function with values in
R^d is stacked cell-major (entry c*d + i holds component i of cell c), so the
materialized matrix is kron(M, I_d) for the scalar matrix M.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Union
import logging
import math

import numpy as np

from hilbertlab.dyadic.haar import HaarExpansion, analyze, synthesize
from hilbertlab.dyadic.operators import (
    alpha_from_array,
    alpha_from_levels,
    apply_classical_shift,
    apply_martingale_transform,
    apply_S0,
    apply_Talpha,
)
from hilbertlab.exceptions import AccuracyError, MalformedInputError, UnknownOperatorError
from hilbertlab.schemas.dyadic import DyadicInterval
from hilbertlab.schemas.space import SpaceDescriptor

logger = logging.getLogger(__name__)

# builder(depth, grid, **params) -> scalar (n, n) matrix
MatrixBuilder = Callable[..., np.ndarray]


@dataclass(frozen=True)
class OperatorMatrix:
    """A dense real matrix acting on stacked cell values, with its provenance."""

    name: str
    matrix: np.ndarray
    n_cells: int
    dim: int = 1
    depth: Optional[int] = None

    def __post_init__(self):
        matrix = np.ascontiguousarray(self.matrix, dtype=float)
        size = self.n_cells * self.dim
        if matrix.shape != (size, size):
            raise MalformedInputError(
                "matrix does not match the cell count and dimension",
                {"shape": matrix.shape, "expected": (size, size)},
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def transpose(self) -> "OperatorMatrix":
        return OperatorMatrix(
            f"{self.name}^t",
            np.ascontiguousarray(self.matrix.T),
            self.n_cells,
            self.dim,
            self.depth,
        )


def haar_operator_matrix(transform: Callable[[HaarExpansion], HaarExpansion], depth: int) -> np.ndarray:
    """
    Column j is the synthesized image of the indicator of cell j.

    The whole identity is analyzed at once as a (2^(K+1))-dimensional expansion.
    """
    n = 1 << (depth + 1)
    return synthesize(transform(analyze(np.eye(n))))


def hilbert_matrix(grid: int) -> np.ndarray:
    """
    The multiplier -i sgn(n) on Z_N as a real skew-symmetric matrix.

    The Nyquist entry is set to 0.
    """
    if grid < 2 or grid & (grid - 1):
        raise MalformedInputError("grid must be a power of two >= 2", {"grid": grid})
    frequencies = np.fft.fftfreq(grid) * grid
    symbol = -1j * np.sign(frequencies)
    symbol[grid // 2] = 0.0
    matrix = np.real(np.fft.ifft(symbol[:, None] * np.fft.fft(np.eye(grid), axis=0), axis=0))
    return (matrix - matrix.T) / 2.0


def _alpha_mapping(depth: int, alpha=None) -> Mapping[DyadicInterval, int]:
    if alpha is None:
        return alpha_from_levels(depth, [1] * (depth + 1))
    if isinstance(alpha, Mapping):
        return alpha
    return alpha_from_array(depth, np.asarray(alpha))


def _require_depth(name: str, depth: Optional[int]) -> int:
    if depth is None:
        raise MalformedInputError(f"operator '{name}' needs a depth")
    return depth


def _build_S0(depth=None, grid=None, **_) -> np.ndarray:
    return haar_operator_matrix(apply_S0, _require_depth("S0", depth))


def _build_Talpha(depth=None, grid=None, alpha=None, **_) -> np.ndarray:
    depth = _require_depth("T_alpha", depth)
    mapping = _alpha_mapping(depth, alpha)
    return haar_operator_matrix(lambda e: apply_Talpha(mapping, e), depth)


def _build_martingale_transform(depth=None, grid=None, level_signs=None, **_) -> np.ndarray:
    depth = _require_depth("martingale_transform", depth)
    signs = [1] * (depth + 1) if level_signs is None else list(level_signs)
    return haar_operator_matrix(lambda e: apply_martingale_transform(signs, e), depth)


def _build_classical_shift(depth=None, grid=None, **_) -> np.ndarray:
    return haar_operator_matrix(apply_classical_shift, _require_depth("classical_shift", depth))


def _build_identity(depth=None, grid=None, **_) -> np.ndarray:
    n = grid if depth is None else 1 << (depth + 1)
    if n is None:
        raise MalformedInputError("identity needs a depth or a grid size")
    return np.eye(n)


def _build_hilbert(depth=None, grid=None, **_) -> np.ndarray:
    if grid is None:
        raise MalformedInputError("operator 'hilbert' needs a grid size")
    return hilbert_matrix(grid)


class OperatorFactory:
    """
    Registry of named operators that can be materialized.

    Haar operators take a depth K (2^(K+1) cells); the circle Hilbert
    transform takes a grid size N.
    """

    _operators: Dict[str, MatrixBuilder] = {
        "S0": _build_S0,
        "T_alpha": _build_Talpha,
        "martingale_transform": _build_martingale_transform,
        "classical_shift": _build_classical_shift,
        "identity": _build_identity,
        "hilbert": _build_hilbert,
    }

    @classmethod
    def get_operator(cls, name: str) -> MatrixBuilder:
        """
        Raises:
            UnknownOperatorError: If no operator is registered under the name
        """
        builder = cls._operators.get(name.strip())
        if builder is None:
            raise UnknownOperatorError(
                f"Unknown operator: '{name}'",
                {"available": ", ".join(cls._operators)},
            )
        return builder

    @classmethod
    def register_operator(cls, name: str, builder: MatrixBuilder):
        if not callable(builder):
            raise ValueError(f"Operator builder for '{name}' must be callable")
        cls._operators[name] = builder
        logger.info(f"✅ Registered operator: {name}")

    @classmethod
    def list_operators(cls) -> List[str]:
        return list(cls._operators.keys())


def materialize(
    op: str,
    depth: Optional[int] = None,
    space: Union[SpaceDescriptor, None] = None,
    grid: Optional[int] = None,
    **params,
) -> OperatorMatrix:
    """
    Dense matrix of a registered operator, block-diagonal across the d components.

    Args:
        op: Registered operator name
        depth: Truncation depth K for Haar operators
        space: Target space; only its dimension matters here
        grid: Grid size N for the circle Hilbert transform
        **params: Operator parameters (alpha for T_alpha, level_signs for martingale_transform)
    """
    builder = OperatorFactory.get_operator(op)
    scalar = builder(depth=depth, grid=grid, **params)
    dim = space.dim if space is not None else 1
    matrix = scalar if dim == 1 else np.kron(scalar, np.eye(dim))
    logger.debug(f"Materialized {op} on {scalar.shape[0]} cells (dim {dim})")
    return OperatorMatrix(op, matrix, scalar.shape[0], dim, depth)


def norm_2_exact(m: Union[OperatorMatrix, np.ndarray]) -> float:
    """
    Largest singular value from the symmetric eigenproblem of m^t m.

    Raises:
        AccuracyError: If the eigensolver does not converge
    """
    matrix = m.matrix if isinstance(m, OperatorMatrix) else np.asarray(m, dtype=float)
    try:
        eigenvalues = np.linalg.eigvalsh(matrix.T @ matrix)
    except np.linalg.LinAlgError as exc:
        raise AccuracyError("symmetric eigensolver did not converge", achieved=math.inf, target=1e-12) from exc
    if eigenvalues.shape[0] == 0:
        return 0.0
    return math.sqrt(max(float(eigenvalues[-1]), 0.0))


def singular_values(m: Union[OperatorMatrix, np.ndarray]) -> np.ndarray:
    matrix = m.matrix if isinstance(m, OperatorMatrix) else np.asarray(m, dtype=float)
    return np.linalg.svd(matrix, compute_uv=False)
