"""
L2-normalized Haar expansions of R^d-valued step functions on [0, 1).

A depth-K expansion stores its coefficients in a table of shape (2^(K+1), d):
row 0 is the mean <f>_{I0}, row 2^k + m is (f, h_I) for I = (k, m). The same
table length is the number of grid cells, 2^(K+1), on which the function is a
step function, so analyze / synthesize are square orthogonal changes of basis.

Sign convention: h_I = |I|^(-1/2) (chi_{I+} - chi_{I-}) with I+ the right half.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Tuple
import logging

import numpy as np

from hilbertlab.exceptions import MalformedInputError
from hilbertlab.schemas.dyadic import DyadicInterval, intervals_up_to

logger = logging.getLogger(__name__)


def haar_eval(interval: DyadicInterval, x: float) -> float:
    """
    Evaluate h_I at a point of [0, 1).

    Returns |I|^(-1/2) on the right half, -|I|^(-1/2) on the left half and
    0 outside I.
    """
    if not interval.contains(x):
        return 0.0
    scale = 2.0 ** (interval.depth / 2.0)
    midpoint = interval.left + interval.length / 2.0
    return scale if x >= midpoint else -scale


def depth_scales(depth: int) -> np.ndarray:
    """|I|^(-1/2) = 2^(k/2) for every table row (row 0 gets 1)."""
    rows = np.arange(1 << (depth + 1))
    levels = np.zeros(rows.shape, dtype=float)
    levels[1:] = np.floor(np.log2(rows[1:]))
    return 2.0 ** (levels / 2.0)


@dataclass(frozen=True)
class HaarExpansion:
    """Truncated R^d-valued Haar expansion of depth K (intervals of depth 0..K)."""

    table: np.ndarray  # shape (2^(K+1), d); row 0 mean, row 2^k+m coefficient

    def __post_init__(self):
        table = np.array(self.table, dtype=float)
        if table.ndim == 1:
            table = table[:, None]
        if table.ndim != 2:
            raise MalformedInputError("coefficient table must be 2-D", {"shape": table.shape})
        n = table.shape[0]
        if n < 2 or n & (n - 1):
            raise MalformedInputError(
                "table length must be a power of two >= 2", {"length": n}
            )
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    # ---------- constructors ----------

    @classmethod
    def zeros(cls, depth: int, dim: int = 1) -> "HaarExpansion":
        return cls(np.zeros((1 << (depth + 1), dim)))

    @classmethod
    def from_coefficients(
        cls,
        depth: int,
        coefficients: Mapping[DyadicInterval, object],
        mean: object = 0.0,
        dim: int = 1,
    ) -> "HaarExpansion":
        """
        Build from a sparse map interval -> coefficient vector.

        Args:
            depth: Truncation depth K
            coefficients: Map from intervals of depth <= K to scalars or d-vectors
            mean: <f>_{I0}
            dim: Dimension d of the value space
        """
        table = np.zeros((1 << (depth + 1), dim))
        table[0] = mean
        for interval, value in coefficients.items():
            if interval.depth > depth:
                raise MalformedInputError(
                    "coefficient below truncation depth",
                    {"interval": str(interval), "depth": depth},
                )
            table[interval.heap_index] = value
        return cls(table)

    @classmethod
    def random(
        cls, depth: int, dim: int, rng: np.random.Generator, reduced: bool = False
    ) -> "HaarExpansion":
        """Standard normal coefficients; `reduced` zeroes mean and (f, h_I0)."""
        table = rng.standard_normal((1 << (depth + 1), dim))
        if reduced:
            table[:2] = 0.0
        return cls(table)

    # ---------- shape ----------

    @property
    def depth(self) -> int:
        return self.table.shape[0].bit_length() - 2

    @property
    def dim(self) -> int:
        return self.table.shape[1]

    @property
    def n_cells(self) -> int:
        return self.table.shape[0]

    @property
    def mean(self) -> np.ndarray:
        return self.table[0]

    @property
    def coefficients(self) -> np.ndarray:
        """Rows 1.. of the table, i.e. (f, h_I) in heap order."""
        return self.table[1:]

    def coefficient(self, interval: DyadicInterval) -> np.ndarray:
        if interval.depth > self.depth:
            raise MalformedInputError(
                "interval below truncation depth",
                {"interval": str(interval), "depth": self.depth},
            )
        return self.table[interval.heap_index]

    def items(self) -> Iterator[Tuple[DyadicInterval, np.ndarray]]:
        for interval in intervals_up_to(self.depth):
            yield interval, self.table[interval.heap_index]

    def nonzero(self) -> Dict[DyadicInterval, np.ndarray]:
        return {i: v for i, v in self.items() if np.any(v != 0.0)}

    def with_table(self, table: np.ndarray) -> "HaarExpansion":
        return HaarExpansion(table)

    def is_reduced(self) -> bool:
        """Mean and the h_I0 coefficient are both zero."""
        return not np.any(self.table[:2] != 0.0)

    def squared_norm(self) -> float:
        """Parseval: |mean|^2 + sum_I |(f, h_I)|^2 (componentwise sum over d)."""
        return float(np.sum(self.table ** 2))

    def allclose(self, other: "HaarExpansion", atol: float = 1e-12) -> bool:
        return self.table.shape == other.table.shape and np.allclose(
            self.table, other.table, rtol=0.0, atol=atol
        )

    def __neg__(self) -> "HaarExpansion":
        return HaarExpansion(-self.table)

    def __add__(self, other: "HaarExpansion") -> "HaarExpansion":
        return HaarExpansion(self.table + other.table)

    def __sub__(self, other: "HaarExpansion") -> "HaarExpansion":
        return HaarExpansion(self.table - other.table)


def _as_samples(samples: np.ndarray) -> np.ndarray:
    values = np.asarray(samples, dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    if values.ndim != 2:
        raise MalformedInputError("samples must have shape (n,) or (n, d)", {"shape": values.shape})
    n = values.shape[0]
    if n < 2 or n & (n - 1):
        raise MalformedInputError("sample count must be a power of two >= 2", {"count": n})
    return values


def analyze(samples: np.ndarray) -> HaarExpansion:
    """
    Haar coefficients of the step function with the given cell averages.

    Works bottom-up: at every depth k the coefficient on I is
    |I|^(1/2) (<f>_{I+} - <f>_{I-}) / 2 and the parent average is the mean of
    the two child averages.

    Args:
        samples: 2^(K+1) cell averages, shape (n,) or (n, d)

    Returns:
        The depth-K expansion
    """
    averages = _as_samples(samples)
    n = averages.shape[0]
    depth = n.bit_length() - 2
    table = np.empty_like(averages)
    for k in range(depth, -1, -1):
        minus, plus = averages[0::2], averages[1::2]
        table[1 << k: 1 << (k + 1)] = 2.0 ** (-k / 2.0) * (plus - minus) / 2.0
        averages = (minus + plus) / 2.0
    table[0] = averages[0]
    return HaarExpansion(table)


def synthesize(expansion: HaarExpansion) -> np.ndarray:
    """
    Cell values of mean + sum (f, h_I) h_I on the 2^(K+1) grid cells.

    Returns:
        Array of shape (2^(K+1), d)
    """
    table = expansion.table
    averages = table[0:1].copy()
    for k in range(expansion.depth + 1):
        jump = 2.0 ** (k / 2.0) * table[1 << k: 1 << (k + 1)]
        refined = np.empty((2 * averages.shape[0], averages.shape[1]))
        refined[0::2] = averages - jump
        refined[1::2] = averages + jump
        averages = refined
    return averages


def interval_averages(expansion: HaarExpansion, depth: int) -> np.ndarray:
    """<f>_I for every interval of the given depth (shape (2^depth, d))."""
    if not 0 <= depth <= expansion.depth + 1:
        raise MalformedInputError("depth outside the expansion", {"depth": depth})
    values = synthesize(expansion)
    block = values.shape[0] >> depth
    return values.reshape(1 << depth, block, -1).mean(axis=1)


def martingale_differences(expansion: HaarExpansion) -> Dict[int, np.ndarray]:
    """
    Delta_k^f on every depth-k interval: (1/2)(<f>_{I+} - <f>_{I-}).

    Returns:
        Map k -> array of shape (2^k, d)
    """
    differences = {}
    for k in range(expansion.depth + 1):
        children = interval_averages(expansion, k + 1)
        differences[k] = (children[1::2] - children[0::2]) / 2.0
    return differences


def cell_midpoints(depth: int) -> np.ndarray:
    """Midpoints of the 2^(K+1) grid cells of a depth-K expansion."""
    n = 1 << (depth + 1)
    return (np.arange(n) + 0.5) / n


def inner_product_oracle(samples: np.ndarray, interval: DyadicInterval) -> np.ndarray:
    """Brute-force (f, h_I) = sum_cells |cell| f(cell) h_I(cell)."""
    values = _as_samples(samples)
    n = values.shape[0]
    h = np.array([haar_eval(interval, x) for x in (np.arange(n) + 0.5) / n])
    return (h[:, None] * values).sum(axis=0) / n
