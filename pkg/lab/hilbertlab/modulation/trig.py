"""
Truncated Fourier expansions of toss functions.

Each quarter-constant factor is replaced by its Fourier series cut at order M:
the prefix indicators chi_{A_q}(theta_j) keep |l| <= M_j, the last factor
phi^sigma(theta_{k+1}) keeps the odd |l| <= M_{k+1} (its even coefficients
vanish). A level is then a TrigPolynomial in k+2 angle variables, and after
modulation theta_j -> theta_j + n_j psi it becomes a PsiPolynomial.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union
import logging
import math

import numpy as np

from hilbertlab.circle.functions import PHI_SIGNS, QUARTER_STARTS
from hilbertlab.core.config import settings
from hilbertlab.exceptions import BudgetError, MalformedInputError, ScheduleTooSmallError
from hilbertlab.schemas.modulation import ModulationSchedule
from hilbertlab.schemas.sign import BOTH_SIGNS, Sign
from hilbertlab.toss.lift import TossFunction

logger = logging.getLogger(__name__)

# rows x terms evaluated per chunk
_CHUNK = 1 << 20


def quarter_coefficients(frequencies: np.ndarray) -> np.ndarray:
    """
    Fourier coefficients of the four quarter indicators.

    chi_q^(l) = e^{-ila}(1 - e^{-il pi/2}) / (2 pi i l), 1/4 at l = 0, a = start of A_q.

    Returns:
        Complex array of shape (4, len(frequencies))
    """
    l = np.asarray(frequencies, dtype=float)
    out = np.full((4, l.shape[0]), 0.25, dtype=complex)
    nonzero = l != 0
    ln = l[nonzero]
    for q, start in enumerate(QUARTER_STARTS):
        out[q, nonzero] = (
            np.exp(-1j * ln * start) * (1.0 - np.exp(-0.5j * math.pi * ln)) / (2j * math.pi * ln)
        )
    return out


def phi_coefficients(sigma: Sign, frequencies: np.ndarray) -> np.ndarray:
    """Fourier coefficients of phi^sigma as the signed sum of quarter indicators."""
    return PHI_SIGNS[Sign.parse(sigma)] @ quarter_coefficients(frequencies)


def prefix_frequencies(order: int) -> np.ndarray:
    """|l| <= M without the nonzero multiples of 4, where every chi_q^ vanishes."""
    l = np.arange(-order, order + 1)
    return l[(l == 0) | (l % 4 != 0)]


def last_frequencies(order: int) -> np.ndarray:
    """Odd |l| <= M, the support of a truncated square wave."""
    l = np.arange(-order, order + 1)
    return l[l % 2 != 0]


@dataclass(frozen=True)
class PsiPolynomial:
    """sum_t c_t e^{i f_t psi} with distinct integer frequencies f_t and c_t in C^d."""

    frequencies: np.ndarray  # (T,) int64, sorted, distinct
    coefficients: np.ndarray  # (T, d) complex

    @classmethod
    def from_terms(cls, frequencies: np.ndarray, coefficients: np.ndarray) -> "PsiPolynomial":
        """Merge terms that share a frequency."""
        frequencies = np.asarray(frequencies, dtype=np.int64)
        coefficients = np.asarray(coefficients, dtype=complex)
        distinct, inverse = np.unique(frequencies, return_inverse=True)
        merged = np.zeros((distinct.shape[0], coefficients.shape[1]), dtype=complex)
        np.add.at(merged, inverse.reshape(-1), coefficients)
        return cls(distinct, merged)

    @property
    def dim(self) -> int:
        return self.coefficients.shape[1]

    def evaluate(self, psis) -> np.ndarray:
        """Values at the points psi, shape (n, d)."""
        psis = np.atleast_1d(np.asarray(psis, dtype=float))
        out = np.zeros((psis.shape[0], self.dim), dtype=complex)
        step = max(1, _CHUNK // max(1, self.frequencies.shape[0]))
        for start in range(0, psis.shape[0], step):
            block = psis[start: start + step]
            out[start: start + step] = np.exp(1j * np.multiply.outer(block, self.frequencies)) @ self.coefficients
        return out

    def __add__(self, other: "PsiPolynomial") -> "PsiPolynomial":
        return PsiPolynomial.from_terms(
            np.concatenate([self.frequencies, other.frequencies]),
            np.concatenate([self.coefficients, other.coefficients]),
        )

    def pair_mean(self, other: "PsiPolynomial") -> float:
        """
        E^psi <self, other>: sum over matching frequencies f, -f of c_f . d_{-f}.

        Real part only; both factors are real functions.
        """
        common, own, theirs = np.intersect1d(
            self.frequencies, -other.frequencies, assume_unique=True, return_indices=True
        )
        if common.shape[0] == 0:
            return 0.0
        return float(np.sum(self.coefficients[own] * other.coefficients[theirs]).real)


def hilbert_in_psi(polynomial: PsiPolynomial) -> PsiPolynomial:
    """Multiplier -i sgn(f) on every frequency."""
    symbol = -1j * np.sign(polynomial.frequencies)
    return PsiPolynomial(polynomial.frequencies, polynomial.coefficients * symbol[:, None])


@dataclass(frozen=True)
class TrigPolynomial:
    """
    sum_t x_t e^{i (l_t . theta)} in angle variables theta_0..theta_{v-1}.

    The last variable is the generator variable; l_{v-1} != 0 on every term.
    """

    indices: np.ndarray  # (T, v) int64
    coefficients: np.ndarray  # (T, d) complex

    def __post_init__(self):
        indices = np.asarray(self.indices, dtype=np.int64)
        coefficients = np.asarray(self.coefficients, dtype=complex)
        if indices.ndim != 2 or coefficients.ndim != 2 or indices.shape[0] != coefficients.shape[0]:
            raise MalformedInputError(
                "indices (T, v) and coefficients (T, d) must describe the same terms",
                {"indices": indices.shape, "coefficients": coefficients.shape},
            )
        if indices.shape[0] and np.any(indices[:, -1] == 0):
            raise MalformedInputError("every term must oscillate in the last variable")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def n_terms(self) -> int:
        return self.indices.shape[0]

    @property
    def n_vars(self) -> int:
        return self.indices.shape[1]

    @property
    def dim(self) -> int:
        return self.coefficients.shape[1]

    def spectrum(self) -> np.ndarray:
        """max |l_j| over the stored terms, per variable (zeros without terms)."""
        if self.n_terms == 0:
            return np.zeros(self.n_vars, dtype=np.int64)
        return np.max(np.abs(self.indices), axis=0)

    def evaluate(self, thetas: np.ndarray) -> np.ndarray:
        """
        Values at angle vectors.

        Args:
            thetas: Array of shape (n, >= v); extra columns are ignored
        """
        thetas = np.atleast_2d(np.asarray(thetas, dtype=float))[:, : self.n_vars]
        out = np.zeros((thetas.shape[0], self.dim), dtype=complex)
        step = max(1, _CHUNK // max(1, self.n_terms))
        for start in range(0, thetas.shape[0], step):
            phases = np.exp(1j * (thetas[start: start + step] @ self.indices.T))
            out[start: start + step] = phases @ self.coefficients
        return out

    def hilbert_last(self) -> "TrigPolynomial":
        """H in the last variable: x_t -> -i sgn(l_{v-1}) x_t."""
        symbol = -1j * np.sign(self.indices[:, -1])
        return TrigPolynomial(self.indices, self.coefficients * symbol[:, None])


def modulate(
    polynomial: TrigPolynomial,
    schedule: ModulationSchedule,
    theta: Sequence[float],
    check: bool = True,
) -> PsiPolynomial:
    """
    psi -> polynomial(theta_0 + n_0 psi, ..., theta_{v-1} + n_{v-1} psi).

    Term t gets frequency l_t . n and the fixed phase e^{i l_t . theta}.

    Raises:
        ScheduleTooSmallError: If check is set and some term has
            |l_0 n_0 + ... + l_{v-2} n_{v-2}| >= |l_{v-1} n_{v-1}|
    """
    n = np.asarray(schedule.frequencies(polynomial.n_vars), dtype=np.int64)
    theta = np.asarray(theta, dtype=float)[: polynomial.n_vars]
    head = polynomial.indices[:, :-1] @ n[:-1]
    last = polynomial.indices[:, -1] * n[-1]
    if check:
        violating = np.abs(head) >= np.abs(last)
        if np.any(violating):
            worst = int(np.argmax(violating))
            raise ScheduleTooSmallError(
                "frequency of the last factor does not dominate",
                {"multi_index": polynomial.indices[worst].tolist(), "schedule_n": list(schedule.n)},
            )
    phases = np.exp(1j * (polynomial.indices @ theta))
    return PsiPolynomial.from_terms(head + last, polynomial.coefficients * phases[:, None])


@dataclass(frozen=True)
class ExpandedToss:
    """
    Truncated Fourier form of a toss function.

    `root` covers dF_-1 phi+(theta_0); `levels[k]` covers both generator slots
    of level k in the variables theta_0..theta_{k+1}.
    """

    constant: np.ndarray  # (d,)
    root: TrigPolynomial
    levels: Tuple[TrigPolynomial, ...]
    orders: Tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def dim(self) -> int:
        return self.constant.shape[0]

    @property
    def n_terms(self) -> int:
        return self.root.n_terms + sum(level.n_terms for level in self.levels)

    def terms(self) -> Iterator[Tuple[str, TrigPolynomial]]:
        yield "root", self.root
        for k, level in enumerate(self.levels):
            yield f"level_{k}", level

    def evaluate(self, thetas: np.ndarray) -> np.ndarray:
        """Real values at angle vectors of shape (n, K+1)."""
        thetas = np.atleast_2d(np.asarray(thetas, dtype=float))
        values = np.broadcast_to(self.constant, (thetas.shape[0], self.dim)).astype(complex)
        for _, polynomial in self.terms():
            values = values + polynomial.evaluate(thetas)
        return values.real

    def hilbert_last(self) -> "ExpandedToss":
        """F^H: the constant drops, every level gets H in its last variable."""
        return ExpandedToss(
            np.zeros(self.dim),
            self.root.hilbert_last(),
            tuple(level.hilbert_last() for level in self.levels),
            self.orders,
        )

    def modulate(self, schedule: ModulationSchedule, theta: Sequence[float], check: bool = True) -> PsiPolynomial:
        total = PsiPolynomial(np.zeros(1, dtype=np.int64), self.constant.astype(complex)[None, :])
        for _, polynomial in self.terms():
            total = total + modulate(polynomial, schedule, theta, check=check)
        return total


def _resolve_orders(order: Union[int, Sequence[int], None], n_vars: int) -> Tuple[int, ...]:
    if order is None:
        order = settings.MODULATION_ORDER
    if isinstance(order, (int, np.integer)):
        orders = (int(order),) * n_vars
    else:
        orders = tuple(int(m) for m in order)
    if len(orders) != n_vars or any(m < 1 for m in orders):
        raise MalformedInputError(
            "one truncation order >= 1 per angle variable is required",
            {"orders": list(orders), "variables": n_vars},
        )
    return orders


def _level_polynomial(F: TossFunction, k: int, orders: Tuple[int, ...]) -> TrigPolynomial:
    grids: List[np.ndarray] = [prefix_frequencies(orders[j]) for j in range(k + 1)]
    odd = last_frequencies(orders[k + 1])
    total: Optional[np.ndarray] = None
    for sigma in BOTH_SIGNS:
        tensor = F.slot(k, sigma).reshape((4,) * (k + 1) + (F.dim,)).astype(complex)
        for j in range(k + 1):
            tensor = np.tensordot(tensor, quarter_coefficients(grids[j]), axes=([0], [0]))
        # (d, L_0, ..., L_k) times the generator series
        term = np.multiply.outer(tensor, phi_coefficients(sigma, odd))
        total = term if total is None else total + term
    coefficients = np.moveaxis(total, 0, -1).reshape(-1, F.dim)
    mesh = np.meshgrid(*grids, odd, indexing="ij")
    indices = np.stack([axis.reshape(-1) for axis in mesh], axis=1)
    keep = np.any(coefficients != 0, axis=1)
    return TrigPolynomial(indices[keep], coefficients[keep])


def expand_toss_function(
    F: TossFunction, order: Union[int, Sequence[int], None] = None
) -> ExpandedToss:
    """
    Replace every quarter-constant factor of F by its truncated Fourier series.

    Args:
        F: Toss function of depth K
        order: Truncation order M, or one order per variable theta_0..theta_K;
            defaults to settings.MODULATION_ORDER

    Raises:
        BudgetError: If K exceeds MODULATION_MAX_DEPTH or the expansion
            would hold more than MODULATION_MAX_TERMS terms
    """
    if F.depth > settings.MODULATION_MAX_DEPTH:
        raise BudgetError(
            "modulation depth exceeds the budget",
            {"depth": F.depth, "max_depth": settings.MODULATION_MAX_DEPTH},
        )
    orders = _resolve_orders(order, F.depth + 1)
    expected = sum(
        math.prod(len(prefix_frequencies(orders[j])) for j in range(k + 1))
        * len(last_frequencies(orders[k + 1]))
        for k in range(F.depth)
    )
    if expected > settings.MODULATION_MAX_TERMS:
        raise BudgetError(
            "truncated expansion has too many terms",
            {"terms": expected, "max_terms": settings.MODULATION_MAX_TERMS},
        )

    odd = last_frequencies(orders[0])
    root_coefficients = np.multiply.outer(phi_coefficients(Sign.PLUS, odd), F.root.astype(complex))
    keep = np.any(root_coefficients != 0, axis=1)
    root = TrigPolynomial(odd[:, None][keep], root_coefficients[keep])
    levels = tuple(_level_polynomial(F, k, orders) for k in range(F.depth))
    expanded = ExpandedToss(np.array(F.constant, dtype=float), root, levels, orders)
    logger.debug(f"Expanded depth-{F.depth} toss function at orders {orders}: {expanded.n_terms} terms")
    return expanded
