"""
Expected duality pairings in the toss model and the weak form of S0.

Every factor except H phi^sigma is quarter-constant, so expectations reduce to
finite sums over quarter states. The Hilbert side is computed two ways: with
the quadrature pairing moments E[(H phi^sigma) phi^eta], and by replacing
H phi^sigma with its quarter averages and enumerating.
"""

from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from hilbertlab.circle.functions import eval_H_phi, quarter_index
from hilbertlab.circle.quadrature import (
    compute_c0,
    pairing_moment,
    quarter_averages_of_H_phi,
)
from hilbertlab.dyadic.haar import HaarExpansion
from hilbertlab.dyadic.operators import apply_S0, dyadic_pairing
from hilbertlab.exceptions import MalformedInputError, PreconditionError
from hilbertlab.schemas.reports import WeakFormReport
from hilbertlab.schemas.sign import BOTH_SIGNS, Sign
from hilbertlab.schemas.space import SpaceDescriptor
from hilbertlab.toss.lift import TossFunction, apply_S0_toss, lift, toss_lp_norm
from hilbertlab.toss.quarters import enumerate_states, prefix_codes

logger = logging.getLogger(__name__)


def _check_pairable(F: TossFunction, G: TossFunction) -> None:
    if F.depth != G.depth or F.dim != G.dim:
        raise MalformedInputError(
            "toss functions must share depth and dimension",
            {"F": (F.depth, F.dim), "G": (G.depth, G.dim)},
        )


def expect_pairing(F: TossFunction, G: TossFunction) -> float:
    """E <F, G> with the coordinate pairing sum_i u_i v_i, by enumeration."""
    _check_pairable(F, G)
    products = np.sum(F.evaluate_states() * G.evaluate_states(), axis=1)
    return float(np.mean(products))


@dataclass(frozen=True)
class HilbertIncrements:
    """
    F^H: the Hilbert transform applied in the last variable of each increment.

    dF_-2 drops, dF_-1 phi+(theta_0) becomes dF_-1 (H phi+)(theta_0) and
    dF_k^sigma phi^sigma(theta_{k+1}) becomes dF_k^sigma (H phi^sigma)(theta_{k+1}).
    """

    source: TossFunction

    @property
    def depth(self) -> int:
        return self.source.depth

    def is_zero(self) -> bool:
        F = self.source
        return not (np.any(F.root != 0.0) or any(np.any(s != 0.0) for s in F.plus + F.minus))

    def evaluate(self, thetas: np.ndarray) -> np.ndarray:
        """
        F^H at explicit angle vectors.

        Args:
            thetas: Array of shape (n, K+1)

        Raises:
            SingularityError: If an angle hits a pole of H phi^sigma
        """
        F = self.source
        thetas = np.atleast_2d(np.asarray(thetas, dtype=float))
        if thetas.shape[1] != F.depth + 1:
            raise MalformedInputError("one angle per toss variable is required", {"shape": thetas.shape})
        quarters = quarter_index(thetas)
        values = F.root * np.asarray(eval_H_phi(Sign.PLUS, thetas[:, 0]))[:, None]
        codes = quarters[:, 0]
        for k in range(F.depth):
            last = thetas[:, k + 1]
            values = values + F.plus[k][codes] * np.asarray(eval_H_phi(Sign.PLUS, last))[:, None]
            values = values + F.minus[k][codes] * np.asarray(eval_H_phi(Sign.MINUS, last))[:, None]
            codes = 4 * codes + quarters[:, k + 1]
        return values

    def pair(self, G: TossFunction, method: str = "moments") -> float:
        """
        E <F^H, G>.

        Args:
            G: Toss function on the same variables
            method: "moments" (quadrature pairing moments) or "projected"
                (quarter averages of H phi^sigma, then enumeration)
        """
        _check_pairable(self.source, G)
        if method == "moments":
            return self._pair_moments(G)
        if method == "projected":
            return self._pair_projected(G)
        raise MalformedInputError(f"unknown pairing method '{method}'")

    def _pair_moments(self, G: TossFunction) -> float:
        # only same-level terms survive; within a level the generator pairs with
        # G's slots through E[(H phi^sigma) phi^eta]
        F = self.source
        total = pairing_moment(Sign.PLUS, Sign.PLUS) * float(np.dot(F.root, G.root))
        for k in range(F.depth):
            for sigma in BOTH_SIGNS:
                for eta in BOTH_SIGNS:
                    weight = float(np.mean(np.sum(F.slot(k, sigma) * G.slot(k, eta), axis=1)))
                    total += pairing_moment(sigma, eta) * weight
        return total

    def _pair_projected(self, G: TossFunction) -> float:
        F = self.source
        states = enumerate_states(F.depth)
        plus_averages = np.array(quarter_averages_of_H_phi(Sign.PLUS))
        minus_averages = np.array(quarter_averages_of_H_phi(Sign.MINUS))
        values = F.root * plus_averages[states[:, 0]][:, None]
        for k in range(F.depth):
            codes = prefix_codes(F.depth, k)
            values = values + F.plus[k][codes] * plus_averages[states[:, k + 1]][:, None]
            values = values + F.minus[k][codes] * minus_averages[states[:, k + 1]][:, None]
        return float(np.mean(np.sum(values * G.evaluate_states(), axis=1)))


def apply_H_increments(F: TossFunction) -> HilbertIncrements:
    return HilbertIncrements(F)


def weak_form_check_toss(
    F: TossFunction,
    G: TossFunction,
    h_p: Optional[float] = None,
    space: Optional[SpaceDescriptor] = None,
) -> WeakFormReport:
    """
    E <F^H, G> against c0 E <S0 F, G> for a reduced toss function F.

    The left side uses quadrature moments, the right side only enumeration.

    Raises:
        PreconditionError: If dF_-2 or dF_-1 is non-zero
    """
    if not F.is_reduced():
        raise PreconditionError("the weak form needs dF_-2 = dF_-1 = 0; reduce first")
    _check_pairable(F, G)
    c0 = compute_c0()
    hilbert = apply_H_increments(F)
    lhs = hilbert.pair(G, "moments")
    projected = hilbert.pair(G, "projected")
    rhs = expect_pairing(apply_S0_toss(F), G)
    envelope = None
    if h_p is not None and space is not None:
        envelope = h_p * toss_lp_norm(F, space) * toss_lp_norm(G, space.dual())
    report = WeakFormReport(
        lhs=lhs,
        rhs=rhs,
        c0=c0,
        residual=abs(lhs - c0 * rhs),
        projected_lhs=projected,
        route_residual=abs(lhs - projected),
        holder_envelope=envelope,
    )
    logger.debug(f"Weak form: lhs={lhs:.3e} c0*rhs={c0 * rhs:.3e} residual={report.residual:.2e}")
    return report


def weak_form_check(
    f: HaarExpansion,
    g: HaarExpansion,
    h_p: Optional[float] = None,
    space: Optional[SpaceDescriptor] = None,
) -> WeakFormReport:
    """
    Weak form for lifted expansions, plus the grid pairing <S0 f, g>.

    Raises:
        PreconditionError: If f has a mean or an h_I0 coefficient (apply reduce_tilde)
    """
    if not f.is_reduced():
        raise PreconditionError(
            "f must have zero mean and zero h_I0 coefficient",
            {"mean": f.mean.tolist(), "h_I0": f.table[1].tolist()},
        )
    report = weak_form_check_toss(lift(f), lift(g), h_p=h_p, space=space)
    return report.model_copy(update={"dyadic_pairing": dyadic_pairing(apply_S0(f), g)})
