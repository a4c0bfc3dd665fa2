"""Normalized genus and width of link diagrams, skein checks and skein evaluation."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict

from floerwidth.core.exceptions import InvariantViolationError, SkeinRecursionError
from floerwidth.core.types import CheckName, Splicing
from floerwidth.diagram.model import LinkDiagram
from floerwidth.diagram.parser import canonical_form
from floerwidth.observability.logging import get_logger
from floerwidth.skein.resolution import SkeinQuadruple
from floerwidth.tait.graphs import labeled_tait_graphs
from floerwidth.turaev.genus import euler_characteristic
from floerwidth.turaev.splicing import splice_all

logger = get_logger(__name__)


class NormalizedInvariants(BaseModel):
    """chi of the Turaev surface with the genus and width normalized over split parts."""

    model_config = ConfigDict(frozen=True)

    chi: int
    g_bar: int
    w_bar: int

    @classmethod
    def of(cls, diagram: LinkDiagram) -> NormalizedInvariants:
        chi = euler_characteristic(diagram)
        g_bar = 1 - chi // 2
        return cls(chi=chi, g_bar=g_bar, w_bar=g_bar + 1)


def normalized_genus(diagram: LinkDiagram) -> int:
    """Turaev genus for non-split diagrams; the sum over k parts minus k - 1 otherwise."""
    return NormalizedInvariants.of(diagram).g_bar


def normalized_width(diagram: LinkDiagram) -> int:
    """Normalized genus plus one."""
    return NormalizedInvariants.of(diagram).w_bar


class CircleCounts(BaseModel):
    """Circles of the all-A and all-B states of one diagram."""

    model_config = ConfigDict(frozen=True)

    a: int
    b: int

    @classmethod
    def of(cls, diagram: LinkDiagram) -> CircleCounts:
        return cls(
            a=splice_all(diagram, Splicing.A).circle_count,
            b=splice_all(diagram, Splicing.B).circle_count,
        )


class SkeinCheck(BaseModel):
    """Skein relation residuals and circle-count identities at one site."""

    model_config = ConfigDict(frozen=True)

    quadruple: SkeinQuadruple
    invariants: dict[str, NormalizedInvariants]
    circles: dict[str, CircleCounts]

    @property
    def chi_residual(self) -> int:
        inv = self.invariants
        return (
            inv["L_plus"].chi + inv["L_minus"].chi
            - inv["L_zero"].chi - inv["L_infinity"].chi + 2
        )

    @property
    def g_residual(self) -> int:
        inv = self.invariants
        return (
            inv["L_plus"].g_bar + inv["L_minus"].g_bar
            - inv["L_zero"].g_bar - inv["L_infinity"].g_bar - 1
        )

    @property
    def w_residual(self) -> int:
        inv = self.invariants
        return (
            inv["L_plus"].w_bar + inv["L_minus"].w_bar
            - inv["L_zero"].w_bar - inv["L_infinity"].w_bar - 1
        )

    @property
    def residuals(self) -> tuple[int, int, int]:
        return self.chi_residual, self.g_residual, self.w_residual

    @property
    def circle_identities(self) -> dict[str, bool]:
        c = self.circles
        return {
            "a_plus=a_zero": c["L_plus"].a == c["L_zero"].a,
            "b_plus=b_infinity": c["L_plus"].b == c["L_infinity"].b,
            "a_minus=a_infinity": c["L_minus"].a == c["L_infinity"].a,
            "b_minus=b_zero": c["L_minus"].b == c["L_zero"].b,
        }

    @property
    def passed(self) -> bool:
        return self.residuals == (0, 0, 0) and all(self.circle_identities.values())

    def to_json_dict(self) -> dict[str, Any]:
        diagrams = self.quadruple.diagrams()
        return {
            "diagrams": {
                name: {
                    "pd": canonical_form(diagram),
                    "chi": self.invariants[name].chi,
                    "g_bar": self.invariants[name].g_bar,
                    "w_bar": self.invariants[name].w_bar,
                    "circles_A": self.circles[name].a,
                    "circles_B": self.circles[name].b,
                }
                for name, diagram in diagrams.items()
            },
            "circle_identities": self.circle_identities,
            "residuals": {
                "chi": self.chi_residual,
                "g": self.g_residual,
                "w": self.w_residual,
            },
            "site": self.quadruple.site,
        }

    def raise_for_violation(self) -> None:
        if not self.passed:
            raise InvariantViolationError(
                CheckName.SKEIN.value,
                f"skein relation fails at crossing {self.quadruple.site}",
                self.to_json_dict(),
            )


def skein_check(diagram: LinkDiagram, crossing: int) -> SkeinCheck:
    """Build the quadruple at ``crossing`` and evaluate every relation on it."""
    quadruple = SkeinQuadruple.at(diagram, crossing)
    diagrams = quadruple.diagrams()
    return SkeinCheck(
        quadruple=quadruple,
        invariants={name: NormalizedInvariants.of(d) for name, d in diagrams.items()},
        circles={name: CircleCounts.of(d) for name, d in diagrams.items()},
    )


def deviating_crossing(diagram: LinkDiagram) -> int | None:
    """
    Lowest crossing whose T1 edge sign is in the minority of its split part.

    Parts are scanned in order and ties count as a positive majority. Returns
    None when every part is alternating.
    """
    for indices in diagram.orientation.split_parts:
        part = LinkDiagram(crossings=tuple(diagram.crossings[i] for i in indices))
        _, t1, _ = labeled_tait_graphs(part)
        positive = sum(1 for edge in t1.edges if edge.is_positive)
        if positive in (0, len(t1.edges)):
            continue
        majority = 1 if 2 * positive >= len(t1.edges) else -1
        for edge in t1.edges:
            if edge.sign != majority:
                return indices[edge.crossing]
    return None


class SkeinWidthEvaluator:
    """
    Normalized width by the skein recursion, bottoming out at alternating diagrams.

    Results are memoized on canonical form, so one evaluator can be reused
    across diagrams. ``expansions`` counts the non-alternating diagrams that
    had to be split into a quadruple.
    """

    def __init__(self) -> None:
        self._memo: dict[str, int] = {}
        self.expansions = 0

    def evaluate(self, diagram: LinkDiagram) -> int:
        return self._evaluate(diagram, 0, 2 * diagram.crossing_count + 1)

    def _evaluate(self, diagram: LinkDiagram, depth: int, bound: int) -> int:
        key = canonical_form(diagram)
        if key in self._memo:
            return self._memo[key]
        if depth > bound:
            raise SkeinRecursionError(depth, bound, key)

        site = deviating_crossing(diagram)
        if site is None:
            # One per alternating part, minus two per extra part.
            value = 2 - diagram.split_part_count
        else:
            self.expansions += 1
            quadruple = SkeinQuadruple.at(diagram, site)
            changed = quadruple.minus if diagram.signs[site] > 0 else quadruple.plus
            logger.debug("Skein expansion", diagram=diagram, site=site, depth=depth)
            value = (
                -self._evaluate(changed, depth + 1, bound)
                + self._evaluate(quadruple.zero, depth + 1, bound)
                + self._evaluate(quadruple.infinity, depth + 1, bound)
                + 1
            )
        self._memo[key] = value
        return value


def width_via_skein(diagram: LinkDiagram) -> int:
    return SkeinWidthEvaluator().evaluate(diagram)
