"""Local Alexander/Maslov contribution tables and their startup self-check."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from floerwidth.core.config import get_settings
from floerwidth.core.exceptions import GradingTableError
from floerwidth.observability.logging import get_logger

logger = get_logger(__name__)

Role = Literal["N", "E", "S", "W"]
SignName = Literal["positive", "negative"]

_ROLES = {"N", "E", "S", "W"}


def _sign_name(sign: int) -> SignName:
    return "positive" if sign > 0 else "negative"


class LocalGradingTable(BaseModel):
    """Doubled local contributions keyed by crossing sign and compass role."""

    model_config = ConfigDict(frozen=True)

    roles: dict[SignName, tuple[Role, Role, Role, Role]] = Field(
        ..., description="Compass role of PD quadrants 0..3"
    )
    alexander: dict[SignName, dict[Role, int]] = Field(..., description="Twice the Alexander level")
    maslov: dict[SignName, dict[Role, int]] = Field(..., description="Twice the Maslov grading")

    @model_validator(mode="after")
    def check_complete(self) -> LocalGradingTable:
        for table_name in ("roles", "alexander", "maslov"):
            table = getattr(self, table_name)
            if set(table) != {"positive", "negative"}:
                raise ValueError(f"{table_name} needs exactly the keys positive and negative")
        for sign, roles in self.roles.items():
            if set(roles) != _ROLES:
                raise ValueError(f"roles for {sign} crossings must use N, E, S, W once each")
        for table_name in ("alexander", "maslov"):
            for sign, values in getattr(self, table_name).items():
                if set(values) != _ROLES:
                    raise ValueError(f"{table_name} for {sign} crossings must cover N, E, S, W")
        return self

    def role(self, sign: int, quadrant: int) -> Role:
        return self.roles[_sign_name(sign)][quadrant % 4]

    def contribution(self, sign: int, quadrant: int) -> tuple[int, int]:
        """(2A, 2M) contributed by a dot in ``quadrant`` of a crossing of ``sign``."""
        name = _sign_name(sign)
        role = self.role(sign, quadrant)
        return self.alexander[name][role], self.maslov[name][role]


class GradingTableValidator:
    """
    Checks that a table makes A - M independent of the marked edge.

    Along a Tait edge the dot can sit at either endpoint, so both quadrants of
    an edge must contribute the same doubled A - M, and that value is the
    edge's share of eta: +1 for alpha+, -1 for beta-, 0 for alpha-/beta+.
    """

    # (crossing sign, quadrant pair) -> doubled A - M of that edge
    EXPECTED: dict[tuple[int, tuple[int, int]], int] = {
        (1, (1, 3)): 1,
        (1, (0, 2)): 0,
        (-1, (0, 2)): -1,
        (-1, (1, 3)): 0,
    }

    def validate(self, table: LocalGradingTable) -> list[str]:
        errors: list[str] = []
        for (sign, pair), expected in self.EXPECTED.items():
            for quadrant in pair:
                a2, m2 = table.contribution(sign, quadrant)
                if a2 - m2 != expected:
                    errors.append(
                        f"{_sign_name(sign)} crossing, quadrant {quadrant} "
                        f"({table.role(sign, quadrant)}): 2(A-M) = {a2 - m2}, expected {expected}"
                    )
        return errors

    def validate_or_raise(self, table: LocalGradingTable) -> None:
        errors = self.validate(table)
        if errors:
            raise GradingTableError(
                f"eta identity fails in {len(errors)} quadrant(s)",
                {"errors": errors},
            )


def load_grading_table(path: str | Path | None = None) -> LocalGradingTable:
    """
    Load and self-check a local grading table.

    Args:
        path: YAML file; the bundled table when omitted.

    Raises:
        GradingTableError: The file is unreadable, malformed or fails the self-check.
    """
    try:
        if path is None:
            content = (
                resources.files("floerwidth.states")
                .joinpath("data/local_gradings.yaml")
                .read_text(encoding="utf-8")
            )
        else:
            content = Path(path).read_text(encoding="utf-8")
        data: Any = yaml.safe_load(content)
    except (OSError, yaml.YAMLError) as e:
        raise GradingTableError(f"cannot read table: {e}", {"path": str(path)}) from e

    if not isinstance(data, dict):
        raise GradingTableError("table must be a mapping", {"path": str(path)})
    try:
        table = LocalGradingTable.model_validate(data)
    except ValueError as e:
        raise GradingTableError(str(e), {"path": str(path)}) from e

    GradingTableValidator().validate_or_raise(table)
    logger.debug("Loaded local grading table", path=str(path or "bundled"))
    return table


@lru_cache(maxsize=8)
def _cached_table(path: str | None) -> LocalGradingTable:
    return load_grading_table(path)


def get_grading_table() -> LocalGradingTable:
    """The configured table, loaded and checked once per path."""
    path = get_settings().states.grading_table
    return _cached_table(str(path) if path is not None else None)
