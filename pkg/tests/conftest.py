"""Pytest configuration and fixtures."""

from __future__ import annotations

import os
from collections.abc import Generator
from pathlib import Path

import pytest

# Set test environment
os.environ.setdefault("FLOERWIDTH_ENVIRONMENT", "test")
os.environ.setdefault("OBSERVABILITY_LOG_LEVEL", "CRITICAL")
os.environ.setdefault("VERIFY_WORKERS", "1")

from floerwidth.core.config import configure_settings  # noqa: E402
from floerwidth.diagram.model import LinkDiagram  # noqa: E402
from floerwidth.diagram.parser import parse_pd  # noqa: E402
from floerwidth.observability.logging import configure_logging  # noqa: E402

# Standard PD code of 8_19, the closure of the torus braid (s1 s2)^4.
PD_8_19 = (
    "PD[X(4,2,5,1),X(8,4,9,3),X(9,15,10,14),X(5,13,6,12),"
    "X(13,7,14,6),X(11,1,12,16),X(15,11,16,10),X(2,8,3,7)]"
)

# Table of Kauffman states of 8_19 per (Alexander, Maslov) bigrading.
TABLE_8_19: dict[int, dict[int, int]] = {
    -3: {-6: 1},
    -2: {-5: 2, -4: 1},
    -1: {-4: 3, -3: 3},
    0: {-3: 3, -2: 4},
    1: {-2: 3, -1: 3},
    2: {-1: 2, 0: 1},
    3: {0: 1},
}

# Both crossings positive; resolving crossing 0 splits off a circle.
PD_SKEIN_EXAMPLE = "PD[X(4,2,1,1),X(3,3,4,2)]"

# Negative Hopf link with two-arc components, each passing under once.
PD_HOPF_OVER_UNDER = "PD[X(2,3,1,4),X(4,1,3,2)]"


@pytest.fixture(scope="session", autouse=True)
def quiet_logging() -> None:
    """Keep structlog output out of captured command output."""
    configure_logging(level="CRITICAL")


@pytest.fixture
def reset_settings() -> Generator[None, None, None]:
    """Drop any settings installed by a test."""
    yield
    configure_settings(None)


@pytest.fixture
def trefoil() -> LinkDiagram:
    """Right-handed trefoil, closure of s1^3."""
    return parse_pd("BR[1,1,1]")


@pytest.fixture
def figure_eight() -> LinkDiagram:
    return parse_pd("C[2,2]")


@pytest.fixture
def kink() -> LinkDiagram:
    """One-crossing unknot diagram."""
    return parse_pd("PD[X(1,1,2,2)]")


@pytest.fixture
def unknot() -> LinkDiagram:
    return parse_pd("U")


@pytest.fixture
def knot_8_19() -> LinkDiagram:
    return parse_pd(PD_8_19)


@pytest.fixture
def knot_9_46() -> LinkDiagram:
    return parse_pd("P[3,3,-3]")


@pytest.fixture
def hopf_link() -> LinkDiagram:
    return parse_pd("BR[1,1]")


@pytest.fixture
def skein_example() -> LinkDiagram:
    return parse_pd(PD_SKEIN_EXAMPLE)


@pytest.fixture
def hopf_over_under() -> LinkDiagram:
    """Two crossings where changing either leaves one component passing only over."""
    return parse_pd(PD_HOPF_OVER_UNDER)


@pytest.fixture
def cache_dir(tmp_path: Path) -> Path:
    """Empty result cache directory."""
    return tmp_path / "cache"


@pytest.fixture
def sample_catalog_csv() -> str:
    """Small catalog with two good rows and one broken PD code."""
    return (
        "name,pd,alternating,known_width,known_genus,source\n"
        '3_1,"C[3]",true,1,0,Conway notation\n'
        'broken,"PD[X(1,2,3)]",,,,typo\n'
        '4_1,"C[2,2]",true,1,0,Conway notation\n'
    )


@pytest.fixture
def pd_8_19() -> str:
    return PD_8_19


@pytest.fixture
def table_8_19() -> dict[int, dict[int, int]]:
    return TABLE_8_19


@pytest.fixture
def corrupted_grading_table(tmp_path: Path) -> Path:
    """Grading table whose positive N contribution breaks the eta identity."""
    path = tmp_path / "gradings.yaml"
    path.write_text(
        "roles:\n"
        "  positive: [E, N, W, S]\n"
        "  negative: [S, E, N, W]\n"
        "alexander:\n"
        "  positive: {N: 2, E: 0, S: -1, W: 0}\n"
        "  negative: {N: -1, E: 0, S: 1, W: 0}\n"
        "maslov:\n"
        "  positive: {N: 0, E: 0, S: -2, W: 0}\n"
        "  negative: {N: 0, E: 0, S: 2, W: 0}\n"
    )
    return path


@pytest.fixture
def pd_skein_example() -> str:
    return PD_SKEIN_EXAMPLE
