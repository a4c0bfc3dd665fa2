"""Theorem verification over knot catalogs."""

from floerwidth.verify.checks import (
    CHECKS,
    CheckResult,
    Reproduction,
    grading_self_check,
    run_check,
)
from floerwidth.verify.runner import (
    CheckTally,
    VerificationRunner,
    VerificationSummary,
    verify_entry,
)

__all__ = [
    "CHECKS",
    "CheckResult",
    "CheckTally",
    "Reproduction",
    "VerificationRunner",
    "VerificationSummary",
    "grading_self_check",
    "run_check",
    "verify_entry",
]
