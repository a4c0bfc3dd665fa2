"""Batch verification of catalog entries."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Any

from pydantic import BaseModel, Field

from floerwidth.catalog.models import Catalog, CatalogEntry
from floerwidth.core.config import VerifySettings, get_settings
from floerwidth.core.types import CheckName
from floerwidth.observability.logging import entry_context, get_logger
from floerwidth.verify.checks import CheckResult, Reproduction, grading_self_check, run_check

logger = get_logger(__name__)


class CheckTally(BaseModel):
    passed: int = 0
    failed: int = 0


class VerificationSummary(BaseModel):
    """Outcome of a verification run."""

    checks: list[CheckName]
    entries: int = 0
    results: list[CheckResult] = Field(default_factory=list)
    startup_failures: list[Reproduction] = Field(default_factory=list)

    @property
    def failures(self) -> list[Reproduction]:
        found = list(self.startup_failures)
        for result in self.results:
            found.extend(result.failures)
        return found

    @property
    def passed(self) -> bool:
        return not self.failures

    def tallies(self) -> dict[CheckName, CheckTally]:
        """Passing and failing cases per check."""
        tallies = {check: CheckTally() for check in self.checks}
        for result in self.results:
            tally = tallies[result.check]
            tally.failed += len(result.failures)
            tally.passed += result.cases - len(result.failures)
        for failure in self.startup_failures:
            tallies.setdefault(failure.check, CheckTally()).failed += 1
        return tallies

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "checks": {
                check.value: tally.model_dump() for check, tally in self.tallies().items()
            },
            "entries": self.entries,
            "failures": [failure.model_dump(mode="json") for failure in self.failures],
            "passed": self.passed,
        }


def verify_entry(
    entry: CatalogEntry,
    checks: Sequence[CheckName],
    settings: VerifySettings,
) -> list[CheckResult]:
    """Every selected check on one entry; module level so worker processes can import it."""
    with entry_context(entry.name):
        results = [run_check(check, entry, settings) for check in checks]
        failed = sum(len(result.failures) for result in results)
        logger.debug("Verified entry", failures=failed)
    return results


class VerificationRunner:
    """
    Runs checks over a catalog.

    Entries are independent, so with more than one worker they are spread
    over a process pool.
    """

    def __init__(
        self,
        checks: Sequence[CheckName] | None = None,
        settings: VerifySettings | None = None,
    ) -> None:
        self._checks = list(checks) if checks else list(CheckName)
        self._settings = settings or get_settings().verify

    @property
    def checks(self) -> list[CheckName]:
        return self._checks

    def run(self, catalog: Catalog) -> VerificationSummary:
        summary = VerificationSummary(checks=self._checks, entries=len(catalog))

        # A bad contribution table poisons every graded computation.
        summary.startup_failures = grading_self_check()
        if summary.startup_failures:
            logger.error("Local grading table failed its self-check")
            return summary

        logger.info(
            "Starting verification",
            entries=len(catalog),
            checks=[check.value for check in self._checks],
            workers=self._settings.workers,
        )
        entries = list(catalog.entries)
        if self._settings.workers > 1 and len(entries) > 1:
            with ProcessPoolExecutor(max_workers=self._settings.workers) as executor:
                batches = executor.map(
                    verify_entry, entries, repeat(self._checks), repeat(self._settings)
                )
                for batch in batches:
                    summary.results.extend(batch)
        else:
            for entry in entries:
                summary.results.extend(verify_entry(entry, self._checks, self._settings))

        logger.info(
            "Verification finished",
            entries=len(entries),
            failures=len(summary.failures),
        )
        return summary
