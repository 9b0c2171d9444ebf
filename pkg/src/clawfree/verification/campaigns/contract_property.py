"""
Pseudoclaws of contractions are claws.

For a simple matroid M and X a subset of E, a k-claw of si(M / X) lifted to
its representative elements is a k-claw of M. Random binary matroids are
checked with a seeded generator; every simple matroid on at most seven
elements is checked against every X.
"""

import logging
import random
from typing import Iterator, Tuple

from ...analysis.claws import is_claw, pseudoclaws
from ...core.bitset import iter_bits
from ...core.config import BINARY_MAX_RANK, BINARY_SCREEN_MAX_ELEMENTS
from ...core.errors import BudgetExceeded
from ...enumeration.bases import enumerate_basis_matroids_up_to
from ...matroids.base import Matroid
from ...matroids.binary import BinaryMatroid
from ...matroids.io import serialize_matroid
from ...matroids.operations import contract
from ...reporting.schemas import PropertyFailure, PropertyReport
from ..base_campaign import BaseCampaign

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_ELEMENTS = 7


def random_binary_matroid(rng: random.Random) -> BinaryMatroid:
    """Distinct nonzero columns in GF(2)^r for a random r <= 6"""
    r = rng.randint(1, BINARY_MAX_RANK)
    n = rng.randint(1, min(2**r - 1, BINARY_SCREEN_MAX_ELEMENTS))
    return BinaryMatroid(r, rng.sample(range(1, 2**r), n))


def small_simple_matroids(n_max: int = EXHAUSTIVE_MAX_ELEMENTS) -> Iterator[Matroid]:
    """Every simple matroid of positive rank on at most n_max elements"""
    for r in range(1, n_max + 1):
        yield from enumerate_basis_matroids_up_to(n_max, r, simple_only=True)


def check_pseudoclaws(M: Matroid, X: int) -> Iterator[Tuple[int, int]]:
    """(k, lifted pseudoclaw) for every pseudoclaw of M / X that is not a claw of M"""
    for k in range(contract(M, X).rank + 1):
        for lifted in pseudoclaws(M, X, k):
            if not is_claw(M, lifted):
                yield k, lifted.bits


class ContractPropertyCampaign(BaseCampaign):
    """Randomized and exhaustive checks of the contraction pseudoclaw property"""

    def verdict_of(self, report: PropertyReport) -> str:
        if not report.complete:
            return "incomplete"
        return "passed" if report.passed else "failed"

    def incomplete_report(self, reason: str) -> PropertyReport:
        return PropertyReport(
            seed=self.config.seed,
            trials=self.config.trials,
            passed=False,
            complete=False,
        )

    def scan(self) -> PropertyReport:
        report = PropertyReport(seed=self.config.seed, trials=self.config.trials)
        try:
            self._random_trials(report)
            self._exhaustive_sweep(report)
        except BudgetExceeded as exc:
            logger.warning(f"Property check stopped early: {exc}")
            report.complete = False

        report.passed = not report.failures and report.complete
        if report.failures:
            logger.error(f"{len(report.failures)} pseudoclaws are not claws")
            self.write_artifact(
                "failures", "".join(failure.matroid for failure in report.failures)
            )
        return report

    def _record(
        self, report: PropertyReport, source: str, trial: int, M: Matroid, X: int
    ) -> int:
        """Check one (M, X) pair; returns the number of claw sizes checked"""
        for k, lifted in check_pseudoclaws(M, X):
            report.failures.append(
                PropertyFailure(
                    source=source,
                    trial=trial,
                    matroid=serialize_matroid(M),
                    contracted=list(iter_bits(X)),
                    k=k,
                    pseudoclaw=list(iter_bits(lifted)),
                )
            )
        return contract(M, X).rank + 1

    def _random_trials(self, report: PropertyReport) -> None:
        rng = random.Random(self.config.seed)
        for trial in range(self.config.trials):
            if trial % 256 == 0:
                self.check_budget()
            M = random_binary_matroid(rng)
            X = rng.getrandbits(M.n) & rng.getrandbits(M.n)
            report.random_checks += self._record(report, "random-binary", trial, M, X)
        logger.info(
            f"{self.config.trials} random trials, {report.random_checks} checks"
        )

    def _exhaustive_sweep(self, report: PropertyReport) -> None:
        for index, M in enumerate(small_simple_matroids()):
            self.check_budget()
            report.exhaustive_matroids += 1
            for X in range(1 << M.n):
                checks = self._record(report, "exhaustive-bases", index, M, X)
                report.exhaustive_checks += checks
        logger.info(
            f"{report.exhaustive_matroids} small matroids, "
            f"{report.exhaustive_checks} checks"
        )
