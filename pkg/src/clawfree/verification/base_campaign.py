"""
Base Campaign Class
Provides common functionality for all verification campaigns
"""

import logging
import time
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from ..core.config import CampaignConfig, Verdict
from ..core.errors import BudgetExceeded, CapacityError
from ..reporting.schemas import ExtremalReport, PropertyReport, TightExample

logger = logging.getLogger(__name__)


class BaseCampaign(ABC):
    """Base class for campaigns that compare an observed minimum with a bound"""

    def __init__(self, config: CampaignConfig):
        self.config = config
        self.deadline: Optional[float] = None
        self.notes: List[str] = []
        self.artifacts: List[str] = []

    def threshold(self) -> int:
        """The predicted minimum"""
        return 0

    def threshold_label(self) -> str:
        """How the threshold is computed, for reports"""
        return ""

    @abstractmethod
    def scan(self) -> Union[ExtremalReport, PropertyReport]:
        """Run the search and build the report"""

    def matroid_class(self) -> Optional[str]:
        return self.config.matroid_class.value if self.config.matroid_class else None

    def params(self) -> Dict[str, int]:
        """Integer parameters of this run, for reports"""
        names = ("r", "t", "n", "n_max", "size_cap")
        values = {name: getattr(self.config, name) for name in names}
        return {name: value for name, value in values.items() if value is not None}

    def run(self) -> Union[ExtremalReport, PropertyReport]:
        """Run the campaign; capacity and budget limits give an incomplete report"""
        logger.info(f"Starting {self.config.label()}")
        start = time.monotonic()
        if self.config.budget_seconds is not None:
            self.deadline = start + self.config.budget_seconds

        try:
            report = self.scan()
        except (CapacityError, BudgetExceeded) as exc:
            logger.warning(f"{self.config.label()} incomplete: {exc}")
            report = self.incomplete_report(str(exc))

        if self.config.timing:
            report.runtime_seconds = round(time.monotonic() - start, 3)
        logger.info(f"Finished {self.config.label()}: {self.verdict_of(report)}")
        return report

    def verdict_of(self, report: Any) -> str:
        return report.verdict

    def check_budget(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("campaign budget exhausted")

    def report(
        self,
        verdict: Verdict,
        observed_min: Optional[int],
        tight: Iterable[TightExample],
        scanned: int,
        matched: bool,
    ) -> ExtremalReport:
        """Build the report from a finished scan"""
        return ExtremalReport(
            campaign=self.config.campaign.value,
            matroid_class=self.matroid_class(),
            params=self.params(),
            threshold=self.threshold(),
            threshold_label=self.threshold_label(),
            observed_min=observed_min,
            tight_classes=sorted(tight, key=lambda example: example.canon),
            matched_prediction=matched,
            verdict=verdict.value,
            complete=True,
            counts_scanned=scanned,
            notes=list(self.notes),
            artifacts=list(self.artifacts),
        )

    def incomplete_report(self, reason: str) -> ExtremalReport:
        return ExtremalReport(
            campaign=self.config.campaign.value,
            matroid_class=self.matroid_class(),
            params=self.params(),
            threshold=self.threshold(),
            threshold_label=self.threshold_label(),
            verdict=Verdict.INCOMPLETE.value,
            complete=False,
            notes=list(self.notes) + [reason],
            artifacts=list(self.artifacts),
        )

    def write_artifact(self, suffix: str, content: str) -> str:
        """Write a counterexample file and remember its path"""
        path = Path(self.config.artifacts_dir) / f"{self.config.label()}-{suffix}.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(content)
        logger.error(f"Wrote counterexample artifact {path}")
        self.artifacts.append(str(path))
        return str(path)
