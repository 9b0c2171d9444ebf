"""
Main Campaign Runner
Dispatches campaign configurations and runs batch plans
"""

import logging
from pathlib import Path
from typing import Dict, Iterator, Optional, Type, Union

import yaml
from pydantic import ValidationError

from ..core.config import CampaignConfig, CampaignKind, ExitCode, Verdict
from ..core.errors import InputError
from ..reporting.schemas import (
    CampaignPlan,
    ExtremalReport,
    PropertyReport,
    SuiteReport,
)
from .base_campaign import BaseCampaign

logger = logging.getLogger(__name__)

Report = Union[ExtremalReport, PropertyReport]


class CampaignRunner:
    """Runs single campaigns and YAML plans of campaigns"""

    def __init__(
        self,
        shards: int = 1,
        budget_seconds: Optional[float] = None,
        timing: bool = False,
        artifacts_dir: str = "artifacts",
    ):
        self.shards = shards
        self.budget_seconds = budget_seconds
        self.timing = timing
        self.artifacts_dir = artifacts_dir
        self._setup_campaigns()

    def _setup_campaigns(self) -> None:
        """Register every campaign class"""
        # Import campaigns here to avoid circular imports
        from .campaigns.bound import BoundCampaign
        from .campaigns.contract_property import ContractPropertyCampaign
        from .campaigns.graph_theorem import GraphTheoremCampaign
        from .campaigns.lowrank import LowRankCampaign
        from .campaigns.triangle_free import TriangleFreeCampaign

        self.campaigns: Dict[CampaignKind, Type[BaseCampaign]] = {
            CampaignKind.BOUND: BoundCampaign,
            CampaignKind.LOWRANK: LowRankCampaign,
            CampaignKind.GRAPH: GraphTheoremCampaign,
            CampaignKind.TRIANGLE_FREE: TriangleFreeCampaign,
            CampaignKind.CONTRACT: ContractPropertyCampaign,
        }

    def run(self, config: CampaignConfig) -> Report:
        """Run one campaign"""
        campaign = self.campaigns[config.campaign](config)
        return campaign.run()

    def load_plan(self, path: Union[str, Path]) -> CampaignPlan:
        """Read and validate a YAML campaign plan"""
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except OSError as e:
            raise InputError(f"cannot read plan {path}: {e}")
        except yaml.YAMLError as e:
            raise InputError(f"plan {path} is not valid YAML: {e}")
        try:
            return CampaignPlan.model_validate(data or {})
        except ValidationError as e:
            raise InputError(f"plan {path} is invalid: {e}")

    def configs(self, plan: CampaignPlan) -> Iterator[CampaignConfig]:
        """Campaign configurations of a plan, with runner-wide settings applied"""
        for entry in plan.campaigns:
            values = entry.model_dump(exclude_none=True)
            yield CampaignConfig(
                shards=self.shards,
                budget_seconds=self.budget_seconds,
                timing=self.timing,
                artifacts_dir=self.artifacts_dir,
                **values,
            )

    def run_plan(self, plan: CampaignPlan) -> SuiteReport:
        """Run every campaign of a plan in order"""
        logger.info(f"Running plan {plan.name} with {len(plan.campaigns)} campaigns")
        suite = SuiteReport(plan=plan.name)
        for config in list(self.configs(plan)):
            report = self.run(config)
            if isinstance(report, PropertyReport):
                suite.properties.append(report)
            else:
                suite.reports.append(report)
        return suite


def exit_code_for(report: Union[Report, SuiteReport]) -> int:
    """Process exit code: mismatches and counterexamples before incomplete coverage"""
    if isinstance(report, SuiteReport):
        reports = list(report.reports) + list(report.properties)
        codes = [exit_code_for(r) for r in reports]
        if ExitCode.MISMATCH in codes:
            return ExitCode.MISMATCH
        return max(codes, default=ExitCode.OK)
    if isinstance(report, PropertyReport):
        if report.failures:
            return ExitCode.MISMATCH
        return ExitCode.OK if report.complete else ExitCode.INCOMPLETE
    if report.verdict in (Verdict.MISMATCH.value, Verdict.COUNTEREXAMPLE.value):
        return ExitCode.MISMATCH
    if report.verdict == Verdict.INCOMPLETE.value:
        return ExitCode.INCOMPLETE
    return ExitCode.OK
