"""Verification campaigns and their runner"""

from .base_campaign import BaseCampaign
from .campaign_runner import CampaignRunner, exit_code_for
from .classify import Decomposition, classify, classify_components, tight_diagnostics

__all__ = [
    "BaseCampaign",
    "CampaignRunner",
    "Decomposition",
    "classify",
    "classify_components",
    "exit_code_for",
    "tight_diagnostics",
]
