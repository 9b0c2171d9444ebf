"""
clawfree - claw-free matroids and graphs

Constructions of projective and affine binary geometries and their sums,
claw analysis of small matroids, isomorph-free enumeration of small matroid
and graph classes, and campaigns that compare exhaustive minima against the
extremal size functions f(r, t) and g(n, t).
"""

__version__ = "0.1.0"

from .core.config import (
    CampaignConfig,
    CampaignKind,
    EnumSpec,
    FamilySpec,
    MatroidClass,
)
from .enumeration.enumerator import MatroidEnumerator
from .verification.campaign_runner import CampaignRunner

__all__ = [
    "CampaignConfig",
    "CampaignKind",
    "CampaignRunner",
    "EnumSpec",
    "FamilySpec",
    "MatroidClass",
    "MatroidEnumerator",
]
