"""One module per verification campaign"""

from .bound import BoundCampaign
from .contract_property import ContractPropertyCampaign
from .graph_theorem import GraphTheoremCampaign
from .lowrank import LowRankCampaign
from .triangle_free import TriangleFreeCampaign

__all__ = [
    "BoundCampaign",
    "ContractPropertyCampaign",
    "GraphTheoremCampaign",
    "LowRankCampaign",
    "TriangleFreeCampaign",
]
