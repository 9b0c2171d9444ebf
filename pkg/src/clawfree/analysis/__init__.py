"""Claw, line and graph analysis"""

from .claws import (
    claws_of_size,
    find_claw,
    is_claw,
    is_claw_free,
    is_generic_claw,
    max_claw,
    merge_claw_reports,
    pseudoclaws,
)
from .graphs import graph_analysis
from .lines import line_profile, lines_of

__all__ = [
    "claws_of_size",
    "find_claw",
    "graph_analysis",
    "is_claw",
    "is_claw_free",
    "is_generic_claw",
    "line_profile",
    "lines_of",
    "max_claw",
    "merge_claw_reports",
    "pseudoclaws",
]
