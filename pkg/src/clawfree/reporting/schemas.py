"""
Pydantic schemas for every report clawfree emits
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class BaseSchema(BaseModel):
    """Base schema with common settings"""

    model_config = ConfigDict(populate_by_name=True, use_enum_values=True)


class ValidationReport(BaseSchema):
    """Result of checking a stored matroid against its backend invariants"""

    backend: str
    n: int
    rank: int
    valid: bool
    violations: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)


class ClawReport(BaseSchema):
    """Maximum claws of a matroid"""

    max_claw_size: Optional[int] = Field(
        default=None, description="None when the matroid has a loop, so no claw"
    )
    witnesses: List[List[int]] = Field(default_factory=list)
    truncated: bool = False
    counts_by_size: Dict[int, int] = Field(default_factory=dict)

    @field_validator("counts_by_size")
    @classmethod
    def sort_counts(cls, value: Dict) -> Dict:
        return dict(sorted(value.items()))


class LineProfile(BaseSchema):
    """Lines of a simple matroid grouped by size"""

    counts: Dict[int, int] = Field(default_factory=dict)
    triangles_through: Dict[int, int] = Field(default_factory=dict)
    triangle_free: bool = True

    @field_validator("counts", "triangles_through")
    @classmethod
    def sort_counts(cls, value: Dict) -> Dict:
        return dict(sorted(value.items()))


class TightExample(BaseSchema):
    """One isomorphism class attaining a campaign's bound"""

    canon: str
    label: str
    size: int
    rank: Optional[int] = None
    detail: Optional[str] = None
    diagnostics: Dict[str, bool] = Field(default_factory=dict)

    @field_validator("diagnostics")
    @classmethod
    def sort_diagnostics(cls, value: Dict) -> Dict:
        return dict(sorted(value.items()))


class ExtremalReport(BaseSchema):
    """Outcome of one verification campaign"""

    campaign: str
    matroid_class: Optional[str] = None
    params: Dict[str, int] = Field(default_factory=dict)
    threshold: int
    threshold_label: str
    observed_min: Optional[int] = None
    tight_classes: List[TightExample] = Field(default_factory=list)
    matched_prediction: bool = False
    verdict: str
    complete: bool = True
    counts_scanned: int = 0
    notes: List[str] = Field(default_factory=list)
    artifacts: List[str] = Field(default_factory=list)
    runtime_seconds: Optional[float] = None

    @field_validator("params")
    @classmethod
    def sort_params(cls, value: Dict) -> Dict:
        return dict(sorted(value.items()))


class PropertyFailure(BaseSchema):
    """A pseudoclaw that is not a claw, with what is needed to reproduce it"""

    source: str
    trial: int
    matroid: str
    contracted: List[int]
    k: int
    pseudoclaw: List[int]


class PropertyReport(BaseSchema):
    """Outcome of the contraction pseudoclaw property check"""

    name: str = "pseudoclaws-of-contractions-are-claws"
    seed: int
    trials: int
    random_checks: int = 0
    exhaustive_matroids: int = 0
    exhaustive_checks: int = 0
    failures: List[PropertyFailure] = Field(default_factory=list)
    passed: bool = True
    complete: bool = True
    runtime_seconds: Optional[float] = None


class EnumerationManifest(BaseSchema):
    """Describes a spooled enumeration file"""

    matroid_class: str
    params: Dict[str, Optional[int]] = Field(default_factory=dict)
    count: int
    generator_version: str
    records_file: str

    @field_validator("params")
    @classmethod
    def sort_params(cls, value: Dict) -> Dict:
        return dict(sorted(value.items()))


class CampaignEntry(BaseSchema):
    """One campaign in a batch plan"""

    campaign: str
    matroid_class: Optional[str] = None
    r: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    size_cap: Optional[int] = None
    trials: Optional[int] = None
    seed: Optional[int] = None


class CampaignPlan(BaseSchema):
    """A batch of campaigns loaded from YAML"""

    name: str = "plan"
    campaigns: List[CampaignEntry] = Field(default_factory=list)


class SuiteReport(BaseSchema):
    """Reports of every campaign in a plan"""

    plan: str
    reports: List[ExtremalReport] = Field(default_factory=list)
    properties: List[PropertyReport] = Field(default_factory=list)


class GraphAnalysis(BaseSchema):
    """Stable sets, cliques and induced forests of one graph"""

    n: int
    edges: int
    component_sizes: List[int] = Field(
        default_factory=list, description="Sizes, largest first"
    )
    max_stable_set: int
    max_clique: int
    largest_induced_forest: int
    forest_witness: List[int] = Field(default_factory=list)


class AnalysisReport(BaseSchema):
    """Everything `analyze` computed for one matroid or graph file"""

    claws: Optional[ClawReport] = None
    lines: Optional[LineProfile] = None
    validation: Optional[ValidationReport] = None
    graph: Optional[GraphAnalysis] = None
