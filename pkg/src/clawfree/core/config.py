"""
Configuration classes and enums for clawfree
"""

import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from .errors import CapacityError, InputError

# Configure logging
logger = logging.getLogger(__name__)

# Ground sets are bit masks over a single machine word
WORD_WIDTH = 64

# Enumeration and canonical-form capacities
BINARY_MAX_RANK = 6
BINARY_RANK6_MAX_SIZE = 8
RANK3_MAX_ELEMENTS = 9
BASES_MAX_ELEMENTS = 8
BASES_MAX_SUBSETS = 70
CANON_MAX_ELEMENTS = 15
BINARY_SCREEN_MAX_ELEMENTS = 15
GRAPH_MAX_VERTICES = 32
GRAPH_CANON_MAX_VERTICES = 12
GRAPH_ENUM_MAX_VERTICES = 10
GEOMETRY_MAX_RANK = 20

# Claw witness lists are truncated; counts stay exact
WITNESS_LIMIT = 10_000

GENERATOR_VERSION = "1"


class Backend(Enum):
    """Matroid storage backends"""

    BINARY = "binary"
    BASES = "bases"


class MatroidClass(Enum):
    """Matroid classes that can be enumerated"""

    BINARY = "binary"
    RANK3 = "rank3"
    BASES = "bases"


class FamilyKind(Enum):
    """Named constructions"""

    PG = "pg"
    AG = "ag"
    MRT = "mrt"
    FREE = "free"
    CIRCUIT = "circuit"
    CIRCUITS_COLOOPS = "circuits_coloops"
    TURAN_UNION = "turan_union"
    AG_SUM = "ag_sum"


# Short tokens accepted on the command line
FAMILY_TOKENS = {
    "pg": FamilyKind.PG,
    "ag": FamilyKind.AG,
    "mrt": FamilyKind.MRT,
    "free": FamilyKind.FREE,
    "circuit": FamilyKind.CIRCUIT,
    "cc": FamilyKind.CIRCUITS_COLOOPS,
    "circuits_coloops": FamilyKind.CIRCUITS_COLOOPS,
    "gnt": FamilyKind.TURAN_UNION,
    "turan_union": FamilyKind.TURAN_UNION,
    "agsum": FamilyKind.AG_SUM,
    "ag_sum": FamilyKind.AG_SUM,
}

FAMILY_SHORT_TOKENS = {
    FamilyKind.PG: "pg",
    FamilyKind.AG: "ag",
    FamilyKind.MRT: "mrt",
    FamilyKind.FREE: "free",
    FamilyKind.CIRCUIT: "circuit",
    FamilyKind.CIRCUITS_COLOOPS: "cc",
    FamilyKind.TURAN_UNION: "gnt",
    FamilyKind.AG_SUM: "agsum",
}


class OutputFormat(Enum):
    """Report output formats"""

    JSON = "json"
    TABLE = "table"
    CSV = "csv"


class Verdict(Enum):
    """Campaign outcomes"""

    MATCHED = "matched"
    MISMATCH = "mismatch"
    INCOMPLETE = "incomplete"
    COUNTEREXAMPLE = "counterexample-found"
    CONSISTENT = "consistent-at-scale"


class CampaignKind(Enum):
    """Verification campaigns"""

    BOUND = "bound"
    LOWRANK = "lowrank"
    GRAPH = "graph"
    TRIANGLE_FREE = "trianglefree"
    CONTRACT = "contract"


class ExitCode:
    """Process exit codes"""

    OK = 0
    ERROR = 1
    MISMATCH = 2
    INCOMPLETE = 3
    USAGE = 64


def log_level_from_env(default: int = logging.WARNING) -> int:
    """Read the CLAW_LOG environment variable as a logging level"""
    value = os.environ.get("CLAW_LOG", "").strip()
    if not value:
        return default
    if value.isdigit():
        return int(value)
    level = logging.getLevelName(value.upper())
    if isinstance(level, int):
        return level
    logger.warning(f"Ignoring unknown CLAW_LOG level {value!r}")
    return default


@dataclass
class EnumSpec:
    """Parameters of one matroid enumeration"""

    matroid_class: MatroidClass
    rank: int
    n_max: int
    size_bound: Optional[int] = None
    require_simple: bool = True

    def __post_init__(self) -> None:
        """Validate configuration after initialization"""
        if isinstance(self.matroid_class, str):
            self.matroid_class = MatroidClass(self.matroid_class)

        if self.rank < 1:
            raise InputError("Enumeration rank must be at least 1")
        if self.n_max < 0:
            raise InputError("n_max cannot be negative")

        if self.matroid_class == MatroidClass.BINARY:
            bound = self.effective_bound
            if self.rank > BINARY_MAX_RANK:
                raise CapacityError(
                    f"binary enumeration supports rank <= {BINARY_MAX_RANK}"
                )
            if self.rank == BINARY_MAX_RANK and bound > BINARY_RANK6_MAX_SIZE:
                raise CapacityError(
                    f"rank-{BINARY_MAX_RANK} binary enumeration needs size bound "
                    f"<= {BINARY_RANK6_MAX_SIZE}"
                )
        elif self.matroid_class == MatroidClass.RANK3:
            if self.rank != 3:
                raise InputError("rank3 class has rank 3")
            if self.effective_bound > RANK3_MAX_ELEMENTS:
                raise CapacityError(
                    f"rank3 enumeration supports n <= {RANK3_MAX_ELEMENTS}"
                )
        elif self.matroid_class == MatroidClass.BASES:
            if self.effective_bound > BASES_MAX_ELEMENTS:
                raise CapacityError(
                    f"bases enumeration supports n <= {BASES_MAX_ELEMENTS}"
                )

    @property
    def effective_bound(self) -> int:
        """Largest ground set the enumeration will produce"""
        bound = self.n_max
        if self.size_bound is not None:
            bound = min(bound, self.size_bound)
        if self.matroid_class == MatroidClass.BINARY:
            bound = min(bound, 2**self.rank - 1)
        return bound


@dataclass
class FamilySpec:
    """A named construction with its integer parameters"""

    kind: FamilyKind
    params: Tuple[int, ...] = ()
    coloops: int = 0

    def __post_init__(self) -> None:
        """Validate parameter ranges per kind"""
        if isinstance(self.kind, str):
            self.kind = FamilyKind(self.kind)
        self.params = tuple(int(p) for p in self.params)

        expected = {
            FamilyKind.PG: 1,
            FamilyKind.AG: 1,
            FamilyKind.MRT: 2,
            FamilyKind.FREE: 1,
            FamilyKind.CIRCUIT: 1,
            FamilyKind.TURAN_UNION: 2,
            FamilyKind.AG_SUM: 2,
        }
        if self.kind in expected and len(self.params) != expected[self.kind]:
            raise InputError(
                f"{self.kind.value} takes {expected[self.kind]} parameter(s), "
                f"got {len(self.params)}"
            )
        if any(p < 0 for p in self.params) or self.coloops < 0:
            raise InputError("family parameters cannot be negative")

        if self.kind in (FamilyKind.PG, FamilyKind.AG) and self.params[0] < 1:
            raise InputError(f"{self.kind.value} needs r >= 1")
        if self.kind in (FamilyKind.MRT, FamilyKind.TURAN_UNION, FamilyKind.AG_SUM):
            if self.params[1] < 1:
                raise InputError("t must be at least 1")
        if self.kind == FamilyKind.CIRCUIT and self.params[0] < 2:
            raise InputError("circuit size must be at least 2")
        if self.kind == FamilyKind.CIRCUITS_COLOOPS and any(k < 2 for k in self.params):
            raise InputError("circuit sizes must be at least 2")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse strings such as ``pg:4``, ``mrt:5,2``, ``cc:3,3+1`` or ``gnt:9,2``"""
        token, sep, rest = text.strip().partition(":")
        if not sep:
            raise InputError(f"Family spec {text!r} must look like kind:params")
        kind = FAMILY_TOKENS.get(token.lower())
        if kind is None:
            raise InputError(f"Unknown family {token!r}")

        coloops = 0
        if kind == FamilyKind.CIRCUITS_COLOOPS and "+" in rest:
            rest, _, extra = rest.partition("+")
            coloops = _parse_int(extra, text)

        params = tuple(_parse_int(p, text) for p in rest.split(",") if p.strip())
        return cls(kind=kind, params=params, coloops=coloops)

    def __str__(self) -> str:
        body = ",".join(str(p) for p in self.params)
        if self.kind == FamilyKind.CIRCUITS_COLOOPS and self.coloops:
            body += f"+{self.coloops}"
        return f"{FAMILY_SHORT_TOKENS[self.kind]}:{body}"


def _parse_int(value: str, context: str) -> int:
    """Parse an integer token of a family spec"""
    try:
        return int(value.strip())
    except ValueError:
        raise InputError(f"Bad integer {value!r} in {context!r}") from None


@dataclass
class CommandConfig:
    """Configuration of one CLI invocation"""

    subcommand: str
    action: Optional[str] = None
    family: Optional[str] = None
    matroid_class: Optional[MatroidClass] = None
    r: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    size_cap: Optional[int] = None
    in_path: Optional[str] = None
    out_path: Optional[str] = None
    artifacts_dir: str = "artifacts"
    output_format: OutputFormat = OutputFormat.JSON
    shards: int = field(default_factory=lambda: os.cpu_count() or 1)
    seed: int = 0
    trials: int = 10_000
    budget_seconds: Optional[float] = None
    timing: bool = False
    plan_path: Optional[str] = None
    r_max: Optional[int] = None
    t_max: Optional[int] = None
    triangle_free: bool = False
    loopless: bool = False
    analyses: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        """Validate configuration after initialization"""
        if not self.subcommand:
            raise InputError("Subcommand cannot be empty")

        # Ensure enum types
        try:
            if isinstance(self.output_format, str):
                self.output_format = OutputFormat(self.output_format)
            if isinstance(self.matroid_class, str):
                self.matroid_class = MatroidClass(self.matroid_class)
        except ValueError as e:
            raise InputError(str(e))

        if self.shards < 1:
            raise InputError("--shards must be at least 1")
        if self.trials < 1:
            raise InputError("--trials must be at least 1")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise InputError("--budget-seconds must be positive")
        for name in ("r", "t", "n", "n_max", "size_cap", "r_max", "t_max"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InputError(f"--{name.replace('_', '-')} cannot be negative")
        if self.t is not None and self.t < 1:
            raise InputError("--t must be at least 1")

    def campaign_config(self, kind: CampaignKind) -> "CampaignConfig":
        """Campaign parameters carried by this invocation"""
        return CampaignConfig(
            campaign=kind,
            matroid_class=self.matroid_class,
            r=self.r,
            t=self.t,
            n=self.n,
            n_max=self.n_max,
            size_cap=self.size_cap,
            trials=self.trials,
            seed=self.seed,
            shards=self.shards,
            budget_seconds=self.budget_seconds,
            timing=self.timing,
            artifacts_dir=self.artifacts_dir,
        )


# Parameters each campaign needs
CAMPAIGN_REQUIRED = {
    CampaignKind.BOUND: ("matroid_class", "r", "t"),
    CampaignKind.LOWRANK: ("r", "t"),
    CampaignKind.GRAPH: ("n", "t"),
    CampaignKind.TRIANGLE_FREE: ("r", "t"),
    CampaignKind.CONTRACT: (),
}


@dataclass
class CampaignConfig:
    """Parameters of one verification campaign"""

    campaign: CampaignKind
    matroid_class: Optional[MatroidClass] = None
    r: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    size_cap: Optional[int] = None
    trials: int = 10_000
    seed: int = 0
    shards: int = 1
    budget_seconds: Optional[float] = None
    timing: bool = False
    artifacts_dir: str = "artifacts"

    def __post_init__(self) -> None:
        """Validate configuration after initialization"""
        try:
            if isinstance(self.campaign, str):
                self.campaign = CampaignKind(self.campaign)
            if isinstance(self.matroid_class, str):
                self.matroid_class = MatroidClass(self.matroid_class)
        except ValueError as e:
            raise InputError(str(e))

        for name in CAMPAIGN_REQUIRED[self.campaign]:
            if getattr(self, name) is None:
                option = "--" + name.replace("_", "-")
                raise InputError(f"{self.campaign.value} campaign needs {option}")
        for name in ("r", "n", "n_max", "size_cap"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InputError(f"{name} cannot be negative")
        if self.t is not None and self.t < 1:
            raise InputError("t must be at least 1")
        if self.trials < 1:
            raise InputError("trials must be at least 1")
        if self.shards < 1:
            raise InputError("shards must be at least 1")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise InputError("budget must be positive")

        if self.campaign == CampaignKind.LOWRANK and self.r < self.t:
            raise InputError("lowrank campaign needs r >= t")
        if self.campaign == CampaignKind.TRIANGLE_FREE and self.r % self.t:
            raise InputError("trianglefree campaign needs t dividing r")

    def label(self) -> str:
        """Stable name used for artifact files"""
        parts = [self.campaign.value]
        if self.matroid_class is not None:
            parts.append(self.matroid_class.value)
        for name in ("r", "t", "n", "n_max", "size_cap"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}{value}")
        return "-".join(parts).replace("_", "")
