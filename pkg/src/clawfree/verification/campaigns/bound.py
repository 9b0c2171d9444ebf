"""
Minimum size of a simple rank-r matroid with no (t+1)-claw.

Scans one class up to f(r, t) elements. Below f(r, t) nothing may be
claw-free; at f(r, t) the equality examples must be M_{r,t} alone when
r >= 2t, and otherwise M_{r,t} or coloops plus exactly r - t circuits that
are not all triangles.
"""

import logging
from typing import List, Tuple

from ...analysis.claws import is_claw_free
from ...constructions.size_functions import f_value
from ...core.config import EnumSpec, Verdict
from ...enumeration.enumerator import MatroidEnumerator
from ...matroids.base import Matroid
from ...matroids.io import serialize_matroids
from ...reporting.schemas import ExtremalReport, TightExample
from ..base_campaign import BaseCampaign
from ..classify import (
    CIRCUITS_LABEL,
    MRT_LABEL,
    classify,
    classify_components,
    tight_diagnostics,
)

logger = logging.getLogger(__name__)


class BoundCampaign(BaseCampaign):
    """Checks the f(r, t) bound and its equality cases on one matroid class"""

    def threshold(self) -> int:
        return f_value(self.config.r, self.config.t)

    def threshold_label(self) -> str:
        return "f(r,t)"

    def expected_shape(self, M: Matroid, label: str) -> bool:
        """Whether one tight example has a shape the equality case allows"""
        r, t = self.config.r, self.config.t
        if label == MRT_LABEL:
            return True
        if r <= t or r >= 2 * t:
            return False
        decomposition = classify_components(M)
        if decomposition is None:
            return False
        circuits = decomposition.circuits
        return len(circuits) == r - t and any(k != 3 for k in circuits)

    def scan(self) -> ExtremalReport:
        r, t = self.config.r, self.config.t
        bound = self.threshold()
        spec = EnumSpec(
            self.config.matroid_class, rank=r, n_max=bound, size_bound=bound
        )
        pairs = MatroidEnumerator(
            spec, shards=self.config.shards, deadline=self.deadline
        ).run()
        self.check_budget()

        claw_free: List[Tuple[bytes, Matroid]] = [
            (c, M) for c, M in pairs if is_claw_free(M, t)
        ]
        self.notes.append(
            f"{len(claw_free)} of {len(pairs)} classes have no {t + 1}-claw"
        )
        observed_min = min((M.n for _, M in claw_free), default=None)

        below = [M for _, M in claw_free if M.n < bound]
        if below:
            logger.error(
                f"{len(below)} matroids with no {t + 1}-claw below f({r},{t}) = {bound}"
            )
            self.write_artifact("below-bound", serialize_matroids(below))

        tight = []
        misfits = []
        for canon, M in claw_free:
            if M.n != bound:
                continue
            label, detail = classify(M, r, t)
            diagnostics = tight_diagnostics(M, t, label)
            example = TightExample(
                canon=canon.decode("ascii"),
                label=label,
                size=M.n,
                rank=M.rank,
                detail=detail,
                diagnostics=diagnostics,
            )
            tight.append(example)
            if not self.expected_shape(M, label) or not all(diagnostics.values()):
                misfits.append(M)

        labels = [example.label for example in tight]
        if MRT_LABEL not in labels:
            self.notes.append(f"M_({r},{t}) is not among the tight classes")
        if r >= 2 * t and len(tight) > 1:
            self.notes.append(f"r >= 2t but {len(tight)} tight classes were found")
        if t < r < 2 * t and CIRCUITS_LABEL in labels:
            self.notes.append("circuits+coloops equality examples present")
        if misfits:
            logger.error(f"{len(misfits)} tight examples outside the predicted shapes")
            self.write_artifact("tight", serialize_matroids(misfits))

        matched = (
            not below
            and observed_min == bound
            and not misfits
            and MRT_LABEL in labels
            and (r < 2 * t or len(tight) == 1)
        )
        verdict = Verdict.MATCHED if matched else Verdict.MISMATCH
        return self.report(verdict, observed_min, tight, len(pairs), matched)
