"""
Minimum size of a loopless rank-r matroid with no (t+1)-claw, which is 2r - t.

Every equality example should split into coloops and exactly r - t circuits.
The campaign also reports whether the parallel pairs plus coloops matroid is
the only equality example, since the circuit sizes are otherwise free.
"""

import logging

from ...analysis.claws import is_claw_free
from ...core.config import EnumSpec, MatroidClass, Verdict
from ...enumeration.enumerator import MatroidEnumerator
from ...matroids.io import serialize_matroids
from ...reporting.schemas import ExtremalReport, TightExample
from ..base_campaign import BaseCampaign
from ..classify import CIRCUITS_LABEL, Decomposition, classify, classify_components

logger = logging.getLogger(__name__)


class LowRankCampaign(BaseCampaign):
    """Checks the 2r - t bound over loopless matroids in the bases class"""

    def threshold(self) -> int:
        return 2 * self.config.r - self.config.t

    def threshold_label(self) -> str:
        return "2r-t"

    def matroid_class(self) -> str:
        return MatroidClass.BASES.value

    def scan(self) -> ExtremalReport:
        r, t = self.config.r, self.config.t
        bound = self.threshold()
        n_max = self.config.n_max if self.config.n_max is not None else bound
        spec = EnumSpec(MatroidClass.BASES, rank=r, n_max=n_max, require_simple=False)
        pairs = MatroidEnumerator(
            spec, loopless_only=True, shards=self.config.shards, deadline=self.deadline
        ).run()
        self.check_budget()

        claw_free = [(c, M) for c, M in pairs if is_claw_free(M, t)]
        self.notes.append(
            f"{len(claw_free)} of {len(pairs)} loopless classes have no {t + 1}-claw"
        )
        observed_min = min((M.n for _, M in claw_free), default=None)
        if n_max < bound:
            self.notes.append(f"n_max {n_max} is below 2r-t; only the bound is checked")

        below = [M for _, M in claw_free if M.n < bound]
        if below:
            logger.error(
                f"{len(below)} loopless matroids with no {t + 1}-claw "
                f"below 2r-t = {bound}"
            )
            self.write_artifact("below-bound", serialize_matroids(below))

        tight = []
        misfits = []
        shapes = set()
        for canon, M in claw_free:
            if M.n != bound:
                continue
            decomposition = classify_components(M)
            if decomposition is not None:
                label, detail = CIRCUITS_LABEL, str(decomposition)
                shapes.add(decomposition)
            else:
                label, detail = classify(M, r, t)
            ok = decomposition is not None and len(decomposition.circuits) == r - t
            tight.append(
                TightExample(
                    canon=canon.decode("ascii"),
                    label=label,
                    size=M.n,
                    rank=M.rank,
                    detail=detail,
                    diagnostics={"circuit_count": ok},
                )
            )
            if not ok:
                misfits.append(M)

        if misfits:
            logger.error(
                f"{len(misfits)} tight examples are not {r - t} circuits plus coloops"
            )
            self.write_artifact("tight", serialize_matroids(misfits))

        if tight:
            pairs_only = Decomposition((2,) * (r - t), t)
            if shapes == {pairs_only} and not misfits:
                self.notes.append(
                    "parallel pairs plus coloops is the unique equality example here"
                )
            else:
                others = sorted(str(shape) for shape in shapes if shape != pairs_only)
                self.notes.append(
                    "parallel pairs plus coloops is not the unique equality example: "
                    + "; ".join(others)
                )
                logger.warning("Loopless uniqueness remark fails at this scale")

        if n_max < bound:
            matched = not below
        else:
            matched = not below and observed_min == bound and not misfits
        verdict = Verdict.MATCHED if matched else Verdict.MISMATCH
        return self.report(verdict, observed_min, tight, len(pairs), matched)
