"""
Minimum edge count of an n-vertex graph with no induced forest on 2t+1 vertices.

Graphs are generated up to g(n, t) edges with the forest filter applied at
every level. Equality examples must have complete components on 1, 3 or 4
vertices when n < 4t and must be G_{n,t} when n >= 4t. For n >= 3t the Turan
bound for graphs with no stable set of size t+1 is checked alongside.
"""

import logging
from typing import Dict, List

from ...constructions.families import turan_union_graph
from ...constructions.size_functions import g_mismatch_witness, g_value, turan_edges
from ...core.bitset import popcount
from ...core.config import Verdict
from ...graphs.canon import canon_graph
from ...graphs.enumerate import enumerate_graphs
from ...graphs.graph import SimpleGraph, serialize_graphs
from ...reporting.schemas import ExtremalReport, TightExample
from ..base_campaign import BaseCampaign

logger = logging.getLogger(__name__)

CLIQUE_UNION_LABEL = "cliques on 1,3,4 vertices"
TURAN_LABEL = "G_{n,t}"


def small_clique_union(G: SimpleGraph) -> bool:
    """Whether every component is a complete graph on 1, 3 or 4 vertices"""
    return all(popcount(c) in (1, 3, 4) and G.is_clique(c) for c in G.components())


def component_sizes(G: SimpleGraph) -> List[int]:
    return sorted((popcount(c) for c in G.components()), reverse=True)


class GraphTheoremCampaign(BaseCampaign):
    """Checks g(n, t) and its equality cases by exhaustive graph generation"""

    def threshold(self) -> int:
        return g_value(self.config.n, self.config.t)

    def threshold_label(self) -> str:
        return "g(n,t)"

    def params(self) -> Dict[str, int]:
        return {"n": self.config.n, "t": self.config.t}

    def scan(self) -> ExtremalReport:
        n, t = self.config.n, self.config.t
        bound = self.threshold()
        forest = 2 * t + 1
        if n < forest:
            self.notes.append(f"n < 2t+1: every graph qualifies and g(n,t) = {bound}")

        graphs = enumerate_graphs(
            n,
            max_edges=bound,
            forbidden_forest=forest if n >= forest else None,
            shards=self.config.shards,
        )
        self.check_budget()
        observed_min = min((G.edge_count() for G in graphs), default=None)

        below = [G for G in graphs if G.edge_count() < bound]
        if below:
            logger.error(
                f"{len(below)} graphs without an induced {forest}-vertex forest "
                f"below g = {bound}"
            )
            self.write_artifact("below-bound", serialize_graphs(below))

        turan = canon_graph(turan_union_graph(n, t))
        tight = []
        misfits = []
        for G in graphs:
            if G.edge_count() != bound:
                continue
            canon = canon_graph(G)
            if canon == turan:
                label = TURAN_LABEL
            elif small_clique_union(G):
                label = CLIQUE_UNION_LABEL
            else:
                label = "other"
            detail = "components " + "+".join(str(k) for k in component_sizes(G))
            if n >= 4 * t:
                ok = canon == turan
            else:
                ok = small_clique_union(G)
            tight.append(
                TightExample(
                    canon=canon.decode("ascii").replace("\n", "/").rstrip("/"),
                    label=label,
                    size=G.edge_count(),
                    detail=detail,
                    diagnostics={"equality_clause": ok},
                )
            )
            if not ok:
                misfits.append(G)

        if misfits:
            logger.error(f"{len(misfits)} tight graphs outside the equality clause")
            self.write_artifact("tight", serialize_graphs(misfits))
        if n >= 4 * t and len(tight) > 1:
            self.notes.append(f"n >= 4t but {len(tight)} tight classes were found")

        turan_ok = self.turan_check()
        matched = (
            not below
            and observed_min == bound
            and not misfits
            and (n < 4 * t or len(tight) == 1)
            and turan_ok
        )
        verdict = Verdict.MATCHED if matched else Verdict.MISMATCH
        return self.report(verdict, observed_min, tight, len(graphs), matched)

    def turan_check(self) -> bool:
        """Graphs with stable set number at most t have at least |E(G_{n,t})| edges"""
        n, t = self.config.n, self.config.t
        if n < 3 * t:
            witness = g_mismatch_witness(t)
            self.notes.append(
                "Turan cross-check needs n >= 3t; "
                f"|E(G_n,t)| first differs from g at n = {witness}"
            )
            return True
        edges = turan_edges(n, t)
        graphs = enumerate_graphs(
            n, max_edges=edges, max_stable=t, shards=self.config.shards
        )
        self.check_budget()
        fewest = min((G.edge_count() for G in graphs), default=None)
        ok = fewest == edges
        outcome = "ok" if ok else "failed"
        self.notes.append(
            f"Turan cross-check: fewest edges {fewest}, expected {edges}: {outcome}"
        )
        if not ok:
            logger.error("Turan cross-check failed")
            sparse = [G for G in graphs if G.edge_count() < edges]
            self.write_artifact("turan", serialize_graphs(sparse))
        return ok
