"""Named constructions and extremal size functions"""

from .families import (
    ag,
    ag_sum,
    build_family,
    circuit,
    circuits_coloops,
    free,
    geometry,
    m_rt,
    pg,
    turan_union_graph,
)
from .size_functions import (
    closed_form_f,
    f_value,
    g_mismatch_witness,
    g_value,
    turan_edges,
)

__all__ = [
    "ag",
    "ag_sum",
    "build_family",
    "circuit",
    "circuits_coloops",
    "closed_form_f",
    "f_value",
    "free",
    "g_mismatch_witness",
    "g_value",
    "geometry",
    "m_rt",
    "pg",
    "turan_edges",
    "turan_union_graph",
]
