"""Acyclic sets, acyclic colourings and dichromatic polynomials of small digraphs."""

__version__ = "0.1.0"

from .digraph import (  # noqa: E402
    INFINITE, Digraph, DegreeTriple, acyclic_subset_table, degree_sequence,
    enumerate_induced_cycles, girth, is_acyclic, mask_of, parse_edge_list,
    strongly_connected_components, to_dot, to_edge_list, vertices,
)
from .errors import (  # noqa: E402
    CapacityError, DigraphError, EdgeListError, NotATournamentError, PreconditionError,
)
from .independence import (  # noqa: E402
    alpha, all_bounds, caro_wei_directed_bound, exact_max_acyclic_set,
)
from .coloring import (  # noqa: E402
    Coloring, exact_chromatic_number, exact_coloring, is_proper_coloring,
)
from .polynomial import Polynomial, dichromatic_polynomial  # noqa: E402
