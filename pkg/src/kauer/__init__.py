"""Brauer graphs, generalized Kauer moves and the combinatorics of their
Brauer graph algebras."""

from ._accel import BACKEND
from .errors import (CutError, GradingError, InvalidGraphError, KauerError, SectorError,
                     SubsetError)
from .graph import (BrauerGraph, canonical_form, components, edge_names, edges, euler_characteristic,
                    faces, is_bipartite, is_connected, is_isomorphic, relabel, validate, vertices)
from .invariants import (bipartite_transfer, conjugator, invariants, iota_sigma_commutes, reach,
                         replay)
from .io import GraphDocument, ParseError, parse, serialize
from .moves import (INFINITE, GradedBrauerGraph, Sector, graded_multi_move, graded_sector_move,
                    kauer_move, maximal_sectors, run_length, sectors, stable_subset,
                    standard_kauer_move)
from .permutation import Permutation, orbits
from .quiver import (algebra_dimension, check_main_theorem, cut_to_grading, gentle_check,
                     gentle_quotient, grading_to_cut, is_admissible_cut, quiver_of, relations_of,
                     special_cycles, special_i_cycles)

__version__ = "0.1.0"
