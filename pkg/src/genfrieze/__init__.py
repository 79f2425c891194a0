"""Generalised friezes on the cluster category of type A_n.

Two independent routes to the same integers: propagation of values across
the pieces of a polygon dissection (``bhj``), and Euler characteristics of
submodule Grassmannians of string modules (``ccmap``).
"""

from .bhj import m_matrix, m_row, m_value, mesh_difference_m
from .ccmap import (FriezeViolation, MeshReport, NotCrossing, extension_check, mesh_report, rho,
                    rho_table)
from .cluster import MeshTriangle, all_ind_objects, ar_triangle, ext1_dim, suspend, tau
from .frieze import (FriezeFixture, FriezeGrid, MalformedFixture, builtin_fixture,
                     fixture_alignments, frieze_grid, load_fixture, match_fixture)
from .gmodule import (crossing_sequence, dim_vec, g_module, is_isomorphic, mesh_is_split,
                      string_of_arc)
from .grassmann import (InsufficientSamples, UnsupportedField, chi_table, chi_total, chi_via_fq,
                        count_subreps_fq)
from .polygon import (CrossingDiagonals, DegenerateDiagonal, Diagonal, Dissection,
                      DuplicateDiagonal, crosses, enumerate_dissections, enumerate_triangulations,
                      make_diagonal, piece_adjacency, pieces, random_dissection)
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"
