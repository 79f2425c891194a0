#!/usr/bin/env python3
"""
Walk through the frieze of one dissection of the octagon.

Both constructions are shown: the combinatorial m-numbers and the cluster
character of each diagonal.  They agree cell by cell.
"""

import numpy as np

from genfrieze import Dissection, frieze_grid, m_matrix, rho_table
from genfrieze.frieze import grid_diamonds

D = Dissection.parse("0-2,0-3,5-7", 8)
print("dissection:", D, " pieces:", D.N - len(D))

m = m_matrix(D)
print("\nm-numbers as a matrix (zero on polygon edges and the diagonal):")
print(np.array(m))

# rho is a count of successor-closed subsets of the string module G(x)
table = rho_table(D)
for x in sorted(table)[:6]:
    print(f"rho({x}) = {table[x]}  m = {m[x.a][x.b]}")

grid = frieze_grid(D, "cc")
assert grid == frieze_grid(D, "bhj")
print("\nfrieze, staggered:")
print(grid.render())

# diamonds are 1 on triangulated pieces and can drop to 0 elsewhere
diffs = np.array([a * d - b * c for a, b, c, d in grid_diamonds(grid)])
print("\ndiamond values:", np.bincount(diffs))
