#!/usr/bin/env python3
"""
Count subrepresentations over GF(q) by brute force, interpolate to q=1,
and compare with the combinatorial Euler characteristics.
"""

from genfrieze import Diagonal, Dissection, ar_triangle, chi_table, g_module
from genfrieze.gmodule import format_module
from genfrieze.grassmann import chi_via_fq, count_subreps_fq

D = Dissection.parse("0-3", 6)
tri = ar_triangle(Diagonal(2, 5), 6)
M = g_module(D, tri.middle)
print("module:", format_module(M))

# a two-dimensional space at 0-3: the middle Grassmannian is a projective line
table = chi_table(M)
for e, chi in sorted(table.items()):
    counts = {q: count_subreps_fq(M, e, q) for q in (2, 3, 4)}
    dims = ",".join(f"{d}:{k}" for d, k in e) or "0"
    print(f"e={dims:<12} chi={chi}  points over GF(q): {counts}  "
          f"interpolated: {chi_via_fq(M, e)}")
