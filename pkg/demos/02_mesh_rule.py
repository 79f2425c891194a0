#!/usr/bin/env python3
"""
The mesh rule along every AR triangle, and where it stops being exact.
"""

from genfrieze import Dissection, all_ind_objects, ar_triangle, mesh_report, rho_table

hexagon = Dissection.parse("0-3", 6)
table = rho_table(hexagon)

for c in all_ind_objects(6):
    tri = ar_triangle(c, 6)
    rep = mesh_report(hexagon, c, table)
    middle = "+".join(map(str, tri.middle)) or "0"
    print(f"{str(tri.start):>4} -> {middle:>8} -> {str(tri.end):>4}   "
          f"difference {rep.difference}  split={rep.split}")

# a triangulation never splits a mesh
fan = Dissection.parse("0-2,0-3,0-4", 6)
print("\nfan:", {mesh_report(fan, c).difference for c in all_ind_objects(6)})
