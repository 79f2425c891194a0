#!/usr/bin/env python3
"""
Recover the dissections behind the two bundled decagon friezes.

figure2 is a unimodular frieze, so only the 1430 triangulations need to be
tried.  figure3 has zero diamonds and needs all 20793 dissections.
"""

import time

from genfrieze.frieze import builtin_fixture, fixture_diamonds
from genfrieze.cli import search_fixture

for name, tri_only in (("figure2", True), ("figure3", False)):
    fixture = builtin_fixture(name)
    print(f"{name}: diamonds {sorted(set(fixture_diamonds(fixture)))}")
    for row in fixture.rows:
        print("   ", row)
    t0 = time.perf_counter()
    searched, hits = search_fixture(fixture, triangulations_only=tri_only, jobs=2)
    print(f"  {len(hits)} of {searched} match in {time.perf_counter() - t0:.1f}s")
    # the hits are one dissection moved around by rotation and reflection
    for dis, placements in hits[:3]:
        print(f"  [{dis}] placed at (shift, reflected) {placements}")
