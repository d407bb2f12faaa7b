"""Formulas against brute force at q = 5, end to end.

Nothing here trusts the closed forms: pairs are enumerated explicitly,
partitioned into orbits under materialized stabilizers, and searched for
reversing conjugators.  The numbers then have to agree with the census.
"""

from twistedmaps import (make_field, orbit_counts, reflexible_orbit_counts)
from twistedmaps.canonical import all_classes, stabilizer_size
from twistedmaps.oracle import (closure_order, enumerate_orbits,
                                is_reflexible, orbit_count_summary,
                                quad_pair, reflexible_orbit_tally)

q = 5
F = make_field(5, 2)
orbits = enumerate_orbits(q)

print("orbit partition at q = %d" % q)
for cls, cls_orbits in orbits.items():
    sizes = {len(o) for o in cls_orbits}
    print("  %s i=%d: %3d orbits, every orbit of size %s (stabilizer %d)"
          % (cls.form, cls.i, len(cls_orbits), sorted(sizes),
             stabilizer_size(cls, q)))
    assert sizes == {stabilizer_size(cls, q)}
print()

summary = orbit_count_summary(q, orbits=orbits)
expected = orbit_counts(q)
print("%-18s %10s %10s" % ("kind", "formula", "oracle"))
for key in ("dia_generic", "dia_exceptional", "off_generic",
            "off_exceptional", "total"):
    print("%-18s %10d %10d" % (key, expected[key], summary[key]))
    assert expected[key] == summary[key]
print()

tally = reflexible_orbit_tally(q, orbits=orbits)
rexpected = reflexible_orbit_counts(q)
print("reflexible: formula dia %d / off %d, oracle dia %d / off %d"
      % (rexpected["dia_total"], rexpected["off_total"],
         tally["dia"], tally["off"]))
assert tally["dia"] == rexpected["dia_total"]
assert tally["off"] == rexpected["off_total"]
print()

# one concrete pair: reversing conjugator and full generation
cls = next(iter(orbits))
pair = quad_pair(F, cls, orbits[cls][0][0])
g = is_reflexible(pair)
print("first orbit of", cls, "is", "reflexible" if g else "chiral")
print("its pair generates a subgroup of order", closure_order(pair),
      "= |M(25)|")
assert closure_order(pair) == 15600
