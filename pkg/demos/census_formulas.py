"""The closed-form census, from per-class counts to map totals.

Counting runs in two stages: polynomial formulas give the pair-orbit count
over GF(q^2), then Moebius inversion over the lattice of twisted subgroup
levels isolates the pairs generating the whole group.  Dividing by f
yields isomorphism classes of maps.
"""

from twistedmaps import (count_maps, count_reflexible_maps, orbit_counts,
                         total_orbits, twisted_divisors)
from twistedmaps.census import count_generating_orbits

print("per-kind orbit counts")
print("%6s %12s %12s %12s %12s %12s" % ("q", "dia", "dia-exc",
                                        "off", "off-exc", "total"))
for q in (3, 5, 7, 9, 11, 13, 27):
    c = orbit_counts(q)
    print("%6d %12d %12d %12d %12d %12d"
          % (q, c["dia_generic"], c["dia_exceptional"],
             c["off_generic"], c["off_exceptional"], c["total"]))
    assert c["total"] == total_orbits(q)
print()

print("maps on M(p^2f), plain and reflexible")
print("%4s %4s %16s %16s" % ("p", "f", "maps", "reflexible"))
for p, f in ((3, 1), (5, 1), (7, 1), (3, 2), (3, 3), (5, 3), (3, 9)):
    print("%4d %4d %16d %16d"
          % (p, f, count_maps(p, f), count_reflexible_maps(p, f)))
print()

# the lattice feeding the inversion: only levels e | f with f/e odd carry
# twisted subgroups, so f = 12 sees {4, 12}, never 1, 2, 3 or 6
for f in (1, 2, 3, 6, 12):
    print("twisted levels inside f = %-3d -> %s" % (f, twisted_divisors(f)))
print()

# inversion and its round trip at (p, f) = (3, 6)
p, f = 3, 6
back = sum(count_generating_orbits(p, e) for e in twisted_divisors(f))
print("orbits at 3^6 by formula:   ", total_orbits(p ** f))
print("orbits rebuilt from levels: ", back)
assert back == total_orbits(p ** f)
