"""Brute-force orbit machinery cross-validating the closed-form censuses.

A map pair is normalized as (x, y) with y = [B, 1] a canonical class
representative and x = [A, 1] twisted, where A is shaped so that xy is an
involution:

    dia class, B = dia(lam, 1):   A = [[-1, b], [c, lam^sigma]],
    off class, B = off(lam, 1):   A = [[a, lam^sigma], [-1, d]].

Each admissible x is recorded as a quad (first, second, u) of field ints,
(b, c) or (a, d) plus u = det-parameter first*second + lam^sigma, which must
be a non-square.  Orbits of pairs under conjugation correspond to orbits of
quads under the stabilizer of y, and that action is semiregular, so orbit
counts are exact divisions.  Everything here recomputes those orbits by
direct group arithmetic, never through the closed formulas.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .canonical import (CanonClass, all_classes, canonical_form,
                        canonical_rep, is_exceptional, stabilizer_elements)
from .gfield import make_field
from .numth import divisors, odd_part, prime_power
from .twisted_group import TwElem, conjugate, identity, mat_frob, order


def _lam(F, cls):
    return F.pow(F.xi, cls.i)


def _lam_sigma(F, cls):
    return F.frobenius(_lam(F, cls), F.m // 2)


# ---------------------------------------------------------------------------
# quads <-> pairs

def quad_pair(F, cls, quad):
    """The normalized map pair encoded by a quad against one class."""
    first, second, u = quad
    ls = _lam_sigma(F, cls)
    y = canonical_rep(cls, F)
    if cls.form == "dia":
        A = (F.neg(1), first, second, ls)
    else:
        A = (first, ls, F.neg(1), second)
    x = TwElem(F, A, 1)
    assert F.add(F.mul(first, second), ls) == u
    return x, y


def pair_quad(F, cls, x):
    """Quad of a twisted x whose matrix is projectively in the shape paired
    with the class representative; shape violations raise."""
    ls = _lam_sigma(F, cls)
    m11, m12, m21, m22 = x.matrix
    if cls.form == "dia":
        assert m11 != 0, "dia-shaped partner has nonzero corner"
        s = F.neg(F.inv(m11))
        first, second = F.mul(s, m12), F.mul(s, m21)
        assert F.mul(s, m22) == ls, "partner must keep the involution shape"
    else:
        assert m21 != 0, "off-shaped partner has nonzero corner"
        s = F.neg(F.inv(m21))
        first, second = F.mul(s, m11), F.mul(s, m22)
        assert F.mul(s, m12) == ls, "partner must keep the involution shape"
    return (first, second, F.add(F.mul(first, second), ls))


def _order4_partner(F, cls, quad):
    """Whether the x of this quad has order 4 (trace of A A^sigma vanishes);
    only consulted in exceptional classes, where such pairs are excluded."""
    f = F.m // 2
    first, second, _ = quad
    if cls.form == "dia":
        # trace = 1 + b c^q + b^q c + lam^{q+1} with lam^{q+1} = -1 here
        t = F.add(F.mul(first, F.frobenius(second, f)),
                  F.mul(F.frobenius(first, f), second))
        return t == 0
    # trace = a a^q + d d^q - (lam + lam^q) with lam + lam^q = 0 here
    t = F.add(F.pow(first, F.p ** f + 1), F.pow(second, F.p ** f + 1))
    return t == 0


def class_quads(F, cls):
    """All admissible quads against one class, generated deterministically."""
    q = F.p ** (F.m // 2)
    ls = _lam_sigma(F, cls)
    exceptional = is_exceptional(cls, q)
    nonsquares = [w for w in F.units() if not F.is_square(w)]

    if cls.form == "off":
        # rows with a = 0 or d = 0 force u = lam^sigma
        for t in F.units():
            for quad in ((0, t, ls), (t, 0, ls)):
                if exceptional and _order4_partner(F, cls, quad):
                    continue
                yield quad
    for first in F.units():
        fi = F.inv(first)
        for u in nonsquares:
            if u == ls:
                continue
            second = F.mul(F.sub(u, ls), fi)
            quad = (first, second, u)
            if exceptional and _order4_partner(F, cls, quad):
                continue
            yield quad


def enumerate_quads(q):
    """{class: [quads]} over GF(q^2) with the per-class exclusions applied."""
    p, f = _split_prime_power(q)
    F = make_field(p, 2 * f)
    return {cls: list(class_quads(F, cls)) for cls in all_classes(q)}


def _split_prime_power(q):
    pf = prime_power(q)
    if pf is None or pf[0] == 2:
        raise ValueError(f"q must be an odd prime power, got {q}")
    return pf


# ---------------------------------------------------------------------------
# stabilizer orbits

def act_quad(F, cls, g, quad):
    """Image of a quad under conjugating its x by a stabilizer element of y."""
    x, _ = quad_pair(F, cls, quad)
    return pair_quad(F, cls, conjugate(x, g))


def orbit_partition(F, cls, quads=None):
    """Partition of the class block into stabilizer orbits; semiregularity
    (orbit length == stabilizer size) is asserted for every orbit."""
    if quads is None:
        quads = class_quads(F, cls)
    stab = stabilizer_elements(cls, F)
    seen = set()
    orbits = []
    for quad in quads:
        if quad in seen:
            continue
        orbit = {act_quad(F, cls, g, quad) for g in stab}
        assert len(orbit) == len(stab), "stabilizer action must be semiregular"
        assert quad in orbit
        seen.update(orbit)
        orbits.append(sorted(orbit))
    return orbits


def _partition_worker(payload):
    q, form, i = payload
    p, f = _split_prime_power(q)
    F = make_field(p, 2 * f)
    return form, i, orbit_partition(F, CanonClass(form, i))


def enumerate_orbits(q, threads=1):
    """{class: [orbits]} for the whole twisted coset at one q.

    With threads > 1 the per-class blocks are partitioned in worker
    processes; the merged result is identical to the serial one.
    """
    classes = all_classes(q)
    if threads <= 1:
        p, f = _split_prime_power(q)
        F = make_field(p, 2 * f)
        return {cls: orbit_partition(F, cls) for cls in classes}
    payloads = [(q, cls.form, cls.i) for cls in classes]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        done = list(ex.map(_partition_worker, payloads))
    return {CanonClass(form, i): orbits for form, i, orbits in done}


def orbit_count_summary(q, threads=1, orbits=None):
    """Orbit totals per class kind, keyed like census.orbit_counts."""
    if orbits is None:
        orbits = enumerate_orbits(q, threads)
    out = {"dia_generic": 0, "dia_exceptional": 0,
           "off_generic": 0, "off_exceptional": 0}
    for cls, cls_orbits in orbits.items():
        kind = "exceptional" if is_exceptional(cls, q) else "generic"
        out["%s_%s" % (cls.form, kind)] += len(cls_orbits)
    out["total"] = sum(out.values())
    return out


def count_class_orbits(F, cls):
    """(orbit count, quad count) for one class without storing the orbits."""
    stab = stabilizer_elements(cls, F)
    seen = set()
    n_orbits = n_quads = 0
    for quad in class_quads(F, cls):
        n_quads += 1
        if quad in seen:
            continue
        orbit = {act_quad(F, cls, g, quad) for g in stab}
        assert len(orbit) == len(stab)
        seen.update(orbit)
        n_orbits += 1
    return n_orbits, n_quads


# ---------------------------------------------------------------------------
# which twisted subgroup a pair generates

def _word_invariant(F, z):
    """tr(M)^2/det(M) of an untwisted element, stable under conjugation,
    scaling, inversion and cyclic shifts of the word."""
    M = z.matrix
    assert z.i == 0
    tr = F.add(M[0], M[3])
    det = F.sub(F.mul(M[0], M[3]), F.mul(M[1], M[2]))
    return F.div(F.mul(tr, tr), det)


def generated_level(pair):
    """Smallest admissible exponent e such that the pair generates a copy of
    the twisted group over GF(p^{2e}).

    Conjugating the pair into the canonical subgroup over GF(p^{2e})
    forces the invariant tr(M)^2/det(M) of every even word M in the pair
    into that subfield, so testing a batch of short words rules proper
    levels out.  The test alone is not sufficient (distinct words can
    share an invariant), so any surviving proper level is confirmed by a
    closure run capped just past the largest proper subgroup order; the
    generated subgroup is always a twisted group of known order, which
    the closure size then pins down.
    """
    x, y = pair
    F = x.F
    f = F.m // 2
    alpha, o = odd_part(f)
    proper = [2 ** alpha * d for d in divisors(o)[:-1]]
    if not proper:
        return f
    xx, yy, xy = x * x, y * y, x * y
    words = (xx, yy, xy, x * y.inv(), xx * xy, xx * yy, xy * xy)
    invs = [_word_invariant(F, z) for z in words]
    if not any(all(F.in_subfield(v, 2 * e) for v in invs) for e in proper):
        return f
    p = F.p
    sizes = {p ** (2 * e) * (p ** (4 * e) - 1): e for e in proper}
    try:
        n = closure_order(pair, cap=max(sizes))
    except RuntimeError:
        return f
    assert n in sizes, "subgroup order matches no admissible level"
    return sizes[n]


def closure_order(pair, cap=10 ** 6):
    """Size of the subgroup generated by the pair, by breadth-first closure."""
    x, y = pair
    gens = (x, y, x.inv(), y.inv())
    seen = {identity(x.F)}
    frontier = [identity(x.F)]
    while frontier:
        nxt = []
        for z in frontier:
            for g in gens:
                w = z * g
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > cap:
                        raise RuntimeError("closure exceeds cap")
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# reflexibility and duality by explicit conjugator search

def _solutions(target_src, target_dst):
    """Elements g with target_src^g == target_dst, as (coset witness, stab);
    returns None when the two lie in different classes."""
    c_src, w_src = canonical_form(target_src)
    c_dst, w_dst = canonical_form(target_dst)
    if c_src != c_dst:
        return None
    v = w_src * w_dst.inv()
    stab = stabilizer_elements(c_src, target_src.F)
    # stabilizer of target_src itself is the witness-conjugated rep stabilizer
    return v, w_src, stab


def _search(x, y, x_to, y_to):
    """First g in Gbar with x^g == x_to and y^g == y_to, else None."""
    sol = _solutions(y, y_to)
    if sol is None:
        return None
    v, w, stab = sol
    w_inv = w.inv()
    for s in stab:
        g = w * s * w_inv * v
        if conjugate(x, g) == x_to:
            assert conjugate(y, g) == y_to
            return g
    return None


def is_reflexible(pair):
    """A conjugator inverting both members, or None.  Reflexible maps are
    exactly the pairs where one exists."""
    x, y = pair
    return _search(x, y, x.inv(), y.inv())


def self_duality(pair):
    """(positive witness, negative witness), either possibly None: positive
    swaps the two members, negative swaps and inverts them.

    Swapping generators of unequal order is impossible, so that case is a
    caller error rather than a plain no.
    """
    x, y = pair
    if order(x) != order(y):
        raise ValueError("self-duality needs generators of equal order")
    pos = _search(x, y, y, x)
    neg = _search(x, y, y.inv(), x.inv())
    return pos, neg


def brute_reflexible(pair, elements):
    """Exhaustive-scan reference for is_reflexible; feasible only for tiny q."""
    x, y = pair
    for g in elements:
        if conjugate(x, g) == x.inv() and conjugate(y, g) == y.inv():
            return g
    return None


def reflexible_orbit_tally(q, threads=1, orbits=None):
    """Per-form reflexible orbit counts computed by conjugator search on
    every orbit representative."""
    p, f = _split_prime_power(q)
    F = make_field(p, 2 * f)
    if orbits is None:
        orbits = enumerate_orbits(q, threads)
    tally = {"dia": 0, "off": 0}
    for cls, cls_orbits in orbits.items():
        for orbit in cls_orbits:
            pair = quad_pair(F, cls, orbit[0])
            if is_reflexible(pair) is not None:
                tally[cls.form] += 1
    tally["total"] = tally["dia"] + tally["off"]
    return tally


# ---------------------------------------------------------------------------
# Galois fusion of orbits into map classes

def _phi_pair(pair, j):
    """Entrywise p^j-power Frobenius applied to both members."""
    x, y = pair
    F = x.F
    return (TwElem(F, mat_frob(F, x.matrix, j), x.i),
            TwElem(F, mat_frob(F, y.matrix, j), y.i))


def galois_fuse(orbits, p, f):
    """Group per-class orbits into bundles identified under the entrywise
    Frobenius action; returns a list of bundles of (class, orbit index).

    Orbits of pairs generating the full group fall into bundles of size
    exactly f; orbits conjugate into proper subfield subgroups may fuse less.
    """
    F = make_field(p, 2 * f)
    locate = {}
    for cls, cls_orbits in orbits.items():
        for idx, orbit in enumerate(cls_orbits):
            for quad in orbit:
                locate[(cls, quad)] = (cls, idx)

    def image_orbit(cls, orbit, j):
        pair = quad_pair(F, cls, orbit[0])
        xj, yj = _phi_pair(pair, j)
        cj, w = canonical_form(yj)
        xq = pair_quad(F, cj, conjugate(xj, w))
        return locate[(cj, xq)]

    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for cls, cls_orbits in orbits.items():
        for idx in range(len(cls_orbits)):
            parent.setdefault((cls, idx), (cls, idx))
    for cls, cls_orbits in orbits.items():
        for idx, orbit in enumerate(cls_orbits):
            for j in range(1, f):
                other = image_orbit(cls, orbit, j)
                ra, rb = find((cls, idx)), find(other)
                if ra != rb:
                    parent[ra] = rb

    bundles = {}
    for key in parent:
        bundles.setdefault(find(key), []).append(key)

    def member_key(t):
        return (t[0].form, t[0].i, t[1])

    out = [sorted(b, key=member_key) for b in bundles.values()]
    out.sort(key=lambda b: [member_key(t) for t in b])
    return out


# ---------------------------------------------------------------------------
# self-duality census

SELFDUAL_TABLE_VERSION = 1

# per q and class form: (maps with equal vertex and face order,
#                        positively self-dual, negatively self-dual, both)
SELFDUAL_TABLE = {
    3: {"dia": (0, 0, 0, 0), "off": (3, 3, 3, 3)},
    5: {"dia": (15, 15, 5, 5), "off": (10, 10, 6, 6)},
    7: {"dia": (28, 28, 8, 8), "off": (78, 42, 14, 14)},
    9: {"dia": (95, 45, 9, 9), "off": (68, 36, 10, 10)},
    11: {"dia": (276, 132, 24, 24), "off": (265, 165, 33, 33)},
    13: {"dia": (469, 273, 39, 39), "off": (666, 234, 42, 42)},
    17: {"dia": (2556, 612, 68, 68), "off": (1312, 544, 72, 72)},
    19: {"dia": (1960, 760, 80, 80), "off": (2799, 855, 95, 95)},
}


@dataclass(frozen=True)
class OrbitRec:
    """One pair orbit: canonical key (minimal quad), bookkeeping, flags."""
    form: str
    i: int
    key: tuple
    size: int
    level: int
    k: int
    l: int
    reflexible: bool
    pos_selfdual: bool
    neg_selfdual: bool


def _record_for(F, cls, orbit):
    pair = quad_pair(F, cls, orbit[0])
    x, y = pair
    k, l = order(x), order(y)
    pos = neg = None
    if k == l:
        pos, neg = self_duality(pair)
    return OrbitRec(
        form=cls.form, i=cls.i, key=orbit[0], size=len(orbit),
        level=generated_level(pair), k=k, l=l,
        reflexible=is_reflexible(pair) is not None,
        pos_selfdual=pos is not None, neg_selfdual=neg is not None,
    )


def orbit_records(q, threads=1, orbits=None):
    """Deterministically ordered OrbitRec rows for every orbit at one q."""
    p, f = _split_prime_power(q)
    F = make_field(p, 2 * f)
    if orbits is None:
        orbits = enumerate_orbits(q, threads)
    recs = [_record_for(F, cls, orbit)
            for cls, cls_orbits in orbits.items() for orbit in cls_orbits]
    recs.sort(key=lambda r: (r.form, r.i, r.key))
    return recs


def fused_records(q, threads=1, orbits=None):
    """One aggregated record per Galois bundle; flags and type must agree
    across the bundle and are asserted to."""
    p, f = _split_prime_power(q)
    F = make_field(p, 2 * f)
    if orbits is None:
        orbits = enumerate_orbits(q, threads)
    if f == 1:
        return orbit_records(q, orbits=orbits)
    bundles = galois_fuse(orbits, p, f)
    out = []
    for bundle in bundles:
        members = [_record_for(F, cls, orbits[cls][idx]) for cls, idx in bundle]
        head = members[0]
        for m in members[1:]:
            assert (m.form, m.k, m.l, m.level, m.reflexible, m.pos_selfdual,
                    m.neg_selfdual) == (head.form, head.k, head.l, head.level,
                                        head.reflexible, head.pos_selfdual,
                                        head.neg_selfdual), "bundle flags differ"
        least = min(members, key=lambda m: (m.i, m.key))
        out.append(OrbitRec(
            form=head.form, i=least.i, key=least.key,
            size=sum(m.size for m in members), level=head.level,
            k=head.k, l=head.l, reflexible=head.reflexible,
            pos_selfdual=head.pos_selfdual, neg_selfdual=head.neg_selfdual,
        ))
    out.sort(key=lambda r: (r.form, r.i, r.key))
    return out


def selfdual_cells(records):
    """Table cells {form: (equal-type count, positive, negative, both)}
    derived from already-built records (fused ones for composite f)."""
    out = {}
    for form in ("dia", "off"):
        eq = [r for r in records if r.form == form and r.k == r.l]
        out[form] = (len(eq),
                     sum(1 for r in eq if r.pos_selfdual),
                     sum(1 for r in eq if r.neg_selfdual),
                     sum(1 for r in eq if r.pos_selfdual and r.neg_selfdual))
    return out


def selfdual_table(q, threads=1, orbits=None):
    """Self-duality census over map classes (orbit bundles) at one q:
    {form: (equal-type maps, positive, negative, both)} plus map totals."""
    p, f = _split_prime_power(q)
    F = make_field(p, 2 * f)
    if orbits is None:
        orbits = enumerate_orbits(q, threads)
    if f > 1:
        bundles = galois_fuse(orbits, p, f)
    else:
        bundles = [[(cls, idx)] for cls, cls_orbits in orbits.items()
                   for idx in range(len(cls_orbits))]

    rows = {"dia": [0, 0, 0, 0], "off": [0, 0, 0, 0]}
    n_maps = 0
    for bundle in bundles:
        cls, idx = bundle[0]
        if len(bundle) != f:
            continue  # conjugate into a subfield subgroup, not a map here
        n_maps += 1
        pair = quad_pair(F, cls, orbits[cls][idx][0])
        x, y = pair
        if order(x) != order(y):
            continue
        row = rows[cls.form]
        row[0] += 1
        pos, neg = self_duality(pair)
        if pos is not None:
            row[1] += 1
        if neg is not None:
            row[2] += 1
        if pos is not None and neg is not None:
            row[3] += 1
    return {
        "maps": n_maps,
        "dia": tuple(rows["dia"]),
        "off": tuple(rows["off"]),
    }
