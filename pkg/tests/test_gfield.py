"""Field layer: construction determinism, axioms, frobenius, roots, subfields."""

import random

import pytest

from twistedmaps.gfield import ResourceLimitError, make_field


def test_modulus_choices_are_the_documented_ones(F9, F25):
    # low-to-high coefficient tuples, leading 1 implicit
    assert F9.modulus == (1, 0)      # x^2 + 1
    assert F25.modulus == (2, 0)     # x^2 + 2
    assert make_field(3, 1).modulus == (0,)  # x


def test_primitive_element_is_first_generator_in_scan_order(F9):
    assert F9.xi == F9.from_coeffs((1, 1))  # 1 + x, packed 4
    # nothing below it generates: orders of 1, 2, x are 1, 2, 4
    n = F9.size - 1
    for c in range(1, F9.xi):
        k = 1
        acc = c
        while acc != 1:
            acc = F9.mul(acc, c)
            k += 1
        assert k < n


def test_field_axioms_exhaustive_gf9(F9):
    F = F9
    els = list(F.elements())
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_field_axioms_sampled_gf729():
    F = make_field(3, 6)
    rng = random.Random(20260823)
    for _ in range(500):
        a, b, c = (rng.randrange(F.size) for _ in range(3))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.sub(F.add(a, b), b) == a
        if b:
            assert F.mul(F.div(a, b), b) == a


def test_frobenius_is_a_field_automorphism(F25):
    F = F25
    rng = random.Random(7)
    for _ in range(300):
        a, b = rng.randrange(F.size), rng.randrange(F.size)
        assert F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1))
        assert F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1))
    # order two over the prime field when m = 2
    for a in F.elements():
        assert F.frobenius(F.frobenius(a, 1), 1) == a
    # fixes exactly GF(5)
    fixed = [a for a in F.elements() if F.frobenius(a, 1) == a]
    assert len(fixed) == 5


def test_frobenius_on_gf9_negates_x_coefficient(F9):
    # with modulus x^2 + 1, (c0 + c1 x)^3 = c0 - c1 x
    for a in F9.elements():
        c0, c1 = F9.coeffs(a)
        assert F9.coeffs(F9.frobenius(a, 1)) == (c0, (-c1) % 3)


def test_squares_split_units_in_half():
    for (p, m) in [(3, 2), (5, 2), (3, 4), (7, 2)]:
        F = make_field(p, m)
        units = list(F.units())
        squares = [u for u in units if F.is_square(u)]
        assert len(squares) == len(units) // 2
        for u in squares:
            assert F.sqrt(u) is not None and F.pow(F.sqrt(u), 2) == u
    with pytest.raises(ValueError):
        F.is_square(0)


def test_nth_roots_counts_and_membership(F49):
    F = F49
    n = F.size - 1
    rng = random.Random(11)
    from math import gcd
    for _ in range(100):
        w = F.exp[rng.randrange(n)]
        r = rng.randrange(1, 13)
        roots = F.nth_roots(w, r)
        for z in roots:
            assert F.pow(z, r) == w
        g = gcd(r, n)
        assert len(roots) in (0, g)
        # solvable iff dlog divisible by gcd
        assert (len(roots) == g) == (F.dlog(w) % g == 0)


def test_subfield_membership_and_units(F81):
    F = F81
    inside = [x for x in F.elements() if F.in_subfield(x, 2)]
    assert len(inside) == 9
    assert set(F.subfield_units(2)) == {x for x in inside if x != 0}
    # GF(3) sits in everything
    assert [x for x in F.elements() if F.in_subfield(x, 1)] == [0, 1, 2]
    with pytest.raises(ValueError):
        F.in_subfield(1, 3)


def test_embedding_is_a_field_homomorphism_onto_subfield_copy():
    big = make_field(3, 6)
    small = make_field(3, 2)
    img = {x: big.embed_from(small, x) for x in small.elements()}
    assert len(set(img.values())) == small.size
    for x, y in img.items():
        assert big.in_subfield(y, 2)
    for a in small.elements():
        for b in small.elements():
            assert img[small.mul(a, b)] == big.mul(img[a], img[b])
            assert img[small.add(a, b)] == big.add(img[a], img[b])
    assert img[1] == 1 and img[0] == 0
    # the subfield copy is exactly the image
    assert {x for x in big.elements() if big.in_subfield(x, 2)} == set(img.values())


def test_pow_and_dlog_agree(F25):
    F = F25
    for k in range(F.size - 1):
        u = F.exp[k]
        assert F.dlog(u) == k
        assert F.pow(F.xi, k) == u
    assert F.pow(F.xi, -1) == F.inv(F.xi)


def test_zero_handling():
    F = make_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ValueError):
        F.dlog(0)
    with pytest.raises(ValueError):
        F.nth_roots(0, 3)
    assert F.pow(0, 5) == 0 and F.pow(0, 0) == 1
    assert F.sqrt(0) == 0


def test_construction_guards():
    with pytest.raises(ValueError):
        make_field(4, 2)
    with pytest.raises(ValueError):
        make_field(2, 3)
    with pytest.raises(ResourceLimitError):
        make_field(3, 13)  # 3^13 > 2^20
    assert make_field(3, 2) is make_field(3, 2)  # cached
