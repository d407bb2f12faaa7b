"""The twisted linear fractional group M(q^2) and its degree-two extension.

Work happens in Gbar = {[A, i]} with A an invertible 2x2 matrix over
F = GF(q^2) up to scalars and i in {0, 1} a twist bit; multiplication is
(A, i)(B, j) = (A B^{sigma^i}, i + j) where sigma is the order-two
automorphism x -> x^q of F.  Inside Gbar sit

    G0 = {[A, 0] : det A a square}   (the linear fractional group over F),
    G  = {[A, iota(A)]}              (twist bit tied to the square class of det),

with |G0| = q^2(q^4-1)/2, |G| = q^2(q^4-1), |Gbar| = 2 q^2(q^4-1).  G is the
twisted group; its elements with twist bit 1 are the "twisted" elements.

Matrices are 4-tuples (a, b, c, d) of field ints, row-major.
"""

from .numth import factorize


# ---------------------------------------------------------------------------
# 2x2 matrix helpers over a Field

def mat_mul(F, X, Y):
    a, b, c, d = X
    e, f_, g, h = Y
    return (
        F.add(F.mul(a, e), F.mul(b, g)),
        F.add(F.mul(a, f_), F.mul(b, h)),
        F.add(F.mul(c, e), F.mul(d, g)),
        F.add(F.mul(c, f_), F.mul(d, h)),
    )


def mat_det(F, X):
    a, b, c, d = X
    return F.sub(F.mul(a, d), F.mul(b, c))


def mat_inv(F, X):
    a, b, c, d = X
    det = mat_det(F, X)
    di = F.inv(det)
    return (F.mul(d, di), F.mul(F.neg(b), di), F.mul(F.neg(c), di), F.mul(a, di))


def mat_frob(F, X, k):
    return tuple(F.frobenius(x, k) for x in X)


def mat_scale(F, X, s):
    return tuple(F.mul(x, s) for x in X)


def mat_trace(F, X):
    return F.add(X[0], X[3])


# ---------------------------------------------------------------------------

class TwElem:
    """An element [A, i] of Gbar, stored with A scaled so its first nonzero
    entry (row-major) is 1.  The field must have even extension degree."""

    __slots__ = ("F", "a", "b", "c", "d", "i")

    def __init__(self, F, A, i):
        assert F.m % 2 == 0, "Gbar needs a quadratic extension field"
        a, b, c, d = A
        lead = a or b or c or d
        if lead == 0:
            raise ValueError("zero matrix")
        if lead != 1:
            s = F.inv(lead)
            a, b, c, d = F.mul(a, s), F.mul(b, s), F.mul(c, s), F.mul(d, s)
        if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
            raise ValueError("singular matrix")
        self.F = F
        self.a, self.b, self.c, self.d = a, b, c, d
        self.i = i & 1

    @property
    def matrix(self):
        return (self.a, self.b, self.c, self.d)

    def det(self):
        return mat_det(self.F, self.matrix)

    def __mul__(self, other):
        F = self.F
        Y = other.matrix
        if self.i:
            Y = mat_frob(F, Y, F.m // 2)
        return TwElem(F, mat_mul(F, self.matrix, Y), self.i ^ other.i)

    def inv(self):
        F = self.F
        P = self.matrix
        if self.i:
            P = mat_frob(F, P, F.m // 2)
        return TwElem(F, mat_inv(F, P), self.i)

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        r = identity(self.F)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def is_identity(self):
        return self.i == 0 and self.matrix == (1, 0, 0, 1)

    def __eq__(self, other):
        return (self.F is other.F and self.i == other.i
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d, self.i))

    def __repr__(self):
        F = self.F
        return f"[{tuple(F.coeffs(x) for x in self.matrix)}, {self.i}]"


def identity(F):
    return TwElem(F, (1, 0, 0, 1), 0)


def sigma_elem(F):
    """[I, 1]; conjugation by it applies sigma entrywise."""
    return TwElem(F, (1, 0, 0, 1), 1)


def iota(F, A):
    """Twist bit forced on matrix part A inside the twisted group: 0 for
    square determinant, 1 for non-square."""
    det = mat_det(F, A)
    if det == 0:
        raise ValueError("singular matrix")
    return 0 if F.is_square(det) else 1


def make(F, A, i=None):
    """Element [A, i]; with i omitted, the unique lift of A into G."""
    if i is None:
        i = iota(F, A)
    return TwElem(F, A, i)


def conjugate(x, g):
    return g.inv() * x * g


def in_G(x):
    return x.i == iota(x.F, x.matrix)


def in_G0(x):
    return x.i == 0 and x.F.is_square(x.det())


def group_order(F, which="G"):
    s = F.size  # q^2
    base = s * (s * s - 1)
    return {"G0": base // 2, "G": base, "Gbar": 2 * base}[which]


def order(x):
    """Element order, by exponent descent from the ambient group order."""
    e = group_order(x.F, "Gbar")
    o = e
    for r, _ in factorize(e):
        while o % r == 0 and (x ** (o // r)).is_identity():
            o //= r
    return o


def naive_order(x, cap=10 ** 6):
    acc = x
    k = 1
    while not acc.is_identity():
        acc = acc * x
        k += 1
        if k > cap:
            raise RuntimeError("order exceeds cap")
    return k


def all_group_elements(F, which="G"):
    """Iterate the chosen group exactly once per projective element.

    Normalized matrices have first nonzero entry 1: either a = 1 with b, c, d
    free, or a = 0, b = 1 with c nonzero (else singular) and d free.
    """
    def matrices():
        for b in F.elements():
            for c in F.elements():
                for d in F.elements():
                    A = (1, b, c, d)
                    if mat_det(F, A) != 0:
                        yield A
        for c in F.units():
            for d in F.elements():
                yield (0, 1, c, d)

    for A in matrices():
        if which == "G":
            yield TwElem(F, A, iota(F, A))
        elif which == "G0":
            if F.is_square(mat_det(F, A)):
                yield TwElem(F, A, 0)
        elif which == "Gbar":
            yield TwElem(F, A, 0)
            yield TwElem(F, A, 1)
        else:
            raise ValueError(which)
