"""Conjugacy classes of twisted elements, named by canonical form.

Every twisted element is conjugate to either a diagonal or an off-diagonal
representative indexed by one odd exponent i.  One class per q is special:
its representative has order 4 and a stabilizer twice the generic size.
"""

from twistedmaps import (all_classes, canonical_form, canonical_order,
                         canonical_rep, class_size, conjugate, group_order,
                         is_exceptional, make_field, stabilizer_size)
from twistedmaps.twisted_group import TwElem

for q, p, m in ((3, 3, 2), (5, 5, 2), (9, 3, 4)):
    F = make_field(p, m)
    print("q = %d  (exceptional side: %s)"
          % (q, "dia" if q % 4 == 3 else "off"))
    covered = 0
    for cls in all_classes(q):
        rep = canonical_rep(cls, F)
        print("  %s i=%d: order %d, stabilizer %d, class size %d%s"
              % (cls.form, cls.i, canonical_order(cls, q),
                 stabilizer_size(cls, q), class_size(cls, q),
                 "  <- exceptional" if is_exceptional(cls, q) else ""))
        covered += class_size(cls, q)
    # the classes partition the twisted coset exactly
    assert covered == group_order(F, "G") // 2
    print("  classes cover all %d twisted elements" % covered)
    print()

# canonical_form both classifies an element and returns the witness taking
# it to the stored representative
F = make_field(5, 2)
x = TwElem(F, (0, 1, 5, 3), 1)
cls, w = canonical_form(x)
print("sample element lands in class", cls)
assert conjugate(x, w) == canonical_rep(cls, F)
print("returned witness conjugates it onto the class representative")
