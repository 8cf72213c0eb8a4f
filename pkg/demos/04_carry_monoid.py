# The same monoid rebuilt abstractly: a finite group G, a carry
# I: G x G -> N^k and the addition (g, f) + (h, f') = (g + h, f + f' + I(g, h)).
from diophmon import normalize_equation
from diophmon.carry_monoid import (CarryElement, add, canonical_spec, check_axioms, from_json,
                                   to_json, verify_isomorphism)

m = normalize_equation([4, 5, 7])
c = canonical_spec(m)
print("G =", c.group, " rays:", c.ray_count)
for g, p in zip(c.group.elements(), c.points):
    print("  ", g, "labels Apery point", p)

x = CarryElement(c.element_of((4, 1)), (0, 0))
print("(4,1) + (4,1) =", add(c, x, x), "i.e. (1,2) plus one copy of q1")

report = check_axioms(c)
print("\n".join(report.lines()))
print("isomorphic to the monoid on a 3x3 ray box:", verify_isomorphism(m, c, 2))

text = to_json(c)
print("JSON size", len(text), "round trip ok:", from_json(text) == c)
