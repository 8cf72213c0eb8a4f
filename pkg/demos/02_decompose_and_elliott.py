# Writing monoid elements as Apery part + ray multiples, and the
# two-parameter form used when only two extra generators exist.
from diophmon import (decompose, elliott_decompose, elliott_recompose, elliott_scheme,
                      normalize_equation, recompose)
from diophmon.errors import TooManyExtras

m = normalize_equation([4, 5, 7])
for x in [(0, 0), (8, 2), (14, 21), (11, 8)]:
    d = decompose(m, x)
    print(x, "->", d.apery_part, "+ rays", d.ray_mults, "| back:", recompose(m, d))

scheme = elliott_scheme(m)
print("u =", scheme.u, " v =", scheme.v)
print("admissible (m, n):", scheme.admissible)

for x in [(8, 2), (5, 3)]:
    rep = elliott_decompose(scheme, m, x)
    print(x, "= %d*u + %d*v + rays %s" % (rep.m, rep.n, rep.ray_mults), "->", elliott_recompose(scheme, rep))

# x + 5y = 0 (mod 13) has three extras, so no such scheme
try:
    elliott_scheme(normalize_equation([1, 5, 13]))
except TooManyExtras as e:
    print("M(1,5,13):", e)
