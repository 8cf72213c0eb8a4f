# Every closed form against the brute-force oracle, for all two-unknown
# equations with modulus up to 15 and one equation in four unknowns.
import time

from diophmon import normalize_equation
from diophmon.sweep import check_instance, sweep_two_dim

t = time.perf_counter()
summary = sweep_two_dim(15)
print(f"{summary.instances} equations, {len(summary.failures)} failures, {time.perf_counter() - t:.1f}s")

res = check_instance(normalize_equation([3, 5, 9, 12]))
print(res.equation, "|Ap| =", res.apery_size, "Cl =", res.class_group,
      "inCl =", res.inner_class_group, "oracle =", res.oracle_group, "ok:", res.ok)
