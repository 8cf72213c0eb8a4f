# Class group, inner class group and the product identity.
from diophmon import (class_group, inner_class_group, lambda_denominators, normalize_equation,
                      two_dim_closed_form, verify_product_identity)

for raw in ([4, 5, 7], [2, 3, 6], [1, 1, 1, 2], [3, 5, 9, 12]):
    m = normalize_equation(raw)
    cl, incl = class_group(m), inner_class_group(m)
    ident = verify_product_identity(m)
    print(f"{m}: l = {lambda_denominators(m)}  Cl = {cl}  inCl = {incl}  "
          f"{ident.lhs} = {ident.class_order}*{ident.inner_order}: {ident.holds}")

# two unknowns: both groups are cyclic of order c / (gcd(a,c) gcd(b,c))
print(two_dim_closed_form(4, 6, 9), "vs", class_group(normalize_equation([4, 6, 9])))
