# Apery set and Hilbert basis of 4x + 5y = 0 (mod 7).
from diophmon import apery_box, apery_closed_form, hilbert_basis, normalize_equation, rays

m = normalize_equation([4, 5, 7])
print(m, "widths", m.widths)

# the rays sit on the axes, one per coordinate
print("rays:", rays(m))

# everything else is a ray combination plus one point of the Apery box
table = apery_box(m)
print("Apery set:", table.elements)

# with two unknowns there is a closed form; it agrees with the box scan
print("closed form agrees:", apery_closed_form(m) == table)

hb = hilbert_basis(m, table=table)
print("Hilbert basis:", sorted(hb.generators))

# three unknowns, one equation mod 2
m = normalize_equation([1, 1, 1, 2])
print(m, "Apery:", apery_box(m).elements)
print("extras:", hilbert_basis(m).extras)
