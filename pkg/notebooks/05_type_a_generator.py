"""Generated type-A categories: Hom from linear algebra, Ext from the Euler form."""

# %%
from stors import enumerate_stors, gen_typea
from stors.typea import all_orientations, euler_form, parse_orientation

o = parse_orientation("R L L")
print(o.compact(), o.arrows())
print(euler_form(o, (1, 0, 0, 0), (0, 1, 0, 0)))

# %%
# Pair counts for every orientation up to four vertices, in both modes.
for n in range(1, 5):
    for o in all_orientations(n):
        z = len(enumerate_stors(gen_typea(o, "zero")))
        e = len(enumerate_stors(gen_typea(o, "ext1")))
        print(f"{o.compact():>10}  zero={z:3d}  ext1={e:3d}")
