"""Enumerating s-torsion pairs and drawing their Hasse diagram."""

# %%
from stors import enumerate_stors, gen_typea, is_storsion
from stors.torsion import canonical_decomposition

# With no negative extensions the count for A2 is the classical five.
for mode in ("zero", "ext1"):
    poset = enumerate_stors(gen_typea("1>2", mode))
    print(mode, len(poset), [str(p) for p in poset])

# %%
# Checking a single candidate reports which condition fails.
cat = gen_typea("1>2", "ext1")
print(is_storsion(cat, ["[2,2]"], ["[1,1]"]).flags)
print(is_storsion(cat, ["[1,1]"], ["[2,2]"]).flags)

# %%
# Orientation 1 > 2 < 3 < 4 has seven pairs.
cat4 = gen_typea("1>2<3<4", "ext1")
poset4 = enumerate_stors(cat4)
print(len(poset4))
print(poset4.to_dot("a4"))

# %%
# Every object splits uniquely along a pair.
t = poset4.pairs[3]
print(t)
for m in cat4.indecs:
    tm, fm = canonical_decomposition(cat4, t, m)
    print(f"  {tm} -> {m} -> {fm}")
