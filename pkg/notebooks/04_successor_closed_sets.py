"""Successor-closed vertex sets of an acyclic quiver and their intervals."""

# %%
from stors import Quiver, enumerate_succ, parse_orientation, succ_interval_iso
from stors.typea import verify_succ_bijection

Q = parse_orientation("1>2<3<4").quiver()
lat = enumerate_succ(Q)
print([sorted(I) for I in lat.sets])
print(lat.to_dot("succ"))

# %%
# An interval [I1, I2] matches the lattice of the quiver restricted to I2 - I1.
iso = succ_interval_iso(Q, {"2"}, {"2", "3", "4"})
for I, J in iso.phi.items():
    print(sorted(I), "->", sorted(J))
print("verified:", iso.verified)

# %%
# With no arrows every subset is closed.
empty = Quiver(("a", "b", "c"), ())
print(len(enumerate_succ(empty).sets))

# %%
# For type A the successor-closed sets index the s-torsion pairs.
print(verify_succ_bijection("1>2<3<4").passed)
