"""A Nakayama stable category and a heart where a pair stops being s-torsion.

The algebra has three simples and Loewy length 3; its stable category has six
indecomposables and the shift squares to the identity.
"""

# %%
from stors import enumerate_stors, is_storsion, load_dataset
from stors.torsion import shift_closed_check

D = load_dataset("nakayama_D")
print(D.indecs)
print("shift:", D.shift)

# %%
# Every pair of D is closed under the shift.
for t in enumerate_stors(D):
    print(t, shift_closed_check(D, t).to_dict())

# %%
# The subcategory on 1, 2/1, 2 with and without its negative extensions.
A2 = load_dataset("nakayama_A_e2")
A1 = load_dataset("nakayama_A_e1")
print("with negext:   ", is_storsion(A2, ["2/1", "2"], ["1"]).flags)
print("without negext:", is_storsion(A1, ["2/1", "2"], ["1"]).flags)
print(len(enumerate_stors(A2)), len(enumerate_stors(A1)))
