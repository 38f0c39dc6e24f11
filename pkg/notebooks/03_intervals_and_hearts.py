"""Intervals of s-torsion pairs and the pairs of their hearts."""

# %%
from stors import enumerate_stors, heart_of, pair_from_succ, phi, psi, verify_main_theorem
from stors import gen_typea
from stors.torsion import verify_heart_lemma

Q = "1>2<3<4"
cat = gen_typea(Q, "ext1")
poset = enumerate_stors(cat)

t1 = pair_from_succ(Q, {2})
t2 = pair_from_succ(Q, {2, 3, 4})
iv = heart_of(cat, t1, t2)
print("heart:", sorted(iv.heart))
print("pairs in the heart:", [str(p) for p in enumerate_stors(iv.category)])

# %%
# phi and psi move pairs between the interval and the heart.
for t in poset.interval(t1, t2):
    x = phi(cat, t1, t2, t, iv)
    back = psi(cat, t1, t2, x, iv)
    print(f"{t}  ->  {x}  ->  same: {back.same(t)}")

# %%
# The full check as a JSON report, and the heart lemma on every comparable pair.
print(verify_main_theorem(cat, t1, t2, poset).to_json())
print(all(verify_heart_lemma(cat, b, a) for a, b in poset.comparable_pairs()))
