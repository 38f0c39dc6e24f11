"""Loading a finite category from JSON and checking it with the lint pass.

Run with ``python3 notebooks/01_categories_and_lints.py``.
"""

# %%
import json

from stors import dump_category, gen_typea, load_category, validate_lints

# A two-vertex linear quiver 1 -> 2.  Three indecomposables: the simples and
# the projective-injective [1,2].
cat = gen_typea("1>2", "ext1")
print(cat.label, cat.indecs)
print("hom\n", cat.hom_dim)
print("ext\n", cat.ext_dim)

# %%
# The only nonsplit conflation has [1,2] in the middle.
for middle, rows in cat.conf.items():
    for a, c in rows:
        if a and c:
            print(f"{a} -> {middle} -> {c}")

# %%
# The file format round-trips byte for byte.
text = dump_category(cat)
assert dump_category(load_category(text)) == text
print(json.loads(text).keys())

# %%
# A hand-written table with a deliberate inconsistency: S2 -> P -> S1 is
# declared, but Hom(S1, P) and Hom(P, S1) are set wrong.
broken = {
    "indecs": ["S1", "S2", "P"],
    "hom_dim": [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
    "negext_dim": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    "conf": {"P": [[["S2"], ["S1"]]]},
}
for v in validate_lints(load_category(json.dumps(broken))):
    print(v)
