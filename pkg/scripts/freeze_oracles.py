"""Recompute the brute-force oracle tables and write tests/data/oracle_golden.json.

Run from the repository root:  python3 scripts/freeze_oracles.py
"""

import json
import sys
from itertools import product
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402


def orientations(n):
    return ["".join(p) for p in product("RL", repeat=n - 1)]


def typea_entry(directions):
    names, hom, ext = oracles.f2_tables(directions)
    n = len(directions) + 1
    subs = {
        f"[{a},{b}]": sorted([list(s), list(q)] for s, q in oracles.f2_submodules(directions, (a, b)))
        for a, b in oracles.interval_list(n)
    }
    return {"indecs": names, "hom": hom, "ext": ext, "submodules": subs}


def a2_stors(entry, mode):
    names, hom, ext = entry["indecs"], entry["hom"], entry["ext"]
    negext = ext if mode == "ext1" else [[0] * len(names) for _ in names]
    conf = {m: [(tuple(s), tuple(q)) for s, q in rows if s and q] for m, rows in entry["submodules"].items()}
    pairs = oracles.brute_stors(names, hom, negext, conf)
    return sorted([sorted(T), sorted(F)] for T, F, _ in pairs)


def nakayama_entry():
    names = ["1", "2", "3", "2/1", "3/2", "1/3"]
    shift = {x: oracles.nak_shift(x) for x in names}
    unshift = {v: k for k, v in shift.items()}
    return {
        "indecs": names,
        "hom": [[oracles.nak_stable_hom(a, b) for b in names] for a in names],
        "negext": [[oracles.nak_stable_hom(c, unshift[a]) for a in names] for c in names],
        "ext": [[oracles.nak_stable_hom(c, shift[a]) for a in names] for c in names],
        "shift": shift,
    }


def main():
    typea = {d: typea_entry(d) for n in range(1, 5) for d in orientations(n)}
    a2 = typea["R"]
    names, hom, ext = a2["indecs"], a2["hom"], a2["ext"]
    conf = {m: [(tuple(s), tuple(q)) for s, q in rows if s and q] for m, rows in a2["submodules"].items()}
    i12 = names.index("[1,2]")
    golden = {
        "typea": typea,
        "a2_linear": {
            "stors_zero": a2_stors(a2, "zero"),
            "stors_ext1": a2_stors(a2, "ext1"),
            "flags_T22_F11_ext1": list(oracles.flags_of(names, hom, ext, conf, {"[2,2]"}, {"[1,1]"})),
            "right_perp_12": sorted(m for j, m in enumerate(names) if hom[i12][j] == 0),
        },
    }
    golden["nakayama"] = nakayama_entry()
    out = ROOT / "tests" / "data" / "oracle_golden.json"
    out.write_text(json.dumps(golden, indent=1, sort_keys=True) + "\n")
    print(out)


if __name__ == "__main__":
    main()
