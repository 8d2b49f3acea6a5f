#!/usr/bin/env python3
"""Regenerates the JSON fixtures under data/ with numpy, independently of the C++ code."""
import itertools
import json
import math
import pathlib

import numpy as np

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def cplx(z):
    z = complex(z)
    return float(z.real) if z.imag == 0 else [float(z.real), float(z.imag)]


def mat(m):
    return [[cplx(v) for v in row] for row in np.asarray(m)]


def write(rel, doc):
    path = DATA / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n")


def s3():
    perms = sorted(itertools.permutations((1, 2, 3)))
    label = lambda p: "".join(map(str, p))
    compose = lambda g, h: tuple(g[h[x] - 1] for x in range(3))  # (gh)(x) = g(h(x))
    mul = {f"{label(g)},{label(h)}": label(compose(g, h)) for g in perms for h in perms}

    def parity(p):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        return -1.0 if inv % 2 else 1.0

    def perm_matrix(p):
        m = np.zeros((3, 3))
        for x in range(3):
            m[p[x] - 1, x] = 1.0
        return m

    b = np.array([[1, 1], [-1, 1], [0, -2]], dtype=float) / np.array([math.sqrt(2), math.sqrt(6)])
    irreps = {
        "trivial": {"n": 1, "matrices": {label(p): [[1.0]] for p in perms}},
        "sign": {"n": 1, "matrices": {label(p): [[parity(p)]] for p in perms}},
        "standard": {"n": 2, "matrices": {label(p): mat(b.T @ perm_matrix(p) @ b) for p in perms}},
    }
    return {"elements": [label(p) for p in perms], "mul": mul, "irreps": irreps}


def expectations(doc, irrep, rho):
    mats = doc["irreps"][irrep]["matrices"]
    values = {}
    for g, m in mats.items():
        d = np.array([[complex(*v) if isinstance(v, list) else v for v in row] for row in m])
        values[g] = cplx(np.trace(rho @ d))
    return {"irrep": irrep, "values": values}


def main():
    write("groups/trivial.json",
          {"elements": ["e"], "mul": {"e,e": "e"}, "irreps": {"trivial": {"n": 1, "matrices": {"e": [[1.0]]}}}})
    z2 = {"elements": ["e", "r"],
          "mul": {"e,e": "e", "e,r": "r", "r,e": "r", "r,r": "e"},
          "irreps": {"trivial": {"n": 1, "matrices": {"e": [[1.0]], "r": [[1.0]]}},
                     "sign": {"n": 1, "matrices": {"e": [[1.0]], "r": [[-1.0]]}}}}
    write("groups/z2.json", z2)

    doc = s3()
    write("groups/s3.json", doc)

    broken = json.loads(json.dumps(doc))
    broken["mul"]["213,213"] = "132"  # a transposition no longer squares to the identity
    write("groups/s3_corrupted.json", broken)

    bad_irrep = json.loads(json.dumps(doc))
    bad_irrep["irreps"]["standard"]["matrices"]["231"][0][0] = 0.0  # no longer unitary or a homomorphism
    write("groups/s3_bad_irrep.json", bad_irrep)

    write("expectations/z2_sign_pure.json", {"irrep": "sign", "values": {"e": 1.0, "r": -1.0}})
    write("expectations/z2_sign_inconsistent.json", {"irrep": "sign", "values": {"e": 1.0, "r": 0.5}})
    rho = np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]])
    write("expectations/s3_standard_mixed.json", expectations(doc, "standard", rho))
    write("expectations/s3_standard_maximally_mixed.json", expectations(doc, "standard", np.eye(2) / 2))

    k0 = 2 * math.pi
    write("pipelines/one_splitter.json", {"k0": k0, "elements": ["source", "bs", "detector"]})
    write("pipelines/mirrors.json", {"k0": k0, "elements": ["source", "bs", "mirrors", "detector"]})
    write("pipelines/balanced.json", {"k0": k0, "elements": ["source", "bs", "mirrors", "bs", "detector"]})
    write("pipelines/phase_plate.json",
          {"k0": k0, "elements": ["source", "bs", "mirrors", "phase:0.125", "bs", "detector"]})

    write("events/reference_events.json", {"frame": "boys", "events": [
        {"label": "joe_meets_sara", "t": 0.0, "x": 0.0},
        {"label": "bob_meets_kim", "t": 0.0, "x": 1000.0},
        {"label": "bob_passes_alice", "t": 0.002, "x": 1000.0},
    ]})


if __name__ == "__main__":
    main()
