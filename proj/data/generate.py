#!/usr/bin/env python3
"""Regenerates the bundled category and group files in data/."""
import itertools
import json
import os
from fractions import Fraction

HERE = os.path.dirname(os.path.abspath(__file__))
VERSION = "1"


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def scalar(N, coeffs):
    d = totient(N)
    cs = [Fraction(c) for c in coeffs] + [Fraction(0)] * (d - len(coeffs))
    return {"N": N, "coeffs": [[c.numerator, c.denominator] for c in cs]}


def dump(path, doc):
    keys = list(doc.keys())
    lines = []
    for k in keys:
        v = doc[k]
        head = "  " + json.dumps(k) + ": "
        if k in ("N", "F") and isinstance(v, list) and v:
            body = "[\n" + ",\n".join("    " + json.dumps(x, separators=(",", ":")) for x in v) + "\n  ]"
        else:
            body = json.dumps(v, separators=(",", ":"))
        lines.append(head + body)
    with open(path, "w") as f:
        f.write("{\n" + ",\n".join(lines) + "\n}\n")


def category(name, labels, root, N, dual, F):
    n = len(labels)
    doc = {"name": name, "examples_version": VERSION, "n": n, "unit": 0, "root_order": root,
           "labels": labels, "N": N, "dual": dual,
           "F": [{"ijkl": list(k), "matrix": F[k]} for k in sorted(F)]}
    return doc


def pointed(name, table, omega, root, labels=None):
    n = len(table)
    N = [[[1 if table[a][b] == c else 0 for c in range(n)] for b in range(n)] for a in range(n)]
    inv = [next(b for b in range(n) if table[a][b] == 0) for a in range(n)]
    F = {}
    for (a, b, c), v in omega.items():
        F[(a, b, c, table[table[a][b]][c])] = [[v]]
    return category(name, labels or [str(g) for g in range(n)], root, N, inv, F)


def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def s3():
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    idx = {p: i for i, p in enumerate(perms)}
    comp = lambda p, q: tuple(p[q[i]] for i in range(3))
    return [[idx[comp(p, q)] for q in perms] for p in perms]


def group_doc(table, omega, root):
    return {"order": len(table), "table": table, "root_order": root,
            "omega": [{"abc": list(k), "value": v} for k, v in sorted(omega.items())]}


def main():
    one = lambda N: scalar(N, [1])
    z2_omega = {(1, 1, 1): scalar(4, [-1])}

    cats = {
        "vec_z2": pointed("Vec_Z2", cyclic(2), {}, 2, ["e", "g"]),
        "vec_z3": pointed("Vec_Z3", cyclic(3), {}, 6, ["e", "g", "g2"]),
        "vec_s3": pointed("Vec_S3", s3(), {}, 6, ["e", "s1", "s2", "s3", "r", "r2"]),
        "vec_z2_omega": pointed("Vec_Z2^omega", cyclic(2), z2_omega, 4, ["e", "g"]),
    }

    # Fibonacci: 1, tau; phi^-1 = z5 + z5^4 = -1 - z^2 - z^3 in the power basis
    pinv = scalar(5, [-1, 0, -1, -1])
    mpinv = scalar(5, [1, 0, 1, 1])
    fibN = [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]
    cats["fibonacci"] = category("Fibonacci", ["1", "tau"], 5, fibN, [0, 1],
                                 {(1, 1, 1, 1): [[pinv, one(5)], [pinv, mpinv]]})

    # Ising: 1, sigma, psi; 1/sqrt2 = (z8 - z8^3)/2
    h = scalar(8, [0, Fraction(1, 2), 0, Fraction(-1, 2)])
    mh = scalar(8, [0, Fraction(-1, 2), 0, Fraction(1, 2)])
    m1 = scalar(8, [-1])
    isN = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    rules = {(0, 0): [0], (0, 1): [1], (0, 2): [2], (1, 0): [1], (1, 1): [0, 2], (1, 2): [1],
             (2, 0): [2], (2, 1): [1], (2, 2): [0]}
    for (a, b), ks in rules.items():
        for k in ks:
            isN[a][b][k] = 1
    cats["ising"] = category("Ising", ["1", "sigma", "psi"], 8, isN, [0, 1, 2],
                             {(1, 1, 1, 1): [[h, h], [h, mh]], (1, 2, 1, 2): [[m1]],
                              (2, 1, 2, 1): [[m1]]})

    for key, doc in cats.items():
        dump(os.path.join(HERE, key + ".json"), doc)

    bad = pointed("Vec_Z2 (corrupted)", cyclic(2), {(1, 1, 1): scalar(2, [2])}, 2, ["e", "g"])
    dump(os.path.join(HERE, "corrupt_vec_z2.json"), bad)

    groups = {
        "z2": group_doc(cyclic(2), {}, 2),
        "z3": group_doc(cyclic(3), {}, 6),
        "s3": group_doc(s3(), {}, 6),
        "z2_omega": group_doc(cyclic(2), z2_omega, 4),
        "z2_bad_cocycle": group_doc(cyclic(2), {(1, 1, 1): scalar(4, [0, 1])}, 4),
    }
    for key, doc in groups.items():
        with open(os.path.join(HERE, "groups", key + ".json"), "w") as f:
            f.write(json.dumps(doc, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
