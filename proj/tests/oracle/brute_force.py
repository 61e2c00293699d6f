#!/usr/bin/env python3
"""Unpruned brute-force oracle for the corpus models.

Models are hand-encoded as Python functions (no shared code with the C++
library). Prints the derived judgments as JSON; the C++ golden tests pin the
same values.
"""
import itertools
import json
import sys
from fractions import Fraction as F


def model(name, endo, ranges, funcs):
    return {"name": name, "endo": endo, "ranges": ranges, "funcs": funcs}


def m_jane_julie(name, j2_range):
    ranges = {"J1": [F(0), F(1, 2)], "J2": j2_range, "B": [F(0), F(1)]}
    funcs = {
        "J1": lambda s: F(1, 2),
        "J2": lambda s: F(1),
        "B": lambda s: F(0) if s["J1"] + s["J2"] >= 1 else F(1),
    }
    return model(name, ["J1", "J2", "B"], ranges, funcs)


def m_suzy():
    b = [F(0), F(1)]
    ranges = {v: b for v in ["S", "B", "H_S", "H_B", "G"]}
    funcs = {
        "S": lambda s: F(1),
        "B": lambda s: F(1),
        "H_S": lambda s: s["S"],
        "H_B": lambda s: max(F(0), s["B"] - s["H_S"]),
        "G": lambda s: max(s["H_S"], s["H_B"]),
    }
    return model("suzy", ["S", "B", "H_S", "H_B", "G"], ranges, funcs)


def m_antidote():
    b = [F(0), F(1)]
    ranges = {v: b for v in ["J1", "J2", "J3", "B"]}
    funcs = {
        "J1": lambda s: F(1),
        "J2": lambda s: F(1),
        "J3": lambda s: F(1),
        "B": lambda s: (1 - max(s["J1"], s["J2"])) if s["J2"] == s["J3"] else F(1),
    }
    return model("antidote", ["J1", "J2", "J3", "B"], ranges, funcs)


def solve(m, iv):
    # Fixed-point iteration; models are acyclic so |V| rounds suffice.
    s = {v: m["ranges"][v][0] for v in m["endo"]}
    for _ in range(len(m["endo"]) + 1):
        for v in m["endo"]:
            s[v] = iv[v] if v in iv else m["funcs"][v](s)
    return s


def subsets(xs):
    for k in range(len(xs) + 1):
        for c in itertools.combinations(xs, k):
            yield list(c)


def butfor(m, iv, phi):
    s = solve(m, iv)
    if not phi(s):
        return set()
    out = set()
    for v in m["endo"]:
        for x in m["ranges"][v]:
            if not phi(solve(m, {**iv, v: x})):
                out.add(v)
    return out


def ac2(m, phi, X):
    actual = solve(m, {})
    rest = [v for v in m["endo"] if v not in X]
    for W in subsets(rest):
        for xs in itertools.product(*[m["ranges"][v] for v in X]):
            iv = {w: actual[w] for w in W}
            iv.update(dict(zip(X, xs)))
            if not phi(solve(m, iv)):
                return True
    return False


def hp(m, phi):
    if not phi(solve(m, {})):
        return set()
    sat = [frozenset(X) for X in subsets(m["endo"]) if X and ac2(m, phi, X)]
    minimal = [X for X in sat if not any(Y < X for Y in sat)]
    return set().union(*minimal) if minimal else set()


def space(m, X):
    actual = solve(m, {})
    rest = [v for v in m["endo"] if v not in X]
    seen = set()
    for A in subsets(X):
        for vals in itertools.product(*[m["ranges"][v] for v in A]):
            for B in subsets(rest):
                iv = dict(zip(A, vals))
                iv.update({b: actual[b] for b in B})
                key = frozenset(iv.items())
                if key not in seen:
                    seen.add(key)
                    yield iv


def putative(m, phi, causes):
    actual = solve(m, {})
    out = set()
    for iv in space(m, sorted(causes, key=m["endo"].index)):
        s = solve(m, iv)
        for v in butfor(m, iv, phi):
            if s[v] == actual[v]:
                out.add(v)
    return out


def presumption_ok(m, phi, causes):
    actual = solve(m, {})
    pre = putative(m, phi, causes) - causes
    for v in pre:
        for iv in space(m, sorted(causes, key=m["endo"].index)):
            s = solve(m, iv)
            if s[v] == actual[v] and v in butfor(m, iv, phi):
                if not any(s[w] != actual[w] for w in m["endo"] if w not in causes):
                    return False
    return True


def empirical(m, phi, C):
    actual = solve(m, {})
    wit = set()
    for iv in space(m, sorted(C, key=m["endo"].index)):
        s = solve(m, iv)
        if any(s[w] != actual[w] for w in m["endo"] if w not in C):
            continue
        for v in butfor(m, iv, phi):
            if s[v] == actual[v]:
                wit.add(v)
    return wit == set(C)


def order(m, xs):
    return [v for v in m["endo"] if v in xs]


def main():
    cases = [
        (m_jane_julie("m1", [F(1, 2), F(1)]), lambda s: s["B"] == 0),
        (m_jane_julie("m2", [F(0), F(1, 2), F(1)]), lambda s: s["B"] == 0),
        (m_suzy(), lambda s: s["G"] == 1),
        (m_antidote(), lambda s: s["B"] == 0),
    ]
    out = {}
    for m, phi in cases:
        h = hp(m, phi)
        bf = butfor(m, {}, phi)
        put = putative(m, phi, h)
        fps = [order(m, C) for C in subsets(m["endo"]) if empirical(m, phi, set(C))]
        out[m["name"]] = {
            "solution": {k: str(v) for k, v in solve(m, {}).items()},
            "butfor": order(m, bf),
            "hp": order(m, h),
            "putative_hp": order(m, put),
            "preempted_hp": order(m, put - h),
            "presumption_hp": presumption_ok(m, phi, h),
            "fixed_points": fps,
        }
    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
