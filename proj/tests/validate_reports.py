#!/usr/bin/env python3
"""Runs every CLI command with --json, validates the output against the
report schema, checks byte-stable output across runs, and replays every
counterexample through `eval`."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, corpus, schema_path, table = sys.argv[1:5]
schema = json.loads(pathlib.Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)


def m(name):
    return str(pathlib.Path(corpus) / f"{name}.scm")


runs = [
    ["eval", m("m2"), "--query", "[J2 := 1/2](B = 0)"],
    ["solve", m("suzy"), "--intervene", "[S := 0]"],
    ["causes", m("m2"), "-f", "(B = 0)", "--theory", "hp"],
    ["causes", m("m1"), "-f", "(B = 0)", "--theory", "butfor"],
    ["classify", m("suzy"), "-f", "(G = 1)"],
    ["classify", m("m2"), "-f", "(B = 0)", "--table", table],
    ["check", m("m2"), "-f", "(B = 0)", "--principle", "presumption"],
    ["check", m("antidote"), "-f", "(B = 0)", "--principle", "presumption"],
    ["check", m("m2"), "-f", "(B = 0)", "--principle", "similarity", "--table", table],
    ["check", m("m2"), "-f", "(B = 0)", "--principle", "empirical", "--cause-set", "J2,B"],
    ["check", m("m2"), "-f", "(B = 0)", "--principle", "empirical", "--cause-set", "J1,J2,B"],
    ["fixedpoints", m("antidote"), "-f", "(B = 0)"],
    ["random", "--count", "20", "--seed", "3", "--vars", "3"],
    ["golden", "--corpus", corpus],
]

failures = 0
for args in runs:
    first = subprocess.run([cli, *args, "--json"], capture_output=True)
    second = subprocess.run([cli, *args, "--json"], capture_output=True)
    label = " ".join(args[:1] + [pathlib.Path(a).name for a in args[1:2]] + args[2:])
    problems = []
    if first.returncode not in (0, 1):
        problems.append(f"exit {first.returncode}: {first.stderr.decode()}")
    else:
        doc = json.loads(first.stdout)
        problems += [e.message for e in validator.iter_errors(doc)]
        if first.stdout != second.stdout:
            problems.append("output differs between runs")
        cx = doc["payload"].get("counterexample") if isinstance(doc["payload"], dict) else None
        for q in (cx or {}).get("replay", []):
            r = subprocess.run([cli, "eval", args[1], "--query", q["query"], "--json"], capture_output=True)
            got = json.loads(r.stdout)["payload"]["value"] if r.returncode == 0 else None
            if got != q["expected"]:
                problems.append(f"replay {q['query']} gave {got}, expected {q['expected']}")
    failures += bool(problems)
    print("FAIL" if problems else "PASS", label)
    for p in problems:
        print("   ", p)

sys.exit(1 if failures else 0)
