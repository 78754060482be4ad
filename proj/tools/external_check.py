#!/usr/bin/env python3
"""Compare internal arrowing verdicts with an external SAT solver on exported CNF.

Usage: external_check.py RAMSEY_LAB_BINARY [--report FILE]
Exits 77 when pysat is not installed.
"""

import argparse
import json
import subprocess
import sys
import tempfile
from pathlib import Path

try:
    from pysat.formula import CNF
    from pysat.solvers import Solver
except ImportError:
    print("pysat not available, skipping")
    sys.exit(77)

INSTANCES = [
    (3, 5, "path:2", "path:2"),
    (3, 6, "cycle:3", "cycle:3"),
    (3, 7, "cycle:3", "cycle:3"),
    (3, 7, "path:3", "cycle:3"),
    (3, 8, "path:3", "cycle:3"),
    (3, 7, "path:3", "path:3"),
    (3, 8, "path:3", "path:3"),
    (3, 8, "cycle:4", "cycle:3"),
    (3, 9, "cycle:4", "cycle:3"),
    (4, 9, "cycle:3", "cycle:3"),
]


def run_tool(binary, args, workdir):
    proc = subprocess.run([binary, "--cert-dir", workdir, *args], capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout)


def external_verdict(cnf_path, sidecar, k, n):
    cnf = CNF(from_file=cnf_path)
    with Solver(name="g4", bootstrap_with=cnf.clauses) as s:
        sat = s.solve()
        if not sat:
            return "UNSAT", None
        model = s.get_model()
    # rebuild the coloring from the model through the sidecar's variable map
    red = [sidecar["edges"][v - 1] for v in model if v > 0]
    coloring = {"k": k, "n_vertices": n, "encoding": "explicit", "red_bit": 1, "red_edges": red}
    return "SAT", coloring


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("binary")
    ap.add_argument("--report")
    args = ap.parse_args()

    rows = []
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for k, n, red, blue in INSTANCES:
            cnf = str(Path(tmp) / f"k{k}_n{n}_{red}_{blue}.cnf".replace(":", ""))
            code, _ = run_tool(args.binary, ["export-cnf", "--k", str(k), "--n-vertices", str(n),
                                             "--red", red, "--blue", blue, "--cnf", cnf], tmp)
            assert code == 0, "export failed"
            sidecar = json.loads(Path(cnf + ".map.json").read_text())
            verdict, coloring = external_verdict(cnf, sidecar, k, n)
            _, internal = run_tool(args.binary, ["arrow", "--k", str(k), "--n-vertices", str(n),
                                                 "--red", red, "--blue", blue], tmp)
            internal_status = internal["result"]["status"]
            witness_ok = None
            if coloring is not None:
                # the external model must itself pass the certificate checker
                cert = {"type": "witness", "coloring_ref": coloring,
                        "payload": {"k": k, "red": red, "blue": blue},
                        "meta": {"lemma": "external solver model", "seed": 0, "budget_exhausted": False}}
                path = Path(tmp) / "external_witness.json"
                path.write_text(json.dumps(cert))
                code, check = run_tool(args.binary, ["check-cert", "--file", str(path)], tmp)
                witness_ok = code == 0
            agree = verdict == internal_status and witness_ok is not False
            failures += not agree
            rows.append({"k": k, "n_vertices": n, "red": red, "blue": blue, "external": verdict,
                         "internal": internal_status, "external_model_verifies": witness_ok,
                         "clauses": sidecar["red_clauses"] + sidecar["blue_clauses"]})
            print(f"{'PASS' if agree else 'FAIL'} k={k} N={n} {red} {blue}: external {verdict}, internal {internal_status}")

    if args.report:
        Path(args.report).write_text(json.dumps({"solver": "pysat glucose4", "instances": rows}, indent=2) + "\n")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
