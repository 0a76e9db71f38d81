"""Driving the batch CLI.

Jobs are JSON documents; reports are deterministic JSON on stdout with
exit code 0 (pass/computed), 1 (verified failure or negative result) or
2 (invalid input).  This script runs a few jobs in-process; the same
documents work through the installed console script:

    hopfore --config demos/configs/taft3_check.json
"""

import json
import pathlib

from hopfore.cli import run_job

CONFIGS = pathlib.Path(__file__).parent / "configs"

for name in ("taft3_check.json", "sweedler_simples.json",
             "z4_skew_quotient.json", "tensor_split.json",
             "grading_control.json"):
    doc = json.loads((CONFIGS / name).read_text())
    report, code = run_job(doc)
    print("== %s -> exit %d, status %s" % (name, code, report["status"]))
    payload = {k: v for k, v in report["result"].items()
               if k not in ("per_target", "basis", "basis_change")}
    print(json.dumps(payload, indent=2, sort_keys=True)[:600])
    print()
