"""Driving the command-line interface and reading its JSON reports."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

with tempfile.TemporaryDirectory() as tmp:
    report_path = Path(tmp) / "report.json"
    cmd = [sys.executable, "-m", "qball.cli", "maxprinciple",
           "--n", "1", "--q", "1/2", "--expr", "1+z1",
           "--trunc", "10,20,40", "--theta", "4096",
           "--json", str(report_path)]
    print("$", " ".join(cmd[2:]))
    subprocess.run(cmd, check=True)
    report = json.loads(report_path.read_text())
    print()
    print("JSON report fields:", sorted(report))
    print("final gap:", report["gap"])
