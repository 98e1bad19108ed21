"""
The command-line tool
=====================

``slanthelix generate`` writes a frame table and a JSON report,
``slanthelix analyze`` re-derives the report from a curve file (using the
frame columns when present, otherwise the points alone) and
``slanthelix verify`` checks a curvature table ``s,k1,k2,k3``.
The same entry point is reachable as ``python -m slanthelix``.
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from slanthelix.cli import main
from slanthelix.profile import save_profile_csv

work = Path(tempfile.mkdtemp())
curve = work / "helix.csv"
report = work / "helix.json"

code = main(["generate", "--k1", "linear:1,0.5", "--k2", "const:2", "--C", "1", "--D", "0.3",
             "--eps1", "+1", "--eps2", "-1", "--s-max", "1", "--out", str(curve), "--report", str(report)])
print("generate exit", code, "->", json.loads(report.read_text())["axis_class"])

# strip the frame columns: analysis from points only
points = work / "points.csv"
points.write_text("".join(",".join(line.split(",")[:5]) + "\n" for line in curve.read_text().splitlines()))
for path in (curve, points):
    out = work / (path.stem + "_analysis.json")
    main(["analyze", "--input", str(path), "--report", str(out)])
    r = json.loads(out.read_text())
    print(f"analyze {path.name:<11} is_slant={r['is_slant']}  F_mean={r['F_mean']:.6f}  "
          f"residual={r['f_residual_max']:.1e}")

s = np.linspace(0, 1, 101)
save_profile_csv(work / "square.csv", s, np.ones_like(s), np.ones_like(s), 0.5 + s**2)
print("verify exit code for k3 = 0.5 + s^2:", main(["verify", "--input", str(work / "square.csv")]))
print("invalid signature exit code:", main(["generate", "--eps1", "-1", "--eps2", "-1", "--out", str(work / "x.csv")]))
