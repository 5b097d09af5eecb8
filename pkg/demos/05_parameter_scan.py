"""Grid-scan a condition over kernel parameters and write the rows to CSV.

Equivalent to the CLI call

    wrightmaps scan T3.1 --axis sigma=0:0.9:0.15 --axis beta1=0.5:4:0.5 \
        --fix alpha1=1.2 --out demo_out/scan_T31.csv

but driven through the library so the rows can be summarized in-process.
"""

import os

from wrightmaps.cli import main

OUT = os.path.join(os.path.dirname(__file__), "demo_out")
os.makedirs(OUT, exist_ok=True)
path = os.path.join(OUT, "scan_T31.csv")

code = main([
    "scan", "T3.1",
    "--axis", "sigma=0:0.9:0.15",
    "--axis", "beta1=0.5:4:0.5",
    "--fix", "alpha1=1.2",
    "--out", path,
])
assert code == 0

with open(path, encoding="utf-8") as fh:
    header = fh.readline().strip().split(",")
    rows = [line.strip().split(",") for line in fh]

sat = header.index("sat_derived")
sigma_col = header.index("sigma")
print(f"{len(rows)} grid points; {sum(r[sat] == 'true' for r in rows)} satisfy the derived form")
for s in sorted({r[sigma_col] for r in rows}, key=float):
    ok = sum(r[sat] == "true" for r in rows if r[sigma_col] == s)
    total = sum(1 for r in rows if r[sigma_col] == s)
    print(f"  |sigma| = {float(s):.2f}: {ok}/{total} beta1 values pass")
print(f"full table: {path}")
