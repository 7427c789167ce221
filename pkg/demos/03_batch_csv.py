"""A batch of sensor rows through the command line, then linted.

Run:  python demos/03_batch_csv.py

Writes a small CSV with a few deliberately broken rows into a temporary
directory, runs `harmonise codegen`, `harmonise harmonise` and
`harmonise lint` in-process, and shows what each step reports.
"""

import random
import tempfile
from importlib.resources import files
from pathlib import Path

from harmonise.cli import main

data = files("harmonise") / "data"
work = Path(tempfile.mkdtemp(prefix="harmonise-demo-"))

rng = random.Random(2025)
rows = ["id,sea_temperature_celsius,timestamp,latitude,longitude"]
for i in range(1, 11):
    rows.append(f"{i},{rng.uniform(3, 9):.2f},2025-06-27T{i:02d}:00:00Z,70.41,{rng.uniform(-1, 1):.2f}")
rows[4] = "4,n/a,2025-06-27T04:00:00Z,70.41,0.00"  # sensor dropout
rows[7] = "7,5.10,2025-06-27T07:00:00Z,97.2,0.00"  # latitude typo
(work / "readings.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")

config = (data / "reference_config.yaml").read_text(encoding="utf-8")
(work / "config.yaml").write_text(config.replace("# path: out.ttl", "path: " + str(work / "out.ttl")), encoding="utf-8")

print("$ harmonise codegen ...")
code = main(["codegen", "--vocab", str(data / "qudt_units.ttl"), "--kind", "unit",
             "--out-manifest", str(work / "units.manifest"), "--out-source", str(work / "units.py")])
print(f"exit {code}\n")

print("$ harmonise harmonise ...   (diagnostics and summary on stderr)", flush=True)
code = main(["harmonise", "--config", str(work / "config.yaml"), "--catalog", str(work / "units.manifest"),
             "--records", str(work / "readings.csv")])
print(f"exit {code}  (3 = some rows skipped)\n")

print("$ harmonise lint ...")
code = main(["lint", "--graph", str(work / "out.ttl")])
print(f"exit {code}\n")

# Drop one unit triple by hand and lint again.
text = (work / "out.ttl").read_text(encoding="utf-8")
block_start = text.index("oim-res:sea_temperature_2 ")
block_end = text.index(" .\n", block_start)
block = text[block_start:block_end]
trimmed = block.replace(";\n  qudt:unit unit:DEG_C", "")
(work / "broken.ttl").write_text(text.replace(block, trimmed), encoding="utf-8")
print("$ harmonise lint ...   (one qudt:unit removed)")
code = main(["lint", "--graph", str(work / "broken.ttl")])
print(f"exit {code}")
print(f"\nfiles left in {work}")
