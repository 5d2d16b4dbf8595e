"""Regenerate the bundled synthetic churn-like dataset.

Cell counts are ``round(10_000 * p)`` for the bundled three-variable churn
model (posterior medians of a fit to bank churn records, with the all-ones cell taking
the remaining mass), so the relative frequencies equal the model exactly.
Rows are shuffled with a fixed seed.
"""

from pathlib import Path

import numpy as np

from mvbern.io import load_model, write_csv
from mvbern.sampling import SampleMatrix

M = 10_000

table = load_model("bundled:churn_model.json")
counts = np.rint(M * table.p).astype(int)
assert counts.sum() == M
ranks = np.repeat(np.arange(counts.size), counts)
np.random.default_rng(20240601).shuffle(ranks)
rows = (ranks[:, None] >> np.arange(table.n - 1, -1, -1)) & 1
out = Path(__file__).resolve().parents[1] / "src" / "mvbern" / "data" / "churn_synthetic.csv"
with open(out, "w", newline="") as fh:
    write_csv(SampleMatrix(rows, table.names), fh)
print(f"wrote {M} rows to {out}")
