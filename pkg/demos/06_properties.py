# # Randomized property suites
#
# Both suites are seeded; a failing trial is reported with its seed string and
# full exact inputs, so it can be replayed alone.

# %%
import sys

from rieszcover.fixtures import run_fixtures
from rieszcover.properties import properties

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 20

# %%
for r in run_fixtures():
    print(("PASS " if r.ok else "FAIL ") + r.op)

# %%
report = properties(seed=42, trials=trials)
print(report.text())
