"""Hammer all seven results with random exact-rational configurations.

Degenerate draws (parallel lines, coincident points) are skipped, not
fudged; anything else must satisfy its theorem exactly or the run stops
with a reproducible counterexample.  To show what a refutation looks like,
the second half runs one of the deliberately broken bundled fixtures.
"""

from pathlib import Path

import butterfly
from butterfly import evaluate_construction, parse, run_suite

reports = run_suite(mode="numeric", trials=200, seed=7)
print(f"{'theorem':<16} {'verdict':<8} passed/attempted  skipped")
for rep in reports:
    verdict = "pass" if rep.ok else "FAIL"
    print(f"{rep.theorem:<16} {verdict:<8} {rep.passed:>6}/{rep.attempted:<9} {rep.skipped}")

# Now a construction that is wrong on purpose: the axis is dropped from the
# midpoint of O_a O_b instead of O_a O_c.  Random search refutes it fast.
fixture = Path(butterfly.__file__).parent / "corpus" / "fixtures" / "thm1_perturbed.geo"
construction = parse(fixture.read_text())
report = evaluate_construction(construction, mode="numeric", trials=1000,
                               seed=7, label="thm1_perturbed")

print(f"\n{fixture.name}: {report.failure}")
if report.counterexample is not None:
    witness = report.counterexample
    print(f"  found at trial {witness.trial}")
    for name, value in witness.params:
        print(f"  {name} = {value}")
    print(f"  {witness.detail}")
