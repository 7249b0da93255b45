"""
A tour of the bundled corpus
============================

Load each bundled automaton, print its text report, and compare a few
computed values with the manifest.
"""

from autolab.families import corpus
from autolab.report import analyze, to_text

# every entry ships with a manifest of expected values
for name, aut, expected in corpus():
    report = analyze(aut)
    print(f"=== {name} ===")
    print(to_text(report))
    print("manifest says c_irreducible =", expected.get("c_irreducible"),
          "| computed:", report["c_irreducible"])
    print()
