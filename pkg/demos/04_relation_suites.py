"""Run the whole identity catalogue and print the tables."""

from skewgt import relations

for report in relations.run_suites(["gl2", "gl3", "invariants", "localized"]):
    print(report.table())
    print()
