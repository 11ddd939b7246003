"""Run a theorem suite over a corpus, the same way ``isk4 verify`` does.

Run with ``python3 demos/03_run_a_suite.py``.
"""

from isk4.harness.runner import run_suite

for suite, corpus in [
    ("v2-trichotomy", "internal:6@connected,inclass"),
    ("duffin", "gen:sp:50:1:nmax=30"),
    ("wheelmain", "gen:wheel:10:2"),
    ("isk4-oracle", "gen:gnp:100:3:n=10,p=0.3"),
]:
    report = run_suite(suite, corpus)
    print(report.summary())
