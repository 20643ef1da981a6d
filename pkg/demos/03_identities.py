# The full identity suite, the same one `psisum verify` runs.
from psisum.suite import run_suite

for r in run_suite(max_m=10, max_a=3, max_n=10):
    print(f"{r.name:32s} {'pass' if r.ok else 'FAIL'}  {r.passed}/{r.checked}")
