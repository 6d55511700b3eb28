"""Running the verification harness from Python.

The same sweeps that back the command-line `mixedsums verify` are available
as a library call: configure fields, an a-policy, and suites, then inspect
the per-check reports.
"""

from mixedsums import SuiteConfig, run

cfg = SuiteConfig(
    fields=[(5, 1), (13, 1), (3, 2)],
    a_policy="all",
    suites=("classical", "main", "mellin"),
    tol=1e-8,
)
reports = run(cfg)

width = max(len(r.check_id) for r in reports)
for r in reports:
    status = "pass" if r.passed else "FAIL"
    a = "-" if r.a is None else r.a
    print(f"  {status}  q={r.q:<3d} a={a!s:<4} {r.check_id:<{width}} "
          f"instances={r.instances:<6d} max_err={r.max_abs_err:.2e}")

failed = [r for r in reports if not r.passed]
print(f"\n{len(reports) - len(failed)}/{len(reports)} checks passed")
