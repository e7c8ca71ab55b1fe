"""Run the q-series identity suite and print one line per identity.

Usage: python3 demos/identity_suite.py [ORDER]
"""
import sys

from bananagv import check_identities


def main() -> int:
    order = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    print(f"checking the classical identities to q-order {order}\n")
    checks = check_identities(order)
    width = max(len(c.name) for c in checks)
    for c in checks:
        status = "ok" if c.passed else "FAILED"
        detail = f"  ({c.detail})" if c.detail else ""
        print(f"  {c.name:<{width}}  {status}{detail}")
    failed = sum(not c.passed for c in checks)
    print(f"\n{len(checks) - failed}/{len(checks)} identities hold")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
