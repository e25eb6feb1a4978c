#!/usr/bin/env python3
"""
Example usage of the Tangle Shadow Bracket toolkit

This script walks through the main operations of the workbench.
"""

import os
from tangle_shadow import TangleWorkbench
from tangle_shadow.exceptions import (
    TangleShadowException,
    TangleSyntaxError,
    BudgetExceededError,
)


def main():
    # Settings fall back to TANGLE_SHADOW_* environment variables
    bench = TangleWorkbench(
        state_budget=os.getenv("TANGLE_SHADOW_STATE_BUDGET", "2^16"),
        workers=os.getenv("TANGLE_SHADOW_WORKERS", "1"),
    )

    try:
        # Example 1: Bracket pair of a tangle
        print("1. Evaluating [1]*[2]...")
        pair = bench.evaluate("[1]*[2]")
        print(f"   Pair: {bench.format_pair(pair)}")
        print(f"   States: {pair.state_count}")
        print()

        # Example 2: Closures
        print("2. Closing [3]...")
        for kind in ("N", "D", "R"):
            print(f"   {kind}: {bench.format(bench.close('[3]', kind))}")
        print()

        # Example 3: Closure of a repeated sum
        print("3. Denominator closure of rep([1]*[2], 3)...")
        print(f"   D: {bench.format(bench.close('[1]*[2]', 'D', rep=3))}")
        print()

        # Example 4: Coefficient table
        print("4. Generating Table 1...")
        frame = bench.table(table_no=1, n_range=(0, 5))
        print(bench.export(frame, "md", 1))

        # Example 5: Classification
        print("5. Classifying [2]#K1#K1...")
        print(f"   {bench.classify('[2]#K1#K1').describe()}")
        print()

        # Example 6: Brute-force check
        print("6. Comparing algebra with the state sum for [1]+1/[2]...")
        result = bench.oracle_check("[1]+1/[2]")
        print(f"   Crossings: {result.crossings}")
        print(f"   Match: {result.match}")
        print()

        # Example 7: Catalog verification without the oracle
        print("7. Verifying the catalog...")
        report = bench.verify(oracle=False)
        print(f"   {report.summary()}")

    except TangleSyntaxError as e:
        print(f"Syntax error: {e}")
    except BudgetExceededError as e:
        print(f"State budget exceeded: {e}")
    except TangleShadowException as e:
        print(f"Tangle shadow error: {e}")
    except Exception as e:
        print(f"Unexpected error: {e}")


if __name__ == "__main__":
    main()
