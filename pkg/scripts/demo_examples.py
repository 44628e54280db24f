"""Walk through the worked examples from the library's test suite.

Shows, for each mode, a small input pair, the computed LCS_k+ length, and
the recovered chunk alignment, then prints a few order-isomorphism checks
that illustrate why op mode needs equality-aware comparisons.
"""

import sys

from lcsk.core import Params, validate_alignment
from lcsk.exact import compute_tables, lcs_kplus_length, traceback
from lcsk.op_lcs import op_lcs_kplus_state, op_traceback
from lcsk.order_iso import build_oplce_table, order_isomorphic


def show_exact(x, y, k):
    tables = compute_tables(x, y, k)
    alignment = traceback(tables, x, y, k)
    ok = validate_alignment(x, y, Params(k=k), alignment)
    print(f"exact  x={x!r} y={y!r} k={k}")
    print(f"  length={lcs_kplus_length(x, y, k)}  chunks={alignment.chunks}"
          f"  valid={ok}")


def show_op(x, y, k):
    state = op_lcs_kplus_state(x, y, k)
    alignment = op_traceback(state)
    ok = validate_alignment(x, y, Params(k=k, mode="op"), alignment)
    print(f"op     x={x} y={y} k={k}")
    print(f"  length={state.length}  chunks={alignment.chunks}  valid={ok}")


def main():
    show_exact("acdbacbc", "aacdabca", 2)
    show_exact("ATTCGTATCG", "ATTGCTATGC", 2)
    show_op((14, 84, 82, 31, 74, 68, 87, 11, 20, 32),
            (21, 64, 2, 83, 73, 51, 5, 29, 7, 71), 3)

    print()
    a = (32, 40, 4, 16, 27)
    b = (28, 32, 12, 20, 25)
    print(f"order_isomorphic({a}, {b}) = {order_isomorphic(a, b)}")
    a1, b1 = a + (41,), b + (26,)
    print(f"...extended by one element each: {order_isomorphic(a1, b1)}"
          f" (but suffixes from index 3 match: {order_isomorphic(a1[2:], b1[2:])})")

    table = build_oplce_table((32, 40, 4, 16, 27, 41), (28, 32, 12, 20, 25, 26))
    print(f"opLCE(1,1)={table.query(1, 1)}  opLCE(3,3)={table.query(3, 3)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
