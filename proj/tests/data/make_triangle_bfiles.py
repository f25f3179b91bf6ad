#!/usr/bin/env python3
"""Regenerate the offline b-file fixtures for A037027 and A073370.

Both triangles are read by rows, T(n,m) for 0 <= m <= n, offset 0:
  A037027  T(n,m) = T(n-1,m) + T(n-2,m) + T(n-1,m-1)     (Fibonacci-Pascal)
  A073370  T(n,m) = T(n-1,m) + 2 T(n-2,m) + T(n-1,m-1)   (Jacobsthal convolution)
with T(0,0) = 1 and T = 0 outside 0 <= m <= n.
"""
import sys
from pathlib import Path

ROWS = 40


def triangle(c2):
    t = {}
    get = lambda n, m: t.get((n, m), 0)
    for n in range(ROWS + 1):
        for m in range(n + 1):
            t[n, m] = 1 if n == 0 else get(n - 1, m) + c2 * get(n - 2, m) + get(n - 1, m - 1)
    return [t[n, m] for n in range(ROWS + 1) for m in range(n + 1)]


def write(path, header, values):
    with open(path, "w") as out:
        out.write(f"# {header}\n# Generated by make_triangle_bfiles.py, rows 0..{ROWS}.\n")
        for i, v in enumerate(values):
            out.write(f"{i} {v}\n")


if __name__ == "__main__":
    here = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
    write(here / "b037027.txt", "A037027: Fibonacci-Pascal triangle read by rows", triangle(1))
    write(here / "b073370.txt", "A073370: convolution triangle of A001045(n+1) read by rows", triangle(2))
