#!/usr/bin/env python3
"""Writes b-file fixtures in OEIS format into fixtures/.

The values are computed here with plain Python integers, independently of the
Rust code. Replace any file with the real b-file from oeis.org to regress
against the published data instead; the CLI reads both the same way.
"""
from fractions import Fraction
from math import comb
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def motzkin_rows(count):
    rows = [[1]]
    while len(rows) < count:
        prev = rows[-1]
        get = lambda k: prev[k] if 0 <= k < len(prev) else 0
        rows.append([get(k - 2) + get(k - 1) + get(k) for k in range(len(prev) + 1)])
    return rows


def trinomial_rows(count):
    rows = [[1]]
    while len(rows) < count:
        prev = rows[-1]
        get = lambda k: prev[k] if 0 <= k < len(prev) else 0
        rows.append([get(k - 2) + get(k - 1) + get(k) for k in range(len(prev) + 2)])
    return rows


def write(name, title, pairs):
    lines = [f"# {name}: {title}", "# generated by scripts/gen_fixtures.py"]
    lines += [f"{i} {v}" for i, v in pairs]
    (OUT / f"b{name[1:]}.txt").write_text("\n".join(lines) + "\n")


def main():
    OUT.mkdir(exist_ok=True)
    count = 301
    rows = motzkin_rows(count)
    lhs = []
    for n in range(count):
        r = rows[n] + [0]
        a = sum(r[k] * r[k + 1] for k in range(n + 1))
        b = sum(Fraction(comb(2 * n, 2 * k + 1) * comb(2 * k + 1, k), k + 2) for k in range(n + 1))
        assert b.denominator == 1 and a == b, n
        lhs.append(a)
    write("A026940", "a(n) = Sum_{k=0..n} T(n,k)*T(n,k+1), T = Motzkin triangle",
          list(enumerate(lhs)))

    flat = [v for row in motzkin_rows(60) for v in row]
    write("A026300", "Motzkin triangle read by rows", list(enumerate(flat)))

    flat = [v for row in trinomial_rows(40) for v in row]
    write("A027907", "trinomial triangle read by rows", list(enumerate(flat)))


if __name__ == "__main__":
    main()
