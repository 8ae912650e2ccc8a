#!/usr/bin/env python3
"""Regenerate the embedded OEIS triangle fixtures from each entry's defining formula.

Each file is written in b-file format ("index value" per line, '#' comments);
indices start at the entry's OEIS offset. Rows are listed in OEIS reading order.
"""
from itertools import permutations
from math import comb, factorial, prod
from pathlib import Path

ROWS = 12
HERE = Path(__file__).resolve().parent


def stirling2(n, k):
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def eulerian(n, k):
    # permutations of [n] with k-1 descents, 1 <= k <= n
    return sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))


def eulerian_gamma(n):
    # gamma-vector of the Eulerian polynomial A_n(t) = sum over S_n of t^des(w),
    # with A_n(t) enumerated by brute force and peeled off against t^k (1+t)^(n-1-2k).
    poly = [0] * n
    for w in permutations(range(n)):
        poly[sum(1 for i in range(n - 1) if w[i] > w[i + 1])] += 1
    gamma = []
    for k in range((n - 1) // 2 + 1):
        c = poly[k]
        gamma.append(c)
        for j in range(n - 1 - 2 * k + 1):
            poly[k + j] -= c * comb(n - 1 - 2 * k, j)
    assert all(v == 0 for v in poly)
    return gamma


def tri(first_row, row_fn):
    return [row_fn(n) for n in range(first_row, first_row + ROWS)]


FIXTURES = {
    "A001147": (0, "Double factorial of odd numbers: (2n-1)!!", [[prod(range(1, 2 * n, 2)) for n in range(ROWS + 1)]]),
    "A001263": (1, "Narayana triangle T(n,k) = C(n,k-1)C(n,k)/n",
                tri(1, lambda n: [comb(n, k - 1) * comb(n, k) // n for k in range(1, n + 1)])),
    "A007318": (0, "Pascal's triangle", tri(0, lambda n: [comb(n, k) for k in range(n + 1)])),
    "A008292": (1, "Eulerian numbers", tri(1, lambda n: [eulerian(n, k) for k in range(1, n + 1)])),
    "A013609": (0, "Coefficients of (1+2x)^n", tri(0, lambda n: [comb(n, k) * 2 ** k for k in range(n + 1)])),
    "A019538": (1, "k! * Stirling2(n,k)", tri(1, lambda n: [factorial(k) * stirling2(n, k) for k in range(1, n + 1)])),
    "A033282": (3, "Diagonal dissections of a convex n-gon into k+1 regions",
                tri(3, lambda n: [comb(n - 3, k) * comb(n + k - 1, k) // (k + 1) for k in range(n - 2)])),
    "A038207": (0, "2^(n-k) C(n,k)", tri(0, lambda n: [comb(n, k) * 2 ** (n - k) for k in range(n + 1)])),
    "A055151": (0, "Motzkin polynomial coefficients n!/((n-2k)! k! (k+1)!)",
                tri(0, lambda n: [factorial(n) // (factorial(n - 2 * k) * factorial(k) * factorial(k + 1))
                                  for k in range(n // 2 + 1)])),
    "A074909": (0, "C(n+1,k), 0 <= k <= n", tri(0, lambda n: [comb(n + 1, k) for k in range(n + 1)])),
    "A101280": (1, "gamma-vectors of the permutahedra (Eulerian gamma coefficients)",
                [eulerian_gamma(n) for n in range(1, 10)]),
    "A135278": (0, "C(n+1,k+1), 0 <= k <= n", tri(0, lambda n: [comb(n + 1, k + 1) for k in range(n + 1)])),
}


def main():
    for anumber, (offset, title, rows) in FIXTURES.items():
        flat = [v for row in rows for v in row]
        lines = [f"# {anumber}: {title}", f"# rows: {len(rows)}"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(flat)]
        (HERE / f"{anumber}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
