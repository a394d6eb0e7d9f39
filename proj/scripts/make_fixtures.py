#!/usr/bin/env python3
"""Regenerate the b-file fixtures under tests/fixtures/.

Every sequence is synthesized offline from its defining formula or
substitution, deliberately avoiding the algorithms the C++ library uses
(no quadratic-irrational comparisons; the Beatty values come from the
A005206 recurrence and are double-checked against math.isqrt). Each
generator asserts the documented opening terms before writing anything.
"""

import math
import pathlib

N = 1000
OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"

# --- A005206: G(0) = 0, G(n) = n - G(G(n-1)) ------------------------------
SIZE = 4 * N + 16
G = [0] * SIZE
for n in range(1, SIZE):
    G[n] = n - G[G[n - 1]]
assert G[:15] == [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9]


def a(n: int) -> int:
    """Lower Wythoff a(n) = floor(n*phi), via the recurrence route."""
    if n == 0:
        return 0
    return n + G[n - 1]


assert [a(n) for n in range(1, 9)] == [1, 3, 4, 6, 8, 9, 11, 12]
# Independent route: floor(n*phi) = (n + isqrt(5 n^2)) // 2.
for n in range(0, 3 * N + 10):
    assert a(n) == (n + math.isqrt(5 * n * n)) // 2, n


def g(k: int) -> int:
    """g(k) = floor(phi * floor(k/phi)); floor(k/phi) = G(k-1) for k >= 1."""
    if k == 0:
        return 0
    return a(G[k - 1])


assert [g(k) for k in range(2, 25)] == [
    1, 1, 3, 4, 4, 6, 6, 8, 9, 9, 11, 12, 12, 14, 14, 16, 17, 17, 19, 19, 21, 22, 22,
]


def inc(n: int) -> int:
    return g(n) - g(n - 1)


assert [inc(n) for n in range(1, 15)] == [0, 1, 0, 2, 1, 0, 2, 0, 2, 1, 0, 2, 1, 0]


def fixed_point(rules: dict[int, list[int]], seed: int, length: int) -> list[int]:
    w = [seed]
    while len(w) < length:
        w = [c for ch in w for c in rules[ch]]
    return w[:length]


# --- A010060: Thue-Morse, parity of the binary digit sum ------------------
tm = [bin(n).count("1") & 1 for n in range(N)]
assert tm[:16] == [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0]

# --- A159917: fixed point of 0 -> 01, 1 -> 2, 2 -> 01 ---------------------
a159917 = fixed_point({0: [0, 1], 1: [2], 2: [0, 1]}, 0, N)
# Cross-route: letterwise one less than the fixed point of 1->12,2->3,3->12.
x2 = fixed_point({1: [1, 2], 2: [3], 3: [1, 2]}, 1, N)
assert a159917 == [v - 1 for v in x2]
assert x2[:21] == [1, 2, 3, 1, 2, 1, 2, 3, 1, 2, 3, 1, 2, 1, 2, 3, 1, 2, 1, 2, 3]

# --- A138967: Fibonacci word over {1,3} expanded by 1->123, 3->14 ---------
fib13 = fixed_point({1: [1, 3], 3: [1]}, 1, N)
a138967 = [c for ch in fib13 for c in {1: [1, 2, 3], 3: [1, 4]}[ch]][:N]
assert a138967[:16] == [1, 2, 3, 1, 4, 1, 2, 3, 1, 2, 3, 1, 4, 1, 2, 3]


def write(name: str, offset: int, terms: list[int]) -> None:
    path = OUT / name
    lines = "".join(f"{offset + i} {t}\n" for i, t in enumerate(terms))
    path.write_text(lines)
    print(f"{name}: {len(terms)} terms from index {offset}")


OUT.mkdir(parents=True, exist_ok=True)
write("b010060.txt", 0, tm)
write("b159917.txt", 0, a159917)
write("b138967.txt", 1, a138967)
write("b000201.txt", 1, [a(n) for n in range(1, N + 1)])
write("b005206.txt", 0, [G[n] for n in range(N)])
write("b120613.txt", 2, [g(k) for k in range(2, N + 2)])
write("b120614.txt", 1, [inc(n) for n in range(1, N + 1)])
