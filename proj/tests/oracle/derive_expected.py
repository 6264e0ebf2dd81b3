#!/usr/bin/env python3
"""Brute-force oracle used to derive the frozen expected values in the C++ tests.

Everything here enumerates weight assignments and windows explicitly; it shares
no code or algorithm with the bitset engine.
"""
import itertools
from math import gcd


def units(n):
    return [x for x in range(1, n) if gcd(x, n) == 1]


def units_pow(n, j):
    return sorted({pow(x, j, n) for x in units(n)})


def weighted_zero_sum(seq, n, weights):
    return any(sum(a * x for a, x in zip(ws, seq)) % n == 0
               for ws in itertools.product(weights, repeat=len(seq)))


def reach(seq, n, weights):
    return sorted({sum(a * x for a, x in zip(ws, seq)) % n
                   for ws in itertools.product(weights, repeat=len(seq))})


def zero_window_free(seq, n, weights):
    return not any(weighted_zero_sum(seq[i:j], n, weights)
                   for i in range(len(seq)) for j in range(i + 1, len(seq) + 1))


def extremal(n, weights, length):
    return [s for s in itertools.product(range(n), repeat=length)
            if zero_window_free(s, n, weights)]


if __name__ == "__main__":
    print("units(25)", units(25), len(units(25)))
    print("U(7)^2", units_pow(7, 2), "U(7)^3", units_pow(7, 3), "U(15)^2", units_pow(15, 2))
    print("reach Z7 {1,6} (1,1,1)", reach((1, 1, 1), 7, [1, 6]))
    print("reach Z3 {1} (1,2,1)", reach((1, 2, 1), 3, [1]))
    print("sumset U(7)^2 (1,1,1)", reach((1, 1, 1), 7, units_pow(7, 2)))
    print("cover all unit triples mod 11:",
          all(len(reach(t, 11, units_pow(11, 2))) == 11
              for t in itertools.product(units(11), repeat=3)))
    q5 = units_pow(5, 2)
    print("Q5 extremal pairs", len(extremal(5, q5, 2)))
    print("Z3 {1} len2", extremal(3, [1], 2))
    for n in (3, 4, 5, 6):
        print("count One", n, len(extremal(n, [1], n - 1)))
    print("U(15) len3 count", len(extremal(15, units(15), 3)))
    print("U(15) len4 count", len(extremal(15, units(15), 4)))
    print("U(9) len3 count", len(extremal(9, units(9), 3)))
    print("U(25) len3 count", len(extremal(25, units(25), 3)))
    print("U(21) len3 count", len(extremal(21, units(21), 3)))
    print("U(7)^3 len3 count", len(extremal(7, units_pow(7, 3), 3)),
          "len4", len(extremal(7, units_pow(7, 3), 4)))
    print("U(55)^3 len3 count", len(extremal(55, units_pow(55, 3), 3)))
    print("U(19)^3", units_pow(19, 3))
    print("lift 2 mod5 to 15:", next(a for a in range(2, 15, 5) if gcd(a, 15) == 1))
    print("lift sq 4 mod5 to 15:", next(a for a in range(4, 15, 5) if a in units_pow(15, 2)))
    print("1<->3 reach Z15 U (3,5)", reach((3, 5), 15, units(15)),
          "local3", reach((0, 2), 3, units(3)), "local5", reach((3, 0), 5, units(5)))
    print("Z25 (10,15) U", weighted_zero_sum((10, 15), 25, units(25)),
          "Z5 (2,3)", weighted_zero_sum((2, 3), 5, units(5)))
