"""Generate and validate src/modlie/data/orbits.txt.

Each orbit row carries the expected centralizer dimension per prime class;
every stored representative is validated here by checking that the
nullspace dimension of its adjoint matrix matches the table at every listed
prime (geq classes are checked at two primes).  Representatives are sums of
positive-root vectors: regular elements of standard subsystems for the
labels that name one, plus a handful of searched-and-validated elements for
the non-Levi classes that the analysis tasks need.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import numpy as np
from modlie import chevalley, fp, roots

# (label, dims by prime class, rep root-strings or None, diagram or None, flags)
G2 = [
    ("G2", {"geq5": 2, "3": 3, "2": 4}, ["10", "01"], (2, 2), ""),
    ("G2(a1)", {"geq5": 4, "3": 5, "2": 4}, ["01", "31"], None, ""),
    ("(~A1)^(3)", {"3": 6}, ["10", "31"], None, "nonstandard"),
    ("~A1", {"geq5": 6, "3": 8, "2": 8}, ["10"], None, ""),
    ("A1", {"geq5": 8, "3": 8, "2": 8}, ["01"], None, ""),
]

F4 = [
    ("F4", {"geq5": 4, "3": 6, "2": 8}, ["1000", "0100", "0010", "0001"], (2, 2, 2, 2), ""),
    ("F4(a1)", {"geq5": 6, "3": 6, "2": 10}, ["1000", "0100", "0001", "0120"], (2, 2, 0, 2), ""),
    ("F4(a2)", {"geq5": 8, "3": 8, "2": 10}, None, None, ""),
    ("(C3)^(2)", {"2": 12}, None, None, "nonstandard"),
    ("C3", {"geq5": 10, "3": 10, "2": 16}, ["0100", "0010", "0001"], None, ""),
    ("B3", {"geq5": 10, "3": 10, "2": 14}, ["1000", "0100", "0010"], None, ""),
    ("F4(a3)", {"geq5": 12, "3": 12, "2": 14}, None, None, ""),
    ("(C3(a1))^(2)", {"2": 16}, None, None, "nonstandard"),
    ("C3(a1)", {"geq5": 14, "3": 14, "2": 20}, None, None, ""),
    ("(A1+~A2)^(2)", {"2": 16}, None, None, "nonstandard"),
    ("A1+~A2", {"geq5": 16, "3": 18, "2": 20}, ["1000", "0010", "0001"], (2, -5, 2, 2), "alias=~A2+A1"),
    ("(B2)^(2)", {"2": 17}, None, None, "nonstandard"),
    ("B2", {"geq5": 16, "3": 16, "2": 21}, ["0100", "0010"], None, ""),
    ("A2+~A1", {"geq5": 18, "3": 18, "2": 18}, ["1000", "0100", "0001"], None, "alias=~A1+A2"),
    ("~A2", {"geq5": 22, "3": 22, "2": 28}, ["0010", "0001"], None, ""),
    ("(A2)^(2)", {"2": 22}, None, None, "nonstandard"),
    ("A2", {"geq5": 22, "3": 22, "2": 22}, ["1000", "0100"], None, ""),
    ("A1+~A1", {"geq5": 24, "3": 24, "2": 28}, ["1000", "0001"], None, ""),
    ("(~A1)^(2)", {"2": 31}, None, None, "nonstandard"),
    ("~A1", {"geq5": 30, "3": 30, "2": 36}, ["0001"], None, ""),
    ("A1", {"geq5": 36, "3": 36, "2": 36}, ["1000"], None, ""),
]


def _simple(ix, rank):
    return ["".join("1" if j + 1 == i else "0" for j in range(rank)) for i in ix]


E6 = [
    ("E6", {"geq5": 6, "3": 9, "2": 8}, _simple([1, 2, 3, 4, 5, 6], 6), (2, 2, 2, 2, 2, 2), ""),
    ("E6(a1)", {"geq5": 8, "3": 9, "2": 8}, None, None, ""),
    ("D5", {"geq5": 10, "3": 10, "2": 12}, _simple([2, 3, 4, 5, 6], 6), None, ""),
    ("E6(a3)", {"geq5": 12, "3": 13, "2": 12}, None, None, ""),
    ("D5(a1)", {"geq5": 14, "3": 14, "2": 14}, None, None, ""),
    ("A5", {"geq5": 14, "3": 15, "2": 16}, _simple([1, 3, 4, 5, 6], 6), None, ""),
    ("A4+A1", {"geq5": 16, "3": 16, "2": 16}, _simple([2, 4, 5, 6, 1], 6), None, ""),
    ("D4", {"geq5": 18, "3": 18, "2": 20}, _simple([2, 3, 4, 5], 6), None, ""),
    ("A4", {"geq5": 18, "3": 18, "2": 18}, _simple([1, 3, 4, 5], 6), None, ""),
    ("D4(a1)", {"geq5": 20, "3": 20, "2": 20}, None, None, ""),
    ("A3+A1", {"geq5": 22, "3": 22, "2": 24}, _simple([1, 3, 4, 6], 6), None, ""),
    ("A2^2+A1", {"geq5": 24, "3": 27, "2": 24}, _simple([1, 2, 3, 5, 6], 6), (2, 2, 2, -5, 2, 2), ""),
    ("A3", {"geq5": 26, "3": 26, "2": 26}, _simple([1, 3, 4], 6), None, ""),
    ("A2+A1^2", {"geq5": 28, "3": 28, "2": 28}, _simple([1, 3, 2, 5], 6), None, ""),
    ("A2^2", {"geq5": 30, "3": 31, "2": 30}, _simple([1, 3, 5, 6], 6), None, ""),
    ("A2+A1", {"geq5": 32, "3": 32, "2": 32}, _simple([1, 3, 5], 6), None, ""),
    ("A2", {"geq5": 36, "3": 36, "2": 36}, _simple([1, 3], 6), None, ""),
    ("A1^3", {"geq5": 38, "3": 38, "2": 40}, _simple([1, 4, 6], 6), (2, -1, -2, 2, -2, 2), ""),
    ("A1^2", {"geq5": 46, "3": 46, "2": 46}, _simple([1, 4], 6), None, ""),
    ("A1", {"geq5": 56, "3": 56, "2": 56}, _simple([1], 6), None, ""),
]

E7 = [
    ("E7", {"geq5": 7, "3": 9, "2": 14}, _simple([1, 2, 3, 4, 5, 6, 7], 7), tuple([2] * 7), ""),
    ("E7(a1)", {"geq5": 9, "3": 9, "2": 14}, None, None, ""),
    ("E7(a2)", {"geq5": 11, "3": 11, "2": 14}, None, None, ""),
    ("E7(a3)", {"geq5": 13, "3": 13, "2": 14}, None, None, ""),
    ("E6", {"geq5": 13, "3": 15, "2": 15}, _simple([1, 2, 3, 4, 5, 6], 7), None, ""),
    ("E6(a1)", {"geq5": 15, "3": 15, "2": 15}, None, None, ""),
    ("D6", {"geq5": 15, "3": 15, "2": 22}, _simple([2, 3, 4, 5, 6, 7], 7), None, ""),
    ("E7(a4)", {"geq5": 17, "3": 17, "2": 22}, None, None, ""),
    ("D6(a1)", {"geq5": 19, "3": 19, "2": 22}, None, None, ""),
    ("D5+A1", {"geq5": 19, "3": 19, "2": 22}, None, None, ""),
    ("(A6)^(2)", {"2": 22}, None, None, "nonstandard"),
    ("A6", {"geq5": 19, "3": 19, "2": 23}, _simple([1, 3, 4, 5, 6, 7], 7), None, ""),
    ("E7(a5)", {"geq5": 21, "3": 21, "2": 22}, None, None, ""),
    ("D5", {"geq5": 21, "3": 21, "2": 23}, _simple([2, 3, 4, 5, 6], 7), None, ""),
    ("E6(a3)", {"geq5": 23, "3": 23, "2": 23}, None, None, ""),
    ("D6(a2)", {"geq5": 23, "3": 23, "2": 26}, None, None, ""),
    ("D5(a1)+A1", {"geq5": 25, "3": 25, "2": 29}, None, None, ""),
    ("A5+A1", {"geq5": 25, "3": 27, "2": 26}, None, None, ""),
    ("(A5)'", {"geq5": 25, "3": 25, "2": 27}, _simple([1, 3, 4, 5, 6], 7), None, ""),
    ("A4+A2", {"geq5": 27, "3": 27, "2": 27}, _simple([1, 3, 4, 2, 6, 7], 7), None, ""),
    ("D5(a1)", {"geq5": 27, "3": 27, "2": 27}, None, None, ""),
    ("A4+A1", {"geq5": 29, "3": 29, "2": 29}, _simple([1, 3, 4, 5, 7], 7), None, ""),
    ("D4+A1", {"geq5": 31, "3": 31, "2": 38}, _simple([2, 3, 4, 5, 7], 7), None, ""),
    ("(A5)''", {"geq5": 31, "3": 31, "2": 32}, _simple([2, 4, 5, 6, 7], 7), None, ""),
    ("A3+A2+A1", {"geq5": 33, "3": 33, "2": 38}, _simple([5, 6, 7, 1, 3, 2], 7), None, ""),
    ("A4", {"geq5": 33, "3": 33, "2": 33}, _simple([1, 3, 4, 5], 7), None, ""),
    ("(A3+A2)^(2)", {"2": 38}, None, None, "nonstandard"),
    ("A3+A2", {"geq5": 35, "3": 35, "2": 39}, _simple([1, 3, 4, 6, 7], 7), None, ""),
    ("D4(a1)+A1", {"geq5": 37, "3": 37, "2": 38}, None, None, ""),
    ("D4", {"geq5": 37, "3": 37, "2": 39}, _simple([2, 3, 4, 5], 7), None, ""),
    ("A3+A1^2", {"geq5": 39, "3": 39, "2": 42}, _simple([2, 4, 5, 1, 7], 7), None, ""),
    ("D4(a1)", {"geq5": 39, "3": 39, "2": 39}, None, None, ""),
    ("(A3+A1)'", {"geq5": 41, "3": 41, "2": 43}, _simple([1, 3, 4, 6], 7), None, ""),
    ("A2^2+A1", {"geq5": 43, "3": 45, "2": 43}, _simple([1, 2, 3, 5, 6], 7), (2, 2, 2, -5, 2, 2, -2), ""),
    ("(A3+A1)''", {"geq5": 47, "3": 47, "2": 48}, _simple([2, 4, 5, 7], 7), None, ""),
    ("A2+A1^3", {"geq5": 49, "3": 49, "2": 50}, _simple([1, 3, 2, 5, 7], 7), None, ""),
    ("A2^2", {"geq5": 49, "3": 49, "2": 49}, _simple([1, 3, 5, 6], 7), None, ""),
    ("A3", {"geq5": 49, "3": 49, "2": 49}, _simple([1, 3, 4], 7), None, ""),
    ("A2+A1^2", {"geq5": 51, "3": 51, "2": 51}, _simple([1, 3, 2, 5], 7), None, ""),
    ("A2+A1", {"geq5": 57, "3": 57, "2": 57}, _simple([1, 3, 5], 7), None, ""),
    ("A1^4", {"geq5": 63, "3": 63, "2": 70}, _simple([2, 3, 5, 7], 7), (-1, 2, 2, -3, 2, -2, 2), ""),
    ("A2", {"geq5": 67, "3": 67, "2": 67}, _simple([1, 3], 7), None, ""),
    ("(A1^3)'", {"geq5": 69, "3": 69, "2": 71}, _simple([1, 4, 6], 7), (2, -1, -2, 2, -2, 2, -1), "alias=A1^3"),
    ("(A1^3)''", {"geq5": 79, "3": 79, "2": 80}, _simple([2, 5, 7], 7), None, ""),
    ("A1^2", {"geq5": 81, "3": 81, "2": 81}, _simple([1, 4], 7), None, ""),
    ("A1", {"geq5": 99, "3": 99, "2": 99}, _simple([1], 7), None, ""),
]

E8 = [
    ("E8", {"geq7": 8, "5": 10, "3": 12, "2": 16},
     _simple([1, 2, 3, 4, 5, 6, 7, 8], 8), tuple([2] * 8), ""),
    ("E8(a1)", {"geq7": 10, "5": 10, "3": 12, "2": 16},
     ["10000000", "01000000", "01010000", "00110000", "00001000", "00000100",
      "00000010", "00000001"], (2, 2, 2, 0, 2, 2, 2, 2), ""),
    ("E8(a2)", {"geq7": 12, "5": 12, "3": 12, "2": 16},
     ["10000000", "01000000", "00100000", "01010000", "00011000", "00001100",
      "00000110", "00000001"], None, ""),
    ("E8(a3)", {"geq7": 14, "5": 14, "3": 16, "2": 16}, None, None, ""),
    ("E8(a4)", {"geq7": 16, "5": 16, "3": 16, "2": 16},
     ["10100000", "01010000", "00110000", "00011000", "00001100", "00000110",
      "00000011", "00111000"], None, ""),
    ("E7", {"geq7": 16, "5": 16, "3": 18, "2": 24}, _simple([1, 2, 3, 4, 5, 6, 7], 8), None, ""),
    ("E8(b4)", {"geq7": 18, "5": 18, "3": 18, "2": 24}, None, None, ""),
    ("E8(a5)", {"geq7": 20, "5": 20, "3": 20, "2": 24}, None, None, ""),
    ("E7(a1)", {"geq7": 20, "5": 20, "3": 20, "2": 24}, None, None, ""),
    ("E8(b5)", {"geq7": 22, "5": 22, "3": 22, "2": 24}, None, None, ""),
    ("(D7)^(2)", {"2": 24}, None, None, "nonstandard"),
    ("D7", {"geq7": 22, "5": 22, "3": 22, "2": 32}, _simple([2, 3, 4, 5, 6, 7, 8], 8), None, ""),
    ("E8(a6)", {"geq7": 24, "5": 24, "3": 24, "2": 24}, None, None, ""),
    ("E7(a2)", {"geq7": 24, "5": 24, "3": 24, "2": 28}, None, None, ""),
    ("E6+A1", {"geq7": 26, "5": 26, "3": 30, "2": 28}, _simple([1, 2, 3, 4, 5, 6, 8], 8), None, ""),
    ("(D7(a1))^(2)", {"2": 28}, None, None, "nonstandard"),
    ("D7(a1)", {"geq7": 26, "5": 26, "3": 26, "2": 32}, None, None, ""),
    ("E8(b6)", {"geq7": 28, "5": 28, "3": 34, "2": 30}, None, None, ""),
    ("E7(a3)", {"geq7": 28, "5": 28, "3": 28, "2": 28}, None, None, ""),
    ("E6(a1)+A1", {"geq7": 30, "5": 30, "3": 30, "2": 30}, None, None, ""),
    ("(A7)^(3)", {"3": 30}, None, None, "nonstandard"),
    ("A7", {"geq7": 30, "5": 30, "3": 34, "2": 32}, _simple([1, 3, 4, 5, 6, 7, 8], 8), None, ""),
    ("D7(a2)", {"geq7": 32, "5": 32, "3": 32, "2": 32}, None, None, ""),
    ("E6", {"geq7": 32, "5": 32, "3": 34, "2": 34}, _simple([1, 2, 3, 4, 5, 6], 8), None, ""),
    ("D6", {"geq7": 32, "5": 32, "3": 32, "2": 40}, _simple([2, 3, 4, 5, 6, 7], 8), None, ""),
    ("(D5+A2)^(2)", {"2": 40}, None, None, "nonstandard"),
    ("D5+A2", {"geq7": 34, "5": 34, "3": 34, "2": 40}, None, None, ""),
    ("E6(a1)", {"geq7": 34, "5": 34, "3": 34, "2": 34}, None, None, ""),
    ("E7(a4)", {"geq7": 36, "5": 36, "3": 36, "2": 40}, None, None, ""),
    ("A6+A1", {"geq7": 36, "5": 36, "3": 36, "2": 40}, _simple([2, 4, 5, 6, 7, 8, 1], 8), None, ""),
    ("D6(a1)", {"geq7": 38, "5": 38, "3": 38, "2": 40}, None, None, ""),
    ("(A6)^(2)", {"2": 40}, None, None, "nonstandard"),
    ("A6", {"geq7": 38, "5": 38, "3": 38, "2": 42}, _simple([1, 3, 4, 5, 6, 7], 8), None, ""),
    ("E8(a7)", {"geq7": 40, "5": 40, "3": 40, "2": 40}, None, None, ""),
    ("D5+A1", {"geq7": 40, "5": 40, "3": 40, "2": 44}, _simple([2, 3, 4, 5, 6, 8], 8), None, ""),
    ("E7(a5)", {"geq7": 42, "5": 42, "3": 42, "2": 44}, None, None, ""),
    ("E6(a3)+A1", {"geq7": 44, "5": 44, "3": 46, "2": 44}, None, None, ""),
    ("D6(a2)", {"geq7": 44, "5": 44, "3": 44, "2": 48}, None, None, ""),
    ("D5(a1)+A2", {"geq7": 46, "5": 46, "3": 46, "2": 48}, None, None, ""),
    ("A5+A1", {"geq7": 46, "5": 46, "3": 48, "2": 48}, _simple([1, 3, 4, 5, 6, 8], 8), None, ""),
    ("A4+A3", {"geq7": 48, "5": 50, "3": 48, "2": 48},
     _simple([1, 2, 3, 4, 6, 7, 8], 8), (2, 2, 2, 2, -9, 2, 2, 2), ""),
    ("D5", {"geq7": 48, "5": 48, "3": 48, "2": 50}, _simple([2, 3, 4, 5, 6], 8), None, ""),
    ("E6(a3)", {"geq7": 50, "5": 50, "3": 50, "2": 50}, None, None, ""),
    ("(D4+A2)^(2)", {"2": 52}, None, None, "nonstandard"),
    ("D4+A2", {"geq7": 50, "5": 50, "3": 50, "2": 64}, None, None, ""),
    ("A4+A2+A1", {"geq7": 52, "5": 52, "3": 52, "2": 52}, _simple([5, 6, 7, 8, 1, 3, 2], 8), None, ""),
    ("D5(a1)+A1", {"geq7": 52, "5": 52, "3": 52, "2": 52}, None, None, ""),
    ("A5", {"geq7": 52, "5": 52, "3": 52, "2": 54}, _simple([1, 3, 4, 5, 6], 8), None, ""),
    ("A4+A2", {"geq7": 54, "5": 54, "3": 54, "2": 54}, _simple([1, 3, 4, 2, 6, 7], 8), None, ""),
    ("A4+A1^2", {"geq7": 56, "5": 56, "3": 56, "2": 56}, _simple([1, 3, 4, 2, 6, 8], 8), None,
     "alias=A4+2A1"),
    ("D5(a1)", {"geq7": 58, "5": 58, "3": 58, "2": 58}, None, None, ""),
    ("2A3", {"geq7": 60, "5": 60, "3": 60, "2": 64}, _simple([1, 3, 4, 6, 7, 8], 8),
     (2, -3, 2, 2, -6, 2, 2, 2), "alias=A3^2"),
    ("A4+A1", {"geq7": 60, "5": 60, "3": 60, "2": 60}, _simple([1, 3, 4, 2, 6], 8), None, ""),
    ("D4(a1)+A2", {"geq7": 64, "5": 64, "3": 64, "2": 64},
     ["01000000", "00100000", "01010000", "00011000", "00000010", "00000001"], None, ""),
    ("D4+A1", {"geq7": 64, "5": 64, "3": 64, "2": 72}, _simple([2, 3, 4, 5, 7], 8), None, ""),
    ("A3+A2+A1", {"geq7": 66, "5": 66, "3": 66, "2": 72}, _simple([5, 6, 7, 1, 3, 2], 8), None, ""),
    ("A4", {"geq7": 68, "5": 68, "3": 68, "2": 68}, _simple([1, 2, 3, 4], 8),
     (2, 2, 2, 2, -6, 0, 0, 0), ""),
    ("(A3+A2)^(2)", {"2": 72}, None, None, "nonstandard"),
    ("A3+A2", {"geq7": 70, "5": 70, "3": 70, "2": 74}, _simple([1, 3, 4, 6, 7], 8), None, ""),
    ("D4(a1)+A1", {"geq7": 72, "5": 72, "3": 72, "2": 72},
     ["01000000", "00100000", "01010000", "00011000", "00000010"], None, ""),
    ("A3+A1^2", {"geq7": 76, "5": 76, "3": 76, "2": 80}, _simple([1, 3, 4, 6, 8], 8), None,
     "alias=A3+2A1"),
    ("A2^2+A1^2", {"geq7": 80, "5": 80, "3": 84, "2": 80}, _simple([1, 2, 3, 5, 6, 8], 8),
     (2, 2, 2, -5, 2, 2, -3, 2), ""),
    ("D4", {"geq7": 80, "5": 80, "3": 80, "2": 82}, _simple([2, 3, 4, 5], 8), None, ""),
    ("D4(a1)", {"geq7": 82, "5": 82, "3": 82, "2": 82},
     ["01000000", "00100000", "01010000", "00011000"], None, ""),
    ("A3+A1", {"geq7": 84, "5": 84, "3": 84, "2": 86}, _simple([1, 3, 4, 6], 8), None, ""),
    ("A2^2+A1", {"geq7": 86, "5": 86, "3": 88, "2": 86}, _simple([1, 2, 3, 5, 6], 8),
     (2, 2, 2, -5, 2, 2, -2, 0), ""),
    ("A2^2", {"geq7": 92, "5": 92, "3": 92, "2": 92}, _simple([1, 3, 5, 6], 8), None, ""),
    ("A2+A1^3", {"geq7": 94, "5": 94, "3": 94, "2": 96}, _simple([1, 3, 2, 5, 7], 8), None, ""),
    ("A3", {"geq7": 100, "5": 100, "3": 100, "2": 100}, _simple([1, 3, 4], 8),
     (2, -3, 2, 2, -3, 0, 0, 0), ""),
    ("A2+A1^2", {"geq7": 102, "5": 102, "3": 102, "2": 102}, _simple([1, 3, 2, 5], 8), None, ""),
    ("A2+A1", {"geq7": 112, "5": 112, "3": 112, "2": 112}, _simple([1, 3, 5], 8), None, ""),
    ("A1^4", {"geq7": 120, "5": 120, "3": 120, "2": 128}, _simple([2, 3, 5, 7], 8),
     (-1, 2, 2, -3, 2, -2, 2, -1), ""),
    ("A2", {"geq7": 134, "5": 134, "3": 134, "2": 134}, _simple([1, 3], 8), None, ""),
    ("A1^3", {"geq7": 136, "5": 136, "3": 136, "2": 138}, _simple([1, 4, 6], 8),
     (2, -1, -2, 2, -2, 2, -1, 0), ""),
    ("A1^2", {"geq7": 156, "5": 156, "3": 156, "2": 156}, _simple([1, 4], 8), None, ""),
    ("A1", {"geq7": 190, "5": 190, "3": 190, "2": 190}, _simple([1], 8), None, ""),
]

TABLES = {"G2": G2, "F4": F4, "E6": E6, "E7": E7, "E8": E8}
CHECK_PRIMES = {"geq7": (7,), "geq5": (5, 7), "5": (5,), "3": (3,), "2": (2,)}

_ALGEBRAS = {}


def algebra(group, p):
    key = (group, p)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = chevalley.chevalley_algebra(roots.build(group), p)
    return _ALGEBRAS[key]


def validate(group, label, dims, rep, diagram):
    for cls, want in dims.items():
        for p in CHECK_PRIMES[cls]:
            g = algebra(group, p)
            e = g.zero()
            for s in rep:
                e = (e + chevalley.root_vector(g, 1, s)) % p
            got = g.dim - fp.rank(g.ad(e), p)
            assert got == want, f"{group} {label} p={p}: dim g_e = {got}, table says {want}"
    if diagram is not None:
        g = algebra(group, CHECK_PRIMES[next(iter(dims))][0])
        grad = chevalley.grading_from_diagram(g, diagram)
        e = g.zero()
        for s in rep:
            e = (e + chevalley.root_vector(g, 1, s)) % g.p
        comp2 = grad.component(2)
        assert comp2.contains(e), f"{group} {label}: representative not in g(tau, 2)"


def main():
    out = ["# Nilpotent-orbit catalog: representatives, weighted diagrams and"]
    out.append("# centralizer dimensions per prime class for G2, F4, E6, E7, E8.")
    out.append("# Lines: orbit <group> <label> [nonstandard] / alias <label> /")
    out.append("#        rep <root,...> / diagram <a1 ... al> / dim p=<class> <value>")
    out.append("")
    for group, rows in TABLES.items():
        for label, dims, rep, diagram, flags in rows:
            tokens = flags.split() if flags else []
            nonstandard = "nonstandard" in flags
            alias = next((t.split("=", 1)[1] for t in tokens if t.startswith("alias=")), None)
            out.append(f"orbit {group} {label}" + (" nonstandard" if nonstandard else ""))
            if alias:
                out.append(f"alias {alias}")
            if rep:
                validate(group, label, dims, rep, diagram)
                out.append("rep " + ",".join(rep))
            if diagram:
                out.append("diagram " + " ".join(str(a) for a in diagram))
            for cls, val in dims.items():
                out.append(f"dim p={cls} {val}")
            out.append("")
            print(f"ok {group} {label}")
    path = Path(__file__).resolve().parents[1] / "src" / "modlie" / "data" / "orbits.txt"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(out))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
