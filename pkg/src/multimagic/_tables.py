"""Tabulated base cases for the Latin square builders.

The builders check every entry before using it. The order-8 square and the
order-5 pair are published examples. The other pairs were found offline by
``scripts/find_odls_pairs.py`` with a SAT solver:

* orders 4, 8, 9, 12, 15 and 24 come from abelian group tables. Rows and columns
  are group elements in a chosen order; the first square is the addition
  table and the second adds an orthomorphism to the row element.
* orders 10, 14, 18, 21, 22, 26, 27 and 30 are self-orthogonal: the second
  square is the transpose of the first. Group tables cannot give orders
  that are 2 mod 4, and the group searches for 21 and 27 did not finish.
  Each was searched under an automorphism of cycle type (3,3,3,1) for
  order 10 and (n-1, 1) for the others.
"""

from __future__ import annotations


def _grid(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in line.split()) for line in text.strip().splitlines())


DIAGONAL_LS = {
    8: _grid(
        """
        0 3 6 5 4 7 2 1
        1 2 7 4 5 6 3 0
        5 6 3 0 1 2 7 4
        4 7 2 1 0 3 6 5
        2 1 4 7 6 5 0 3
        3 0 5 6 7 4 1 2
        7 4 1 2 3 0 5 6
        6 5 0 3 2 1 4 7
        """
    ),
}

ODLS_PAIRS = {
    4: (
        _grid(
            """
            3 0 1 2
            2 1 0 3
            0 3 2 1
            1 2 3 0
            """
        ),
        _grid(
            """
            0 3 2 1
            2 1 0 3
            1 2 3 0
            3 0 1 2
            """
        ),
    ),
    5: (
        _grid(
            """
            1 3 0 2 4
            2 4 1 3 0
            3 0 2 4 1
            4 1 3 0 2
            0 2 4 1 3
            """
        ),
        _grid(
            """
            1 2 3 4 0
            3 4 0 1 2
            0 1 2 3 4
            2 3 4 0 1
            4 0 1 2 3
            """
        ),
    ),
    8: (
        _grid(
            """
            6 5 3 7 4 0 2 1
            7 4 2 6 5 1 3 0
            2 1 7 3 0 4 6 5
            0 3 5 1 2 6 4 7
            1 2 4 0 3 7 5 6
            3 0 6 2 1 5 7 4
            4 7 1 5 6 2 0 3
            5 6 0 4 7 3 1 2
            """
        ),
        _grid(
            """
            6 5 3 7 4 0 2 1
            1 2 4 0 3 7 5 6
            5 6 0 4 7 3 1 2
            4 7 1 5 6 2 0 3
            3 0 6 2 1 5 7 4
            2 1 7 3 0 4 6 5
            7 4 2 6 5 1 3 0
            0 3 5 1 2 6 4 7
            """
        ),
    ),
    9: (
        _grid(
            """
            3 0 7 8 6 1 5 2 4
            4 1 8 6 7 2 3 0 5
            8 5 0 1 2 3 7 4 6
            2 8 3 4 5 6 1 7 0
            5 2 6 7 8 0 4 1 3
            0 6 4 5 3 7 2 8 1
            7 4 2 0 1 5 6 3 8
            6 3 1 2 0 4 8 5 7
            1 7 5 3 4 8 0 6 2
            """
        ),
        _grid(
            """
            0 6 4 5 3 7 2 8 1
            2 8 3 4 5 6 1 7 0
            7 4 2 0 1 5 6 3 8
            4 1 8 6 7 2 3 0 5
            1 7 5 3 4 8 0 6 2
            3 0 7 8 6 1 5 2 4
            8 5 0 1 2 3 7 4 6
            6 3 1 2 0 4 8 5 7
            5 2 6 7 8 0 4 1 3
            """
        ),
    ),
    10: (
        _grid(
            """
            1 9 6 4 8 7 5 2 3 0
            4 2 0 7 3 8 1 5 9 6
            7 1 4 0 9 5 2 6 8 3
            6 8 7 5 0 3 4 1 2 9
            5 0 8 9 6 1 3 4 7 2
            3 4 1 2 7 9 6 0 5 8
            2 6 9 3 1 0 8 7 4 5
            0 7 2 8 5 4 9 3 6 1
            9 5 3 1 2 6 7 8 0 4
            8 3 5 6 4 2 0 9 1 7
            """
        ),
        _grid(
            """
            1 4 7 6 5 3 2 0 9 8
            9 2 1 8 0 4 6 7 5 3
            6 0 4 7 8 1 9 2 3 5
            4 7 0 5 9 2 3 8 1 6
            8 3 9 0 6 7 1 5 2 4
            7 8 5 3 1 9 0 4 6 2
            5 1 2 4 3 6 8 9 7 0
            2 5 6 1 4 0 7 3 8 9
            3 9 8 2 7 5 4 6 0 1
            0 6 3 9 2 8 5 1 4 7
            """
        ),
    ),
    12: (
        _grid(
            """
             6  7  8  9 10 11  2  1  0  5  4  3
             7  8  6 10 11  9  0  2  1  3  5  4
             8  6  7 11  9 10  1  0  2  4  3  5
             0  1  2  3  4  5  8  7  6 11 10  9
             1  2  0  4  5  3  6  8  7  9 11 10
             2  0  1  5  3  4  7  6  8 10  9 11
             4  5  3  1  2  0  9 11 10  6  8  7
             3  4  5  0  1  2 11 10  9  8  7  6
             5  3  4  2  0  1 10  9 11  7  6  8
            10 11  9  7  8  6  3  5  4  0  2  1
             9 10 11  6  7  8  5  4  3  2  1  0
            11  9 10  8  6  7  4  3  5  1  0  2
            """
        ),
        _grid(
            """
             2  0  1  5  3  4  7  6  8 10  9 11
             5  3  4  2  0  1 10  9 11  7  6  8
             9 10 11  6  7  8  5  4  3  2  1  0
             7  8  6 10 11  9  0  2  1  3  5  4
             1  2  0  4  5  3  6  8  7  9 11 10
            11  9 10  8  6  7  4  3  5  1  0  2
             0  1  2  3  4  5  8  7  6 11 10  9
             8  6  7 11  9 10  1  0  2  4  3  5
             3  4  5  0  1  2 11 10  9  8  7  6
             4  5  3  1  2  0  9 11 10  6  8  7
             6  7  8  9 10 11  2  1  0  5  4  3
            10 11  9  7  8  6  3  5  4  0  2  1
            """
        ),
    ),
    14: (
        _grid(
            """
             9  3  1  4 11  8  0  5  7  2 13  6 10 12
             6 10  4  2  5  0 13  7  8 12  9  1  3 11
             8  7 11  5  3 12 10  2  9  6  1 13  0  4
             3  9  8 12  6  5  2 13 10  4  0 11  7  1
            13  4 10  9  0  2  1 12 11  7  6  3  5  8
            10  5  7  3 13  4  9  6  2  8 11 12  1  0
             1  8 12  7  9  3  6 11  4  5  2  0 13 10
             2  0  3 10  1 13  5  8  6  9 12  4 11  7
            11 12  0  1  2  6  8 10 13  3  7  9  4  5
             0 13  5 11 10  9  7  4 12  1  3  2  8  6
             7 11  6  8  4  1 12  0  3 13  5 10  9  2
            12  2  9  0  8 11  3  1  5 10  4  7  6 13
             5  1 13  6 12  7  4  3  0 11 10  8  2  9
             4  6  2 13  7 10 11  9  1  0  8  5 12  3
            """
        ),
        _grid(
            """
             9  6  8  3 13 10  1  2 11  0  7 12  5  4
             3 10  7  9  4  5  8  0 12 13 11  2  1  6
             1  4 11  8 10  7 12  3  0  5  6  9 13  2
             4  2  5 12  9  3  7 10  1 11  8  0  6 13
            11  5  3  6  0 13  9  1  2 10  4  8 12  7
             8  0 12  5  2  4  3 13  6  9  1 11  7 10
             0 13 10  2  1  9  6  5  8  7 12  3  4 11
             5  7  2 13 12  6 11  8 10  4  0  1  3  9
             7  8  9 10 11  2  4  6 13 12  3  5  0  1
             2 12  6  4  7  8  5  9  3  1 13 10 11  0
            13  9  1  0  6 11  2 12  7  3  5  4 10  8
             6  1 13 11  3 12  0  4  9  2 10  7  8  5
            10  3  0  7  5  1 13 11  4  8  9  6  2 12
            12 11  4  1  8  0 10  7  5  6  2 13  9  3
            """
        ),
    ),
    15: (
        _grid(
            """
             8  0  4  7  9  3 10  1 14  6  2 11 13 12  5
             9  1  0  8  5  4 11  2 10  7  3 12 14 13  6
             7  4  3  6  8  2 14  0 13  5  1 10 12 11  9
            13  5  9 12 14  8  0  6  4 11  7  1  3  2 10
            14  6  5 13 10  9  1  7  0 12  8  2  4  3 11
            12  9  8 11 13  7  4  5  3 10  6  0  2  1 14
             3 10 14  2  4 13  5 11  9  1 12  6  8  7  0
             6  3  2  5  7  1 13  4 12  9  0 14 11 10  8
             0 12 11  4  1 10  7 13  6  3 14  8  5  9  2
             4 11 10  3  0 14  6 12  5  2 13  7  9  8  1
             2 14 13  1  3 12  9 10  8  0 11  5  7  6  4
             1 13 12  0  2 11  8 14  7  4 10  9  6  5  3
            10  7  6 14 11  5  2  8  1 13  9  3  0  4 12
             5  2  1  9  6  0 12  3 11  8  4 13 10 14  7
            11  8  7 10 12  6  3  9  2 14  5  4  1  0 13
            """
        ),
        _grid(
            """
             6  3  2  5  7  1 13  4 12  9  0 14 11 10  8
             2 14 13  1  3 12  9 10  8  0 11  5  7  6  4
             8  0  4  7  9  3 10  1 14  6  2 11 13 12  5
             4 11 10  3  0 14  6 12  5  2 13  7  9  8  1
             9  1  0  8  5  4 11  2 10  7  3 12 14 13  6
            12  9  8 11 13  7  4  5  3 10  6  0  2  1 14
             5  2  1  9  6  0 12  3 11  8  4 13 10 14  7
            11  8  7 10 12  6  3  9  2 14  5  4  1  0 13
            14  6  5 13 10  9  1  7  0 12  8  2  4  3 11
            10  7  6 14 11  5  2  8  1 13  9  3  0  4 12
             1 13 12  0  2 11  8 14  7  4 10  9  6  5  3
            13  5  9 12 14  8  0  6  4 11  7  1  3  2 10
             3 10 14  2  4 13  5 11  9  1 12  6  8  7  0
             7  4  3  6  8  2 14  0 13  5  1 10 12 11  9
             0 12 11  4  1 10  7 13  6  3 14  8  5  9  2
            """
        ),
    ),
    18: (
        _grid(
            """
            15 11 10  5 14  1 17  9  7 13  0 12 16  2  3  4  6  8
             4 16  9  7  6 15  2  5 10  8  1  3 14  0 13 17 11 12
             5 15  1 11 13  9  8  4 17  7  3 16 12 10  2  0 14  6
             1  4  0  3 16 13 15 10  2  6  5 14 17  9 12 11  8  7
            13  2  8  9  4  0 14 12 11  3  6 10  7 17 15 16  1  5
            16 14  6  2 10  5  1  0 13 12  7 17  4  8 11 15  9  3
            12  0  4 10  3 11  6 16  1 14  8  9 13  5 17  2  7 15
            11 17  2  6  9 12  5  8  4  1 10 15  3 16  7 13  0 14
             8 12 15  1  7 10 13 14  9  5 11  0  2  4 16  6  3 17
             0  9 17  4  2  8 11  7 15 10 12  5  6  3  1 14 16 13
             9 10 12 14 15 16  0  2  3  4 17  7  5  6  8  1 13 11
             6  8  3 16 17  2  7 11 14  0 15 13 10  1  9  5 12  4
             2  1 14  0  5  3  9 15  8 16 13  4 11  7  6 12 17 10
             7  3 11 17  1  6  4 13 16  9 14  8  0 12  5 10 15  2
            10  7  5 13  0 17  3  6 12 15 16  2  1 11 14  8  4  9
            17 13 16  8 11  4 12  3  0  2  9  6 15 14 10  7  5  1
             3  6  7 15 12 14 10  1  5 17  4 11  8 13  0  9  2 16
            14  5 13 12  8  7 16 17  6 11  2  1  9 15  4  3 10  0
            """
        ),
        _grid(
            """
            15  4  5  1 13 16 12 11  8  0  9  6  2  7 10 17  3 14
            11 16 15  4  2 14  0 17 12  9 10  8  1  3  7 13  6  5
            10  9  1  0  8  6  4  2 15 17 12  3 14 11  5 16  7 13
             5  7 11  3  9  2 10  6  1  4 14 16  0 17 13  8 15 12
            14  6 13 16  4 10  3  9  7  2 15 17  5  1  0 11 12  8
             1 15  9 13  0  5 11 12 10  8 16  2  3  6 17  4 14  7
            17  2  8 15 14  1  6  5 13 11  0  7  9  4  3 12 10 16
             9  5  4 10 12  0 16  8 14  7  2 11 15 13  6  3  1 17
             7 10 17  2 11 13  1  4  9 15  3 14  8 16 12  0  5  6
            13  8  7  6  3 12 14  1  5 10  4  0 16  9 15  2 17 11
             0  1  3  5  6  7  8 10 11 12 17 15 13 14 16  9  4  2
            12  3 16 14 10 17  9 15  0  5  7 13  4  8  2  6 11  1
            16 14 12 17  7  4 13  3  2  6  5 10 11  0  1 15  8  9
             2  0 10  9 17  8  5 16  4  3  6  1  7 12 11 14 13 15
             3 13  2 12 15 11 17  7 16  1  8  9  6  5 14 10  0  4
             4 17  0 11 16 15  2 13  6 14  1  5 12 10  8  7  9  3
             6 11 14  8  1  9  7  0  3 16 13 12 17 15  4  5  2 10
             8 12  6  7  5  3 15 14 17 13 11  4 10  2  9  1 16  0
            """
        ),
    ),
    21: (
        _grid(
            """
            10  4  9 16  0 14  6  7 19 20 13  5  2  3 15  1 17 12 18 11  8
             6 11  5 10  9  1 15 18 14  0 12 20  3  2 19  8  7  4 13 16 17
            20  7 12  6 18 10  2  8 13 15 17  1  4  9 14 19 16  3  5  0 11
             2 20  8 13 12 19 11 17 18 14  1 16  5  0  6  9  3 10  4 15  7
            16 18  4 20 15  9 14 13 17  3  8  0  7 19 12  5  1 11  2  6 10
             1 17 19  5 11 16 10  2  9 18  7  4  8  6  3 14 15  0 12 13 20
             5  2 18  0 20 12 17 16  8 10 14 19  9 15 13  3 11  7  1  4  6
            12  1  7  4  2  8 20 19  6 16 15 10 11 18  9 13 14  5 17  3  0
            13  5 17 11 14  4 18  9  7  1  2  6 19 12 16 15  0  8 10 20  3
             7 14  6 18  4 15  5  1  3  8 20  2  0 16 11 10 19 13  9 17 12
             4 16 10  2  3 17 19 14  0  5  6 12 18  7 20 11  8  9 15  1 13
             3  8 15  7 13  5 16  0 20  4 18  9  1 11 10  2  6 17 14 12 19
            14 15 16 17 19  0  1  3 11 12 10 13 20  5  8  4  2  6  7  9 18
            18 12 14  3  6  2  4 20  5 17 11  8 13  1  7 16 10 15  0 19  9
             8  0 11  1 17  6 12  5 10  2  3 14 16 13  4  7  9 20 19 18 15
            11 13  2  8  1  3  9 15 16  7  4 17 12 14 18  0 20 19  6 10  5
             0  6  3 19  7 20 13 12 15  9  5 11 10  4  2 17 18 16  8 14  1
             9 19 13 15 10  7  3 11 12  6  0 18 14 17  1 20  5  2 16  8  4
            19 10  0 14  5 11  8  6  1 13  9  7 15 20 17 12  4 18  3  2 16
            15  9  1 12 16 18  7 10  4 11 19  3 17  8  0  6 13 14 20  5  2
            17  3 20  9  8 13  0  4  2 19 16 15  6 10  5 18 12  1 11  7 14
            """
        ),
        _grid(
            """
            10  6 20  2 16  1  5 12 13  7  4  3 14 18  8 11  0  9 19 15 17
             4 11  7 20 18 17  2  1  5 14 16  8 15 12  0 13  6 19 10  9  3
             9  5 12  8  4 19 18  7 17  6 10 15 16 14 11  2  3 13  0  1 20
            16 10  6 13 20  5  0  4 11 18  2  7 17  3  1  8 19 15 14 12  9
             0  9 18 12 15 11 20  2 14  4  3 13 19  6 17  1  7 10  5 16  8
            14  1 10 19  9 16 12  8  4 15 17  5  0  2  6  3 20  7 11 18 13
             6 15  2 11 14 10 17 20 18  5 19 16  1  4 12  9 13  3  8  7  0
             7 18  8 17 13  2 16 19  9  1 14  0  3 20  5 15 12 11  6 10  4
            19 14 13 18 17  9  8  6  7  3  0 20 11  5 10 16 15 12  1  4  2
            20  0 15 14  3 18 10 16  1  8  5  4 12 17  2  7  9  6 13 11 19
            13 12 17  1  8  7 14 15  2 20  6 18 10 11  3  4  5  0  9 19 16
             5 20  1 16  0  4 19 10  6  2 12  9 13  8 14 17 11 18  7  3 15
             2  3  4  5  7  8  9 11 19  0 18  1 20 13 16 12 10 14 15 17  6
             3  2  9  0 19  6 15 18 12 16  7 11  5  1 13 14  4 17 20  8 10
            15 19 14  6 12  3 13  9 16 11 20 10  8  7  4 18  2  1 17  0  5
             1  8 19  9  5 14  3 13 15 10 11  2  4 16  7  0 17 20 12  6 18
            17  7 16  3  1 15 11 14  0 19  8  6  2 10  9 20 18  5  4 13 12
            12  4  3 10 11  0  7  5  8 13  9 17  6 15 20 19 16  2 18 14  1
            18 13  5  4  2 12  1 17 10  9 15 14  7  0 19  6  8 16  3 20 11
            11 16  0 15  6 13  4  3 20 17  1 12  9 19 18 10 14  8  2  5  7
             8 17 11  7 10 20  6  0  3 12 13 19 18  9 15  5  1  4 16  2 14
            """
        ),
    ),
    22: (
        _grid(
            """
             0  8  2  6 18 17  4 14  3 13  5  9 12  1 21 10 16 20 19 11  7 15
            17  1  8  3  7 19 18  5 15 16 20  6 10 21 14  2 13  4 11 12  9  0
            12 15  3 11 10  5  9  0 20  6  4 13  1 18  2 16  8  7 21 14 19 17
             9 13 20  4 12 11  6 10  1 18 21  5 14  3  7 19  2  0 17 15 16  8
             3 10 17  0  5 13 12  7 11  9 18 21  6  8 19  4 15  2 20 16 14  1
            16  4 15 18  1  6 14 13  8  2  0 19 21 20 10  9  7 12  5 17 11  3
             8 17 12 16 19  2  7 15 14  4  6  1 20 11  3  0 21  9 10 18  5 13
            21  9  6 13 17 20  3  8 16 14 11  7  2  4  5 12  0 15  1 19 18 10
             1 21 19  7 14 18  0  4  9 11  2 12  8  6 15  5  3 17 13 20 10 16
            15 11  4 21 13  1 10 17  0 12  9  8 16 19 20 14  5  3 18  2  6  7
             2 14  0 10 20 16 11  9 21 15 17  4  3  5  1  8 19 18 12  7 13  6
            20  3 14  1 11  0 17 12 10  7 13 18  5  2 16  6  4 21  9  8 15 19
             5  0 16 15  2 12  1 18 13 20 10 14 19 17  8  3  6 11  7  9  4 21
            18  7 13  8  6 21 15  3 12  5 16 20 11 14  9  1 10 19  0  4 17  2
             6 16  7  5 21 14  2 11 18  8 19 10  9  0 13 20 17  1 15  3 12  4
            11 19 18 14  9  7 21 16  4  3  1 17  0 10  6 15 12 13  2  5  8 20
             7  6  5 17 16  3 13  2 19 21  8 11 15  9  0 18 20 14  4 10  1 12
             4  2 11 20  8 15 19  1  5 17 14  3 13 16 12  7  9 10  6  0 21 18
            13 12  9 19 15 10  8 21 17  0  3  2 18  7  4 11  1  5 16  6 20 14
            19 20  1  2  3  4  5  6  7 10 15 16 17 12 11 13 18  8 14 21  0  9
            14 18 10  9  4  8 20 19  6  1 12  0  7 15 17 21 11 16  3 13  2  5
            10  5 21 12  0  9 16 20  2 19  7 15  4 13 18 17 14  6  8  1  3 11
            """
        ),
        _grid(
            """
             0 17 12  9  3 16  8 21  1 15  2 20  5 18  6 11  7  4 13 19 14 10
             8  1 15 13 10  4 17  9 21 11 14  3  0  7 16 19  6  2 12 20 18  5
             2  8  3 20 17 15 12  6 19  4  0 14 16 13  7 18  5 11  9  1 10 21
             6  3 11  4  0 18 16 13  7 21 10  1 15  8  5 14 17 20 19  2  9 12
            18  7 10 12  5  1 19 17 14 13 20 11  2  6 21  9 16  8 15  3  4  0
            17 19  5 11 13  6  2 20 18  1 16  0 12 21 14  7  3 15 10  4  8  9
             4 18  9  6 12 14  7  3  0 10 11 17  1 15  2 21 13 19  8  5 20 16
            14  5  0 10  7 13 15  8  4 17  9 12 18  3 11 16  2  1 21  6 19 20
             3 15 20  1 11  8 14 16  9  0 21 10 13 12 18  4 19  5 17  7  6  2
            13 16  6 18  9  2  4 14 11 12 15  7 20  5  8  3 21 17  0 10  1 19
             5 20  4 21 18  0  6 11  2  9 17 13 10 16 19  1  8 14  3 15 12  7
             9  6 13  5 21 19  1  7 12  8  4 18 14 20 10 17 11  3  2 16  0 15
            12 10  1 14  6 21 20  2  8 16  3  5 19 11  9  0 15 13 18 17  7  4
             1 21 18  3  8 20 11  4  6 19  5  2 17 14  0 10  9 16  7 12 15 13
            21 14  2  7 19 10  3  5 15 20  1 16  8  9 13  6  0 12  4 11 17 18
            10  2 16 19  4  9  0 12  5 14  8  6  3  1 20 15 18  7 11 13 21 17
            16 13  8  2 15  7 21  0  3  5 19  4  6 10 17 12 20  9  1 18 11 14
            20  4  7  0  2 12  9 15 17  3 18 21 11 19  1 13 14 10  5  8 16  6
            19 11 21 17 20  5 10  1 13 18 12  9  7  0 15  2  4  6 16 14  3  8
            11 12 14 15 16 17 18 19 20  2  7  8  9  4  3  5 10  0  6 21 13  1
             7  9 19 16 14 11  5 18 10  6 13 15  4 17 12  8  1 21 20  0  2  3
            15  0 17  8  1  3 13 10 16  7  6 19 21  2  4 20 12 18 14  9  5 11
            """
        ),
    ),
    24: (
        _grid(
            """
             8  3 20  7  4  0 23 10 12  1 11  9 15 17 19  6 16  5 18 22 13  2 21 14
             6  4 18  8  5  1 21 11 13  2  9 10 16 15 20  7 17  3 19 23 14  0 22 12
             7  5 19  6  3  2 22  9 14  0 10 11 17 16 18  8 15  4 20 21 12  1 23 13
            11  0 23 10  1  3 20  7 15  4  8  6 12 14 22  9 13  2 21 19 16  5 18 17
             9  1 21 11  2  4 18  8 16  5  6  7 13 12 23 10 14  0 22 20 17  3 19 15
            10  2 22  9  0  5 19  6 17  3  7  8 14 13 21 11 12  1 23 18 15  4 20 16
             0 10 12  2 11  7 15  5 19  8  3  4 22 21 14  1 23  9 13 17 20  6 16 18
             1 11 13  0  9  8 16  3 20  6  4  5 23 22 12  2 21 10 14 15 18  7 17 19
             5  6 17  4  7  9 14  1 21 10  2  0 18 20 16  3 19  8 15 13 22 11 12 23
            18 16  6 20 17 13  9 23  1 14 21 22  4  3  8 19  5 15  7 11  2 12 10  0
            21 13  9 23 14 16  6 20  4 17 18 19  1  0 11 22  2 12 10  8  5 15  7  3
            12 22  0 14 23 19  3 17  7 20 15 16 10  9  2 13 11 21  1  5  8 18  4  6
            15 19  3 17 20 22  0 14 10 23 12 13  7  6  5 16  8 18  4  2 11 21  1  9
            14 21  2 13 22 18  5 16  6 19 17 15  9 11  1 12 10 23  0  4  7 20  3  8
            22 14 10 21 12 17  7 18  5 15 19 20  2  1  9 23  0 13 11  6  3 16  8  4
            19 17  7 18 15 14 10 21  2 12 22 23  5  4  6 20  3 16  8  9  0 13 11  1
            23 12 11 22 13 15  8 19  3 16 20 18  0  2 10 21  1 14  9  7  4 17  6  5
            20 15  8 19 16 12 11 22  0 13 23 21  3  5  7 18  4 17  6 10  1 14  9  2
             2  9 14  1 10  6 17  4 18  7  5  3 21 23 13  0 22 11 12 16 19  8 15 20
            16 20  4 15 18 23  1 12 11 21 13 14  8  7  3 17  6 19  5  0  9 22  2 10
            13 23  1 12 21 20  4 15  8 18 16 17 11 10  0 14  9 22  2  3  6 19  5  7
            17 18  5 16 19 21  2 13  9 22 14 12  6  8  4 15  7 20  3  1 10 23  0 11
             3  7 15  5  8 10 12  2 22 11  0  1 19 18 17  4 20  6 16 14 23  9 13 21
             4  8 16  3  6 11 13  0 23  9  1  2 20 19 15  5 18  7 17 12 21 10 14 22
            """
        ),
        _grid(
            """
            13 23  1 12 21 20  4 15  8 18 16 17 11 10  0 14  9 22  2  3  6 19  5  7
             9  1 21 11  2  4 18  8 16  5  6  7 13 12 23 10 14  0 22 20 17  3 19 15
            20 15  8 19 16 12 11 22  0 13 23 21  3  5  7 18  4 17  6 10  1 14  9  2
            10  2 22  9  0  5 19  6 17  3  7  8 14 13 21 11 12  1 23 18 15  4 20 16
             4  8 16  3  6 11 13  0 23  9  1  2 20 19 15  5 18  7 17 12 21 10 14 22
             3  7 15  5  8 10 12  2 22 11  0  1 19 18 17  4 20  6 16 14 23  9 13 21
            22 14 10 21 12 17  7 18  5 15 19 20  2  1  9 23  0 13 11  6  3 16  8  4
            12 22  0 14 23 19  3 17  7 20 15 16 10  9  2 13 11 21  1  5  8 18  4  6
            23 12 11 22 13 15  8 19  3 16 20 18  0  2 10 21  1 14  9  7  4 17  6  5
             6  4 18  8  5  1 21 11 13  2  9 10 16 15 20  7 17  3 19 23 14  0 22 12
            21 13  9 23 14 16  6 20  4 17 18 19  1  0 11 22  2 12 10  8  5 15  7  3
             7  5 19  6  3  2 22  9 14  0 10 11 17 16 18  8 15  4 20 21 12  1 23 13
             0 10 12  2 11  7 15  5 19  8  3  4 22 21 14  1 23  9 13 17 20  6 16 18
            11  0 23 10  1  3 20  7 15  4  8  6 12 14 22  9 13  2 21 19 16  5 18 17
             8  3 20  7  4  0 23 10 12  1 11  9 15 17 19  6 16  5 18 22 13  2 21 14
            15 19  3 17 20 22  0 14 10 23 12 13  7  6  5 16  8 18  4  2 11 21  1  9
             1 11 13  0  9  8 16  3 20  6  4  5 23 22 12  2 21 10 14 15 18  7 17 19
            17 18  5 16 19 21  2 13  9 22 14 12  6  8  4 15  7 20  3  1 10 23  0 11
            16 20  4 15 18 23  1 12 11 21 13 14  8  7  3 17  6 19  5  0  9 22  2 10
            14 21  2 13 22 18  5 16  6 19 17 15  9 11  1 12 10 23  0  4  7 20  3  8
            19 17  7 18 15 14 10 21  2 12 22 23  5  4  6 20  3 16  8  9  0 13 11  1
            18 16  6 20 17 13  9 23  1 14 21 22  4  3  8 19  5 15  7 11  2 12 10  0
             2  9 14  1 10  6 17  4 18  7  5  3 21 23 13  0 22 11 12 16 19  8 15 20
             5  6 17  4  7  9 14  1 21 10  2  0 18 20 16  3 19  8 15 13 22 11 12 23
            """
        ),
    ),
    26: (
        _grid(
            """
            24 21  0 19  4 20 13 18 10 25  1  5 17 11 16 14  9 22  7  8 15 23 12  6  3  2
             9  1 23  5  2 21  6 15 17  0 11 10  7 19 18  3  8 25 16 24 14 20 22 12  4 13
            18 11  3  6  0  7  4  8 16 22 10  1 12  9 20 13 14  2  5 25 24 17 23 19 15 21
            10 22 16  4  7  1  8 24 18 17 25 11 14  6 21  2  3 20 13 15  9  0  5 23 12 19
             7 20 13 17  5  8  2  6  1 19 16 25  3 14 22 12 21 24 15  4  0 10  9 18 23 11
            15 12 24 14 18  6  9 10 11  2  5 17 13 16 23 25  0 19  4 22  7  1  3 20 21  8
            17  9 22  0 15 19  7  4  2 12 23  6 25  5 24 18 20 21 14  1 11  8 10  3 13 16
            16 19 11 15 24  2 17  9 13 10 22  3  8 25  1  0  5 14 20 23 12  6 21  4 18  7
            11 25 10 22 21 14 18  5 12 15 17  8  0  3  4  1 13 16  6  7 20 24  2  9 19 23
             4 24 20 11 23 22 15  3  0 13  8 18  2  7  5  9 17 10  1 14  6 21 19 16 25 12
            23  7 12  9 17  4 25 16 20 24 18 21 22 13 10 15  1 11 19  5  3  2  0  8  6 14
            14 15  7 13 10 18  5  1  3 21  6 19 16 20 11 22 12  9 23  2 17  4 25  0  8 24
             0 16 17 10  9 15 12  7 19  6 14  4 21 18 13  8  2 23 24 11 25  3 20  5  1 22
             1  2 18  3 19 12 11 14 25  5  4 13  6 23 15 16  7  8 10  0 22  9 17 21 24 20
             2  4  6  7  8  9 10 12 15 16 21 22 24  1 25 23 19 18  0 20 13 14 11 17  5  3
            21  0  9  8 14 11 19 25  5  4  3  7 23 24 12 20 10  1 17 13  2 18  6 22 16 15
             5 10 15  2 25 23 14  0  6  9 13 20 11 12  8 17 16  3 21 19 18 22  1 24  7  4
             3  6  1 25 22 13  0 17  8 23 19 16 20  4  7 10 18 15 11 12 21  5 24  2 14  9
            19 23  2 18 11 10 16 21  4 20 12 15  9  0 14  5 24  6 22  3  8 25 13  7 17  1
            13  5  8 16  3 25 24  2 23  7 20 14 18 22  9 21  4  0 12 17  1 19 15 10 11  6
            25  8 19 12 16  0  3 22  7 14 24 23  1 21  2  4 15  5  9  6 10 13 18 11 20 17
            22 18 21 20 13 17  1 19 14  8  7  0  5 10  3 24  6 12  2 16 23 11  4 15  9 25
             6 17 14 23  1 16 20 11  9  3  2 24 19 15  0  7 22  4 25 21  5 12  8 13 10 18
             8 13 25 21 12 24 23 20 22  1 15  9 10  2  6 19 11 17  3 18  4  7 16 14  0  5
            20 14  5 24  6  3 22 23 21 18  0 12  4 17 19 11 25 13  8  9 16 15  7  1  2 10
            12  3  4  1 20  5 21 13 24 11  9  2 15  8 17  6 23  7 18 10 19 16 14 25 22  0
            """
        ),
        _grid(
            """
            24  9 18 10  7 15 17 16 11  4 23 14  0  1  2 21  5  3 19 13 25 22  6  8 20 12
            21  1 11 22 20 12  9 19 25 24  7 15 16  2  4  0 10  6 23  5  8 18 17 13 14  3
             0 23  3 16 13 24 22 11 10 20 12  7 17 18  6  9 15  1  2  8 19 21 14 25  5  4
            19  5  6  4 17 14  0 15 22 11  9 13 10  3  7  8  2 25 18 16 12 20 23 21 24  1
             4  2  0  7  5 18 15 24 21 23 17 10  9 19  8 14 25 22 11  3 16 13  1 12  6 20
            20 21  7  1  8  6 19  2 14 22  4 18 15 12  9 11 23 13 10 25  0 17 16 24  3  5
            13  6  4  8  2  9  7 17 18 15 25  5 12 11 10 19 14  0 16 24  3  1 20 23 22 21
            18 15  8 24  6 10  4  9  5  3 16  1  7 14 12 25  0 17 21  2 22 19 11 20 23 13
            10 17 16 18  1 11  2 13 12  0 20  3 19 25 15  5  6  8  4 23  7 14  9 22 21 24
            25  0 22 17 19  2 12 10 15 13 24 21  6  5 16  4  9 23 20  7 14  8  3  1 18 11
             1 11 10 25 16  5 23 22 17  8 18  6 14  4 21  3 13 19 12 20 24  7  2 15  0  9
             5 10  1 11 25 17  6  3  8 18 21 19  4 13 22  7 20 16 15 14 23  0 24  9 12  2
            17  7 12 14  3 13 25  8  0  2 22 16 21  6 24 23 11 20  9 18  1  5 19 10  4 15
            11 19  9  6 14 16  5 25  3  7 13 20 18 23  1 24 12  4  0 22 21 10 15  2 17  8
            16 18 20 21 22 23 24  1  4  5 10 11 13 15 25 12  8  7 14  9  2  3  0  6 19 17
            14  3 13  2 12 25 18  0  1  9 15 22  8 16 23 20 17 10  5 21  4 24  7 19 11  6
             9  8 14  3 21  0 20  5 13 17  1 12  2  7 19 10 16 18 24  4 15  6 22 11 25 23
            22 25  2 20 24 19 21 14 16 10 11  9 23  8 18  1  3 15  6  0  5 12  4 17 13  7
             7 16  5 13 15  4 14 20  6  1 19 23 24 10  0 17 21 11 22 12  9  2 25  3  8 18
             8 24 25 15  4 22  1 23  7 14  5  2 11  0 20 13 19 12  3 17  6 16 21 18  9 10
            15 14 24  9  0  7 11 12 20  6  3 17 25 22 13  2 18 21  8  1 10 23  5  4 16 19
            23 20 17  0 10  1  8  6 24 21  2  4  3  9 14 18 22  5 25 19 13 11 12  7 15 16
            12 22 23  5  9  3 10 21  2 19  0 25 20 17 11  6  1 24 13 15 18  4  8 16  7 14
             6 12 19 23 18 20  3  4  9 16  8  0  5 21 17 22 24  2  7 10 11 15 13 14  1 25
             3  4 15 12 23 21 13 18 19 25  6  8  1 24  5 16  7 14 17 11 20  9 10  0  2 22
             2 13 21 19 11  8 16  7 23 12 14 24 22 20  3 15  4  9  1  6 17 25 18  5 10  0
            """
        ),
    ),
    27: (
        _grid(
            """
            19  6  0 26 24 11 22 21  8 16 12  3 23 15  7 14  4  2 10 18 17  1 20  9 25  5 13
            10 20  7  1 26 25 12 23 22  9 17 13  4 16 11 24  8  6 18  0 15  5 19 14  3  2 21
            15 11 21  8  2 26  0 13 24 23 10 18 14 17 19  5 12  3 16  4 25  9  1 22  7  6 20
            23 16 12 22  9  3 26  1 14 25 24 11 19 18 17 15 20  7  0  8  6 13  5 21  4 10  2
            22 24 17 13 23 10  4 26  2 15  0 25 12 19  1 20 18 11  7  5 16 21  9  3  8 14  6
             4 23 25 18 14 24 11  5 26  3 16  1  0 20  8 13  2 15 17  9 21 19  6  7 12 22 10
             8  5 24  0 19 15 25 12  6 26  4 17  2 21 18  1  9 23 22 13 14  3 10 11 16 20  7
            12  9  6 25  1 20 16  0 13  7 26  5 18 22 23  3 19 21 15 17  2 10 14  8 24  4 11
             9 13 10  7  0  2 21 17  1 14  8 26  6 23 16 19 24  5  3 25  4 20 18 12 22 11 15
            13 10 14 11  8  1  3 22 18  2 15  9 26 24  4  7 17 12  5 23 20 25  0 16  6 21 19
            17 14 11 15 12  9  2  4 23 19  3 16 10 25  6 26  5 22 21  7  8 18 24 20 13  0  1
            21 18 15 12 16 13 10  3  5 24 20  4 17  0 22 11  7  1  9 14 26  6  8  2 23 19 25
             3 22 19 16 13 17 14 11  4  6 25 21  5  1 10 18 23 20 26 24 12  8 15  0  2  7  9
            25  0  1  2  3  4  5  6  7  8  9 10 11 26 15 12 16 19 14 21 13 17 22 24 20 18 23
             2 19 13  4  7  0 23 20 17 21 18 15  8  5  9 10 22 14 25 12  3 16 11  6  1 26 24
             1  4 23 20 17 14 18 15 12  5  7  0 22  2 26  6 11  8 13  3 19 24 25 10 21  9 16
             7  3 20 14  5  8  1 24 21 18 22 19 16  6  0  9 10 26  4  2 11 23 13 25 15 17 12
            16 15  2 10  6 23 17  8 11  4  1 24 21  9 12 25 14 13 19 20 22  7 26  5  0  3 18
            18 12  3  6 25 22 19 16 20 17 14  7  9  4 21  2 15  0  8 10 24 26 23  1 11 13  5
            20  7 18 17  4 12  8 25 19 10 13  6  3 11 24  0 21  9  1 15 23 14  2 26  5 16 22
            11  2  5 24 21 18 15 19 16 13  6  8  1  3 14 23 26 10 20 22  7 12  4 17  9 25  0
             0  8  4 21 15  6  9  2 25 22 19 23 20  7  5 17  1 18 12 16 10 11  3 13 26 24 14
            26 21  8 19 18  5 13  9  0 20 11 14  7 12  2  4 25 17 24  6  1 22 16 23 10 15  3
             5 25 26 23 10 21 20  7 15 11  2 22 13 14  3 16  0 24  6 19  9  4 12 18 17  1  8
             6 17 16  3 11  7 24 18  9 12  5  2 25 10 20 22 13  4 23  1  0 15 21 19 14  8 26
            14  1  9  5 22 16  7 10  3  0 23 20 24  8 13 21  6 25 11 26 18  2 17 15 19 12  4
            24 26 22  9 20 19  6 14 10  1 21 12 15 13 25  8  3 16  2 11  5  0  7  4 18 23 17
            """
        ),
        _grid(
            """
            19 10 15 23 22  4  8 12  9 13 17 21  3 25  2  1  7 16 18 20 11  0 26  5  6 14 24
             6 20 11 16 24 23  5  9 13 10 14 18 22  0 19  4  3 15 12  7  2  8 21 25 17  1 26
             0  7 21 12 17 25 24  6 10 14 11 15 19  1 13 23 20  2  3 18  5  4  8 26 16  9 22
            26  1  8 22 13 18  0 25  7 11 15 12 16  2  4 20 14 10  6 17 24 21 19 23  3  5  9
            24 26  2  9 23 14 19  1  0  8 12 16 13  3  7 17  5  6 25  4 21 15 18 10 11 22 20
            11 25 26  3 10 24 15 20  2  1  9 13 17  4  0 14  8 23 22 12 18  6  5 21  7 16 19
            22 12  0 26  4 11 25 16 21  3  2 10 14  5 23 18  1 17 19  8 15  9 13 20 24  7  6
            21 23 13  1 26  5 12  0 17 22  4  3 11  6 20 15 24  8 16 25 19  2  9  7 18 10 14
             8 22 24 14  2 26  6 13  1 18 23  5  4  7 17 12 21 11 20 19 16 25  0 15  9  3 10
            16  9 23 25 15  3 26  7 14  2 19 24  6  8 21  5 18  4 17 10 13 22 20 11 12  0  1
            12 17 10 24  0 16  4 26  8 15  3 20 25  9 18  7 22  1 14 13  6 19 11  2  5 23 21
             3 13 18 11 25  1 17  5 26  9 16  4 21 10 15  0 19 24  7  6  8 23 14 22  2 20 12
            23  4 14 19 12  0  2 18  6 26 10 17  5 11  8 22 16 21  9  3  1 20  7 13 25 24 15
            15 16 17 18 19 20 21 22 23 24 25  0  1 26  5  2  6  9  4 11  3  7 12 14 10  8 13
             7 11 19 17  1  8 18 23 16  4  6 22 10 15  9 26  0 12 21 24 14  5  2  3 20 13 25
            14 24  5 15 20 13  1  3 19  7 26 11 18 12 10  6  9 25  2  0 23 17  4 16 22 21  8
             4  8 12 20 18  2  9 19 24 17  5  7 23 16 22 11 10 14 15 21 26  1 25  0 13  6  3
             2  6  3  7 11 15 23 21  5 12 22  1 20 19 14  8 26 13  0  9 10 18 17 24  4 25 16
            10 18 16  0  7 17 22 15  3  5 21  9 26 14 25 13  4 19  8  1 20 12 24  6 23 11  2
            18  0  4  8  5  9 13 17 25 23  7 14 24 21 12  3  2 20 10 15 22 16  6 19  1 26 11
            17 15 25  6 16 21 14  2  4 20  8 26 12 13  3 19 11 22 24 23  7 10  1  9  0 18  5
             1  5  9 13 21 19  3 10 20 25 18  6  8 17 16 24 23  7 26 14 12 11 22  4 15  2  0
            20 19  1  5  9  6 10 14 18  0 24  8 15 22 11 25 13 26 23  2  4  3 16 12 21 17  7
             9 14 22 21  3  7 11  8 12 16 20  2  0 24  6 10 25  5  1 26 17 13 23 18 19 15  4
            25  3  7  4  8 12 16 24 22  6 13 23  2 20  1 21 15  0 11  5  9 26 10 17 14 19 18
             5  2  6 10 14 22 20  4 11 21  0 19  7 18 26  9 17  3 13 16 25 24 15  1  8 12 23
            13 21 20  2  6 10  7 11 15 19  1 25  9 23 24 16 12 18  5 22  0 14  3  8 26  4 17
            """
        ),
    ),
    30: (
        _grid(
            """
             6 24  3 15 29 14  2 21 23  0 28  8 20 19 11 13 18  9 10  7 12 25  4  1 27  5 16 17 26 22
             8  7 25  4 16 29 15  3 22 17  1 23 13  6 20  5 12 18 27 10  9 28 19  2 11 21 24 26 14  0
            11  9  8 26  5 17 29 16  4 25 18  1 10 22  7 20 21 27 15 19 24 12 13  3 28 14 23  0  6  2
            20 12 10  9 27  6 18 29 17 24 26  3 25 15 23 14  8  1  7 28  2  0 22  4 16 11  5 13 21 19
             0 21 13 11 10 28  7 19 29  6 25 20  3 12 16 23 24 14 22  2  4 17  9  5  8 26 18  1 15 27
             3  1 22 14 12 11  0  8 20 19  7 28  5 27 13 10 17  2 16 15 21  9 25  6 23  4 29 18 24 26
            16  4  2 23 15 13 12  1  9 29 20 27 22  5 28 26 14 19 25  3  0 24 18  7 17  6 21 10 11  8
             4 17  5  3 24 16 14 13  2 22 29  9  1  7  6 19  0 11 12 20 28 18 15  8 26 23 10 25 27 21
            21  5 18  6  4 25 17 15 14 11 23 22  0 24  8 16  7 26 28 12 10 27  1  9 13  2  3 19 20 29
            28 14 23  7 20  8  6 27 19 16  5 25 24  2  4  9 26  0 18 21 29  1 10 11 22 12 17 15  3 13
            22  0 15 24  8 21  9  7 28 18 17 14 29 13  3 11  5 16  4  1 26 23 27 12 19 25 20  2 10  6
            18  3 24  2 17 26 10 23 11  1 22 19 16 29 27  7 15 25 13  4  8  6  5 14 12 28  9 21  0 20
            27  6 20  5 26  4 19 28 12 13 11 24 21 18  1 17 29  8  9 23 22 15  0 16  2 10 25 14  7  3
            10 25  0  8 22  7 28  6 21 14 27 13 26 23 12 29 20 17 19 16  5 11  3 18  9 24  1  4  2 15
            17 11 26  1  9 23  8  0  7  2 15 16  6 25 24  4 13  5  3 18 14 10 21 19 20 27 22 12 29 28
            15  8 21 20 14  0  4 12 26  3 10  5  2 17  9 27  1 23 24 13 18 29 28 22  7 19 11  6 16 25
            19 18 12 27  2 10 24  9  1 23  3  0 15 28 26 22 25 13 29  6 17 21 14 20  4  7  8 11  5 16
             1 13 29 12  0 19 21 14 27 20  6 18 17 16  2  8 11  4 23 22  3  7 24 28 15  9 26  5 25 10
            25 15 17 10 23 22 16  2  6 28 13 12  7  4 21  3 19 29  0  8 27 26 11 24 18 20 14  9  1  5
            23  2 14 29 13  1 20 22 15 27 21 11  4 10 17 25  3  6 26  5 19 16 12  0 24 18 28  8  9  7
             5 19  4 25  3 18 27 11 24 10  2 21  9  0 29  6 28 22  1 26 20 13 16 15 14 17 12  7  8 23
            29 10 27 17 19 12 25 24 18  8 16 15 14  9 22 21  6 28  5 11  7  2 23 26  3  0  4 20 13  1
             7 20 19 13 28  3 11 25 10  9 24 17 18  8  0 15 27 12  6 14  1  5 26 21 29 16  2 22 23  4
            26 27 28  0  1  2  3  4  5  7  8 10 12 14 15 18 16 24 20 25 11 22 17 29 21 13  6 23 19  9
             9 26 16 18 11 24 23 17  3 15  0  6 28 21  5 12 22 10  2 29 13 19 20 25  1  8  7 27  4 14
            24 28  7 21  6 27  5 20  0 26 14  4 23 11 19  1  2 15  8  9 25  3 29 17 10 22 13 16 18 12
            13 22  6 19  7  5 26 18 16  4 12 29 11  3 25  2  9 20 21 27 23 14  8 10  0  1 15 28 17 24
            12 29 11 28 18 20 13 26 25  5  9  2  8  1 10 24 23 21 14  0 16  4  7 27  6 15 19  3 22 17
            14 16  9 22 21 15  1  5 13 12  4 26 19 20 18  0 10  7 17 24  6  8  2 23 25  3 27 29 28 11
             2 23  1 16 25  9 22 10  8 21 19  7 27 26 14 28  4  3 11 17 15 20  6 13  5 29  0 24 12 18
            """
        ),
        _grid(
            """
             6  8 11 20  0  3 16  4 21 28 22 18 27 10 17 15 19  1 25 23  5 29  7 26  9 24 13 12 14  2
            24  7  9 12 21  1  4 17  5 14  0  3  6 25 11  8 18 13 15  2 19 10 20 27 26 28 22 29 16 23
             3 25  8 10 13 22  2  5 18 23 15 24 20  0 26 21 12 29 17 14  4 27 19 28 16  7  6 11  9  1
            15  4 26  9 11 14 23  3  6  7 24  2  5  8  1 20 27 12 10 29 25 17 13  0 18 21 19 28 22 16
            29 16  5 27 10 12 15 24  4 20  8 17 26 22  9 14  2  0 23 13  3 19 28  1 11  6  7 18 21 25
            14 29 17  6 28 11 13 16 25  8 21 26  4  7 23  0 10 19 22  1 18 12  3  2 24 27  5 20 15  9
             2 15 29 18  7  0 12 14 17  6  9 10 19 28  8  4 24 21 16 20 27 25 11  3 23  5 26 13  1 22
            21  3 16 29 19  8  1 13 15 27  7 23 28  6  0 12  9 14  2 22 11 24 25  4 17 20 18 26  5 10
            23 22  4 17 29 20  9  2 14 19 28 11 12 21  7 26  1 27  6 15 24 18 10  5  3  0 16 25 13  8
             0 17 25 24  6 19 29 22 11 16 18  1 13 14  2  3 23 20 28 27 10  8  9  7 15 26  4  5 12 21
            28  1 18 26 25  7 20 29 23  5 17 22 11 27 15 10  3  6 13 21  2 16 24  8  0 14 12  9  4 19
             8 23  1  3 20 28 27  9 22 25 14 19 24 13 16  5  0 18 12 11 21 15 17 10  6  4 29  2 26  7
            20 13 10 25  3  5 22  1  0 24 29 16 21 26  6  2 15 17  7  4  9 14 18 12 28 23 11  8 19 27
            19  6 22 15 12 27  5  7 24  2 13 29 18 23 25 17 28 16  4 10  0  9  8 14 21 11  3  1 20 26
            11 20  7 23 16 13 28  6  8  4  3 27  1 12 24  9 26  2 21 17 29 22  0 15  5 19 25 10 18 14
            13  5 20 14 23 10 26 19 16  9 11  7 17 29  4 27 22  8  3 25  6 21 15 18 12  1  2 24  0 28
            18 12 21  8 24 17 14  0  7 26  5 15 29 20 13  1 25 11 19  3 28  6 27 16 22  2  9 23 10  4
             9 18 27  1 14  2 19 11 26  0 16 25  8 17  5 23 13  4 29  6 22 28 12 24 10 15 20 21  7  3
            10 27 15  7 22 16 25 12 28 18  4 13  9 19  3 24 29 23  0 26  1  5  6 20  2  8 21 14 17 11
             7 10 19 28  2 15  3 20 12 21  1  4 23 16 18 13  6 22  8  5 26 11 14 25 29  9 27  0 24 17
            12  9 24  2  4 21  0 28 10 29 26  8 22  5 14 18 17  3 27 19 20  7  1 11 13 25 23 16  6 15
            25 28 12  0 17  9 24 18 27  1 23  6 15 11 10 29 21  7 26 16 13  2  5 22 19  3 14  4  8 20
             4 19 13 22  9 25 18 15  1 10 27  5  0  3 21 28 14 24 11 12 16 23 26 17 20 29  8  7  2  6
             1  2  3  4  5  6  7  8  9 11 12 14 16 18 19 22 20 28 24  0 15 26 21 29 25 17 10 27 23 13
            27 11 28 16  8 23 17 26 13 22 19 12  2  9 20  7  4 15 18 24 14  3 29 21  1 10  0  6 25  5
             5 21 14 11 26  4  6 23  2 12 25 28 10 24 27 19  7  9 20 18 17  0 16 13  8 22  1 15  3 29
            16 24 23  5 18 29 21 10  3 17 20  9 25  1 22 11  8 26 14 28 12  4  2  6  7 13 15 19 27  0
            17 26  0 13  1 18 10 25 19 15  2 21 14  4 12  6 11  5  9  8  7 20 22 23 27 16 28  3 29 24
            26 14  6 21 15 24 11 27 20  3 10  0  7  2 29 16  5 25  1  9  8 13 23 19  4 18 17 22 28 12
            22  0  2 19 27 26  8 21 29 13  6 20  3 15 28 25 16 10  5  7 23  1  4  9 14 12 24 17 11 18
            """
        ),
    ),
}
