"""Fixed example representations used throughout the tests and the CLI."""

from __future__ import annotations

from .ffmat import FMatrix

# graph state of the path 2 - 1 - 3
PATH3 = [
    [1, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 0],
]

# graph state of the triangle
K3 = [
    [1, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 1, 0],
]

# rank-6 Lagrangian matroid inducing the ((3,5)) threshold structure at dealer 1
QSS6 = [
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1],
]


def path3() -> FMatrix:
    return FMatrix.from_rows(PATH3, 2)


def k3() -> FMatrix:
    return FMatrix.from_rows(K3, 2)


def qss6() -> FMatrix:
    return FMatrix.from_rows(QSS6, 2)


def trivial(n: int, p: int = 2) -> FMatrix:
    """[I | 0]: the product state, one basis {1, ..., n}."""
    return FMatrix.from_rows([[int(i == j) for j in range(n)] + [0] * n for i in range(n)], p)
