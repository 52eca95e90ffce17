"""Closed-form multiplicity formulas for squares of hook representations.

The answers depend only on the shape class of the target partition: double
hooks split by the residue of their tail length mod 4, hooks by the residue
of m mod 4, everything else has multiplicity zero.
"""

from __future__ import annotations

from .characters import MultiplicityTable
from .partitions import (
    DoubleHook,
    Hook,
    Partition,
    classify_shape,
    enumerate_partitions,
)


def psi(a: int, b: int) -> int:
    """2 if |a| < b, 1 if |a| == b, 0 otherwise."""
    if abs(a) < b:
        return 2
    if abs(a) == b:
        return 1
    return 0


def indicator(pred: bool) -> int:
    """1 if the predicate holds, else 0."""
    return 1 if pred else 0


def remmel_multiplicity(n: int, k: int, l: int, lam) -> int:
    """Multiplicity of the irreducible for lam in the tensor product of the
    k-th and l-th hook representations (Remmel's decomposition)."""
    if not (0 <= k <= n - 1 and 0 <= l <= n - 1):
        raise ValueError(f"need 0 <= k, l <= n-1, got k={k}, l={l}, n={n}")
    lam = Partition(lam)
    if lam.n != n:
        raise ValueError(f"partition {tuple(lam)} is not a partition of {n}")
    shape = classify_shape(lam)
    if isinstance(shape, DoubleHook):
        depth = abs(k + l + 1 - n)
        width = shape.q - shape.p
        if abs(k - l) <= shape.d1:
            if depth <= width:
                return 2
            if depth == width + 1:
                return 1
            return 0
        if abs(k - l) == shape.d1 + 1 and depth <= width:
            return 1
        return 0
    if isinstance(shape, Hook):
        kp = min(k, n - k - 1)
        lp = min(l, n - l - 1)
        span = shape.m if (k == kp) == (l == lp) else n - shape.m - 1
        return indicator(abs(kp - lp) <= span <= kp + lp)
    return 0


def sym_ext_multiplicity(n: int, k: int, lam) -> tuple[int, int]:
    """Multiplicities of the irreducible for lam in the symmetric and the
    exterior square of the k-th hook representation."""
    tensor = remmel_multiplicity(n, k, k, lam)
    shape = classify_shape(Partition(lam))
    if isinstance(shape, DoubleHook):
        if shape.d1 % 2:
            # an odd tail forces an even tensor multiplicity, split evenly
            assert tensor % 2 == 0, (n, k, tuple(lam), tensor)
            return tensor // 2, tensor // 2
        if shape.d1 % 4 == 0:
            return tensor, 0
        return 0, tensor
    if isinstance(shape, Hook):
        if shape.m % 4 in (0, 1):
            return tensor, 0
        return 0, tensor
    assert tensor == 0, (n, k, tuple(lam), tensor)
    return 0, 0


def full_table(n: int, k: int) -> MultiplicityTable:
    """Closed-form multiplicity table over every partition of n."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got k={k}, n={n}")
    rows = {}
    for lam in enumerate_partitions(n):
        sym, ext = sym_ext_multiplicity(n, k, lam)
        rows[lam] = (remmel_multiplicity(n, k, k, lam), sym, ext)
    return MultiplicityTable(n, k, rows)
