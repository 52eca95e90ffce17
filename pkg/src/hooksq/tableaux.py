"""Colored tensor bases and exact Young-symmetrizer computations.

A coloring x: [n] -> {0,1,2,3} encodes a standard basis vector u_I (x) u_J of
the tensor product of two exterior powers of the n-dimensional permutation
module: I = x^-1({1,3}), J = x^-1({2,3}).  The symmetric group acts on the
right, permuting positions at the cost of a sign; this module implements that
sign, the color-switch module maps, proper swaps, full and restricted Young
symmetrizers for the canonical tableau, and the projection onto the
standard-module quotient.

Symmetrizer application never materializes the group-algebra element: each
row (column) factor is applied as a sum over distinct color arrangements of
that row (column), with the stabilizer of the coloring summed in closed form.
Arrangements whose stabilizer sum cancels are dropped before any expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .partitions import (
    DoubleHook,
    Hook,
    Partition,
    Permutation,
    classify_shape,
    transpose,
)

DEFAULT_PAIR_BUDGET = 10**7


class BudgetError(RuntimeError):
    """Symmetrizer application would exceed the configured pair budget."""


_SWAP12 = (0, 2, 1, 3)
_COMPLEMENT = (3, 2, 1, 0)


class Coloring(tuple):
    """A function [n] -> {0,1,2,3}, position i carrying the color of cell i."""

    def __new__(cls, colors):
        colors = tuple(int(c) for c in colors)
        if any(c not in (0, 1, 2, 3) for c in colors):
            raise ValueError(f"colors must lie in {{0,1,2,3}}: {colors}")
        return super().__new__(cls, colors)

    @classmethod
    def _unsafe(cls, colors) -> "Coloring":
        return tuple.__new__(cls, colors)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def k(self) -> int:
        return sum(1 for c in self if c in (1, 3))

    @property
    def l(self) -> int:
        return sum(1 for c in self if c in (2, 3))

    def color(self, i: int) -> int:
        """Color of cell i (1-indexed)."""
        return self[i - 1]

    def support(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The index sets (I, J) of the encoded basis vector, ascending."""
        I = tuple(i for i in range(1, len(self) + 1) if self[i - 1] in (1, 3))
        J = tuple(i for i in range(1, len(self) + 1) if self[i - 1] in (2, 3))
        return I, J

    def act(self, s: Permutation) -> "Coloring":
        """The coloring x.s, the color of cell m being x(m s^-1)."""
        if s.n != len(self):
            raise ValueError("permutation size does not match coloring size")
        out = [0] * len(self)
        for i, c in enumerate(self):
            out[s.images[i] - 1] = c
        return Coloring._unsafe(out)

    def swap_colors(self) -> "Coloring":
        """Exchange colors 1 and 2 everywhere (swap the tensor factors)."""
        return Coloring._unsafe(_SWAP12[c] for c in self)

    def swap_colors_in(self, members) -> "Coloring":
        """Exchange colors 1 and 2 on the given cells only."""
        inside = set(members)
        return Coloring._unsafe(
            _SWAP12[c] if i + 1 in inside else c for i, c in enumerate(self)
        )

    def complement_colors(self) -> "Coloring":
        """Replace every color c by 3 - c (complement both index sets)."""
        return Coloring._unsafe(_COMPLEMENT[c] for c in self)

    def painted_prefix(self, width: int) -> int:
        """Number of cells of color 1 or 2 among the first ``width`` cells."""
        return sum(1 for c in self[:width] if c in (1, 2))

    def __repr__(self):
        return f"Coloring({tuple(self)})"


def enumerate_colorings(n: int, k: int, l: int):
    """All colorings with |x^-1({1,3})| = k and |x^-1({2,3})| = l, in
    lexicographic order of the color array."""
    if n < 0 or not 0 <= k <= n or not 0 <= l <= n:
        raise ValueError(f"need 0 <= k, l <= n, got n={n}, k={k}, l={l}")

    def rec(pos, need_k, need_l, prefix):
        remaining = n - pos
        if need_k < 0 or need_l < 0 or max(need_k, need_l) > remaining:
            return
        if pos == n:
            yield Coloring._unsafe(prefix)
            return
        for c in (0, 1, 2, 3):
            dk = 1 if c in (1, 3) else 0
            dl = 1 if c in (2, 3) else 0
            yield from rec(pos + 1, need_k - dk, need_l - dl, prefix + (c,))

    yield from rec(0, k, l, ())


def _inversions(seq) -> int:
    count = 0
    for i in range(len(seq)):
        a = seq[i]
        for j in range(i + 1, len(seq)):
            if a > seq[j]:
                count += 1
    return count


def _sign_from_images(x, images) -> int:
    total = 0
    for pair in ((1, 3), (2, 3)):
        seq = [images[i] for i, c in enumerate(x) if c in pair]
        total += _inversions(seq)
    return -1 if total % 2 else 1


def action_sign(x: Coloring, s: Permutation) -> int:
    """The sign relating the acted basis vector to the acted coloring's basis
    vector: w_x . s = action_sign(x, s) * w_{x.s}.

    It is the product of the two wedge-sorting parities, one for each tensor
    factor.
    """
    if s.n != len(x):
        raise ValueError("permutation size does not match coloring size")
    return _sign_from_images(x, s.images)


class TensorVector:
    """A sparse exact-integer combination of colored basis vectors, all lying
    in one fixed product of exterior powers."""

    __slots__ = ("n", "k", "l", "terms")

    def __init__(self, n: int, k: int, l: int, terms=None):
        clean = {}
        for x, c in (terms or {}).items():
            x = Coloring(x)
            if x.n != n or x.k != k or x.l != l:
                raise ValueError(f"coloring {tuple(x)} does not lie in the ({n},{k},{l}) space")
            if c:
                clean[x] = c
        self.n, self.k, self.l = n, k, l
        self.terms = clean

    @classmethod
    def _raw(cls, n, k, l, terms) -> "TensorVector":
        v = object.__new__(cls)
        v.n, v.k, v.l = n, k, l
        v.terms = terms
        return v

    @classmethod
    def zero(cls, n: int, k: int, l: int) -> "TensorVector":
        return cls._raw(n, k, l, {})

    @classmethod
    def basis(cls, x, coeff: int = 1) -> "TensorVector":
        x = Coloring(x)
        return cls._raw(x.n, x.k, x.l, {x: coeff} if coeff else {})

    def is_zero(self) -> bool:
        return not self.terms

    def _check_same_space(self, other):
        if (self.n, self.k, self.l) != (other.n, other.k, other.l):
            raise ValueError("vectors live in different spaces")

    def __add__(self, other: "TensorVector") -> "TensorVector":
        self._check_same_space(other)
        out = dict(self.terms)
        for x, c in other.terms.items():
            s = out.get(x, 0) + c
            if s:
                out[x] = s
            elif x in out:
                del out[x]
        return TensorVector._raw(self.n, self.k, self.l, out)

    def __neg__(self) -> "TensorVector":
        return TensorVector._raw(self.n, self.k, self.l, {x: -c for x, c in self.terms.items()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def __mul__(self, scalar: int) -> "TensorVector":
        if not scalar:
            return TensorVector.zero(self.n, self.k, self.l)
        return TensorVector._raw(
            self.n, self.k, self.l, {x: c * scalar for x, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def act(self, s: Permutation) -> "TensorVector":
        """Linear extension of the signed basis action; invertible."""
        if s.n != self.n:
            raise ValueError("permutation size does not match vector size")
        out = {}
        for x, c in self.terms.items():
            out[x.act(s)] = c * _sign_from_images(x, s.images)
        return TensorVector._raw(self.n, self.k, self.l, out)

    def __eq__(self, other):
        return (
            isinstance(other, TensorVector)
            and (self.n, self.k, self.l) == (other.n, other.k, other.l)
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"TensorVector.zero({self.n}, {self.k}, {self.l})"
        body = " + ".join(f"{c}*w{tuple(x)}" for x, c in sorted(self.terms.items()))
        return f"TensorVector[{body}]"


def tensor_swap(w: TensorVector) -> TensorVector:
    """The module map sending each basis vector to its color-swapped partner
    (exchanging the two tensor factors); no signs appear."""
    return TensorVector._raw(
        w.n, w.l, w.k, {x.swap_colors(): c for x, c in w.terms.items()}
    )


def _complement_sign(x: Coloring) -> int:
    I, J = x.support()
    k, l = len(I), len(J)
    expo = sum(I) + sum(J) + k * (k + 1) // 2 + l * (l + 1) // 2
    return -1 if expo % 2 else 1


def tensor_complement(w: TensorVector) -> TensorVector:
    """The module map w_x -> h(x) * w over the complemented coloring, where
    h(x) is the parity of sorting each index set against its complement."""
    return TensorVector._raw(
        w.n,
        w.n - w.k,
        w.n - w.l,
        {x.complement_colors(): c * _complement_sign(x) for x, c in w.terms.items()},
    )


def interval_cells(i: int, j: int) -> range:
    """The integers between i and j inclusive, in either order."""
    return range(min(i, j), max(i, j) + 1)


def is_proper_swap(x: Coloring, s: Permutation) -> bool:
    """True when s is an involution pairing cells of color 1 with cells of
    color 2 order-preservingly, and every pair encloses equally many (mod 2)
    fixed cells of color 1 as of color 2.  Such swaps act with sign +1."""
    if s.n != x.n:
        raise ValueError("permutation size does not match coloring size")
    moved = [i for i in range(1, s.n + 1) if s(i) != i]
    if any(s(s(i)) != i for i in moved):
        return False
    pairs = []
    for i in moved:
        j = s(i)
        if i > j:
            continue
        a, b = x.color(i), x.color(j)
        if {a, b} != {1, 2}:
            return False
        one, two = (i, j) if a == 1 else (j, i)
        pairs.append((one, two))
    pairs.sort()
    twos = [two for _, two in pairs]
    if twos != sorted(twos):
        return False
    for one, two in pairs:
        fixed1 = sum(1 for v in interval_cells(one, two) if s(v) == v and x.color(v) == 1)
        fixed2 = sum(1 for v in interval_cells(one, two) if s(v) == v and x.color(v) == 2)
        if (fixed1 - fixed2) % 2:
            return False
    return True


def monotone_color_matching(x: Coloring) -> Permutation | None:
    """The involution pairing the t-th cell of color 1 with the t-th cell of
    color 2, or None when the counts differ."""
    ones = [i for i in range(1, x.n + 1) if x.color(i) == 1]
    twos = [i for i in range(1, x.n + 1) if x.color(i) == 2]
    if len(ones) != len(twos):
        return None
    return Permutation.from_cycles(x.n, list(zip(ones, twos)))


# ---------------------------------------------------------------------------
# canonical tableau geometry


def row_cells(lam) -> list[tuple[int, ...]]:
    """Cell numbers of each row of the canonical tableau (filled 1..n row by
    row, left to right)."""
    lam = Partition(lam)
    out = []
    start = 1
    for r in lam:
        out.append(tuple(range(start, start + r)))
        start += r
    return out


def column_cells(lam) -> list[tuple[int, ...]]:
    """Cell numbers of each column of the canonical tableau."""
    lam = Partition(lam)
    rows = row_cells(lam)
    width = lam[0] if lam else 0
    return [
        tuple(rows[i][j] for i in range(len(lam)) if lam[i] > j) for j in range(width)
    ]


def symmetrizer_pair_count(lam) -> int:
    """|row group| * |column group|: the work estimate guarded by the budget."""
    lam = Partition(lam)
    pairs = 1
    for r in lam:
        pairs *= math.factorial(r)
    for c in transpose(lam):
        pairs *= math.factorial(c)
    return pairs


def _multiset_perms(items):
    """Distinct orderings of a multiset, lexicographically."""
    counts: dict[int, int] = {}
    for it in items:
        counts[it] = counts.get(it, 0) + 1
    keys = sorted(counts)
    slot = [0] * len(items)

    def rec(depth):
        if depth == len(items):
            yield tuple(slot)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                slot[depth] = key
                yield from rec(depth + 1)
                counts[key] += 1

    yield from rec(0)


def _apply_block_sum(v: TensorVector, cells, signed: bool) -> TensorVector:
    """Apply the sum over all permutations of ``cells`` (signed by the
    permutation parity when ``signed``) to v.

    For each term the sum over the stabilizer of its colors collapses to a
    closed-form factor: with the plain sum, two equal cells of color 1 or 2
    cancel the term and equal 0/3 cells contribute factorials; with the
    signed sum the roles of {1,2} and {0,3} swap.  What remains is one signed
    representative per distinct color arrangement.
    """
    r = len(cells)
    if r < 2:
        return v
    n = v.n
    identity = list(range(1, n + 1))
    out: dict[Coloring, int] = {}
    for x, coef in v.terms.items():
        colors = tuple(x[p - 1] for p in cells)
        m0 = colors.count(0)
        m1 = colors.count(1)
        m2 = colors.count(2)
        m3 = colors.count(3)
        if signed:
            if m0 >= 2 or m3 >= 2:
                continue
            base = coef * math.factorial(m1) * math.factorial(m2)
        else:
            if m1 >= 2 or m2 >= 2:
                continue
            base = coef * math.factorial(m0) * math.factorial(m3)
        src = {c: [p for p, col in zip(cells, colors) if col == c] for c in (0, 1, 2, 3)}
        for arrangement in _multiset_perms(colors):
            if arrangement == colors:
                contrib = base
                y = x
            else:
                dst = {c: [] for c in (0, 1, 2, 3)}
                for p, col in zip(cells, arrangement):
                    dst[col].append(p)
                images = identity.copy()
                for c in (0, 1, 2, 3):
                    for sp, dp in zip(src[c], dst[c]):
                        images[sp - 1] = dp
                contrib = base * _sign_from_images(x, images)
                if signed:
                    moved = _inversions([images[p - 1] for p in cells])
                    if moved % 2:
                        contrib = -contrib
                ylist = list(x)
                for p, col in zip(cells, arrangement):
                    ylist[p - 1] = col
                y = Coloring._unsafe(ylist)
            total = out.get(y, 0) + contrib
            if total:
                out[y] = total
            elif y in out:
                del out[y]
    return TensorVector._raw(n, v.k, v.l, out)


def apply_row_symmetrizer(w: TensorVector, lam) -> TensorVector:
    """Act with the sum of all row-preserving permutations of lam."""
    lam = Partition(lam)
    if lam.n != w.n:
        raise ValueError(f"partition of {lam.n} does not match vector size {w.n}")
    for cells in row_cells(lam):
        w = _apply_block_sum(w, cells, signed=False)
    return w


def apply_column_antisymmetrizer(w: TensorVector, lam) -> TensorVector:
    """Act with the signed sum of all column-preserving permutations of lam."""
    lam = Partition(lam)
    if lam.n != w.n:
        raise ValueError(f"partition of {lam.n} does not match vector size {w.n}")
    for cells in column_cells(lam):
        w = _apply_block_sum(w, cells, signed=True)
    return w


def apply_symmetrizer(w: TensorVector, lam, budget: int = DEFAULT_PAIR_BUDGET) -> TensorVector:
    """Act with the Young symmetrizer of the canonical tableau of lam:
    the row sum followed by the signed column sum."""
    lam = Partition(lam)
    if lam.n != w.n:
        raise ValueError(f"partition of {lam.n} does not match vector size {w.n}")
    pairs = symmetrizer_pair_count(lam)
    if pairs > budget:
        raise BudgetError(
            f"symmetrizer for {tuple(lam)} needs {pairs} (row, column) pairs, budget is {budget}"
        )
    return apply_column_antisymmetrizer(apply_row_symmetrizer(w, lam), lam)


# ---------------------------------------------------------------------------
# restricted symmetrizers


def restriction_compatible(lam, members) -> bool:
    """Whether the cells ``members`` of the canonical tableau are left-aligned
    with non-increasing (nonempty) row lengths, i.e. form a sub-diagram."""
    lam = Partition(lam)
    chosen = set(members)
    if not all(1 <= p <= lam.n for p in chosen):
        return False
    lengths = []
    for cells in row_cells(lam):
        inside = [p for p in cells if p in chosen]
        if inside != list(cells[: len(inside)]):
            return False
        if inside:
            lengths.append(len(inside))
    return all(a >= b for a, b in zip(lengths, lengths[1:]))


def restriction_shape(lam, members) -> Partition:
    """The partition formed by the selected cells of the canonical tableau."""
    if not restriction_compatible(lam, members):
        raise ValueError(f"cells {sorted(members)} are not compatible with {tuple(Partition(lam))}")
    chosen = set(members)
    lengths = [
        sum(1 for p in cells if p in chosen) for cells in row_cells(Partition(lam))
    ]
    return Partition([h for h in lengths if h])


def restriction_coloring(x: Coloring, members) -> Coloring:
    """The colors of x read off the selected cells in increasing cell order."""
    return Coloring._unsafe(x[p - 1] for p in sorted(members))


def embed_perm(n: int, members, sigma: Permutation) -> Permutation:
    """Transport a permutation of [|members|] along the unique increasing
    enumeration of ``members``, fixing everything else."""
    cells = sorted(members)
    if sigma.n != len(cells):
        raise ValueError(f"permutation of [{sigma.n}] does not match {len(cells)} cells")
    images = list(range(1, n + 1))
    for t, cell in enumerate(cells, start=1):
        images[cell - 1] = cells[sigma(t) - 1]
    return Permutation(images)


def apply_restricted_symmetrizer(
    w: TensorVector, lam, members, budget: int = DEFAULT_PAIR_BUDGET
) -> TensorVector:
    """Act with the Young symmetrizer restricted to the selected cells: row
    and column groups are replaced by the pointwise stabilizers of the
    complement of ``members``."""
    lam = Partition(lam)
    if lam.n != w.n:
        raise ValueError(f"partition of {lam.n} does not match vector size {w.n}")
    if not restriction_compatible(lam, members):
        raise ValueError(f"cells {sorted(members)} are not compatible with {tuple(lam)}")
    chosen = set(members)
    row_blocks = [tuple(p for p in cells if p in chosen) for cells in row_cells(lam)]
    col_blocks = [tuple(p for p in cells if p in chosen) for cells in column_cells(lam)]
    pairs = 1
    for block in row_blocks + col_blocks:
        pairs *= math.factorial(len(block))
    if pairs > budget:
        raise BudgetError(
            f"restricted symmetrizer needs {pairs} (row, column) pairs, budget is {budget}"
        )
    for cells in row_blocks:
        w = _apply_block_sum(w, cells, signed=False)
    for cells in col_blocks:
        w = _apply_block_sum(w, cells, signed=True)
    return w


# ---------------------------------------------------------------------------
# projection onto the standard-module quotient


def _reduce_index_set(n: int, idx: tuple[int, ...]):
    """Rewrite a wedge of permutation-basis vectors in the quotient basis
    v_1, ..., v_{n-1}: the last basis vector maps to minus the sum of the
    others."""
    if n not in idx:
        return [(1, idx)]
    head = idx[:-1]
    out = []
    for i in range(1, n):
        if i in head:
            continue
        bigger = sum(1 for a in head if a > i)
        sign = -1 if bigger % 2 == 0 else 1
        out.append((sign, tuple(sorted(head + (i,)))))
    return out


def project_to_standard(w: TensorVector) -> dict:
    """Image of w under the projection induced by quotienting the permutation
    module by the all-ones vector, as coordinates over pairs of index sets
    inside [n-1].  The result is empty exactly when w lies in the kernel."""
    out: dict[tuple, int] = {}
    for x, c in w.terms.items():
        I, J = x.support()
        left = _reduce_index_set(w.n, I)
        right = _reduce_index_set(w.n, J)
        for sa, A in left:
            for sb, B in right:
                key = (A, B)
                total = out.get(key, 0) + c * sa * sb
                if total:
                    out[key] = total
                elif key in out:
                    del out[key]
    return out


# ---------------------------------------------------------------------------
# skew-symmetry verification


@dataclass(frozen=True)
class SymmetrizerReport:
    """Outcome of one skew-symmetry check between a coloring and its
    color-swapped partner."""

    lam: Partition
    x: Coloring
    sign: int
    mode: str
    verified: bool


def expected_skew_sign(lam) -> tuple[int, str]:
    """The sign predicted for ``w_x c = sign * w_{swapped} c`` together with
    the natural comparison mode for the shape of lam.

    Double hooks with even tail compare exactly with sign (-1)^(d1/2); hooks
    compare after projection with sign (-1)^floor(m/2).  No sign is defined
    for other shapes or odd tails.
    """
    shape = classify_shape(lam)
    if isinstance(shape, DoubleHook):
        if shape.d1 % 2:
            raise ValueError(f"no skew-symmetry sign for odd tail length {shape.d1}")
        return (-1) ** (shape.d1 // 2 % 2), "exact"
    if isinstance(shape, Hook):
        return (-1) ** (shape.m // 2 % 2), "mod-K"
    raise ValueError(f"no skew-symmetry sign for shape {tuple(Partition(lam))}")


def verify_skew_symmetry(
    lam, x, expected_sign: int, mode: str = "exact", budget: int = DEFAULT_PAIR_BUDGET
) -> SymmetrizerReport:
    """Compute both sides of ``w_x c = expected_sign * w_{swapped} c`` and
    report whether they agree, exactly or after projection ("mod-K")."""
    if mode not in ("exact", "mod-K"):
        raise ValueError(f"mode must be 'exact' or 'mod-K', got {mode!r}")
    if expected_sign not in (1, -1):
        raise ValueError(f"expected sign must be +-1, got {expected_sign}")
    lam = Partition(lam)
    x = Coloring(x)
    lhs = apply_symmetrizer(TensorVector.basis(x), lam, budget)
    rhs = apply_symmetrizer(TensorVector.basis(x.swap_colors()), lam, budget)
    if x.k != x.l:
        verified = lhs.is_zero() and rhs.is_zero()
    elif mode == "exact":
        verified = lhs == expected_sign * rhs
    else:
        verified = not project_to_standard(lhs - expected_sign * rhs)
    return SymmetrizerReport(lam=lam, x=x, sign=expected_sign, mode=mode, verified=verified)
