"""Lattice and Cartan data for affine type C_n^(1), the auxiliary copy of
the A_{n-1} root lattice attached to the short simple roots, and the
direction lattice ZJ for the N-1 extra torus directions.

Index conventions: nodes I = {0..n} with marks d = (1, 1/2, ..., 1/2, 1);
short nodes I_a = {1..n-1}; directions J = {1..N-1}.  All pairings are
exact Fractions.

The affine node is handled through the Euclidean expansion of its finite
part (the isotropic part pairs to zero with everything in scope), so the
whole Gram matrix is a finite table of rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

F = Fraction
HALF = F(1, 2)


class AlgebraShape:
    """Rank and direction data with the precomputed form tables.

    n >= 3 is the rank of C_n; N >= 2 is the number of torus directions.
    Instances are immutable after construction and safe to share.
    """

    def __init__(self, n: int, N: int):
        if n < 3:
            raise ValueError(f"rank n must be >= 3, got {n}")
        if N < 2:
            raise ValueError(f"direction count N must be >= 2, got {N}")
        self.n = n
        self.N = N
        self.nodes = tuple(range(n + 1))          # I
        self.finite_nodes = tuple(range(1, n + 1))  # I_0
        self.short_nodes = tuple(range(1, n))     # I_a
        self.directions = tuple(range(1, N))      # J
        self.d = tuple(F(1) if i in (0, n) else HALF for i in self.nodes)

        # finite parts of the simple roots in the orthogonal e-basis,
        # (e_i|e_j) = delta_ij / 2; the affine root contributes -2 e_1.
        basis = []
        for i in self.nodes:
            vec = [F(0)] * n
            if i == 0:
                vec[0] = F(-2)
            elif i < n:
                vec[i - 1] += 1
                vec[i] -= 1
            else:
                vec[n - 1] = F(2)
            basis.append(tuple(vec))
        self._gram = tuple(
            tuple(sum(a * b for a, b in zip(basis[i], basis[j])) * HALF
                  for j in self.nodes)
            for i in self.nodes
        )
        self._cartan = tuple(
            tuple(self._as_int(self._gram[i][j] / self.d[i]) for j in self.nodes)
            for i in self.nodes
        )
        # commutation exponents for the sign operators: eps_i eps_j =
        # (-1)^m[i][j] eps_j eps_i, from the quadratic form mod 2
        m = [[0] * (n + 1) for _ in self.nodes]
        for i in self.nodes:
            for j in self.nodes:
                g = self._gram[i][j]
                val = 2 * g if (i in self.short_nodes and j in self.short_nodes) else g
                m[i][j] = self._as_int(val) % 2
        self.sign_comm = tuple(tuple(row) for row in m)
        self._kernel_cache: dict = {}

    @staticmethod
    def _as_int(x: Fraction) -> int:
        if x.denominator != 1:
            raise ArithmeticError(f"expected integer, got {x}")
        return x.numerator

    # -- node forms ---------------------------------------------------------

    def d_coeff(self, i: int) -> Fraction:
        self._check_node(i)
        return self.d[i]

    def gram(self, i: int, j: int) -> Fraction:
        self._check_node(i)
        self._check_node(j)
        return self._gram[i][j]

    def cartan(self, i: int, j: int) -> int:
        self._check_node(i)
        self._check_node(j)
        return self._cartan[i][j]

    def gram_short(self, i: int, j: int) -> Fraction:
        if i not in self.short_nodes or j not in self.short_nodes:
            raise IndexError(f"short-node index out of range: ({i}, {j})")
        return F(1) if i == j else (-HALF if abs(i - j) == 1 else F(0))

    def gram_J(self, s: int, t: int) -> int:
        self._check_direction(s)
        self._check_direction(t)
        return 0 if s == t else -1

    # -- bilinear extensions over coordinate tuples -------------------------

    def pair_Q(self, x, y) -> Fraction:
        """Pairing of two affine-lattice points given over {alpha_0..alpha_n}."""
        acc = F(0)
        for i, a in enumerate(x):
            if a:
                row = self._gram[i]
                acc += a * sum(b * row[j] for j, b in enumerate(y) if b)
        return acc

    def pair_Q_node(self, i, y) -> Fraction:
        row = self._gram[i]
        return sum((b * row[j] for j, b in enumerate(y) if b), F(0))

    def pair_A(self, x, y) -> Fraction:
        acc = F(0)
        for i, a in enumerate(x):
            if a:
                acc += a * (y[i] - HALF * ((y[i - 1] if i else 0) +
                                           (y[i + 1] if i + 1 < len(y) else 0)))
        return acc

    def pair_A_node(self, j, y) -> Fraction:
        # j is a short node (1-based); coordinates are 0-based over I_a
        i = j - 1
        return (y[i] if y[i] else F(0)) - HALF * (
            (y[i - 1] if i else 0) + (y[i + 1] if i + 1 < len(y) else 0))

    def pair_J(self, x, y) -> int:
        tot_x, tot_y = sum(x), sum(y)
        dot = sum(a * b for a, b in zip(x, y))
        return dot - tot_x * tot_y  # since (s|t) = -1 off-diagonal, 0 on

    def pair_J_node(self, s, y) -> int:
        # (e_s | y) = -(sum of y) + y_s
        return y[s - 1] - sum(y)

    # -- helpers -------------------------------------------------------------

    def null_root_coords(self):
        """Coordinates of the isotropic null root over {alpha_0..alpha_n}."""
        return tuple([1] + [2] * (self.n - 1) + [1])

    def _check_node(self, i):
        if not 0 <= i <= self.n:
            raise IndexError(f"node index out of range: {i}")

    def _check_direction(self, s):
        if s not in self.directions:
            raise IndexError(f"direction index out of range: {s}")

    def __repr__(self):
        return f"AlgebraShape(n={self.n}, N={self.N})"

    def __eq__(self, other):
        return isinstance(other, AlgebraShape) and (self.n, self.N) == (other.n, other.N)

    def __hash__(self):
        return hash((self.n, self.N))


# ---------------------------------------------------------------------------
# thin typed wrappers for lattice points; the engine itself works with bare
# coordinate tuples, these exist for the public pairing API and the CLI.


@dataclass(frozen=True)
class LatticeQ:
    coords: tuple

    def __add__(self, other):
        _same_kind(self, other)
        return LatticeQ(tuple(a + b for a, b in zip(self.coords, other.coords)))


@dataclass(frozen=True)
class LatticeA:
    coords: tuple

    def __add__(self, other):
        _same_kind(self, other)
        return LatticeA(tuple(a + b for a, b in zip(self.coords, other.coords)))


@dataclass(frozen=True)
class LatticeJ:
    coords: tuple

    def __add__(self, other):
        _same_kind(self, other)
        return LatticeJ(tuple(a + b for a, b in zip(self.coords, other.coords)))


def _same_kind(x, y):
    if type(x) is not type(y):
        raise TypeError(f"lattice kind mismatch: {type(x).__name__} vs {type(y).__name__}")


def pair(shape: AlgebraShape, x, y) -> Fraction:
    """Bilinear pairing of two lattice points of the same kind."""
    _same_kind(x, y)
    if isinstance(x, LatticeQ):
        return shape.pair_Q(x.coords, y.coords)
    if isinstance(x, LatticeA):
        return shape.pair_A(x.coords, y.coords)
    if isinstance(x, LatticeJ):
        return Fraction(shape.pair_J(x.coords, y.coords))
    raise TypeError(f"not a lattice point: {type(x).__name__}")


def simple_root_Q(shape, i):
    v = [0] * (shape.n + 1)
    v[i] = 1
    return LatticeQ(tuple(v))


def simple_root_A(shape, i):
    if i not in shape.short_nodes:
        raise IndexError(f"short-node index out of range: {i}")
    v = [0] * (shape.n - 1)
    v[i - 1] = 1
    return LatticeA(tuple(v))


def unit_J(shape, s):
    if s not in shape.directions:
        raise IndexError(f"direction index out of range: {s}")
    v = [0] * (shape.N - 1)
    v[s - 1] = 1
    return LatticeJ(tuple(v))
