"""The level-one Fock space and its operator primitives.

A basis vector is a monomial in creation modes of the two Heisenberg
families (the internal family `a`, one mode set per node and direction,
and the auxiliary family `b` attached to short nodes), tensored with
group-algebra elements of the three lattices (affine root lattice,
short-root copy, direction lattice) and a Z_2^(n+1) parity word that
carries the sign-operator sector.

Everything here is exact: annihilation acts as the derivation determined
by the bracket constants, creation as multiset insertion, the sign
operators as parity flips with a two-cocycle sign.  The cocycle is the
standard lower-triangular one built from the commutation exponents in
``AlgebraShape.sign_comm``; any cocycle with those exponents gives an
isomorphic module, and reports record the choice.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .coeff import Coeff, ONE, ZERO, q_bracket, qint, qpow, render
from .rootdata import AlgebraShape

F = Fraction

COCYCLE_DESCRIPTION = "lower-index cocycle on Z2^(n+1) from the mod-2 Gram exponents"


class BosonGen(NamedTuple):
    family: str      # 'a' or 'b'
    node: int
    direction: int
    mode: int        # nonzero; negative modes create


class BasisKet(NamedTuple):
    bosons: tuple    # sorted tuple of creation BosonGen (modes < 0)
    lam: tuple       # affine lattice coordinates, length n+1
    lat: tuple       # short-root lattice coordinates, length n-1
    tj: tuple        # direction lattice coordinates, length N-1
    par: tuple       # parity word, length n+1


def make_boson(shape: AlgebraShape, family, node, direction, mode) -> BosonGen:
    if family not in ("a", "b"):
        raise ValueError(f"unknown boson family {family!r}")
    if family == "a":
        shape._check_node(node)
    elif node not in shape.short_nodes:
        raise ValueError(f"family b exists only at short nodes, got {node}")
    shape._check_direction(direction)
    if mode == 0:
        raise ValueError("boson mode must be nonzero")
    return BosonGen(family, node, direction, mode)


def vacuum_ket(shape: AlgebraShape) -> BasisKet:
    return BasisKet((), (0,) * (shape.n + 1), (0,) * (shape.n - 1),
                    (0,) * (shape.N - 1), (0,) * (shape.n + 1))


def energy(ket: BasisKet) -> int:
    return -sum(g.mode for g in ket.bosons)


class FockVector:
    """A finite formal sum of basis kets with Coeff coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def zero():
        return FockVector()

    @staticmethod
    def unit(ket, coeff=ONE):
        v = FockVector()
        if not coeff.is_zero():
            v.terms[ket] = coeff
        return v

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def add_term(self, ket, coeff):
        """In-place accumulation used by the operator kernels."""
        cur = self.terms.get(ket)
        tot = coeff if cur is None else cur + coeff
        if tot.is_zero():
            self.terms.pop(ket, None)
        else:
            self.terms[ket] = tot

    def __add__(self, other):
        out = FockVector(self.terms)
        for ket, c in other.terms.items():
            out.add_term(ket, c)
        return out

    def __sub__(self, other):
        return self + other.scale(Coeff.integer(-1))

    def scale(self, coeff: Coeff):
        if coeff.is_zero():
            return FockVector()
        return FockVector({k: c * coeff for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def max_energy(self):
        return max((energy(k) for k in self.terms), default=0)

    def __repr__(self):
        return f"FockVector({len(self.terms)} terms)"


# ---------------------------------------------------------------------------
# Heisenberg brackets


@lru_cache(maxsize=None)
def _bracket_const_cached(n, N, g1: BosonGen, g2: BosonGen, corrupted: bool) -> Coeff:
    if g1.family != g2.family or g1.direction != g2.direction:
        return ZERO
    if g1.mode + g2.mode != 0:
        return ZERO
    shape = AlgebraShape(n, N)
    m = g1.mode
    i, j = g1.node, g2.node
    if g1.family == "a":
        # [m a_ij]_{q_i} (q^m - q^-m) / (m (q_j - q_j^-1)), level gamma = q
        a_ij = shape.cartan(i, j)
        if a_ij == 0:
            return ZERO
        dj = shape.d_coeff(j)
        val = (qint(a_ij * m, shape.d_coeff(i))
               * qint(int(m / dj) if dj != 1 else m, dj)) / Coeff.integer(m)
    else:
        g = shape.gram_short(i, j)
        if g == 0:
            return ZERO
        val = (q_bracket(g * m) * q_bracket(F(m))) / Coeff.integer(m)
    if corrupted and g1.family == "a" and i == j == 1 and abs(m) == 1:
        val = -val  # deliberately wrong constant for the harness self-test
    return val


def bracket_const(shape: AlgebraShape, g1: BosonGen, g2: BosonGen,
                  corrupted: bool = False) -> Coeff:
    """The central value of [g1, g2] at level gamma = q (zero unless the
    generators share family and direction and have opposite modes)."""
    return _bracket_const_cached(shape.n, shape.N, g1, g2, corrupted)


def _insert_boson(bosons: tuple, g: BosonGen) -> tuple:
    out = list(bosons)
    lo, hi = 0, len(out)
    while lo < hi:
        mid = (lo + hi) // 2
        if out[mid] < g:
            lo = mid + 1
        else:
            hi = mid
    out.insert(lo, g)
    return tuple(out)


def annihilate(shape, bosons: tuple, g: BosonGen, corrupted=False):
    """Derivation action of an annihilation mode on a creation monomial.

    Returns a list of (coefficient, reduced multiset) pairs; empty when
    nothing in the monomial pairs with g.
    """
    out = []
    seen = set()
    for idx, h in enumerate(bosons):
        if h in seen:
            continue
        seen.add(h)
        c = bracket_const(shape, g, h, corrupted)
        if c.is_zero():
            continue
        mult = bosons.count(h)
        out.append((c * Coeff.integer(mult), bosons[:idx] + bosons[idx + 1:]))
    return out


def apply_boson(shape, g: BosonGen, vec: FockVector, corrupted=False) -> FockVector:
    """Creation inserts into the multiset; annihilation acts as a derivation."""
    out = FockVector()
    if g.mode < 0:
        for ket, c in vec.terms.items():
            out.add_term(ket._replace(bosons=_insert_boson(ket.bosons, g)), c)
        return out
    for ket, c in vec.terms.items():
        for cc, reduced in annihilate(shape, ket.bosons, g, corrupted):
            out.add_term(ket._replace(bosons=reduced), c * cc)
    return out


# ---------------------------------------------------------------------------
# zero modes, lattice shifts, sign operators


def zero_mode(shape, kind: str, index: int, ket: BasisKet) -> Fraction:
    """Eigenvalue of a(0)/b(0)/s(0)-type operators on a basis ket."""
    if kind == "a":
        return shape.pair_Q_node(index, ket.lam)
    if kind == "b":
        return shape.pair_A_node(index, ket.lat)
    if kind == "s":
        return F(shape.pair_J_node(index, ket.tj))
    raise ValueError(f"unknown zero-mode kind {kind!r}")


def _shift(coords, delta):
    return tuple(a + b for a, b in zip(coords, delta))


def lattice_shift(shape, vec: FockVector, dQ=None, dA=None, dJ=None) -> FockVector:
    out = FockVector()
    for ket, c in vec.terms.items():
        lam = _shift(ket.lam, dQ) if dQ else ket.lam
        lat = _shift(ket.lat, dA) if dA else ket.lat
        tj = _shift(ket.tj, dJ) if dJ else ket.tj
        out.add_term(ket._replace(lam=lam, lat=lat, tj=tj), c)
    return out


def cocycle_sign(shape, i: int, par: tuple) -> int:
    """Sign picked up by the i-th sign operator on parity word par."""
    acc = 0
    row = shape.sign_comm[i]
    for j in range(i):
        if par[j]:
            acc += row[j]
    return -1 if acc % 2 else 1


def apply_sign(shape, i: int, vec: FockVector) -> FockVector:
    shape._check_node(i)
    out = FockVector()
    for ket, c in vec.terms.items():
        s = cocycle_sign(shape, i, ket.par)
        par = list(ket.par)
        par[i] ^= 1
        coeff = c if s > 0 else -c
        out.add_term(ket._replace(par=tuple(par)), coeff)
    return out


# ---------------------------------------------------------------------------
# rendering


def _render_lattice(coords, symbol):
    parts = []
    for i, c in enumerate(coords):
        if c:
            name = f"{symbol}_{i if symbol == 'α' else i + 1}"
            parts.append(name if c == 1 else f"{c}{name}")
    return "+".join(parts)


def render_ket(shape, ket: BasisKet) -> str:
    pieces = []
    for g in ket.bosons:
        pieces.append(f"{g.family}_{g.node}^({g.direction})({g.mode})")
    lam = _render_lattice(ket.lam, "α")
    if lam:
        pieces.append(f"e^{{{lam}}}")
    lat = _render_lattice(ket.lat, "α̃")
    if lat:
        pieces.append(f"e^{{{lat}}}")
    tj = _render_lattice(ket.tj, "s")
    if tj:
        pieces.append(f"e^{{{tj}}}")
    if any(ket.par):
        eps = " ".join(f"ε_{i}" for i, p in enumerate(ket.par) if p)
        pieces.append(eps)
    pieces.append("|0>")
    return " ".join(pieces)


def render_vector(shape, vec: FockVector) -> str:
    if vec.is_zero():
        return "0"
    parts = []
    for ket, c in vec.items():
        coeff = render(c, human=True)
        if coeff == "1":
            parts.append(render_ket(shape, ket))
        else:
            wrap = coeff if (coeff.startswith("(") or " " not in coeff) else f"({coeff})"
            parts.append(f"{wrap} · {render_ket(shape, ket)}")
    return "  +  ".join(parts)
