"""Exact Fock-space engine for level-one vertex representations of
quantum N-toroidal algebras of type C, with a relation-verification
harness that checks every defining relation as an exact coefficient
identity over Q(v), v**4 = q."""

__version__ = "0.1.0"
