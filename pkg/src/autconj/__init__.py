"""Exact automorphism groups and conjugating sets of rational self-maps of P^1.

The public surface is small: build a map with RatMap over QQ or a finite
field from finitefield.GF, then call aut_qq / conj_qq or aut_ff / conj_ff.
Everything underneath (dense polynomial arithmetic, finite-field towers,
lattice lifting of CRT residues) is importable but not re-exported here.
"""

from .domains import QQ, ZZ
from .finitefield import GF, PrimeField, ExtensionField
from .projline import RatMap, Mobius, is_conjugating, conjugate_map
from .results import AutResult, ConjResult
from .ffsolvers import aut_ff, conj_ff
from .qqsolvers import aut_qq, conj_qq

__all__ = [
    "QQ", "ZZ", "GF", "PrimeField", "ExtensionField",
    "RatMap", "Mobius", "is_conjugating", "conjugate_map",
    "AutResult", "ConjResult",
    "aut_ff", "conj_ff", "aut_qq", "conj_qq",
]

__version__ = "0.1.0"
