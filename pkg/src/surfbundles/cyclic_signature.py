# -*- coding: utf-8 -*-
"""Signature of an n-fold cyclic branched cover of a 4-manifold (Hirzebruch)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralSignature, ParameterOutOfRange, SignatureNotDivisible


@dataclass(frozen=True)
class CyclicCoverSpec:
    sheets: int
    ambient_signature: int
    # (Γ1 - Γ2)², the square of the branch class
    branch_square: int

    def __post_init__(self):
        if self.sheets < 1:
            raise ParameterOutOfRange('cyclic cover with %d sheets' % self.sheets)

    def as_dict(self):
        return {'sheets': self.sheets, 'ambient_signature': self.ambient_signature,
                'branch_square': self.branch_square}


def hirzebruch_signature(spec: CyclicCoverSpec) -> int:
    """σ(X) = σ(ambient) - (n² - 1) / (3n) · (branch class)², exactly.

    The correction is carried as a Fraction and must come out integral; a fractional signature
    means the branch data cannot come from an actual cover.
    """
    n = spec.sheets
    correction = Fraction(n * n - 1, 3 * n) * spec.branch_square
    if correction.denominator != 1:
        raise NonIntegralSignature('(%d² - 1)/(3·%d) · %d = %s is not an integer'
                                   % (n, n, spec.branch_square, correction))
    return spec.ambient_signature - int(correction)


def signature_quantum(sigma: int) -> int:
    """The m of σ = 4m. Every surface bundle over a surface has signature divisible by 4."""
    if sigma % 4:
        raise SignatureNotDivisible('signature %d is not divisible by 4' % sigma)
    return sigma // 4
