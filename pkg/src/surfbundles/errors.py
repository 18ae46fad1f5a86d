# -*- coding: utf-8 -*-
"""Exceptions and the non-fatal warning channel.

Every error this package raises on purpose derives from `SurfaceBundleError`, so the CLI can tell
"your data does not describe a surface" apart from a bug. The value-shaped ones also derive from
`ValueError`: a caller that only knows the builtin still catches them.
"""
import logging
import warnings

logger = logging.getLogger(__name__)


class SurfaceBundleError(Exception):
    """Base class for every deliberate failure in surfbundles."""


class NotAClosedSurface(SurfaceBundleError, ValueError):
    """An Euler characteristic that no closed oriented surface has (odd, or above 2)."""


class InvalidCoverData(SurfaceBundleError, ValueError):
    """Cover data that cannot describe a (connected) cover: bad ramification, bad permutations."""


class NonIntegralSignature(InvalidCoverData):
    """The signature formula for a cyclic branched cover came out fractional.

    A geometric construction always yields an integer, so this means the branch data is wrong.
    """


class SignatureNotDivisible(SurfaceBundleError, ValueError):
    """A signature that is not 4m, which no surface bundle over a surface has."""


class UnsupportedConfiguration(SurfaceBundleError):
    """Input outside what the intersection calculus handles (e.g. intersecting branch curves)."""


class ParameterOutOfRange(SurfaceBundleError, ValueError):
    """g, n, m or f outside the domain of the operation."""


class SurfaceBundleWarning(UserWarning):
    """Something OPTIONAL failed (an extension hook) and the run carries on without it.

    Its own category so a caller can silence or escalate these by name.
    """


def _warn(code, message):
    """Report a non-fatal problem without ever becoming one.

    Under `-W error` the warning is an exception; the callers sit in hook handlers that must carry
    on, so the message goes to the `surfbundles.errors` logger instead.
    """
    text = '[surfbundles:%s] %s' % (code, message)
    try:
        warnings.warn(text, SurfaceBundleWarning, stacklevel=3)
    except Warning:
        logger.warning(text)
