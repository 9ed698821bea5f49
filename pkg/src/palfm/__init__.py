"""Succinct index for pattern matching under palindromic structure.

Two equal-length strings pal-match when every window of one is a
palindrome exactly when the same window of the other is.  This package
builds an FM-index-style structure over the ssp encoding of a text and
answers counting and locating queries for that relation, plus the
encoding primitives themselves and a brute-force oracle for testing.
"""

from .palcore import (
    INF,
    PatternProfile,
    group_counts,
    lpal,
    lpal_second,
    maximal_palindromes,
    pattern_preprocess,
    pi,
    spp,
    ssp,
    sspg,
)
from .index import (
    BadMagicError,
    ChecksumError,
    DOLLAR,
    IndexFormatError,
    PalFMIndex,
    PalInterval,
    TruncatedError,
    VersionError,
    build,
    deserialize,
    serialize,
)
from .succinct import BitVec, CodeSeq, QueryRangeError, RmqIndex

__version__ = "0.1.0"

__all__ = [
    "INF",
    "DOLLAR",
    "PatternProfile",
    "maximal_palindromes",
    "lpal",
    "lpal_second",
    "ssp",
    "spp",
    "group_counts",
    "sspg",
    "pi",
    "pattern_preprocess",
    "PalFMIndex",
    "PalInterval",
    "build",
    "serialize",
    "deserialize",
    "IndexFormatError",
    "BadMagicError",
    "VersionError",
    "TruncatedError",
    "ChecksumError",
    "BitVec",
    "CodeSeq",
    "RmqIndex",
    "QueryRangeError",
    "__version__",
]
