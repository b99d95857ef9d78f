"""Misspelling-tolerant record search over Double Metaphone codes.

A small engine that stores structured records durably, indexes every field
token under its phonetic codes, and answers keyword queries with ranked,
match-percentage-scored results located through (table id, primary key)
data pointers instead of corpus scans.
"""

from phonosearch.engine import RecordSearchEngine
from phonosearch.errors import (
    AuthError,
    DuplicateTableError,
    EngineError,
    NotFoundError,
    StorageError,
    ValidationError,
)
from phonosearch.index import CodeKind, DataPointer, PhoneticIndex, Posting, TableRegistry
from phonosearch.phonetics import CodePair, encode, normalize, tokenize
from phonosearch.query import MatchWeights, Query, RankedHit, ResultSet
from phonosearch.store import Record, RecordStore

__version__ = "0.1.0"

__all__ = [
    "AuthError",
    "CodeKind",
    "CodePair",
    "DataPointer",
    "DuplicateTableError",
    "EngineError",
    "MatchWeights",
    "NotFoundError",
    "PhoneticIndex",
    "Posting",
    "Query",
    "RankedHit",
    "Record",
    "RecordSearchEngine",
    "RecordStore",
    "ResultSet",
    "StorageError",
    "TableRegistry",
    "ValidationError",
    "encode",
    "normalize",
    "tokenize",
]
