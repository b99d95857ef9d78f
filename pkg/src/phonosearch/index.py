"""Phonetic inverted index and table registry.

Four structures realize the search side of the system: a registry of
searchable tables, a code dictionary assigning each phonetic key a dense
stable id, a posting map from code id to the data pointers whose records
contain a token with that code, and (per query, in the query engine) an
ephemeral result buffer. The index is derived data: it is rebuilt from the
record store at startup rather than persisted, which removes index
corruption as a failure mode.

Concurrency: single writer, many readers. Mutations are serialized by the
caller; every public method here additionally takes an internal lock so a
reader always observes a record's postings entirely or not at all.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

from phonosearch.errors import DuplicateTableError, ValidationError
from phonosearch.phonetics import DEFAULT_MAX_CODE_LENGTH, SENTINEL_CODE, encode, tokenize

__all__ = [
    "CodeKind",
    "DataPointer",
    "PhoneticIndex",
    "Posting",
    "PostingList",
    "TableId",
    "TableRegistry",
]


@dataclass(frozen=True, slots=True)
class TableId:
    """Identity of a registered table."""

    id: int
    name: str


class DataPointer(NamedTuple):
    """Locator of one row: table id plus primary key value. Resolving a
    pointer is a keyed get, never a scan."""

    table_id: int
    p_value: int


class CodeKind(str, Enum):
    """Which of the word's two codes produced a posting."""

    PRIMARY = "primary"
    SECONDARY = "secondary"


class Posting(NamedTuple):
    """One hit of a phonetic code inside a stored record."""

    pointer: DataPointer
    field_position: int
    code_kind: CodeKind


@dataclass(frozen=True, slots=True)
class PostingList:
    """Everything filed under one phonetic code."""

    keycode: str
    code_id: int
    postings: frozenset[Posting]


class TableRegistry:
    """Registry of the tables whose rows may be searched.

    Holds (id, name, field names) triples; ids are small, unique, and id 0
    conventionally belongs to the primary record table.
    """

    def __init__(self) -> None:
        self._by_id: dict[int, TableId] = {}
        self._by_name: dict[str, TableId] = {}
        self._schemas: dict[int, tuple[str, ...]] = {}

    def register(self, name: str, table_id: int, field_names: Iterable[str]) -> TableId:
        if table_id < 0:
            raise ValidationError(f"table id must be non-negative, got {table_id}")
        if table_id in self._by_id:
            raise DuplicateTableError(f"table id {table_id} already registered")
        if name in self._by_name:
            raise DuplicateTableError(f"table name {name!r} already registered")
        fields = tuple(field_names)
        if not fields:
            raise ValidationError("a table needs at least one field")
        if len(set(fields)) != len(fields):
            raise ValidationError(f"duplicate field names in schema for {name!r}")
        tid = TableId(table_id, name)
        self._by_id[table_id] = tid
        self._by_name[name] = tid
        self._schemas[table_id] = fields
        return tid

    def get(self, table_id: int) -> TableId | None:
        return self._by_id.get(table_id)

    def get_by_name(self, name: str) -> TableId | None:
        return self._by_name.get(name)

    def fields(self, table_id: int) -> tuple[str, ...]:
        return self._schemas[table_id]

    def __contains__(self, table_id: int) -> bool:
        return table_id in self._by_id

    def __iter__(self) -> Iterator[TableId]:
        return iter(sorted(self._by_id.values(), key=lambda t: t.id))

    def __len__(self) -> int:
        return len(self._by_id)


class PhoneticIndex:
    """Maps phonetic codes to postings over the live record set.

    Both codes of every field token are indexed; the secondary only when it
    differs from the primary. Matching across the two kinds is what lets a
    query word reach records spelled from the alternate pronunciation.
    """

    def __init__(self, registry: TableRegistry,
                 max_code_length: int | None = DEFAULT_MAX_CODE_LENGTH) -> None:
        self._registry = registry
        self._max_code_length = max_code_length
        self._code_ids: dict[str, int] = {}
        self._next_code_id = 0
        self._postings: dict[int, set[Posting]] = {}
        self._lock = threading.RLock()

    @property
    def registry(self) -> TableRegistry:
        return self._registry

    def _code_id(self, keycode: str) -> int:
        cid = self._code_ids.get(keycode)
        if cid is None:
            cid = self._next_code_id
            self._next_code_id += 1
            self._code_ids[keycode] = cid
            self._postings[cid] = set()
        return cid

    def _token_postings(
        self, fields: Iterable[str], pointer: DataPointer
    ) -> Iterator[tuple[str, Posting]]:
        """(keycode, posting) pairs a record's fields should be filed under."""
        for position, value in enumerate(fields):
            for word in tokenize(value):
                pair = encode(word, self._max_code_length)
                primary = pair.primary or SENTINEL_CODE
                yield primary, Posting(pointer, position, CodeKind.PRIMARY)
                secondary = pair.secondary or SENTINEL_CODE
                if secondary != primary:
                    yield secondary, Posting(pointer, position, CodeKind.SECONDARY)

    def index_record(self, fields: Iterable[str], pointer: DataPointer) -> int:
        """File every token of every field under its codes.

        Returns the number of postings newly added (repeated tokens in the
        same field collapse). Rejects pointers into unregistered tables.
        """
        if pointer.table_id not in self._registry:
            raise ValidationError(f"table id {pointer.table_id} is not registered")
        added = 0
        fields = tuple(fields)
        with self._lock:
            for keycode, posting in self._token_postings(fields, pointer):
                bucket = self._postings[self._code_id(keycode)]
                if posting not in bucket:
                    bucket.add(posting)
                    added += 1
        return added

    def deindex_record(self, fields: Iterable[str], pointer: DataPointer) -> int:
        """Remove the postings `fields` filed under `pointer`; idempotent.

        Code entries left empty are kept (ids stay stable for the life of
        the index). Returns the number of postings removed.
        """
        removed = 0
        fields = tuple(fields)
        with self._lock:
            for keycode, posting in self._token_postings(fields, pointer):
                cid = self._code_ids.get(keycode)
                if cid is None:
                    continue
                bucket = self._postings[cid]
                if posting in bucket:
                    bucket.discard(posting)
                    removed += 1
        return removed

    def lookup(self, keycode: str) -> PostingList | None:
        """All postings filed under exactly `keycode`; keyed access, cost
        independent of how many codes exist."""
        with self._lock:
            cid = self._code_ids.get(keycode)
            if cid is None:
                return None
            return PostingList(keycode, cid, frozenset(self._postings[cid]))

    def pointers_for(self, keycode: str) -> frozenset[DataPointer]:
        with self._lock:
            cid = self._code_ids.get(keycode)
            if cid is None:
                return frozenset()
            return frozenset(p.pointer for p in self._postings[cid])

    def rebuild(self, records: Iterable[tuple[DataPointer, tuple[str, ...]]]) -> int:
        """Drop everything and re-index the given live records."""
        with self._lock:
            self._code_ids.clear()
            self._postings.clear()
            self._next_code_id = 0
            total = 0
            for pointer, fields in records:
                total += self.index_record(fields, pointer)
            return total

    def entries(self) -> set[tuple[str, Posting]]:
        """Flat (keycode, posting) view, mainly for equivalence checks."""
        with self._lock:
            return {
                (keycode, posting)
                for keycode, cid in self._code_ids.items()
                for posting in self._postings[cid]
            }

    def code_count(self) -> int:
        with self._lock:
            return len(self._code_ids)

    def posting_count(self) -> int:
        with self._lock:
            return sum(len(b) for b in self._postings.values())
