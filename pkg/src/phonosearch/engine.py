"""Facade tying the record store, the phonetic index and the searcher
together under a single mutation lock.

Every write mutates store and index together while holding the lock, so a
reader can never see a record without its postings or postings without
their record. Searches are read-only and do not take the lock (except to
rebuild the scoring cache after a write). The index is rebuilt from the
store on open.

Table definitions persist in `<data_dir>/catalog.json` so a reopened
engine sees the same schemas.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Iterable

from phonosearch.errors import NotFoundError, StorageError
from phonosearch.index import DataPointer, PhoneticIndex, TableId, TableRegistry
from phonosearch.phonetics import DEFAULT_MAX_CODE_LENGTH
from phonosearch.query import (
    DEFAULT_LIMIT,
    MatchWeights,
    Query,
    ResultSet,
    Searcher,
)
from phonosearch.store import Record, RecordStore
from phonosearch.wordlists import CITIZEN_FIELDS

__all__ = ["CITIZEN_TABLE", "RecordSearchEngine"]

CITIZEN_TABLE = "citizen"
_CATALOG_FILE = "catalog.json"


class RecordSearchEngine:
    """Open a data directory and serve inserts, lookups and searches.

    With `create_default_table` (the default) a fresh directory starts with
    the eight-field `citizen` table under id 0.
    """

    def __init__(self, data_dir: str, *, fsync: bool = True,
                 max_code_length: int | None = DEFAULT_MAX_CODE_LENGTH,
                 weights: MatchWeights | None = None,
                 default_limit: int = DEFAULT_LIMIT,
                 create_default_table: bool = True) -> None:
        self.data_dir = Path(data_dir)
        self.default_limit = default_limit
        self._lock = threading.RLock()
        self._max_code_length = max_code_length
        self.registry = TableRegistry()

        catalog = self.data_dir / _CATALOG_FILE
        if catalog.exists():
            try:
                entries = json.loads(catalog.read_text("utf-8"))
            except (OSError, ValueError) as exc:
                raise StorageError(f"cannot read {catalog}: {exc}") from exc
            for entry in entries:
                self.registry.register(entry["name"], entry["id"], entry["fields"])
        elif create_default_table:
            self.registry.register(CITIZEN_TABLE, 0, CITIZEN_FIELDS)

        self.store = RecordStore(self.data_dir, self.registry, fsync=fsync)
        self.index = PhoneticIndex(self.registry, max_code_length)
        self.searcher = Searcher(self.store, self.index,
                                 weights or MatchWeights(), max_code_length,
                                 mutation_lock=self._lock)
        self.index.rebuild((r.pointer, r.fields) for r in self.store.iter_records())
        if not catalog.exists():
            self._save_catalog()

    # -- schema ----------------------------------------------------------

    def _save_catalog(self) -> None:
        entries = [
            {"id": t.id, "name": t.name, "fields": list(self.registry.fields(t.id))}
            for t in self.registry
        ]
        path = self.data_dir / _CATALOG_FILE
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(entries, indent=2), "utf-8")
        tmp.replace(path)

    def register_table(self, name: str, table_id: int,
                       field_names: Iterable[str]) -> TableId:
        with self._lock:
            tid = self.registry.register(name, table_id, field_names)
            self.store.attach_table(table_id)
            self._save_catalog()
            return tid

    def table_id(self, name: str) -> int:
        table = self.registry.get_by_name(name)
        if table is None:
            raise NotFoundError(f"no such table {name!r}")
        return table.id

    # -- mutations: store and index move together -------------------------

    def insert(self, table_id: int, values: Iterable[str]) -> DataPointer:
        with self._lock:
            pointer = self.store.insert(table_id, tuple(values))
            record = self.store.retrieve(pointer)
            assert record is not None
            self.index.index_record(record.fields, pointer)
            self.searcher.invalidate()
            return pointer

    def update(self, pointer: DataPointer, values: Iterable[str]) -> Record:
        with self._lock:
            old = self.store.retrieve(pointer)
            if old is None:
                raise NotFoundError(f"no live record at {pointer}")
            self.index.deindex_record(old.fields, pointer)
            record = self.store.update(pointer, tuple(values))
            self.index.index_record(record.fields, pointer)
            self.searcher.invalidate()
            return record

    def delete(self, pointer: DataPointer) -> bool:
        with self._lock:
            old = self.store.retrieve(pointer)
            if old is None:
                return False
            self.store.delete(pointer)
            self.index.deindex_record(old.fields, pointer)
            self.searcher.invalidate()
            return True

    # -- reads -------------------------------------------------------------

    def retrieve(self, pointer: DataPointer) -> Record | None:
        return self.store.retrieve(pointer)

    def search(self, text: str, limit: int | None = None, min_score: int = 1) -> ResultSet:
        query = Query.parse(text, limit or self.default_limit, min_score)
        return self.searcher.search(query)

    def candidates(self, text: str) -> frozenset[DataPointer]:
        return self.searcher.candidates(Query.parse(text))

    def close(self) -> None:
        self.store.close()

    def __enter__(self) -> "RecordSearchEngine":
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()
