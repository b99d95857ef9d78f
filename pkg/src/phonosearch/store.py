"""Durable record storage addressed by data pointers.

One append-only operation log per table, compacted on open into an
in-memory map, so retrieval by pointer is a keyed get and durability costs
one append. Primary key values come from a per-table monotonic counter and
are never reused after delete; stale pointers must never resolve to a
different row.

On-disk layout (normative, so independent implementations can share a data
directory): `<data_dir>/<table_name>.log`, each entry framed as

    1 byte   op tag (1=insert, 2=update, 3=delete)
    8 bytes  p_value, little-endian unsigned
    4 bytes  payload length, little-endian unsigned
    N bytes  payload: field values joined with 0x1F unit separators, UTF-8

Delete entries carry an empty payload. A torn final entry (crash mid-write)
is discarded and truncated away on open.
"""

from __future__ import annotations

import os
import struct
from pathlib import Path
from typing import BinaryIO, Iterator, NamedTuple

from phonosearch.errors import NotFoundError, StorageError, ValidationError
from phonosearch.index import DataPointer, TableRegistry

__all__ = ["OP_DELETE", "OP_INSERT", "OP_UPDATE", "Record", "RecordStore"]

OP_INSERT = 1
OP_UPDATE = 2
OP_DELETE = 3

_HEADER = struct.Struct("<BQI")
_FIELD_SEP = "\x1f"


class Record(NamedTuple):
    """A live row snapshot."""

    pointer: DataPointer
    fields: tuple[str, ...]


def pack_entry(op: int, p_value: int, fields: tuple[str, ...] = ()) -> bytes:
    payload = _FIELD_SEP.join(fields).encode("utf-8") if fields else b""
    return _HEADER.pack(op, p_value, len(payload)) + payload


def iter_entries(fh: BinaryIO) -> Iterator[tuple[int, int, tuple[str, ...], int]]:
    """Yield (op, p_value, fields, end_offset); stops at a torn tail."""
    offset = 0
    while True:
        header = fh.read(_HEADER.size)
        if len(header) < _HEADER.size:
            return
        op, p_value, length = _HEADER.unpack(header)
        payload = fh.read(length)
        if len(payload) < length:
            return
        offset += _HEADER.size + length
        text = payload.decode("utf-8")
        fields = tuple(text.split(_FIELD_SEP)) if payload else ()
        yield op, p_value, fields, offset


class _TableLog:
    """Log file plus compacted in-memory state for one table."""

    def __init__(self, path: Path) -> None:
        self.path = path
        self.records: dict[int, tuple[str, ...]] = {}
        self.next_p = 1
        self._fh: BinaryIO | None = None
        self._replay()

    def _replay(self) -> None:
        good = 0
        if self.path.exists():
            with open(self.path, "rb") as fh:
                for op, p_value, fields, end in iter_entries(fh):
                    good = end
                    if op == OP_INSERT or op == OP_UPDATE:
                        self.records[p_value] = fields
                    elif op == OP_DELETE:
                        self.records.pop(p_value, None)
                    self.next_p = max(self.next_p, p_value + 1)
            if good < self.path.stat().st_size:
                # crash left a partial entry; drop it before appending
                with open(self.path, "r+b") as fh:
                    fh.truncate(good)
        self._fh = open(self.path, "ab")

    def append(self, op: int, p_value: int, fields: tuple[str, ...], fsync: bool) -> None:
        assert self._fh is not None
        try:
            self._fh.write(pack_entry(op, p_value, fields))
            self._fh.flush()
            if fsync:
                os.fsync(self._fh.fileno())
        except OSError as exc:
            raise StorageError(f"append to {self.path} failed: {exc}") from exc

    def close(self) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None


class RecordStore:
    """Rows for every registered table, durable before any call returns.

    `fsync=False` trades crash durability for write speed; benchmarks and
    bulk loads use it, the service default keeps it on.
    """

    def __init__(self, data_dir: str | os.PathLike, registry: TableRegistry,
                 fsync: bool = True) -> None:
        self.data_dir = Path(data_dir)
        if not self.data_dir.is_dir():
            raise StorageError(f"data directory {self.data_dir} does not exist")
        self._registry = registry
        self._fsync = fsync
        self._logs: dict[int, _TableLog] = {}
        for table in registry:
            self._open_table(table.id, table.name)

    def _open_table(self, table_id: int, name: str) -> None:
        self._logs[table_id] = _TableLog(self.data_dir / f"{name}.log")

    def attach_table(self, table_id: int) -> None:
        """Open the log of a table registered after the store was built."""
        table = self._registry.get(table_id)
        if table is None:
            raise ValidationError(f"table id {table_id} is not registered")
        if table_id not in self._logs:
            self._open_table(table.id, table.name)

    def _log(self, table_id: int) -> _TableLog:
        log = self._logs.get(table_id)
        if log is None:
            raise NotFoundError(f"no such table id {table_id}")
        return log

    def _check_values(self, table_id: int, values: tuple[str, ...]) -> None:
        expected = len(self._registry.fields(table_id))
        if len(values) != expected:
            raise ValidationError(
                f"expected {expected} field values, got {len(values)}")
        for v in values:
            if _FIELD_SEP in v:
                raise ValidationError("field values must not contain the 0x1F separator")

    def insert(self, table_id: int, values: tuple[str, ...] | list[str]) -> DataPointer:
        values = tuple(values)
        if table_id not in self._registry:
            raise NotFoundError(f"no such table id {table_id}")
        self._check_values(table_id, values)
        log = self._log(table_id)
        p_value = log.next_p
        log.append(OP_INSERT, p_value, values, self._fsync)
        log.records[p_value] = values
        log.next_p = p_value + 1
        return DataPointer(table_id, p_value)

    def retrieve(self, pointer: DataPointer) -> Record | None:
        log = self._logs.get(pointer.table_id)
        if log is None:
            return None
        fields = log.records.get(pointer.p_value)
        if fields is None:
            return None
        return Record(pointer, fields)

    def fields_at(self, pointer: DataPointer) -> tuple[str, ...] | None:
        """Field values at `pointer`, or None; the cheap form of retrieve."""
        log = self._logs.get(pointer.table_id)
        if log is None:
            return None
        return log.records.get(pointer.p_value)

    def update(self, pointer: DataPointer, values: tuple[str, ...] | list[str]) -> Record:
        values = tuple(values)
        log = self._logs.get(pointer.table_id)
        if log is None or pointer.p_value not in log.records:
            raise NotFoundError(f"no live record at {pointer}")
        self._check_values(pointer.table_id, values)
        log.append(OP_UPDATE, pointer.p_value, values, self._fsync)
        log.records[pointer.p_value] = values
        return Record(pointer, values)

    def delete(self, pointer: DataPointer) -> bool:
        """Remove the record; a no-op (False) when already gone."""
        log = self._logs.get(pointer.table_id)
        if log is None or pointer.p_value not in log.records:
            return False
        log.append(OP_DELETE, pointer.p_value, (), self._fsync)
        del log.records[pointer.p_value]
        return True

    def iter_records(self, table_id: int | None = None) -> Iterator[Record]:
        """Live records, pointer order, one table or all of them."""
        ids = [table_id] if table_id is not None else sorted(self._logs)
        for tid in ids:
            log = self._logs.get(tid)
            if log is None:
                continue
            for p_value in sorted(log.records):
                yield Record(DataPointer(tid, p_value), log.records[p_value])

    def count(self, table_id: int | None = None) -> int:
        if table_id is not None:
            return len(self._log(table_id).records)
        return sum(len(log.records) for log in self._logs.values())

    def close(self) -> None:
        for log in self._logs.values():
            log.close()

    def __enter__(self) -> "RecordStore":
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()
