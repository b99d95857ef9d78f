import random

import pytest

from phonosearch.errors import DuplicateTableError, ValidationError
from phonosearch.index import (
    CodeKind,
    DataPointer,
    PhoneticIndex,
    Posting,
    TableRegistry,
)
from phonosearch.phonetics import encode
from phonosearch.wordlists import CITIZEN_FIELDS
from conftest import random_row
import oracles


@pytest.fixture
def registry():
    reg = TableRegistry()
    reg.register("citizen", 0, CITIZEN_FIELDS)
    return reg


@pytest.fixture
def index(registry):
    return PhoneticIndex(registry)


class TestRegistry:
    def test_register(self, registry):
        table = registry.get(0)
        assert table is not None and table.name == "citizen" and table.id == 0

    def test_duplicate_id_rejected(self, registry):
        with pytest.raises(DuplicateTableError):
            registry.register("citizen2", 0, ("a",))

    def test_duplicate_name_rejected(self, registry):
        with pytest.raises(DuplicateTableError):
            registry.register("citizen", 1, ("a",))

    def test_next_free_id(self, registry):
        table = registry.register("admin", 1, ("user", "role"))
        assert table.id == 1
        assert registry.fields(1) == ("user", "role")

    def test_bad_schemas_rejected(self, registry):
        with pytest.raises(ValidationError):
            registry.register("empty", 2, ())
        with pytest.raises(ValidationError):
            registry.register("dup", 3, ("a", "a"))


class TestIndexRecord:
    def test_posting_for_every_field_token(self, index):
        fields = ("Abdullah", "Khulna")
        pointer = DataPointer(0, 7)
        added = index.index_record(fields, pointer)
        assert added > 0
        plist = index.lookup(encode("ABDULLAH").primary)
        assert plist is not None
        assert Posting(pointer, 0, CodeKind.PRIMARY) in plist.postings

    def test_empty_record_adds_nothing(self, index):
        assert index.index_record(("", "", ""), DataPointer(0, 1)) == 0

    def test_unregistered_table_rejected(self, index):
        with pytest.raises(ValidationError):
            index.index_record(("x",), DataPointer(9, 1))

    def test_secondary_code_indexed_when_different(self, index):
        pointer = DataPointer(0, 1)
        index.index_record(("Smith",), pointer)
        primary = index.lookup("SM0")
        secondary = index.lookup("XMT")
        assert Posting(pointer, 0, CodeKind.PRIMARY) in primary.postings
        assert Posting(pointer, 0, CodeKind.SECONDARY) in secondary.postings

    def test_duplicate_tokens_collapse(self, index):
        once = index.index_record(("Khulna",), DataPointer(0, 1))
        twice = index.index_record(("Khulna Khulna",), DataPointer(0, 2))
        assert once == twice

    def test_matches_bruteforce_on_random_corpus(self, index):
        rng = random.Random(501)
        records = []
        for p in range(1, 501):
            pointer = DataPointer(0, p)
            fields = tuple(random_row(rng))
            records.append((pointer, fields))
            index.index_record(fields, pointer)
        expected = oracles.index_entries(
            type("R", (), {"pointer": p, "fields": f})() for p, f in records
        )
        got = {(code, post.pointer, post.field_position, post.code_kind)
               for code, post in index.entries()}
        assert got == expected


class TestDeindexRecord:
    def test_roundtrip_restores_prior_state(self, index):
        fields = ("Abdullah", "Khulna", "Employee")
        before = index.entries()
        index.index_record(fields, DataPointer(0, 5))
        removed = index.deindex_record(fields, DataPointer(0, 5))
        assert removed > 0
        assert index.entries() == before

    def test_never_indexed_is_noop(self, index):
        assert index.deindex_record(("Ghost",), DataPointer(0, 99)) == 0

    def test_idempotent(self, index):
        fields = ("Rahim",)
        index.index_record(fields, DataPointer(0, 1))
        index.deindex_record(fields, DataPointer(0, 1))
        assert index.deindex_record(fields, DataPointer(0, 1)) == 0

    def test_random_interleavings_match_rebuild(self, index):
        rng = random.Random(77)
        live: dict[int, tuple[str, ...]] = {}
        next_p = 1
        for _ in range(600):
            op = rng.random()
            if op < 0.6 or not live:
                fields = tuple(random_row(rng))
                index.index_record(fields, DataPointer(0, next_p))
                live[next_p] = fields
                next_p += 1
            else:
                p = rng.choice(list(live))
                index.deindex_record(live.pop(p), DataPointer(0, p))
        scratch = PhoneticIndex(index.registry)
        scratch.rebuild((DataPointer(0, p), f) for p, f in sorted(live.items()))
        assert index.entries() == scratch.entries()
        index_pointers = {post.pointer for _, post in index.entries()}
        assert index_pointers <= {DataPointer(0, p) for p in live}


class TestLookup:
    def test_lookup_after_indexing(self, index):
        index.index_record(("Smith",), DataPointer(0, 1))
        assert index.lookup(encode("SMITH").primary) is not None

    def test_unknown_code_empty(self, index):
        assert index.lookup("QQQQ") is None
        assert index.pointers_for("QQQQ") == frozenset()

    def test_khuln_class_code_finds_khulna_records(self, index):
        rng = random.Random(9)
        in_khulna = set()
        for p in range(1, 80):
            fields = tuple(random_row(rng))
            index.index_record(fields, DataPointer(0, p))
            if "Khulna" in fields[2]:
                in_khulna.add(DataPointer(0, p))
        hits = index.pointers_for(encode("KHULN").primary)
        assert in_khulna <= hits

    def test_code_ids_dense_and_stable(self, index):
        index.index_record(("Smith",), DataPointer(0, 1))
        cid = index.lookup("SM0").code_id
        index.index_record(("Schmidt Jones Baker",), DataPointer(0, 2))
        assert index.lookup("SM0").code_id == cid
