"""Query pipeline: tokenize, gather candidates through the index, score,
rank.

A query never scans the record store. Each query token is encoded and its
codes looked up, and only the union of those posting lists is scored; that
domain reduction is what keeps search latency nearly flat as the corpus
grows. Scoring compares tokens at four confidence tiers: identical strings,
equal primary codes, one side's primary equal to the other's secondary,
and equal secondary codes. A record's match percentage is the mean over
query tokens of the best tier reached, times 100.

Multi-token queries are OR at the candidate stage and averaged at the
scoring stage, so a record matching one of two words still surfaces, at
half the score of a full match. Ties order by (table id, p value) so
results are reproducible run to run.

`score_fields()` is the single-record scorer. `Searcher.search()` evaluates
the same formula over all candidates at once: the scoring cache keeps, per
query token, the candidate rows grouped by tier (computed once and
memoized), and a query is then a handful of numpy scatter/gather passes
whose cost is linear in the candidate count with no per-query sort of the
candidate set.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from phonosearch.index import DataPointer, PhoneticIndex
from phonosearch.phonetics import DEFAULT_MAX_CODE_LENGTH, encode, index_codes, tokenize
from phonosearch.store import Record, RecordStore

__all__ = [
    "MatchWeights",
    "Query",
    "RankedHit",
    "ResultSet",
    "Searcher",
    "score_fields",
    "token_match_level",
]

DEFAULT_LIMIT = 50

# sort key packing: (100 - percent) in the high bits, row in the low 40,
# so ascending key order is (percent desc, pointer asc) and ranking needs
# no comparison sort of the full candidate set
_ROW_BITS = 40
_ROW_MASK = (1 << _ROW_BITS) - 1


@dataclass(frozen=True, slots=True)
class MatchWeights:
    """Per-tier token match levels, ordered by phonetic confidence.

    Configuration constants rather than literals so alternative formulas
    can be tried side by side.
    """

    exact: float = 1.00
    primary: float = 0.90
    cross: float = 0.75
    secondary: float = 0.60


@dataclass(frozen=True, slots=True)
class Query:
    """A parsed search request; `tokens` is always tokenize(raw_text)."""

    raw_text: str
    tokens: tuple[str, ...]
    limit: int = DEFAULT_LIMIT
    min_score: int = 1

    @classmethod
    def parse(cls, text: str, limit: int = DEFAULT_LIMIT, min_score: int = 1) -> "Query":
        return cls(text, tuple(tokenize(text)), limit, min_score)


class RankedHit(NamedTuple):
    """One result row: locator, match percentage, and a record snapshot."""

    pointer: DataPointer
    score_percent: int
    matched_record: Record


@dataclass(frozen=True, slots=True)
class ResultSet:
    """Ranked hits for one query, best first.

    `scored_count` is how many records were actually scored; it equals the
    candidate set size, never the corpus size.
    """

    query: Query
    hits: tuple[RankedHit, ...]
    no_searchable_terms: bool = False
    scored_count: int = 0

    @property
    def candidate_count(self) -> int:
        return self.scored_count


def token_match_level(query_word: str, record_word: str,
                      weights: MatchWeights = MatchWeights(),
                      max_code_length: int | None = DEFAULT_MAX_CODE_LENGTH) -> float:
    """Match level of one query token against one record token."""
    if query_word == record_word:
        return weights.exact
    q = encode(query_word, max_code_length)
    r = encode(record_word, max_code_length)
    if q.primary == r.primary:
        return weights.primary
    if q.primary == r.secondary or q.secondary == r.primary:
        return weights.cross
    if q.secondary == r.secondary:
        return weights.secondary
    return 0.0


def score_fields(query_tokens: Sequence[str], fields: Iterable[str],
                 weights: MatchWeights = MatchWeights(),
                 max_code_length: int | None = DEFAULT_MAX_CODE_LENGTH) -> int:
    """Match percentage of a record's fields against the query tokens.

    Per query token, the best level over all record tokens; the score is
    round(100 * mean). Deterministic.
    """
    if not query_tokens:
        return 0
    record_words = [w for value in fields for w in tokenize(value)]
    total = 0.0
    for q in query_tokens:
        best = 0.0
        for r in record_words:
            level = token_match_level(q, r, weights, max_code_length)
            if level > best:
                best = level
                if best >= weights.exact:
                    break
        total += best
    return int(round(100.0 * (total / len(query_tokens))))


@dataclass(slots=True)
class _TokenEntry:
    """Candidate rows of one query token, grouped by match tier.

    `rows` holds each matching row exactly once, strongest tier first and
    ascending within a tier; `slices` are (start, stop, tier_rank) runs
    into it. Ranks count from 1 (weakest tier) to 4 (exact match); rank 0
    means no match. `ranks` (and its prescaled ×5 twin, for the second
    query position) mirror the slice ranks element-wise so a whole token
    accumulates in one scatter-add.
    """

    rows: np.ndarray
    slices: tuple[tuple[int, int, int], ...]
    ranks: np.ndarray
    ranks5: np.ndarray


_EMPTY_ROWS = np.empty(0, dtype=np.int64)
_EMPTY_RANKS = np.empty(0, dtype=np.uint8)

# tier ranks, used as base-5 digits when combining multi-token scores
_RANK_SECONDARY = 1
_RANK_CROSS = 2
_RANK_PRIMARY = 3
_RANK_EXACT = 4
_LUT_MAX_TOKENS = 6  # 5^6 combos; longer queries take the float path


class _ScoringCache:
    """Inverted row buckets over the live records for batch scoring.

    Row order is (table id, p value) ascending, so the row index doubles as
    the ranking tie-break. Built once per index generation; per-token tier
    groupings are memoized on first use. The stamp/accumulator work buffers
    are per-thread, keeping concurrent searches independent.
    """

    def __init__(self, records: list[Record], weights: MatchWeights,
                 max_code_length: int | None) -> None:
        self.pointers: list[DataPointer] = [r.pointer for r in records]
        self.fields: list[tuple[str, ...]] = [r.fields for r in records]
        self.n_rows = len(records)
        self._weights = weights
        self._max_code_length = max_code_length
        exact: dict[str, list[int]] = {}
        primary: dict[str, list[int]] = {}
        secondary: dict[str, list[int]] = {}
        for row, record in enumerate(records):
            seen: set[tuple[int, str]] = set()
            for value in record.fields:
                for word in tokenize(value):
                    if (0, word) not in seen:
                        seen.add((0, word))
                        exact.setdefault(word, []).append(row)
                    pair = encode(word, max_code_length)
                    if (1, pair.primary) not in seen:
                        seen.add((1, pair.primary))
                        primary.setdefault(pair.primary, []).append(row)
                    if (2, pair.secondary) not in seen:
                        seen.add((2, pair.secondary))
                        secondary.setdefault(pair.secondary, []).append(row)
        self._exact = {k: np.asarray(v, dtype=np.int64) for k, v in exact.items()}
        self._primary = {k: np.asarray(v, dtype=np.int64) for k, v in primary.items()}
        self._secondary = {k: np.asarray(v, dtype=np.int64) for k, v in secondary.items()}
        self._tokens: dict[str, _TokenEntry] = {}
        self._tls = threading.local()

    def _buffers(self) -> tuple[np.ndarray, np.ndarray]:
        """Per-thread stamp (row de-dup) and combo accumulator arrays."""
        tls = self._tls
        if not hasattr(tls, "stamp"):
            tls.stamp = np.full(self.n_rows, -1, dtype=np.int32)
            tls.acc = np.zeros(self.n_rows, dtype=np.int16)
            tls.counter = 0
        return tls.stamp, tls.acc

    def _next_stamp(self) -> int:
        tls = self._tls
        if tls.counter >= 2**31 - 2:
            tls.stamp.fill(-1)
            tls.counter = 0
        tls.counter += 1
        return tls.counter

    def warm(self) -> None:
        """Precompute the tier grouping of every word in the records, so
        steady-state queries only pay lookups."""
        for word in list(self._exact):
            self.token_entry(word)

    def token_entry(self, word: str) -> _TokenEntry:
        entry = self._tokens.get(word)
        if entry is None:
            entry = self._merge_token(word)
            self._tokens[word] = entry
        return entry

    def _merge_token(self, word: str) -> _TokenEntry:
        """Group the rows matching `word` by their best tier.

        Buckets are visited strongest tier first; a stamp array keeps the
        first (strongest) assignment of each row, giving the per-record max
        without sorting anything.
        """
        pair = encode(word, self._max_code_length)
        buckets = (
            (self._exact.get(word), _RANK_EXACT),
            (self._primary.get(pair.primary), _RANK_PRIMARY),
            (self._secondary.get(pair.primary), _RANK_CROSS),
            (self._primary.get(pair.secondary), _RANK_CROSS),
            (self._secondary.get(pair.secondary), _RANK_SECONDARY),
        )
        stamp, _ = self._buffers()
        sid = self._next_stamp()
        by_rank: dict[int, list[np.ndarray]] = {}
        for rows, rank in buckets:
            if rows is None or not len(rows):
                continue
            fresh = rows[stamp[rows] != sid]
            if len(fresh):
                stamp[fresh] = sid
                by_rank.setdefault(rank, []).append(fresh)
        if not by_rank:
            return _TokenEntry(_EMPTY_ROWS, (), _EMPTY_RANKS, _EMPTY_RANKS)
        # one slice per rank, rows ascending within it, strongest rank
        # first: the concatenation is then already in ranking order for
        # single-token queries
        parts: list[np.ndarray] = []
        slices: list[tuple[int, int, int]] = []
        start = 0
        for rank in sorted(by_rank, reverse=True):
            chunk = by_rank[rank]
            merged = chunk[0] if len(chunk) == 1 else np.sort(np.concatenate(chunk))
            parts.append(merged)
            slices.append((start, start + len(merged), rank))
            start += len(merged)
        rows = np.concatenate(parts)
        ranks = np.empty(len(rows), dtype=np.uint8)
        for a, b, rank in slices:
            ranks[a:b] = rank
        return _TokenEntry(rows, tuple(slices), ranks, ranks * np.uint8(5))


class Searcher:
    """Evaluates queries over a store + index pair.

    Read-only; any number of searches may run concurrently. The scoring
    cache is invalidated by bumping `version` (the engine does this under
    its mutation lock on every write).
    """

    def __init__(self, store: RecordStore, index: PhoneticIndex,
                 weights: MatchWeights = MatchWeights(),
                 max_code_length: int | None = DEFAULT_MAX_CODE_LENGTH,
                 mutation_lock: threading.RLock | None = None) -> None:
        self._store = store
        self._index = index
        self._weights = weights
        self._tier_weights = (0.0, weights.secondary, weights.cross,
                              weights.primary, weights.exact)
        self._luts: dict[tuple[int, ...], np.ndarray] = {}
        self._max_code_length = max_code_length
        self._lock = mutation_lock or threading.RLock()
        self._cache: _ScoringCache | None = None
        self._cache_version = -1
        self.version = 0

    def _lut(self, order: tuple[int, ...]) -> np.ndarray:
        """Sort-key high bits for every base-5 combination of tier ranks.

        `order[j]` names the query token whose rank occupies digit j. Each
        entry is (100 - percent) << row bits, where the percentage sums the
        tier weights in original token order with the same float expression
        as `score_fields`, so the table path and the scalar scorer agree
        bit for bit.
        """
        lut = self._luts.get(order)
        if lut is None:
            k = len(order)
            tw = self._tier_weights
            position_of = {token: j for j, token in enumerate(order)}
            lut = np.empty(5 ** k, dtype=np.int64)
            for combo in range(5 ** k):
                digits = []
                c = combo
                for _ in range(k):
                    digits.append(c % 5)
                    c //= 5
                total = 0.0
                for token in range(k):
                    total += tw[digits[position_of[token]]]
                pct = int(round(100.0 * (total / k)))
                lut[combo] = (100 - pct) << _ROW_BITS
            self._luts[order] = lut
        return lut

    def invalidate(self) -> None:
        self.version += 1

    def _current_cache(self) -> _ScoringCache:
        cache = self._cache
        if cache is None or self._cache_version != self.version:
            with self._lock:
                if self._cache is None or self._cache_version != self.version:
                    records = list(self._store.iter_records())
                    self._cache = _ScoringCache(records, self._weights,
                                                self._max_code_length)
                    self._cache_version = self.version
                cache = self._cache
        return cache

    def warm(self) -> None:
        """Build the scoring cache ahead of the first query."""
        self._current_cache().warm()

    def candidates(self, query: Query) -> frozenset[DataPointer]:
        """Union of the posting lists of every query token's codes.

        Contains every record any token phonetically matches; empty for a
        token-less query.
        """
        pointers: set[DataPointer] = set()
        for word in query.tokens:
            for code in index_codes(word, self._max_code_length):
                pointers |= self._index.pointers_for(code)
        return frozenset(pointers)

    def score(self, query: Query, record: Record) -> int:
        """Match percentage of one record against the query."""
        return score_fields(query.tokens, record.fields, self._weights,
                            self._max_code_length)

    def search(self, query: Query) -> ResultSet:
        """Score every candidate, keep those at or above min_score, rank."""
        if not query.tokens:
            return ResultSet(query, (), no_searchable_terms=True)
        cache = self._current_cache()
        entries = [cache.token_entry(w) for w in query.tokens]
        k = len(entries)
        min_score = max(query.min_score, 1)

        if k == 1:
            # single token: slices are already in ranking order (tier rank
            # descending, rows ascending), so the top of the ranking is just
            # their prefix; no scoring pass at all
            entry = entries[0]
            tw = self._tier_weights
            packed: list[int] = []
            for a, b, rank in entry.slices:
                pct = int(round(100.0 * (tw[rank] / k)))
                if pct < min_score:
                    break  # ranks only get weaker from here
                take = entry.rows[a:min(b, a + query.limit - len(packed))]
                hi = (100 - pct) << _ROW_BITS
                packed.extend((hi | row for row in take.tolist()))
                if len(packed) >= query.limit:
                    break
            return ResultSet(query, self._assemble(cache, packed),
                             scored_count=len(entry.rows))
        elif k <= _LUT_MAX_TOKENS:
            key, scored = self._combine_lut(cache, entries, k)
            if key is None:
                return ResultSet(query, ())
        else:
            key, scored = self._combine_float(cache, entries, k)
            if key is None:
                return ResultSet(query, ())
        if k > 1 and min_score > 1:
            # key order is (percent desc, row asc), so a score floor is a
            # prefix of the key space
            key = key[key < ((101 - min_score) << _ROW_BITS)]

        if len(key) > query.limit:
            top = np.partition(key, query.limit - 1)[:query.limit]
            top.sort()
        else:
            top = np.sort(key)
        return ResultSet(query, self._assemble(cache, top.tolist()),
                         scored_count=scored)

    def _assemble(self, cache: _ScoringCache, packed_keys: list[int]) -> tuple[RankedHit, ...]:
        """Decode packed (percent, row) keys into hits with snapshots.

        While no mutation has happened since the cache was built, field
        values come straight from the cache; otherwise (or when a write
        lands mid-assembly) each hit is re-read from the store so a dead
        pointer is never handed out.
        """
        pointers = cache.pointers
        if self.version == self._cache_version:
            fields_list = cache.fields
            hits = []
            for packed in packed_keys:
                row = packed & _ROW_MASK
                pointer = pointers[row]
                hits.append(RankedHit(pointer, 100 - (packed >> _ROW_BITS),
                                      Record(pointer, fields_list[row])))
            if self.version == self._cache_version:  # no write raced us
                return tuple(hits)
        fields_at = self._store.fields_at
        hits = []
        for packed in packed_keys:
            pointer = pointers[packed & _ROW_MASK]
            fields = fields_at(pointer)
            if fields is None:  # racing delete; never hand out a dead hit
                continue
            hits.append(RankedHit(pointer, 100 - (packed >> _ROW_BITS),
                                  Record(pointer, fields)))
        return tuple(hits)

    def _combine_lut(self, cache: _ScoringCache, entries: list[_TokenEntry],
                     k: int) -> tuple[np.ndarray | None, int]:
        """Multi-token scoring on integer tier ranks.

        Each token contributes one base-5 digit per candidate row; the
        packed combination indexes a per-k table of precomputed sort keys.
        The stamp array deduplicates rows across tokens: the first token's
        rows are fresh by construction and the last token's stamps are
        never read, so those passes are skipped.
        """
        stamp, acc = cache._buffers()
        sid = cache._next_stamp()
        # biggest bucket first: the first token processed skips the
        # dedupe test (everything is fresh) and the last skips the stamp
        # write (nothing reads it), so the passes land on the small buckets
        order = tuple(sorted(range(k), key=lambda i: -len(entries[i].rows)))
        parts = []
        for j, i in enumerate(order):
            entry = entries[i]
            rows = entry.rows
            if not len(rows):
                continue
            fresh = rows if not parts else rows[stamp[rows] != sid]
            if len(fresh):
                if j < k - 1:
                    stamp[fresh] = sid
                parts.append(fresh)
            if j == 0:
                acc[rows] = entry.ranks  # accumulator is clean between queries
            elif j == 1:
                acc[rows] += entry.ranks5
            else:
                acc[rows] += entry.ranks.astype(np.int16) * (5 ** j)
        if not parts:
            return None, 0
        cand = np.concatenate(parts) if len(parts) > 1 else parts[0]
        combos = acc[cand]
        acc[cand] = 0  # cand covers every touched row; one reset pass
        key = self._lut(order)[combos] | cand
        return key, len(cand)

    def _combine_float(self, cache: _ScoringCache, entries: list[_TokenEntry],
                       k: int) -> tuple[np.ndarray | None, int]:
        """Fallback for long queries: accumulate float levels per row,
        exactly as `score_fields` does."""
        stamp, _ = cache._buffers()
        tls = cache._tls
        if not hasattr(tls, "facc"):
            tls.facc = np.zeros(cache.n_rows, dtype=np.float64)
        facc = tls.facc
        sid = cache._next_stamp()
        tw = self._tier_weights
        parts = []
        for entry in entries:
            rows = entry.rows
            if not len(rows):
                continue
            fresh = rows[stamp[rows] != sid]
            if len(fresh):
                stamp[fresh] = sid
                parts.append(fresh)
            for a, b, rank in entry.slices:
                facc[rows[a:b]] += tw[rank]
        if not parts:
            return None, 0
        cand = np.concatenate(parts) if len(parts) > 1 else parts[0]
        sums = facc[cand]
        for entry in entries:
            if len(entry.rows):
                facc[entry.rows] = 0.0
        percent = np.rint(100.0 * (sums / k)).astype(np.int64)
        key = ((100 - percent) << _ROW_BITS) | cand
        return key, len(cand)
