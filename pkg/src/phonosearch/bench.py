"""Latency benchmark: indexed search versus a linear scan baseline.

Builds synthetic eight-field corpora of increasing size from the bundled
name and place pools, runs the same query mix through the indexed engine
and through a brute-force scanner, and reports wall-clock latency plus the
number of records each approach had to compare. The interesting output is
the shape: the linear scan grows with the corpus while the indexed path
only grows with its candidate sets.

Query mix: 70% selective (a name token plus a district), 20% broad (a
district alone), 10% misspelled variants (a dropped or swapped character)
to exercise the phonetic matching.

Latency is measured around the search call with the store warm and the
index built; build time is reported separately. Comparisons are counted as
records scored: the candidate set for the indexed engine, the corpus size
for the linear scan. The measurement loop is single-threaded to keep the
numbers clean.
"""

from __future__ import annotations

import csv
import gc
import random
import statistics
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from phonosearch import wordlists
from phonosearch.engine import RecordSearchEngine
from phonosearch.query import MatchWeights, score_fields
from phonosearch.phonetics import tokenize

__all__ = ["BenchResult", "CorpusSpec", "generate", "generate_queries",
           "run_benchmark", "write_csv", "write_gnuplot"]


@dataclass(frozen=True)
class CorpusSpec:
    """Deterministic corpus recipe: same (record_count, seed), same rows."""

    record_count: int
    seed: int = 42
    given_names: Sequence[str] = wordlists.GIVEN_NAMES
    surnames: Sequence[str] = wordlists.SURNAMES
    divisions: Sequence[str] = wordlists.DIVISIONS
    districts: Sequence[str] = wordlists.DISTRICTS
    upazilas: Sequence[str] = wordlists.UPAZILAS
    villages: Sequence[str] = wordlists.VILLAGES
    occupations: Sequence[str] = wordlists.OCCUPATIONS


def generate(spec: CorpusSpec) -> Iterator[tuple[str, ...]]:
    """Yield `record_count` pseudo-random rows in citizen field order."""
    if not all((spec.given_names, spec.surnames, spec.divisions, spec.districts,
                spec.upazilas, spec.villages, spec.occupations)):
        raise ValueError("all name pools must be non-empty")
    rng = random.Random(spec.seed)
    for _ in range(spec.record_count):
        yield (
            f"{rng.choice(spec.given_names)} {rng.choice(spec.surnames)}",
            rng.choice(spec.divisions),
            rng.choice(spec.districts),
            rng.choice(spec.upazilas),
            rng.choice(spec.villages),
            rng.choice(spec.villages),
            rng.choice(spec.occupations),
            "8801" + "".join(str(rng.randrange(10)) for _ in range(9)),
        )


def _misspell(word: str, rng: random.Random) -> str:
    """Drop or swap one character; the kind of typo the codes absorb."""
    if len(word) < 4:
        return word
    i = rng.randrange(1, len(word) - 1)
    if rng.random() < 0.5:
        return word[:i] + word[i + 1:]
    return word[:i] + word[i + 1] + word[i] + word[i + 2:]


def generate_queries(records: Sequence[tuple[str, ...]], count: int,
                     seed: int) -> list[str]:
    """The standard mix, drawn deterministically against real rows so
    selective queries actually have matches."""
    rng = random.Random(seed ^ 0x5EED)
    queries = []
    for _ in range(count):
        row = records[rng.randrange(len(records))]
        given = row[0].split()[0]
        district = row[2]
        kind = rng.random()
        if kind < 0.70:
            queries.append(f"{given} {district}")
        elif kind < 0.90:
            queries.append(district)
        else:
            queries.append(f"{_misspell(given, rng)} {_misspell(district, rng)}")
    return queries


@dataclass
class BenchResult:
    """Measurements for one corpus size."""

    size: int
    indexed_mean_us: float
    indexed_median_us: float
    indexed_p99_us: float
    linear_mean_us: float
    mean_candidates: float
    indexed_comparisons: list[int] = field(repr=False)
    linear_comparisons: int = 0
    build_seconds: float = 0.0
    results_match: bool = True


class _LinearScanner:
    """Θ(n) baseline: score every record, sort, truncate.

    Records are tokenized once up front; each query still touches the whole
    corpus, which is the point of the comparison.
    """

    def __init__(self, engine: RecordSearchEngine, weights: MatchWeights,
                 max_code_length: int | None) -> None:
        self._records = list(engine.store.iter_records())
        self._tokens = [
            [w for v in r.fields for w in tokenize(v)] for r in self._records
        ]
        self._weights = weights
        self._max_code_length = max_code_length

    def search(self, text: str, limit: int) -> list[tuple[object, int]]:
        from phonosearch.query import token_match_level

        query_tokens = tokenize(text)
        if not query_tokens:
            return []
        scored = []
        for record, words in zip(self._records, self._tokens):
            total = 0.0
            for q in query_tokens:
                best = 0.0
                for r in words:
                    level = token_match_level(q, r, self._weights, self._max_code_length)
                    if level > best:
                        best = level
                        if best >= self._weights.exact:
                            break
                total += best
            percent = int(round(100.0 * (total / len(query_tokens))))
            if percent >= 1:
                scored.append((percent, record.pointer))
        scored.sort(key=lambda s: (-s[0], s[1]))
        return [(ptr, pct) for pct, ptr in scored[:limit]]

    def __len__(self) -> int:
        return len(self._records)


def run_benchmark(sizes: Sequence[int], queries_per_size: int = 200,
                  seed: int = 42, linear_queries: int | None = None,
                  limit: int = 50, repetitions: int = 3) -> list[BenchResult]:
    """Measure every corpus size in `sizes` (ascending) and return results.

    All corpora are built and warmed first; the timed passes then
    interleave across sizes, repeated `repetitions` times with the
    quietest pass kept per size and GC parked, so a noisy scheduling epoch
    cannot skew one size against another. `linear_queries` caps how many
    of the queries are also timed through the scan baseline (it is two to
    three orders of magnitude slower); result equality is asserted on that
    subset.
    """
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if linear_queries is None:
        linear_queries = min(queries_per_size, 25)

    engines: list[RecordSearchEngine] = []
    tmpdirs: list[tempfile.TemporaryDirectory] = []
    per_size: list[dict] = []
    try:
        for size in sizes:
            spec = CorpusSpec(size, seed)
            records = list(generate(spec))
            queries = generate_queries(records, queries_per_size, seed)
            tmp = tempfile.TemporaryDirectory(prefix="phonosearch-bench-")
            tmpdirs.append(tmp)
            t0 = time.perf_counter()
            engine = RecordSearchEngine(tmp.name, fsync=False)
            for row in records:
                engine.insert(0, row)
            engine.searcher.warm()  # build the scoring cache off the clock
            build_seconds = time.perf_counter() - t0
            engines.append(engine)

            comparisons = []
            indexed_hits: list[list[tuple[object, int]]] = []
            for q in queries:  # warm-up pass, also records comparison counts
                rs = engine.search(q, limit=limit)
                comparisons.append(rs.scored_count)
                indexed_hits.append([(h.pointer, h.score_percent) for h in rs.hits])
            per_size.append({
                "size": size, "queries": queries, "build": build_seconds,
                "comparisons": comparisons, "hits": indexed_hits,
                "best": None,
            })

        gc.collect()
        gc.disable()
        try:
            for _ in range(repetitions):
                for engine, ps in zip(engines, per_size):
                    lat = []
                    for q in ps["queries"]:
                        start = time.perf_counter()
                        engine.search(q, limit=limit)
                        lat.append((time.perf_counter() - start) * 1e6)
                    if ps["best"] is None or statistics.fmean(lat) < statistics.fmean(ps["best"]):
                        ps["best"] = lat
        finally:
            gc.enable()

        results = []
        for engine, ps in zip(engines, per_size):
            scanner = _LinearScanner(engine, engine.searcher._weights,
                                     engine.searcher._max_code_length)
            linear_latencies = []
            match = True
            for q, expected in zip(ps["queries"][:linear_queries], ps["hits"]):
                start = time.perf_counter()
                got = scanner.search(q, limit)
                linear_latencies.append((time.perf_counter() - start) * 1e6)
                if got != expected:
                    match = False
            latencies = ps["best"]
            results.append(BenchResult(
                size=ps["size"],
                indexed_mean_us=statistics.fmean(latencies),
                indexed_median_us=statistics.median(latencies),
                indexed_p99_us=sorted(latencies)[max(0, int(len(latencies) * 0.99) - 1)],
                linear_mean_us=statistics.fmean(linear_latencies),
                mean_candidates=statistics.fmean(ps["comparisons"]),
                indexed_comparisons=ps["comparisons"],
                linear_comparisons=ps["size"],
                build_seconds=ps["build"],
                results_match=match,
            ))
        return results
    finally:
        for engine in engines:
            engine.close()
        for tmp in tmpdirs:
            tmp.cleanup()


def write_csv(results: Sequence[BenchResult], path: str | Path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["n", "indexed_mean_us", "linear_mean_us",
                         "indexed_comparisons", "linear_comparisons"])
        for r in results:
            writer.writerow([r.size, f"{r.indexed_mean_us:.1f}",
                             f"{r.linear_mean_us:.1f}",
                             f"{r.mean_candidates:.1f}", r.linear_comparisons])


def write_gnuplot(csv_path: str | Path, out_path: str | Path | None = None) -> Path:
    """Emit a gnuplot script plotting corpus size against search time."""
    csv_path = Path(csv_path)
    out_path = Path(out_path) if out_path else csv_path.with_suffix(".gnuplot")
    out_path.write_text(
        "set datafile separator ','\n"
        "set logscale xy\n"
        "set xlabel 'records'\n"
        "set ylabel 'mean search time (us)'\n"
        "set key left top\n"
        f"plot '{csv_path.name}' using 1:2 skip 1 with linespoints title 'indexed', \\\n"
        f"     '{csv_path.name}' using 1:3 skip 1 with linespoints title 'linear scan'\n",
        "utf-8",
    )
    return out_path
