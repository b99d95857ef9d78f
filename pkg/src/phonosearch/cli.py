"""Command line entry points.

    phonosearch encode <word>...
    phonosearch search "<text>" [--limit N] [--min-score S] [--data-dir DIR]
    phonosearch insert <value>... [--table citizen] [--data-dir DIR]
    phonosearch seed-demo [--records N] [--data-dir DIR] [--seed N]
    phonosearch serve [--bind HOST:PORT] [--data-dir DIR] [--token T]
    phonosearch bench --sizes 1000,10000,100000 --queries 200 --seed 42 \
        --out results.csv [--gnuplot]
"""

from __future__ import annotations

import argparse
import os
import sys

from phonosearch.engine import RecordSearchEngine
from phonosearch.phonetics import encode, normalize


def _add_data_dir(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data-dir", default=os.environ.get("DATA_DIR", "./data"),
                        help="record store directory (env DATA_DIR)")


def _open_engine(args: argparse.Namespace, fsync: bool = True) -> RecordSearchEngine:
    os.makedirs(args.data_dir, exist_ok=True)
    return RecordSearchEngine(args.data_dir, fsync=fsync)


def cmd_encode(args: argparse.Namespace) -> int:
    status = 0
    for raw in args.words:
        word = normalize(raw)
        if word is None:
            print(f"{raw}\t\t", file=sys.stderr)
            status = 1
            continue
        pair = encode(word, args.max_length)
        print(f"{word}\t{pair.primary}\t{pair.secondary}")
    return status


def cmd_search(args: argparse.Namespace) -> int:
    with _open_engine(args) as engine:
        result = engine.search(args.text, limit=args.limit, min_score=args.min_score)
        if result.no_searchable_terms:
            print("no searchable terms in query", file=sys.stderr)
            return 1
        print(f"{'Serial':>6}  {'Match %':>7}  {'Pointer':>12}  Matched Info")
        for i, hit in enumerate(result.hits, start=1):
            pointer = f"({hit.pointer.table_id},{hit.pointer.p_value})"
            print(f"{i:>6}  {hit.score_percent:>7}  {pointer:>12}  "
                  + ", ".join(hit.matched_record.fields))
        print(f"-- {len(result.hits)} hits, {result.scored_count} records scored")
    return 0


def cmd_insert(args: argparse.Namespace) -> int:
    with _open_engine(args) as engine:
        pointer = engine.insert(engine.table_id(args.table), args.values)
        print(f"inserted ({pointer.table_id}, {pointer.p_value})")
    return 0


def cmd_seed_demo(args: argparse.Namespace) -> int:
    """Load the nine demo rows (seven identical full matches plus two
    partial ones) and optionally a random corpus on top."""
    from phonosearch.bench import CorpusSpec, generate

    full = ("Abdullah", "Khulna", "Chandpur", "Haimchar", "Naikhong",
            "Gorea", "Employee", "8801700041114")
    partials = [
        ("Ibtihal", "Barisal", "Barisal", "Bakerganj", "Kabai",
         "Khalna", "Businessman", "8801700003148"),
        ("Ibtihal", "Barisal", "Patuakhali", "Kalapara", "Chakamaiya",
         "Khalna", "Teacher", "8801700012390"),
    ]
    with _open_engine(args, fsync=False) as engine:
        table = engine.table_id(args.table)
        for _ in range(7):
            engine.insert(table, full)
        for row in partials:
            engine.insert(table, row)
        for row in generate(CorpusSpec(args.records, args.seed)):
            engine.insert(table, row)
        print(f"seeded {engine.store.count(table)} records into {args.data_dir!r}; "
              f'try: phonosearch search "Abdullah khuln" --data-dir {args.data_dir}')
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from phonosearch.service import ApiConfig, create_app

    config = ApiConfig(bind_addr=args.bind, data_dir=args.data_dir,
                       api_token=args.token, default_limit=args.limit)
    os.makedirs(config.data_dir, exist_ok=True)
    engine = RecordSearchEngine(config.data_dir, default_limit=config.default_limit)
    app = create_app(engine, config)
    try:
        uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    finally:
        engine.close()
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    from phonosearch.bench import run_benchmark, write_csv, write_gnuplot

    sizes = [int(s) for s in args.sizes.split(",") if s]
    results = run_benchmark(sizes, queries_per_size=args.queries, seed=args.seed)
    write_csv(results, args.out)
    for r in results:
        print(f"n={r.size}: indexed {r.indexed_mean_us:.0f} us | linear "
              f"{r.linear_mean_us:.0f} us | candidates {r.mean_candidates:.0f} "
              f"| build {r.build_seconds:.1f} s | results match: {r.results_match}")
    print(f"wrote {args.out}")
    if args.gnuplot:
        print(f"wrote {write_gnuplot(args.out)}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="phonosearch",
        description="Misspelling-tolerant record search over Double Metaphone codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="print the phonetic codes of words")
    p.add_argument("words", nargs="+")
    p.add_argument("--max-length", type=int, default=4)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("search", help="query the record store")
    p.add_argument("text")
    p.add_argument("--limit", type=int, default=50)
    p.add_argument("--min-score", type=int, default=1)
    _add_data_dir(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("insert", help="insert one record")
    p.add_argument("values", nargs="+")
    p.add_argument("--table", default="citizen")
    _add_data_dir(p)
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("seed-demo", help="load demo rows plus a random corpus")
    p.add_argument("--records", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--table", default="citizen")
    _add_data_dir(p)
    p.set_defaults(func=cmd_seed_demo)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--bind", default=os.environ.get("BIND_ADDR", "127.0.0.1:8000"))
    p.add_argument("--token", default=os.environ.get("API_TOKEN") or None)
    p.add_argument("--limit", type=int,
                   default=int(os.environ.get("DEFAULT_LIMIT", "50")))
    _add_data_dir(p)
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("bench", help="measure indexed vs linear search latency")
    p.add_argument("--sizes", default="1000,10000,100000")
    p.add_argument("--queries", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", default="results.csv")
    p.add_argument("--gnuplot", action="store_true")
    p.set_defaults(func=cmd_bench)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
