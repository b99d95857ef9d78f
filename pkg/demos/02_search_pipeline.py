"""The full pipeline: store records, index them, search with a typo.

Run: python demos/02_search_pipeline.py
"""

import tempfile

from phonosearch.engine import RecordSearchEngine

ROWS = [
    ("Abdullah", "Khulna", "Chandpur", "Haimchar", "Naikhong", "Gorea", "Employee", "8801700041114"),
    ("Abdullah", "Khulna", "Chandpur", "Haimchar", "Naikhong", "Gorea", "Employee", "8801700041114"),
    ("Ibtihal", "Barisal", "Barisal", "Bakerganj", "Kabai", "Khalna", "Businessman", "8801700003148"),
    ("Rahim", "Rangpur", "Dinajpur", "Birganj", "Mohanpur", "Rampur", "Farmer", "8801700012345"),
]

with tempfile.TemporaryDirectory() as data_dir:
    engine = RecordSearchEngine(data_dir)
    for row in ROWS:
        pointer = engine.insert(0, row)
        print(f"stored {row[0]:9} under pointer ({pointer.table_id}, {pointer.p_value})")

    for query in ("Abdullah khuln", "Raheem Dinajpur", "8801700041114"):
        print(f"\nsearch: {query!r}")
        result = engine.search(query)
        if result.no_searchable_terms:
            print("  no searchable terms (digits have no pronunciation)")
            continue
        print(f"  scored only {result.scored_count} candidate record(s), "
              f"not the whole store")
        for i, hit in enumerate(result.hits, 1):
            print(f"  {i}. {hit.score_percent:3}%  ({hit.pointer.table_id},"
                  f"{hit.pointer.p_value})  {', '.join(hit.matched_record.fields[:3])}...")
    engine.close()
